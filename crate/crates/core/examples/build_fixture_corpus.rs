//! Regenerates the synthetic fixture corpus under `fixtures/corpus/`.
//!
//! Every song has the shape verse(3) / chorus(4) / verse(3) / chorus(4) /
//! bridge(2), where the chorus is `Ra Rb Ra Rc` and both choruses are
//! identical. Each song yields two pairs:
//!
//! - singable: line-by-line translations drawn from a parallel bank, keeping
//!   the chorus repetition;
//! - non-singable: the same translations padded with prose fillers and
//!   scattered across sections, so line lengths and repetition no longer
//!   follow the source.
//!
//! ```text
//! cargo run --example build_fixture_corpus [-- OUT_DIR]
//! ```

use std::path::PathBuf;

use lyreval::corpus::{CorpusManifest, ManifestEntry};
use lyreval::{Language, Line, LyricsDocument, Section, SongMetadata};

/// `(EN, JA, JA gloss, KO, KO gloss)`
type Entry = (&'static str, &'static str, &'static str, &'static str, &'static str);

const VERSES: [Entry; 16] = [
    (
        "Walking home beneath the evening sky",
        "くれるそらのしたで",
        "Under the darkening sky",
        "노을 진 하늘 아래 걸어가",
        "Walking under the glowing sky",
    ),
    (
        "Every window glowing warm and bright",
        "まどのひがあたたかい",
        "The window light is warm",
        "창문마다 따스한 불빛",
        "Warm light in every window",
    ),
    (
        "I remember how you used to smile",
        "きみのえがおうかぶ",
        "Your smile comes to mind",
        "너의 미소가 떠올라",
        "Your smile comes back to me",
    ),
    (
        "Footsteps fading on the frozen ground",
        "こおるみちのあしおと",
        "Footsteps on the frozen road",
        "얼어붙은 길 위 발소리",
        "Footsteps on the frozen road",
    ),
    (
        "Morning trains are running through the rain",
        "あめのなかのでんしゃ",
        "The train in the rain",
        "아침 기차가 빗속을 달려",
        "The morning train runs through the rain",
    ),
    (
        "Letters I never sent to you",
        "だせないてがみたち",
        "Letters I could not send",
        "보내지 못한 편지들",
        "Letters I could not send",
    ),
    (
        "Summer fireworks above the bay",
        "なつのうみのはなび",
        "Fireworks over the summer sea",
        "바다 위로 여름 불꽃",
        "Summer fireworks over the sea",
    ),
    (
        "Holding on to what we had",
        "ひびをだきしめて",
        "Holding the days close",
        "우리의 날들을 안고서",
        "Holding on to our days",
    ),
    (
        "Counting stars until the break of day",
        "よあけまでほしをみる",
        "Watching stars until dawn",
        "새벽까지 별을 세어",
        "Counting stars until dawn",
    ),
    (
        "Cherry petals falling on the road",
        "さくらがみちにまう",
        "Cherry blossoms dance on the road",
        "길 위에 벚꽃잎이 져",
        "Cherry petals fall on the road",
    ),
    (
        "Quiet voices calling out your name",
        "しずかにきみをよぶ",
        "Quietly calling you",
        "조용히 너의 이름을 불러",
        "Quietly calling your name",
    ),
    (
        "Paper boats are drifting down the stream",
        "かみのふねながれる",
        "Paper boats drift along",
        "종이배가 강물에 떠가",
        "Paper boats float on the river",
    ),
    (
        "Waiting by the station in the snow",
        "ゆきのえきでまつよ",
        "I'll wait at the snowy station",
        "눈 내리는 역에서 기다려",
        "Waiting at the station in the snow",
    ),
    (
        "Someday we will find our way",
        "いつかみちはみえる",
        "Someday the way will appear",
        "언젠가 길을 찾겠지",
        "Someday we will find the way",
    ),
    (
        "Candle light is flickering alone",
        "ろうそくがゆれてる",
        "The candle is flickering",
        "촛불 하나 홀로 흔들려",
        "A single candle flickers alone",
    ),
    (
        "Open up the door and let me in",
        "とびらあけていれて",
        "Open the door, let me in",
        "문을 열고 들여보내 줘",
        "Open the door and let me in",
    ),
];

const REFRAINS: [Entry; 8] = [
    (
        "Sing it loud, sing it loud tonight",
        "うたおう うたおうよ",
        "Let's sing, let's sing together",
        "노래해 노래해 오늘 밤",
        "Sing, sing tonight",
    ),
    (
        "Shine on, shine on, shine on me",
        "ひかれ ひかれ いま",
        "Shine, shine now",
        "빛나라 빛나라 나에게",
        "Shine, shine on me",
    ),
    (
        "La la la, the night is young",
        "ららら よるはまだ",
        "La la la, the night is still early",
        "라라라 밤은 아직 길어",
        "La la la, the night is still long",
    ),
    (
        "Dance with me, dance with me again",
        "おどろう もういちど",
        "Let's dance once more",
        "춤춰요 춤춰요 다시 한번",
        "Dance, dance once more",
    ),
    (
        "Hold me close and never let me go",
        "はなさないで そばに",
        "Don't let go, stay close",
        "날 안아줘 놓지 말아줘",
        "Hold me, don't let go",
    ),
    (
        "Oh oh oh, we're flying high",
        "おおお そらたかく",
        "Oh oh oh, high in the sky",
        "오오오 높이 날아가",
        "Oh oh oh, flying high",
    ),
    (
        "Run away, run away with me",
        "にげよう にげようよ",
        "Let's run away, let's run away",
        "도망가 도망가 나와 함께",
        "Run away, run away with me",
    ),
    (
        "Na na na, forever and a day",
        "なななな いつまでも",
        "Na na na na, forever",
        "나나나 영원히 함께",
        "Na na na, together forever",
    ),
];

/// `(EN, JA, KO, gloss of the JA/KO filler)`
const FILLERS: [(&str, &str, &str, &str); 10] = [
    (
        "or at least that is how it felt to me",
        "と、ほんとうにそうおもいます",
        "라고 나는 정말 생각합니다",
        "that is truly what I think",
    ),
    (
        "as far as I can remember it now",
        "ということをいまでもおぼえています",
        "라는 것을 아직도 기억합니다",
        "that is something I still remember",
    ),
    (
        "which is something I still think about",
        "と、わたしはかんじています",
        "라고 느끼고 있습니다",
        "that is how I feel",
    ),
    (
        "and I really do mean that",
        "というのがただしいいいかたです",
        "라고 말하는 것이 맞습니다",
        "that is the right way to say it",
    ),
    (
        "if that makes any sense at all",
        "と、いつもかんがえています",
        "라고 항상 생각합니다",
        "that is what I always think",
    ),
    (
        "to put it another way",
        "ということなのです",
        "라는 뜻입니다",
        "that is what it means",
    ),
    (
        "in a manner of speaking",
        "と、だれかがいっていました",
        "라고 누군가 말했습니다",
        "someone said so",
    ),
    (
        "just like everybody told me",
        "と、みんなからききました",
        "라고 모두에게 들었습니다",
        "I heard it from everyone",
    ),
    (
        "though nobody quite agrees",
        "けれども、はっきりとはわかりません",
        "하지만 확실하지는 않습니다",
        "but I am not certain",
    ),
    (
        "for what it is worth",
        "というのがせいかくなところです",
        "라는 것이 정확한 표현입니다",
        "that is the accurate account",
    ),
];

const DIRECTIONS: [(Language, Language); 6] = [
    (Language::En, Language::Ja),
    (Language::En, Language::Ko),
    (Language::Ja, Language::En),
    (Language::Ja, Language::Ko),
    (Language::Ko, Language::En),
    (Language::Ko, Language::Ja),
];

const SONGS: usize = 20;

fn line(e: &Entry, lang: Language) -> Line {
    match lang {
        Language::En => Line::new(e.0).unwrap(),
        Language::Ja => Line::new(e.1).unwrap().with_gloss(e.2),
        Language::Ko => Line::new(e.3).unwrap().with_gloss(e.4),
    }
}

fn padded(e: &Entry, lang: Language, f: usize) -> Line {
    let (en, ja, ko, gloss) = FILLERS[f % FILLERS.len()];
    match lang {
        Language::En => Line::new(format!("{}, {en}", e.0)).unwrap(),
        Language::Ja => Line::new(format!("{}{ja}", e.1))
            .unwrap()
            .with_gloss(format!("{}, {gloss}", e.2)),
        Language::Ko => Line::new(format!("{}{ko}", e.3))
            .unwrap()
            .with_gloss(format!("{}, {gloss}", e.4)),
    }
}

/// Bank entries of song `k`, grouped by section.
fn song_plan(k: usize) -> Vec<(&'static str, Vec<&'static Entry>)> {
    let v = |j: usize| &VERSES[(k * 5 + j) % VERSES.len()];
    let r = |j: usize| &REFRAINS[(k * 3 + j) % REFRAINS.len()];
    let chorus = vec![r(0), r(1), r(0), r(2)];
    vec![
        ("verse 1", vec![v(0), v(1), v(2)]),
        ("chorus", chorus.clone()),
        ("verse 2", vec![v(3), v(4), v(5)]),
        ("chorus", chorus),
        ("bridge", vec![v(6), v(7)]),
    ]
}

fn document(
    title: &str,
    original: Language,
    lang: Language,
    sections: Vec<(&str, Vec<Line>)>,
    official: bool,
) -> LyricsDocument {
    let mut meta = SongMetadata::new(title, original);
    meta.artist = "Fixture Ensemble".into();
    meta.genre = "pop".into();
    meta.official = official;
    let sections = sections
        .into_iter()
        .map(|(label, lines)| Section::new(lines).unwrap().with_label(label))
        .collect();
    LyricsDocument::new(lang, meta, sections).unwrap()
}

fn main() {
    let out = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/corpus"));
    std::fs::create_dir_all(&out).unwrap();

    let mut manifest = CorpusManifest::default();
    for k in 0..SONGS {
        let (src, tgt) = DIRECTIONS[k % DIRECTIONS.len()];
        let title = format!("Fixture Song {:02}", k + 1);
        let plan = song_plan(k);

        let source: Vec<(&str, Vec<Line>)> = plan
            .iter()
            .map(|(label, es)| (*label, es.iter().map(|e| line(e, src)).collect()))
            .collect();
        let singable: Vec<(&str, Vec<Line>)> = plan
            .iter()
            .map(|(label, es)| (*label, es.iter().map(|e| line(e, tgt)).collect()))
            .collect();

        // Scatter the flattened lines with a stride coprime to the line
        // count, pad every other one, then refill the original shape.
        let flat: Vec<&Entry> = plan.iter().flat_map(|(_, es)| es.iter().copied()).collect();
        let n = flat.len();
        let stride = (5..n).find(|s| gcd(*s, n) == 1).unwrap();
        let mut scattered = (0..n).map(|i| {
            let e = flat[(i * stride + 3) % n];
            if i % 2 == 0 {
                padded(e, tgt, i / 2 + k)
            } else {
                line(e, tgt)
            }
        });
        let prose: Vec<(&str, Vec<Line>)> = plan
            .iter()
            .map(|(label, es)| (*label, scattered.by_ref().take(es.len()).collect()))
            .collect();

        let stem = format!("song{:02}", k + 1);
        let files = [
            (
                format!("{stem}_{}.json", src.tag().to_lowercase()),
                document(&title, src, src, source, true),
            ),
            (
                format!("{stem}_{}_singable.json", tgt.tag().to_lowercase()),
                document(&title, src, tgt, singable, true),
            ),
            (
                format!("{stem}_{}_prose.json", tgt.tag().to_lowercase()),
                document(&title, src, tgt, prose, false),
            ),
        ];
        for (name, doc) in &files {
            std::fs::write(out.join(name), doc.to_json() + "\n").unwrap();
        }
        for (i, singable) in [(1, true), (2, false)] {
            manifest.pairs.push(ManifestEntry {
                source: files[0].0.clone().into(),
                target: files[i].0.clone().into(),
                singable,
            });
        }
    }
    let json = serde_json::to_string_pretty(&manifest).unwrap();
    std::fs::write(out.join("manifest.json"), json + "\n").unwrap();
    println!("wrote {} pairs to {}", manifest.pairs.len(), out.display());
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
