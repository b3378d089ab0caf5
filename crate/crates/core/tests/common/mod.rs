//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;

use lyreval::{Language, Line, LyricsDocument, Section, SongMetadata};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

const EN_WORDS: &[&str] = &[
    "love", "night", "star", "light", "dream", "heart", "fly", "away", "home", "sing", "rain", "snow", "you", "me",
    "forever", "tonight", "hold", "go", "la", "shine", "river", "golden", "whisper", "morning",
];
const JA_KANA: &[&str] = &[
    "あ", "い", "う", "え", "お", "か", "き", "く", "さ", "し", "た", "な", "は", "ま", "よ", "ら", "る", "ん", "っ",
    "きょ", "しゃ", "ー", "ゆ", "を",
];

pub fn en_line<R: Rng>(rng: &mut R) -> String {
    let n = rng.gen_range(1..=6);
    (0..n)
        .map(|_| *EN_WORDS.choose(rng).unwrap())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Kana line; never starts with a mora modifier.
pub fn ja_line<R: Rng>(rng: &mut R) -> String {
    let n = rng.gen_range(1..=10);
    let mut s = String::from(*JA_KANA[..16].choose(rng).unwrap());
    for _ in 1..n {
        s.push_str(JA_KANA.choose(rng).unwrap());
    }
    s
}

pub fn hangul<R: Rng>(rng: &mut R) -> char {
    char::from_u32(0xAC00 + rng.gen_range(0..11172)).unwrap()
}

pub fn ko_line<R: Rng>(rng: &mut R) -> String {
    let words = rng.gen_range(1..=3);
    (0..words)
        .map(|_| (0..rng.gen_range(1..=4)).map(|_| hangul(rng)).collect::<String>())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn line_text<R: Rng>(rng: &mut R, lang: Language) -> String {
    match lang {
        Language::En => en_line(rng),
        Language::Ja => ja_line(rng),
        Language::Ko => ko_line(rng),
    }
}

/// A document of the given shape; non-English lines get English glosses.
pub fn random_doc<R: Rng>(rng: &mut R, lang: Language, shape: &[usize]) -> LyricsDocument {
    let sections = shape
        .iter()
        .map(|&n| {
            let lines = (0..n)
                .map(|_| {
                    let l = Line::new(line_text(rng, lang)).unwrap();
                    if lang == Language::En {
                        l
                    } else {
                        l.with_gloss(en_line(rng))
                    }
                })
                .collect();
            Section::new(lines).unwrap()
        })
        .collect();
    LyricsDocument::new(lang, SongMetadata::new("random", Language::En), sections).unwrap()
}

pub fn random_shape<R: Rng>(rng: &mut R, max_sections: usize, max_lines: usize) -> Vec<usize> {
    (0..rng.gen_range(1..=max_sections))
        .map(|_| rng.gen_range(1..=max_lines))
        .collect()
}

/// Unique / total consecutive pairs, counted by brute force.
pub fn naive_distinct2(tokens: &[String]) -> (usize, usize) {
    let mut seen: Vec<(&str, &str)> = Vec::new();
    let mut total = 0;
    for i in 0..tokens.len().saturating_sub(1) {
        total += 1;
        let pair = (tokens[i].as_str(), tokens[i + 1].as_str());
        if !seen.contains(&pair) {
            seen.push(pair);
        }
    }
    (seen.len(), total)
}

/// Spearman from first principles: rank = #smaller + (#equal + 1) / 2,
/// then Pearson on the ranks. `None` when either side is constant.
pub fn brute_spearman(a: &[f64], b: &[f64]) -> Option<f64> {
    fn ranks(x: &[f64]) -> Vec<f64> {
        x.iter()
            .map(|v| {
                let less = x.iter().filter(|w| *w < v).count() as f64;
                let equal = x.iter().filter(|w| *w == v).count() as f64;
                less + (equal + 1.0) / 2.0
            })
            .collect()
    }
    let (ra, rb) = (ranks(a), ranks(b));
    let n = a.len() as f64;
    let (ma, mb) = (ra.iter().sum::<f64>() / n, rb.iter().sum::<f64>() / n);
    let mut cov = 0.0;
    let mut va = 0.0;
    let mut vb = 0.0;
    for i in 0..a.len() {
        cov += (ra[i] - ma) * (rb[i] - mb);
        va += (ra[i] - ma).powi(2);
        vb += (rb[i] - mb).powi(2);
    }
    if va == 0.0 || vb == 0.0 {
        None
    } else {
        Some(cov / (va * vb).sqrt())
    }
}

/// Random token stream over a small alphabet, with line breaks.
pub fn random_stream<R: Rng>(rng: &mut R, max_len: usize) -> Vec<String> {
    let alphabet = ["A", "B", "K", "IH", "T", "<eos>"];
    let n = rng.gen_range(2..=max_len);
    (0..n).map(|_| alphabet.choose(rng).unwrap().to_string()).collect()
}

pub fn distinct_symbols(tokens: &[String]) -> usize {
    tokens.iter().collect::<HashSet<_>>().len()
}
