mod common;

use std::fs;
use std::path::Path;
use std::process::Command;

use lyreval::cli::run;

use common::*;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn lyreval(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lyreval").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn fx(name: &str) -> String {
    fixtures().join(name).to_str().unwrap().to_string()
}

fn parse_csv(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

fn read_dir_sorted(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for e in fs::read_dir(&d).unwrap() {
            let p = e.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else {
                let rel = p.strip_prefix(dir).unwrap().to_string_lossy().into_owned();
                out.push((rel, fs::read(&p).unwrap()));
            }
        }
    }
    out.sort();
    out
}

#[test]
fn score_with_form_metrics_only() {
    let o = lyreval(&[
        "score",
        &fx("twinkle_en.json"),
        &fx("twinkle_ja.json"),
        "--metrics",
        "syl,pho",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["source_language"], "EN");
    assert_eq!(v["target_language"], "JA");
    assert_eq!(v["singable"], true);
    assert_eq!(v["dis_syl"]["status"], "value");
    assert!(v["dis_syl"]["value"].as_f64().unwrap() >= 0.0);
    assert!(v["sim_pho"]["status"] == "value" || v["sim_pho"]["status"] == "undefined");
    assert_eq!(v["per_section_pho_source"].as_array().unwrap().len(), 2);
    assert_eq!(v["dis_mus"]["status"], "skipped");
    assert_eq!(v["sim_sem"]["status"], "skipped");
}

#[test]
fn score_non_singable_flag() {
    let o = lyreval(&[
        "score",
        &fx("snowman_en.json"),
        &fx("snowman_ko.json"),
        "--non-singable",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["singable"], false);
    assert_eq!(v["sim_sem"]["status"], "value");
    assert_eq!(v["source_matrix"]["entries"].as_array().unwrap().len(), 4);
}

#[test]
fn matrix_is_symmetric() {
    let o = lyreval(&["matrix", &fx("twinkle_en.json")]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let m = parse_csv(&o.stdout);
    assert_eq!(m.len(), 2);
    assert!(m.iter().all(|r| r.len() == 2));
    assert_eq!(m[0][1], m[1][0]);
}

#[test]
fn exit_codes() {
    let o = lyreval(&["score", &fx("twinkle_en.json"), &fx("twinkle_ko_misaligned.json")]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.starts_with("lyreval: "), "{}", o.stderr);
    assert!(o.stderr.contains("section 1"), "{}", o.stderr);
    assert!(o.stdout.is_empty());

    let o = lyreval(&["matrix", "/nonexistent/lyrics.json"]);
    assert_eq!(o.code, 2, "{}", o.stderr);
    assert!(o.stderr.contains("/nonexistent/lyrics.json"));

    assert_eq!(lyreval(&["matrix", &fx("twinkle_en.json"), "--frobnicate"]).code, 1);
    assert_eq!(lyreval(&["transmogrify"]).code, 1);
    assert_eq!(lyreval(&[]).code, 1);
    assert_eq!(lyreval(&["--help"]).code, 0);
    assert_eq!(lyreval(&["score", "--help"]).code, 0);

    let o = lyreval(&[
        "score",
        &fx("twinkle_en.json"),
        &fx("twinkle_ja.json"),
        "--metrics",
        "rhyme",
    ]);
    assert_eq!(o.code, 1);
    let o = lyreval(&[
        "--provider",
        "magic",
        "crossscape",
        &fx("twinkle_en.json"),
        &fx("twinkle_ja.json"),
    ]);
    assert_eq!(o.code, 1, "{}", o.stderr);
}

#[test]
fn unreachable_provider_exits_2() {
    let o = lyreval(&[
        "--provider",
        "remote:http://127.0.0.1:1",
        "score",
        &fx("twinkle_en.json"),
        &fx("twinkle_ja.json"),
    ]);
    assert_eq!(o.code, 2, "{}", o.stderr);
    assert!(o.stderr.contains("127.0.0.1:1"));
    // Without sem, no provider is contacted at all.
    let o = lyreval(&[
        "--provider",
        "remote:http://127.0.0.1:1",
        "score",
        &fx("twinkle_en.json"),
        &fx("twinkle_ja.json"),
        "--metrics",
        "syl",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
}

#[test]
fn file_provider() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("vectors.json");
    let data = serde_json::json!({
        "provider_id": "tiny",
        "dimension": 2,
        "vectors": {
            "Twinkle, twinkle, little star": [1.0, 0.0],
            "Shine, shine, little star": [0.6, 0.8],
        }
    });
    fs::write(&path, data.to_string()).unwrap();
    let tmp = dir.path().join("pair");
    fs::create_dir(&tmp).unwrap();
    let en = serde_json::json!({"language": "EN", "metadata": {"title": "t", "original_language": "EN"},
        "sections": [{"lines": [{"text": "Twinkle, twinkle, little star"}]}]});
    let ko = serde_json::json!({"language": "KO", "metadata": {"title": "t", "original_language": "EN"},
        "sections": [{"lines": [{"text": "반짝반짝 작은 별", "gloss": "Shine, shine, little star"}]}]});
    fs::write(tmp.join("en.json"), en.to_string()).unwrap();
    fs::write(tmp.join("ko.json"), ko.to_string()).unwrap();
    let provider = format!("file:{}", path.display());
    let o = lyreval(&[
        "--provider",
        &provider,
        "crossscape",
        tmp.join("en.json").to_str().unwrap(),
        tmp.join("ko.json").to_str().unwrap(),
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout, "level,start,end,value\n1,1,1,0.6\n");
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let corpus = fx("corpus/manifest.json");
    let mut stdouts = Vec::new();
    for dir in [a.path(), b.path()] {
        let out = dir.to_str().unwrap();
        let o = lyreval(&["--out", out, "corpus", &corpus]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        stdouts.push(o.stdout);
        for args in [
            vec!["matrix", &fx("snowman_ja.json")[..]],
            vec!["crossscape", &fx("snowman_en.json")[..], &fx("snowman_ko.json")[..]],
            vec!["semmatrix", &fx("snowman_en.json")[..], &fx("snowman_ja.json")[..]],
        ] {
            let mut full = vec!["--out", out];
            full.extend(args);
            let o = lyreval(&full);
            assert_eq!(o.code, 0, "{}", o.stderr);
            stdouts.push(o.stdout);
        }
    }
    assert_eq!(stdouts[..4], stdouts[4..]);
    let (fa, fb) = (read_dir_sorted(a.path()), read_dir_sorted(b.path()));
    assert_eq!(fa, fb);
    let names: Vec<&str> = fa.iter().map(|(n, _)| n.as_str()).collect();
    for expected in [
        "grouped.csv",
        "grouped.json",
        "matrix.csv",
        "matrix.svg",
        "crossscape.svg",
        "semmatrix_section.svg",
    ] {
        assert!(names.contains(&expected), "{expected} missing from {names:?}");
    }
    assert_eq!(names.iter().filter(|n| n.starts_with("pairs")).count(), 40);
}

#[test]
fn format_selects_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = lyreval(&["--out", out, "--format", "csv", "matrix", &fx("twinkle_en.json")]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let names: Vec<String> = read_dir_sorted(dir.path()).into_iter().map(|(n, _)| n).collect();
    assert_eq!(names, vec!["matrix.csv"]);
    assert_eq!(lyreval(&["--format", "png", "matrix", &fx("twinkle_en.json")]).code, 1);
}

#[test]
fn heatmap_svg_matches_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = lyreval(&["--out", out, "matrix", &fx("snowman_en.json")]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let csv = parse_csv(&fs::read_to_string(dir.path().join("matrix.csv")).unwrap());
    assert_eq!(csv, parse_csv(&o.stdout));
    let svg = fs::read_to_string(dir.path().join("matrix.svg")).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    assert_eq!(root.attribute("data-scale-min"), Some("0"));
    let max: f64 = root.attribute("data-scale-max").unwrap().parse().unwrap();
    let mut cells = 0;
    for rect in doc
        .descendants()
        .filter(|n| n.has_tag_name("rect") && n.has_attribute("data-value"))
    {
        let i: usize = rect.attribute("data-row").unwrap().parse().unwrap();
        let j: usize = rect.attribute("data-col").unwrap().parse().unwrap();
        let v: f64 = rect.attribute("data-value").unwrap().parse().unwrap();
        assert_eq!(v, csv[i][j]);
        assert!(v <= max);
        cells += 1;
    }
    assert_eq!(cells, 16);

    let json: lyreval::metrics::DissimilarityMatrix =
        serde_json::from_str(&fs::read_to_string(dir.path().join("matrix.json")).unwrap()).unwrap();
    assert_eq!(json.rows(), &csv[..]);
}

#[test]
fn crossscape_outputs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = lyreval(&[
        "--out",
        out,
        "crossscape",
        &fx("twinkle_en.json"),
        &fx("twinkle_ja.json"),
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let mut lines = o.stdout.lines();
    assert_eq!(lines.next(), Some("level,start,end,value"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 12 * 13 / 2);
    for r in &rows {
        let (k, start, end, v) = (r[0], r[1], r[2], r[3]);
        assert_eq!(end - start + 1.0, k);
        assert!((1.0..=12.0).contains(&start) && end <= 12.0);
        assert!((0.0..=1.0).contains(&v));
    }
    let svg = fs::read_to_string(dir.path().join("crossscape.svg")).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    for rect in doc.descendants().filter(|n| n.has_attribute("data-level")) {
        let k: f64 = rect.attribute("data-level").unwrap().parse().unwrap();
        let i: f64 = rect.attribute("data-start").unwrap().parse().unwrap();
        let v: f64 = rect.attribute("data-value").unwrap().parse().unwrap();
        let row = rows.iter().find(|r| r[0] == k && r[1] == i + 1.0).unwrap();
        assert_eq!(row[3], v);
    }
}

#[test]
fn semmatrix_granularities() {
    let line = lyreval(&[
        "semmatrix",
        &fx("twinkle_en.json"),
        &fx("twinkle_ko.json"),
        "--granularity",
        "line",
    ]);
    assert_eq!(line.code, 0, "{}", line.stderr);
    let m = parse_csv(&line.stdout);
    assert_eq!((m.len(), m[0].len()), (12, 12));

    let section = lyreval(&["semmatrix", &fx("twinkle_en.json"), &fx("twinkle_ko.json")]);
    let m = parse_csv(&section.stdout);
    assert_eq!((m.len(), m[0].len()), (2, 2));

    let bad = lyreval(&[
        "semmatrix",
        &fx("twinkle_en.json"),
        &fx("twinkle_ko.json"),
        "--granularity",
        "word",
    ]);
    assert_eq!(bad.code, 1);
    assert!(bad.stderr.contains("word"));
}

#[test]
fn phonemize_and_syllables() {
    let o = lyreval(&["phonemize", &fx("twinkle_en.json")]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let first: Vec<&str> = o.stdout.lines().next().unwrap().split('\t').collect();
    assert_eq!(first[..2], ["0", "0"]);
    assert!(first[3].ends_with("<eos>"));
    assert_eq!(o.stdout.lines().count(), 12);

    let o = lyreval(&["syllables", &fx("twinkle_ko.json")]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    for line in o.stdout.lines() {
        let cols: Vec<&str> = line.split('\t').collect();
        let blocks = cols[3]
            .chars()
            .filter(|c| lyreval::phonology::is_hangul_syllable(*c))
            .count();
        assert_eq!(cols[2].parse::<usize>().unwrap(), blocks);
    }
}

#[test]
fn corpus_lenient_skips_bad_pairs() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["twinkle_en.json", "twinkle_ja.json", "twinkle_ko_misaligned.json"] {
        fs::copy(fixtures().join(name), dir.path().join(name)).unwrap();
    }
    let manifest = serde_json::json!({"pairs": [
        {"source": "twinkle_en.json", "target": "twinkle_ko_misaligned.json", "singable": true},
        {"source": "twinkle_en.json", "target": "twinkle_ja.json", "singable": true},
    ]});
    fs::write(dir.path().join("manifest.json"), manifest.to_string()).unwrap();
    let root = dir.path().to_str().unwrap();

    assert_eq!(lyreval(&["corpus", root]).code, 1);
    let o = lyreval(&["corpus", root, "--lenient", "--metrics", "syl,mus"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stderr.contains("skipped pair 0"), "{}", o.stderr);
    let mut lines = o.stdout.lines();
    assert_eq!(lines.next(), Some("source,target,singable,metric,mean,count,pairs"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows
        .iter()
        .any(|r| r.starts_with("EN,JA,true,dis_syl,") && r.ends_with(",1,1")));
    assert!(rows.contains(&"EN,JA,true,sim_sem,,0,1"));
}

#[test]
fn real_binary() {
    let bin = env!("CARGO_BIN_EXE_lyreval");
    let out = Command::new(bin)
        .args(["syllables", &fx("snowman_ja.json")])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 15);

    let out = Command::new(bin)
        .args(["score", &fx("twinkle_en.json"), &fx("twinkle_ko_misaligned.json")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = Command::new(bin)
        .env("LYREVAL_PROVIDER_URL", "http://127.0.0.1:1")
        .args([
            "--provider",
            "remote:",
            "crossscape",
            &fx("twinkle_en.json"),
            &fx("twinkle_ja.json"),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(bin).arg("--version").output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("lyreval "));
}
