use std::collections::HashMap;
use std::path::Path;
use std::sync::{Arc, LazyLock};

use super::{is_silent_punctuation, Phoneme};
use crate::error::{Error, Result};

pub const ENGLISH_VOWELS: &[&str] = &[
    "AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER", "EY", "IH", "IY", "OW", "OY", "UH", "UW",
];

pub const ENGLISH_CONSONANTS: &[&str] = &[
    "B", "CH", "D", "DH", "F", "G", "HH", "JH", "K", "L", "M", "N", "NG", "P", "R", "S", "SH", "T", "TH", "V", "W",
    "Y", "Z", "ZH",
];

pub(super) const INVENTORY: &[&str] = &[
    "AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER", "EY", "IH", "IY", "OW", "OY", "UH", "UW", "B", "CH", "D", "DH",
    "F", "G", "HH", "JH", "K", "L", "M", "N", "NG", "P", "R", "S", "SH", "T", "TH", "V", "W", "Y", "Z", "ZH",
];

static BUNDLED_DICT: &str = include_str!("../../data/cmudict.dict");

static BUNDLED: LazyLock<Arc<Lexicon>> =
    LazyLock::new(|| Arc::new(Lexicon::parse(BUNDLED_DICT).expect("bundled lexicon is well formed")));

/// Word → ARPABET pronunciation (stress digits stripped). Only the first
/// pronunciation variant of each word is kept.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: HashMap<String, Vec<String>>,
}

impl Lexicon {
    /// The CMU Pronouncing Dictionary shipped with the crate.
    pub fn bundled() -> Arc<Lexicon> {
        Arc::clone(&BUNDLED)
    }

    pub fn load(path: &Path) -> Result<Lexicon> {
        let raw = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Lexicon::parse(&raw)
    }

    /// Parses the pronouncing-dictionary layout: `WORD  PH1 PH2 ...`, one
    /// entry per line. `;;;` comment lines, trailing `# ...` comments and
    /// `WORD(2)` variant markers are accepted.
    pub fn parse(raw: &str) -> Result<Lexicon> {
        let mut entries = HashMap::new();
        for (lineno, line) in raw.lines().enumerate() {
            if line.starts_with(";;;") {
                continue;
            }
            let content = line.split('#').next().unwrap_or("");
            let mut fields = content.split_whitespace();
            let Some(word) = fields.next() else { continue };
            if word.ends_with(')') && word.contains('(') {
                continue;
            }
            let mut phones = Vec::new();
            for ph in fields {
                let bare = ph.trim_end_matches(|c: char| c.is_ascii_digit());
                if !INVENTORY.contains(&bare) {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        column: 1,
                        message: format!("unknown phoneme {ph:?} for {word:?}"),
                    });
                }
                phones.push(bare.to_string());
            }
            if phones.is_empty() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    column: 1,
                    message: format!("entry {word:?} has no phonemes"),
                });
            }
            entries.entry(word.to_lowercase()).or_insert(phones);
        }
        Ok(Lexicon { entries })
    }

    pub fn get(&self, word: &str) -> Option<&[String]> {
        self.entries.get(&word.to_lowercase()).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[String])> + '_ {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }
}

/// Splits a line into lowercase word candidates. Hyphens and any other
/// punctuation split words; apostrophes are kept inside words.
fn words(text: &str) -> Vec<String> {
    let normalized: String = text
        .chars()
        .map(|c| match c {
            '’' | '‘' | 'ʼ' => '\'',
            c => c,
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in normalized.chars() {
        if c.is_alphanumeric() || c == '\'' {
            cur.extend(c.to_lowercase());
        } else {
            if !is_silent_punctuation(c) {
                log::warn!("dropping unsupported character {c:?} in English text");
            }
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

enum Word<'a> {
    Known(&'a [String]),
    Fallback(String),
}

fn resolve<'a>(lexicon: &'a Lexicon, raw: &str) -> Option<Word<'a>> {
    if let Some(p) = lexicon.get(raw) {
        return Some(Word::Known(p));
    }
    let trimmed = raw.trim_matches('\'');
    if let Some(p) = lexicon.get(trimmed) {
        return Some(Word::Known(p));
    }
    let letters: String = trimmed.chars().filter(|c| c.is_ascii_lowercase()).collect();
    if letters.len() != trimmed.chars().filter(|c| *c != '\'').count() {
        log::warn!("dropping non-ASCII characters in out-of-lexicon word {raw:?}");
    }
    if letters.is_empty() {
        None
    } else {
        Some(Word::Fallback(letters))
    }
}

pub(super) fn phonemes(lexicon: &Lexicon, text: &str) -> Vec<Phoneme> {
    let mut out = Vec::new();
    for w in words(text) {
        match resolve(lexicon, &w) {
            Some(Word::Known(p)) => out.extend(p.iter().map(|s| Phoneme::new(s.as_str()))),
            Some(Word::Fallback(letters)) => {
                log::debug!("{letters:?} not in lexicon, using grapheme rules");
                out.extend(fallback_phonemes(&letters).into_iter().map(Phoneme::new));
            }
            None => {}
        }
    }
    out
}

pub(super) fn syllables(lexicon: &Lexicon, text: &str) -> usize {
    words(text)
        .iter()
        .map(|w| match resolve(lexicon, w) {
            Some(Word::Known(p)) => p.iter().filter(|s| ENGLISH_VOWELS.contains(&s.as_str())).count(),
            Some(Word::Fallback(letters)) => english_fallback_syllables(&letters),
            None => 0,
        })
        .sum()
}

fn is_vowel_letter(chars: &[char], i: usize) -> bool {
    match chars[i] {
        'u' if i > 0 && chars[i - 1] == 'q' => false,
        'a' | 'e' | 'i' | 'o' | 'u' => true,
        // word-initial y before a vowel is a consonant ("yes"), otherwise a vowel ("fly")
        'y' => !(i == 0 && chars.len() > 1 && "aeiou".contains(chars[1])),
        _ => false,
    }
}

/// Vowel-letter groups with their start index, after dropping a silent
/// final `e`.
fn vowel_groups(chars: &[char]) -> Vec<(usize, usize)> {
    let mut groups = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if is_vowel_letter(chars, i) {
            let start = i;
            while i < chars.len() && is_vowel_letter(chars, i) {
                i += 1;
            }
            groups.push((start, i));
        } else {
            i += 1;
        }
    }
    if groups.len() > 1 {
        let (start, end) = *groups.last().unwrap();
        let silent_e = end == chars.len()
            && end - start == 1
            && chars[start] == 'e'
            && !(start >= 1 && chars[start - 1] == 'l' && start >= 2 && !is_vowel_letter(chars, start - 2));
        if silent_e {
            groups.pop();
        }
    }
    groups
}

/// Heuristic syllable count for a lowercase ASCII word: vowel-letter
/// groups, minus a silent final `e`, minimum one.
pub fn english_fallback_syllables(word: &str) -> usize {
    let chars: Vec<char> = word.chars().filter(|c| c.is_ascii_lowercase()).collect();
    if chars.is_empty() {
        return 0;
    }
    vowel_groups(&chars).len().max(1)
}

fn vowel_for_group(group: &[char]) -> &'static str {
    match group {
        ['e', 'e', ..] | ['e', 'a', ..] | ['i', 'e', ..] => "IY",
        ['o', 'o', ..] | ['o', 'u', ..] => "UW",
        ['a', 'i', ..] | ['a', 'y', ..] | ['e', 'i', ..] | ['e', 'y', ..] => "EY",
        ['o', 'a', ..] | ['o', 'w', ..] => "OW",
        ['o', 'i', ..] | ['o', 'y', ..] => "OY",
        ['a', 'u', ..] | ['a', 'w', ..] => "AO",
        ['a', ..] => "AE",
        ['e', ..] => "EH",
        ['i', ..] => "IH",
        ['o', ..] => "AA",
        ['u', ..] => "AH",
        ['y', ..] => "IY",
        _ => "AH",
    }
}

/// Deterministic grapheme-to-phoneme rules for out-of-lexicon words. Each
/// vowel-letter group becomes exactly one vowel, so the vowel count always
/// equals [`english_fallback_syllables`].
pub(super) fn fallback_phonemes(word: &str) -> Vec<&'static str> {
    let chars: Vec<char> = word.chars().filter(|c| c.is_ascii_lowercase()).collect();
    if chars.is_empty() {
        return Vec::new();
    }
    let groups = vowel_groups(&chars);
    let mut out: Vec<&'static str> = Vec::new();
    let mut i = 0;
    let mut g = groups.iter().peekable();
    let push = |out: &mut Vec<&'static str>, p: &'static str| {
        if out.last() != Some(&p) {
            out.push(p);
        }
    };
    while i < chars.len() {
        if let Some(&&(start, end)) = g.peek() {
            if i == start {
                push(&mut out, vowel_for_group(&chars[start..end]));
                i = end;
                g.next();
                continue;
            }
        }
        if is_vowel_letter(&chars, i) {
            // vowel letters outside any kept group: the silent final e
            i += 1;
            continue;
        }
        let next = chars.get(i + 1).copied();
        let (ph, width): (&[&'static str], usize) = match (chars[i], next) {
            ('c', Some('h')) => (&["CH"], 2),
            ('s', Some('h')) => (&["SH"], 2),
            ('t', Some('h')) => (&["TH"], 2),
            ('p', Some('h')) => (&["F"], 2),
            ('w', Some('h')) => (&["W"], 2),
            ('g', Some('h')) => (&[], 2),
            ('c', Some('k')) => (&["K"], 2),
            ('n', Some('g')) => (&["NG"], 2),
            ('q', Some('u')) => (&["K", "W"], 2),
            ('c', Some('e' | 'i' | 'y')) => (&["S"], 1),
            ('b', _) => (&["B"], 1),
            ('c', _) => (&["K"], 1),
            ('d', _) => (&["D"], 1),
            ('f', _) => (&["F"], 1),
            ('g', _) => (&["G"], 1),
            ('h', _) => (&["HH"], 1),
            ('j', _) => (&["JH"], 1),
            ('k', _) => (&["K"], 1),
            ('l', _) => (&["L"], 1),
            ('m', _) => (&["M"], 1),
            ('n', _) => (&["N"], 1),
            ('p', _) => (&["P"], 1),
            ('q', _) => (&["K"], 1),
            ('r', _) => (&["R"], 1),
            ('s', _) => (&["S"], 1),
            ('t', _) => (&["T"], 1),
            ('v', _) => (&["V"], 1),
            ('w', _) => (&["W"], 1),
            ('x', _) => (&["K", "S"], 1),
            ('y', _) => (&["Y"], 1),
            ('z', _) => (&["Z"], 1),
            _ => (&[], 1),
        };
        for p in ph {
            push(&mut out, p);
        }
        i += width;
    }
    if !out.iter().any(|p| ENGLISH_VOWELS.contains(p)) {
        out.push("AH");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_classic_layout_and_strips_stress() {
        let lex = Lexicon::parse(";;; comment\nHELLO  HH AH0 L OW1\nHELLO(1)  HH EH0 L OW1\nWORLD  W ER1 L D # note\n")
            .unwrap();
        assert_eq!(lex.len(), 2);
        assert_eq!(lex.get("Hello").unwrap(), ["HH", "AH", "L", "OW"]);
        assert_eq!(lex.get("world").unwrap(), ["W", "ER", "L", "D"]);
    }

    #[test]
    fn rejects_unknown_symbols() {
        assert!(Lexicon::parse("CAT  K AE1 XX\n").is_err());
    }

    #[test]
    fn hyphens_and_punctuation_split_words() {
        assert_eq!(words("Tick-tock, it's (late)!"), vec!["tick", "tock", "it's", "late"]);
    }

    #[test]
    fn bundled_lexicon_vowels_match_syllables() {
        let lex = Lexicon::bundled();
        for (word, syl) in [
            ("silent", 2),
            ("night", 1),
            ("holy", 2),
            ("happy", 2),
            ("twinkle", 2),
            ("little", 2),
            ("star", 1),
            ("diamond", 2),
            ("snowman", 2),
            ("anymore", 3),
            ("company", 3),
            ("overdue", 3),
        ] {
            assert_eq!(syllables(&lex, word), syl, "{word}");
        }
    }

    #[test]
    fn fallback_syllable_heuristic() {
        assert_eq!(english_fallback_syllables("blorf"), 1);
        assert_eq!(english_fallback_syllables("zandake"), 2);
        assert_eq!(english_fallback_syllables("glimmerly"), 3);
        assert_eq!(english_fallback_syllables("bxt"), 1);
        assert_eq!(english_fallback_syllables("the"), 1);
        assert_eq!(english_fallback_syllables("squibble"), 2);
    }

    #[test]
    fn fallback_vowel_count_matches_syllables() {
        for w in [
            "blorf",
            "zandake",
            "glimmerly",
            "bxt",
            "quashington",
            "phlenge",
            "yarbo",
            "kryptos",
            "squibble",
        ] {
            let phones = fallback_phonemes(w);
            let vowels = phones.iter().filter(|p| ENGLISH_VOWELS.contains(p)).count();
            assert_eq!(vowels, english_fallback_syllables(w), "{w}: {phones:?}");
            assert!(phones.iter().all(|p| INVENTORY.contains(p)));
        }
    }

    #[test]
    fn out_of_lexicon_word_uses_fallback() {
        let lex = Lexicon::parse("STAR  S T AA1 R\n").unwrap();
        let ph: Vec<_> = phonemes(&lex, "Blorf star")
            .iter()
            .map(|p| p.symbol().to_string())
            .collect();
        assert_eq!(ph, vec!["B", "L", "AA", "R", "F", "S", "T", "AA", "R"]);
    }
}
