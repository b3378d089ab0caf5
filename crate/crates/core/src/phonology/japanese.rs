//! Kana → mora tokens.
//!
//! Each mora yields an optional consonant token and a vowel token. Small
//! ゃゅょ turn the preceding i-row vowel into YA/YU/YO, small vowels replace
//! the preceding vowel (ふぁ → F A). っ emits `Q`, moraic ん emits `NN`, and
//! ー repeats the previous vowel's quality. Kanji cannot be read and is
//! rejected.

use super::{is_silent_punctuation, Phoneme};
use crate::error::{Error, Result};

pub const JAPANESE_VOWELS: &[&str] = &["A", "I", "U", "E", "O", "YA", "YU", "YO"];

pub const JAPANESE_CONSONANTS: &[&str] = &[
    "K", "G", "S", "SH", "Z", "J", "T", "CH", "TS", "D", "N", "H", "F", "B", "P", "M", "R", "W", "V", "Q", "NN",
];

pub(super) const INVENTORY: &[&str] = &[
    "A", "I", "U", "E", "O", "YA", "YU", "YO", "K", "G", "S", "SH", "Z", "J", "T", "CH", "TS", "D", "N", "H", "F", "B",
    "P", "M", "R", "W", "V", "Q", "NN",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kana {
    /// Full mora: optional consonant, vowel.
    Mora(Option<&'static str>, &'static str),
    /// Small ゃゅょ.
    Palatal(&'static str),
    /// Small ぁぃぅぇぉ / ゎ.
    SmallVowel(Option<&'static str>, &'static str),
    Sokuon,
    Hatsuon,
    Long,
}

fn to_hiragana(c: char) -> char {
    match c {
        'ァ'..='ヶ' => char::from_u32(c as u32 - 0x60).unwrap_or(c),
        _ => c,
    }
}

fn classify(c: char) -> Option<Kana> {
    use Kana::*;
    let k = match to_hiragana(c) {
        'あ' => Mora(None, "A"),
        'い' => Mora(None, "I"),
        'う' => Mora(None, "U"),
        'え' => Mora(None, "E"),
        'お' => Mora(None, "O"),
        'か' => Mora(Some("K"), "A"),
        'き' => Mora(Some("K"), "I"),
        'く' => Mora(Some("K"), "U"),
        'け' => Mora(Some("K"), "E"),
        'こ' => Mora(Some("K"), "O"),
        'が' => Mora(Some("G"), "A"),
        'ぎ' => Mora(Some("G"), "I"),
        'ぐ' => Mora(Some("G"), "U"),
        'げ' => Mora(Some("G"), "E"),
        'ご' => Mora(Some("G"), "O"),
        'さ' => Mora(Some("S"), "A"),
        'し' => Mora(Some("SH"), "I"),
        'す' => Mora(Some("S"), "U"),
        'せ' => Mora(Some("S"), "E"),
        'そ' => Mora(Some("S"), "O"),
        'ざ' => Mora(Some("Z"), "A"),
        'じ' => Mora(Some("J"), "I"),
        'ず' => Mora(Some("Z"), "U"),
        'ぜ' => Mora(Some("Z"), "E"),
        'ぞ' => Mora(Some("Z"), "O"),
        'た' => Mora(Some("T"), "A"),
        'ち' => Mora(Some("CH"), "I"),
        'つ' => Mora(Some("TS"), "U"),
        'て' => Mora(Some("T"), "E"),
        'と' => Mora(Some("T"), "O"),
        'だ' => Mora(Some("D"), "A"),
        'ぢ' => Mora(Some("J"), "I"),
        'づ' => Mora(Some("Z"), "U"),
        'で' => Mora(Some("D"), "E"),
        'ど' => Mora(Some("D"), "O"),
        'な' => Mora(Some("N"), "A"),
        'に' => Mora(Some("N"), "I"),
        'ぬ' => Mora(Some("N"), "U"),
        'ね' => Mora(Some("N"), "E"),
        'の' => Mora(Some("N"), "O"),
        'は' => Mora(Some("H"), "A"),
        'ひ' => Mora(Some("H"), "I"),
        'ふ' => Mora(Some("F"), "U"),
        'へ' => Mora(Some("H"), "E"),
        'ほ' => Mora(Some("H"), "O"),
        'ば' => Mora(Some("B"), "A"),
        'び' => Mora(Some("B"), "I"),
        'ぶ' => Mora(Some("B"), "U"),
        'べ' => Mora(Some("B"), "E"),
        'ぼ' => Mora(Some("B"), "O"),
        'ぱ' => Mora(Some("P"), "A"),
        'ぴ' => Mora(Some("P"), "I"),
        'ぷ' => Mora(Some("P"), "U"),
        'ぺ' => Mora(Some("P"), "E"),
        'ぽ' => Mora(Some("P"), "O"),
        'ま' => Mora(Some("M"), "A"),
        'み' => Mora(Some("M"), "I"),
        'む' => Mora(Some("M"), "U"),
        'め' => Mora(Some("M"), "E"),
        'も' => Mora(Some("M"), "O"),
        'や' => Mora(None, "YA"),
        'ゆ' => Mora(None, "YU"),
        'よ' => Mora(None, "YO"),
        'ら' => Mora(Some("R"), "A"),
        'り' => Mora(Some("R"), "I"),
        'る' => Mora(Some("R"), "U"),
        'れ' => Mora(Some("R"), "E"),
        'ろ' => Mora(Some("R"), "O"),
        'わ' => Mora(Some("W"), "A"),
        'ゐ' => Mora(Some("W"), "I"),
        'ゑ' => Mora(Some("W"), "E"),
        'を' => Mora(None, "O"),
        'ゔ' => Mora(Some("V"), "U"),
        'ゃ' => Palatal("YA"),
        'ゅ' => Palatal("YU"),
        'ょ' => Palatal("YO"),
        'ぁ' => SmallVowel(None, "A"),
        'ぃ' => SmallVowel(None, "I"),
        'ぅ' => SmallVowel(None, "U"),
        'ぇ' => SmallVowel(None, "E"),
        'ぉ' => SmallVowel(None, "O"),
        'ゎ' => SmallVowel(Some("W"), "A"),
        'ゕ' => Mora(Some("K"), "A"),
        'ゖ' => Mora(Some("K"), "E"),
        'っ' => Sokuon,
        'ん' => Hatsuon,
        'ー' => Long,
        _ => return None,
    };
    Some(k)
}

fn is_kanji(c: char) -> bool {
    matches!(c as u32, 0x3400..=0x4DBF | 0x4E00..=0x9FFF | 0xF900..=0xFAFF | 0x20000..=0x2FFFF) || c == '々'
}

fn base_vowel(v: &'static str) -> &'static str {
    match v {
        "YA" => "A",
        "YU" => "U",
        "YO" => "O",
        v => v,
    }
}

struct Reading {
    tokens: Vec<&'static str>,
    morae: usize,
}

fn read(text: &str) -> Result<Reading> {
    let mut tokens: Vec<&'static str> = Vec::new();
    let mut morae = 0;
    // index into `tokens` of the most recent vowel, if it can still be modified
    let mut last_vowel: Option<usize> = None;

    for c in text.chars() {
        if is_kanji(c) {
            return Err(Error::UnsupportedScript(format!(
                "kanji {c:?} in Japanese text {text:?}; provide a kana reading"
            )));
        }
        let Some(kana) = classify(c) else {
            if !is_silent_punctuation(c) {
                log::warn!("dropping unsupported character {c:?} in Japanese text");
            }
            last_vowel = None;
            continue;
        };
        match kana {
            Kana::Mora(cons, vowel) => {
                tokens.extend(cons);
                tokens.push(vowel);
                last_vowel = Some(tokens.len() - 1);
                morae += 1;
            }
            Kana::Palatal(glide) => match last_vowel {
                Some(i) if tokens[i] == "I" => {
                    tokens[i] = glide;
                    last_vowel = None;
                }
                _ => {
                    tokens.push(glide);
                    last_vowel = Some(tokens.len() - 1);
                    morae += 1;
                }
            },
            Kana::SmallVowel(cons, vowel) => match last_vowel {
                Some(i) => {
                    if let Some(cons) = cons {
                        tokens.insert(i, cons);
                        tokens[i + 1] = vowel;
                    } else {
                        tokens[i] = vowel;
                    }
                    last_vowel = None;
                }
                None => {
                    tokens.extend(cons);
                    tokens.push(vowel);
                    last_vowel = Some(tokens.len() - 1);
                    morae += 1;
                }
            },
            Kana::Sokuon => {
                tokens.push("Q");
                last_vowel = None;
                morae += 1;
            }
            Kana::Hatsuon => {
                tokens.push("NN");
                last_vowel = None;
                morae += 1;
            }
            Kana::Long => {
                let prev = tokens.iter().rev().find(|t| JAPANESE_VOWELS.contains(t)).copied();
                if let Some(v) = prev {
                    tokens.push(base_vowel(v));
                }
                last_vowel = None;
                morae += 1;
            }
        }
    }
    Ok(Reading { tokens, morae })
}

pub(super) fn phonemes(text: &str) -> Result<Vec<Phoneme>> {
    Ok(read(text)?.tokens.into_iter().map(Phoneme::new).collect())
}

pub(super) fn mora_count(text: &str) -> Result<usize> {
    Ok(read(text)?.morae)
}
