//! Hangul syllable blocks → compatibility jamo tokens.

use super::{is_silent_punctuation, Phoneme};
use crate::error::{Error, Result};

const S_BASE: u32 = 0xAC00;
const S_LAST: u32 = 0xD7A3;
const V_COUNT: u32 = 21;
const T_COUNT: u32 = 28;
const N_COUNT: u32 = V_COUNT * T_COUNT;

/// Initial consonants in Unicode order. These 19 are also the consonant
/// inventory.
const ONSETS: [char; 19] = [
    'ㄱ', 'ㄲ', 'ㄴ', 'ㄷ', 'ㄸ', 'ㄹ', 'ㅁ', 'ㅂ', 'ㅃ', 'ㅅ', 'ㅆ', 'ㅇ', 'ㅈ', 'ㅉ', 'ㅊ', 'ㅋ', 'ㅌ', 'ㅍ', 'ㅎ',
];

const NUCLEI: [char; 21] = [
    'ㅏ', 'ㅐ', 'ㅑ', 'ㅒ', 'ㅓ', 'ㅔ', 'ㅕ', 'ㅖ', 'ㅗ', 'ㅘ', 'ㅙ', 'ㅚ', 'ㅛ', 'ㅜ', 'ㅝ', 'ㅞ', 'ㅟ', 'ㅠ', 'ㅡ',
    'ㅢ', 'ㅣ',
];

/// Final consonants; index 0 of the Unicode table (no coda) is omitted.
const CODAS: [char; 27] = [
    'ㄱ', 'ㄲ', 'ㄳ', 'ㄴ', 'ㄵ', 'ㄶ', 'ㄷ', 'ㄹ', 'ㄺ', 'ㄻ', 'ㄼ', 'ㄽ', 'ㄾ', 'ㄿ', 'ㅀ', 'ㅁ', 'ㅂ', 'ㅄ', 'ㅅ',
    'ㅆ', 'ㅇ', 'ㅈ', 'ㅊ', 'ㅋ', 'ㅌ', 'ㅍ', 'ㅎ',
];

pub const KOREAN_VOWELS: &[&str] = &[
    "ㅏ", "ㅐ", "ㅑ", "ㅒ", "ㅓ", "ㅔ", "ㅕ", "ㅖ", "ㅗ", "ㅘ", "ㅙ", "ㅚ", "ㅛ", "ㅜ", "ㅝ", "ㅞ", "ㅟ", "ㅠ", "ㅡ",
    "ㅢ", "ㅣ",
];

pub const KOREAN_CONSONANTS: &[&str] = &[
    "ㄱ", "ㄲ", "ㄴ", "ㄷ", "ㄸ", "ㄹ", "ㅁ", "ㅂ", "ㅃ", "ㅅ", "ㅆ", "ㅇ", "ㅈ", "ㅉ", "ㅊ", "ㅋ", "ㅌ", "ㅍ", "ㅎ",
];

pub(super) const INVENTORY: &[&str] = &[
    "ㅏ", "ㅐ", "ㅑ", "ㅒ", "ㅓ", "ㅔ", "ㅕ", "ㅖ", "ㅗ", "ㅘ", "ㅙ", "ㅚ", "ㅛ", "ㅜ", "ㅝ", "ㅞ", "ㅟ", "ㅠ", "ㅡ",
    "ㅢ", "ㅣ", "ㄱ", "ㄲ", "ㄴ", "ㄷ", "ㄸ", "ㄹ", "ㅁ", "ㅂ", "ㅃ", "ㅅ", "ㅆ", "ㅇ", "ㅈ", "ㅉ", "ㅊ", "ㅋ", "ㅌ",
    "ㅍ", "ㅎ",
];

pub fn is_hangul_syllable(c: char) -> bool {
    (S_BASE..=S_LAST).contains(&(c as u32))
}

/// Splits a precomposed hangul syllable into (onset, nucleus, coda)
/// compatibility jamo.
pub fn decompose_hangul(c: char) -> Result<(char, char, Option<char>)> {
    if !is_hangul_syllable(c) {
        return Err(Error::Domain(format!("{c:?} is not a hangul syllable block")));
    }
    let s = c as u32 - S_BASE;
    let l = (s / N_COUNT) as usize;
    let v = ((s % N_COUNT) / T_COUNT) as usize;
    let t = (s % T_COUNT) as usize;
    let coda = if t == 0 { None } else { Some(CODAS[t - 1]) };
    Ok((ONSETS[l], NUCLEI[v], coda))
}

/// Compound codas are emitted as their two component consonants.
fn split_coda(c: char) -> &'static [&'static str] {
    match c {
        'ㄳ' => &["ㄱ", "ㅅ"],
        'ㄵ' => &["ㄴ", "ㅈ"],
        'ㄶ' => &["ㄴ", "ㅎ"],
        'ㄺ' => &["ㄹ", "ㄱ"],
        'ㄻ' => &["ㄹ", "ㅁ"],
        'ㄼ' => &["ㄹ", "ㅂ"],
        'ㄽ' => &["ㄹ", "ㅅ"],
        'ㄾ' => &["ㄹ", "ㅌ"],
        'ㄿ' => &["ㄹ", "ㅍ"],
        'ㅀ' => &["ㄹ", "ㅎ"],
        'ㅄ' => &["ㅂ", "ㅅ"],
        other => {
            let i = KOREAN_CONSONANTS
                .iter()
                .position(|s| s.starts_with(other))
                .expect("simple coda is in the consonant inventory");
            std::slice::from_ref(&KOREAN_CONSONANTS[i])
        }
    }
}

fn symbol(c: char, table: &'static [&'static str]) -> &'static str {
    table
        .iter()
        .find(|s| s.starts_with(c))
        .copied()
        .expect("jamo is in the inventory")
}

pub(super) fn phonemes(text: &str) -> Vec<Phoneme> {
    let mut out = Vec::new();
    for c in text.chars() {
        match decompose_hangul(c) {
            Ok((onset, nucleus, coda)) => {
                // a syllable-initial ㅇ is silent
                if onset != 'ㅇ' {
                    out.push(Phoneme::new(symbol(onset, KOREAN_CONSONANTS)));
                }
                out.push(Phoneme::new(symbol(nucleus, KOREAN_VOWELS)));
                if let Some(coda) = coda {
                    out.extend(split_coda(coda).iter().map(|s| Phoneme::new(*s)));
                }
            }
            Err(_) => {
                if !is_silent_punctuation(c) {
                    log::warn!("dropping unsupported character {c:?} in Korean text");
                }
            }
        }
    }
    out
}

pub(super) fn syllable_count(text: &str) -> usize {
    text.chars().filter(|&c| is_hangul_syllable(c)).count()
}
