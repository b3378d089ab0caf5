//! Per-language phoneme extraction and syllable counting.
//!
//! English goes through a pronouncing lexicon (ARPABET, stress stripped)
//! with a grapheme fallback for unknown words. Japanese is read from kana
//! mora by mora. Korean is decomposed from hangul syllable blocks into
//! compatibility jamo.

mod english;
mod japanese;
mod korean;
mod merge;

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::Serialize;

pub use english::{english_fallback_syllables, Lexicon, ENGLISH_CONSONANTS, ENGLISH_VOWELS};
pub use japanese::{JAPANESE_CONSONANTS, JAPANESE_VOWELS};
pub use korean::{decompose_hangul, is_hangul_syllable, KOREAN_CONSONANTS, KOREAN_VOWELS};
pub use merge::{MergeTable, MergeTables};

use crate::error::Result;
use crate::lyrics::{Language, Line, Section};

pub const EOS: &str = "<eos>";

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Phoneme(String);

impl Phoneme {
    pub fn new(symbol: impl Into<String>) -> Self {
        Phoneme(symbol.into())
    }

    pub fn eos() -> Self {
        Phoneme(EOS.to_string())
    }

    pub fn symbol(&self) -> &str {
        &self.0
    }

    pub fn is_eos(&self) -> bool {
        self.0 == EOS
    }
}

impl fmt::Debug for Phoneme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Phoneme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Phoneme tokens for one or more lines; each line ends with `<eos>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhonemeSequence {
    language: Language,
    tokens: Vec<Phoneme>,
}

impl PhonemeSequence {
    pub fn new(language: Language) -> Self {
        PhonemeSequence {
            language,
            tokens: Vec::new(),
        }
    }

    pub fn from_tokens(language: Language, tokens: Vec<Phoneme>) -> Self {
        PhonemeSequence { language, tokens }
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn tokens(&self) -> &[Phoneme] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn eos_count(&self) -> usize {
        self.tokens.iter().filter(|p| p.is_eos()).count()
    }

    pub fn symbols(&self) -> Vec<&str> {
        self.tokens.iter().map(Phoneme::symbol).collect()
    }

    pub fn extend(&mut self, other: &PhonemeSequence) {
        self.tokens.extend_from_slice(&other.tokens);
    }
}

/// Closed symbol inventory of a language (vowels then consonants).
pub fn inventory(language: Language) -> &'static [&'static str] {
    match language {
        Language::En => english::INVENTORY,
        Language::Ja => japanese::INVENTORY,
        Language::Ko => korean::INVENTORY,
    }
}

pub fn is_vowel(language: Language, symbol: &str) -> bool {
    match language {
        Language::En => ENGLISH_VOWELS.contains(&symbol),
        Language::Ja => JAPANESE_VOWELS.contains(&symbol),
        Language::Ko => KOREAN_VOWELS.contains(&symbol),
    }
}

/// Characters that never produce phonemes and are dropped silently.
pub(crate) fn is_silent_punctuation(c: char) -> bool {
    c.is_whitespace()
        || c.is_ascii_punctuation()
        || matches!(
            c,
            '、' | '。'
                | '，'
                | '．'
                | '！'
                | '？'
                | '「'
                | '」'
                | '『'
                | '』'
                | '・'
                | '…'
                | '‥'
                | '〜'
                | '～'
                | '（'
                | '）'
                | '“'
                | '”'
                | '‘'
                | '’'
                | '—'
                | '–'
                | '♪'
                | '\u{3000}'
        )
}

/// Phonemizer and syllable counter for all three languages.
#[derive(Clone, Debug)]
pub struct Phonology {
    lexicon: Arc<Lexicon>,
    merges: MergeTables,
}

impl Default for Phonology {
    fn default() -> Self {
        Phonology::standard()
    }
}

impl Phonology {
    pub fn new(lexicon: Arc<Lexicon>, merges: MergeTables) -> Self {
        Phonology { lexicon, merges }
    }

    /// Bundled CMU lexicon with the default merge tables.
    pub fn standard() -> Self {
        Phonology::new(Lexicon::bundled(), MergeTables::default())
    }

    pub fn from_files(lexicon: Option<&Path>, merge_config: Option<&Path>) -> Result<Self> {
        let lexicon = match lexicon {
            Some(p) => Arc::new(Lexicon::load(p)?),
            None => Lexicon::bundled(),
        };
        let merges = match merge_config {
            Some(p) => {
                let raw = std::fs::read_to_string(p).map_err(|e| crate::Error::io(p, e))?;
                MergeTables::from_json(&raw)?
            }
            None => MergeTables::default(),
        };
        Ok(Phonology::new(lexicon, merges))
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    pub fn merge_table(&self, language: Language) -> &MergeTable {
        self.merges.get(language)
    }

    /// Raw (unmerged) phonemes of a text, without the trailing `<eos>`.
    pub fn raw_phonemes(&self, text: &str, language: Language) -> Result<Vec<Phoneme>> {
        match language {
            Language::En => Ok(english::phonemes(&self.lexicon, text)),
            Language::Ja => japanese::phonemes(text),
            Language::Ko => Ok(korean::phonemes(text)),
        }
    }

    /// Merged phonemes of a text followed by a single `<eos>`.
    pub fn phonemize_text(&self, text: &str, language: Language) -> Result<PhonemeSequence> {
        let table = self.merges.get(language);
        let mut tokens: Vec<Phoneme> = self
            .raw_phonemes(text, language)?
            .iter()
            .map(|p| table.apply_phoneme(p))
            .collect();
        tokens.push(Phoneme::eos());
        Ok(PhonemeSequence::from_tokens(language, tokens))
    }

    pub fn phonemize(&self, line: &Line, language: Language) -> Result<PhonemeSequence> {
        self.phonemize_text(line.text(), language)
    }

    /// Concatenated token stream of a section, one `<eos>` per line.
    pub fn phonemize_section(&self, section: &Section, language: Language) -> Result<PhonemeSequence> {
        let mut seq = PhonemeSequence::new(language);
        for line in section.lines() {
            seq.extend(&self.phonemize(line, language)?);
        }
        Ok(seq)
    }

    pub fn apply_merge_table(&self, seq: &PhonemeSequence) -> PhonemeSequence {
        self.merges.get(seq.language()).apply(seq)
    }

    pub fn count_syllables_text(&self, text: &str, language: Language) -> Result<usize> {
        match language {
            Language::En => Ok(english::syllables(&self.lexicon, text)),
            Language::Ja => japanese::mora_count(text),
            Language::Ko => Ok(korean::syllable_count(text)),
        }
    }

    pub fn count_syllables(&self, line: &Line, language: Language) -> Result<usize> {
        self.count_syllables_text(line.text(), language)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Phonology {
        Phonology::standard()
    }

    #[test]
    fn twinkle_phonemes() {
        let seq = p().phonemize_text("twinkle twinkle little star", Language::En).unwrap();
        let expected = "T W IH NG K AH L T W IH NG K AH L L IH T AH L S T AA R <eos>";
        assert_eq!(seq.symbols().join(" "), expected);
        assert_eq!(seq.len(), 24);
    }

    #[test]
    fn kana_line() {
        let seq = p().phonemize_text("きらきら", Language::Ja).unwrap();
        assert_eq!(seq.symbols().join(" "), "K I R A K I R A <eos>");
    }

    #[test]
    fn hangul_line() {
        let seq = p().phonemize_text("별", Language::Ko).unwrap();
        assert_eq!(seq.symbols(), vec!["ㅂ", "ㅕ", "ㄹ", EOS]);
    }

    #[test]
    fn empty_after_filtering_is_only_eos() {
        for lang in Language::ALL {
            let seq = p().phonemize_text(" ... !? ", lang).unwrap();
            assert_eq!(seq.symbols(), vec![EOS]);
        }
    }

    #[test]
    fn syllable_counts_from_examples() {
        let p = p();
        assert_eq!(
            p.count_syllables_text("Silent night holy night", Language::En).unwrap(),
            6
        );
        assert_eq!(p.count_syllables_text("고요한밤 거룩한밤", Language::Ko).unwrap(), 8);
        assert_eq!(p.count_syllables_text("Happy New Year", Language::En).unwrap(), 4);
        assert_eq!(
            p.count_syllables_text("あけましておめでとうございます", Language::Ja)
                .unwrap(),
            15
        );
        assert_eq!(
            p.count_syllables_text("새해 복 많이 받으세요", Language::Ko).unwrap(),
            9
        );
        for lang in Language::ALL {
            assert_eq!(p.count_syllables_text("", lang).unwrap(), 0);
        }
    }

    #[test]
    fn section_eos_count_matches_lines() {
        let section = Section::from_texts(&["la la", "twinkle", "star"]).unwrap();
        let seq = p().phonemize_section(&section, Language::En).unwrap();
        assert_eq!(seq.eos_count(), 3);
    }

    #[test]
    fn inventories_have_expected_sizes() {
        assert_eq!(ENGLISH_VOWELS.len(), 15);
        assert_eq!(ENGLISH_CONSONANTS.len(), 24);
        assert_eq!(KOREAN_VOWELS.len(), 21);
        assert_eq!(KOREAN_CONSONANTS.len(), 19);
    }
}
