//! Vowel merge tables.
//!
//! Acoustically or perceptually similar vowels are collapsed onto one
//! canonical symbol before bi-gram counting, so languages with large vowel
//! inventories are not penalised with artificially high distinct-2 scores.

use std::collections::{BTreeMap, HashMap};

use serde::Deserialize;

use super::{inventory, Phoneme, PhonemeSequence};
use crate::error::{Error, Result};
use crate::lyrics::Language;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeTable {
    language: Language,
    map: HashMap<String, String>,
}

impl MergeTable {
    /// Builds a table, resolving chains (`a→b`, `b→c` becomes `a→c`) so
    /// the result is idempotent. Cycles and symbols outside the language's
    /// inventory are rejected.
    pub fn new<I, K, V>(language: Language, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (K, V)>,
        K: Into<String>,
        V: Into<String>,
    {
        let raw: HashMap<String, String> = pairs
            .into_iter()
            .map(|(k, v)| (k.into(), v.into()))
            .filter(|(k, v)| k != v)
            .collect();
        for (k, v) in &raw {
            for sym in [k, v] {
                if !inventory(language).contains(&sym.as_str()) {
                    return Err(Error::Config(format!(
                        "merge table for {language}: {sym:?} is not in the inventory"
                    )));
                }
            }
        }
        let mut map = HashMap::with_capacity(raw.len());
        for start in raw.keys() {
            let mut cur = start;
            let mut steps = 0;
            while let Some(next) = raw.get(cur) {
                cur = next;
                steps += 1;
                if steps > raw.len() {
                    return Err(Error::Config(format!(
                        "merge table for {language} has a cycle through {start:?}"
                    )));
                }
            }
            map.insert(start.clone(), cur.clone());
        }
        Ok(MergeTable { language, map })
    }

    pub fn identity(language: Language) -> Self {
        MergeTable {
            language,
            map: HashMap::new(),
        }
    }

    /// IH/IY, UH/UW and EH/AE.
    pub fn english() -> Self {
        Self::new(Language::En, [("IY", "IH"), ("UW", "UH"), ("AE", "EH")]).expect("builtin table is valid")
    }

    /// Palatalized vowels (YA, YU, YO) stay distinct from A, U, O.
    pub fn japanese() -> Self {
        Self::identity(Language::Ja)
    }

    /// ㅐ/ㅔ and ㅚ/ㅙ/ㅞ.
    pub fn korean() -> Self {
        Self::new(Language::Ko, [("ㅔ", "ㅐ"), ("ㅙ", "ㅚ"), ("ㅞ", "ㅚ")]).expect("builtin table is valid")
    }

    pub fn default_for(language: Language) -> Self {
        match language {
            Language::En => Self::english(),
            Language::Ja => Self::japanese(),
            Language::Ko => Self::korean(),
        }
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn canonical<'a>(&'a self, symbol: &'a str) -> &'a str {
        self.map.get(symbol).map(String::as_str).unwrap_or(symbol)
    }

    pub fn apply_phoneme(&self, p: &Phoneme) -> Phoneme {
        if p.is_eos() {
            return p.clone();
        }
        match self.map.get(p.symbol()) {
            Some(c) => Phoneme::new(c.clone()),
            None => p.clone(),
        }
    }

    pub fn apply(&self, seq: &PhonemeSequence) -> PhonemeSequence {
        PhonemeSequence::from_tokens(
            seq.language(),
            seq.tokens().iter().map(|p| self.apply_phoneme(p)).collect(),
        )
    }

    /// Merge pairs, sorted, for diagnostics.
    pub fn entries(&self) -> BTreeMap<&str, &str> {
        self.map.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect()
    }
}

/// The three per-language tables used by the phonology pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeTables {
    en: MergeTable,
    ja: MergeTable,
    ko: MergeTable,
}

impl Default for MergeTables {
    fn default() -> Self {
        MergeTables {
            en: MergeTable::english(),
            ja: MergeTable::japanese(),
            ko: MergeTable::korean(),
        }
    }
}

impl MergeTables {
    pub fn get(&self, language: Language) -> &MergeTable {
        match language {
            Language::En => &self.en,
            Language::Ja => &self.ja,
            Language::Ko => &self.ko,
        }
    }

    /// Parses a JSON config `{"EN": {"IY": "IH", ...}, "JA": {...}, "KO": {...}}`.
    /// Languages missing from the config keep their default table.
    pub fn from_json(raw: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Config {
            #[serde(rename = "EN")]
            en: Option<HashMap<String, String>>,
            #[serde(rename = "JA")]
            ja: Option<HashMap<String, String>>,
            #[serde(rename = "KO")]
            ko: Option<HashMap<String, String>>,
        }
        let cfg: Config = serde_json::from_str(raw).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let mut tables = MergeTables::default();
        if let Some(m) = cfg.en {
            tables.en = MergeTable::new(Language::En, m)?;
        }
        if let Some(m) = cfg.ja {
            tables.ja = MergeTable::new(Language::Ja, m)?;
        }
        if let Some(m) = cfg.ko {
            tables.ko = MergeTable::new(Language::Ko, m)?;
        }
        Ok(tables)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(lang: Language, syms: &[&str]) -> PhonemeSequence {
        PhonemeSequence::from_tokens(lang, syms.iter().map(|s| Phoneme::new(*s)).collect())
    }

    #[test]
    fn mass_and_mess_merge() {
        let t = MergeTable::english();
        let mass = t.apply(&seq(Language::En, &["M", "AE", "S", "<eos>"]));
        let mess = t.apply(&seq(Language::En, &["M", "EH", "S", "<eos>"]));
        assert_eq!(mass, mess);
        assert_eq!(mass.len(), 4);
        assert!(mass.tokens()[3].is_eos());
    }

    #[test]
    fn japanese_palatalized_vowels_stay_distinct() {
        let t = MergeTable::japanese();
        for (plain, palatal) in [("A", "YA"), ("O", "YO"), ("U", "YU")] {
            assert_ne!(t.canonical(plain), t.canonical(palatal));
        }
    }

    #[test]
    fn korean_merges() {
        let t = MergeTable::korean();
        assert_eq!(t.canonical("ㅐ"), t.canonical("ㅔ"));
        assert_eq!(t.canonical("ㅚ"), t.canonical("ㅙ"));
        assert_eq!(t.canonical("ㅚ"), t.canonical("ㅞ"));
        assert_ne!(t.canonical("ㅏ"), t.canonical("ㅐ"));
    }

    #[test]
    fn english_merges_exactly_three_pairs() {
        let t = MergeTable::english();
        let merged: Vec<_> = inventory(Language::En)
            .iter()
            .filter(|s| t.canonical(s) != **s)
            .collect();
        assert_eq!(merged.len(), 3);
    }

    #[test]
    fn tables_are_idempotent_and_total() {
        for lang in Language::ALL {
            let t = MergeTable::default_for(lang);
            for sym in inventory(lang) {
                let once = t.canonical(sym);
                assert_eq!(t.canonical(once), once);
                assert!(inventory(lang).contains(&once));
            }
        }
    }

    #[test]
    fn chains_resolve_and_cycles_fail() {
        let t = MergeTable::new(Language::En, [("IY", "IH"), ("IH", "EH")]).unwrap();
        assert_eq!(t.canonical("IY"), "EH");
        assert!(MergeTable::new(Language::En, [("IY", "IH"), ("IH", "IY")]).is_err());
        assert!(MergeTable::new(Language::En, [("QQ", "IH")]).is_err());
    }

    #[test]
    fn json_config_overrides_one_language() {
        let tables = MergeTables::from_json(r#"{"EN": {"AO": "AA"}}"#).unwrap();
        assert_eq!(tables.get(Language::En).canonical("AO"), "AA");
        assert_eq!(tables.get(Language::En).canonical("IY"), "IY");
        assert_eq!(tables.get(Language::Ko), &MergeTable::korean());
    }
}
