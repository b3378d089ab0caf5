use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lyrics::{Language, Section};
use crate::phonology::{Phoneme, PhonemeSequence, Phonology};

/// Phoneme distinct-2 of a token stream.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SectionPhoStats {
    pub pho: f64,
    pub unique_bigrams: usize,
    pub total_bigrams: usize,
}

/// Ratio of distinct consecutive-token bi-grams to all bi-grams over a
/// contiguous stream. A line-final `<eos>` pairs with the next line's first
/// token, so a stream of `t` tokens has `t − 1` bi-grams.
pub fn distinct2(tokens: &[Phoneme]) -> Result<SectionPhoStats> {
    if tokens.len() < 2 {
        return Err(Error::Domain(
            "phoneme distinct-2 needs at least one phoneme besides <eos>".into(),
        ));
    }
    let unique: HashSet<(&str, &str)> = tokens.windows(2).map(|w| (w[0].symbol(), w[1].symbol())).collect();
    let total = tokens.len() - 1;
    Ok(SectionPhoStats {
        pho: unique.len() as f64 / total as f64,
        unique_bigrams: unique.len(),
        total_bigrams: total,
    })
}

/// Concatenated token streams of `sections`, in argument order.
pub fn section_stream(sections: &[&Section], language: Language, phonology: &Phonology) -> Result<PhonemeSequence> {
    let mut seq = PhonemeSequence::new(language);
    for s in sections {
        seq.extend(&phonology.phonemize_section(s, language)?);
    }
    Ok(seq)
}

/// `pho(X_1 ⌢ … ⌢ X_k)` for one or more sections.
pub fn phoneme_distinct2(sections: &[&Section], language: Language, phonology: &Phonology) -> Result<SectionPhoStats> {
    if sections.is_empty() {
        return Err(Error::Domain("no sections given".into()));
    }
    let seq = section_stream(sections, language, phonology)?;
    if seq.tokens().iter().all(Phoneme::is_eos) {
        return Err(Error::Domain("all lines are empty after phonemization".into()));
    }
    distinct2(seq.tokens())
}
