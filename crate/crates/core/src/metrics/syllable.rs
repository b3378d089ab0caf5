use crate::error::{Error, Result};
use crate::lyrics::AlignedPair;
use crate::phonology::Phonology;

/// Mean symmetric relative difference of aligned syllable counts:
/// `1/(2n) Σ (|a−b|/a + |a−b|/b)`.
pub fn syllable_count_distance(counts: &[(usize, usize)]) -> Result<f64> {
    if counts.is_empty() {
        return Err(Error::Domain("no aligned lines".into()));
    }
    let mut total = 0.0;
    for (i, &(a, b)) in counts.iter().enumerate() {
        if a == 0 || b == 0 {
            return Err(Error::Domain(format!(
                "line {i} has zero syllables (source {a}, target {b})"
            )));
        }
        let diff = a.abs_diff(b) as f64;
        total += diff / a as f64 + diff / b as f64;
    }
    Ok(total / (2.0 * counts.len() as f64))
}

/// Per-line `(source, target)` syllable counts in document order.
pub fn line_syllable_counts(pair: &AlignedPair, phonology: &Phonology) -> Result<Vec<(usize, usize)>> {
    let (sl, tl) = (pair.source().language(), pair.target().language());
    pair.line_pairs()
        .map(|(s, t)| Ok((phonology.count_syllables(s, sl)?, phonology.count_syllables(t, tl)?)))
        .collect()
}

pub fn line_syllable_count_distance(pair: &AlignedPair, phonology: &Phonology) -> Result<f64> {
    let counts = line_syllable_counts(pair, phonology)?;
    syllable_count_distance(&counts).map_err(|e| match e {
        Error::Domain(msg) => {
            // name the offending text, not just its index
            let idx = counts.iter().position(|&(a, b)| a == 0 || b == 0);
            match idx.and_then(|i| pair.line_pairs().nth(i)) {
                Some((s, t)) => Error::Domain(format!("{msg}: {:?} / {:?}", s.text(), t.text())),
                None => Error::Domain(msg),
            }
        }
        other => other,
    })
}
