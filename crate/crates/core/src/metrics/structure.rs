//! Section-level repetition profiles and self-dissimilarity matrices.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::distinct::{distinct2, phoneme_distinct2, section_stream};
use super::spearman::spearman;
use crate::error::{Error, Result};
use crate::lyrics::{AlignedPair, Language, LyricsDocument, Section};
use crate::phonology::{Phoneme, Phonology};

/// Square, symmetric matrix of `diss(X_i, X_j)` values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DissimilarityMatrix {
    entries: Vec<Vec<f64>>,
}

impl DissimilarityMatrix {
    pub fn from_entries(entries: Vec<Vec<f64>>) -> Result<Self> {
        let m = entries.len();
        if m == 0 || entries.iter().any(|row| row.len() != m) {
            return Err(Error::Domain(
                "dissimilarity matrix must be square and non-empty".into(),
            ));
        }
        Ok(DissimilarityMatrix { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size()).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }
}

/// Per-section phoneme streams of one document, computed once.
struct SectionStreams {
    streams: Vec<Vec<Phoneme>>,
    pho: Vec<f64>,
}

impl SectionStreams {
    fn new(doc: &LyricsDocument, phonology: &Phonology) -> Result<Self> {
        let mut streams = Vec::with_capacity(doc.section_count());
        let mut pho = Vec::with_capacity(doc.section_count());
        for (i, s) in doc.sections().iter().enumerate() {
            let seq = section_stream(&[s], doc.language(), phonology)?;
            let st = distinct2(seq.tokens()).map_err(|e| Error::Domain(format!("section {i}: {e}")))?;
            pho.push(st.pho);
            streams.push(seq.tokens().to_vec());
        }
        Ok(SectionStreams { streams, pho })
    }

    fn diss(&self, i: usize, j: usize) -> Result<f64> {
        let (lo, hi) = (i.min(j), i.max(j));
        let mut joined = Vec::with_capacity(self.streams[lo].len() + self.streams[hi].len());
        joined.extend_from_slice(&self.streams[lo]);
        joined.extend_from_slice(&self.streams[hi]);
        Ok(distinct2(&joined)?.pho + (self.pho[lo] - self.pho[hi]).abs())
    }

    fn matrix(&self) -> Result<DissimilarityMatrix> {
        let m = self.streams.len();
        let cells: Vec<(usize, usize)> = (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
        let values: Vec<f64> = cells.par_iter().map(|&(i, j)| self.diss(i, j)).collect::<Result<_>>()?;
        let mut entries = vec![vec![0.0; m]; m];
        for (&(i, j), v) in cells.iter().zip(values) {
            entries[i][j] = v;
            entries[j][i] = v;
        }
        DissimilarityMatrix::from_entries(entries)
    }
}

/// `pho` of every section of a document, in order.
pub fn section_pho_profile(doc: &LyricsDocument, phonology: &Phonology) -> Result<Vec<f64>> {
    Ok(SectionStreams::new(doc, phonology)?.pho)
}

/// Spearman correlation of the per-section `pho` profiles of source and
/// target. `Ok(None)` if either profile is constant.
pub fn phoneme_repetition_similarity(pair: &AlignedPair, phonology: &Phonology) -> Result<Option<f64>> {
    if pair.section_count() < 2 {
        return Err(Error::Domain(format!(
            "phoneme repetition similarity needs at least 2 sections, got {}",
            pair.section_count()
        )));
    }
    let a = section_pho_profile(pair.source(), phonology)?;
    let b = section_pho_profile(pair.target(), phonology)?;
    spearman(&a, &b)
}

/// `pho(X_i ⌢ X_j) + |pho(X_i) − pho(X_j)|`, concatenating in argument order.
pub fn section_dissimilarity(xi: &Section, xj: &Section, language: Language, phonology: &Phonology) -> Result<f64> {
    let joint = phoneme_distinct2(&[xi, xj], language, phonology)?.pho;
    let pi = phoneme_distinct2(&[xi], language, phonology)?.pho;
    let pj = phoneme_distinct2(&[xj], language, phonology)?.pho;
    Ok(joint + (pi - pj).abs())
}

/// `m × m` matrix of section dissimilarities. Cell `(i, j)` concatenates the
/// lower-indexed section first, so the matrix is exactly symmetric.
pub fn self_dissimilarity_matrix(doc: &LyricsDocument, phonology: &Phonology) -> Result<DissimilarityMatrix> {
    SectionStreams::new(doc, phonology)?.matrix()
}

/// `(1/m²) · sqrt(Σ_{i,j} (a_ij − b_ij)²)` over all ordered cells.
pub fn matrix_distance(a: &DissimilarityMatrix, b: &DissimilarityMatrix) -> Result<f64> {
    let m = a.size();
    if b.size() != m {
        return Err(Error::Domain(format!("matrix sizes differ ({m} vs {})", b.size())));
    }
    let sum: f64 = a
        .rows()
        .iter()
        .zip(b.rows())
        .flat_map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| (x - y) * (x - y)))
        .sum();
    Ok(sum.sqrt() / (m * m) as f64)
}

pub fn musical_structure_distance(pair: &AlignedPair, phonology: &Phonology) -> Result<f64> {
    let a = self_dissimilarity_matrix(pair.source(), phonology)?;
    let b = self_dissimilarity_matrix(pair.target(), phonology)?;
    matrix_distance(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyrics::SongMetadata;

    fn doc(sections: &[&[&str]]) -> LyricsDocument {
        LyricsDocument::new(
            Language::En,
            SongMetadata::new("t", Language::En),
            sections.iter().map(|s| Section::from_texts(s).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn injected_matrices() {
        let a = DissimilarityMatrix::from_entries(vec![vec![1.0, 0.8], vec![0.8, 0.9]]).unwrap();
        let b = DissimilarityMatrix::from_entries(vec![vec![1.0, 1.0], vec![1.0, 0.9]]).unwrap();
        let d = matrix_distance(&a, &b).unwrap();
        assert!((d - 0.25 * (2.0f64 * 0.04).sqrt()).abs() < 1e-12);
        assert!((d - 0.0707).abs() < 1e-4);
    }

    #[test]
    fn single_section_matrix() {
        let p = Phonology::standard();
        let d = doc(&[&["twinkle twinkle little star"]]);
        let m = self_dissimilarity_matrix(&d, &p).unwrap();
        let s = &d.sections()[0];
        let expected = phoneme_distinct2(&[s, s], Language::En, &p).unwrap().pho;
        assert_eq!(m.size(), 1);
        assert_eq!(m.get(0, 0), expected);
    }

    #[test]
    fn identical_sections_have_equal_entries() {
        let p = Phonology::standard();
        let d = doc(&[&["how I wonder what you are"], &["how I wonder what you are"]]);
        let m = self_dissimilarity_matrix(&d, &p).unwrap();
        assert_eq!(m.get(0, 1), m.get(0, 0));
        assert_eq!(m.get(1, 1), m.get(0, 0));
    }

    #[test]
    fn matrix_matches_pairwise_dissimilarity() {
        let p = Phonology::standard();
        let d = doc(&[
            &["la la la la"],
            &["do you wanna build a snowman"],
            &["come on let's go"],
        ]);
        let m = self_dissimilarity_matrix(&d, &p).unwrap();
        assert!(m.is_symmetric());
        for i in 0..3 {
            for j in i..3 {
                let s = d.sections();
                let v = section_dissimilarity(&s[i], &s[j], Language::En, &p).unwrap();
                assert!((m.get(i, j) - v).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn repetition_similarity_needs_two_sections() {
        let d = doc(&[&["la"]]);
        let ko = LyricsDocument::new(
            Language::Ko,
            d.metadata().clone(),
            vec![Section::from_texts(&["라"]).unwrap()],
        )
        .unwrap();
        let pair = crate::make_aligned_pair(d, ko, true).unwrap();
        assert!(phoneme_repetition_similarity(&pair, &Phonology::standard()).is_err());
    }
}
