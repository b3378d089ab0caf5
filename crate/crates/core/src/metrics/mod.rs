//! Syllable, repetition and structure metrics.

mod distinct;
mod report;
mod spearman;
mod structure;
mod syllable;

pub use distinct::{distinct2, phoneme_distinct2, section_stream, SectionPhoStats};
pub use report::{MetricOutcome, MetricReport, REPORT_SCHEMA_VERSION};
pub use spearman::{average_ranks, spearman};
pub use structure::{
    matrix_distance, musical_structure_distance, phoneme_repetition_similarity, section_dissimilarity,
    section_pho_profile, self_dissimilarity_matrix, DissimilarityMatrix,
};
pub use syllable::{line_syllable_count_distance, line_syllable_counts, syllable_count_distance};
