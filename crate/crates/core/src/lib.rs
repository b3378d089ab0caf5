//! Evaluation metrics for singable lyric translation between English,
//! Japanese and Korean.
//!
//! The crate computes four scores over a line- and section-aligned pair of
//! lyrics:
//!
//! - line syllable count distance ([`metrics::line_syllable_count_distance`])
//! - phoneme repetition similarity ([`metrics::phoneme_repetition_similarity`])
//! - musical structure distance ([`metrics::musical_structure_distance`])
//! - section-wise semantic similarity ([`semantics::semantic_similarity`])
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod lyrics;
pub mod metrics;
pub mod phonology;
pub mod render;
pub mod semantics;
pub mod stats;

pub use error::{Error, Result};
pub use lyrics::{
    make_aligned_pair, parse_document, AlignedPair, Language, Line, LyricsDocument, Section, SongMetadata,
};
pub use phonology::{Phoneme, PhonemeSequence, Phonology};
