//! Slow two-dimensional continued fractions over real cubic number fields.
//!
//! Everything is computed in exact arithmetic: field elements are rational
//! coordinate triples over a pinned real root, digits are selected by
//! norm-weighted comparisons, and periodicity is detected by exact state
//! hashing. On top of the expansion sit a continued-fraction translation
//! layer, periodicity/Pisot analysis, and stepped-surface patch generation.

pub mod analysis;
pub mod cli;
pub mod contfrac;
pub mod error;
pub mod farey;
pub mod numberfield;
pub mod ratstr;
pub mod stepped;

pub use error::{Error, Result};
