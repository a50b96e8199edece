//! Exact enumeration and asymptotics for graphs without a K33 minor.
//!
//! The crate computes labelled counts of K33-minor-free graphs, of the
//! slightly larger K33+-minor-free class, and of maximal K33-minor-free graphs
//! from their generating functions with exact rational arithmetic. A
//! high-precision numeric layer evaluates the singular expansions behind the
//! growth constants and limit laws, and a brute-force oracle cross-checks
//! the counts for small `n`.

pub mod asymptotics;
pub mod class;
pub mod error;
pub mod maximal;
pub mod oracle;
pub mod series;
pub mod tower;

pub use error::{Error, Result};
