//! Brute-force ground truth: every labelled graph on at most eight vertices,
//! tested for K33 and K33+ minors, connectivity and maximality.

pub mod count;
pub mod graph;
pub mod minor;

pub use count::{count_all, OracleCounts};
pub use graph::SmallGraph;
pub use minor::{classify_connectivity, has_minor, is_maximal_k33_free, ConnectivityClass, Minor};
