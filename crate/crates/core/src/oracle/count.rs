use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::graph::{pair_count, SmallGraph};
use super::minor::{classify_connectivity, has_minor, is_maximal_k33_free, ConnectivityClass, Minor};
use crate::class::GraphClass;
use crate::error::{Error, Result};

/// Largest `n` enumerated without an explicit opt-in.
pub const DEFAULT_MAX_N: usize = 7;

/// Labelled counts on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCounts {
    pub n: usize,
    pub class: GraphClass,
    /// All graphs in the class.
    pub g: u64,
    /// Connected ones.
    pub c: u64,
    /// 2-connected ones (at least three vertices, no cut vertex).
    pub b: u64,
    /// Maximal K33-minor-free graphs; only for the K33 class.
    pub m: Option<u64>,
}

#[derive(Default, Clone, Copy)]
struct Tally {
    g: u64,
    c: u64,
    b: u64,
    m: u64,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally { g: self.g + o.g, c: self.c + o.c, b: self.b + o.b, m: self.m + o.m }
    }
}

fn tally(g: &SmallGraph, minor: Minor, track_maximal: bool) -> Tally {
    if has_minor(g, minor) {
        return Tally::default();
    }
    let mut t = Tally { g: 1, ..Tally::default() };
    match classify_connectivity(g) {
        ConnectivityClass::Disconnected => {}
        ConnectivityClass::Connected => t.c = 1,
        ConnectivityClass::Biconnected => {
            t.c = 1;
            t.b = 1;
        }
    }
    if track_maximal && is_maximal_k33_free(g).expect("graph is K33-minor-free") {
        t.m = 1;
    }
    t
}

/// Enumerates all `2^(n choose 2)` labelled graphs on `n` vertices. `n = 8`
/// takes long and needs `allow_n8`. Runs on the current rayon pool.
pub fn count_all(n: usize, class: GraphClass, allow_n8: bool) -> Result<OracleCounts> {
    let max = if allow_n8 { 8 } else { DEFAULT_MAX_N };
    if n > max {
        return Err(Error::TooLarge { n, max });
    }
    let minor = Minor::try_from(class)?;
    let track_maximal = class == GraphClass::K33;
    let total = 1u64 << pair_count(n);
    let t = (0..total)
        .into_par_iter()
        .map(|idx| tally(&SmallGraph::from_index(n, idx).expect("n checked above"), minor, track_maximal))
        .reduce(Tally::default, Tally::merge);
    Ok(OracleCounts { n, class, g: t.g, c: t.c, b: t.b, m: track_maximal.then_some(t.m) })
}
