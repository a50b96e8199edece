//! Minor containment for graphs on at most eight vertices.
//!
//! A graph `G` has a minor `H` on six vertices iff its vertices can be split
//! into six disjoint connected branch sets (plus unused vertices) whose
//! quotient graph contains `H` as a subgraph. The search runs over these
//! splittings as unlabelled set partitions, of which there are at most 462
//! for `n = 8`, and answers the subgraph question from a table indexed by
//! the 15-bit edge pattern of the quotient.

use std::sync::OnceLock;

use super::graph::{pair_count, pairs, SmallGraph};
use crate::class::GraphClass;
use crate::error::{Error, Result};

const PARTS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Minor {
    K33,
    /// K33 with one extra edge inside a part.
    K33Plus,
}

impl Minor {
    pub fn graph(self) -> SmallGraph {
        let k33 = SmallGraph::complete_bipartite(3, 3).expect("six vertices");
        match self {
            Minor::K33 => k33,
            Minor::K33Plus => k33.with_edge(0, 1),
        }
    }

    /// `table[i]` says whether the six-vertex graph with index `i` contains
    /// this minor as a (labelled) subgraph.
    fn table(self) -> &'static [bool] {
        static K33: OnceLock<Vec<bool>> = OnceLock::new();
        static K33_PLUS: OnceLock<Vec<bool>> = OnceLock::new();
        let cell = match self {
            Minor::K33 => &K33,
            Minor::K33Plus => &K33_PLUS,
        };
        cell.get_or_init(|| containment_table(self.graph()))
    }
}

impl TryFrom<GraphClass> for Minor {
    type Error = Error;

    fn try_from(class: GraphClass) -> Result<Self> {
        match class {
            GraphClass::K33 => Ok(Minor::K33),
            GraphClass::K33Plus => Ok(Minor::K33Plus),
            GraphClass::Maximal => {
                Err(Error::Config("the maximal class is not defined by a single excluded minor".into()))
            }
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn containment_table(h: SmallGraph) -> Vec<bool> {
    let mut copies: Vec<u64> = permutations(PARTS).iter().map(|p| h.relabelled(p).index()).collect();
    copies.sort_unstable();
    copies.dedup();
    (0..1u64 << pair_count(PARTS)).map(|g| copies.iter().any(|&c| c & !g == 0)).collect()
}

struct Search<'a> {
    g: &'a SmallGraph,
    table: &'static [bool],
    blocks: [u8; PARTS],
    used: usize,
}

impl Search<'_> {
    fn assign(&mut self, v: usize) -> bool {
        let n = self.g.n();
        if n - v < PARTS - self.used {
            return false;
        }
        if v == n {
            return self.check();
        }
        // leave v unused
        if self.assign(v + 1) {
            return true;
        }
        for b in 0..self.used {
            self.blocks[b] |= 1 << v;
            let found = self.assign(v + 1);
            self.blocks[b] &= !(1 << v);
            if found {
                return true;
            }
        }
        if self.used < PARTS {
            self.blocks[self.used] = 1 << v;
            self.used += 1;
            let found = self.assign(v + 1);
            self.used -= 1;
            self.blocks[self.used] = 0;
            if found {
                return true;
            }
        }
        false
    }

    fn check(&self) -> bool {
        if !self.blocks.iter().all(|&b| self.g.is_connected_within(b)) {
            return false;
        }
        let mut reach = [0u8; PARTS];
        for (r, &b) in reach.iter_mut().zip(&self.blocks) {
            let mut m = b;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                *r |= self.g.neighbours(v);
            }
        }
        let mut index = 0usize;
        for (bit, (a, b)) in pairs(PARTS).enumerate() {
            if reach[a] & self.blocks[b] != 0 {
                index |= 1 << bit;
            }
        }
        self.table[index]
    }
}

/// Whether `g` has `h` as a minor.
pub fn has_minor(g: &SmallGraph, h: Minor) -> bool {
    if g.n() < PARTS || g.edge_count() < h.graph().edge_count() {
        return false;
    }
    Search { g, table: h.table(), blocks: [0; PARTS], used: 0 }.assign(0)
}

/// Whether adding any missing edge to the K33-minor-free graph `g` creates a
/// K33 minor.
pub fn is_maximal_k33_free(g: &SmallGraph) -> Result<bool> {
    if has_minor(g, Minor::K33) {
        return Err(Error::NotMinorFree);
    }
    Ok(g.non_edges().all(|(i, j)| has_minor(&g.with_edge(i, j), Minor::K33)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectivityClass {
    Disconnected,
    Connected,
    Biconnected,
}

pub fn classify_connectivity(g: &SmallGraph) -> ConnectivityClass {
    let all = g.vertex_mask();
    if !g.is_connected_within(all) {
        return ConnectivityClass::Disconnected;
    }
    let has_cut_vertex = (0..g.n()).any(|v| !g.is_connected_within(all & !(1 << v)));
    if g.n() >= 3 && !has_cut_vertex {
        ConnectivityClass::Biconnected
    } else {
        ConnectivityClass::Connected
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> SmallGraph {
        SmallGraph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn identity_and_small_cases() {
        let k33 = Minor::K33.graph();
        assert!(has_minor(&k33, Minor::K33));
        assert!(!has_minor(&k33, Minor::K33Plus));
        assert!(has_minor(&Minor::K33Plus.graph(), Minor::K33Plus));
        assert!(!has_minor(&SmallGraph::complete(5).unwrap(), Minor::K33));
        assert!(has_minor(&SmallGraph::complete(6).unwrap(), Minor::K33Plus));
    }

    #[test]
    fn subdivided_k33_has_the_minor() {
        // subdivide the edge (0, 3) of K33 with vertex 6, and (1, 4) with vertex 7
        let mut edges: Vec<_> = Minor::K33.graph().edges().filter(|&e| e != (0, 3) && e != (1, 4)).collect();
        edges.extend([(0, 6), (3, 6), (1, 7), (4, 7)]);
        assert!(has_minor(&graph(8, &edges), Minor::K33));
    }

    #[test]
    fn planar_graphs_are_free() {
        // octahedron and the 3-prism are planar
        let octahedron =
            graph(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (5, 3), (5, 4), (1, 2), (2, 3), (3, 4), (4, 1)]);
        assert!(!has_minor(&octahedron, Minor::K33));
        let prism = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]);
        assert!(!has_minor(&prism, Minor::K33));
        // the Wagner graph V8 is nonplanar with a K33 minor
        let mut v8: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        v8.extend((0..4).map(|i| (i, i + 4)));
        assert!(has_minor(&graph(8, &v8), Minor::K33));
    }

    #[test]
    fn maximality() {
        assert!(is_maximal_k33_free(&SmallGraph::complete(5).unwrap()).unwrap());
        let k5_minus =
            SmallGraph::from_edges(5, &SmallGraph::complete(5).unwrap().edges().skip(1).collect::<Vec<_>>()).unwrap();
        assert!(!is_maximal_k33_free(&k5_minus).unwrap());
        for n in 1..=4 {
            let k = SmallGraph::complete(n).unwrap();
            assert!(is_maximal_k33_free(&k).unwrap());
            for (i, j) in k.edges() {
                let minus = SmallGraph::from_edges(n, &k.edges().filter(|&e| e != (i, j)).collect::<Vec<_>>()).unwrap();
                assert!(!is_maximal_k33_free(&minus).unwrap());
            }
        }
        assert_eq!(is_maximal_k33_free(&Minor::K33.graph()), Err(Error::NotMinorFree));
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(classify_connectivity(&graph(3, &[(0, 1), (1, 2), (0, 2)])), ConnectivityClass::Biconnected);
        assert_eq!(classify_connectivity(&graph(3, &[(0, 1), (1, 2)])), ConnectivityClass::Connected);
        assert_eq!(classify_connectivity(&graph(2, &[])), ConnectivityClass::Disconnected);
        assert_eq!(classify_connectivity(&graph(2, &[(0, 1)])), ConnectivityClass::Connected);
    }

    #[test]
    fn containment_table_sizes() {
        let k33 = Minor::K33.table();
        assert_eq!(k33.len(), 1 << 15);
        assert!(k33[(1 << 15) - 1]);
        assert!(!k33[0]);
        // K33 has 6!/72 = 10 labelled copies on six fixed vertices
        let copies = permutations(6)
            .iter()
            .map(|p| Minor::K33.graph().relabelled(p).index())
            .collect::<std::collections::BTreeSet<_>>();
        assert_eq!(copies.len(), 10);
    }
}
