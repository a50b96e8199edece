use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count the oracle handles.
pub const MAX_VERTICES: usize = 8;

/// Simple undirected graph on the vertices `0..n`, `n <= 8`, stored as one
/// neighbour bitmask per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    adj: [u8; MAX_VERTICES],
}

/// The unordered pairs `(i, j)`, `i < j < n`, in the order used by
/// [`SmallGraph::from_index`]: `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl SmallGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        Ok(SmallGraph { n, adj: [0; MAX_VERTICES] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (i, j) in pairs(n) {
            g.add_edge(i, j);
        }
        Ok(g)
    }

    /// The graph whose edge set is the bit pattern `index` over [`pairs`].
    pub fn from_index(n: usize, index: u64) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (bit, (i, j)) in pairs(n).enumerate() {
            if index >> bit & 1 == 1 {
                g.add_edge(i, j);
            }
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(i, j) in edges {
            if i == j || i >= n || j >= n {
                return Err(Error::Config(format!("bad edge ({i}, {j}) on {n} vertices")));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut g = Self::empty(a + b)?;
        for i in 0..a {
            for j in a..a + b {
                g.add_edge(i, j);
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> u64 {
        pairs(self.n).enumerate().filter(|&(_, (i, j))| self.has_edge(i, j)).map(|(bit, _)| 1u64 << bit).sum()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        debug_assert!(i != j && i < self.n && j < self.n);
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
    }

    pub fn with_edge(&self, i: usize, j: usize) -> Self {
        let mut g = *self;
        g.add_edge(i, j);
        g
    }

    pub fn neighbours(&self, v: usize) -> u8 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        pairs(self.n).filter(|&(i, j)| self.has_edge(i, j))
    }

    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        pairs(self.n).filter(|&(i, j)| !self.has_edge(i, j))
    }

    /// Bitmask of all vertices.
    pub fn vertex_mask(&self) -> u8 {
        ((1u16 << self.n) - 1) as u8
    }

    /// Vertices of `set` reachable from `start` inside the subgraph induced by `set`.
    pub fn reach_within(&self, start: usize, set: u8) -> u8 {
        let mut seen = 1u8 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & set & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    /// Whether the subgraph induced by the nonempty vertex set `set` is connected.
    pub fn is_connected_within(&self, set: u8) -> bool {
        set != 0 && self.reach_within(set.trailing_zeros() as usize, set) == set
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabelled(&self, perm: &[usize]) -> Self {
        let mut g = SmallGraph { n: self.n, adj: [0; MAX_VERTICES] };
        for (i, j) in self.edges() {
            g.add_edge(perm[i], perm[j]);
        }
        g
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n = {}, edges = {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_roundtrip() {
        for idx in [0u64, 1, 5, 0b101_1010, (1 << 15) - 1] {
            assert_eq!(SmallGraph::from_index(6, idx).unwrap().index(), idx);
        }
        assert_eq!(SmallGraph::complete(5).unwrap().edge_count(), 10);
        assert_eq!(SmallGraph::complete_bipartite(3, 3).unwrap().edge_count(), 9);
    }

    #[test]
    fn pair_order() {
        let p: Vec<_> = pairs(4).collect();
        assert_eq!(p, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]);
        assert_eq!(pair_count(8), 28);
    }

    #[test]
    fn induced_connectivity() {
        let path = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(path.is_connected_within(0b1111));
        assert!(!path.is_connected_within(0b1011));
        assert!(path.is_connected_within(0b0011));
    }

    #[test]
    fn too_large() {
        assert_eq!(SmallGraph::empty(9), Err(Error::TooLarge { n: 9, max: 8 }));
    }
}
