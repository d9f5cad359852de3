//! Simple finite undirected graphs on at most 128 vertices, with compact
//! bitset vertex sets.
//!
//! Vertices are always labelled `0..n-1`. Adjacency is stored as one `u128`
//! neighbor mask per vertex, which keeps the inner loops of the exact solvers
//! (closures, subset sweeps, schedule replay) branch-free.

use std::fmt;
use thiserror::Error;

/// Hard cap on graph order imposed by the `u128` bitset representation.
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph of order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order {0} exceeds supported maximum {1}")]
    TooLarge(usize, usize),
}

/// A subset of `{0..127}`, used for blue sets, white components, deletions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u128 {
        self.0
    }

    /// All of `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Iterates members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Lowest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Space-separated member list, e.g. `"0 3 5"`.
    pub fn to_space_list(self) -> String {
        let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        parts.join(" ")
    }

    /// Comma-separated member list, e.g. `"0,3,5"` (empty string for the empty set).
    pub fn to_compact_string(self) -> String {
        let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        parts.join(",")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl std::ops::BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_compact_string())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_compact_string())
    }
}

/// Iterates every subset of `{0..n-1}` with exactly `k` members, in increasing
/// numeric (bitmask) order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    debug_assert!(n <= MAX_VERTICES);
    let limit: u128 = if n == MAX_VERTICES {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let mut cur: Option<u128> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u128 << k) - 1)
    };
    std::iter::from_fn(move || {
        let bits = cur?;
        if bits > limit {
            cur = None;
            return None;
        }
        // Gosper's hack for the next bitmask with the same popcount.
        cur = if bits == 0 {
            None
        } else {
            let c = bits & bits.wrapping_neg();
            let r = bits + c;
            if r == 0 {
                None
            } else {
                Some((((r ^ bits) >> 2) / c) | r)
            }
        };
        Some(VertexSet(bits))
    })
}

/// A simple, finite, undirected graph with vertex set `0..n-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u128>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n, MAX_VERTICES));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1u128 << v;
        self.adj[v] |= 1u128 << u;
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1u128 << v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Induced subgraph on `keep`. Returns the subgraph and the map from new
    /// labels to old labels (`map[new] = old`).
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut g = Graph {
            n: map.len(),
            adj: vec![0; map.len()],
        };
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1u128 << j;
                    g.adj[j] |= 1u128 << i;
                }
            }
        }
        (g, map)
    }

    /// Graph obtained by deleting `del`; same return convention as [`Graph::induced`].
    pub fn delete_vertices(&self, del: VertexSet) -> (Graph, Vec<usize>) {
        self.induced(self.vertices() - del)
    }

    /// Connected components of the induced subgraph on `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within & self.vertices();
        let mut out = Vec::new();
        while let Some(seed) = remaining.first() {
            let mut comp = VertexSet::singleton(seed);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next |= self.neighbors(v) & within;
                }
                frontier = next - comp;
                comp |= next;
            }
            out.push(comp);
            remaining = remaining - comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components_within(self.vertices()).len() == 1
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            let (pu, pv) = (perm[u], perm[v]);
            g.adj[pu] |= 1u128 << pv;
            g.adj[pv] |= 1u128 << pu;
        }
        g
    }

    // --- stock constructors -------------------------------------------------

    pub fn empty_graph(n: usize) -> Graph {
        Graph::new(n).expect("order within bounds")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("valid complete graph")
    }

    /// Star with `leaves` leaves; vertex 0 is the center.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("valid star")
    }

    /// 2 x m grid; vertex (r, c) is labelled `r * m + c`.
    pub fn grid_2xm(m: usize) -> Graph {
        let mut edges = Vec::new();
        for c in 0..m {
            edges.push((c, m + c));
            if c + 1 < m {
                edges.push((c, c + 1));
                edges.push((m + c, m + c + 1));
            }
        }
        Graph::from_edges(2 * m, &edges).expect("valid grid")
    }

    /// Disjoint union of `k` copies of K2.
    pub fn matching(k: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
        Graph::from_edges(2 * k, &edges).expect("valid matching")
    }

    /// Tree on `seq.len() + 2` vertices built from a Pruefer sequence.
    pub fn tree_from_pruefer(seq: &[usize]) -> Graph {
        let n = seq.len() + 2;
        let mut degree = vec![1usize; n];
        for &v in seq {
            degree[v] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut deg = degree.clone();
        for &v in seq {
            let leaf = (0..n).find(|&u| deg[u] == 1).expect("leaf exists");
            edges.push((leaf, v));
            deg[leaf] = 0;
            deg[v] -= 1;
        }
        let last: Vec<usize> = (0..n).filter(|&u| deg[u] == 1).collect();
        edges.push((last[0], last[1]));
        Graph::from_edges(n, &edges).expect("valid tree")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::EMPTY;
        s.insert(0);
        s.insert(5);
        assert!(s.contains(0) && s.contains(5) && !s.contains(3));
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 5]);
        assert_eq!(s.to_space_list(), "0 5");
        assert!(s.is_subset_of(VertexSet::full(6)));
        assert!(!VertexSet::full(6).is_subset_of(s));
    }

    #[test]
    fn subsets_enumeration_order_and_count() {
        let subs: Vec<VertexSet> = subsets_of_size(4, 2).collect();
        assert_eq!(subs.len(), 6);
        assert_eq!(subs[0], VertexSet::from_bits(0b0011));
        assert_eq!(subs[5], VertexSet::from_bits(0b1100));
        assert_eq!(subsets_of_size(5, 0).count(), 1);
        assert_eq!(subsets_of_size(5, 5).count(), 1);
        assert_eq!(subsets_of_size(5, 6).count(), 0);
    }

    #[test]
    fn graph_invariants_enforced() {
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        assert_eq!(g.add_edge(0, 7), Err(GraphError::VertexOutOfRange(7, 3)));
        g.add_edge(0, 1).unwrap();
        assert!(g.has_edge(1, 0), "adjacency is symmetric");
        assert_eq!(Graph::new(200).unwrap_err(), GraphError::TooLarge(200, 128));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::path(5);
        let (h, map) = g.induced(VertexSet::from_iter([1, 2, 4]));
        assert_eq!(h.order(), 3);
        assert_eq!(map, vec![1, 2, 4]);
        assert!(h.has_edge(0, 1));
        assert!(!h.has_edge(1, 2));
    }

    #[test]
    fn components_split_correctly() {
        let g = Graph::matching(2);
        let comps = g.components_within(g.vertices());
        assert_eq!(comps.len(), 2);
        let g = Graph::path(4);
        // removing vertex 1 separates 0 from {2,3}
        let comps = g.components_within(g.vertices().without(1));
        assert_eq!(comps.len(), 2);
    }

    #[test]
    fn stock_constructors() {
        assert_eq!(Graph::path(4).size(), 3);
        assert_eq!(Graph::cycle(5).size(), 5);
        assert_eq!(Graph::complete(4).size(), 6);
        assert_eq!(Graph::star(3).size(), 3);
        assert_eq!(Graph::grid_2xm(3).size(), 7);
        let t = Graph::tree_from_pruefer(&[0, 0]);
        assert_eq!(t.order(), 4);
        assert_eq!(t.size(), 3);
        assert_eq!(t.degree(0), 3, "pruefer sequence [0,0] is a star at 0");
        assert!(t.is_connected());
    }

    #[test]
    fn zero_vertex_graph_is_legal() {
        let g = Graph::empty_graph(0);
        assert_eq!(g.order(), 0);
        assert_eq!(g.edges(), vec![]);
        assert!(g.is_connected());
    }
}
