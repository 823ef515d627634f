//! Simple graphs on at most 64 vertices, one `u64` neighbourhood mask per vertex.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// Iterate the set bits of a mask in ascending order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Mask with the low `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A finite simple graph. Vertices are `0..n`.
///
/// Rows above `n` are kept zero, so equality and hashing only look at the
/// first `n` rows.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_ORDER],
}

impl Graph {
    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::Capacity { order: n, max: MAX_ORDER });
        }
        Ok(Graph { n, adj: [0; MAX_ORDER] })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::OrderTooSmall { what: "cycle", order: n });
        }
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        Ok(g)
    }

    /// `K_{s,t}` with the `s` side on `0..s`.
    pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
        Graph::empty(s)?.join(&Graph::empty(t)?)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::Domain(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges, `e(G)`.
    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// `δ(G)`; zero for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn is_complete(&self) -> bool {
        self.size() == binom2(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u}, {v}) in order {}", self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge ({u}, {v}) in order {}", self.n);
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// `G - F`.
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.remove_edge(u, v);
        }
        g
    }

    /// Append a vertex adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: u64) -> Result<Graph> {
        if self.n >= MAX_ORDER {
            return Err(Error::Capacity { order: self.n + 1, max: MAX_ORDER });
        }
        debug_assert_eq!(nbrs & !self.vertex_mask(), 0);
        let mut g = self.clone();
        let v = self.n;
        g.n += 1;
        g.adj[v] = nbrs;
        for u in bits(nbrs) {
            g.adj[u] |= 1 << v;
        }
        Ok(g)
    }

    /// `Ḡ`.
    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & all & !(1 << v);
        }
        g
    }

    /// `G + H`: `self` on `0..|G|`, `other` shifted after it.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::Capacity { order: n, max: MAX_ORDER });
        }
        let mut g = Graph { n, adj: self.adj };
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// `G ∨ H`: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertex_mask();
        let right = other.vertex_mask() << self.n;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// `G[S]`, with the vertices of `S` renumbered in ascending order.
    pub fn induced_subgraph(&self, set: u64) -> Result<Graph> {
        if set & !self.vertex_mask() != 0 {
            let bad = (set & !self.vertex_mask()).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex: bad, order: self.n });
        }
        let verts: Vec<usize> = bits(set).collect();
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        Ok(g)
    }

    /// The graph whose vertex `i` is `self`'s vertex `order[i]`.
    pub fn relabel(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n);
        let mut inv = [0usize; MAX_ORDER];
        for (i, &v) in order.iter().enumerate() {
            inv[v] = i;
        }
        let mut g = Graph { n: self.n, adj: [0; MAX_ORDER] };
        for (i, &v) in order.iter().enumerate() {
            let mut row = 0u64;
            for u in bits(self.adj[v]) {
                row |= 1 << inv[u];
            }
            g.adj[i] = row;
        }
        g
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = self.degrees();
        d.sort_unstable();
        DegreeSequence(d)
    }

    /// Vertices reachable from `v` inside `within` (which must contain `v`).
    pub fn component_within(&self, v: usize, within: u64) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut rest = self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.component_within(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_within(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Whether `within` induces a connected subgraph (vacuously true when empty).
    pub fn is_connected_within(&self, within: u64) -> bool {
        within == 0 || self.component_within(within.trailing_zeros() as usize, within) == within
    }

    /// A proper 2-colouring of each component, or `None` if some component has an odd cycle.
    /// Returns one side mask per component (the side holding the component's smallest vertex).
    pub fn bipartition(&self) -> Option<Vec<(u64, u64)>> {
        let mut out = Vec::new();
        for comp in self.components() {
            let root = comp.trailing_zeros() as usize;
            let mut side = [1u64 << root, 0u64];
            let mut frontier = 1u64 << root;
            let mut parity = 0;
            let mut seen = frontier;
            while frontier != 0 {
                let mut next = 0;
                for u in bits(frontier) {
                    next |= self.adj[u];
                }
                if next & side[parity] != 0 {
                    return None;
                }
                next &= !seen;
                parity ^= 1;
                side[parity] |= next;
                seen |= next;
                frontier = next;
            }
            out.push((side[0], side[1]));
        }
        Some(out)
    }

    /// Whether the graph has a bipartition into two independent sets of size `part` each.
    pub fn is_balanced_bipartite(&self, part: usize) -> bool {
        if self.n != 2 * part {
            return false;
        }
        let Some(comps) = self.bipartition() else {
            return false;
        };
        // subset sum over the component orientations
        let mut reachable = vec![false; part + 1];
        reachable[0] = true;
        for (a, b) in comps {
            let (a, b) = (a.count_ones() as usize, b.count_ones() as usize);
            let mut next = vec![false; part + 1];
            for (s, &ok) in reachable.iter().enumerate() {
                if ok {
                    if s + a <= part {
                        next[s + a] = true;
                    }
                    if s + b <= part {
                        next[s + b] = true;
                    }
                }
            }
            reachable = next;
        }
        reachable[part]
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows() == other.rows()
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows().hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Degree sequence sorted non-decreasingly. [`DegreeSequence::d`] is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts the input; fails if some entry could not be a degree in a simple graph
    /// of this order or the sum is odd.
    pub fn new(mut degrees: Vec<usize>) -> Result<DegreeSequence> {
        degrees.sort_unstable();
        let n = degrees.len();
        if let Some(&max) = degrees.last() {
            if max >= n {
                return Err(Error::Domain(format!("degree {max} too large for order {n}")));
            }
        }
        if degrees.iter().sum::<usize>() % 2 == 1 {
            return Err(Error::Domain("degree sum is odd".into()));
        }
        Ok(DegreeSequence(degrees))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `d_i` for `1 ≤ i ≤ n`.
    #[inline]
    pub fn d(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_empty_is_complete() {
        assert_eq!(Graph::empty(3).unwrap().complement(), Graph::complete(3).unwrap());
    }

    #[test]
    fn join_sizes() {
        let g = Graph::complete(2).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!((g.order(), g.size()), (5, 7));
        let k2 = Graph::empty(1).unwrap().join(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
        for n in 2..10 {
            let kn = Graph::complete(1).unwrap().join(&Graph::complete(n - 1).unwrap()).unwrap();
            assert_eq!(kn, Graph::complete(n).unwrap());
            assert_eq!(kn.size(), binom2(n));
        }
    }

    #[test]
    fn join_over_capacity() {
        let a = Graph::empty(40).unwrap();
        assert!(matches!(a.join(&a), Err(Error::Capacity { order: 80, .. })));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn union_of_points() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.disjoint_union(&k1).unwrap(), Graph::empty(2).unwrap());
    }

    #[test]
    fn union_keeps_left_indices() {
        // K_{n-2} + K_1 as used by K_1 ∨ (K_{n-2} + K_1)
        let g = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.induced_subgraph(0b10101).unwrap(), Graph::complete(3).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.induced_subgraph(c5.vertex_mask()).unwrap(), c5);
        assert!(c5.induced_subgraph(1 << 7).is_err());
    }

    #[test]
    fn degree_sequence_of_k4() {
        let d = Graph::complete(4).unwrap().degree_sequence();
        assert_eq!(d.as_slice(), &[3, 3, 3, 3]);
        assert_eq!(d.d(1), 3);
    }

    #[test]
    fn degree_sequence_after_deleting_a_star_edge() {
        // K_4 ∨ K̄_3 minus one edge at an independent vertex (s=4, t=3, f=2)
        let g = Graph::complete(4).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        let h = g.without_edges(&[(0, 4)]);
        assert_eq!(h.degree_sequence().as_slice(), &[3, 4, 4, 5, 6, 6, 6]);
    }

    #[test]
    fn degree_sequence_rejects_bad_input() {
        assert!(DegreeSequence::new(vec![1, 1, 1]).is_err());
        assert!(DegreeSequence::new(vec![3, 1]).is_err());
        assert_eq!(DegreeSequence::new(vec![2, 1, 1]).unwrap().as_slice(), &[1, 1, 2]);
    }

    #[test]
    fn balanced_bipartite_detection() {
        assert!(Graph::cycle(6).unwrap().is_balanced_bipartite(3));
        assert!(!Graph::complete_bipartite(2, 4).unwrap().is_balanced_bipartite(3));
        // K_{1,2} + K_{2,1} + ... rebalanced by flipping components
        let g = Graph::complete_bipartite(1, 2)
            .unwrap()
            .disjoint_union(&Graph::complete_bipartite(1, 2).unwrap())
            .unwrap();
        assert!(g.is_balanced_bipartite(3));
        assert!(!Graph::cycle(5).unwrap().is_balanced_bipartite(3));
    }

    #[test]
    fn with_vertex_appends() {
        let g = Graph::path(3).unwrap().with_vertex(0b101).unwrap();
        assert_eq!(g, Graph::cycle(4).unwrap());
    }
}
