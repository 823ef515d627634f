//! Canonical labelling by individualisation-refinement.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, pick the first non-singleton cell, individualise each of its
//! vertices in turn and recurse. Every node carries an invariant (cell sizes
//! plus the quotient matrix of the equitable partition); a leaf is ranked by the
//! invariants along its path and then by the relabelled adjacency rows, and the
//! smallest leaf wins. Automorphisms discovered when two leaves tie are used to
//! skip children that lie in the same orbit of the pointwise stabiliser of the
//! current prefix.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{bits, Graph, MAX_ORDER};

/// Certificate of an isomorphism class: equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Result of a canonical labelling run.
#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    pub form: CanonicalForm,
    generators: Vec<Vec<u8>>,
}

impl CanonicalLabeling {
    /// Automorphisms found during the search, as vertex images.
    pub fn automorphisms(&self) -> impl Iterator<Item = &[u8]> {
        self.generators.iter().map(Vec::as_slice)
    }

    /// Orbit representatives under the group generated by the automorphisms
    /// that were found. This may be a proper subgroup of `Aut(G)`, so two
    /// vertices with different representatives can still be equivalent.
    pub fn known_orbits(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.order.len());
        for gen in &self.generators {
            for (v, &w) in gen.iter().enumerate() {
                uf.union(v, w as usize);
            }
        }
        (0..self.order.len()).map(|v| uf.find(v)).collect()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    Search::run(g, None)
}

/// Canonical labelling of a vertex-coloured graph. Isomorphisms must preserve
/// colours, and colour classes are placed in ascending colour order.
pub fn canonical_labeling_colored(g: &Graph, colors: &[u32]) -> CanonicalLabeling {
    assert_eq!(colors.len(), g.order());
    Search::run(g, Some(colors))
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g).order)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

/// Whether `u` and `v` lie in the same orbit of `Aut(g)`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    if g.degree(u) != g.degree(v) {
        return false;
    }
    let mut cu = vec![0u32; g.order()];
    let mut cv = cu.clone();
    cu[u] = 1;
    cv[v] = 1;
    canonical_labeling_colored(g, &cu).form == canonical_labeling_colored(g, &cv).form
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.0[v] != v {
            self.0[v] = self.0[self.0[v]];
            v = self.0[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Refine an ordered partition until it is equitable. Each cell is split by
/// the vector of neighbour counts into every current cell; the pieces keep the
/// position of their parent and are ordered by that vector.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut sig: Vec<u8> = Vec::new();
    let mut idx: Vec<usize> = Vec::new();
    loop {
        let k = cells.len();
        let mut out = Vec::with_capacity(g.order());
        for &c in cells.iter() {
            if c & (c - 1) == 0 {
                out.push(c);
                continue;
            }
            let verts: Vec<usize> = bits(c).collect();
            sig.clear();
            for &v in &verts {
                let row = g.neighbors(v);
                sig.extend(cells.iter().map(|&cell| (row & cell).count_ones() as u8));
            }
            idx.clear();
            idx.extend(0..verts.len());
            let key = |i: usize| &sig[i * k..(i + 1) * k];
            idx.sort_by(|&a, &b| key(a).cmp(key(b)));
            let mut piece = 1u64 << verts[idx[0]];
            for w in idx.windows(2) {
                if key(w[0]) != key(w[1]) {
                    out.push(piece);
                    piece = 0;
                }
                piece |= 1 << verts[w[1]];
            }
            out.push(piece);
        }
        let stable = out.len() == cells.len();
        *cells = out;
        if stable {
            return;
        }
    }
}

/// Cell sizes followed by the quotient matrix of an equitable partition.
fn node_invariant(g: &Graph, cells: &[u64]) -> Vec<u16> {
    let mut inv = Vec::with_capacity(cells.len() * (cells.len() + 1));
    inv.extend(cells.iter().map(|c| c.count_ones() as u16));
    for &c in cells {
        let rep = g.neighbors(c.trailing_zeros() as usize);
        inv.extend(cells.iter().map(|&d| (rep & d).count_ones() as u16));
    }
    inv
}

struct Best {
    trace: Vec<Vec<u16>>,
    prefix: Vec<usize>,
    rows: Vec<u64>,
    order: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    trace: Vec<Vec<u16>>,
    prefix: Vec<usize>,
    best: Option<Best>,
    generators: Vec<Vec<u8>>,
}

impl<'a> Search<'a> {
    fn run(g: &'a Graph, colors: Option<&[u32]>) -> CanonicalLabeling {
        let n = g.order();
        let mut cells = match colors {
            None if n == 0 => Vec::new(),
            None => vec![g.vertex_mask()],
            Some(colors) => {
                let mut classes: Vec<u32> = colors.to_vec();
                classes.sort_unstable();
                classes.dedup();
                classes
                    .iter()
                    .map(|&c| (0..n).filter(|&v| colors[v] == c).fold(0u64, |m, v| m | 1 << v))
                    .collect()
            }
        };
        refine(g, &mut cells);
        let mut search = Search {
            g,
            trace: Vec::new(),
            prefix: Vec::new(),
            best: None,
            generators: Vec::new(),
        };
        search.visit(cells);
        let best = search.best.expect("search tree has at least one leaf");

        let mut bytes = Vec::with_capacity(1 + n * n.div_ceil(8) + colors.map_or(0, |_| 4 * n));
        bytes.push(n as u8);
        for row in &best.rows {
            bytes.extend_from_slice(&row.to_le_bytes()[..n.div_ceil(8)]);
        }
        if let Some(colors) = colors {
            for &v in &best.order {
                bytes.extend_from_slice(&colors[v].to_be_bytes());
            }
        }
        CanonicalLabeling {
            order: best.order,
            form: CanonicalForm(bytes),
            generators: search.generators,
        }
    }

    fn compare_to_best(&self) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some(best) => {
                let d = self.trace.len();
                let theirs = &best.trace[..d.min(best.trace.len())];
                self.trace.as_slice().cmp(theirs)
            }
        }
    }

    /// Returns `Some(d)` when the caller should unwind to the node at depth `d`.
    fn visit(&mut self, cells: Vec<u64>) -> Option<usize> {
        self.trace.push(node_invariant(self.g, &cells));
        if self.compare_to_best() == Ordering::Greater {
            self.trace.pop();
            return None;
        }
        let depth = self.prefix.len();
        let mut unwind = None;
        match cells.iter().position(|&c| c & (c - 1) != 0) {
            None => unwind = self.leaf(&cells),
            Some(target) => {
                let mut tried: Vec<usize> = Vec::new();
                for u in bits(cells[target]) {
                    if !tried.is_empty() && self.equivalent_to_tried(u, &tried) {
                        continue;
                    }
                    tried.push(u);
                    let mut child = Vec::with_capacity(cells.len() + 1);
                    child.extend_from_slice(&cells[..target]);
                    child.push(1 << u);
                    child.push(cells[target] & !(1 << u));
                    child.extend_from_slice(&cells[target + 1..]);
                    refine(self.g, &mut child);
                    self.prefix.push(u);
                    let up = self.visit(child);
                    self.prefix.pop();
                    if let Some(d) = up {
                        if d < depth {
                            unwind = Some(d);
                            break;
                        }
                    }
                }
            }
        }
        self.trace.pop();
        unwind
    }

    fn equivalent_to_tried(&self, u: usize, tried: &[usize]) -> bool {
        let n = self.g.order();
        let mut uf: Option<UnionFind> = None;
        for gen in &self.generators {
            if self.prefix.iter().all(|&p| gen[p] as usize == p) {
                let uf = uf.get_or_insert_with(|| UnionFind::new(n));
                for (v, &w) in gen.iter().enumerate() {
                    uf.union(v, w as usize);
                }
            }
        }
        match uf {
            None => false,
            Some(mut uf) => {
                let ru = uf.find(u);
                tried.iter().any(|&t| uf.find(t) == ru)
            }
        }
    }

    /// A leaf that ties the best one yields an automorphism mapping the best
    /// path onto this one; everything below the point where the two paths
    /// diverge is then an image of an explored subtree.
    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut inv = [0usize; MAX_ORDER];
        for (i, &v) in order.iter().enumerate() {
            inv[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| bits(self.g.neighbors(v)).fold(0u64, |r, u| r | 1 << inv[u]))
            .collect();
        let ord = match &self.best {
            None => Ordering::Less,
            Some(best) => self
                .trace
                .cmp(&best.trace)
                .then_with(|| rows.cmp(&best.rows)),
        };
        match ord {
            Ordering::Less => {
                self.best = Some(Best {
                    trace: self.trace.clone(),
                    prefix: self.prefix.clone(),
                    rows,
                    order,
                });
                None
            }
            Ordering::Equal => {
                // best.order[i] -> order[i] is an automorphism
                let best = self.best.as_ref().expect("tie implies a best leaf");
                let mut gen = vec![0u8; order.len()];
                for (i, &v) in best.order.iter().enumerate() {
                    gen[v] = order[i] as u8;
                }
                if gen.iter().enumerate().any(|(v, &w)| v != w as usize) {
                    self.generators.push(gen);
                }
                let common = best
                    .prefix
                    .iter()
                    .zip(&self.prefix)
                    .take_while(|(a, b)| a == b)
                    .count();
                Some(common)
            }
            Ordering::Greater => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn relabelled_cycle() {
        let c5 = Graph::cycle(5).unwrap();
        let r = c5.relabel(&[3, 0, 4, 2, 1]);
        assert_ne!(c5, r);
        assert_eq!(canonical_form(&c5), canonical_form(&r));
    }

    #[test]
    fn pentagon_is_self_complementary() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&c5.complement()));
    }

    #[test]
    fn ore_extremal_graphs_differ() {
        let k1 = Graph::complete(1).unwrap();
        let a = k1.join(&Graph::complete(3).unwrap().disjoint_union(&k1).unwrap()).unwrap();
        let b = Graph::complete(2).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!((a.size(), b.size()), (7, 7));
        assert_ne!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn canonical_graph_is_fixed_point() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (0, 5)]).unwrap();
        let c = canonical_graph(&g);
        assert_eq!(canonical_graph(&c), c);
        assert_eq!(canonical_form(&c), canonical_form(&g));
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for n in [0, 1, 2, 12, 20, 64] {
            let k = Graph::complete(n).unwrap();
            let lab = canonical_labeling(&k);
            assert_eq!(lab.order.len(), n);
            let e = Graph::empty(n).unwrap();
            if n >= 2 {
                assert_ne!(canonical_form(&e), lab.form);
            }
        }
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        let shuffled = petersen.relabel(&[7, 2, 9, 0, 4, 1, 8, 3, 6, 5]);
        assert_eq!(canonical_form(&petersen), canonical_form(&shuffled));
    }

    #[test]
    fn orbits_of_a_path() {
        let p = Graph::path(5).unwrap();
        assert!(same_orbit(&p, 0, 4));
        assert!(same_orbit(&p, 1, 3));
        assert!(!same_orbit(&p, 0, 2));
        assert!(!same_orbit(&p, 1, 2));
    }

    #[test]
    fn colours_distinguish() {
        let p = Graph::path(3).unwrap();
        let a = canonical_labeling_colored(&p, &[1, 0, 0]).form;
        let b = canonical_labeling_colored(&p, &[0, 0, 1]).form;
        let c = canonical_labeling_colored(&p, &[0, 1, 0]).form;
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
