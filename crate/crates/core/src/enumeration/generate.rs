//! Isomorph-free generation of graphs by canonical vertex augmentation.
//!
//! A graph `H` on `m+1` vertices is accepted as a child of its parent `P`
//! (extended by a new last vertex `v`) iff `v` lies in the automorphism orbit
//! of the vertex that `H`'s canonical labelling places last. The parent of
//! every class is therefore determined up to isomorphism, and the only
//! duplicates left come from neighbourhoods of `v` that are equivalent under
//! `Aut(P)`; those are removed by canonical form within each parent.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_labeling, same_orbit, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{binom2, Graph};
use crate::hamiltonicity::{is_hamiltonian, is_traceable};
use crate::invariants::connectivity;

/// Orders up to which the subtree frontier is built serially before
/// work is split across threads.
const SEED_ORDER: usize = 6;

/// Hard ceiling on exhaustive generation.
pub const MAX_GENERATION_ORDER: usize = 12;

/// Largest order generated without any size bound unless forced.
pub const UNFILTERED_LIMIT: usize = 10;

/// Conjunctive filters on generated graphs. The default accepts everything.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GenFilter {
    pub min_size: Option<usize>,
    pub max_size: Option<usize>,
    pub connectivity_exact: Option<usize>,
    pub nonhamiltonian_only: bool,
    pub nontraceable_only: bool,
    /// Only graphs with a bipartition into two independent sets of this size.
    pub bipartite_balanced: Option<usize>,
}

impl GenFilter {
    pub(crate) fn size_bounds(&self) -> SizeBounds {
        SizeBounds { min: self.min_size, max: self.max_size }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        let e = g.size();
        if self.min_size.is_some_and(|m| e < m) || self.max_size.is_some_and(|m| e > m) {
            return false;
        }
        if let Some(part) = self.bipartite_balanced {
            if !g.is_balanced_bipartite(part) {
                return false;
            }
        }
        if let Some(k) = self.connectivity_exact {
            if g.order() == 0 || connectivity(g).kappa != k {
                return false;
            }
        }
        // orders below 3 have no Hamilton cycle
        if self.nonhamiltonian_only && is_hamiltonian(g).is_ok_and(|r| r.decision) {
            return false;
        }
        if self.nontraceable_only && is_traceable(g).is_ok_and(|r| r.decision) {
            return false;
        }
        true
    }
}

/// Execution knobs shared by the exhaustive routines.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Worker threads; 0 uses the rayon default.
    pub workers: usize,
    /// Lift the soft scale guards.
    pub force: bool,
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct SizeBounds {
    pub min: Option<usize>,
    pub max: Option<usize>,
}

impl SizeBounds {
    /// Whether some order-`n` descendant of a graph with `m` vertices and `e`
    /// edges can land inside the bounds. Descendants keep the graph as an
    /// induced subgraph, so they gain at most `binom(n,2) - binom(m,2)` edges.
    fn viable(&self, n: usize, m: usize, e: usize) -> bool {
        self.min.is_none_or(|lo| e + binom2(n) - binom2(m) >= lo) && self.max.is_none_or(|hi| e <= hi)
    }

    fn contains(&self, e: usize) -> bool {
        self.min.is_none_or(|lo| e >= lo) && self.max.is_none_or(|hi| e <= hi)
    }
}

/// Canonical children of `parent` (itself a canonical representative).
pub(crate) fn children(parent: &Graph) -> Vec<Graph> {
    let m = parent.order();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut out = Vec::new();
    let parent_max = parent.max_degree();
    for nbrs in 0u64..1 << m {
        let d = nbrs.count_ones() as usize;
        // the last canonical position always holds a vertex of maximum degree
        if d < parent_max {
            continue;
        }
        let h = parent.with_vertex(nbrs).expect("order checked by caller");
        if h.degree(m) != h.max_degree() {
            continue;
        }
        let lab = canonical_labeling(&h);
        let last = lab.order[m];
        let accept = last == m || {
            let orbits = lab.known_orbits();
            orbits[last] == orbits[m] || same_orbit(&h, last, m)
        };
        if accept && seen.insert(lab.form.clone()) {
            out.push(h.relabel(&lab.order));
        }
    }
    out
}

/// All canonical graphs of order `m`, built level by level from `K_1`.
fn level(m: usize, bounds: SizeBounds, target: usize) -> Vec<Graph> {
    let mut current = vec![Graph::empty(0).expect("order 0")];
    for order in 0..m {
        current = current
            .iter()
            .flat_map(children)
            .filter(|g| bounds.viable(target, order + 1, g.size()))
            .collect();
    }
    current
}

fn descend<A, F>(g: &Graph, n: usize, bounds: SizeBounds, acc: &mut A, visit: &F)
where
    F: Fn(&mut A, &Graph),
{
    if g.order() == n {
        if bounds.contains(g.size()) {
            visit(acc, g);
        }
        return;
    }
    for child in children(g) {
        if bounds.viable(n, child.order(), child.size()) {
            descend(&child, n, bounds, acc, visit);
        }
    }
}

pub(crate) fn with_pool<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        return job();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool")
        .install(job)
}

fn guard(n: usize, bounded: bool, force: bool) -> Result<()> {
    if n > MAX_GENERATION_ORDER {
        return Err(Error::ScaleGuard(format!(
            "exhaustive generation is capped at order {MAX_GENERATION_ORDER}, asked for {n}"
        )));
    }
    if n > UNFILTERED_LIMIT && !bounded && !force {
        return Err(Error::ScaleGuard(format!(
            "unfiltered generation of order {n} graphs exceeds the order-{UNFILTERED_LIMIT} limit"
        )));
    }
    Ok(())
}

/// Fold over every order-`n` isomorphism class whose size lies in `bounds`.
///
/// Subtrees hanging off the seed frontier are folded independently, one
/// accumulator each, and returned in frontier order, so the result does not
/// depend on the number of workers.
pub(crate) fn fold_classes<A, I, F>(
    n: usize,
    bounds: SizeBounds,
    opts: RunOptions,
    init: I,
    visit: F,
) -> Result<Vec<A>>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &Graph) + Sync + Send,
{
    guard(n, bounds.min.is_some(), opts.force)?;
    let seed_order = n.min(SEED_ORDER);
    let seeds = level(seed_order, bounds, n);
    Ok(with_pool(opts.workers, || {
        seeds
            .par_iter()
            .map(|s| {
                let mut acc = init();
                descend(s, n, bounds, &mut acc, &visit);
                acc
            })
            .collect()
    }))
}

/// Every isomorphism class of order-`n` graphs passing `filter`, as canonical
/// representatives sorted by canonical form.
pub fn generate_all(n: usize, filter: &GenFilter, opts: RunOptions) -> Result<Vec<Graph>> {
    let parts = fold_classes(n, filter.size_bounds(), opts, Vec::new, |acc: &mut Vec<Graph>, g| {
        if filter.accepts(g) {
            acc.push(g.clone());
        }
    })?;
    let mut all: Vec<(CanonicalForm, Graph)> = parts
        .into_iter()
        .flatten()
        .map(|g| (canonical_labeling(&g).form, g))
        .collect();
    all.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(all.into_iter().map(|(_, g)| g).collect())
}

/// Number of isomorphism classes of order-`n` graphs passing `filter`.
pub fn count_graphs(n: usize, filter: &GenFilter, opts: RunOptions) -> Result<u64> {
    let parts = fold_classes(n, filter.size_bounds(), opts, || 0u64, |acc, g| {
        if filter.accepts(g) {
            *acc += 1;
        }
    })?;
    Ok(parts.into_iter().sum())
}

/// Call `visitor` once per accepted class, from any worker thread, in no particular order.
pub fn for_each_graph<V>(n: usize, filter: &GenFilter, opts: RunOptions, visitor: V) -> Result<()>
where
    V: Fn(&Graph) + Sync + Send,
{
    fold_classes(n, filter.size_bounds(), opts, || (), |_, g| {
        if filter.accepts(g) {
            visitor(g);
        }
    })?;
    Ok(())
}
