//! Exact connectivity, independence number and degree sums over independent sets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, DegreeSequence, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityResult {
    pub kappa: usize,
    /// A separating set of size `kappa`; `None` for complete graphs.
    pub witness_cut: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceResult {
    pub alpha: usize,
    pub witness_set: Vec<usize>,
}

/// Unit-capacity flow on the vertex-split digraph: vertex `v` becomes
/// `in(v) = 2v` and `out(v) = 2v + 1` joined by a capacity-one arc, and each
/// edge `uv` becomes `out(u) -> in(v)` and `out(v) -> in(u)` with unbounded
/// capacity.
struct SplitNetwork {
    nodes: usize,
    base: Vec<i32>,
    cap: Vec<i32>,
    prev: Vec<usize>,
    queue: Vec<usize>,
}

const UNBOUNDED: i32 = 1 << 20;

impl SplitNetwork {
    fn new(g: &Graph) -> SplitNetwork {
        let n = g.order();
        let nodes = 2 * n;
        let mut base = vec![0; nodes * nodes];
        for v in 0..n {
            base[(2 * v) * nodes + 2 * v + 1] = 1;
            for u in bits(g.neighbors(v)) {
                base[(2 * v + 1) * nodes + 2 * u] = UNBOUNDED;
            }
        }
        SplitNetwork {
            nodes,
            cap: base.clone(),
            base,
            prev: vec![usize::MAX; nodes],
            queue: Vec::with_capacity(nodes),
        }
    }

    /// BFS in the residual graph from `src`; fills `prev` and reports whether
    /// `dst` was reached (`dst == usize::MAX` explores everything).
    fn bfs(&mut self, src: usize, dst: usize) -> bool {
        let m = self.nodes;
        self.prev.iter_mut().for_each(|p| *p = usize::MAX);
        self.prev[src] = src;
        self.queue.clear();
        self.queue.push(src);
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for y in 0..m {
                if self.prev[y] == usize::MAX && self.cap[x * m + y] > 0 {
                    self.prev[y] = x;
                    if y == dst {
                        return true;
                    }
                    self.queue.push(y);
                }
            }
        }
        false
    }

    /// Maximum number of internally disjoint `s`–`t` paths, stopping at `limit`.
    fn local_connectivity(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.cap.copy_from_slice(&self.base);
        let (src, dst) = (2 * s + 1, 2 * t);
        let m = self.nodes;
        let mut flow = 0;
        while flow < limit && self.bfs(src, dst) {
            let mut y = dst;
            while y != src {
                let x = self.prev[y];
                self.cap[x * m + y] -= 1;
                self.cap[y * m + x] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }

    /// After a maximum flow from `s`: vertices whose split arc crosses the cut.
    fn min_cut(&mut self, s: usize) -> Vec<usize> {
        self.bfs(2 * s + 1, usize::MAX);
        (0..self.nodes / 2)
            .filter(|&v| self.prev[2 * v] != usize::MAX && self.prev[2 * v + 1] == usize::MAX)
            .collect()
    }
}

/// Vertex connectivity `κ(G)` with a minimum separating set.
///
/// `κ(K_n) = n - 1`; a disconnected graph has `κ = 0` and an empty cut.
/// Local connectivities are only needed for pairs `(v_i, v_j)` with
/// `i ≤ κ`, since a minimum cut misses one of the first `κ + 1` vertices.
pub fn connectivity(g: &Graph) -> ConnectivityResult {
    let n = g.order();
    if g.is_complete() {
        return ConnectivityResult { kappa: n.saturating_sub(1), witness_cut: None };
    }
    if !g.is_connected() {
        return ConnectivityResult { kappa: 0, witness_cut: Some(Vec::new()) };
    }
    // δ bound: the neighbourhood of a non-universal vertex of minimum degree separates it
    let v = (0..n)
        .min_by_key(|&v| g.degree(v))
        .expect("non-complete graph has vertices");
    let mut best = g.degree(v);
    let mut cut: Vec<usize> = bits(g.neighbors(v)).collect();

    let mut net = SplitNetwork::new(g);
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let flow = net.local_connectivity(i, j, best);
            if flow < best {
                best = flow;
                cut = net.min_cut(i);
                debug_assert_eq!(cut.len(), best);
            }
        }
        i += 1;
    }
    ConnectivityResult { kappa: best, witness_cut: Some(cut) }
}

/// Whether removing `cut` leaves a disconnected graph (at least two vertices remaining).
pub fn separates(g: &Graph, cut: &[usize]) -> bool {
    let removed = cut.iter().fold(0u64, |m, &v| m | 1 << v);
    let rest = g.vertex_mask() & !removed;
    rest.count_ones() >= 2 && !g.is_connected_within(rest)
}

/// Independence number by branch and bound on candidate bitsets.
pub fn independence_number(g: &Graph) -> IndependenceResult {
    let mut best = 0u64;
    let mut best_len = 0;
    mis(g, g.vertex_mask(), 0, &mut best, &mut best_len);
    IndependenceResult { alpha: best_len, witness_set: bits(best).collect() }
}

/// Greedy clique cover of `cands`; each clique holds at most one vertex of an
/// independent set, so the number of cliques bounds what `cands` can add.
fn clique_cover_bound(g: &Graph, mut cands: u64) -> usize {
    let mut cliques = 0;
    while cands != 0 {
        let v = cands.trailing_zeros() as usize;
        let mut clique_room = g.neighbors(v) & cands;
        cands &= !(1 << v);
        while clique_room != 0 {
            let u = clique_room.trailing_zeros() as usize;
            cands &= !(1 << u);
            clique_room &= g.neighbors(u);
        }
        cliques += 1;
    }
    cliques
}

fn mis(g: &Graph, cands: u64, current: u64, best: &mut u64, best_len: &mut usize) {
    let size = current.count_ones() as usize;
    if cands == 0 {
        if size > *best_len {
            *best = current;
            *best_len = size;
        }
        return;
    }
    if size + cands.count_ones() as usize <= *best_len
        || size + clique_cover_bound(g, cands) <= *best_len
    {
        return;
    }
    // branch on a vertex of minimum degree inside the candidates
    let v = bits(cands)
        .min_by_key(|&v| (g.neighbors(v) & cands).count_ones())
        .expect("cands is nonempty");
    let nv = g.neighbors(v) & cands;
    mis(g, cands & !nv & !(1 << v), current | 1 << v, best, best_len);
    if nv.count_ones() <= 1 {
        // some maximum independent set contains a vertex of degree ≤ 1
        return;
    }
    mis(g, cands & !(1 << v), current, best, best_len);
}

/// `σ_s(G)`: the minimum degree sum over independent sets of exactly `s` vertices.
pub fn sigma_s(g: &Graph, s: usize) -> Result<usize> {
    let undefined = || Error::SigmaUndefined { s, alpha: independence_number(g).alpha };
    if s == 0 || s > g.order() {
        return Err(undefined());
    }
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let degs: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let mut best = None;
    sigma_search(g, &order, &degs, 0, s, 0, 0, &mut best);
    best.ok_or_else(undefined)
}

#[allow(clippy::too_many_arguments)]
fn sigma_search(
    g: &Graph,
    order: &[usize],
    degs: &[usize],
    from: usize,
    left: usize,
    chosen: u64,
    sum: usize,
    best: &mut Option<usize>,
) {
    if left == 0 {
        if best.is_none_or(|b| sum < b) {
            *best = Some(sum);
        }
        return;
    }
    let forbidden = bits(chosen).fold(chosen, |m, v| m | g.neighbors(v));
    for i in from..order.len() {
        if order.len() - i < left {
            return;
        }
        // cheapest completion from position i ignores independence, so it is a lower bound
        let bound: usize = sum + degs[i..i + left].iter().sum::<usize>();
        if best.is_some_and(|b| bound >= b) {
            return;
        }
        let v = order[i];
        if forbidden >> v & 1 == 1 {
            continue;
        }
        sigma_search(g, order, degs, i + 1, left - 1, chosen | 1 << v, sum + degs[i], best);
    }
}

/// Degree-sequence test that certifies `(k+1)`-connectivity: for every
/// `1 ≤ j ≤ n - 1 - d_{n-k}` require `d_j ≥ j + k`.
pub fn bondy_connectivity_condition(d: &DegreeSequence, k: usize) -> Result<bool> {
    let n = d.len();
    if n < 2 || k > n - 2 {
        return Err(Error::Domain(format!("need 0 ≤ k ≤ n-2, got k={k} with n={n}")));
    }
    let upper = (n - 1).saturating_sub(d.d(n - k));
    Ok((1..=upper).all(|j| d.d(j) >= j + k))
}
