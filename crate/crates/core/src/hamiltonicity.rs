//! Exact Hamilton cycle and path search, and the classical sufficient conditions.
//!
//! The sufficient conditions never call the exact solvers, so checking
//! "condition ⇒ hamiltonian" against the solver is a real test.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, DegreeSequence, Graph};
use crate::invariants::{connectivity, independence_number, sigma_s};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonicityResult {
    pub decision: bool,
    /// Hamilton cycle (closing edge implied) or path, present iff `decision`.
    pub witness: Option<Vec<usize>>,
}

impl HamiltonicityResult {
    fn no() -> Self {
        HamiltonicityResult { decision: false, witness: None }
    }

    fn yes(witness: Vec<usize>) -> Self {
        HamiltonicityResult { decision: true, witness: Some(witness) }
    }
}

/// Backtracking search for a Hamilton cycle through a fixed start vertex.
///
/// A node is the path `start .. end` covering `visited`; `rest` is everything
/// else. Pruning, all of which are necessary conditions for closing the cycle:
/// - `start` and `end` both still have a neighbour in `rest`;
/// - every vertex of `rest` has two neighbours in `rest ∪ {start, end}`;
/// - `rest` induces a connected subgraph;
/// - a vertex of `rest` whose only two options include `end` must be next.
///
/// Failed `(visited, end)` states are memoised.
struct CycleSearch<'a> {
    g: &'a Graph,
    all: u64,
    start: usize,
    path: Vec<usize>,
    failed: HashSet<(u64, u8)>,
}

impl CycleSearch<'_> {
    fn extend(&mut self, visited: u64, end: usize) -> bool {
        let g = self.g;
        let rest = self.all & !visited;
        if rest == 0 {
            return g.has_edge(end, self.start);
        }
        if self.failed.contains(&(visited, end as u8)) {
            return false;
        }
        let ends = 1u64 << end | 1u64 << self.start;
        let ok = g.neighbors(self.start) & rest != 0 && g.neighbors(end) & rest != 0;
        let mut forced = None;
        if ok && self.feasible(rest, ends, end, &mut forced) {
            let cands = match forced {
                Some(u) => vec![u],
                None => {
                    let mut c: Vec<usize> = bits(g.neighbors(end) & rest).collect();
                    c.sort_by_key(|&u| ((g.neighbors(u) & (rest | ends)).count_ones(), u));
                    c
                }
            };
            for u in cands {
                self.path.push(u);
                if self.extend(visited | 1 << u, u) {
                    return true;
                }
                self.path.pop();
            }
        }
        self.failed.insert((visited, end as u8));
        false
    }

    fn feasible(&self, rest: u64, ends: u64, end: usize, forced: &mut Option<usize>) -> bool {
        let g = self.g;
        let open_path = end != self.start;
        for u in bits(rest) {
            let avail = g.neighbors(u) & (rest | ends);
            let deg = avail.count_ones();
            if deg < 2 {
                return false;
            }
            if open_path && deg == 2 && avail >> end & 1 == 1 && rest.count_ones() > 1 {
                // u's cycle neighbours are exactly its two options, one being `end`
                if forced.replace(u).is_some() {
                    return false;
                }
            }
        }
        g.is_connected_within(rest)
    }
}

fn cycle_search(g: &Graph) -> HamiltonicityResult {
    let n = g.order();
    if g.min_degree() < 2 || !g.is_connected() {
        return HamiltonicityResult::no();
    }
    // a cycle alternates sides, so a bipartite graph needs equal parts
    if let Some(parts) = g.bipartition() {
        if parts.iter().any(|(a, b)| a.count_ones() != b.count_ones()) {
            return HamiltonicityResult::no();
        }
    }
    let start = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("n ≥ 3");
    let mut search = CycleSearch {
        g,
        all: g.vertex_mask(),
        start,
        path: vec![start],
        failed: HashSet::new(),
    };
    if search.extend(1 << start, start) {
        HamiltonicityResult::yes(search.path)
    } else {
        HamiltonicityResult::no()
    }
}

/// Exact Hamilton cycle decision with a witness cycle.
pub fn is_hamiltonian(g: &Graph) -> Result<HamiltonicityResult> {
    if g.order() < 3 {
        return Err(Error::OrderTooSmall { what: "a Hamilton cycle", order: g.order() });
    }
    Ok(cycle_search(g))
}

/// Exact Hamilton path decision via the cone `G ∨ K_1`: `G` is traceable iff
/// its cone is hamiltonian, and deleting the apex from the cycle gives the path.
pub fn is_traceable(g: &Graph) -> Result<HamiltonicityResult> {
    let n = g.order();
    match n {
        0 => return Err(Error::OrderTooSmall { what: "a Hamilton path", order: 0 }),
        1 => return Ok(HamiltonicityResult::yes(vec![0])),
        _ => {}
    }
    let cone = g.join(&Graph::complete(1)?)?;
    let res = cycle_search(&cone);
    Ok(match res.witness {
        None => HamiltonicityResult::no(),
        Some(cycle) => {
            let apex = cycle.iter().position(|&v| v == n).expect("cycle covers the apex");
            let path: Vec<usize> = cycle[apex + 1..].iter().chain(&cycle[..apex]).copied().collect();
            HamiltonicityResult::yes(path)
        }
    })
}

/// Direct Hamilton path backtracking, independent of the cone reduction.
pub fn find_hamilton_path(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    if !g.is_connected() {
        return None;
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= 1).collect();
    if leaves.len() > 2 {
        return None;
    }
    // a vertex of degree ≤ 1 has to be an end
    let starts: Vec<usize> = if leaves.is_empty() { (0..n).collect() } else { vec![leaves[0]] };
    let mut failed = HashSet::new();
    for s in starts {
        let mut path = vec![s];
        if path_extend(g, g.vertex_mask(), 1 << s, s, &mut path, &mut failed) {
            return Some(path);
        }
    }
    None
}

fn path_extend(
    g: &Graph,
    all: u64,
    visited: u64,
    end: usize,
    path: &mut Vec<usize>,
    failed: &mut HashSet<(u64, u8)>,
) -> bool {
    let rest = all & !visited;
    if rest == 0 {
        return true;
    }
    if failed.contains(&(visited, end as u8)) {
        return false;
    }
    if g.is_connected_within(rest) {
        for u in bits(g.neighbors(end) & rest) {
            path.push(u);
            if path_extend(g, all, visited | 1 << u, u, path, failed) {
                return true;
            }
            path.pop();
        }
    }
    failed.insert((visited, end as u8));
    false
}

/// Hamilton cycle search for a balanced bipartite graph with one side given by
/// `side`. The walk alternates sides, so each step only looks at the opposite
/// part; unbalanced or non-bipartite input is rejected.
pub fn is_hamiltonian_bipartite(g: &Graph, side: u64) -> Result<HamiltonicityResult> {
    let all = g.vertex_mask();
    let other = all & !side;
    if side & !all != 0 {
        return Err(Error::Domain("side mask has bits outside the vertex set".into()));
    }
    if bits(side).any(|v| g.neighbors(v) & side != 0) || bits(other).any(|v| g.neighbors(v) & other != 0) {
        return Err(Error::Domain("graph is not bipartite with the given sides".into()));
    }
    if g.order() < 4 {
        return Err(Error::OrderTooSmall { what: "a bipartite Hamilton cycle", order: g.order() });
    }
    if side.count_ones() != other.count_ones() || g.min_degree() < 2 {
        return Ok(HamiltonicityResult::no());
    }
    let start = bits(side).min_by_key(|&v| (g.degree(v), v)).expect("side is nonempty");
    let mut path = vec![start];
    let mut failed = HashSet::new();
    if bipartite_extend(g, all, start, 1 << start, start, &mut path, &mut failed) {
        Ok(HamiltonicityResult::yes(path))
    } else {
        Ok(HamiltonicityResult::no())
    }
}

fn bipartite_extend(
    g: &Graph,
    all: u64,
    start: usize,
    visited: u64,
    end: usize,
    path: &mut Vec<usize>,
    failed: &mut HashSet<(u64, u8)>,
) -> bool {
    let rest = all & !visited;
    if rest == 0 {
        return g.has_edge(end, start);
    }
    if failed.contains(&(visited, end as u8)) {
        return false;
    }
    let ends = 1u64 << start | 1u64 << end;
    let viable = g.neighbors(start) & rest != 0
        && bits(rest).all(|u| (g.neighbors(u) & (rest | ends)).count_ones() >= 2)
        && g.is_connected_within(rest);
    if viable {
        // neighbours of `end` all lie on the opposite side
        for u in bits(g.neighbors(end) & rest) {
            path.push(u);
            if bipartite_extend(g, all, start, visited | 1 << u, u, path, failed) {
                return true;
            }
            path.pop();
        }
    }
    failed.insert((visited, end as u8));
    false
}

/// Whether `witness` is a Hamilton cycle of `g`.
pub fn validate_cycle(g: &Graph, witness: &[usize]) -> bool {
    validate_path(g, witness)
        && witness.len() >= 3
        && g.has_edge(witness[0], witness[witness.len() - 1])
}

/// Whether `witness` is a Hamilton path of `g`.
pub fn validate_path(g: &Graph, witness: &[usize]) -> bool {
    let n = g.order();
    let mut seen = 0u64;
    witness.len() == n
        && witness.iter().all(|&v| v < n && seen & 1 << v == 0 && {
            seen |= 1 << v;
            true
        })
        && witness.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

fn need_three(g_order: usize, what: &'static str) -> Result<()> {
    if g_order < 3 {
        Err(Error::OrderTooSmall { what, order: g_order })
    } else {
        Ok(())
    }
}

/// `δ(G) ≥ n/2`.
pub fn dirac_condition(g: &Graph) -> Result<bool> {
    need_three(g.order(), "the Dirac condition")?;
    Ok(2 * g.min_degree() >= g.order())
}

/// True iff no `k` with `1 ≤ k < n/2` has `d_k ≤ k` and `d_{n-k} < n-k`.
pub fn chvatal_condition(d: &DegreeSequence) -> Result<bool> {
    let n = d.len();
    need_three(n, "the Chvátal condition")?;
    Ok(!(1..n).take_while(|&k| 2 * k < n).any(|k| d.d(k) <= k && d.d(n - k) < n - k))
}

/// `κ(G) ≥ α(G)`.
pub fn chvatal_erdos_condition(g: &Graph) -> Result<bool> {
    need_three(g.order(), "the Chvátal–Erdős condition")?;
    Ok(connectivity(g).kappa >= independence_number(g).alpha)
}

/// Degree-sum condition over independent sets for a `k`-connected graph with
/// `2 ≤ k < α(G)`: every `p` in `k..α(G)` must have `σ_{p+1}(G) ≥ n + p² - p`.
///
/// Any `k ≤ κ(G)` in that range is accepted.
pub fn ota_condition(g: &Graph, k: usize) -> Result<bool> {
    let n = g.order();
    need_three(n, "the Ota condition")?;
    let alpha = independence_number(g).alpha;
    if k < 2 || k >= alpha {
        return Err(Error::Precondition(format!("need 2 ≤ k < α(G) = {alpha}, got k = {k}")));
    }
    let kappa = connectivity(g).kappa;
    if kappa < k {
        return Err(Error::Precondition(format!("graph is only {kappa}-connected, k = {k}")));
    }
    for p in k..alpha {
        if sigma_s(g, p + 1)? < n + p * p - p {
            return Ok(false);
        }
    }
    Ok(true)
}
