//! Exhaustive property sweeps: edge deletion in complete-split joins, and
//! soundness of the sufficient conditions against the exact solvers.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use super::generate::{fold_classes, RunOptions, SizeBounds};
use crate::error::{Error, Result};
use crate::formulas::{f, f_domain};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::hamiltonicity::{chvatal_condition, chvatal_erdos_condition, dirac_condition, is_hamiltonian, ota_condition};
use crate::invariants::{bondy_connectivity_condition, connectivity, independence_number};

/// Edge subsets enumerated without `force`.
pub const SUBSET_LIMIT: u128 = 5_000_000;
/// Largest sweep order without `force`.
pub const SWEEP_DEFAULT_LIMIT: usize = 8;
/// Largest sweep order at all.
pub const SWEEP_FORCED_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JoinTemplate {
    /// `K_s ∨ K̄_t`
    Plain,
    /// `K_s ∨ (K_2 + K̄_t)`
    PlusK2,
}

impl JoinTemplate {
    pub fn name(self) -> &'static str {
        match self {
            JoinTemplate::Plain => "plain",
            JoinTemplate::PlusK2 => "plus_k2",
        }
    }

    /// The join, with the clique on `0..s` and the independent part last.
    pub fn build(self, s: usize, t: usize) -> Result<Graph> {
        let right = match self {
            JoinTemplate::Plain => Graph::empty(t)?,
            JoinTemplate::PlusK2 => Graph::complete(2)?.disjoint_union(&Graph::empty(t)?)?,
        };
        Graph::complete(s)?.join(&right)
    }

    /// Vertices of the independent part `K̄_t` in [`JoinTemplate::build`].
    pub fn independent_part(self, s: usize, t: usize) -> std::ops::Range<usize> {
        let start = match self {
            JoinTemplate::Plain => s,
            JoinTemplate::PlusK2 => s + 2,
        };
        start..start + t
    }
}

impl fmt::Display for JoinTemplate {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(self.name())
    }
}

impl FromStr for JoinTemplate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(JoinTemplate::Plain),
            "plus_k2" | "plus-k2" => Ok(JoinTemplate::PlusK2),
            _ => Err(Error::Domain(format!("unknown template {s:?} (expected plain or plus_k2)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionCounterexample {
    pub removed: Vec<(usize, usize)>,
    pub kappa: usize,
    pub common_vertex: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionReport {
    pub s: usize,
    pub t: usize,
    pub template: JoinTemplate,
    pub f: usize,
    pub edges: usize,
    pub subsets_checked: u64,
    /// Subsets on which `κ(G - F) = s - f`.
    pub equality_cases: u64,
    pub holds: bool,
    pub counterexample: Option<DeletionCounterexample>,
}

impl fmt::Display for DeletionReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "target: lemma7")?;
        writeln!(out, "s: {}", self.s)?;
        writeln!(out, "t: {}", self.t)?;
        writeln!(out, "template: {}", self.template)?;
        writeln!(out, "f: {}", self.f)?;
        writeln!(out, "edges: {}", self.edges)?;
        writeln!(out, "subsets_checked: {}", self.subsets_checked)?;
        writeln!(out, "equality_cases: {}", self.equality_cases)?;
        if let Some(c) = &self.counterexample {
            let removed = c.removed.iter().map(|(u, v)| format!("{u}-{v}")).join(" ");
            writeln!(out, "counterexample: removed {removed}; kappa {}; common_vertex {}", c.kappa, c.common_vertex)?;
        }
        writeln!(out, "agrees: {}", self.holds)
    }
}

fn binom(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    (0..r as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// For every `f`-subset `F` of the edges of the join: `κ(G - F) ≥ s - f`,
/// with equality exactly when all of `F` meets one common vertex of `K̄_t`.
pub fn verify_lemma7(s: usize, t: usize, template: JoinTemplate, f: usize, opts: RunOptions) -> Result<DeletionReport> {
    if s < 1 || t < 2 || f > s {
        return Err(Error::Domain(format!("need s ≥ 1, t ≥ 2 and f ≤ s, got s={s} t={t} f={f}")));
    }
    let g = template.build(s, t)?;
    let edges = g.edges();
    let subsets = binom(edges.len(), f);
    if subsets > SUBSET_LIMIT && !opts.force {
        return Err(Error::ScaleGuard(format!("{subsets} edge subsets exceed {SUBSET_LIMIT}")));
    }
    let indep = template.independent_part(s, t);
    let mut report = DeletionReport {
        s,
        t,
        template,
        f,
        edges: edges.len(),
        subsets_checked: 0,
        equality_cases: 0,
        holds: true,
        counterexample: None,
    };
    for removed in edges.iter().copied().combinations(f) {
        report.subsets_checked += 1;
        let h = g.without_edges(&removed);
        let kappa = connectivity(&h).kappa;
        let common = indep.clone().any(|w| removed.iter().all(|&(u, v)| u == w || v == w));
        let bad = kappa + f < s || (kappa + f == s) != common;
        if kappa + f == s {
            report.equality_cases += 1;
        }
        if bad {
            report.holds = false;
            report.counterexample = Some(DeletionCounterexample { removed, kappa, common_vertex: common });
            break;
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConditionTally {
    pub condition: String,
    /// Graphs (or graph/parameter pairs) the condition was evaluated on.
    pub evaluated: u64,
    pub fired: u64,
    /// Fired although the conclusion fails.
    pub violations: u64,
    /// Silent although the conclusion holds.
    pub silent_but_true: u64,
    /// Graphs outside the condition's precondition.
    pub excluded: u64,
}

impl ConditionTally {
    fn named(name: &str) -> Self {
        ConditionTally { condition: name.to_string(), ..Default::default() }
    }

    fn record(&mut self, fired: bool, conclusion: bool) {
        self.evaluated += 1;
        self.fired += fired as u64;
        self.violations += (fired && !conclusion) as u64;
        self.silent_but_true += (!fired && conclusion) as u64;
    }

    fn absorb(&mut self, other: &ConditionTally) {
        self.evaluated += other.evaluated;
        self.fired += other.fired;
        self.violations += other.violations;
        self.silent_but_true += other.silent_but_true;
        self.excluded += other.excluded;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoundnessReport {
    pub n_max: usize,
    /// `(order, classes)` for each order swept.
    pub classes: Vec<(usize, u64)>,
    pub tallies: Vec<ConditionTally>,
    /// `condition graph6` for each violation, in sweep order.
    pub violating_graphs: Vec<String>,
    pub sound: bool,
}

impl fmt::Display for SoundnessReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "target: conditions")?;
        writeln!(out, "n_max: {}", self.n_max)?;
        for (n, c) in &self.classes {
            writeln!(out, "classes n={n}: {c}")?;
        }
        for t in &self.tallies {
            writeln!(
                out,
                "{}: evaluated {} fired {} violations {} silent_but_true {} excluded {}",
                t.condition, t.evaluated, t.fired, t.violations, t.silent_but_true, t.excluded
            )?;
        }
        for v in &self.violating_graphs {
            writeln!(out, "violation: {v}")?;
        }
        writeln!(out, "agrees: {}", self.sound)
    }
}

const CONDITIONS: [&str; 5] = ["dirac", "chvatal", "chvatal_erdos", "ota", "bondy"];

#[derive(Clone)]
struct Sweep {
    classes: u64,
    tallies: Vec<ConditionTally>,
    violating: Vec<String>,
}

impl Sweep {
    fn new() -> Self {
        Sweep { classes: 0, tallies: CONDITIONS.iter().map(|c| ConditionTally::named(c)).collect(), violating: Vec::new() }
    }

    fn note(&mut self, idx: usize, g: &Graph, fired: bool, conclusion: bool) {
        self.tallies[idx].record(fired, conclusion);
        if fired && !conclusion {
            self.violating.push(format!("{} {}", CONDITIONS[idx], encode_graph6(g)));
        }
    }

    fn visit(&mut self, g: &Graph) -> Result<()> {
        self.classes += 1;
        let n = g.order();
        let kappa = connectivity(g).kappa;
        let degrees = g.degree_sequence();
        if n >= 2 {
            for k in 0..=n - 2 {
                self.note(4, g, bondy_connectivity_condition(&degrees, k)?, kappa > k);
            }
        }
        if n < 3 {
            return Ok(());
        }
        let ham = is_hamiltonian(g)?.decision;
        self.note(0, g, dirac_condition(g)?, ham);
        self.note(1, g, chvatal_condition(&degrees)?, ham);
        self.note(2, g, chvatal_erdos_condition(g)?, ham);
        let alpha = independence_number(g).alpha;
        let ks: Vec<usize> = (2..=kappa).take_while(|&k| k < alpha).collect();
        if ks.is_empty() {
            self.tallies[3].excluded += 1;
        }
        for k in ks {
            self.note(3, g, ota_condition(g, k)?, ham);
        }
        Ok(())
    }
}

fn sweep_guard(what: &str, n_max: usize, opts: RunOptions) -> Result<()> {
    if n_max > SWEEP_FORCED_LIMIT || (n_max > SWEEP_DEFAULT_LIMIT && !opts.force) {
        return Err(Error::ScaleGuard(format!(
            "{what} up to order {n_max}: allowed up to {SWEEP_DEFAULT_LIMIT}, or {SWEEP_FORCED_LIMIT} when forced"
        )));
    }
    Ok(())
}

/// Fold `visit` over every class of each order `1..=n_max`, one accumulator
/// per order, merged deterministically.
fn per_order<A, I, V, M>(n_max: usize, opts: RunOptions, init: I, visit: V, merge: M) -> Result<Vec<(usize, A)>>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &Graph) -> Result<()> + Sync + Send,
    M: Fn(A, A) -> A,
{
    let mut out = Vec::new();
    for n in 1..=n_max {
        let parts = fold_classes(n, SizeBounds::default(), opts, || (init(), Ok(())), |acc, g| {
            if acc.1.is_ok() {
                acc.1 = visit(&mut acc.0, g);
            }
        })?;
        let mut merged = init();
        for (a, status) in parts {
            status?;
            merged = merge(merged, a);
        }
        out.push((n, merged));
    }
    Ok(out)
}

/// Check every sufficient condition against the exact solvers over all
/// isomorphism classes of order at most `n_max`.
///
/// The Ota condition is evaluated for every admissible `k` (`2 ≤ k ≤ κ`,
/// `k < α`); graphs with no admissible `k` are counted as excluded. The Bondy
/// condition is evaluated for every `0 ≤ k ≤ n - 2` against `κ ≥ k + 1`.
pub fn condition_soundness_sweep(n_max: usize, opts: RunOptions) -> Result<SoundnessReport> {
    sweep_guard("condition sweep", n_max, opts)?;
    let orders = per_order(n_max, opts, Sweep::new, Sweep::visit, |mut a, b| {
        a.classes += b.classes;
        for (x, y) in a.tallies.iter_mut().zip(&b.tallies) {
            x.absorb(y);
        }
        a.violating.extend(b.violating);
        a
    })?;
    let mut total = Sweep::new();
    let mut classes = Vec::new();
    for (n, s) in orders {
        classes.push((n, s.classes));
        for (x, y) in total.tallies.iter_mut().zip(&s.tallies) {
            x.absorb(y);
        }
        total.violating.extend(s.violating);
    }
    let sound = total.tallies.iter().all(|t| t.violations == 0);
    Ok(SoundnessReport { n_max, classes, tallies: total.tallies, violating_graphs: total.violating, sound })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeBoundReport {
    pub n_max: usize,
    /// Classes of order ≥ 3 with positive connectivity.
    pub graphs_checked: u64,
    /// Of those, the ones with `κ = k` in the domain of `f` and size above `f(n,k)`.
    pub above_bound: u64,
    /// Connected classes whose `(n, κ)` lies outside the domain of `f`.
    pub outside_domain: u64,
    /// Nonhamiltonian graphs among the two groups above.
    pub exceptions: Vec<String>,
    pub holds: bool,
}

impl fmt::Display for SizeBoundReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "target: size-bound")?;
        writeln!(out, "n_max: {}", self.n_max)?;
        writeln!(out, "graphs_checked: {}", self.graphs_checked)?;
        writeln!(out, "above_bound: {}", self.above_bound)?;
        writeln!(out, "outside_domain: {}", self.outside_domain)?;
        for e in &self.exceptions {
            writeln!(out, "exception: {e}")?;
        }
        writeln!(out, "agrees: {}", self.holds)
    }
}

#[derive(Default)]
struct BoundTally {
    checked: u64,
    above: u64,
    outside: u64,
    exceptions: Vec<String>,
}

/// Every graph of order `3..=n_max` with connectivity `k ≥ 1` and more than
/// `f(n,k)` edges is hamiltonian, and so is every connected graph whose
/// `(n, κ)` has no value of `f`.
pub fn size_bound_sweep(n_max: usize, opts: RunOptions) -> Result<SizeBoundReport> {
    sweep_guard("size-bound sweep", n_max, opts)?;
    let orders = per_order(
        n_max,
        opts,
        BoundTally::default,
        |acc: &mut BoundTally, g| {
            let n = g.order();
            if n < 3 {
                return Ok(());
            }
            let k = connectivity(g).kappa;
            if k == 0 {
                return Ok(());
            }
            acc.checked += 1;
            let must_be_ham = if f_domain(n, k) {
                let over = g.size() > f(n, k)?.value;
                acc.above += over as u64;
                over
            } else {
                acc.outside += 1;
                true
            };
            if must_be_ham && !is_hamiltonian(g)?.decision {
                acc.exceptions.push(encode_graph6(g));
            }
            Ok(())
        },
        |mut a, b| {
            a.checked += b.checked;
            a.above += b.above;
            a.outside += b.outside;
            a.exceptions.extend(b.exceptions);
            a
        },
    )?;
    let mut r = SizeBoundReport { n_max, graphs_checked: 0, above_bound: 0, outside_domain: 0, exceptions: Vec::new(), holds: true };
    for (_, t) in orders {
        r.graphs_checked += t.checked;
        r.above_bound += t.above;
        r.outside_domain += t.outside;
        r.exceptions.extend(t.exceptions);
    }
    r.holds = r.exceptions.is_empty();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deletion_examples() {
        let opts = RunOptions::default();
        let r = verify_lemma7(3, 2, JoinTemplate::Plain, 2, opts).unwrap();
        assert!(r.holds, "{r}");
        assert_eq!(r.subsets_checked as u128, binom(r.edges, 2));
        let r = verify_lemma7(3, 2, JoinTemplate::Plain, 0, opts).unwrap();
        assert!(r.holds);
        assert_eq!((r.subsets_checked, r.equality_cases), (1, 1));
        assert!(verify_lemma7(3, 1, JoinTemplate::Plain, 1, opts).is_err());
        assert!(verify_lemma7(2, 2, JoinTemplate::Plain, 3, opts).is_err());
    }

    #[test]
    fn template_parsing() {
        assert_eq!("plus_k2".parse::<JoinTemplate>().unwrap(), JoinTemplate::PlusK2);
        assert!("k2".parse::<JoinTemplate>().is_err());
    }

    #[test]
    fn small_sweeps_are_clean() {
        let r = condition_soundness_sweep(5, RunOptions::default()).unwrap();
        assert!(r.sound, "{r}");
        assert_eq!(r.classes, vec![(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)]);
        let r = size_bound_sweep(5, RunOptions::default()).unwrap();
        assert!(r.holds, "{r}");
    }
}
