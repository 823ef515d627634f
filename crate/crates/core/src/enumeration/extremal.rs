//! Exhaustive extremal-size searches: nonhamiltonian graphs with prescribed
//! connectivity, their nontraceable analogue, and balanced bipartite graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use super::generate::{fold_classes, RunOptions, SizeBounds};
use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::constructions::{build_bipartite_extremal, cone, FamilySpec};
use crate::error::{Error, Result};
use crate::formulas::{f, phi, FormulaValue};
use crate::graph::{Graph, MAX_ORDER};
use crate::graph6::{decode_graph6, encode_graph6};
use crate::hamiltonicity::{is_hamiltonian, is_hamiltonian_bipartite, is_traceable};
use crate::invariants::connectivity;

/// Largest order searched without `force`.
pub const EXTREMAL_DEFAULT_LIMIT: usize = 9;
/// Largest order searched at all.
pub const EXTREMAL_FORCED_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub target: String,
    pub n: usize,
    pub k: Option<usize>,
    /// Largest size found; `None` if the search universe is empty.
    pub max_size: Option<usize>,
    /// Canonical representatives attaining `max_size`, as sorted graph6.
    pub extremal_graphs: Vec<String>,
    /// Canonical representatives of the predicted extremal graphs.
    pub expected_graphs: Vec<String>,
    pub expected_families: Vec<String>,
    pub candidates_examined: u64,
    pub formula_value: usize,
    pub agrees: bool,
}

impl fmt::Display for ExtremalReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "target: {}", self.target)?;
        writeln!(out, "n: {}", self.n)?;
        if let Some(k) = self.k {
            writeln!(out, "k: {k}")?;
        }
        writeln!(out, "formula_value: {}", self.formula_value)?;
        match self.max_size {
            Some(m) => writeln!(out, "max_size: {m}")?,
            None => writeln!(out, "max_size: none")?,
        }
        writeln!(out, "candidates_examined: {}", self.candidates_examined)?;
        writeln!(out, "expected_families: {}", self.expected_families.join(" "))?;
        writeln!(out, "extremal_graphs: {}", self.extremal_graphs.len())?;
        for g in &self.extremal_graphs {
            writeln!(out, "  {g}")?;
        }
        writeln!(out, "expected_graphs: {}", self.expected_graphs.len())?;
        for g in &self.expected_graphs {
            writeln!(out, "  {g}")?;
        }
        writeln!(out, "agrees: {}", self.agrees)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    Nonhamiltonian,
    Nontraceable,
}

impl Target {
    fn holds(self, g: &Graph) -> bool {
        match self {
            Target::Nonhamiltonian => is_hamiltonian(g).is_ok_and(|r| !r.decision),
            Target::Nontraceable => is_traceable(g).is_ok_and(|r| !r.decision),
        }
    }
}

/// Running maximum together with every class attaining it.
#[derive(Default)]
struct Extremal {
    max: Option<usize>,
    graphs: BTreeMap<CanonicalForm, Graph>,
    examined: u64,
}

impl Extremal {
    fn below(&self, e: usize) -> bool {
        self.max.is_some_and(|m| e < m)
    }

    fn offer(&mut self, g: &Graph) {
        let e = g.size();
        if self.below(e) {
            return;
        }
        if self.max != Some(e) {
            self.max = Some(e);
            self.graphs.clear();
        }
        self.graphs.entry(canonical_form(g)).or_insert_with(|| canonical_graph(g));
    }

    fn merge(mut self, other: Extremal) -> Extremal {
        self.examined += other.examined;
        for g in other.graphs.into_values() {
            self.offer(&g);
        }
        self
    }

    fn graph6(&self) -> Vec<String> {
        self.graphs.values().map(encode_graph6).collect()
    }
}

fn extremal_guard(what: &str, n: usize, opts: RunOptions) -> Result<()> {
    if n > EXTREMAL_FORCED_LIMIT || (n > EXTREMAL_DEFAULT_LIMIT && !opts.force) {
        return Err(Error::ScaleGuard(format!(
            "{what} at n = {n}: allowed up to {EXTREMAL_DEFAULT_LIMIT}, or {EXTREMAL_FORCED_LIMIT} when forced"
        )));
    }
    Ok(())
}

/// Predicted extremal graphs that really have order `n`, connectivity `k`
/// and the target property, keyed by canonical form.
fn expected(families: &[FamilySpec], n: usize, k: usize, target: Target) -> Result<BTreeMap<CanonicalForm, Graph>> {
    let mut out = BTreeMap::new();
    for spec in families {
        let g = spec.build()?;
        if g.order() == n && connectivity(&g).kappa == k && target.holds(&g) {
            out.insert(canonical_form(&g), canonical_graph(&g));
        }
    }
    Ok(out)
}

fn search(n: usize, k: usize, target: Target, min: Option<usize>, opts: RunOptions) -> Result<Extremal> {
    let bounds = SizeBounds { min, max: None };
    let parts = fold_classes(n, bounds, opts, Extremal::default, |acc, g| {
        acc.examined += 1;
        if acc.below(g.size()) || connectivity(g).kappa != k || !target.holds(g) {
            return;
        }
        acc.offer(g);
    })?;
    Ok(parts.into_iter().fold(Extremal::default(), Extremal::merge))
}

fn run(name: &str, n: usize, k: usize, target: Target, value: FormulaValue, opts: RunOptions) -> Result<ExtremalReport> {
    extremal_guard(name, n, opts)?;
    let families = &value.regime.extremal_families;
    let want = expected(families, n, k, target)?;
    // a verified construction bounds the maximum from below
    let seed = want.values().map(Graph::size).max();
    let mut found = search(n, k, target, seed, opts)?;
    if found.max.is_none() && seed.is_some() {
        let examined = found.examined;
        found = search(n, k, target, None, opts)?;
        found.examined += examined;
    }
    let agrees = found.max == Some(value.value) && found.graphs.keys().eq(want.keys());
    Ok(ExtremalReport {
        target: name.to_string(),
        n,
        k: Some(k),
        max_size: found.max,
        extremal_graphs: found.graph6(),
        expected_graphs: want.values().map(encode_graph6).collect(),
        expected_families: families.iter().map(ToString::to_string).collect(),
        candidates_examined: found.examined,
        formula_value: value.value,
        agrees,
    })
}

/// Maximum size and all extremal classes of nonhamiltonian graphs of order
/// `n` and connectivity exactly `k`, compared with `f(n,k)` and its families.
pub fn verify_theorem8(n: usize, k: usize, opts: RunOptions) -> Result<ExtremalReport> {
    let value = f(n, k)?;
    run("theorem8", n, k, Target::Nonhamiltonian, value, opts)
}

/// The nontraceable analogue, compared with `φ(n,k)`.
pub fn verify_corollary12(n: usize, k: usize, opts: RunOptions) -> Result<ExtremalReport> {
    let value = phi(n, k)?;
    run("corollary12", n, k, Target::Nontraceable, value, opts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeReport {
    pub n: usize,
    pub k: usize,
    /// Cones over the nontraceable extremal graphs of order `n`.
    pub coned: Vec<String>,
    /// Nonhamiltonian extremal graphs of order `n+1`, connectivity `k+1`.
    pub hamiltonian_side: Vec<String>,
    pub agrees: bool,
}

impl fmt::Display for ConeReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "target: cone")?;
        writeln!(out, "n: {}", self.n)?;
        writeln!(out, "k: {}", self.k)?;
        writeln!(out, "coned: {}", self.coned.join(" "))?;
        writeln!(out, "hamiltonian_side: {}", self.hamiltonian_side.join(" "))?;
        writeln!(out, "agrees: {}", self.agrees)
    }
}

fn forms(list: &[String]) -> Result<BTreeSet<CanonicalForm>> {
    list.iter().map(|s| decode_graph6(s).map(|g| canonical_form(&g))).collect()
}

/// Compare the cones of a nontraceable report's extremal graphs with a
/// nonhamiltonian report one order and one connectivity higher.
pub fn compare_cone(traceable: &ExtremalReport, hamiltonian: &ExtremalReport) -> Result<ConeReport> {
    let k = traceable.k.ok_or_else(|| Error::Domain("report has no connectivity parameter".into()))?;
    if hamiltonian.n != traceable.n + 1 || hamiltonian.k != Some(k + 1) {
        return Err(Error::Domain(format!(
            "reports are not cone partners: ({}, {k}) vs ({}, {:?})",
            traceable.n, hamiltonian.n, hamiltonian.k
        )));
    }
    let coned: Vec<Graph> = traceable
        .extremal_graphs
        .iter()
        .map(|s| decode_graph6(s).and_then(|g| cone(&g)).map(|g| canonical_graph(&g)))
        .collect::<Result<_>>()?;
    let coned: Vec<String> = coned.iter().map(encode_graph6).sorted().collect();
    let agrees = forms(&coned)? == forms(&hamiltonian.extremal_graphs)?;
    Ok(ConeReport {
        n: traceable.n,
        k,
        coned,
        hamiltonian_side: hamiltonian.extremal_graphs.clone(),
        agrees,
    })
}

pub fn cone_correspondence(n: usize, k: usize, opts: RunOptions) -> Result<ConeReport> {
    let t = verify_corollary12(n, k, opts)?;
    let h = verify_theorem8(n + 1, k + 1, opts)?;
    compare_cone(&t, &h)
}

/// Balanced bipartite graphs with parts `0..n` and `n..2n`, given by an
/// `n × n` biadjacency bit matrix (bit `i*n + j` joins `i` and `n + j`).
fn bipartite_from_matrix(n: usize, matrix: u64) -> Graph {
    let mut g = Graph::empty(2 * n).expect("2n ≤ 10");
    for bit in crate::graph::bits(matrix) {
        g.add_edge(bit / n, n + bit % n);
    }
    g
}

/// Maximum size and extremal classes of nonhamiltonian balanced bipartite
/// graphs of order `2n` (minimum degree at least 2 once `n ≥ 4`), compared
/// with `n² - 2n + 4` and `K_{n,n-2}` plus four edges.
///
/// Labelled biadjacency matrices are scanned from the full matrix downwards
/// by number of missing entries, stopping after the first size that yields a
/// nonhamiltonian graph.
pub fn verify_lemma5(n: usize) -> Result<ExtremalReport> {
    if !(3..=5).contains(&n) {
        return Err(Error::Domain(format!("bipartite search needs 3 ≤ n ≤ 5, got {n}")));
    }
    debug_assert!(2 * n <= MAX_ORDER);
    let cells = n * n;
    let predicted = cells - 2 * n + 4;
    let side = (1u64 << n) - 1;
    let full = (1u64 << cells) - 1;
    let mut found = Extremal::default();
    for missing in 0..=cells {
        for zeros in (0..cells).combinations(missing) {
            let matrix = zeros.iter().fold(full, |m, &b| m & !(1u64 << b));
            let g = bipartite_from_matrix(n, matrix);
            found.examined += 1;
            if n >= 4 && g.min_degree() < 2 {
                continue;
            }
            if !is_hamiltonian_bipartite(&g, side)?.decision {
                found.offer(&g);
            }
        }
        if found.max.is_some() {
            break;
        }
    }
    let want = build_bipartite_extremal(n)?;
    let want_form = canonical_form(&want);
    let agrees = found.max == Some(predicted) && found.graphs.keys().eq([&want_form]);
    Ok(ExtremalReport {
        target: "lemma5".to_string(),
        n,
        k: None,
        max_size: found.max,
        extremal_graphs: found.graph6(),
        expected_graphs: vec![encode_graph6(&canonical_graph(&want))],
        expected_families: vec![format!("bipartite-extremal({n})")],
        candidates_examined: found.examined,
        formula_value: predicted,
        agrees,
    })
}
