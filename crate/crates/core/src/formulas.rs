//! Closed forms for the extremal sizes and their regime classification.
//!
//! `f(n,k)`: maximum size of a nonhamiltonian graph of order `n` and
//! connectivity exactly `k`. `φ(n,k)`: the same for nontraceable graphs.
//! `g(n,k)`: maximum size of a `k`-connected nonhamiltonian graph.

use std::fmt;

use serde::Serialize;

use crate::constructions::{Family, FamilySpec};
use crate::error::{Error, Result};
use crate::graph::binom2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `binom(n-k,2) + k²` (or `binom(n-k-1,2) + k(k+1)` for φ), uniquely attained by the split graph.
    Wide,
    OddNarrow,
    EvenNarrow,
    /// `n = 6k-5` for `f`: split graph and `G₁`.
    #[serde(rename = "boundary_6k5")]
    Boundary6k5,
    /// `n = 6k-8` for `f`: split graph and `G₂`.
    #[serde(rename = "boundary_6k8")]
    Boundary6k8,
    /// `n = 6k-3` for `φ`: split graph and `H₁`.
    #[serde(rename = "boundary_6k3")]
    Boundary6k3,
    /// `n = 6k` for `φ`: split graph and `H₂`.
    #[serde(rename = "boundary_6k")]
    Boundary6k,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::Wide => "wide",
            Branch::OddNarrow => "odd_narrow",
            Branch::EvenNarrow => "even_narrow",
            Branch::Boundary6k5 => "boundary_6k5",
            Branch::Boundary6k8 => "boundary_6k8",
            Branch::Boundary6k3 => "boundary_6k3",
            Branch::Boundary6k => "boundary_6k",
        }
    }

    /// Whether the value comes from the split-graph expression.
    pub fn is_wide_valued(self) -> bool {
        !matches!(self, Branch::OddNarrow | Branch::EvenNarrow)
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaRegime {
    pub branch: Branch,
    /// Every graph attaining the value is isomorphic to one of these.
    pub extremal_families: Vec<FamilySpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub value: usize,
    pub regime: FormulaRegime,
}

fn exact_eighth(num: usize) -> usize {
    assert_eq!(num % 8, 0, "non-integral branch value {num}/8: parity or regime bug");
    num / 8
}

fn is_odd(n: usize) -> bool {
    n % 2 == 1
}

/// Domain of `f`: `k ≥ 1` and `n ≥ 2k+1` (odd) or `n ≥ 2k+2` (even).
pub fn f_domain(n: usize, k: usize) -> bool {
    k >= 1 && if is_odd(n) { n >= 2 * k + 1 } else { n >= 2 * k + 2 }
}

/// Domain of `φ`: `k ≥ 1` and `n ≥ 2k+3` (odd) or `n ≥ 2k+2` (even).
pub fn phi_domain(n: usize, k: usize) -> bool {
    k >= 1 && if is_odd(n) { n >= 2 * k + 3 } else { n >= 2 * k + 2 }
}

fn classify_f(n: usize, k: usize) -> Branch {
    // compare in the form n + c against 6k to stay in unsigned arithmetic
    let six_k = 6 * k;
    if is_odd(n) {
        if n + 3 >= six_k {
            Branch::Wide
        } else if n + 5 == six_k {
            Branch::Boundary6k5
        } else {
            debug_assert!(n + 7 <= six_k);
            Branch::OddNarrow
        }
    } else if n + 6 >= six_k {
        Branch::Wide
    } else if n + 8 == six_k {
        Branch::Boundary6k8
    } else {
        debug_assert!(n + 10 <= six_k);
        Branch::EvenNarrow
    }
}

fn classify_phi(n: usize, k: usize) -> Branch {
    let six_k = 6 * k;
    if is_odd(n) {
        if n + 1 >= six_k {
            Branch::Wide
        } else if n + 3 == six_k {
            Branch::Boundary6k3
        } else {
            debug_assert!(n + 5 <= six_k);
            Branch::OddNarrow
        }
    } else if n >= six_k + 2 {
        Branch::Wide
    } else if n == six_k {
        Branch::Boundary6k
    } else {
        debug_assert!(n + 2 <= six_k);
        Branch::EvenNarrow
    }
}

/// `f(n,k)` with its regime.
pub fn f(n: usize, k: usize) -> Result<FormulaValue> {
    if !f_domain(n, k) {
        return Err(Error::Domain(format!(
            "f({n},{k}): no nonhamiltonian graph of order {n} has connectivity {k}"
        )));
    }
    let branch = classify_f(n, k);
    let split = FamilySpec::new(Family::KSplit, n, k);
    let g1 = FamilySpec::new(Family::G1, n, k);
    let g2 = FamilySpec::new(Family::G2, n, k);
    let (value, extremal_families) = match branch {
        Branch::Wide => (binom2(n - k) + k * k, vec![split]),
        Branch::Boundary6k5 => (binom2(n - k) + k * k, vec![split, g1]),
        Branch::Boundary6k8 => (binom2(n - k) + k * k, vec![split, g2]),
        Branch::OddNarrow => (exact_eighth(3 * n * n + 5 - 8 * n) + k, vec![g1]),
        Branch::EvenNarrow => (exact_eighth(3 * n * n + 16 - 10 * n) + k, vec![g2]),
        _ => unreachable!("phi-only branch"),
    };
    Ok(FormulaValue { value, regime: FormulaRegime { branch, extremal_families } })
}

/// `φ(n,k)` with its regime.
pub fn phi(n: usize, k: usize) -> Result<FormulaValue> {
    if !phi_domain(n, k) {
        return Err(Error::Domain(format!(
            "phi({n},{k}): no nontraceable graph of order {n} has connectivity {k}"
        )));
    }
    let branch = classify_phi(n, k);
    let split = FamilySpec::new(Family::TraceSplit, n, k);
    let h1 = FamilySpec::new(Family::H1, n, k);
    let h2 = FamilySpec::new(Family::H2, n, k);
    let wide = binom2(n - k - 1) + k * (k + 1);
    let (value, extremal_families) = match branch {
        Branch::Wide => (wide, vec![split]),
        Branch::Boundary6k3 => (wide, vec![split, h1]),
        Branch::Boundary6k => (wide, vec![split, h2]),
        Branch::OddNarrow => (exact_eighth(3 * n * n + 17 - 12 * n) + k, vec![h1]),
        Branch::EvenNarrow => (exact_eighth(3 * n * n + 8 - 10 * n) + k, vec![h2]),
        _ => unreachable!("f-only branch"),
    };
    Ok(FormulaValue { value, regime: FormulaRegime { branch, extremal_families } })
}

fn g_domain(n: usize, k: usize) -> Result<()> {
    if k < 1 || 2 * k >= n {
        return Err(Error::Domain(format!("g({n},{k}) needs 1 ≤ k < n/2")));
    }
    Ok(())
}

/// Maximum size of a `k`-connected nonhamiltonian graph of order `n`, by the closed form
/// `max{binom(n-k,2) + k², binom(⌊(n+2)/2⌋,2) + ⌊(n-1)/2⌋²}`.
pub fn g_formula(n: usize, k: usize) -> Result<usize> {
    g_domain(n, k)?;
    let a = binom2(n - k) + k * k;
    let h = (n - 1) / 2;
    let b = binom2((n + 2) / 2) + h * h;
    Ok(a.max(b))
}

/// `max{f(n,c) : k ≤ c < n/2}` together with every `c` attaining it.
pub fn g_via_max(n: usize, k: usize) -> Result<(usize, Vec<usize>)> {
    g_domain(n, k)?;
    let values: Vec<(usize, usize)> = (k..)
        .take_while(|&c| 2 * c < n)
        .filter(|&c| f_domain(n, c))
        .map(|c| f(n, c).map(|v| (c, v.value)))
        .collect::<Result<_>>()?;
    let best = values.iter().map(|&(_, v)| v).max().expect("c = k is always in range");
    let argmax = values.iter().filter(|&&(_, v)| v == best).map(|&(c, _)| c).collect();
    Ok((best, argmax))
}

/// Maximum size of a nonhamiltonian graph of order `n`: `binom(n-1,2) + 1`.
pub fn ore_bound(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::OrderTooSmall { what: "the nonhamiltonian size bound", order: n });
    }
    Ok(binom2(n - 1) + 1)
}
