//! Builders for the named extremal families.
//!
//! Joins put the left operand first, so in `K_p ∨ X` the clique occupies
//! `0..p`. Where a family deletes edges at "one common vertex" of the
//! independent part, that vertex is the first independent vertex and the
//! deleted edges go to clique vertices `0, 1, 2, …` in order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{binom2, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    G1,
    G2,
    H1,
    H2,
    KSplit,
    TraceSplit,
    Ore1,
    Ore2,
    BipartiteExtremal,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::G1,
        Family::G2,
        Family::H1,
        Family::H2,
        Family::KSplit,
        Family::TraceSplit,
        Family::Ore1,
        Family::Ore2,
        Family::BipartiteExtremal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::G1 => "g1",
            Family::G2 => "g2",
            Family::H1 => "h1",
            Family::H2 => "h2",
            Family::KSplit => "k-split",
            Family::TraceSplit => "trace-split",
            Family::Ore1 => "ore1",
            Family::Ore2 => "ore2",
            Family::BipartiteExtremal => "bipartite-extremal",
        }
    }

    /// Whether the family is parameterised by a connectivity `k`.
    pub fn takes_k(self) -> bool {
        !matches!(self, Family::Ore1 | Family::Ore2 | Family::BipartiteExtremal)
    }

    /// The property the family is built to lack.
    pub fn claim(self) -> Claim {
        match self {
            Family::H1 | Family::H2 | Family::TraceSplit => Claim::Nontraceable,
            _ => Claim::Nonhamiltonian,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::Domain(format!("unknown family '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Nonhamiltonian,
    Nontraceable,
}

/// A family member: `n` is the order (for the bipartite family, the part size),
/// `k` the connectivity parameter where the family has one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub k: Option<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, k: usize) -> FamilySpec {
        FamilySpec { family, n, k: family.takes_k().then_some(k) }
    }

    fn k(&self) -> Result<usize> {
        self.k.ok_or_else(|| Error::Domain(format!("family {} needs k", self.family)))
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let fail = |why: &str| Err(Error::Domain(format!("{}: {why}", self)));
        match self.family {
            Family::G1 | Family::G2 | Family::H1 | Family::H2 | Family::KSplit | Family::TraceSplit => {
                let k = self.k()?;
                if k < 1 {
                    return fail("k must be at least 1");
                }
                let (parity_ok, min) = match self.family {
                    Family::G1 => (n % 2 == 1, 2 * k + 1),
                    Family::G2 => (n % 2 == 0, 2 * k + 2),
                    Family::H1 => (n % 2 == 1, 2 * k + 3),
                    Family::H2 => (n % 2 == 0, 2 * k + 2),
                    Family::KSplit => (true, 2 * k + 1),
                    _ => (true, 2 * k + 2),
                };
                if !parity_ok {
                    return fail(if n % 2 == 0 { "n must be odd" } else { "n must be even" });
                }
                if n < min {
                    return fail(&format!("n must be at least {min}"));
                }
            }
            Family::Ore1 | Family::BipartiteExtremal if n < 3 => return fail("n must be at least 3"),
            Family::Ore2 if n != 5 => return fail("order is fixed at 5"),
            _ => {}
        }
        if self.order() > crate::graph::MAX_ORDER {
            return Err(Error::Capacity { order: self.order(), max: crate::graph::MAX_ORDER });
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        match self.family {
            Family::BipartiteExtremal => 2 * self.n,
            _ => self.n,
        }
    }

    /// Closed-form size of the family member.
    pub fn predicted_size(&self) -> Result<usize> {
        self.validate()?;
        let n = self.n;
        let k = self.k.unwrap_or(0);
        let eighths = |num: usize| {
            assert_eq!(num % 8, 0, "{self}: size numerator {num} not divisible by 8");
            num / 8 + k
        };
        Ok(match self.family {
            Family::G1 => eighths(3 * n * n + 5 - 8 * n),
            Family::G2 => eighths(3 * n * n + 16 - 10 * n),
            Family::H1 => eighths(3 * n * n + 17 - 12 * n),
            Family::H2 => eighths(3 * n * n + 8 - 10 * n),
            Family::KSplit => binom2(n - k) + k * k,
            Family::TraceSplit => binom2(n - k - 1) + k * (k + 1),
            Family::Ore1 => binom2(n - 1) + 1,
            Family::Ore2 => 7,
            Family::BipartiteExtremal => n * n - 2 * n + 4,
        })
    }

    /// Connectivity the member is built to have.
    pub fn predicted_connectivity(&self) -> Result<usize> {
        self.validate()?;
        Ok(match self.family {
            Family::Ore1 => 1,
            Family::Ore2 => 2,
            Family::BipartiteExtremal => {
                if self.n == 3 {
                    1
                } else {
                    2
                }
            }
            _ => self.k()?,
        })
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.n;
        match self.family {
            Family::G1 => build_g1(n, self.k()?),
            Family::G2 => build_g2(n, self.k()?),
            Family::H1 => build_h1(n, self.k()?),
            Family::H2 => build_h2(n, self.k()?),
            Family::KSplit => build_k_split(n, self.k()?),
            Family::TraceSplit => build_trace_split(n, self.k()?),
            Family::Ore1 => build_ore1(n),
            Family::Ore2 => build_ore2(),
            Family::BipartiteExtremal => build_bipartite_extremal(n),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "{}({},{})", self.family, self.n, k),
            None if self.family == Family::Ore2 => write!(f, "{}", self.family),
            None => write!(f, "{}({})", self.family, self.n),
        }
    }
}

fn check(family: Family, n: usize, k: usize) -> Result<()> {
    FamilySpec::new(family, n, k).validate()
}

/// `K_clique ∨ (K_pair + K̄_indep)` minus `deletions` edges between the first
/// independent vertex and clique vertices `0..deletions`.
fn trimmed_join(clique: usize, pair: usize, indep: usize, deletions: usize) -> Result<Graph> {
    let right = Graph::complete(pair)?.disjoint_union(&Graph::empty(indep)?)?;
    let mut g = Graph::complete(clique)?.join(&right)?;
    let w = clique + pair;
    for c in 0..deletions {
        g.remove_edge(w, c);
    }
    Ok(g)
}

/// `K_{(n-1)/2} ∨ K̄_{(n+1)/2}` minus `(n-1)/2 - k` edges at one independent vertex.
pub fn build_g1(n: usize, k: usize) -> Result<Graph> {
    check(Family::G1, n, k)?;
    let p = (n - 1) / 2;
    trimmed_join(p, 0, p + 1, p - k)
}

/// `K_{(n-2)/2} ∨ (K_2 + K̄_{(n-2)/2})` minus `(n-2)/2 - k` edges at one independent vertex.
pub fn build_g2(n: usize, k: usize) -> Result<Graph> {
    check(Family::G2, n, k)?;
    let p = (n - 2) / 2;
    trimmed_join(p, 2, p, p - k)
}

/// `K_{(n-3)/2} ∨ (K_2 + K̄_{(n-1)/2})` minus `(n-3)/2 - k` edges at one independent vertex.
pub fn build_h1(n: usize, k: usize) -> Result<Graph> {
    check(Family::H1, n, k)?;
    let p = (n - 3) / 2;
    trimmed_join(p, 2, (n - 1) / 2, p - k)
}

/// `K_{(n-2)/2} ∨ K̄_{(n+2)/2}` minus `(n-2)/2 - k` edges at one independent vertex.
pub fn build_h2(n: usize, k: usize) -> Result<Graph> {
    check(Family::H2, n, k)?;
    let p = (n - 2) / 2;
    trimmed_join(p, 0, p + 2, p - k)
}

/// `K_k ∨ (K_{n-2k} + K̄_k)`.
pub fn build_k_split(n: usize, k: usize) -> Result<Graph> {
    check(Family::KSplit, n, k)?;
    trimmed_join(k, n - 2 * k, k, 0)
}

/// `K_k ∨ (K_{n-2k-1} + K̄_{k+1})`.
pub fn build_trace_split(n: usize, k: usize) -> Result<Graph> {
    check(Family::TraceSplit, n, k)?;
    trimmed_join(k, n - 2 * k - 1, k + 1, 0)
}

/// `K_1 ∨ (K_{n-2} + K_1)`.
pub fn build_ore1(n: usize) -> Result<Graph> {
    check(Family::Ore1, n, 0)?;
    trimmed_join(1, n - 2, 1, 0)
}

/// `K_2 ∨ K̄_3`.
pub fn build_ore2() -> Result<Graph> {
    trimmed_join(2, 0, 3, 0)
}

/// `K_{n,n-2} + 4e`: parts `0..n` and `n..2n`; the first `n - 2` vertices of
/// the second part see the whole first part and the last two see only
/// vertices `0` and `1`.
pub fn build_bipartite_extremal(n: usize) -> Result<Graph> {
    check(Family::BipartiteExtremal, n, 0)?;
    let mut g = Graph::complete_bipartite(n, n - 2)?
        .disjoint_union(&Graph::empty(2)?)?;
    for b in [2 * n - 2, 2 * n - 1] {
        g.add_edge(0, b);
        g.add_edge(1, b);
    }
    Ok(g)
}

/// `G ∨ K_1`, the new vertex last.
pub fn cone(g: &Graph) -> Result<Graph> {
    g.join(&Graph::complete(1)?)
}
