//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use itertools::Itertools;
use nonham::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Labelled graph whose upper triangle is given by `mask`, pairs in
/// lexicographic order.
pub fn labelled(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for (bit, (u, v)) in (0..n).tuple_combinations().enumerate() {
        if mask >> bit & 1 == 1 {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Smallest upper-triangle code over all vertex permutations.
pub fn brute_certificate(g: &Graph) -> u64 {
    let n = g.order();
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    (0..n)
        .permutations(n)
        .map(|p| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| g.has_edge(p[u], p[v]))
                .fold(0u64, |acc, (bit, _)| acc | 1 << bit)
        })
        .min()
        .unwrap_or(0)
}

/// Held–Karp: `reach[S][v]` iff some path starts at 0, covers `S` and ends at `v`.
fn held_karp(g: &Graph, start_anywhere: bool) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut reach = vec![vec![false; n]; 1 << n];
    for v in 0..n {
        if start_anywhere || v == 0 {
            reach[1 << v][v] = true;
        }
    }
    for set in 1usize..1 << n {
        for v in 0..n {
            if !reach[set][v] {
                continue;
            }
            for u in 0..n {
                if set >> u & 1 == 0 && g.has_edge(v, u) {
                    reach[set | 1 << u][u] = true;
                }
            }
        }
    }
    reach
}

pub fn dp_hamiltonian(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    let reach = held_karp(g, false);
    (1..n).any(|v| reach[(1 << n) - 1][v] && g.has_edge(v, 0))
}

pub fn dp_traceable(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return false;
    }
    let reach = held_karp(g, true);
    reach[(1 << n) - 1].iter().any(|&b| b)
}

pub fn brute_kappa(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    let all = (1u64 << n) - 1;
    (0u64..1 << n)
        .filter(|&s| {
            let rest = all & !s;
            rest.count_ones() >= 2 && !g.is_connected_within(rest)
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn brute_alpha(g: &Graph) -> usize {
    (0u64..1 << g.order())
        .filter(|&s| (0..g.order()).filter(|&v| s >> v & 1 == 1).all(|v| g.neighbors(v) & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Minimum degree sum over independent sets of exactly `s` vertices.
pub fn brute_sigma(g: &Graph, s: usize) -> Option<usize> {
    (0u64..1 << g.order())
        .filter(|&m| m.count_ones() as usize == s)
        .filter(|&m| (0..g.order()).filter(|&v| m >> v & 1 == 1).all(|v| g.neighbors(v) & m == 0))
        .map(|m| (0..g.order()).filter(|&v| m >> v & 1 == 1).map(|v| g.degree(v)).sum())
        .min()
}

pub fn binom(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
