mod common;

use common::{brute_alpha, brute_kappa, brute_sigma, dp_hamiltonian, dp_traceable, random_graph, rng};
use nonham::constructions::cone;
use nonham::enumeration::{generate_all, GenFilter, RunOptions};
use nonham::hamiltonicity::{
    find_hamilton_path, is_hamiltonian, is_hamiltonian_bipartite, is_traceable, validate_cycle, validate_path,
};
use nonham::invariants::{connectivity, independence_number, separates, sigma_s};
use nonham::{encode_graph6, Error, Graph};
use rand::Rng;

#[test]
fn hamiltonicity_matches_held_karp() {
    let mut r = rng(10);
    for _ in 0..1500 {
        let n = r.gen_range(3..=12);
        let p = r.gen_range(0.15..0.8);
        let g = random_graph(&mut r, n, p);
        let res = is_hamiltonian(&g).unwrap();
        assert_eq!(res.decision, dp_hamiltonian(&g), "{}", encode_graph6(&g));
        if let Some(w) = &res.witness {
            assert!(validate_cycle(&g, w));
        }
        let res = is_traceable(&g).unwrap();
        assert_eq!(res.decision, dp_traceable(&g), "{}", encode_graph6(&g));
        if let Some(w) = &res.witness {
            assert!(validate_path(&g, w));
        }
        assert_eq!(find_hamilton_path(&g).is_some(), res.decision);
    }
}

#[test]
fn traceable_iff_cone_is_hamiltonian() {
    for n in 2..=7 {
        for g in generate_all(n, &GenFilter::default(), RunOptions::default()).unwrap() {
            let t = is_traceable(&g).unwrap().decision;
            let h = is_hamiltonian(&cone(&g).unwrap()).unwrap().decision;
            assert_eq!(t, h, "{}", encode_graph6(&g));
        }
    }
}

#[test]
fn larger_instances_finish() {
    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
    .unwrap();
    assert!(!is_hamiltonian(&petersen).unwrap().decision);
    assert!(is_traceable(&petersen).unwrap().decision);
    let k = Graph::complete_bipartite(12, 13).unwrap();
    assert!(!is_hamiltonian(&k).unwrap().decision);
    assert!(is_traceable(&k).unwrap().decision);
    let c = Graph::cycle(40).unwrap();
    assert!(is_hamiltonian(&c).unwrap().decision);
    let mut r = rng(11);
    for _ in 0..20 {
        let g = random_graph(&mut r, 30, 0.3);
        let res = is_hamiltonian(&g).unwrap();
        if let Some(w) = res.witness {
            assert!(validate_cycle(&g, &w));
        }
    }
}

fn random_balanced_bipartite(r: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(2 * n).unwrap();
    for u in 0..n {
        for v in n..2 * n {
            if r.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[test]
fn bipartite_solver_agrees_with_generic() {
    let mut r = rng(12);
    for _ in 0..1000 {
        let n = r.gen_range(2..=7);
        let p = r.gen_range(0.3..0.95);
        let g = random_balanced_bipartite(&mut r, n, p);
        let side = (1u64 << n) - 1;
        let b = is_hamiltonian_bipartite(&g, side).unwrap();
        let h = is_hamiltonian(&g).unwrap();
        assert_eq!(b.decision, h.decision, "{}", encode_graph6(&g));
        if let Some(w) = b.witness {
            assert!(validate_cycle(&g, &w));
        }
    }
}

#[test]
fn bipartite_solver_rejects_bad_sides() {
    let g = Graph::cycle(5).unwrap();
    assert!(matches!(is_hamiltonian_bipartite(&g, 0b101), Err(Error::Domain(_))));
}

#[test]
fn connectivity_matches_brute_force() {
    let mut r = rng(13);
    for _ in 0..600 {
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.1..0.95);
        let g = random_graph(&mut r, n, p);
        let c = connectivity(&g);
        assert_eq!(c.kappa, brute_kappa(&g), "{}", encode_graph6(&g));
        match c.witness_cut {
            None => assert!(g.is_complete()),
            Some(cut) => {
                assert_eq!(cut.len(), c.kappa);
                assert!(separates(&g, &cut));
            }
        }
    }
}

#[test]
fn independence_matches_brute_force() {
    let mut r = rng(14);
    for _ in 0..600 {
        let n = r.gen_range(0..=12);
        let p = r.gen_range(0.05..0.9);
        let g = random_graph(&mut r, n, p);
        let a = independence_number(&g);
        assert_eq!(a.alpha, brute_alpha(&g));
        assert_eq!(a.witness_set.len(), a.alpha);
        for (i, &u) in a.witness_set.iter().enumerate() {
            for &v in &a.witness_set[i + 1..] {
                assert!(!g.has_edge(u, v));
            }
        }
    }
}

#[test]
fn sigma_matches_brute_force_and_is_monotone() {
    let mut r = rng(15);
    for _ in 0..300 {
        let n = r.gen_range(2..=10);
        let p = r.gen_range(0.1..0.7);
        let g = random_graph(&mut r, n, p);
        let alpha = brute_alpha(&g);
        let mut last = 0;
        for s in 1..=alpha {
            let v = sigma_s(&g, s).unwrap();
            assert_eq!(Some(v), brute_sigma(&g, s));
            assert!(v >= last);
            last = v;
        }
        assert!(matches!(sigma_s(&g, alpha + 1), Err(Error::SigmaUndefined { .. })));
    }
}
