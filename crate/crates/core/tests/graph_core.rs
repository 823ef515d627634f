mod common;

use std::collections::HashSet;

use common::{brute_certificate, labelled, pairs, random_graph, rng};
use nonham::canon::{canonical_labeling, is_isomorphic, same_orbit};
use nonham::{canonical_form, canonical_graph, decode_graph6, encode_graph6, Error, Graph};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), pairs(n)).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(64)) {
        let s = encode_graph6(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(40)) {
        let c = g.complement();
        prop_assert_eq!(g.size() + c.size(), g.order() * (g.order() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn join_size_and_complement(a in arb_graph(12), b in arb_graph(12)) {
        let j = a.join(&b).unwrap();
        prop_assert_eq!(j.size(), a.size() + b.size() + a.order() * b.order());
        // the complement of a join is the union of complements
        prop_assert_eq!(j.complement(), a.complement().disjoint_union(&b.complement()).unwrap());
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(20), seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut order: Vec<usize> = (0..g.order()).collect();
        order.shuffle(&mut r);
        let h = g.relabel(&order);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(canonical_graph(&g), canonical_graph(&h));
    }
}

#[test]
fn graph6_round_trip_on_random_graphs() {
    let mut r = rng(1);
    for _ in 0..1000 {
        let n = r.gen_range(1..=64);
        let p = r.gen_range(0.0..1.0);
        let g = random_graph(&mut r, n, p);
        assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn canonical_form_under_relabelling() {
    let mut r = rng(2);
    for _ in 0..200 {
        let n = r.gen_range(1..=16);
        let p = r.gen_range(0.1..0.9);
        let g = random_graph(&mut r, n, p);
        let form = canonical_form(&g);
        let mut order: Vec<usize> = (0..n).collect();
        for _ in 0..50 {
            order.shuffle(&mut r);
            assert_eq!(canonical_form(&g.relabel(&order)), form);
        }
    }
}

#[test]
fn canonical_form_separates_exactly_the_classes() {
    // on small orders, compare with the permutation-minimum code
    for n in 1..=6 {
        let mut by_brute = HashSet::new();
        let mut by_canon = HashSet::new();
        let mut pairs_seen = std::collections::HashMap::new();
        for mask in 0u64..1 << pairs(n) {
            let g = labelled(n, mask);
            let b = brute_certificate(&g);
            let c = canonical_form(&g);
            by_brute.insert(b);
            by_canon.insert(c.clone());
            assert_eq!(*pairs_seen.entry(c).or_insert(b), b, "canonical form merges two classes");
        }
        assert_eq!(by_brute.len(), by_canon.len(), "n = {n}");
    }
}

#[test]
fn eleven_certificates_on_four_vertices() {
    let forms: HashSet<_> = (0u64..64).map(|m| canonical_form(&labelled(4, m))).collect();
    assert_eq!(forms.len(), 11);
}

#[test]
fn orbits_agree_with_brute_force_automorphisms() {
    use itertools::Itertools;
    let mut r = rng(3);
    for _ in 0..60 {
        let n = r.gen_range(2..=7);
        let g = random_graph(&mut r, n, 0.5);
        let autos: Vec<Vec<usize>> = (0..n)
            .permutations(n)
            .filter(|p| g.edges().iter().all(|&(u, v)| g.has_edge(p[u], p[v])))
            .collect();
        for u in 0..n {
            for v in 0..n {
                let brute = autos.iter().any(|p| p[u] == v);
                assert_eq!(same_orbit(&g, u, v), brute, "{} {u} {v}", encode_graph6(&g));
            }
        }
        let lab = canonical_labeling(&g);
        let orbits = lab.known_orbits();
        for u in 0..n {
            for v in 0..n {
                if orbits[u] == orbits[v] {
                    assert!(autos.iter().any(|p| p[u] == v));
                }
            }
        }
    }
}

#[test]
fn isomorphism_examples() {
    let c5 = Graph::cycle(5).unwrap();
    assert!(is_isomorphic(&c5, &c5.complement()));
    let p4 = Graph::path(4).unwrap();
    assert!(is_isomorphic(&p4, &p4.complement()));
    assert!(!is_isomorphic(&Graph::cycle(6).unwrap(), &Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(3).unwrap()).unwrap()));
}

#[test]
fn decode_errors() {
    assert!(matches!(decode_graph6(""), Err(Error::Graph6(_))));
    assert!(matches!(decode_graph6("D?"), Err(Error::Graph6(_))));
    assert!(matches!(decode_graph6("C"), Err(Error::Graph6(_))));
    assert!(matches!(decode_graph6("~?@@"), Err(Error::Capacity { order: 65, .. })));
    assert!(matches!(decode_graph6("C\u{7f}"), Err(Error::Graph6(_))));
}

#[test]
fn graph6_known_strings() {
    assert_eq!(encode_graph6(&Graph::empty(5).unwrap()), "D??");
    assert_eq!(encode_graph6(&Graph::path(4).unwrap()), "Ch");
    assert_eq!(encode_graph6(&Graph::complete(4).unwrap()), "C~");
    assert_eq!(encode_graph6(&Graph::cycle(5).unwrap()), "Dhc");
}

#[test]
fn connectivity_helpers() {
    let g = Graph::path(5).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
    assert!(!g.is_connected());
    assert_eq!(g.components().len(), 2);
    assert!(Graph::empty(1).unwrap().is_connected());
    let ds = Graph::path(4).unwrap().degree_sequence();
    assert_eq!(ds.as_slice(), &[1, 1, 2, 2]);
    assert_eq!(ds.d(3), 2);
}
