//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::HashSet;
use std::time::Instant;

use common::{brute_certificate, labelled, pairs, random_graph, rng};
use nonham::canon::is_isomorphic;
use nonham::constructions::{Claim, Family, FamilySpec};
use nonham::enumeration::{
    compare_cone, condition_soundness_sweep, count_graphs, size_bound_sweep, verify_corollary12, verify_lemma5,
    verify_lemma7, verify_theorem8, GenFilter, JoinTemplate, RunOptions,
};
use nonham::formulas::{f, f_domain, g_formula, g_via_max, ore_bound, phi_domain};
use nonham::hamiltonicity::{is_hamiltonian, is_traceable};
use nonham::invariants::connectivity;
use nonham::{canonical_form, decode_graph6, encode_graph6};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;

const OPTS: RunOptions = RunOptions { workers: 0, force: false };

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn formula_spot_checks() -> Outcome {
    let g = g_formula(15, 3).map_err(|e| e.to_string())?;
    ensure(g == 77, || format!("g(15,3) = {g}"))?;
    let v = f(15, 7).map_err(|e| e.to_string())?;
    ensure(v.value == 77, || format!("f(15,7) = {}", v.value))?;
    let fams = &v.regime.extremal_families;
    ensure(fams.len() == 1 && fams[0].family == Family::G1, || format!("f(15,7) families {fams:?}"))?;
    let v = f(15, 3).map_err(|e| e.to_string())?;
    ensure(v.value == 75, || format!("f(15,3) = {}", v.value))?;
    for n in 3..=30 {
        let (a, b) = (ore_bound(n).unwrap(), f(n, 1).unwrap().value);
        ensure(a == b, || format!("ore_bound({n}) = {a} but f({n},1) = {b}"))?;
    }
    Ok("g(15,3)=77, f(15,7)=77 via G1 only, f(15,3)=75, ore_bound = f(n,1) for n in 3..=30".into())
}

fn construction_consistency() -> Outcome {
    let mut checked = 0;
    for family in Family::ALL {
        for n in 0..=14 {
            for k in 0..=n {
                let spec = FamilySpec::new(family, n, k);
                if spec.order() > 14 || spec.validate().is_err() || (!family.takes_k() && k > 0) {
                    continue;
                }
                let g = spec.build().map_err(|e| format!("{spec}: {e}"))?;
                let size = spec.predicted_size().unwrap();
                ensure(g.size() == size, || format!("{spec}: size {} vs {size}", g.size()))?;
                let kappa = connectivity(&g).kappa;
                let want = spec.predicted_connectivity().unwrap();
                ensure(kappa == want, || format!("{spec}: kappa {kappa} vs {want}"))?;
                let lacks = match family.claim() {
                    Claim::Nonhamiltonian => !is_hamiltonian(&g).unwrap().decision,
                    Claim::Nontraceable => !is_traceable(&g).unwrap().decision,
                };
                ensure(lacks, || format!("{spec}: property fails"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} family members up to order 14"))
}

fn theorem_search() -> Outcome {
    let mut cases = Vec::new();
    for n in 5..=9 {
        for k in 1..n {
            if !f_domain(n, k) {
                continue;
            }
            let r = verify_theorem8(n, k, OPTS).map_err(|e| format!("({n},{k}): {e}"))?;
            ensure(r.agrees, || format!("({n},{k}) disagrees:\n{r}"))?;
            cases.push(format!("({n},{k}):{}x{}", r.max_size.unwrap(), r.extremal_graphs.len()));
        }
    }
    Ok(format!("{} cases agree: {}", cases.len(), cases.join(" ")))
}

fn trace_search_and_cones() -> Outcome {
    let mut cases = 0;
    for n in 4..=8 {
        for k in 1..n {
            if !phi_domain(n, k) {
                continue;
            }
            let t = verify_corollary12(n, k, OPTS).map_err(|e| format!("({n},{k}): {e}"))?;
            ensure(t.agrees, || format!("({n},{k}) disagrees:\n{t}"))?;
            let h = verify_theorem8(n + 1, k + 1, OPTS).map_err(|e| format!("({},{}): {e}", n + 1, k + 1))?;
            let c = compare_cone(&t, &h).map_err(|e| e.to_string())?;
            ensure(c.agrees, || format!("cone mismatch at ({n},{k}):\n{c}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases agree, cones match the order n+1 extremal sets"))
}

fn bipartite_search() -> Outcome {
    let mut parts = Vec::new();
    for n in 3..=5 {
        let r = verify_lemma5(n).map_err(|e| e.to_string())?;
        ensure(r.agrees, || format!("n = {n}:\n{r}"))?;
        parts.push(format!("n={n}: max {} unique, {} matrices", r.max_size.unwrap(), r.candidates_examined));
    }
    Ok(parts.join("; "))
}

fn deletion_search() -> Outcome {
    let mut runs = 0;
    let mut subsets = 0;
    for s in 1..=4 {
        for t in 2..=3 {
            for template in [JoinTemplate::Plain, JoinTemplate::PlusK2] {
                for fcount in 0..=s {
                    let r = verify_lemma7(s, t, template, fcount, OPTS).map_err(|e| e.to_string())?;
                    ensure(r.holds, || format!("counterexample:\n{r}"))?;
                    runs += 1;
                    subsets += r.subsets_checked;
                }
            }
        }
    }
    Ok(format!("{runs} parameter sets, {subsets} edge subsets, inequality and equality case hold"))
}

fn condition_soundness() -> Outcome {
    let r = condition_soundness_sweep(8, OPTS).map_err(|e| e.to_string())?;
    ensure(r.sound, || format!("violations:\n{r}"))?;
    let classes: u64 = r.classes.iter().map(|c| c.1).sum();
    let fired: Vec<String> = r.tallies.iter().map(|t| format!("{} fired {}", t.condition, t.fired)).collect();
    Ok(format!("{classes} classes of order <= 8, zero violations; {}", fired.join(", ")))
}

fn size_bound() -> Outcome {
    let r = size_bound_sweep(8, OPTS).map_err(|e| e.to_string())?;
    ensure(r.holds, || format!("exceptions:\n{r}"))?;
    Ok(format!("{} connected classes, {} above f(n,k), all hamiltonian", r.graphs_checked, r.above_bound))
}

fn g_identity() -> Outcome {
    let mut pairs = 0;
    for n in 5..=40 {
        for k in (1..).take_while(|&k| 2 * k < n) {
            let a = g_via_max(n, k).map_err(|e| e.to_string())?.0;
            let b = g_formula(n, k).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("g({n},{k}): max {a} vs closed form {b}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs equal"))
}

fn infrastructure() -> Outcome {
    let mut r = rng(2024);
    for _ in 0..1000 {
        let n = r.gen_range(1..=64);
        let p = r.gen_range(0.0..1.0);
        let g = random_graph(&mut r, n, p);
        let back = decode_graph6(&encode_graph6(&g)).map_err(|e| e.to_string())?;
        ensure(back == g, || format!("round trip failed for order {n}"))?;
    }
    for _ in 0..200 {
        let n = r.gen_range(1..=20);
        let p = r.gen_range(0.1..0.9);
        let g = random_graph(&mut r, n, p);
        let form = canonical_form(&g);
        let mut order: Vec<usize> = (0..n).collect();
        for _ in 0..50 {
            order.shuffle(&mut r);
            let h = g.relabel(&order);
            ensure(canonical_form(&h) == form && is_isomorphic(&g, &h), || {
                format!("relabelling changed the form of {}", encode_graph6(&g))
            })?;
        }
    }
    for n in 1..=6 {
        let oracle: HashSet<u64> = (0u64..1 << pairs(n)).map(|m| brute_certificate(&labelled(n, m))).collect();
        let got = count_graphs(n, &GenFilter::default(), OPTS).map_err(|e| e.to_string())?;
        ensure(got == oracle.len() as u64, || format!("n = {n}: {got} classes, oracle {}", oracle.len()))?;
    }
    let mut big = Vec::new();
    for (n, want) in [(7, 1044u64), (8, 12346), (9, 274668)] {
        let got = count_graphs(n, &GenFilter::default(), OPTS).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("n = {n}: {got} classes, expected {want}"))?;
        big.push(got.to_string());
    }
    Ok(format!(
        "1000 round trips, 200x50 relabellings, n<=6 counts match labelled oracle, n=7/8/9: {}",
        big.join("/")
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("formula spot checks", formula_spot_checks),
        ("construction self-consistency", construction_consistency),
        ("exhaustive nonhamiltonian extremal search, 5 <= n <= 9", theorem_search),
        ("exhaustive nontraceable extremal search, 4 <= n <= 8, with cones", trace_search_and_cones),
        ("balanced bipartite extremal search", bipartite_search),
        ("edge deletion in complete split joins", deletion_search),
        ("sufficient condition soundness", condition_soundness),
        ("size above f(n,k) forces a Hamilton cycle", size_bound),
        ("g maximum identity", g_identity),
        ("infrastructure", infrastructure),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:.1}s] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{secs:.1}s] {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
