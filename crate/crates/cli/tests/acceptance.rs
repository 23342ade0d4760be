//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test -p graphprod-cli --test acceptance -- --nocapture`.

use std::sync::Arc;

use graphprod::commutators::{enumerate_generators, realize_generator};
use graphprod::groupalg::{quillen_check, Budgets};
use graphprod::lie::{free_restricted_dim, graph_restricted_lie_dims, p_power_axiom_check, witt_dimension};
use graphprod::ncalg::{EdgeSign, DEFAULT_WORD_BUDGET};
use graphprod::{AlgebraKind, AlgebraPresentation, GroupElement, GroupSpec, Order, SimplicialComplex};
use graphprod_cli::{cmd_analyze, cmd_subst, Input, SubstArgs};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn corpus() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("two-points", SimplicialComplex::points(2)),
        ("three-points", SimplicialComplex::points(3)),
        ("path-3", SimplicialComplex::path(3)),
        ("four-cycle", SimplicialComplex::cycle(4)),
        ("simplex-3", SimplicialComplex::simplex(3)),
    ]
}

fn verdict(n: usize, what: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS criterion {n}: {what}");
    } else {
        println!("FAIL criterion {n}: {what}");
        for f in failures {
            println!("    {f}");
        }
        panic!("criterion {n} failed with {} problem(s)", failures.len());
    }
}

fn input_for(k: &SimplicialComplex, name: &str) -> Input {
    let doc = graphprod_cli::ComplexDocument::from_complex(k, Some(name.to_string()));
    Input::from_text(name, &serde_json::to_string(&doc).unwrap()).unwrap()
}

#[test]
fn criterion_01_three_way_agreement() {
    let mut failures = Vec::new();
    for (name, k) in corpus() {
        for p in [2u64, 3] {
            let degree = if p == 2 && k.vertex_count() <= 3 { 7 } else { 5 };
            match quillen_check(&k, p, degree, Budgets::default()) {
                Ok(report) => {
                    if report.rows.len() != degree {
                        failures.push(format!("{name} p={p}: {} rows", report.rows.len()));
                    }
                    for r in &report.rows {
                        if !(r.agrees() && r.stabilized) {
                            failures.push(format!(
                                "{name} p={p} n={}: oracle {} brute {} formula {} stabilized {}",
                                r.degree, r.oracle, r.bruteforce, r.formula, r.stabilized
                            ));
                        }
                    }
                }
                Err(e) => failures.push(format!("{name} p={p}: {e}")),
            }
        }
    }
    verdict(
        1,
        "group algebra oracle = brute force = clique formula on the corpus",
        &failures,
    );
}

#[test]
fn criterion_02_infinite_dihedral() {
    let mut failures = Vec::new();
    let k = SimplicialComplex::points(2);
    let pres = AlgebraPresentation::from_complex(&k, AlgebraKind::Trunc, 2).unwrap();
    let formula = pres.hilbert_series_formula(8).unwrap();
    let expected = [1u128, 2, 2, 2, 2, 2, 2, 2, 2];
    for (n, &want) in expected.iter().enumerate() {
        let brute = pres.graded_dim_bruteforce(n, DEFAULT_WORD_BUDGET).unwrap();
        if formula.coeff(n) != want as i128 || brute != want {
            failures.push(format!(
                "degree {n}: formula {} brute {brute}, want {want}",
                formula.coeff(n)
            ));
        }
    }
    let dims = graph_restricted_lie_dims(&k, 2, 8).unwrap();
    let want: Vec<u128> = (1..=8)
        .map(|n| {
            if n == 1 {
                2
            } else if [2, 4, 8].contains(&n) {
                1
            } else {
                0
            }
        })
        .collect();
    if dims.as_slice() != want.as_slice() {
        failures.push(format!("restricted dims {:?}, want {want:?}", dims.as_slice()));
    }
    verdict(
        2,
        "trunc(2) on two points is (1,2,...,2); restricted dims (2,1,0,1,0,0,0,1)",
        &failures,
    );
}

/// Multiplies `s` by 1/(1 - t^n) `times` times, truncated at `s.len()`.
fn divide_one_minus(s: &mut [i128], n: usize, times: u128) {
    for _ in 0..times {
        for i in n..s.len() {
            s[i] += s[i - n];
        }
    }
}

fn multiply_one_minus(s: &mut [i128], n: usize, times: u128) {
    for _ in 0..times {
        for i in (n..s.len()).rev() {
            s[i] -= s[i - n];
        }
    }
}

#[test]
fn criterion_03_pbw_identities() {
    let mut failures = Vec::new();
    for m in 1u64..=3 {
        let mut s = vec![0i128; 11];
        s[0] = 1;
        for n in 1..=10 {
            divide_one_minus(&mut s, n, witt_dimension(m, n as u64));
        }
        let want: Vec<i128> = (0..11).map(|i| (m as i128).pow(i)).collect();
        if s != want {
            failures.push(format!("witt m={m}: {s:?}"));
        }
    }
    for (m, p) in [(1u64, 2u64), (2, 2), (3, 2), (2, 3)] {
        let mut s = vec![0i128; 9];
        s[0] = 1;
        for n in 1..=8usize {
            let d = free_restricted_dim(m, n as u64, p);
            divide_one_minus(&mut s, n, d);
            multiply_one_minus(&mut s, n * p as usize, d);
        }
        let want: Vec<i128> = (0..9).map(|i| (m as i128).pow(i)).collect();
        if s != want {
            failures.push(format!("restricted m={m} p={p}: {s:?}"));
        }
    }
    verdict(3, "ordinary and restricted PBW products recover 1/(1-mt)", &failures);
}

/// Sum over nonempty vertex subsets of (components of the induced graph - 1), by union-find.
fn homology_sum_oracle(k: &SimplicialComplex) -> usize {
    let m = k.vertex_count();
    let edges: Vec<(usize, usize)> = k
        .faces()
        .into_iter()
        .filter(|f| f.len() == 2)
        .map(|f| (f[0] - 1, f[1] - 1))
        .collect();
    let mut total = 0;
    for mask in 1u32..(1 << m) {
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for &(a, b) in &edges {
            if mask >> a & 1 == 1 && mask >> b & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        let roots = (0..m)
            .filter(|&v| mask >> v & 1 == 1 && find(&mut parent, v) == v)
            .count();
        total += roots - 1;
    }
    total
}

fn random_complex(rng: &mut impl Rng, m: usize) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = (0..rng.gen_range(0..=m + 2))
        .map(|_| (1..=m).filter(|_| rng.gen_bool(0.45)).collect())
        .collect();
    SimplicialComplex::from_facets(m, &facets).unwrap()
}

#[test]
fn criterion_04_generator_count() {
    let mut failures = Vec::new();
    let mut cases: Vec<(String, SimplicialComplex)> = corpus().into_iter().map(|(n, k)| (n.to_string(), k)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..50 {
        cases.push((format!("random-{i}"), random_complex(&mut rng, 5)));
    }
    for (name, k) in &cases {
        let count = enumerate_generators(k).len();
        let oracle = homology_sum_oracle(k);
        if count != oracle {
            failures.push(format!("{name}: {count} generators, homology sum {oracle}"));
        }
    }
    for (k, want) in [
        (SimplicialComplex::cycle(4), 2),
        (SimplicialComplex::points(3), 5),
        (SimplicialComplex::points(4), 17),
        (SimplicialComplex::simplex(3), 0),
    ] {
        let got = enumerate_generators(&k).len();
        if got != want {
            failures.push(format!("{k:?}: {got}, want {want}"));
        }
    }
    verdict(
        4,
        "generator count equals the reduced H_0 sum (corpus + 50 random)",
        &failures,
    );
}

#[test]
fn criterion_05_generator_membership() {
    let mut failures = Vec::new();
    for (name, k) in corpus() {
        let spec = GroupSpec::coxeter(k.clone());
        for d in enumerate_generators(&k) {
            let mut support: Vec<usize> = d.k_list.clone();
            support.extend([d.i, d.j]);
            let disconnected = k.reduced_h0_rank(&support).unwrap() > 0;
            let g = realize_generator(&spec, &d).unwrap();
            if g.abelianization().iter().any(|&x| x != 0) {
                failures.push(format!("{name} {d}: abelianization {:?}", g.abelianization()));
            }
            if disconnected && g.is_identity() {
                failures.push(format!("{name} {d}: trivial"));
            }
            if !disconnected {
                failures.push(format!("{name} {d}: supported on a connected subcomplex"));
            }
        }
    }
    verdict(
        5,
        "realized generators lie in the commutator subgroup and are nontrivial",
        &failures,
    );
}

#[test]
fn criterion_06_hilbert_formula_vs_bruteforce() {
    let mut failures = Vec::new();
    let ext = AlgebraPresentation::from_complex(&SimplicialComplex::path(3), AlgebraKind::Ext, 2).unwrap();
    let formula = ext.hilbert_series_formula(4).unwrap();
    for (n, want) in [1u128, 3, 4, 4, 4].into_iter().enumerate() {
        let brute = ext.graded_dim_bruteforce(n, DEFAULT_WORD_BUDGET).unwrap();
        if formula.coeff(n) != want as i128 || brute != want {
            failures.push(format!(
                "ext path-3 degree {n}: formula {} brute {brute}, want {want}",
                formula.coeff(n)
            ));
        }
    }
    let poly = AlgebraPresentation::from_complex(&SimplicialComplex::cycle(4), AlgebraKind::Poly, 2).unwrap();
    let formula = poly.hilbert_series_formula(6).unwrap();
    for n in 0..=6 {
        let brute = poly.graded_dim_bruteforce(n, DEFAULT_WORD_BUDGET).unwrap();
        if formula.coeff(n) != brute as i128 {
            failures.push(format!(
                "poly four-cycle degree {n}: formula {} brute {brute}",
                formula.coeff(n)
            ));
        }
    }
    verdict(
        6,
        "ext on path-3 is (1,3,4,4,4); poly on the four-cycle matches brute force",
        &failures,
    );
}

type Raw = Vec<(usize, i64)>;

fn specs() -> Vec<(String, Arc<GroupSpec>)> {
    let mut out = Vec::new();
    for (name, k) in corpus() {
        let m = k.vertex_count();
        out.push((format!("racg {name}"), GroupSpec::coxeter(k.clone())));
        out.push((format!("raag {name}"), GroupSpec::artin(k.clone())));
        out.push((format!("z3 {name}"), GroupSpec::uniform(k.clone(), 3).unwrap()));
        let mixed: Vec<Order> = (0..m)
            .map(|i| [Order::Infinite, Order::Finite(2), Order::Finite(5)][i % 3])
            .collect();
        out.push((format!("mixed {name}"), GroupSpec::new(k, mixed).unwrap()));
    }
    out
}

fn random_raw(rng: &mut impl Rng, m: usize, len: usize) -> Raw {
    (0..len)
        .map(|_| (rng.gen_range(1..=m), rng.gen_range(-3i64..=3)))
        .collect()
}

/// Applies one relation of the presentation somewhere in the word.
fn random_move(rng: &mut impl Rng, spec: &GroupSpec, w: &mut Raw) {
    match rng.gen_range(0..5) {
        0 if w.len() >= 2 => {
            let i = rng.gen_range(0..w.len() - 1);
            let (a, b) = (w[i].0, w[i + 1].0);
            if a == b || spec.graph().has_edge(a, b) {
                w.swap(i, i + 1);
            }
        }
        1 if w.len() >= 2 => {
            let i = rng.gen_range(0..w.len() - 1);
            if w[i].0 == w[i + 1].0 {
                w[i].1 += w[i + 1].1;
                w.remove(i + 1);
            }
        }
        2 if !w.is_empty() => {
            let i = rng.gen_range(0..w.len());
            if let Order::Finite(n) = spec.orders()[w[i].0 - 1] {
                w[i].1 += if rng.gen_bool(0.5) { n as i64 } else { -(n as i64) };
            }
        }
        3 if !w.is_empty() => {
            let i = rng.gen_range(0..w.len());
            let part = rng.gen_range(-2i64..=2);
            let (v, e) = w[i];
            w[i] = (v, e - part);
            w.insert(i + 1, (v, part));
        }
        _ => {
            let v = rng.gen_range(1..=spec.rank());
            let e = rng.gen_range(1i64..=3);
            let at = rng.gen_range(0..=w.len());
            w.insert(at, (v, -e));
            w.insert(at, (v, e));
        }
    }
}

#[test]
fn criterion_07_word_problem() {
    let mut failures = Vec::new();
    for (name, k) in corpus() {
        let spec = GroupSpec::coxeter(k.clone());
        let m = k.vertex_count();
        for i in 1..=m {
            for j in 1..=m {
                if i == j {
                    continue;
                }
                let g = GroupElement::normal_form(&spec, &[(i, 1), (j, 1), (i, 1), (j, 1)]).unwrap();
                if g.is_identity() != k.contains(&[i, j]) {
                    failures.push(format!("{name}: (a{i} a{j})^2 identity={}", g.is_identity()));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, spec) in specs() {
        for _ in 0..1000 {
            let len = rng.gen_range(0..8);
            let mut raw = random_raw(&mut rng, spec.rank(), len);
            let before = GroupElement::normal_form(&spec, &raw).unwrap();
            for _ in 0..rng.gen_range(1..=20) {
                random_move(&mut rng, &spec, &mut raw);
            }
            if GroupElement::normal_form(&spec, &raw).unwrap() != before {
                failures.push(format!("{name}: moves changed {raw:?}"));
            }
        }
    }
    let mut idempotent_trials = 0;
    for (name, spec) in specs() {
        for _ in 0..1000 / 20 {
            let len = rng.gen_range(0..12);
            let g = GroupElement::normal_form(&spec, &random_raw(&mut rng, spec.rank(), len)).unwrap();
            let again: Raw = g.syllables().iter().map(|s| (s.vertex, s.exponent)).collect();
            let h = GroupElement::normal_form(&spec, &again).unwrap();
            if g.syllables() != h.syllables() {
                failures.push(format!("{name}: {g} not idempotent"));
            }
            idempotent_trials += 1;
        }
    }
    assert_eq!(idempotent_trials, 1000);
    verdict(
        7,
        "pair criterion, 1000 move trials per spec, idempotence on 1000 words",
        &failures,
    );
}

#[test]
fn criterion_08_p_power_axioms() {
    let mut failures = Vec::new();
    for p in [2u64, 3] {
        match p_power_axiom_check(p, 200, 8 + p) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("p={p}: identity failed")),
            Err(e) => failures.push(format!("p={p}: {e}")),
        }
    }
    verdict(8, "restricted p-power axioms, 200 trials for p=2 and p=3", &failures);
}

#[test]
fn criterion_09_substitution() {
    let mut failures = Vec::new();
    let outer = input_for(&SimplicialComplex::points(2), "two-points");
    let part = input_for(&SimplicialComplex::simplex(2), "edge");
    let args = SubstArgs {
        p: 2,
        degree: 5,
        max_words: DEFAULT_WORD_BUDGET,
    };
    let report = cmd_subst(&outer, &[part.clone(), part], &args, 0).unwrap();
    if !report.pass {
        failures.push(format!("subst report failed: {:?}", report.checks));
    }
    let sub = SimplicialComplex::points(2)
        .substitute(&[SimplicialComplex::simplex(2), SimplicialComplex::simplex(2)])
        .unwrap();
    let formula = AlgebraPresentation::from_complex(&sub, AlgebraKind::Trunc, 2)
        .unwrap()
        .hilbert_series_formula(5)
        .unwrap();
    let hand = AlgebraPresentation::new(4, 2, vec![Some(2); 4], &[(1, 2), (3, 4)], EdgeSign::Commute).unwrap();
    for n in 0..=5 {
        let brute = hand.graded_dim_bruteforce(n, DEFAULT_WORD_BUDGET).unwrap();
        if formula.coeff(n) != brute as i128 {
            failures.push(format!(
                "degree {n}: substitution {} hand-built {brute}",
                formula.coeff(n)
            ));
        }
    }
    verdict(
        9,
        "trunc(2) of the substitution complex matches the hand-built graph product",
        &failures,
    );
}

#[test]
fn criterion_10_one_skeleton_determines_presentation() {
    let mut failures = Vec::new();
    let mut cases = corpus();
    cases.push(("boundary-3", SimplicialComplex::simplex_boundary(3)));
    for (name, k) in cases {
        let clique = SimplicialComplex::clique_complex(&k.one_skeleton());
        for kind in [AlgebraKind::Poly, AlgebraKind::Ext, AlgebraKind::Trunc] {
            for p in [2u64, 3] {
                let a = AlgebraPresentation::from_complex(&k, kind, p).unwrap();
                let b = AlgebraPresentation::from_complex(&clique, kind, p).unwrap();
                if a != b {
                    failures.push(format!("{name} {kind:?} p={p}: presentations differ"));
                }
            }
        }
        let report = cmd_analyze(&input_for(&k, name), 0).unwrap();
        if report.check_passed("presentation_matches_clique_complex") != Some(true) {
            failures.push(format!("{name}: analyze does not report the equality"));
        }
    }
    verdict(
        10,
        "presentations agree with those of the clique complex; analyze reports it",
        &failures,
    );
}
