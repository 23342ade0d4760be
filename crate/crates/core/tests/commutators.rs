mod common;

use std::collections::HashSet;

use graphprod::commutators::{enumerate_generators, freeness_report, homology_count, realize_generator};
use graphprod::{GroupSpec, SimplicialComplex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn count_matches_homology_sum_on_corpus() {
    for (name, k) in common::extended_corpus() {
        let report = freeness_report(&k);
        assert!(report.counts_agree(), "{name}");
    }
    for m in 1..=6 {
        let k = SimplicialComplex::points(m);
        // sum over k >= 2 of C(m, k)(k - 1)
        let expected: usize = (2..=m).map(|s| binomial(m, s) * (s - 1)).sum();
        assert_eq!(enumerate_generators(&k).len(), expected);
        assert_eq!(homology_count(&k), expected);
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn count_matches_homology_sum_on_random_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let k = common::random_complex(&mut rng, 5);
        let gens = enumerate_generators(&k);
        assert_eq!(gens.len(), homology_count(&k), "{k:?}");
        assert!(gens.iter().all(|d| d.is_valid_for(&k)));
    }
}

#[test]
fn realized_generators_are_distinct_commutators() {
    for (name, k) in common::extended_corpus() {
        let spec = GroupSpec::coxeter(k.clone());
        let mut seen = HashSet::new();
        for d in enumerate_generators(&k) {
            let g = realize_generator(&spec, &d).unwrap();
            assert!(g.is_in_commutator_subgroup(), "{name} {d}");
            assert!(!g.is_identity(), "{name} {d}");
            assert!(seen.insert(g), "{name} {d} repeats");
        }
    }
}

#[test]
fn complete_one_skeleton_gives_no_generators() {
    for m in 1..=5 {
        let skeleton = SimplicialComplex::simplex(m).one_skeleton();
        let edges: Vec<Vec<usize>> = skeleton.edges().into_iter().map(|(i, j)| vec![i, j]).collect();
        let k = SimplicialComplex::from_facets(m, &edges).unwrap();
        assert!(enumerate_generators(&k).is_empty());
        assert!(freeness_report(&k).free_verdict);
    }
}

#[test]
fn freeness_follows_chordality() {
    assert!(!freeness_report(&SimplicialComplex::cycle(5)).free_verdict);
    assert!(freeness_report(&SimplicialComplex::path(5)).free_verdict);
    assert_eq!(
        freeness_report(&SimplicialComplex::cycle(4)).algebra_free_verdict,
        Some(false)
    );
}
