#![allow(dead_code)]

use graphprod::SimplicialComplex;
use rand::Rng;

/// The named test corpus.
pub fn corpus() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("two-points", SimplicialComplex::points(2)),
        ("three-points", SimplicialComplex::points(3)),
        ("path-3", SimplicialComplex::path(3)),
        ("four-cycle", SimplicialComplex::cycle(4)),
        ("simplex-3", SimplicialComplex::simplex(3)),
    ]
}

/// A few more shapes for invariants that are cheap to check.
pub fn extended_corpus() -> Vec<(&'static str, SimplicialComplex)> {
    let mut out = corpus();
    out.push(("boundary-3", SimplicialComplex::simplex_boundary(3)));
    out.push(("four-points", SimplicialComplex::points(4)));
    out.push(("path-4", SimplicialComplex::path(4)));
    out.push(("five-cycle", SimplicialComplex::cycle(5)));
    out.push((
        "square-with-triangle",
        SimplicialComplex::from_facets(5, &[vec![1, 2, 3], vec![3, 4], vec![4, 5], vec![1, 5]]).unwrap(),
    ));
    out
}

/// Random complex on `m` vertices: a handful of random facets.
pub fn random_complex(rng: &mut impl Rng, m: usize) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = (0..rng.gen_range(0..=m + 2))
        .map(|_| (1..=m).filter(|_| rng.gen_bool(0.45)).collect())
        .collect();
    SimplicialComplex::from_facets(m, &facets).unwrap()
}
