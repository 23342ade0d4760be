mod common;

use graphprod::complexes::mask_to_vertices;
use graphprod::{Graph, SimplicialComplex};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=6).prop_flat_map(|m| {
        prop::collection::vec(prop::collection::btree_set(1..=m, 0..=m), 0..6).prop_map(move |facets| {
            let facets: Vec<Vec<usize>> = facets.into_iter().map(|f| f.into_iter().collect()).collect();
            SimplicialComplex::from_facets(m, &facets).unwrap()
        })
    })
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=6).prop_flat_map(|m| {
        let pairs: Vec<(usize, usize)> = (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect();
        let n = pairs.len();
        prop::collection::vec(any::<bool>(), n).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::new(m, &edges).unwrap()
        })
    })
}

/// Oracle: a graph is chordal iff no induced subgraph on >= 4 vertices is a cycle.
fn chordal_brute(g: &Graph) -> bool {
    let m = g.vertex_count();
    for mask in 0u32..1 << m {
        let vs = mask_to_vertices(mask);
        if vs.len() < 4 {
            continue;
        }
        let all_degree_two = vs.iter().all(|&v| (g.neighbours(v) & mask).count_ones() == 2);
        if all_degree_two && g.component_count(mask) == 1 {
            return false;
        }
    }
    true
}

proptest! {
    #[test]
    fn faces_are_downward_closed(k in arb_complex()) {
        for face in k.faces() {
            for skip in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(skip);
                prop_assert!(k.contains(&sub));
            }
        }
        prop_assert!(k.contains(&[]));
        for v in 1..=k.vertex_count() {
            prop_assert!(k.contains(&[v]));
        }
    }

    #[test]
    fn flag_iff_equal_to_clique_complex(k in arb_complex()) {
        let clique = SimplicialComplex::clique_complex(&k.one_skeleton());
        prop_assert_eq!(k.is_flag(), clique == k);
    }

    #[test]
    fn full_subcomplex_restrictions(k in arb_complex(), picks in prop::collection::vec(any::<bool>(), 6)) {
        let all: Vec<usize> = (1..=k.vertex_count()).collect();
        prop_assert_eq!(&k.full_subcomplex(&all).unwrap(), &k);
        let j: Vec<usize> = all.iter().copied().filter(|&v| picks[v - 1]).collect();
        let kj = k.full_subcomplex(&j).unwrap();
        let idx: Vec<usize> = (1..=kj.vertex_count()).collect();
        prop_assert_eq!(&kj.full_subcomplex(&idx).unwrap(), &kj);
        // faces of K_J are exactly the faces of K inside J
        let count = k.faces().iter().filter(|f| f.iter().all(|v| j.contains(v))).count();
        prop_assert_eq!(kj.faces().len(), count);
    }

    #[test]
    fn clique_complexes_are_flag(g in arb_graph()) {
        let k = SimplicialComplex::clique_complex(&g);
        prop_assert!(k.missing_faces().iter().all(|f| f.len() == 2));
        prop_assert_eq!(k.one_skeleton(), g);
    }

    #[test]
    fn lex_bfs_chordality_matches_cycle_search(g in arb_graph()) {
        prop_assert_eq!(g.is_chordal(), chordal_brute(&g));
    }

    #[test]
    fn substituting_points_is_identity(k in arb_complex()) {
        let parts = vec![SimplicialComplex::points(1); k.vertex_count()];
        prop_assert_eq!(k.substitute(&parts).unwrap(), k);
    }

    #[test]
    fn missing_faces_are_minimal_non_faces(k in arb_complex()) {
        for f in k.missing_faces() {
            prop_assert!(!k.contains(&f));
            for skip in 0..f.len() {
                let mut sub = f.clone();
                sub.remove(skip);
                prop_assert!(k.contains(&sub));
            }
        }
    }
}

#[test]
fn substitution_flagness_on_corpus() {
    let pt = SimplicialComplex::points(1);
    for (name, k) in common::extended_corpus() {
        let m = k.vertex_count();
        let simplices: Vec<SimplicialComplex> = (0..m).map(|i| SimplicialComplex::simplex(1 + i % 2)).collect();
        let sub = k.substitute(&simplices).unwrap();
        assert_eq!(sub.is_flag(), k.is_flag(), "{name}");
        assert_eq!(
            k.substitute(&vec![pt.clone(); m]).unwrap().is_flag(),
            k.is_flag(),
            "{name}"
        );
    }
}

#[test]
fn joins_and_disjoint_unions() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let a = common::random_complex(&mut rng, 3);
        let b = common::random_complex(&mut rng, 2);
        let union = SimplicialComplex::points(2)
            .substitute(&[a.clone(), b.clone()])
            .unwrap();
        let join = SimplicialComplex::simplex(2)
            .substitute(&[a.clone(), b.clone()])
            .unwrap();
        // face counts: union adds, join multiplies (empty faces included)
        assert_eq!(union.faces().len(), a.faces().len() + b.faces().len() - 1);
        assert_eq!(join.faces().len(), a.faces().len() * b.faces().len());
    }
}
