//! Randomized invariants.

mod common;

use common::{adjacency, pairs, prufer_decode, tree_of};
use invtree::exchange::exchange_candidates;
use invtree::{
    canonical_code, exact_inverse, parse_tree, spectrum, verify_exchange_lemma, Cut, IntMatrix,
    InvertibleTree, Involution, SignedGraph, Tree,
};
use nalgebra::DMatrix;
use proptest::prelude::*;

/// A uniformly labeled random tree on `2..=max` vertices.
fn any_tree(max: usize) -> impl Strategy<Value = Tree> {
    (2..=max).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2)
            .prop_map(move |seq| tree_of(n, &prufer_decode(&seq, n)))
    })
}

/// A random tree on `2k` vertices with perfect matching `{2i, 2i+1}`:
/// contract the matching to a random tree on `k` blobs, then attach each
/// blob edge to a random end of each blob.
fn any_invertible(max_k: usize) -> impl Strategy<Value = Tree> {
    (1..=max_k).prop_flat_map(|k| {
        let seq = proptest::collection::vec(0..k, k.saturating_sub(2));
        let ends = proptest::collection::vec((0..2usize, 0..2usize), k.saturating_sub(1));
        (seq, ends).prop_map(move |(seq, ends)| {
            let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
            if k >= 2 {
                for ((a, b), (x, y)) in prufer_decode(&seq, k).into_iter().zip(ends) {
                    edges.push((2 * a + x, 2 * b + y));
                }
            }
            tree_of(2 * k, &edges)
        })
    })
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_code_ignores_labels((tree, perm) in any_tree(14).prop_flat_map(|t| {
        let n = t.n();
        (Just(t), shuffled(n))
    })) {
        prop_assert_eq!(canonical_code(&tree), canonical_code(&tree.relabel(&perm)));
    }

    #[test]
    fn elist_round_trip(tree in any_tree(14)) {
        prop_assert_eq!(parse_tree(&tree.to_elist()).unwrap(), tree);
    }

    #[test]
    fn involution_is_an_involution(tree in any_invertible(7)) {
        let inv = InvertibleTree::new(tree.clone()).unwrap();
        let phi = Involution::from_matching(&tree, inv.matching()).unwrap();
        for v in 0..tree.n() {
            prop_assert_eq!(phi.apply(phi.apply(v)), v);
            prop_assert_ne!(phi.apply(v), v);
        }
        prop_assert_eq!(phi.apply_tree(&phi.apply_tree(&tree)), tree);
    }

    #[test]
    fn inverse_times_adjacency_is_identity(tree in any_invertible(7)) {
        let a = IntMatrix::from_rows(&adjacency(tree.n(), &pairs(&tree)));
        let inv = InvertibleTree::new(tree.clone()).unwrap().inverse_graph().matrix();
        prop_assert_eq!(a.mul(&inv), IntMatrix::identity(tree.n()));
        prop_assert_eq!(exact_inverse(&tree).unwrap(), inv);
    }

    #[test]
    fn switching_twice_is_identity(
        (tree, side) in any_invertible(7).prop_flat_map(|t| {
            let n = t.n();
            (Just(t), proptest::collection::vec(any::<bool>(), n))
        })
    ) {
        let g = InvertibleTree::new(tree.clone()).unwrap().inverse_graph();
        let chosen: Vec<usize> = (0..tree.n()).filter(|&v| side[v]).collect();
        prop_assume!(!chosen.is_empty() && chosen.len() < tree.n());
        let cut = Cut::new(tree.n(), chosen.iter().copied());
        let complement = Cut::new(tree.n(), (0..tree.n()).filter(|v| !side[*v]));
        prop_assert_eq!(&cut, &complement);
        prop_assert_eq!(g.switch(&cut).switch(&cut), g);
    }

    #[test]
    fn signed_json_round_trip(tree in any_invertible(7)) {
        let g = InvertibleTree::new(tree).unwrap().inverse_graph();
        prop_assert_eq!(SignedGraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn spectrum_agrees_with_dense_eigensolver(tree in any_tree(14)) {
        let n = tree.n();
        let a = adjacency(n, &pairs(&tree));
        let m = DMatrix::from_fn(n, n, |i, j| a[i][j] as f64);
        let mut dense: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
        dense.sort_by(f64::total_cmp);
        let exact = spectrum(&tree, 1e-12);
        prop_assert_eq!(exact.len(), n);
        for (x, y) in exact.values.iter().zip(&dense) {
            prop_assert!((x - y).abs() < 1e-9, "{} vs {}", x, y);
        }
        prop_assert!(exact.is_symmetric());
    }

    #[test]
    fn every_exchange_shrinks_the_inverse(tree in any_invertible(5)) {
        for mv in exchange_candidates(&tree).unwrap() {
            let report = verify_exchange_lemma(&tree, &mv).unwrap();
            prop_assert!(report.passed(), "{:?}", report.failures);
            prop_assert!(report.inverse_edges_after < report.inverse_edges_before);
        }
    }
}
