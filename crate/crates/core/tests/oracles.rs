//! Library results checked against brute-force reference implementations.

mod common;

use common::*;
use invtree::{
    char_poly, enumerate_invertible, enumerate_trees, exact_inverse, inverse_entry,
    perfect_matching, IntMatrix, Tree,
};

const BOUND: usize = 14;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn class_counts_agree_with_cayley() {
    for n in 2..=8 {
        let perms = permutations(n);
        let classes = enumerate_trees(n, BOUND).unwrap();
        let reps: Vec<Vec<(usize, usize)>> = classes.representatives().map(pairs).collect();
        // orbit-stabilizer: labeled trees = sum of n!/|Aut|
        let labeled: usize = reps
            .iter()
            .map(|e| factorial(n) / automorphism_count(n, e, &perms))
            .sum();
        assert_eq!(labeled, n.pow(n as u32 - 2), "n = {n}");
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                assert!(
                    !brute_isomorphic(n, &reps[i], &reps[j], &perms),
                    "duplicate class at n = {n}"
                );
            }
        }
    }
}

#[test]
fn invertible_class_counts_agree_with_labeled_count() {
    for n in [2, 4, 6, 8] {
        let perms = permutations(n);
        let with_matching = labeled_trees(n)
            .iter()
            .filter(|e| !brute_matchings(n, e).is_empty())
            .count();
        let classes = enumerate_invertible(n, BOUND).unwrap();
        let labeled: usize = classes
            .representatives()
            .map(|t| factorial(n) / automorphism_count(n, &pairs(t), &perms))
            .sum();
        assert_eq!(labeled, with_matching, "n = {n}");
        assert!(classes
            .representatives()
            .all(|t| brute_matchings(n, &pairs(t)).len() == 1));
    }
}

#[test]
fn frozen_invertible_counts() {
    let counts: Vec<usize> = (1..=6)
        .map(|k| enumerate_invertible(2 * k, BOUND).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 5, 15, 49]);
}

#[test]
fn leaf_stripping_finds_the_unique_matching() {
    for n in 2..=12 {
        for tree in enumerate_trees(n, BOUND).unwrap().representatives() {
            let all = brute_matchings(n, &pairs(tree));
            assert!(all.len() <= 1, "tree has two perfect matchings");
            let found = perfect_matching(tree).map(|m| {
                let mut p: Vec<(usize, usize)> = m.pairs().iter().map(|e| (e.0, e.1)).collect();
                p.sort();
                p
            });
            let expected = all.into_iter().next().map(|mut p| {
                p.sort();
                p
            });
            assert_eq!(found, expected, "{tree}");
        }
    }
    // labeling must not matter
    for n in [4, 6] {
        for edges in labeled_trees(n) {
            let tree = tree_of(n, &edges);
            assert_eq!(
                perfect_matching(&tree).is_some(),
                !brute_matchings(n, &edges).is_empty()
            );
        }
    }
}

#[test]
fn inverse_agrees_with_rational_elimination() {
    for k in 1..=6 {
        let n = 2 * k;
        for tree in enumerate_invertible(n, BOUND).unwrap().representatives() {
            let a = adjacency(n, &pairs(tree));
            let oracle =
                to_integers(&rational_inverse(&a).expect("nonsingular")).expect("integral");
            assert_eq!(exact_inverse(tree).unwrap().rows(), oracle, "{tree}");
            let m = perfect_matching(tree).unwrap();
            let combinatorial: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| inverse_entry(tree, &m, i, j)).collect())
                .collect();
            assert_eq!(combinatorial, oracle, "{tree}");
            let prod = IntMatrix::from_rows(&a).mul(&IntMatrix::from_rows(&combinatorial));
            assert_eq!(prod, IntMatrix::identity(n));
        }
    }
}

#[test]
fn trees_without_matching_are_singular() {
    for n in [4, 6, 8, 10] {
        for tree in enumerate_trees(n, BOUND).unwrap().representatives() {
            if perfect_matching(tree).is_none() {
                assert!(rational_inverse(&adjacency(n, &pairs(tree))).is_none());
                assert!(exact_inverse(tree).is_err());
            }
        }
    }
}

#[test]
fn alternating_path_rule_by_brute_force() {
    for k in 1..=5 {
        let n = 2 * k;
        for tree in enumerate_invertible(n, BOUND).unwrap().representatives() {
            let edges = pairs(tree);
            let matching = brute_matchings(n, &edges).remove(0);
            let inv = to_integers(&rational_inverse(&adjacency(n, &edges)).unwrap()).unwrap();
            for (a, row) in inv.iter().enumerate() {
                for (b, &entry) in row.iter().enumerate() {
                    let expected = if a == b {
                        0
                    } else {
                        let path = tree_path(n, &edges, a, b);
                        let len = path.len() - 1;
                        let alternating = len % 2 == 1
                            && (0..len).step_by(2).all(|i| {
                                let (x, y) = (path[i], path[i + 1]);
                                matching.contains(&(x.min(y), x.max(y)))
                            });
                        if alternating {
                            if (len / 2).is_multiple_of(2) {
                                1
                            } else {
                                -1
                            }
                        } else {
                            0
                        }
                    };
                    assert_eq!(entry, expected, "{tree} entry ({a},{b})");
                }
            }
        }
    }
}

#[test]
fn char_poly_matches_matching_polynomial() {
    for n in 1..=10 {
        for tree in enumerate_trees(n, BOUND).unwrap().representatives() {
            assert_eq!(
                char_poly(tree).coeffs(),
                matching_char_poly(n, &pairs(tree)),
                "{tree}"
            );
        }
    }
    for tree in enumerate_invertible(12, BOUND).unwrap().representatives() {
        assert_eq!(
            char_poly(tree).coeffs(),
            matching_char_poly(12, &pairs(tree)),
            "{tree}"
        );
    }
    let single = Tree::new(1, []).unwrap();
    assert_eq!(char_poly(&single).coeffs(), vec![0, 1]);
}
