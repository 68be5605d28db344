//! Characteristic polynomials of trees and forests.

use std::collections::HashMap;
use std::fmt;

use num_traits::ToPrimitive;

use crate::canon::{canonical_code, CanonicalCode};
use crate::poly::IntPoly;
use crate::tree::{Edge, Tree};

/// `phi(X, t) = det(tI - A(X))`, monic of degree `|V(X)|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly(IntPoly);

impl CharPoly {
    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn into_poly(self) -> IntPoly {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    /// Coefficients `c_0..c_n` as machine integers.
    pub fn coeffs(&self) -> Vec<i64> {
        self.0
            .coeffs()
            .iter()
            .map(|c| c.to_i64().expect("tree polynomial coefficients fit in i64"))
            .collect()
    }

    /// `[t^0] phi`.
    pub fn constant_term(&self) -> i64 {
        self.coeffs()[0]
    }
}

impl From<IntPoly> for CharPoly {
    fn from(p: IntPoly) -> Self {
        CharPoly(p)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Connected components of `tree` after deleting the flagged vertices, each
/// relabeled onto `0..k` in increasing vertex order.
fn remaining_components(tree: &Tree, deleted: &[bool]) -> Vec<Tree> {
    let n = tree.n();
    let mut comp = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if deleted[start] || comp[start] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut stack = vec![start];
        let mut list = Vec::new();
        comp[start] = id;
        while let Some(u) = stack.pop() {
            list.push(u);
            for &w in tree.neighbors(u) {
                if !deleted[w] && comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        list.sort_unstable();
        members.push(list);
    }
    members
        .iter()
        .map(|list| {
            let index: HashMap<usize, usize> =
                list.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let edges = tree
                .edges()
                .iter()
                .filter(|e| index.contains_key(&e.0) && index.contains_key(&e.1))
                .map(|e| Edge::new(index[&e.0], index[&e.1]));
            Tree::new(list.len(), edges).expect("component of a tree is a tree")
        })
        .collect()
}

fn tree_poly(tree: &Tree, memo: &mut HashMap<CanonicalCode, IntPoly>) -> IntPoly {
    if tree.n() == 1 {
        return IntPoly::monomial(1);
    }
    let code = canonical_code(tree);
    if let Some(p) = memo.get(&code) {
        return p.clone();
    }
    let leaf = (0..tree.n())
        .find(|&v| tree.degree(v) == 1)
        .expect("tree has a leaf");
    let stem = tree.neighbors(leaf)[0];
    let mut deleted = vec![false; tree.n()];
    deleted[leaf] = true;
    let minus_leaf = remaining_components(tree, &deleted);
    deleted[stem] = true;
    let minus_both = remaining_components(tree, &deleted);
    // phi(T) = t phi(T - v) - phi(T - v - u)
    let first = forest_poly(&minus_leaf, memo).shift(1);
    let second = forest_poly(&minus_both, memo);
    let p = &first - &second;
    memo.insert(code, p.clone());
    p
}

fn forest_poly(components: &[Tree], memo: &mut HashMap<CanonicalCode, IntPoly>) -> IntPoly {
    components
        .iter()
        .fold(IntPoly::one(), |acc, t| &acc * &tree_poly(t, memo))
}

/// Characteristic polynomial by the leaf recurrence
/// `phi(T) = t phi(T - v) - phi(T - v - u)` for a leaf `v` with neighbor `u`,
/// memoized on canonical codes of the subtrees met along the way.
pub fn char_poly(tree: &Tree) -> CharPoly {
    let mut memo = HashMap::new();
    CharPoly(tree_poly(tree, &mut memo))
}

/// Characteristic polynomial of a forest: the product over its components.
pub fn forest_char_poly(components: &[Tree]) -> CharPoly {
    let mut memo = HashMap::new();
    CharPoly(forest_poly(components, &mut memo))
}

/// `t^n phi(Y, (t^2 - 1)/t)` with denominators cleared:
/// `sum_k c_k (t^2 - 1)^k t^(n - k)` for `phi(Y) = sum_k c_k t^k`.
pub fn rooted_product_char_poly(base: &Tree) -> CharPoly {
    let n = base.n();
    let phi = char_poly(base);
    let quad = IntPoly::from_i64(&[-1, 0, 1]);
    let mut acc = IntPoly::zero();
    for (k, c) in phi.poly().coeffs().iter().enumerate() {
        let term = quad.pow(k).shift(n - k).scale(c);
        acc = &acc + &term;
    }
    CharPoly(acc)
}
