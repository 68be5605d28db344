//! Unlabeled trees on a fixed vertex count, one representative per class.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::matching::perfect_matching;
use crate::tree::{Edge, Tree};

pub const DEFAULT_MAX_VERTICES: usize = 14;

/// Environment variable overriding [`DEFAULT_MAX_VERTICES`].
pub const MAX_VERTICES_ENV: &str = "INVTREE_MAX_VERTICES";

/// The vertex bound from `INVTREE_MAX_VERTICES`, or the default.
pub fn max_vertices_from_env() -> usize {
    std::env::var(MAX_VERTICES_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_VERTICES)
}

/// Isomorphism classes keyed by canonical code.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TreeClassSet {
    classes: BTreeMap<CanonicalCode, Tree>,
}

impl TreeClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn get(&self, code: &CanonicalCode) -> Option<&Tree> {
        self.classes.get(code)
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.classes.contains_key(code)
    }

    /// Classes in code order.
    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalCode, &Tree)> {
        self.classes.iter()
    }

    pub fn representatives(&self) -> impl Iterator<Item = &Tree> {
        self.classes.values()
    }

    /// Insert, keeping the lexicographically smallest labeled edge list.
    fn offer(&mut self, code: CanonicalCode, tree: Tree) {
        match self.classes.get_mut(&code) {
            Some(existing) if tree.edges() < existing.edges() => *existing = tree,
            Some(_) => {}
            None => {
                self.classes.insert(code, tree);
            }
        }
    }

    fn merge(mut self, other: TreeClassSet) -> TreeClassSet {
        for (code, tree) in other.classes {
            self.offer(code, tree);
        }
        self
    }
}

impl<'a> IntoIterator for &'a TreeClassSet {
    type Item = (&'a CanonicalCode, &'a Tree);
    type IntoIter = std::collections::btree_map::Iter<'a, CanonicalCode, Tree>;

    fn into_iter(self) -> Self::IntoIter {
        self.classes.iter()
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::BoundExceeded {
            requested: n,
            bound,
        })
    } else {
        Ok(())
    }
}

/// One representative per unlabeled tree on `n` vertices.
///
/// Every tree on `k + 1` vertices arises from a tree on `k` vertices by
/// attaching a leaf, so classes are grown one vertex at a time from the
/// representatives of the previous size: the new leaf is vertex `k`. Among
/// the labeled forms produced for a class, the smallest edge list is kept,
/// which makes the output independent of how the work is scheduled.
pub fn enumerate_trees(n: usize, bound: usize) -> Result<TreeClassSet> {
    check_bound(n, bound)?;
    if n == 0 {
        return Err(Error::NotATree("a tree needs at least one vertex".into()));
    }
    let mut current = TreeClassSet::default();
    current.offer(canonical_code(&Tree::path(1)), Tree::path(1));
    for k in 1..n {
        let parents: Vec<&Tree> = current.representatives().collect();
        current = parents
            .par_iter()
            .map(|parent| {
                let mut local = TreeClassSet::default();
                for v in 0..k {
                    let edges = parent.edges().iter().copied().chain([Edge(v, k)]);
                    let child = Tree::new(k + 1, edges).expect("attaching a leaf keeps a tree");
                    local.offer(canonical_code(&child), child);
                }
                local
            })
            .reduce(TreeClassSet::default, TreeClassSet::merge);
    }
    Ok(current)
}

/// The invertible trees on `two_n` vertices: those with a perfect matching.
pub fn enumerate_invertible(two_n: usize, bound: usize) -> Result<TreeClassSet> {
    if two_n % 2 == 1 {
        return Err(Error::OddOrder(two_n));
    }
    let all = enumerate_trees(two_n, bound)?;
    let classes = all
        .classes
        .into_iter()
        .filter(|(_, t)| perfect_matching(t).is_some())
        .collect();
    Ok(TreeClassSet { classes })
}
