//! AHU canonical codes for unlabeled trees.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::tree::Tree;

/// Balanced-parenthesis encoding of a tree rooted at its center.
///
/// Two trees have the same code iff they are isomorphic. Codes are totally
/// ordered (bytewise), which fixes the order of isomorphism classes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of vertices encoded.
    pub fn vertex_count(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // only '(' and ')' are ever stored
        f.write_str(std::str::from_utf8(&self.0).expect("ascii"))
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The one or two central vertices of `tree`, found by peeling leaves.
pub fn centers(tree: &Tree) -> Vec<usize> {
    let n = tree.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in tree.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(tree: &Tree, root: usize) -> Vec<u8> {
    fn encode(tree: &Tree, v: usize, parent: usize) -> Vec<u8> {
        let mut children: Vec<Vec<u8>> = tree
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(tree, w, v))
            .collect();
        children.sort_unstable();
        let mut out = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        out.push(b'(');
        for c in children {
            out.extend(c);
        }
        out.push(b')');
        out
    }
    encode(tree, root, usize::MAX)
}

pub fn canonical_code(tree: &Tree) -> CanonicalCode {
    let code = centers(tree)
        .into_iter()
        .map(|c| rooted_code(tree, c))
        .min()
        .expect("a tree has at least one center");
    CanonicalCode(code)
}

pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.n() == b.n() && canonical_code(a) == canonical_code(b)
}
