//! The unique perfect matching of a tree and the involution it induces.

use crate::error::{Error, Result};
use crate::tree::{Edge, Tree, VertexPath};

/// A set of vertex-disjoint edges, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    pairs: Vec<Edge>,
}

impl Matching {
    /// Build a matching, rejecting pairs that share a vertex.
    pub fn new(pairs: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut pairs: Vec<Edge> = pairs.into_iter().map(|e| Edge::new(e.0, e.1)).collect();
        pairs.sort_unstable();
        let mut seen = std::collections::HashSet::new();
        for e in &pairs {
            if e.0 == e.1 || !seen.insert(e.0) || !seen.insert(e.1) {
                return Err(Error::NotPerfect);
            }
        }
        Ok(Matching { pairs })
    }

    pub fn pairs(&self) -> &[Edge] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.pairs.binary_search(&e).is_ok()
    }

    pub fn is_perfect_for(&self, n: usize) -> bool {
        2 * self.pairs.len() == n && self.pairs.iter().all(|e| e.1 < n)
    }
}

/// The unique perfect matching of `tree`, if it has one.
///
/// Leaves are stripped in rounds, each round in ascending vertex order: a
/// leaf is matched to its only remaining neighbor and both are deleted. The
/// tree has no perfect matching exactly when some vertex becomes isolated.
pub fn perfect_matching(tree: &Tree) -> Option<Matching> {
    let n = tree.n();
    if n % 2 == 1 {
        return None;
    }
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut pairs = Vec::with_capacity(n / 2);
    let mut remaining = n;
    while remaining > 0 {
        let leaves: Vec<usize> = (0..n).filter(|&v| alive[v] && degree[v] <= 1).collect();
        if leaves.is_empty() {
            // a nonempty forest always has a leaf
            unreachable!("forest without leaves");
        }
        for leaf in leaves {
            if !alive[leaf] {
                continue;
            }
            if degree[leaf] == 0 {
                return None;
            }
            let mate = *tree
                .neighbors(leaf)
                .iter()
                .find(|&&w| alive[w])
                .expect("leaf has a live neighbor");
            pairs.push(Edge::new(leaf, mate));
            for v in [leaf, mate] {
                alive[v] = false;
                for &w in tree.neighbors(v) {
                    if alive[w] {
                        degree[w] -= 1;
                    }
                }
            }
            remaining -= 2;
        }
    }
    Some(Matching::new(pairs).expect("leaf stripping yields disjoint pairs"))
}

/// A fixed-point-free involution of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Involution {
    perm: Vec<usize>,
}

impl Involution {
    /// The permutation swapping the ends of every edge of a perfect matching.
    pub fn from_matching(tree: &Tree, matching: &Matching) -> Result<Self> {
        if !matching.is_perfect_for(tree.n()) {
            return Err(Error::NotPerfect);
        }
        let mut perm = vec![usize::MAX; tree.n()];
        for e in matching.pairs() {
            perm[e.0] = e.1;
            perm[e.1] = e.0;
        }
        Ok(Involution { perm })
    }

    pub fn apply(&self, v: usize) -> usize {
        self.perm[v]
    }

    pub fn apply_edge(&self, e: Edge) -> Edge {
        Edge::new(self.perm[e.0], self.perm[e.1])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    /// `phi(T)`: relabel every edge of `tree` through the involution.
    pub fn apply_tree(&self, tree: &Tree) -> Tree {
        tree.relabel(&self.perm)
    }
}

/// `true` iff the path has `2k - 1` edges alternating in and out of the
/// matching, beginning and ending with matching edges.
pub fn is_alternating(path: &VertexPath, matching: &Matching) -> bool {
    let count = path.edge_count();
    count % 2 == 1
        && path
            .edges()
            .enumerate()
            .all(|(i, e)| matching.contains(e) == (i % 2 == 0))
}
