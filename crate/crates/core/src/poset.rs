//! The order on invertible trees generated by tree-exchange.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_code, CanonicalCode};
use crate::enumeration::enumerate_invertible;
use crate::error::{Error, Result};
use crate::exchange::candidates_of;
use crate::inverse::InvertibleTree;
use crate::spectral::{compare_medians, median_eigenvalue};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PosetNode {
    pub code: CanonicalCode,
    pub representative: Tree,
    pub median: f64,
    pub inverse_edges: usize,
}

/// Isomorphism classes of invertible trees on `2n` vertices, with `i -> j`
/// whenever some exchange on class `i` yields a tree in class `j`.
#[derive(Debug, Clone)]
pub struct HassePoset {
    half_order: usize,
    nodes: Vec<PosetNode>,
    steps: Vec<(usize, usize)>,
    covers: Vec<(usize, usize)>,
    // above[i][j]: j is reachable from i in at least one step
    above: Vec<Vec<bool>>,
}

/// Build the poset on invertible trees with `2n` vertices.
pub fn build_poset(n: usize, bound: usize) -> Result<HassePoset> {
    let classes = enumerate_invertible(2 * n, bound)?;
    let index: BTreeMap<&CanonicalCode, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, (c, _))| (c, i))
        .collect();
    let reps: Vec<(&CanonicalCode, &Tree)> = classes.iter().collect();

    let per_node: Vec<(PosetNode, BTreeSet<usize>)> = reps
        .par_iter()
        .map(|&(code, tree)| {
            let inv = InvertibleTree::new(tree.clone()).expect("class is invertible");
            let targets = candidates_of(&inv)
                .iter()
                .map(|mv| {
                    let next = tree
                        .with_swapped_edge(mv.add, mv.remove)
                        .expect("valid move");
                    index[&canonical_code(&next)]
                })
                .collect();
            let node = PosetNode {
                code: code.clone(),
                representative: tree.clone(),
                median: median_eigenvalue(tree).expect("even order"),
                inverse_edges: inv.inverse_graph().edge_count(),
            };
            (node, targets)
        })
        .collect();

    let count = per_node.len();
    let mut nodes = Vec::with_capacity(count);
    let mut succ: Vec<Vec<usize>> = Vec::with_capacity(count);
    let mut steps = Vec::new();
    for (i, (node, targets)) in per_node.into_iter().enumerate() {
        nodes.push(node);
        steps.extend(targets.iter().map(|&j| (i, j)));
        succ.push(targets.into_iter().collect());
    }

    let mut above = vec![vec![false; count]; count];
    for (start, row) in above.iter_mut().enumerate() {
        let mut stack = succ[start].clone();
        while let Some(u) = stack.pop() {
            if !row[u] {
                row[u] = true;
                stack.extend(&succ[u]);
            }
        }
    }
    if above.iter().enumerate().any(|(i, row)| row[i]) {
        return Err(Error::CyclicRelation);
    }

    let covers = steps
        .iter()
        .copied()
        .filter(|&(i, j)| !(0..count).any(|k| k != j && above[i][k] && above[k][j]))
        .collect();

    Ok(HassePoset {
        half_order: n,
        nodes,
        steps,
        covers,
        above,
    })
}

impl HassePoset {
    /// `n`, half the vertex count of the trees.
    pub fn half_order(&self) -> usize {
        self.half_order
    }

    pub fn nodes(&self) -> &[PosetNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    /// Deduplicated one-step exchange edges between classes.
    pub fn steps(&self) -> &[(usize, usize)] {
        &self.steps
    }

    /// Cover pairs `(lower, upper)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, code: &CanonicalCode) -> Option<usize> {
        self.nodes.iter().position(|n| &n.code == code)
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.above[i][j]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.above[i][j]
    }

    /// Whether no two distinct classes reach each other.
    pub fn is_antisymmetric(&self) -> bool {
        let c = self.len();
        (0..c).all(|i| (0..c).all(|j| i == j || !(self.above[i][j] && self.above[j][i])))
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !self.covers.iter().any(|&(lo, _)| lo == i))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !self.covers.iter().any(|&(_, hi)| hi == i))
            .collect()
    }

    /// Certified check that the median strictly increases along every
    /// cover pair. Returns the first offending pair.
    pub fn first_non_increasing_cover(&self) -> Result<Option<(usize, usize)>> {
        for &(lo, hi) in &self.covers {
            let ord = compare_medians(
                &self.nodes[lo].representative,
                &self.nodes[hi].representative,
            )?;
            if ord != Ordering::Less {
                return Ok(Some((lo, hi)));
            }
        }
        Ok(None)
    }

    /// Möbius function on comparable pairs `x <= y`; incomparable pairs are
    /// zero and omitted.
    pub fn mobius(&self) -> BTreeMap<(usize, usize), i64> {
        let c = self.len();
        let below_count: Vec<usize> = (0..c)
            .map(|j| (0..c).filter(|&i| self.above[i][j]).count())
            .collect();
        // strictly larger elements have strictly larger down-sets
        let mut order: Vec<usize> = (0..c).collect();
        order.sort_by_key(|&i| (below_count[i], i));
        let mut mu = BTreeMap::new();
        for x in 0..c {
            mu.insert((x, x), 1);
            for &y in &order {
                if !self.above[x][y] {
                    continue;
                }
                let sum: i64 = (0..c)
                    .filter(|&z| self.leq(x, z) && self.above[z][y])
                    .map(|z| mu[&(x, z)])
                    .sum();
                mu.insert((x, y), -sum);
            }
        }
        mu
    }

    /// DOT with each node labeled by its code and median; edges point from
    /// lower to upper and are drawn bottom to top.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph poset_{} {{\n  rankdir=BT;\n", self.half_order);
        for (i, node) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{}\\n{:.7}\"];", node.code, node.median);
        }
        for &(lo, hi) in &self.covers {
            let _ = writeln!(out, "  {lo} -> {hi};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json_value(&self) -> PosetJson {
        let maximal: BTreeSet<usize> = self.maximal_elements().into_iter().collect();
        let minimal: BTreeSet<usize> = self.minimal_elements().into_iter().collect();
        PosetJson {
            n: self.half_order,
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(i, node)| NodeJson {
                    code: node.code.to_string(),
                    edges: node
                        .representative
                        .edges()
                        .iter()
                        .map(|e| [e.0, e.1])
                        .collect(),
                    median: node.median,
                    maximal: maximal.contains(&i),
                    minimal: minimal.contains(&i),
                })
                .collect(),
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
            mobius: self
                .mobius()
                .into_iter()
                .map(|((a, b), m)| (a, b, m))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct NodeJson {
    pub code: String,
    pub edges: Vec<[usize; 2]>,
    pub median: f64,
    pub maximal: bool,
    pub minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub nodes: Vec<NodeJson>,
    pub covers: Vec<[usize; 2]>,
    pub mobius: Vec<(usize, usize, i64)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_posets() {
        for n in [1, 2] {
            let p = build_poset(n, 14).unwrap();
            assert_eq!(p.len(), 1);
            assert!(p.covers().is_empty());
            assert!(crate::is_isomorphic(
                &p.nodes()[0].representative,
                &Tree::path(2 * n)
            ));
        }
    }

    #[test]
    fn chain_for_six_vertices() {
        let p = build_poset(3, 14).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.covers().len(), 1);
        let p6 = p.index_of(&canonical_code(&Tree::path(6))).unwrap();
        let t6 = p
            .index_of(&canonical_code(&Tree::elongated_caterpillar(3)))
            .unwrap();
        assert_eq!(p.covers(), &[(p6, t6)]);
        assert_eq!(p.minimal_elements(), vec![p6]);
        assert_eq!(p.maximal_elements(), vec![t6]);
        assert_eq!(p.mobius()[&(p6, t6)], -1);
        assert_eq!(p.first_non_increasing_cover().unwrap(), None);
    }

    #[test]
    fn mobius_of_chain_and_diamond() {
        // 0 < 1 < 2 chain: mu(0,2) = 0
        let chain = HassePoset {
            half_order: 0,
            nodes: Vec::new(),
            steps: vec![(0, 1), (1, 2)],
            covers: vec![(0, 1), (1, 2)],
            above: vec![
                vec![false, true, true],
                vec![false, false, true],
                vec![false, false, false],
            ],
        };
        let mu = chain.mobius();
        assert_eq!(mu[&(0, 1)], -1);
        assert_eq!(mu[&(0, 2)], 0);
        // diamond 0 < 1,2 < 3: mu(0,3) = 1
        let diamond = HassePoset {
            half_order: 0,
            nodes: Vec::new(),
            steps: vec![(0, 1), (0, 2), (1, 3), (2, 3)],
            covers: vec![(0, 1), (0, 2), (1, 3), (2, 3)],
            above: vec![
                vec![false, true, true, true],
                vec![false, false, false, true],
                vec![false, false, false, true],
                vec![false, false, false, false],
            ],
        };
        assert_eq!(diamond.mobius()[&(0, 3)], 1);
        assert!(!diamond.mobius().contains_key(&(1, 2)));
    }

    #[test]
    fn exports() {
        let p = build_poset(3, 14).unwrap();
        let dot = p.to_dot();
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("0.4450419"));
        assert!(dot.contains("0.5176381"));
        let json: PosetJson = serde_json::from_str(&p.to_json()).unwrap();
        assert_eq!(json.nodes.len(), 2);
        assert_eq!(json.covers.len(), 1);
    }
}
