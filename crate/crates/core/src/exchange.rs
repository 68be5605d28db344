//! Tree-exchange: trade a non-matching edge for the image of an extra edge of
//! the inverse graph.

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::inverse::{InvertibleTree, SimpleGraph};
use crate::spectral::compare_medians;
use crate::tree::{Edge, Tree};

/// One tree-exchange step: insert `add = phi(e)` and delete `remove`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ExchangeMove {
    pub add: Edge,
    pub remove: Edge,
    pub source_inverse_edge: Edge,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveViolation {
    #[error("source edge {0} is not an edge of the inverse graph")]
    NotInverseEdge(Edge),
    #[error("added edge {add} is not the image {expected} of the source edge")]
    WrongImage { add: Edge, expected: Edge },
    #[error("added edge {0} is already an edge of the tree")]
    AlreadyInTree(Edge),
    #[error("removed edge {0} is not on the fundamental cycle of the added edge")]
    NotOnCycle(Edge),
    #[error("removed edge {0} is a matching edge")]
    MatchingEdge(Edge),
}

/// Edges of the unique cycle of `tree + extra`: the tree path between the
/// ends of `extra`, followed by `extra` itself.
pub fn fundamental_cycle(tree: &Tree, extra: Edge) -> Result<Vec<Edge>> {
    if tree.has_edge(extra) {
        return Err(Error::EdgeAlreadyPresent(extra));
    }
    let path = tree.path_between(extra.0, extra.1)?;
    Ok(path.edges().chain([extra]).collect())
}

/// Every valid move on `tree`, sorted.
pub fn exchange_candidates(tree: &Tree) -> Result<Vec<ExchangeMove>> {
    let inv = InvertibleTree::new(tree.clone())?;
    Ok(candidates_of(&inv))
}

pub(crate) fn candidates_of(inv: &InvertibleTree) -> Vec<ExchangeMove> {
    let tree = inv.tree();
    let phi = inv.involution();
    let mut moves = Vec::new();
    for (e, _) in inv.inverse_graph().signed_edges() {
        let add = phi.apply_edge(e);
        if tree.has_edge(add) {
            continue;
        }
        let cycle = fundamental_cycle(tree, add).expect("add is absent from the tree");
        for f in cycle {
            if f != add && !inv.matching().contains(f) {
                moves.push(ExchangeMove {
                    add,
                    remove: f,
                    source_inverse_edge: e,
                });
            }
        }
    }
    moves.sort();
    moves
}

fn validate(inv: &InvertibleTree, mv: &ExchangeMove) -> std::result::Result<(), MoveViolation> {
    let tree = inv.tree();
    let e = mv.source_inverse_edge;
    if inv.inverse_graph().sign(e).is_none() {
        return Err(MoveViolation::NotInverseEdge(e));
    }
    let expected = inv.involution().apply_edge(e);
    if mv.add != expected {
        return Err(MoveViolation::WrongImage {
            add: mv.add,
            expected,
        });
    }
    if tree.has_edge(mv.add) {
        return Err(MoveViolation::AlreadyInTree(mv.add));
    }
    let cycle = fundamental_cycle(tree, mv.add).expect("add is absent from the tree");
    if mv.remove == mv.add || !cycle.contains(&mv.remove) {
        return Err(MoveViolation::NotOnCycle(mv.remove));
    }
    if inv.matching().contains(mv.remove) {
        return Err(MoveViolation::MatchingEdge(mv.remove));
    }
    Ok(())
}

/// `T + add - remove`, after checking the move against `tree`.
pub fn tree_exchange(tree: &Tree, mv: &ExchangeMove) -> Result<Tree> {
    let inv = InvertibleTree::new(tree.clone())?;
    validate(&inv, mv)?;
    Ok(tree
        .with_swapped_edge(mv.add, mv.remove)
        .expect("exchange along a cycle keeps a tree"))
}

/// Build a move from a user-supplied edge that may be either `e` or
/// `phi(e)`. The literal reading as the added edge wins when both apply.
pub fn normalize_move(tree: &Tree, given: Edge, remove: Edge) -> Result<ExchangeMove> {
    let inv = InvertibleTree::new(tree.clone())?;
    let phi = inv.involution();
    let graph = inv.inverse_graph();
    let mirrored = phi.apply_edge(given);
    let mv = if !tree.has_edge(given) && graph.sign(mirrored).is_some() {
        ExchangeMove {
            add: given,
            remove,
            source_inverse_edge: mirrored,
        }
    } else {
        ExchangeMove {
            add: mirrored,
            remove,
            source_inverse_edge: given,
        }
    };
    validate(&inv, &mv)?;
    Ok(mv)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ExchangeClause {
    /// every edge of the new inverse graph is an edge of the old one
    Subgraph,
    /// the new inverse graph has strictly fewer edges
    Proper,
    /// `phi(remove)` is in the old inverse graph but not in the new one
    RemovedImageDropped,
    /// the median eigenvalue strictly increases
    MedianIncreases,
}

impl ExchangeClause {
    pub fn describe(self) -> &'static str {
        match self {
            ExchangeClause::Subgraph => "new inverse graph is a subgraph of the old",
            ExchangeClause::Proper => "containment is strict",
            ExchangeClause::RemovedImageDropped => "phi(f) leaves the inverse graph",
            ExchangeClause::MedianIncreases => "median eigenvalue strictly increases",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeReport {
    pub result: Tree,
    pub failures: Vec<ExchangeClause>,
    pub inverse_edges_before: usize,
    pub inverse_edges_after: usize,
}

impl ExchangeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Apply `mv` and check that the inverse graph shrinks properly and that the
/// median eigenvalue goes up.
pub fn verify_exchange_lemma(tree: &Tree, mv: &ExchangeMove) -> Result<ExchangeReport> {
    let before = InvertibleTree::new(tree.clone())?;
    validate(&before, mv)?;
    let result = tree
        .with_swapped_edge(mv.add, mv.remove)
        .expect("valid move");
    let after = InvertibleTree::new(result.clone()).expect("matching survives the exchange");
    debug_assert_eq!(after.matching(), before.matching());

    let old: SimpleGraph = before.inverse_graph().underlying();
    let new: SimpleGraph = after.inverse_graph().underlying();
    let mut failures = Vec::new();
    if !new.is_subgraph_of(&old) {
        failures.push(ExchangeClause::Subgraph);
    }
    if new.edge_count() >= old.edge_count() {
        failures.push(ExchangeClause::Proper);
    }
    let dropped = before.involution().apply_edge(mv.remove);
    if !old.has_edge(dropped) || new.has_edge(dropped) {
        failures.push(ExchangeClause::RemovedImageDropped);
    }
    if compare_medians(tree, &result)? != Ordering::Less {
        failures.push(ExchangeClause::MedianIncreases);
    }
    Ok(ExchangeReport {
        result,
        failures,
        inverse_edges_before: old.edge_count(),
        inverse_edges_after: new.edge_count(),
    })
}

/// Whether `tree` is isomorphic to its inverse graph.
pub fn is_self_inverse(tree: &Tree) -> Result<bool> {
    let inv = InvertibleTree::new(tree.clone())?;
    let graph = inv.inverse_graph().underlying();
    Ok(graph.as_tree().is_some_and(|g| is_isomorphic(&g, tree)))
}

/// If every matching edge has an end of degree 1, the base tree obtained by
/// deleting those ends (relabeled in increasing order of the survivors).
pub fn rooted_product_base(tree: &Tree) -> Result<Option<Tree>> {
    let inv = InvertibleTree::new(tree.clone())?;
    let mut deleted = vec![false; tree.n()];
    for e in inv.matching().pairs() {
        // for K_2 itself both ends are leaves; keep the smaller label
        if tree.degree(e.1) == 1 {
            deleted[e.1] = true;
        } else if tree.degree(e.0) == 1 {
            deleted[e.0] = true;
        } else {
            return Ok(None);
        }
    }
    let survivors: Vec<usize> = (0..tree.n()).filter(|&v| !deleted[v]).collect();
    let mut index = vec![usize::MAX; tree.n()];
    for (i, &v) in survivors.iter().enumerate() {
        index[v] = i;
    }
    let edges = tree
        .edges()
        .iter()
        .filter(|e| !deleted[e.0] && !deleted[e.1])
        .map(|e| Edge::new(index[e.0], index[e.1]));
    Ok(Some(
        Tree::new(survivors.len(), edges).expect("deleting pendant ends keeps a tree"),
    ))
}

pub fn is_rooted_product_k2(tree: &Tree) -> Result<bool> {
    Ok(rooted_product_base(tree)?.is_some())
}

/// A tree one exchange step below `tree`, built around a vertex of degree at
/// least 3.
///
/// With `v` the smallest such vertex, `w` its mate, `x < y` its two smallest
/// other neighbors and `a`, `b` the mates of `x`, `y`: the witness is
/// `T' = T + xb - vx`, and the move on `T'` adds `xv = phi({a, w})` and
/// removes `xb`, giving back `T` exactly. `None` when the maximum degree is
/// at most 2.
pub fn witness_non_minimal(tree: &Tree) -> Result<Option<(Tree, ExchangeMove)>> {
    let inv = InvertibleTree::new(tree.clone())?;
    let Some(v) = (0..tree.n()).find(|&v| tree.degree(v) >= 3) else {
        return Ok(None);
    };
    let phi = inv.involution();
    let w = phi.apply(v);
    let mut others = tree.neighbors(v).iter().copied().filter(|&u| u != w);
    let x = others.next().expect("degree at least 3");
    let y = others.next().expect("degree at least 3");
    let (a, b) = (phi.apply(x), phi.apply(y));
    let witness = tree
        .with_swapped_edge(Edge::new(x, b), Edge::new(v, x))
        .expect("rerouting x below y keeps a tree");
    let mv = ExchangeMove {
        add: Edge::new(x, v),
        remove: Edge::new(x, b),
        source_inverse_edge: Edge::new(a, w),
    };
    Ok(Some((witness, mv)))
}
