//! The inverse of an invertible tree as a signed graph, fundamental cuts of
//! the relabeled tree inside it, and switching.
//!
//! Everything here is exact integer arithmetic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matching::{is_alternating, perfect_matching, Involution, Matching};
use crate::matrix::IntMatrix;
use crate::tree::{Edge, Tree};

/// A tree together with its perfect matching and the matching involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvertibleTree {
    tree: Tree,
    matching: Matching,
    phi: Involution,
}

impl InvertibleTree {
    pub fn new(tree: Tree) -> Result<Self> {
        let matching = perfect_matching(&tree).ok_or(Error::NotInvertible)?;
        let phi = Involution::from_matching(&tree, &matching)?;
        Ok(InvertibleTree {
            tree,
            matching,
            phi,
        })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    pub fn involution(&self) -> &Involution {
        &self.phi
    }

    /// `phi(T)`.
    pub fn image(&self) -> Tree {
        self.phi.apply_tree(&self.tree)
    }

    /// Half the vertex count.
    pub fn half_order(&self) -> usize {
        self.tree.n() / 2
    }

    pub fn inverse_graph(&self) -> SignedGraph {
        signed_inverse(&self.tree, &self.matching)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn from_parity(negative: bool) -> Sign {
        if negative {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value() as i8
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, Self::Error> {
        match v {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            _ => Err(format!("sign must be +1 or -1, got {v}")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+1",
            Sign::Negative => "-1",
        })
    }
}

/// An unsigned simple graph on `{0..n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let edges = edges
            .into_iter()
            .map(|e| Edge::new(e.0, e.1))
            .collect::<BTreeSet<_>>();
        assert!(
            edges.iter().all(|e| e.0 != e.1 && e.1 < n),
            "invalid edge for {n} vertices"
        );
        SimpleGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.n == other.n && self.edges.is_subset(&other.edges)
    }

    /// The graph as a tree, when it is one.
    pub fn as_tree(&self) -> Option<Tree> {
        Tree::new(self.n, self.edges.iter().copied()).ok()
    }

    pub fn to_elist(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for e in &self.edges {
            let _ = writeln!(out, "{} {}", e.0, e.1);
        }
        out
    }
}

impl From<&Tree> for SimpleGraph {
    fn from(t: &Tree) -> Self {
        SimpleGraph {
            n: t.n(),
            edges: t.edges().iter().copied().collect(),
        }
    }
}

/// A graph whose edges carry signs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    signs: BTreeMap<Edge, Sign>,
}

#[derive(Serialize, Deserialize)]
struct SignedEdgeJson {
    u: usize,
    v: usize,
    sign: Sign,
}

#[derive(Serialize, Deserialize)]
struct SignedGraphJson {
    n: usize,
    edges: Vec<SignedEdgeJson>,
}

impl SignedGraph {
    pub fn new(n: usize, signed_edges: impl IntoIterator<Item = (Edge, Sign)>) -> Self {
        let signs: BTreeMap<Edge, Sign> = signed_edges
            .into_iter()
            .map(|(e, s)| (Edge::new(e.0, e.1), s))
            .collect();
        assert!(
            signs.keys().all(|e| e.0 != e.1 && e.1 < n),
            "invalid edge for {n} vertices"
        );
        SignedGraph { n, signs }
    }

    /// Read a symmetric matrix with zero diagonal and entries in `{0, ±1}`.
    pub fn from_matrix(m: &IntMatrix) -> Option<Self> {
        let n = m.n();
        let mut signs = BTreeMap::new();
        for i in 0..n {
            if m.get(i, i) != 0 {
                return None;
            }
            for j in (i + 1)..n {
                if m.get(i, j) != m.get(j, i) {
                    return None;
                }
                match m.get(i, j) {
                    0 => {}
                    1 => {
                        signs.insert(Edge(i, j), Sign::Positive);
                    }
                    -1 => {
                        signs.insert(Edge(i, j), Sign::Negative);
                    }
                    _ => return None,
                }
            }
        }
        Some(SignedGraph { n, signs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.signs.len()
    }

    pub fn sign(&self, e: Edge) -> Option<Sign> {
        self.signs.get(&e).copied()
    }

    pub fn signed_edges(&self) -> impl Iterator<Item = (Edge, Sign)> + '_ {
        self.signs.iter().map(|(&e, &s)| (e, s))
    }

    pub fn negative_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.signed_edges()
            .filter(|(_, s)| *s == Sign::Negative)
            .map(|(e, _)| e)
    }

    pub fn all_positive(&self) -> bool {
        self.signs.values().all(|&s| s == Sign::Positive)
    }

    /// Signed adjacency matrix.
    pub fn matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for (&e, &s) in &self.signs {
            m.set(e.0, e.1, s.value());
            m.set(e.1, e.0, s.value());
        }
        m
    }

    /// `true` if every edge of `self` is an edge of `other` with the same sign.
    pub fn is_signed_subgraph_of(&self, other: &SignedGraph) -> bool {
        self.n == other.n
            && self
                .signs
                .iter()
                .all(|(e, s)| other.signs.get(e) == Some(s))
    }

    /// The graph with signs forgotten.
    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph {
            n: self.n,
            edges: self.signs.keys().copied().collect(),
        }
    }

    /// Negate the sign of every edge crossing `cut`.
    pub fn switch(&self, cut: &Cut) -> SignedGraph {
        let signs = self
            .signs
            .iter()
            .map(|(&e, &s)| (e, if cut.separates(e) { s.flip() } else { s }))
            .collect();
        SignedGraph { n: self.n, signs }
    }

    pub fn to_json(&self) -> String {
        let doc = SignedGraphJson {
            n: self.n,
            edges: self
                .signed_edges()
                .map(|(e, sign)| SignedEdgeJson {
                    u: e.0,
                    v: e.1,
                    sign,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        let doc: SignedGraphJson = serde_json::from_str(text)?;
        Ok(SignedGraph::new(
            doc.n,
            doc.edges.into_iter().map(|e| (Edge::new(e.u, e.v), e.sign)),
        ))
    }

    /// Signed edge list: the vertex count, then `u v sign` per edge.
    pub fn to_elist(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (e, s) in self.signed_edges() {
            let _ = writeln!(out, "{} {} {}", e.0, e.1, s);
        }
        out
    }

    /// DOT with negative edges dashed, positive edges solid, and the edges
    /// of `matching` (if given) bold.
    pub fn to_dot(&self, name: &str, matching: Option<&Matching>) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for (e, s) in self.signed_edges() {
            let mut style = match s {
                Sign::Positive => "solid".to_string(),
                Sign::Negative => "dashed".to_string(),
            };
            if matching.is_some_and(|m| m.contains(e)) {
                style.push_str(",bold");
            }
            let _ = writeln!(
                out,
                "  {} -- {} [style=\"{}\", label=\"{}\"];",
                e.0, e.1, style, s
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Plain DOT for an unsigned graph, with `matching` edges bold.
pub fn simple_graph_dot(g: &SimpleGraph, name: &str, matching: Option<&Matching>) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.edges() {
        if matching.is_some_and(|m| m.contains(e)) {
            let _ = writeln!(out, "  {} -- {} [style=\"bold\"];", e.0, e.1);
        } else {
            let _ = writeln!(out, "  {} -- {};", e.0, e.1);
        }
    }
    out.push_str("}\n");
    out
}

/// A vertex bipartition, stored by one side.
///
/// The stored side is the smaller one; on a tie, the side holding the
/// smallest vertex label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cut {
    n: usize,
    side: Vec<usize>,
}

impl Cut {
    pub fn new(n: usize, side: impl IntoIterator<Item = usize>) -> Self {
        let mut in_side = vec![false; n];
        for v in side {
            in_side[v] = true;
        }
        let count = in_side.iter().filter(|&&b| b).count();
        assert!(
            count > 0 && count < n,
            "cut side must be a nonempty proper subset"
        );
        let complement = n - count;
        let keep = count < complement || (count == complement && in_side[0]);
        let side = (0..n).filter(|&v| in_side[v] == keep).collect();
        Cut { n, side }
    }

    pub fn side(&self) -> &[usize] {
        &self.side
    }

    pub fn contains(&self, v: usize) -> bool {
        self.side.binary_search(&v).is_ok()
    }

    /// `true` when exactly one end of `e` lies on the stored side.
    pub fn separates(&self, e: Edge) -> bool {
        self.contains(e.0) != self.contains(e.1)
    }

    pub fn crossing_edges<'a>(&'a self, g: &'a SimpleGraph) -> impl Iterator<Item = Edge> + 'a {
        g.edges().filter(|&e| self.separates(e))
    }
}

/// The fundamental cut of `tree_edge` with respect to `spanning_tree` in
/// `graph`: the vertex split obtained by deleting that edge from the tree.
pub fn fundamental_cut(graph: &SimpleGraph, spanning_tree: &Tree, tree_edge: Edge) -> Result<Cut> {
    if !spanning_tree.has_edge(tree_edge) || !graph.has_edge(tree_edge) {
        return Err(Error::NotSpanningTreeEdge(tree_edge));
    }
    let mut seen = vec![false; spanning_tree.n()];
    let mut stack = vec![tree_edge.0];
    seen[tree_edge.0] = true;
    while let Some(u) = stack.pop() {
        for &w in spanning_tree.neighbors(u) {
            if !seen[w] && Edge::new(u, w) != tree_edge {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    Ok(Cut::new(
        spanning_tree.n(),
        (0..spanning_tree.n()).filter(|&v| seen[v]),
    ))
}

/// `A(T)^{-1}_{a,b}` from the alternating-path rule: `(-1)^(m-1)` when the
/// path from `a` to `b` has `2m` vertices and alternates with respect to
/// `matching`, and `0` otherwise (in particular on the diagonal).
pub fn inverse_entry(tree: &Tree, matching: &Matching, a: usize, b: usize) -> i64 {
    if a == b {
        return 0;
    }
    let path = tree.path_between(a, b).expect("distinct in-range vertices");
    if !is_alternating(&path, matching) {
        return 0;
    }
    let m = path.vertices().len() / 2;
    if m % 2 == 1 {
        1
    } else {
        -1
    }
}

/// All nonzero entries of the alternating-path rule, from one traversal per
/// source vertex.
fn signed_inverse(tree: &Tree, matching: &Matching) -> SignedGraph {
    let n = tree.n();
    let mut signs = BTreeMap::new();
    for src in 0..n {
        // (vertex, parent, edges so far, still alternating)
        let mut stack = vec![(src, usize::MAX, 0usize)];
        while let Some((u, parent, depth)) = stack.pop() {
            if depth % 2 == 1 && u > src {
                let m = depth.div_ceil(2);
                signs.insert(Edge(src, u), Sign::from_parity(m % 2 == 0));
            }
            for &w in tree.neighbors(u) {
                if w == parent {
                    continue;
                }
                // edge number `depth` of the path must be in M iff depth is even
                if matching.contains(Edge::new(u, w)) == (depth % 2 == 0) {
                    stack.push((w, u, depth + 1));
                }
            }
        }
    }
    SignedGraph { n, signs }
}

/// The signed graph whose signed adjacency matrix is `A(T)^{-1}`.
pub fn inverse_signed_graph(tree: &Tree) -> Result<SignedGraph> {
    Ok(InvertibleTree::new(tree.clone())?.inverse_graph())
}

/// `A(T)^{-1}` by fraction-free elimination, independent of the path rule.
pub fn exact_inverse(tree: &Tree) -> Result<IntMatrix> {
    IntMatrix::adjacency(tree).inverse()
}

/// `T^{-1}`: the inverse graph with signs forgotten.
pub fn underlying_graph(g: &SignedGraph) -> SimpleGraph {
    g.underlying()
}

/// `T±`: `phi(T)` with matching edges positive and all others negative.
pub fn signed_tree_image(tree: &Tree, matching: &Matching) -> Result<SignedGraph> {
    let phi = Involution::from_matching(tree, matching)?;
    let signs = tree.edges().iter().map(|&e| {
        let sign = if matching.contains(e) {
            Sign::Positive
        } else {
            Sign::Negative
        };
        (phi.apply_edge(e), sign)
    });
    Ok(SignedGraph::new(tree.n(), signs))
}

/// The fundamental cuts of `phi(T)` inside `T^{-1}` whose tree edge is
/// negative in `T±`, keyed by that edge.
pub fn negative_fundamental_cuts(inv: &InvertibleTree) -> Vec<(Edge, Cut)> {
    let image = inv.image();
    let graph = inv.inverse_graph().underlying();
    image
        .edges()
        .iter()
        .filter(|&&e| !inv.matching().contains(e))
        .map(|&e| {
            (
                e,
                fundamental_cut(&graph, &image, e).expect("phi(T) spans the inverse graph"),
            )
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GodsilClause {
    /// (a) every entry of the exact inverse is 0 or ±1
    UnitEntries,
    /// (b) the alternating-path signed graph equals the exact inverse
    MatchesExactInverse,
    /// (c) `T±` is a signed subgraph of the inverse
    SignedSubgraph,
    /// (d) switching on every negative fundamental cut leaves all edges positive
    SwitchingPositive,
    /// (e) `phi(T)` is a spanning tree of `T^{-1}`
    SpanningTree,
    /// the alternating-path matrix times `A(T)` is the identity
    ProductIsIdentity,
    /// each non-tree edge lies in `m - 1` negative fundamental cuts
    NegativeCutCount,
}

impl GodsilClause {
    pub const ALL: [GodsilClause; 7] = [
        GodsilClause::UnitEntries,
        GodsilClause::MatchesExactInverse,
        GodsilClause::SignedSubgraph,
        GodsilClause::SwitchingPositive,
        GodsilClause::SpanningTree,
        GodsilClause::ProductIsIdentity,
        GodsilClause::NegativeCutCount,
    ];

    pub fn describe(self) -> &'static str {
        match self {
            GodsilClause::UnitEntries => "(a) inverse entries in {0,+1,-1}",
            GodsilClause::MatchesExactInverse => "(b) alternating-path graph equals exact inverse",
            GodsilClause::SignedSubgraph => "(c) T± is a signed subgraph of the inverse",
            GodsilClause::SwitchingPositive => {
                "(d) negative-cut switching gives all-positive signs"
            }
            GodsilClause::SpanningTree => "(e) phi(T) spans the inverse graph",
            GodsilClause::ProductIsIdentity => "(f) alternating-path matrix times A(T) is I",
            GodsilClause::NegativeCutCount => "(g) non-tree edges lie in m-1 negative cuts",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseOutcome {
    pub clause: GodsilClause,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GodsilReport {
    pub outcomes: Vec<ClauseOutcome>,
}

impl GodsilReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn first_failure(&self) -> Option<&ClauseOutcome> {
        self.outcomes.iter().find(|o| !o.passed)
    }
}

/// Check every clause of the inverse theorem on one tree.
pub fn verify_godsil(tree: &Tree) -> Result<GodsilReport> {
    let inv = InvertibleTree::new(tree.clone())?;
    let mut outcomes = Vec::new();
    let mut record = |clause, failure: Option<String>| {
        outcomes.push(ClauseOutcome {
            clause,
            passed: failure.is_none(),
            detail: failure,
        });
    };

    let exact = exact_inverse(tree)?;
    let signed = inv.inverse_graph();
    let image = inv.image();
    let graph = signed.underlying();

    record(
        GodsilClause::UnitEntries,
        (exact.max_abs() > 1).then(|| format!("entry of magnitude {}", exact.max_abs())),
    );

    let from_exact = SignedGraph::from_matrix(&exact);
    record(
        GodsilClause::MatchesExactInverse,
        (from_exact.as_ref() != Some(&signed)).then(|| "entrywise mismatch".to_string()),
    );

    let t_pm = signed_tree_image(tree, inv.matching())?;
    record(
        GodsilClause::SignedSubgraph,
        (!t_pm.is_signed_subgraph_of(&signed)).then(|| {
            let bad = t_pm
                .signed_edges()
                .find(|(e, s)| signed.sign(*e) != Some(*s));
            format!("edge {:?} missing or wrong sign", bad.map(|(e, _)| e))
        }),
    );

    let cuts = negative_fundamental_cuts(&inv);
    let switched = cuts
        .iter()
        .fold(signed.clone(), |g, (_, cut)| g.switch(cut));
    record(
        GodsilClause::SwitchingPositive,
        (!switched.all_positive()).then(|| {
            format!(
                "{} negative edges remain",
                switched.negative_edges().count()
            )
        }),
    );

    let spans = SimpleGraph::from(&image).is_subgraph_of(&graph);
    record(
        GodsilClause::SpanningTree,
        (!spans).then(|| "phi(T) edge missing".to_string()),
    );

    let product = signed.matrix().mul(&IntMatrix::adjacency(tree));
    record(
        GodsilClause::ProductIsIdentity,
        (product != IntMatrix::identity(tree.n())).then(|| "product differs from I".to_string()),
    );

    let mut count_failure = None;
    for e in graph.edges().filter(|&e| !image.has_edge(e)) {
        // the path in T between the ends has 2m vertices
        let m = tree.path_between(e.0, e.1)?.vertices().len() / 2;
        let crossing = cuts.iter().filter(|(_, cut)| cut.separates(e)).count();
        if crossing + 1 != m {
            count_failure = Some(format!("edge {e}: {crossing} negative cuts, m = {m}"));
            break;
        }
    }
    record(GodsilClause::NegativeCutCount, count_failure);

    Ok(GodsilReport { outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn signed(n: usize, edges: &[(usize, usize, i8)]) -> SignedGraph {
        SignedGraph::new(
            n,
            edges
                .iter()
                .map(|&(u, v, s)| (Edge::new(u, v), Sign::try_from(s).unwrap())),
        )
    }

    #[test]
    fn entries_of_p4() {
        let p4 = Tree::path(4);
        let m = perfect_matching(&p4).unwrap();
        assert_eq!(inverse_entry(&p4, &m, 0, 1), 1);
        assert_eq!(inverse_entry(&p4, &m, 0, 3), -1);
        assert_eq!(inverse_entry(&p4, &m, 0, 2), 0);
        assert_eq!(inverse_entry(&p4, &m, 2, 2), 0);
        assert_eq!(exact_inverse(&p4).unwrap().get(0, 3), -1);
    }

    #[test]
    fn small_inverse_graphs() {
        assert_eq!(
            inverse_signed_graph(&Tree::path(2)).unwrap(),
            signed(2, &[(0, 1, 1)])
        );
        let p4 = inverse_signed_graph(&Tree::path(4)).unwrap();
        assert_eq!(p4, signed(4, &[(0, 1, 1), (2, 3, 1), (0, 3, -1)]));
        assert_eq!(
            inverse_signed_graph(&Tree::star(4)),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn inverse_of_p6_and_t6() {
        let p6 = inverse_signed_graph(&Tree::path(6)).unwrap();
        assert_eq!(p6.edge_count(), 6);
        assert_eq!(p6.sign(Edge(0, 5)), Some(Sign::Positive));
        let t6 = inverse_signed_graph(&Tree::elongated_caterpillar(3)).unwrap();
        assert_eq!(t6.edge_count(), 5);
        assert_eq!(
            t6.signed_edges()
                .filter(|(_, s)| *s == Sign::Positive)
                .count(),
            3
        );
        assert_eq!(t6.negative_edges().count(), 2);
    }

    #[test]
    fn underlying_of_p4_is_relabeled_path() {
        let g = underlying_graph(&inverse_signed_graph(&Tree::path(4)).unwrap());
        let t = g.as_tree().unwrap();
        assert_eq!(t, Tree::from_pairs(4, &[(1, 0), (0, 3), (3, 2)]).unwrap());
    }

    #[test]
    fn tree_image_signs() {
        let p4 = Tree::path(4);
        let m = perfect_matching(&p4).unwrap();
        assert_eq!(
            signed_tree_image(&p4, &m).unwrap(),
            signed(4, &[(0, 1, 1), (2, 3, 1), (0, 3, -1)])
        );
        let p2 = Tree::path(2);
        let m = perfect_matching(&p2).unwrap();
        assert_eq!(signed_tree_image(&p2, &m).unwrap(), signed(2, &[(0, 1, 1)]));
    }

    #[test]
    fn cuts() {
        let p2 = Tree::path(2);
        let cut = fundamental_cut(&SimpleGraph::from(&p2), &p2, Edge(0, 1)).unwrap();
        assert_eq!(cut.side(), &[0]);

        let inv = InvertibleTree::new(Tree::path(4)).unwrap();
        let graph = inv.inverse_graph().underlying();
        let cut = fundamental_cut(&graph, &inv.image(), Edge(0, 1)).unwrap();
        assert_eq!(cut.side(), &[1]);
        assert_eq!(
            cut.crossing_edges(&graph).collect::<Vec<_>>(),
            vec![Edge(0, 1)]
        );
        assert_eq!(
            fundamental_cut(&graph, &inv.image(), Edge(1, 2)),
            Err(Error::NotSpanningTreeEdge(Edge(1, 2)))
        );
    }

    #[test]
    fn switching() {
        let g = signed(2, &[(0, 1, 1)]);
        let cut = Cut::new(2, [0]);
        assert_eq!(g.switch(&cut), signed(2, &[(0, 1, -1)]));
        assert_eq!(g.switch(&cut).switch(&cut), g);
    }

    #[test]
    fn p6_negative_cut_counts() {
        let inv = InvertibleTree::new(Tree::path(6)).unwrap();
        let cuts = negative_fundamental_cuts(&inv);
        assert_eq!(cuts.len(), 2);
        // {0,5}: path in T has 6 vertices (m = 3), so two negative cuts
        assert_eq!(
            cuts.iter().filter(|(_, c)| c.separates(Edge(0, 5))).count(),
            2
        );
    }

    #[test]
    fn godsil_small() {
        for t in [Tree::path(2), Tree::path(6), Tree::elongated_caterpillar(4)] {
            let report = verify_godsil(&t).unwrap();
            assert!(report.passed(), "{t}: {:?}", report.first_failure());
            assert_eq!(report.outcomes.len(), GodsilClause::ALL.len());
        }
        assert_eq!(verify_godsil(&Tree::star(4)), Err(Error::NotInvertible));
    }

    #[test]
    fn json_and_dot() {
        let g = inverse_signed_graph(&Tree::path(4)).unwrap();
        assert_eq!(SignedGraph::from_json(&g.to_json()).unwrap(), g);
        let m = perfect_matching(&Tree::path(4)).unwrap();
        let dot = g.to_dot("inverse", Some(&m));
        assert!(dot.contains("0 -- 3 [style=\"dashed\""));
        assert!(dot.contains("0 -- 1 [style=\"solid,bold\""));
        assert_eq!(g.to_elist(), "4\n0 1 +1\n0 3 -1\n2 3 +1\n");
    }
}
