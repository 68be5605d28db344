//! Labeled trees on `{0..n-1}` and the edge-list text format.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint opposite `v`. Panics if `v` is not an endpoint.
    pub fn other(&self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            assert_eq!(self.1, v, "vertex {v} is not an endpoint of {self}");
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

impl FromStr for Edge {
    type Err = Error;

    /// Accepts `u,v` or `u v`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .collect();
        let bad = || Error::Parse {
            line: 1,
            message: format!("expected `u,v`, got `{s}`"),
        };
        if parts.len() != 2 {
            return Err(bad());
        }
        let u = parts[0].parse().map_err(|_| bad())?;
        let v = parts[1].parse().map_err(|_| bad())?;
        Ok(Edge::new(u, v))
    }
}

/// A simple tree on the vertex set `{0..n-1}`.
///
/// Edges are kept sorted, so two trees with the same labeled edge set compare
/// equal regardless of how they were built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotATree("a tree needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for e in edges {
            let e = Edge::new(e.0, e.1);
            if e.1 >= n {
                return Err(Error::VertexOutOfRange { vertex: e.1, n });
            }
            if e.0 == e.1 {
                return Err(Error::NotATree(format!("self-loop at {}", e.0)));
            }
            if !set.insert(e) {
                return Err(Error::NotATree(format!("duplicate edge {e}")));
            }
        }
        if set.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices (expected {})",
                set.len(),
                n,
                n - 1
            )));
        }
        let edges: Vec<Edge> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let tree = Tree { n, edges, adj };
        let reached = tree.bfs_parents(0).iter().filter(|p| p.is_some()).count();
        if reached != n {
            return Err(Error::NotATree("graph is disconnected".into()));
        }
        Ok(tree)
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Tree::new(n, pairs.iter().map(|&(a, b)| Edge::new(a, b)))
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Tree::new(n, (1..n).map(|v| Edge(v - 1, v))).expect("path is a tree")
    }

    /// The star with center 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        Tree::new(n, (1..n).map(|v| Edge(0, v))).expect("star is a tree")
    }

    /// Attach a pendant vertex `n + i` to every vertex `i` of `base`.
    ///
    /// The pendant edges form the unique perfect matching of the result.
    pub fn rooted_product_k2(base: &Tree) -> Tree {
        let n = base.n;
        let edges = base
            .edges
            .iter()
            .copied()
            .chain((0..n).map(|i| Edge(i, n + i)));
        Tree::new(2 * n, edges).expect("rooted product of a tree is a tree")
    }

    /// `T_{2n}`: the rooted product of `P_n` with `n` copies of `K_2`.
    pub fn elongated_caterpillar(n: usize) -> Tree {
        Tree::rooted_product_k2(&Tree::path(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// BFS parent pointers from `root`; the root maps to itself.
    pub(crate) fn bfs_parents(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.n];
        parent[root] = Some(root);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if parent[w].is_none() {
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// Distances from `root` to every vertex.
    pub fn distances(&self, root: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The unique path from `a` to `b`.
    pub fn path_between(&self, a: usize, b: usize) -> Result<VertexPath> {
        for v in [a, b] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        if a == b {
            return Err(Error::SameVertex(a));
        }
        let parent = self.bfs_parents(b);
        let mut vertices = vec![a];
        let mut cur = a;
        while cur != b {
            cur = parent[cur].expect("tree is connected");
            vertices.push(cur);
        }
        Ok(VertexPath(vertices))
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        assert_eq!(perm.len(), self.n);
        Tree::new(
            self.n,
            self.edges.iter().map(|e| Edge::new(perm[e.0], perm[e.1])),
        )
        .expect("relabeling preserves tree structure")
    }

    /// `self + add - remove`, validated as a tree.
    pub fn with_swapped_edge(&self, add: Edge, remove: Edge) -> Result<Tree> {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e != remove)
            .chain([add]);
        Tree::new(self.n, edges)
    }

    /// Serialize in the `.elist` format.
    pub fn to_elist(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.0, e.1));
        }
        out
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.0, e.1)?;
        }
        write!(f, "]")
    }
}

/// Serializes as `{n, edges: [[u, v], ...]}`.
impl Serialize for Tree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Tree", 2)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field(
            "edges",
            &self.edges().iter().map(|e| [e.0, e.1]).collect::<Vec<_>>(),
        )?;
        st.end()
    }
}

/// Parse the `.elist` edge-list text: the first significant line holds the
/// vertex count, every further non-empty line holds one edge `u v`. Lines
/// starting with `#` are ignored.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("`{s}` is not a non-negative integer"),
            })
        };
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "expected the vertex count alone on the first line".into(),
                    });
                }
                n = Some(parse(fields[0])?);
            }
            Some(count) => {
                if fields.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected `u v`, got `{line}`"),
                    });
                }
                let (u, v) = (parse(fields[0])?, parse(fields[1])?);
                for x in [u, v] {
                    if x >= count {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("vertex {x} out of range 0..{count}"),
                        });
                    }
                }
                edges.push(Edge::new(u, v));
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "empty input".into(),
    })?;
    Tree::new(n, edges)
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

/// A path in a tree, listed endpoint to endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPath(pub Vec<usize>);

impl VertexPath {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn edge_count(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| Edge::new(w[0], w[1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_smallest_tree() {
        let t = parse_tree("2\n0 1").unwrap();
        assert_eq!(t.n(), 2);
        assert_eq!(t.edges(), &[Edge(0, 1)]);
    }

    #[test]
    fn parse_path() {
        let t = parse_tree("4\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(t, Tree::path(4));
    }

    #[test]
    fn parse_comments_and_order() {
        let t = parse_tree("# a path\n4\n\n3 2\n# mid\n1 0\n 2   1 \n").unwrap();
        assert_eq!(t, Tree::path(4));
    }

    #[test]
    fn parse_rejects_disconnected() {
        assert!(matches!(parse_tree("4\n0 1\n2 3"), Err(Error::NotATree(_))));
    }

    #[test]
    fn parse_rejects_cycle() {
        // right edge count, but contains a triangle and misses vertex 3
        assert!(matches!(
            parse_tree("4\n0 1\n1 2\n0 2"),
            Err(Error::NotATree(_))
        ));
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(matches!(
            parse_tree("3\n0 1 2\n1 2"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_tree("3\n0 x\n1 2"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_tree("3\n0 5\n1 2"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_tree(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn single_vertex_is_a_tree() {
        let t = parse_tree("1\n").unwrap();
        assert_eq!(t.n(), 1);
        assert!(t.edges().is_empty());
    }

    #[test]
    fn paths_between_vertices() {
        let p4 = Tree::path(4);
        assert_eq!(p4.path_between(0, 3).unwrap().vertices(), &[0, 1, 2, 3]);
        assert_eq!(p4.path_between(1, 2).unwrap().vertices(), &[1, 2]);
        assert_eq!(p4.path_between(2, 2), Err(Error::SameVertex(2)));
    }

    #[test]
    fn spider_path() {
        // c=0, x1=1, x2=2, y1=3, y2=4, z=5
        let spider = Tree::from_pairs(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap();
        assert_eq!(spider.path_between(2, 5).unwrap().vertices(), &[2, 1, 0, 5]);
    }

    #[test]
    fn rooted_products() {
        assert_eq!(Tree::rooted_product_k2(&Tree::path(1)), Tree::path(2));
        let p4 = Tree::rooted_product_k2(&Tree::path(2));
        assert_eq!(p4.edges(), &[Edge(0, 1), Edge(0, 2), Edge(1, 3)]);
        let t6 = Tree::elongated_caterpillar(3);
        assert_eq!(t6.n(), 6);
        let mut degrees: Vec<usize> = (0..6).map(|v| t6.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 1, 2, 2, 3]);
        // arms of length 2, 2, 1 from the center
        let center = (0..6).find(|&v| t6.degree(v) == 3).unwrap();
        let mut far: Vec<usize> = t6
            .distances(center)
            .into_iter()
            .filter(|&d| d > 0)
            .collect();
        far.sort_unstable();
        assert_eq!(far, vec![1, 1, 1, 2, 2]);
    }

    #[test]
    fn elist_round_trip() {
        let t = Tree::elongated_caterpillar(4);
        assert_eq!(parse_tree(&t.to_elist()).unwrap(), t);
    }

    #[test]
    fn edge_parsing() {
        assert_eq!("3,1".parse::<Edge>().unwrap(), Edge(1, 3));
        assert_eq!("4 2".parse::<Edge>().unwrap(), Edge(2, 4));
        assert!("4".parse::<Edge>().is_err());
    }
}
