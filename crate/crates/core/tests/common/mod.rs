//! Independent reference implementations shared by the integration tests.
//! Nothing here calls into the library's algorithms; only the data types.
#![allow(dead_code)]

use invtree::{Edge, Tree};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Decode a Prüfer sequence over `0..n` into an edge list.
pub fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Every labeled tree on `n >= 2` vertices, as edge lists.
pub fn labeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            prufer_decode(&seq, n)
        })
        .collect()
}

/// All perfect matchings of an edge list, by exhaustive subset search.
pub fn brute_matchings(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    if n % 2 == 1 {
        return out;
    }
    for mask in 0u32..(1 << edges.len()) {
        if mask.count_ones() as usize != n / 2 {
            continue;
        }
        let mut used = vec![false; n];
        let mut ok = true;
        let mut chosen = Vec::new();
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used[a] || used[b] {
                    ok = false;
                    break;
                }
                used[a] = true;
                used[b] = true;
                chosen.push((a.min(b), a.max(b)));
            }
        }
        if ok {
            out.push(chosen);
        }
    }
    out
}

/// Number of `k`-edge matchings for every `k`.
pub fn matching_numbers(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut counts = vec![0u64; n / 2 + 1];
    for mask in 0u32..(1 << edges.len()) {
        let mut used = vec![false; n];
        let mut ok = true;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used[a] || used[b] {
                    ok = false;
                    break;
                }
                used[a] = true;
                used[b] = true;
            }
        }
        if ok {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

/// Characteristic polynomial of a forest via its matching polynomial,
/// coefficients low to high.
pub fn matching_char_poly(n: usize, edges: &[(usize, usize)]) -> Vec<i64> {
    let m = matching_numbers(n, edges);
    let mut c = vec![0i64; n + 1];
    for (k, &mk) in m.iter().enumerate() {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        c[n - 2 * k] = sign * mk as i64;
    }
    c
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for &(u, v) in edges {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    a
}

/// Gauss–Jordan inverse over the rationals; `None` when singular.
pub fn rational_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let q = |x: i64| BigRational::from_integer(x.into());
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| q((i == j) as i64)).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    Some(inv)
}

/// Integer entries of a rational matrix, or `None` if any entry is not integral.
pub fn to_integers(m: &[Vec<BigRational>]) -> Option<Vec<Vec<i64>>> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    if x.denom().is_one() {
                        i64::try_from(x.numer().clone()).ok()
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect()
}

/// Every permutation of `0..n`, by Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut out = vec![p.clone()];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn edge_set(n: usize, edges: &[(usize, usize)]) -> Vec<bool> {
    let mut s = vec![false; n * n];
    for &(a, b) in edges {
        s[a * n + b] = true;
        s[b * n + a] = true;
    }
    s
}

/// Automorphisms of an edge list, counted over all permutations.
pub fn automorphism_count(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> usize {
    let s = edge_set(n, edges);
    perms
        .iter()
        .filter(|p| edges.iter().all(|&(a, b)| s[p[a] * n + p[b]]))
        .count()
}

/// Brute-force isomorphism test.
pub fn brute_isomorphic(
    n: usize,
    a: &[(usize, usize)],
    b: &[(usize, usize)],
    perms: &[Vec<usize>],
) -> bool {
    let mut da = vec![0; n];
    let mut db = vec![0; n];
    for &(x, y) in a {
        da[x] += 1;
        da[y] += 1;
    }
    for &(x, y) in b {
        db[x] += 1;
        db[y] += 1;
    }
    let (mut sa, mut sb) = (da.clone(), db.clone());
    sa.sort();
    sb.sort();
    if sa != sb {
        return false;
    }
    let s = edge_set(n, b);
    perms
        .iter()
        .any(|p| (0..n).all(|v| da[v] == db[p[v]]) && a.iter().all(|&(x, y)| s[p[x] * n + p[y]]))
}

/// Vertex sequence of the unique path between `a` and `b`.
pub fn tree_path(n: usize, edges: &[(usize, usize)], a: usize, b: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(x, y) in edges {
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut parent = vec![usize::MAX; n];
    parent[a] = a;
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![b];
    let mut v = b;
    while v != a {
        v = parent[v];
        path.push(v);
    }
    path.reverse();
    path
}

pub fn pairs(tree: &Tree) -> Vec<(usize, usize)> {
    tree.edges().iter().map(|e| (e.0, e.1)).collect()
}

pub fn tree_of(n: usize, edges: &[(usize, usize)]) -> Tree {
    Tree::new(n, edges.iter().map(|&(a, b)| Edge::new(a, b))).unwrap()
}
