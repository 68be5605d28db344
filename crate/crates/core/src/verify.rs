//! Exhaustive checks over all invertible trees up to a size.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_code, is_isomorphic};
use crate::enumeration::enumerate_invertible;
use crate::error::Result;
use crate::exchange::{
    candidates_of, is_rooted_product_k2, is_self_inverse, tree_exchange, verify_exchange_lemma,
    witness_non_minimal,
};
use crate::inverse::{verify_godsil, InvertibleTree};
use crate::poset::build_poset;
use crate::spectral::{spectrum, Spectrum, DEFAULT_TOL};
use crate::tree::Tree;

/// Tolerance for comparing `1/lambda` against the inverse's spectrum.
pub const RECIPROCITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Lemma {
    InverseTheorem,
    ExchangeLemma,
    Reciprocity,
    SelfInverseIsRootedProduct,
    WitnessRoundTrip,
    Antisymmetry,
    MonotoneCovers,
    MaximalElements,
    MinimalElements,
    ExtremalMedians,
}

impl Lemma {
    pub fn describe(self) -> &'static str {
        match self {
            Lemma::InverseTheorem => "inverse entries, signed subgraph, switching, cut counts",
            Lemma::ExchangeLemma => "exchange shrinks the inverse graph and raises the median",
            Lemma::Reciprocity => "eigenvalues of the inverse are reciprocals",
            Lemma::SelfInverseIsRootedProduct => "self-inverse iff rooted product with K2",
            Lemma::WitnessRoundTrip => "non-paths have a tree one exchange below",
            Lemma::Antisymmetry => "exchange relation is acyclic",
            Lemma::MonotoneCovers => "median strictly increases along covers",
            Lemma::MaximalElements => "maximal elements are the self-inverse trees",
            Lemma::MinimalElements => "the path is the only minimal element",
            Lemma::ExtremalMedians => "caterpillar maximizes and path minimizes the median",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub vertices: usize,
    /// Canonical code of the tree, or `None` for whole-poset checks.
    pub tree: Option<String>,
    pub lemma: Lemma,
    pub passed: bool,
    pub detail: Option<String>,
    #[serde(skip)]
    pub witness: Option<Tree>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaSummary {
    pub lemma: Lemma,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub classes_checked: usize,
    pub records: Vec<Record>,
    pub summary: Vec<LemmaSummary>,
    /// First failing tree in `.elist` form.
    pub counterexample: Option<String>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| !r.passed).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    /// Human-readable summary, one line per lemma.
    pub fn render(&self) -> String {
        let mut out = format!(
            "verified {} classes of invertible trees on up to {} vertices\n",
            self.classes_checked,
            2 * self.max_n
        );
        for s in &self.summary {
            let status = if s.failed == 0 { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {:<28} {:>6} checked {:>4} failed  {}\n",
                format!("{:?}", s.lemma),
                s.checked,
                s.failed,
                s.lemma.describe()
            ));
        }
        for r in self.records.iter().filter(|r| !r.passed) {
            out.push_str(&format!(
                "  failure: {:?} on {} vertices {}: {}\n",
                r.lemma,
                r.vertices,
                r.tree.as_deref().unwrap_or("(poset)"),
                r.detail.as_deref().unwrap_or("")
            ));
        }
        if let Some(c) = &self.counterexample {
            out.push_str("first counterexample:\n");
            out.push_str(c);
        }
        out
    }
}

fn record(tree: Option<&Tree>, vertices: usize, lemma: Lemma, failure: Option<String>) -> Record {
    Record {
        vertices,
        tree: tree.map(|t| canonical_code(t).to_string()),
        lemma,
        passed: failure.is_none(),
        witness: failure.as_ref().and(tree.cloned()),
        detail: failure,
    }
}

/// Compare `{1/lambda}` for `tree` with the spectrum of its signed inverse.
pub fn reciprocity_gap(tree: &Tree) -> Result<f64> {
    let inv = InvertibleTree::new(tree.clone())?;
    let direct = spectrum(tree, DEFAULT_TOL);
    let mut recip: Vec<f64> = direct.values.iter().map(|x| 1.0 / x).collect();
    recip.sort_by(f64::total_cmp);
    let of_inverse = Spectrum::of_poly(&inv.inverse_graph().matrix().char_poly(), DEFAULT_TOL);
    if of_inverse.len() != recip.len() {
        return Ok(f64::INFINITY);
    }
    Ok(recip
        .iter()
        .zip(&of_inverse.values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

fn check_tree(tree: &Tree) -> Vec<Record> {
    let v = tree.n();
    let t = Some(tree);
    let mut out = Vec::new();

    let godsil = verify_godsil(tree).map(|r| {
        r.first_failure().map(|o| {
            format!(
                "{}: {}",
                o.clause.describe(),
                o.detail.clone().unwrap_or_default()
            )
        })
    });
    out.push(record(
        t,
        v,
        Lemma::InverseTheorem,
        godsil.unwrap_or_else(|e| Some(e.to_string())),
    ));

    let inv = InvertibleTree::new(tree.clone()).expect("invertible class");
    let mut exchange_failure = None;
    for mv in candidates_of(&inv) {
        match verify_exchange_lemma(tree, &mv) {
            Ok(r) if r.passed() => {}
            Ok(r) => {
                exchange_failure = Some(format!("move {mv:?}: {:?}", r.failures));
                break;
            }
            Err(e) => {
                exchange_failure = Some(format!("move {mv:?}: {e}"));
                break;
            }
        }
    }
    out.push(record(t, v, Lemma::ExchangeLemma, exchange_failure));

    let gap = reciprocity_gap(tree).unwrap_or(f64::INFINITY);
    out.push(record(
        t,
        v,
        Lemma::Reciprocity,
        (gap > RECIPROCITY_TOL).then(|| format!("max deviation {gap:e}")),
    ));

    let (si, rp) = (is_self_inverse(tree), is_rooted_product_k2(tree));
    out.push(record(
        t,
        v,
        Lemma::SelfInverseIsRootedProduct,
        (si != rp).then(|| format!("self-inverse {si:?}, rooted product {rp:?}")),
    ));

    let witness_failure = match witness_non_minimal(tree) {
        Ok(None) if tree.max_degree() <= 2 => None,
        Ok(None) => Some("no witness for a non-path".to_string()),
        Ok(Some(_)) if tree.max_degree() <= 2 => Some("witness for a path".to_string()),
        Ok(Some((prime, mv))) => match tree_exchange(&prime, &mv) {
            Ok(back) if is_isomorphic(&back, tree) => None,
            Ok(_) => Some("round trip lands elsewhere".to_string()),
            Err(e) => Some(e.to_string()),
        },
        Err(e) => Some(e.to_string()),
    };
    out.push(record(t, v, Lemma::WitnessRoundTrip, witness_failure));
    out
}

fn check_poset(n: usize, bound: usize) -> Result<Vec<Record>> {
    let v = 2 * n;
    let mut out = Vec::new();
    let poset = match build_poset(n, bound) {
        Ok(p) => p,
        Err(crate::Error::CyclicRelation) => {
            out.push(record(
                None,
                v,
                Lemma::Antisymmetry,
                Some("cycle in relation".into()),
            ));
            return Ok(out);
        }
        Err(e) => return Err(e),
    };
    out.push(record(
        None,
        v,
        Lemma::Antisymmetry,
        (!poset.is_antisymmetric()).then(|| "mutual reachability".into()),
    ));

    let bad_cover = poset.first_non_increasing_cover()?;
    out.push(record(
        None,
        v,
        Lemma::MonotoneCovers,
        bad_cover.map(|(a, b)| format!("cover {a} -> {b}")),
    ));

    let maximal: BTreeSet<usize> = poset.maximal_elements().into_iter().collect();
    let mut self_inverse = BTreeSet::new();
    let mut rooted = BTreeSet::new();
    for (i, node) in poset.nodes().iter().enumerate() {
        if is_self_inverse(&node.representative)? {
            self_inverse.insert(i);
        }
        if is_rooted_product_k2(&node.representative)? {
            rooted.insert(i);
        }
    }
    out.push(record(
        None,
        v,
        Lemma::MaximalElements,
        (maximal != self_inverse || maximal != rooted).then(|| {
            format!("maximal {maximal:?}, self-inverse {self_inverse:?}, rooted {rooted:?}")
        }),
    ));

    let path_code = canonical_code(&Tree::path(v));
    let path_idx = poset.index_of(&path_code);
    let minimal = poset.minimal_elements();
    out.push(record(
        None,
        v,
        Lemma::MinimalElements,
        (minimal.len() != 1 || Some(minimal[0]) != path_idx)
            .then(|| format!("minimal {minimal:?}")),
    ));

    let cat_idx = poset.index_of(&canonical_code(&Tree::elongated_caterpillar(n)));
    let extremal = extremal_failure(&poset, path_idx, cat_idx)?;
    out.push(record(None, v, Lemma::ExtremalMedians, extremal));
    Ok(out)
}

/// Certified check that `max_idx` has the unique largest median and
/// `min_idx` the unique smallest.
fn extremal_failure(
    poset: &crate::poset::HassePoset,
    min_idx: Option<usize>,
    max_idx: Option<usize>,
) -> Result<Option<String>> {
    use crate::spectral::compare_medians;
    use std::cmp::Ordering;
    let (Some(lo), Some(hi)) = (min_idx, max_idx) else {
        return Ok(Some("path or caterpillar missing".into()));
    };
    let nodes = poset.nodes();
    for (i, node) in nodes.iter().enumerate() {
        if i != lo
            && compare_medians(&nodes[lo].representative, &node.representative)? != Ordering::Less
        {
            return Ok(Some(format!("class {i} does not exceed the path median")));
        }
        if i != hi
            && compare_medians(&node.representative, &nodes[hi].representative)? != Ordering::Less
        {
            return Ok(Some(format!("class {i} reaches the caterpillar median")));
        }
    }
    Ok(None)
}

/// Run every check on all invertible trees with `2k` vertices, `k <= max_n`.
pub fn run_verification(max_n: usize, bound: usize) -> Result<VerifyReport> {
    let mut records = Vec::new();
    let mut classes_checked = 0;
    for n in 1..=max_n {
        let classes = enumerate_invertible(2 * n, bound)?;
        classes_checked += classes.len();
        let trees: Vec<&Tree> = classes.representatives().collect();
        let per_tree: Vec<Vec<Record>> = trees.par_iter().map(|t| check_tree(t)).collect();
        records.extend(per_tree.into_iter().flatten());
        records.extend(check_poset(n, bound)?);
    }
    let lemmas: BTreeSet<Lemma> = records.iter().map(|r| r.lemma).collect();
    let summary = lemmas
        .into_iter()
        .map(|lemma| {
            let of: Vec<&Record> = records.iter().filter(|r| r.lemma == lemma).collect();
            LemmaSummary {
                lemma,
                checked: of.len(),
                failed: of.iter().filter(|r| !r.passed).count(),
            }
        })
        .collect();
    let counterexample = records
        .iter()
        .find_map(|r| r.witness.as_ref().map(Tree::to_elist));
    Ok(VerifyReport {
        max_n,
        classes_checked,
        records,
        summary,
        counterexample,
    })
}
