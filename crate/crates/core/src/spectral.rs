//! Eigenvalues of trees from their exact characteristic polynomials.

use std::cmp::Ordering;

use serde::Serialize;

use crate::charpoly::char_poly;
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::roots::{real_roots, CertifiedRoot};
use crate::tree::Tree;

pub const DEFAULT_TOL: f64 = 1e-12;

/// Real eigenvalues in nondecreasing order, each within `tol` of the true
/// value.
#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tol: f64,
    #[serde(skip)]
    roots: Vec<CertifiedRoot>,
}

impl Spectrum {
    /// Spectrum of any real-rooted integer polynomial.
    pub fn of_poly(p: &IntPoly, tol: f64) -> Spectrum {
        assert!(tol > 0.0, "tolerance must be positive");
        let mut values = Vec::with_capacity(p.degree());
        let mut roots = Vec::with_capacity(p.degree());
        for (root, mult) in real_roots(p, tol) {
            for _ in 0..mult {
                values.push(root.value());
                roots.push(root.clone());
            }
        }
        Spectrum { values, tol, roots }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `lambda_i`, the `i`-th largest eigenvalue, 1-based.
    pub fn largest(&self, i: usize) -> f64 {
        self.values[self.values.len() - i]
    }

    /// Certified isolating interval of the `i`-th largest eigenvalue.
    pub fn largest_root(&self, i: usize) -> &CertifiedRoot {
        &self.roots[self.roots.len() - i]
    }

    /// Whether `values[i] = -values[len-1-i]` within `2 tol` for all `i`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.values.len();
        (0..n).all(|i| (self.values[i] + self.values[n - 1 - i]).abs() <= 2.0 * self.tol)
    }
}

pub fn spectrum(tree: &Tree, tol: f64) -> Spectrum {
    Spectrum::of_poly(char_poly(tree).poly(), tol)
}

/// `lambda_n` for a tree on `2n` vertices, with its certified interval.
pub fn median_root(tree: &Tree) -> Result<CertifiedRoot> {
    let two_n = tree.n();
    if two_n % 2 == 1 {
        return Err(Error::OddOrder(two_n));
    }
    // isolate coarsely, then refine only the root we keep
    let s = Spectrum::of_poly(char_poly(tree).poly(), 1e-3);
    let mut root = s.largest_root(two_n / 2).clone();
    root.refine_to(DEFAULT_TOL);
    Ok(root)
}

/// `lambda_n`, the positive median eigenvalue of a tree on `2n` vertices.
pub fn median_eigenvalue(tree: &Tree) -> Result<f64> {
    Ok(median_root(tree)?.value())
}

/// Certified comparison of the median eigenvalues of two trees.
pub fn compare_medians(a: &Tree, b: &Tree) -> Result<Ordering> {
    let (mut x, mut y) = (median_root(a)?, median_root(b)?);
    Ok(x.compare(&mut y))
}

/// `(theta ± sqrt(theta^2 + 4)) / 2` for one eigenvalue `theta` of the base.
pub fn theta_pair(theta: f64) -> (f64, f64) {
    let r = (theta * theta + 4.0).sqrt();
    ((theta - r) / 2.0, (theta + r) / 2.0)
}

/// Spectrum of the rooted product of `base` with `K_2`, read off the
/// spectrum of `base`.
pub fn rooted_product_spectrum(base: &Tree, tol: f64) -> Spectrum {
    let base_spec = spectrum(base, tol);
    let mut values: Vec<f64> = base_spec
        .values
        .iter()
        .flat_map(|&theta| {
            let (lo, hi) = theta_pair(theta);
            [lo, hi]
        })
        .collect();
    values.sort_by(f64::total_cmp);
    Spectrum {
        values,
        tol,
        roots: Vec::new(),
    }
}

/// Eigenvalues `2 cos(pi j / (n + 1))`, `j = 1..n`, of the path `P_n`,
/// ascending.
pub fn path_spectrum_closed_form(n: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (1..=n)
        .map(|j| 2.0 * (std::f64::consts::PI * j as f64 / (n + 1) as f64).cos())
        .collect();
    v.sort_by(f64::total_cmp);
    v
}

/// `1 / (1 + sqrt 2) = sqrt 2 - 1`.
pub fn caterpillar_bound() -> f64 {
    std::f64::consts::SQRT_2 - 1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CaterpillarMedian {
    pub median: f64,
    pub bound: f64,
}

/// `lambda_n(T_{2n})` together with the lower bound `sqrt 2 - 1`.
pub fn caterpillar_median_bound(n: usize) -> CaterpillarMedian {
    assert!(n >= 1);
    let median = median_eigenvalue(&Tree::elongated_caterpillar(n)).expect("even order");
    let bound = caterpillar_bound();
    assert!(median >= bound, "median {median} below {bound}");
    CaterpillarMedian { median, bound }
}
