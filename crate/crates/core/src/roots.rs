//! Certified real-root isolation by Sturm sequences over dyadic intervals.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::IntPoly;

/// Sturm sequence of a squarefree polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(squarefree: &IntPoly) -> Self {
        assert!(!squarefree.is_zero());
        let mut chain = vec![squarefree.primitive()];
        let d = squarefree.derivative();
        if !d.is_zero() {
            chain.push(d.primitive());
        }
        while chain.len() >= 2 && !chain[chain.len() - 1].is_constant() {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // prem = lc(b)^k * rem; undo the sign of lc(b)^k and negate
            let k = a.degree() - b.degree() + 1;
            let flip = b.leading().is_negative() && k % 2 == 1;
            let next = if flip { r } else { -&r };
            let g = next.content();
            chain.push(IntPoly::new(next.coeffs().iter().map(|c| c / &g).collect()));
        }
        SturmChain { chain }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.chain[0]
    }

    fn variations(&self, num: &BigInt, exp: u32) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let s = p.sign_at_dyadic(num, exp);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Distinct roots in the half-open interval `(lo, hi]`, both at scale
    /// `2^-exp`.
    pub fn count_roots(&self, lo: &BigInt, hi: &BigInt, exp: u32) -> usize {
        self.variations(lo, exp) - self.variations(hi, exp)
    }

    /// A power of two bounding the absolute value of every root.
    fn root_bound(&self) -> BigInt {
        let p = self.poly();
        let lead = p.leading().abs();
        let max = p
            .coeffs()
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        // Cauchy: |root| <= 1 + max |a_i| / |a_n|
        let cauchy = BigInt::one() + (&max + &lead - 1u32) / &lead;
        let mut bound = BigInt::one();
        while bound < cauchy {
            bound <<= 1;
        }
        bound
    }

    /// One isolating interval per real root, in increasing order.
    pub fn isolate(self: &Arc<Self>) -> Vec<CertifiedRoot> {
        let b = self.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-&b, b, 0u32)];
        while let Some((lo, hi, exp)) = stack.pop() {
            let count = self.count_roots(&lo, &hi, exp);
            if count == 0 {
                continue;
            }
            if count == 1 {
                let lo_sign = self.poly().sign_at_dyadic(&lo, exp);
                let mut root = CertifiedRoot {
                    chain: Arc::clone(self),
                    lo,
                    hi,
                    exp,
                    exact: false,
                    lo_sign,
                };
                if self.poly().sign_at_dyadic(&root.hi, exp) == 0 {
                    root.lo = root.hi.clone();
                    root.exact = true;
                }
                out.push(root);
                continue;
            }
            let (lo, hi, exp) = (lo << 1u32, hi << 1u32, exp + 1);
            let mid: BigInt = (&lo + &hi) >> 1u32;
            // push the upper half first so the lower half is processed first
            stack.push((mid.clone(), hi, exp));
            stack.push((lo, mid, exp));
        }
        out.sort_by(|a, b| a.lo_cmp(b));
        out
    }
}

/// A real root of a squarefree integer polynomial, known to lie in the
/// half-open dyadic interval `(lo/2^exp, hi/2^exp]`, or exactly at `lo` when
/// `exact` is set. The interval never contains a second root.
#[derive(Debug, Clone)]
pub struct CertifiedRoot {
    chain: Arc<SturmChain>,
    lo: BigInt,
    hi: BigInt,
    exp: u32,
    exact: bool,
    /// Sign of the polynomial at `lo`.
    lo_sign: i8,
}

fn dyadic_f64(num: &BigInt, exp: u32) -> f64 {
    // shift down first so very fine intervals stay in f64 range
    let bits = num.bits() as i64;
    let excess = (bits - 60).max(0) as u32;
    let scaled = num >> excess;
    scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(excess as i32 - exp as i32)
}

fn cmp_dyadic(a: &BigInt, ea: u32, b: &BigInt, eb: u32) -> Ordering {
    match ea.cmp(&eb) {
        Ordering::Equal => a.cmp(b),
        Ordering::Less => (a << (eb - ea)).cmp(b),
        Ordering::Greater => a.cmp(&(b << (ea - eb))),
    }
}

impl CertifiedRoot {
    pub fn poly(&self) -> &IntPoly {
        self.chain.poly()
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn lower(&self) -> f64 {
        dyadic_f64(&self.lo, self.exp)
    }

    pub fn upper(&self) -> f64 {
        dyadic_f64(&self.hi, self.exp)
    }

    pub fn width(&self) -> f64 {
        if self.exact {
            0.0
        } else {
            dyadic_f64(&(&self.hi - &self.lo), self.exp)
        }
    }

    /// Midpoint of the isolating interval.
    pub fn value(&self) -> f64 {
        if self.exact {
            self.upper()
        } else {
            dyadic_f64(&(&self.lo + &self.hi), self.exp + 1)
        }
    }

    /// Halve the interval once.
    pub fn bisect(&mut self) {
        if self.exact {
            return;
        }
        let (lo, hi, exp) = (&self.lo << 1u32, &self.hi << 1u32, self.exp + 1);
        let mid: BigInt = (&lo + &hi) >> 1u32;
        let at_mid = self.chain.poly().sign_at_dyadic(&mid, exp);
        if at_mid == 0 {
            self.lo = mid.clone();
            self.hi = mid;
            self.exp = exp;
            self.exact = true;
            return;
        }
        // the root is simple and alone in the interval, so unless `lo` is
        // itself a root the sign change locates it
        let in_lower = if self.lo_sign != 0 {
            self.lo_sign != at_mid
        } else {
            self.chain.count_roots(&lo, &mid, exp) == 1
        };
        if in_lower {
            self.lo = lo;
            self.hi = mid;
        } else {
            self.lo = mid;
            self.hi = hi;
            self.lo_sign = at_mid;
        }
        self.exp = exp;
    }

    /// Refine until the interval is no wider than `tol`.
    pub fn refine_to(&mut self, tol: f64) {
        assert!(tol > 0.0);
        while self.width() > tol {
            self.bisect();
        }
    }

    fn lo_cmp(&self, other: &CertifiedRoot) -> Ordering {
        cmp_dyadic(&self.lo, self.exp, &other.lo, other.exp)
    }

    /// `true` when every point allowed for `self` is below every point
    /// allowed for `other`.
    pub fn certainly_below(&self, other: &CertifiedRoot) -> bool {
        match cmp_dyadic(&self.hi, self.exp, &other.lo, other.exp) {
            Ordering::Less => true,
            // other's root is strictly above its lower end unless exact
            Ordering::Equal => !other.exact,
            Ordering::Greater => false,
        }
    }

    /// Decide whether two certified roots coincide, by checking whether the
    /// gcd of their polynomials vanishes on the intersection of the two
    /// intervals.
    pub fn same_root(&self, other: &CertifiedRoot) -> bool {
        let g = self.poly().gcd(other.poly());
        if g.is_constant() {
            return false;
        }
        let exp = self.exp.max(other.exp);
        let scale = |x: &BigInt, e: u32| x << (exp - e);
        let (alo, ahi) = (scale(&self.lo, self.exp), scale(&self.hi, self.exp));
        let (blo, bhi) = (scale(&other.lo, other.exp), scale(&other.hi, other.exp));
        match (self.exact, other.exact) {
            (true, true) => return ahi == bhi,
            (true, false) => {
                return ahi > blo && ahi <= bhi && other.poly().sign_at_dyadic(&ahi, exp) == 0
            }
            (false, true) => {
                return bhi > alo && bhi <= ahi && self.poly().sign_at_dyadic(&bhi, exp) == 0
            }
            (false, false) => {}
        }
        let lo = if alo > blo { alo } else { blo };
        let hi = if ahi < bhi { ahi } else { bhi };
        if lo >= hi {
            return false;
        }
        SturmChain::new(&g).count_roots(&lo, &hi, exp) > 0
    }

    /// Certified ordering of two roots.
    ///
    /// Intervals are refined until they separate. Once both are narrower
    /// than `1e-12` and still overlap, equality is settled exactly through
    /// the gcd of the two polynomials; distinct roots are refined further
    /// until they separate.
    pub fn compare(&mut self, other: &mut CertifiedRoot) -> Ordering {
        let mut checked_equal = false;
        loop {
            if self.certainly_below(other) {
                return Ordering::Less;
            }
            if other.certainly_below(self) {
                return Ordering::Greater;
            }
            if self.exact && other.exact {
                return cmp_dyadic(&self.lo, self.exp, &other.lo, other.exp);
            }
            if !checked_equal && self.width() < 1e-12 && other.width() < 1e-12 {
                if self.same_root(other) {
                    return Ordering::Equal;
                }
                checked_equal = true;
            }
            if self.width() >= other.width() {
                self.bisect();
            } else {
                other.bisect();
            }
        }
    }
}

impl PartialEq for CertifiedRoot {
    fn eq(&self, other: &Self) -> bool {
        self.clone().compare(&mut other.clone()) == Ordering::Equal
    }
}

/// All real roots of `p` with multiplicity, ascending, each refined to width
/// at most `tol`. Roots of different squarefree factors are kept in certified
/// order by refining any two neighbors whose intervals overlap.
pub fn real_roots(p: &IntPoly, tol: f64) -> Vec<(CertifiedRoot, usize)> {
    let mut roots: Vec<(CertifiedRoot, usize)> = Vec::new();
    for (factor, mult) in p.squarefree_factors() {
        let chain = Arc::new(SturmChain::new(&factor));
        for mut r in chain.isolate() {
            r.refine_to(tol);
            roots.push((r, mult));
        }
    }
    // insertion sort with certified comparisons; roots are pairwise distinct
    for i in 1..roots.len() {
        let mut j = i;
        while j > 0 {
            let (left, right) = roots.split_at_mut(j);
            if right[0].0.compare(&mut left[j - 1].0) == Ordering::Less {
                roots.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
    roots
}
