//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients stored lowest degree first, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-division: returns `(q, r)` with `lc(d)^k * self = q * d + r`,
    /// `k = deg self - deg d + 1`, and `deg r < deg d`.
    pub fn pseudo_div_rem(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() || self.degree() < divisor.degree() {
            return (Self::zero(), self.clone());
        }
        let dd = divisor.degree();
        let lc = divisor.leading();
        let steps = self.degree() - dd + 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); steps];
        for step in 0..steps {
            let top = self.degree() - step;
            let t = rem[top].clone();
            // rem = lc * rem - t * x^{top-dd} * divisor
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            for q in quot.iter_mut() {
                *q *= &lc;
            }
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                rem[top - dd + k] -= &t * dc;
            }
            quot[top - dd] += t;
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        self.pseudo_div_rem(divisor).1
    }

    /// Quotient up to a nonzero constant, for divisors that divide exactly
    /// over the rationals. The result is primitive.
    pub fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        let (q, r) = self.pseudo_div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q.primitive()
    }

    /// Greatest common divisor over the rationals, as a primitive polynomial.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Sign of `self(num / 2^exp)`, computed exactly.
    pub fn sign_at_dyadic(&self, num: &BigInt, exp: u32) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let d = self.degree();
        let mut acc = self.coeffs[d].clone();
        let mut scale = BigInt::one();
        let step = BigInt::one() << exp;
        for k in (0..d).rev() {
            scale *= &step;
            acc = acc * num + &self.coeffs[k] * &scale;
        }
        sign_of(&acc)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Factors `(q, k)` with `self = c * prod q^k`, each `q` squarefree and
    /// pairwise coprime. Constant input yields no factors.
    pub fn squarefree_factors(&self) -> Vec<(IntPoly, usize)> {
        // g[k] has the roots of self with multiplicity > k, each with
        // multiplicity reduced by k.
        let mut g = vec![self.primitive()];
        while !g.last().unwrap().is_constant() {
            let last = g.last().unwrap();
            g.push(last.gcd(&last.derivative()));
        }
        // h[k] = g[k-1] / g[k]: roots of multiplicity >= k, simple.
        let h: Vec<IntPoly> = (1..g.len()).map(|k| g[k - 1].div_exact(&g[k])).collect();
        let mut out = Vec::new();
        for k in 0..h.len() {
            let exact = if k + 1 < h.len() {
                h[k].div_exact(&h[k + 1])
            } else {
                h[k].clone()
            };
            if !exact.is_constant() {
                out.push((exact, k + 1));
            }
        }
        out
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}
