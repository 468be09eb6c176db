//! Exact real-rootedness of integer polynomials via Sturm sequences over
//! arbitrary-precision rationals. Multiplicities are handled by passing to
//! the square-free part first.

use crate::vectors::{IntPoly, VectorError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

type Q = BigRational;

#[derive(Debug, Clone, PartialEq)]
struct QPoly(Vec<Q>);

impl QPoly {
    fn from_ints(coeffs: &[i64]) -> QPoly {
        QPoly::new(
            coeffs
                .iter()
                .map(|&c| Q::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    fn new(mut coeffs: Vec<Q>) -> QPoly {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Q::zero());
        }
        QPoly(coeffs)
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    fn degree(&self) -> usize {
        self.0.len() - 1
    }

    fn leading(&self) -> &Q {
        self.0.last().unwrap()
    }

    fn derivative(&self) -> QPoly {
        if self.0.len() == 1 {
            return QPoly::new(vec![Q::zero()]);
        }
        QPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Q::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Remainder of `self / other` (other nonzero).
    fn rem(&self, other: &QPoly) -> QPoly {
        let mut r = self.0.clone();
        let d = other.degree();
        let lead = other.leading().clone();
        while r.len() > d && !(r.len() == 1 && r[0].is_zero()) {
            let k = r.len() - 1;
            let factor = r[k].clone() / lead.clone();
            if factor.is_zero() {
                r.pop();
                continue;
            }
            for i in 0..=d {
                let v = other.0[i].clone() * factor.clone();
                r[k - d + i] -= v;
            }
            r.pop();
        }
        QPoly::new(r)
    }

    fn monic_gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading().clone();
        QPoly::new(a.0.into_iter().map(|c| c / lead.clone()).collect())
    }

    /// Quotient of an exact division.
    fn div_exact(&self, other: &QPoly) -> QPoly {
        let mut r = self.0.clone();
        let d = other.degree();
        let lead = other.leading().clone();
        let mut q = vec![Q::zero(); self.0.len().saturating_sub(d)];
        while r.len() > d {
            let k = r.len() - 1;
            let factor = r[k].clone() / lead.clone();
            q[k - d] = factor.clone();
            for i in 0..=d {
                let v = other.0[i].clone() * factor.clone();
                r[k - d + i] -= v;
            }
            r.pop();
        }
        QPoly::new(q)
    }

    /// Sign of the polynomial at +∞ (or -∞).
    fn sign_at_infinity(&self, positive: bool) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let lead = self.leading();
        let base = if lead.is_positive() { 1 } else { -1 };
        if positive || self.degree().is_multiple_of(2) {
            base
        } else {
            -base
        }
    }
}

/// Exact test: does the polynomial have only real roots (counted with
/// multiplicity)? Constants are vacuously real-rooted; the zero polynomial
/// is rejected.
pub fn is_real_rooted(p: &IntPoly) -> Result<bool, VectorError> {
    if p.is_zero() {
        return Err(VectorError::ZeroPolynomial);
    }
    let poly = QPoly::from_ints(p.coeffs());
    if poly.degree() == 0 {
        return Ok(true);
    }
    // square-free part: distinct roots carry the answer
    let deriv = poly.derivative();
    let gcd = poly.monic_gcd(&deriv);
    let squarefree = if gcd.degree() == 0 {
        poly
    } else {
        poly.div_exact(&gcd)
    };
    let degree = squarefree.degree();
    if degree == 0 {
        return Ok(true);
    }
    // Sturm chain
    let mut chain = vec![squarefree.clone(), squarefree.derivative()];
    loop {
        let last = &chain[chain.len() - 1];
        if last.is_zero() || last.degree() == 0 {
            break;
        }
        let prev = &chain[chain.len() - 2];
        let rem = prev.rem(last);
        let neg = QPoly::new(rem.0.into_iter().map(|c| -c).collect());
        if neg.is_zero() {
            break;
        }
        chain.push(neg);
    }
    let variations = |positive: bool| -> usize {
        let signs: Vec<i32> = chain
            .iter()
            .map(|q| q.sign_at_infinity(positive))
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let real_roots = variations(false) as i64 - variations(true) as i64;
    Ok(real_roots == degree as i64)
}
