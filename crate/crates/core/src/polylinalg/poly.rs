//! Univariate polynomials over an exact field.
//!
//! Generic over the scalar so the same code serves Q (residue computations)
//! and Q(eps) (characteristic polynomials, resultants).

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::exactfield::{FieldElem, Rational};

/// Scalars from an exact field; implemented by `Rational` and `FieldElem`.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Div<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

impl Scalar for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v.into())
    }
}

impl Scalar for FieldElem {
    fn from_i64(v: i64) -> Self {
        FieldElem::from_int(v)
    }
}

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

/// Polynomials over Q(eps); carrier for characteristic polynomials.
pub type PolyF = Poly<FieldElem>;
/// Polynomials over Q; carrier for minimal polynomials and invariant factors.
pub type PolyQ = Poly<Rational>;

impl<K: Scalar> Poly<K> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly { coeffs: vec![K::zero(), K::one()] }
    }

    /// `x - c`.
    pub fn x_minus(c: K) -> Self {
        Poly { coeffs: vec![-c, K::one()] }
    }

    pub fn from_coeffs(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> K {
        self.coeffs.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeff(k);
            let d = other.coeff(k);
            if !d.is_zero() {
                c = c + d;
            }
            out.push(c);
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()) .collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a.clone() * b.clone();
                let cur = std::mem::replace(&mut out[i + j], K::zero());
                out[i + j] = cur + t;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return (Poly::zero(), Poly::zero());
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![K::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = rem[k].clone();
            if !c.is_zero() {
                let q = c / lead.clone();
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let idx = k - dd + j;
                    let delta = q.clone() * b.clone();
                    let cur = std::mem::replace(&mut rem[idx], K::zero());
                    rem[idx] = cur - delta;
                }
                quot[k - dd] = q;
            }
            rem.pop();
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.divrem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Least common multiple, monic.
    pub fn lcm(a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let g = Poly::gcd(a, b);
        let (q, r) = a.mul(b).divrem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let lead = self.leading();
        if lead.is_one() {
            return self.clone();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.clone() / lead.clone()).collect(),
        }
    }

    pub fn eval(&self, at: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * K::from_i64(k as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// True iff the polynomial has no repeated roots (gcd with derivative is
    /// constant). The zero polynomial is not squarefree.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        Poly::gcd(self, &self.derivative()).degree() == Some(0)
    }

    /// Product of `x - c` over the given scalars.
    pub fn from_roots(roots: &[K]) -> Self {
        let mut acc = Poly::one();
        for r in roots {
            acc = acc.mul(&Poly::x_minus(r.clone()));
        }
        acc
    }
}

impl<K: Scalar + std::fmt::Display> std::fmt::Display for Poly<K> {
    /// Conventional readable form with variable `x`, descending exponents.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    fn pq(cs: &[i64]) -> PolyQ {
        PolyQ::from_coeffs(cs.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn divrem_and_gcd() {
        let a = pq(&[-1, 0, 1]); // x^2 - 1
        let b = pq(&[1, 1]); // x + 1
        let (q, r) = a.divrem(&b);
        assert_eq!(q, pq(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(PolyQ::gcd(&a, &b), b);
    }

    #[test]
    fn squarefree_detection() {
        assert!(pq(&[-1, 0, 1]).is_squarefree()); // (x-1)(x+1)
        assert!(!pq(&[1, 2, 1]).is_squarefree()); // (x+1)^2
        assert!(!PolyQ::zero().is_squarefree());
    }

    #[test]
    fn lcm_divides() {
        let a = pq(&[-1, 1]).mul(&pq(&[-2, 1]));
        let b = pq(&[-2, 1]).mul(&pq(&[-3, 1]));
        let l = PolyQ::lcm(&a, &b);
        assert_eq!(l.degree(), Some(3));
        let (_, r1) = l.divrem(&a);
        let (_, r2) = l.divrem(&b);
        assert!(r1.is_zero() && r2.is_zero());
    }
}
