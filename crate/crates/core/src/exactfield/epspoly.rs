//! Polynomials in the uniformizer `eps` with rational coefficients.
//!
//! `EpsPoly` is the computational carrier for elements of O = C[[eps]] that
//! happen to be polynomial. Coefficients are exact rationals; the zero
//! polynomial is the empty coefficient vector.

use num_traits::{One, Signed, Zero};

use crate::exactfield::Rational;

/// A polynomial in `eps` over Q, stored densely by ascending exponent with no
/// trailing zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpsPoly {
    coeffs: Vec<Rational>,
}

impl EpsPoly {
    pub fn zero() -> Self {
        EpsPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        EpsPoly::constant(Rational::one())
    }

    /// The uniformizer itself.
    pub fn eps() -> Self {
        EpsPoly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            EpsPoly::zero()
        } else {
            EpsPoly { coeffs: vec![c] }
        }
    }

    pub fn monomial(c: Rational, exp: usize) -> Self {
        if c.is_zero() {
            return EpsPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        EpsPoly { coeffs }
    }

    /// Build from an ascending coefficient vector, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        EpsPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term, or `None` for zero.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, exp: usize) -> Rational {
        self.coeffs.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the lowest nonzero term; zero polynomial gives 0.
    pub fn low_coeff(&self) -> Rational {
        match self.low_degree() {
            Some(d) => self.coeffs[d].clone(),
            None => Rational::zero(),
        }
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &EpsPoly) -> EpsPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        EpsPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &EpsPoly) -> EpsPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        EpsPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> EpsPoly {
        EpsPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &EpsPoly) -> EpsPoly {
        if self.is_zero() || other.is_zero() {
            return EpsPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        EpsPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> EpsPoly {
        if c.is_zero() {
            return EpsPoly::zero();
        }
        EpsPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by `eps^k`.
    pub fn shift_up(&self, k: usize) -> EpsPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        EpsPoly { coeffs }
    }

    /// Divide by `eps^k`; panics if `eps^k` does not divide self.
    pub fn shift_down(&self, k: usize) -> EpsPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        assert!(self.low_degree().map_or(true, |d| d >= k), "shift_down: not divisible by eps^k");
        EpsPoly { coeffs: self.coeffs[k..].to_vec() }
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg r < deg divisor. Panics on zero divisor.
    pub fn divrem(&self, divisor: &EpsPoly) -> (EpsPoly, EpsPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return (EpsPoly::zero(), EpsPoly::zero());
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = rem[k].clone();
            if !c.is_zero() {
                let q = &c / &lead;
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let idx = k - dd + j;
                    let delta = &q * b;
                    rem[idx] -= delta;
                }
                quot[k - dd] = q;
            }
            rem.pop();
        }
        (EpsPoly::from_coeffs(quot), EpsPoly::from_coeffs(rem))
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &EpsPoly) -> EpsPoly {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "div_exact: nonzero remainder");
        q
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(a: &EpsPoly, b: &EpsPoly) -> EpsPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.divrem(&y);
            x = y;
            y = r;
        }
        if x.is_zero() {
            return x;
        }
        let lead = x.leading_coeff();
        x.scale(&(Rational::one() / lead))
    }

    pub fn derivative(&self) -> EpsPoly {
        if self.coeffs.len() <= 1 {
            return EpsPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(k.into()))
            .collect();
        EpsPoly::from_coeffs(coeffs)
    }

    /// Evaluate at eps = 0, i.e. the constant coefficient.
    pub fn eval_zero(&self) -> Rational {
        self.coeff(0)
    }
}

/// Render a rational in the canonical text form: `p` when the denominator is
/// one, `p/q` otherwise.
pub(crate) fn rational_text(c: &Rational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl std::fmt::Display for EpsPoly {
    /// Canonical text: terms ascending by exponent joined with `+`;
    /// `p/q*eps^k` per term, omitting `*eps^k` for k = 0. Zero prints as `0`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", rational_text(c))?;
            } else {
                write!(f, "{}*eps^{}", rational_text(c), k)?;
            }
        }
        Ok(())
    }
}

/// Convenience for tests and fixtures: rational from a signed pair.
pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0);
    let r = Rational::new(p.into(), q.into());
    debug_assert!(r.denom().is_positive() || r.is_zero());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[(i64, i64)]) -> EpsPoly {
        EpsPoly::from_coeffs(cs.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let a = poly(&[(1, 1), (0, 1), (3, 2), (1, 1)]);
        let b = poly(&[(2, 1), (1, 1)]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_common_factor() {
        let f = poly(&[(1, 1), (1, 1)]); // 1 + eps
        let a = f.mul(&poly(&[(2, 1), (0, 1), (1, 1)]));
        let b = f.mul(&poly(&[(-1, 1), (1, 1)]));
        let g = EpsPoly::gcd(&a, &b);
        assert_eq!(g, f.scale(&Rational::one())); // already monic
    }

    #[test]
    fn low_degree_and_display() {
        let p = EpsPoly::from_coeffs(vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(1, 1)]);
        assert_eq!(p.low_degree(), Some(2));
        assert_eq!(p.to_string(), "1*eps^2+1*eps^3");
        assert_eq!(EpsPoly::zero().to_string(), "0");
        assert_eq!(poly(&[(3, 2)]).to_string(), "3/2");
    }
}
