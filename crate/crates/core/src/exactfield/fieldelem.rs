//! Elements of Q(eps) viewed inside the Laurent series field F = C((eps)).
//!
//! Every element is kept in canonical fraction form: numerator and
//! denominator coprime in Q[eps], and the denominator's lowest nonzero
//! coefficient equal to 1. Equality of canonical forms is equality in the
//! field, and the eps-adic valuation is read off exactly as
//! `lowdeg(num) - lowdeg(den)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactfield::epspoly::EpsPoly;
use crate::exactfield::Rational;

/// Exact eps-adic valuation; the zero element has valuation `Infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn is_finite(&self) -> bool {
        matches!(self, Valuation::Finite(_))
    }

    /// The finite value, panicking on infinity.
    pub fn finite(&self) -> i64 {
        match self {
            Valuation::Finite(v) => *v,
            Valuation::Infinity => panic!("valuation of zero is infinite"),
        }
    }

    /// True when the valuation is >= the given bound (infinity passes).
    pub fn at_least(&self, bound: i64) -> bool {
        match self {
            Valuation::Finite(v) => *v >= bound,
            Valuation::Infinity => true,
        }
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

/// An element of Q(eps) in canonical fraction form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    num: EpsPoly,
    den: EpsPoly,
}

impl FieldElem {
    /// Build `num/den`, normalizing to canonical form.
    /// Errors with `DivisionByZero` if `den` is zero.
    pub fn new(num: EpsPoly, den: EpsPoly) -> Result<FieldElem> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: EpsPoly, den: EpsPoly) -> FieldElem {
        if num.is_zero() {
            return FieldElem { num: EpsPoly::zero(), den: EpsPoly::one() };
        }
        let g = EpsPoly::gcd(&num, &den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        let low = den.low_coeff();
        if !low.is_one() {
            let inv = Rational::one() / low;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        FieldElem { num, den }
    }

    pub fn from_poly(p: EpsPoly) -> FieldElem {
        FieldElem::normalized(p, EpsPoly::one())
    }

    pub fn from_rational(c: Rational) -> FieldElem {
        FieldElem::from_poly(EpsPoly::constant(c))
    }

    pub fn from_int(v: i64) -> FieldElem {
        FieldElem::from_rational(Rational::from_integer(v.into()))
    }

    pub fn zero() -> FieldElem {
        FieldElem { num: EpsPoly::zero(), den: EpsPoly::one() }
    }

    pub fn one() -> FieldElem {
        FieldElem { num: EpsPoly::one(), den: EpsPoly::one() }
    }

    /// `eps^k` for any integer k (negative k goes to the denominator).
    pub fn eps_pow(k: i64) -> FieldElem {
        if k >= 0 {
            FieldElem::from_poly(EpsPoly::monomial(Rational::one(), k as usize))
        } else {
            FieldElem {
                num: EpsPoly::one(),
                den: EpsPoly::monomial(Rational::one(), (-k) as usize),
            }
        }
    }

    /// `c * eps^k` for rational c and any integer k.
    pub fn monomial(c: Rational, k: i64) -> FieldElem {
        FieldElem::eps_pow(k).mul(&FieldElem::from_rational(c))
    }

    pub fn num(&self) -> &EpsPoly {
        &self.num
    }

    pub fn den(&self) -> &EpsPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Exact eps-adic valuation; `Infinity` for the zero element.
    pub fn val(&self) -> Valuation {
        match self.num.low_degree() {
            None => Valuation::Infinity,
            Some(vn) => {
                let vd = self.den.low_degree().expect("canonical den is nonzero");
                Valuation::Finite(vn as i64 - vd as i64)
            }
        }
    }

    /// True iff the element lies in O = C[[eps]], i.e. val >= 0.
    pub fn is_integral(&self) -> bool {
        self.val().at_least(0)
    }

    /// The eps^0 coefficient of the Laurent expansion (the image in the
    /// residue field); requires val >= 0.
    pub fn residue(&self) -> Result<Rational> {
        if !self.is_integral() {
            return Err(Error::NegativeValuation);
        }
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        // val >= 0 with a reduced fraction forces lowdeg(den) = 0, so the
        // denominator is invertible at eps = 0.
        Ok(self.num.eval_zero() / self.den.eval_zero())
    }

    pub fn add(&self, other: &FieldElem) -> FieldElem {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        FieldElem::normalized(num, den)
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        FieldElem::normalized(num, den)
    }

    pub fn neg_ref(&self) -> FieldElem {
        FieldElem { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        if self.is_zero() || other.is_zero() {
            return FieldElem::zero();
        }
        // Common fast path: polynomial times polynomial needs no gcd work
        // beyond content normalization, which `normalized` skips when the
        // denominator is 1.
        if self.den.is_one() && other.den.is_one() {
            return FieldElem { num: self.num.mul(&other.num), den: EpsPoly::one() };
        }
        FieldElem::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElem::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(&other.inv()?))
    }

    /// Multiply by `eps^k` for any integer k.
    pub fn shift(&self, k: i64) -> FieldElem {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        self.mul(&FieldElem::eps_pow(k))
    }

    /// Laurent coefficients of the expansion of this element starting at its
    /// valuation, `count` terms. Returns (valuation, coefficients).
    fn laurent_coeffs(&self, count: usize) -> Option<(i64, Vec<Rational>)> {
        let v = match self.val() {
            Valuation::Infinity => return None,
            Valuation::Finite(v) => v,
        };
        let vn = self.num.low_degree().unwrap();
        let vd = self.den.low_degree().unwrap();
        // num = eps^vn * n0, den = eps^vd * d0 with n0(0), d0(0) != 0.
        let n0 = self.num.shift_down(vn);
        let d0 = self.den.shift_down(vd);
        let d0c = d0.coeffs();
        let inv_lead = Rational::one() / d0c[0].clone();
        let mut out: Vec<Rational> = Vec::with_capacity(count);
        for k in 0..count {
            let mut acc = n0.coeff(k);
            for j in 1..=k.min(d0c.len().saturating_sub(1)) {
                acc -= &d0c[j] * &out[k - j];
            }
            out.push(acc * &inv_lead);
        }
        Some((v, out))
    }

    /// The sum of the Laurent terms of this element with exponent < `upto`,
    /// as an exact element of Q(eps).
    pub fn laurent_prefix(&self, upto: i64) -> FieldElem {
        let v = match self.val() {
            Valuation::Infinity => return FieldElem::zero(),
            Valuation::Finite(v) => v,
        };
        if v >= upto {
            return FieldElem::zero();
        }
        let count = (upto - v) as usize;
        let (_, coeffs) = self.laurent_coeffs(count).unwrap();
        let tail = EpsPoly::from_coeffs(coeffs);
        FieldElem::from_poly(tail).shift(v)
    }

    /// Laurent coefficient at a single exponent.
    pub fn laurent_coeff(&self, exp: i64) -> Rational {
        let v = match self.val() {
            Valuation::Infinity => return Rational::zero(),
            Valuation::Finite(v) => v,
        };
        if exp < v {
            return Rational::zero();
        }
        let count = (exp - v) as usize + 1;
        let (_, coeffs) = self.laurent_coeffs(count).unwrap();
        coeffs[count - 1].clone()
    }
}

impl std::fmt::Display for FieldElem {
    /// Canonical text form. The numerator/denominator separator is rendered
    /// as ` / ` (with spaces) so it can never collide with the `/` inside a
    /// rational coefficient.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", self.num, self.den)
        }
    }
}

impl std::str::FromStr for FieldElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<FieldElem> {
        crate::exactfield::parse::parse_field_elem(s)
    }
}

// Operator impls so generic polynomial / matrix code can treat FieldElem and
// BigRational uniformly.

impl std::ops::Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        FieldElem::add(&self, &rhs)
    }
}

impl std::ops::Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: FieldElem) -> FieldElem {
        FieldElem::sub(&self, &rhs)
    }
}

impl std::ops::Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        FieldElem::mul(&self, &rhs)
    }
}

impl std::ops::Div for FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: FieldElem) -> FieldElem {
        FieldElem::div(&self, &rhs).expect("division by zero FieldElem")
    }
}

impl std::ops::Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.neg_ref()
    }
}

impl num_traits::Zero for FieldElem {
    fn zero() -> Self {
        FieldElem::zero()
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
}

impl num_traits::One for FieldElem {
    fn one() -> Self {
        FieldElem::one()
    }
    fn is_one(&self) -> bool {
        FieldElem::is_one(self)
    }
}

impl serde::Serialize for FieldElem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for FieldElem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::epspoly::rat;

    fn fe(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    #[test]
    fn val_examples() {
        // eps^2 + eps^3 -> 2
        assert_eq!(fe("1*eps^2+1*eps^3").val(), Valuation::Finite(2));
        // (1+eps)/eps -> -1
        assert_eq!(fe("1+1*eps^1 / 1*eps^1").val(), Valuation::Finite(-1));
        // 0 -> infinity
        assert_eq!(FieldElem::zero().val(), Valuation::Infinity);
    }

    #[test]
    fn residue_examples() {
        // (1+eps)/(1-eps) -> 1
        assert_eq!(fe("1+1*eps^1 / 1+-1*eps^1").residue().unwrap(), rat(1, 1));
        // eps^2 -> 0
        assert_eq!(fe("1*eps^2").residue().unwrap(), rat(0, 1));
        // 3/2 + 7 eps -> 3/2
        assert_eq!(fe("3/2+7*eps^1").residue().unwrap(), rat(3, 2));
        // pole -> error
        assert!(matches!(FieldElem::eps_pow(-1).residue(), Err(Error::NegativeValuation)));
    }

    #[test]
    fn is_integral_examples() {
        assert!(!FieldElem::eps_pow(-1).is_integral());
        assert!(FieldElem::one().is_integral());
        // (eps^2 + eps^3)/eps has valuation 1 >= 0
        let a = fe("1*eps^2+1*eps^3").div(&FieldElem::eps_pow(1)).unwrap();
        assert!(a.is_integral());
        assert_eq!(a.val(), Valuation::Finite(1));
    }

    #[test]
    fn canonical_form_reduces() {
        // (eps^2+eps^3)/eps = eps + eps^2 with denominator 1
        let a = FieldElem::new(
            EpsPoly::from_coeffs(vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(1, 1)]),
            EpsPoly::eps(),
        )
        .unwrap();
        assert!(a.den().is_one());
        assert_eq!(a.to_string(), "1*eps^1+1*eps^2");
        // 1/(2 eps): denominator normalized to lowest coefficient 1
        let b = FieldElem::new(EpsPoly::one(), EpsPoly::monomial(rat(2, 1), 1)).unwrap();
        assert_eq!(b.to_string(), "1/2 / 1*eps^1");
    }

    #[test]
    fn laurent_prefix_matches_series() {
        // 1/(1-eps) = 1 + eps + eps^2 + ...
        let a = fe("1 / 1+-1*eps^1");
        let p = a.laurent_prefix(3);
        assert_eq!(p.to_string(), "1+1*eps^1+1*eps^2");
        // difference has valuation >= 3
        assert!(a.sub(&p).val().at_least(3));
        // negative-valuation element
        let b = fe("1 / 1*eps^2+-1*eps^3"); // eps^-2/(1-eps)
        let pre = b.laurent_prefix(0);
        assert_eq!(pre.to_string(), "1+1*eps^1 / 1*eps^2");
        assert!(b.sub(&pre).val().at_least(0));
    }

    #[test]
    fn laurent_coeff_single() {
        let a = fe("1 / 1+-1*eps^1");
        assert_eq!(a.laurent_coeff(5), rat(1, 1));
        assert_eq!(a.laurent_coeff(-1), rat(0, 1));
    }
}
