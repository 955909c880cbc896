//! Square matrices over an exact field: determinant, inverse,
//! characteristic polynomial, resultants.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactfield::{EpsPoly, FieldElem, Rational};
use crate::polylinalg::poly::{Poly, PolyF, Scalar};

/// Square matrix, row-major, over an exact field scalar.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<K> {
    n: usize,
    entries: Vec<K>,
}

/// Matrices over Q(eps): elements of G(F) and g(F).
pub type MatrixF = Matrix<FieldElem>;
/// Matrices over Q: residue classes in g(C).
pub type MatrixQ = Matrix<Rational>;

impl<K: Scalar> Matrix<K> {
    pub fn new(n: usize, entries: Vec<K>) -> Self {
        assert_eq!(entries.len(), n * n, "entry count must be n^2");
        Matrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn zero(n: usize) -> Self {
        Matrix { n, entries: vec![K::zero(); n * n] }
    }

    pub fn diagonal(diag: Vec<K>) -> Self {
        let n = diag.len();
        let mut m = Matrix::zero(n);
        for (i, d) in diag.into_iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn is_identity(&self) -> bool {
        self == &Matrix::identity(self.n)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.clone() * b.clone();
                    let cur = std::mem::replace(&mut out[(i, j)], K::zero());
                    out[(i, j)] = cur + t;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Matrix { n: self.n, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Matrix { n: self.n, entries }
    }

    pub fn scale(&self, c: &K) -> Self {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Matrix { n: self.n, entries: self.entries.iter().map(|a| -a.clone()).collect() }
    }

    pub fn trace(&self) -> K {
        let mut acc = K::zero();
        for i in 0..self.n {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn map<L: Scalar>(&self, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    /// Square submatrix on the given (0-based) row and column index sets.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        assert_eq!(rows.len(), cols.len());
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self[(i, j)].clone());
            }
        }
        Matrix { n: rows.len(), entries }
    }

    /// Exact determinant by Gaussian elimination over the field.
    pub fn det_gauss(&self) -> K {
        let n = self.n;
        let mut m = self.clone();
        let mut det = K::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !m[(r, col)].is_zero()) {
                Some(p) => p,
                None => return K::zero(),
            };
            if pivot != col {
                m.swap_rows(pivot, col);
                det = -det;
            }
            let p = m[(col, col)].clone();
            det = det * p.clone();
            for r in col + 1..n {
                let factor = m[(r, col)].clone() / p.clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let delta = factor.clone() * m[(col, c)].clone();
                    let cur = std::mem::replace(&mut m[(r, c)], K::zero());
                    m[(r, c)] = cur - delta;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut m = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero())?;
            if pivot != col {
                m.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = m[(col, col)].clone();
            for c in 0..n {
                let cur = std::mem::replace(&mut m[(col, c)], K::zero());
                m[(col, c)] = cur / p.clone();
                let cur = std::mem::replace(&mut inv[(col, c)], K::zero());
                inv[(col, c)] = cur / p.clone();
            }
            for r in 0..n {
                if r == col || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in 0..n {
                    let delta = factor.clone() * m[(col, c)].clone();
                    let cur = std::mem::replace(&mut m[(r, c)], K::zero());
                    m[(r, c)] = cur - delta;
                    let delta = factor.clone() * inv[(col, c)].clone();
                    let cur = std::mem::replace(&mut inv[(r, c)], K::zero());
                    inv[(r, c)] = cur - delta;
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.n {
            self.entries.swap(a * self.n + c, b * self.n + c);
        }
    }

    /// Monic characteristic polynomial det(x*I - self) via the
    /// Faddeev-LeVerrier recurrence (divisions only by integers, so the
    /// computation stays in the field with no pivoting choices).
    pub fn charpoly(&self) -> Poly<K> {
        let n = self.n;
        let mut coeffs = vec![K::zero(); n + 1];
        coeffs[n] = K::one();
        let mut m = self.clone(); // M_1 = A
        for k in 1..=n {
            let c = -(m.trace() / K::from_i64(k as i64));
            coeffs[n - k] = c.clone();
            if k < n {
                let mut shifted = m;
                for i in 0..n {
                    let cur = std::mem::replace(&mut shifted[(i, i)], K::zero());
                    shifted[(i, i)] = cur + c.clone();
                }
                m = self.mul(&shifted);
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<K: serde::Serialize> serde::Serialize for Matrix<K> {
    /// Row-major nested arrays of entries.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.n))?;
        for i in 0..self.n {
            seq.serialize_element(&self.entries[i * self.n..(i + 1) * self.n])?;
        }
        seq.end()
    }
}

impl<'de, K: serde::Deserialize<'de> + Scalar> serde::Deserialize<'de> for Matrix<K> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<K>>::deserialize(d)?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(serde::de::Error::custom("matrix must be square"));
        }
        Ok(Matrix::from_rows(rows))
    }
}

impl<K> std::ops::Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.entries[i * self.n + j]
    }
}

impl<K> std::ops::IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.entries[i * self.n + j]
    }
}

impl MatrixF {
    /// Exact determinant. Denominators are cleared row by row and the integral
    /// core is eliminated with Bareiss' fraction-free scheme, which keeps the
    /// intermediate polynomial degrees under control.
    pub fn det(&self) -> FieldElem {
        let n = self.n;
        if n == 0 {
            return FieldElem::one();
        }
        let mut correction = FieldElem::one();
        let mut rows: Vec<Vec<EpsPoly>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row_lcm = EpsPoly::one();
            for j in 0..n {
                let den = self[(i, j)].den();
                let g = EpsPoly::gcd(&row_lcm, den);
                row_lcm = row_lcm.mul(&den.div_exact(&g));
            }
            let scale = FieldElem::from_poly(row_lcm.clone());
            correction = correction.mul(&scale);
            let row = (0..n)
                .map(|j| {
                    let cleared = self[(i, j)].mul(&scale);
                    debug_assert!(cleared.den().is_one());
                    cleared.num().clone()
                })
                .collect();
            rows.push(row);
        }
        let det_poly = bareiss_det(rows);
        FieldElem::from_poly(det_poly)
            .div(&correction)
            .expect("row lcm is nonzero")
    }

    /// True when every entry lies in O and the determinant is a unit of O,
    /// i.e. the matrix lies in GL(n, O).
    pub fn is_gln_o(&self) -> bool {
        self.entries.iter().all(FieldElem::is_integral)
            && self.det().val() == crate::exactfield::Valuation::Finite(0)
    }
}

/// Fraction-free determinant of a polynomial matrix (Bareiss).
fn bareiss_det(mut m: Vec<Vec<EpsPoly>>) -> EpsPoly {
    let n = m.len();
    if n == 0 {
        return EpsPoly::one();
    }
    let mut sign_neg = false;
    let mut prev_pivot = EpsPoly::one();
    for k in 0..n - 1 {
        let pivot_row = match (k..n).find(|&r| !m[r][k].is_zero()) {
            Some(p) => p,
            None => return EpsPoly::zero(),
        };
        if pivot_row != k {
            m.swap(pivot_row, k);
            sign_neg = !sign_neg;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[k][k].mul(&m[i][j]);
                let b = m[i][k].mul(&m[k][j]);
                m[i][j] = a.sub(&b).div_exact(&prev_pivot);
            }
            m[i][k] = EpsPoly::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_neg {
        det.neg()
    } else {
        det
    }
}

/// Resultant of two nonzero polynomials as the Sylvester matrix determinant
/// (rows of `p` coefficients first). For monic p, q this equals the product
/// of q over the roots of p, so its valuation is the sum of valuations of
/// all cross differences of roots.
pub fn resultant(p: &PolyF, q: &PolyF) -> Result<FieldElem> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dp = p.degree().unwrap();
    let dq = q.degree().unwrap();
    if dp == 0 {
        // Res(c, q) = c^deg q
        let mut acc = FieldElem::one();
        for _ in 0..dq {
            acc = acc.mul(&p.leading());
        }
        return Ok(acc);
    }
    if dq == 0 {
        let mut acc = FieldElem::one();
        for _ in 0..dp {
            acc = acc.mul(&q.leading());
        }
        return Ok(acc);
    }
    let size = dp + dq;
    let mut m = MatrixF::zero(size);
    // dq rows of p's coefficients (descending), then dp rows of q's.
    for r in 0..dq {
        for (k, c) in p.coeffs().iter().enumerate() {
            m[(r, r + dp - k)] = c.clone();
        }
    }
    for r in 0..dp {
        for (k, c) in q.coeffs().iter().enumerate() {
            m[(dq + r, r + dq - k)] = c.clone();
        }
    }
    Ok(m.det())
}
