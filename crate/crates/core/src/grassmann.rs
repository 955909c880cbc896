//! Points of the affine Grassmannian X = GL(n, F)/GL(n, O) in a canonical
//! coset normal form, together with Levi Grassmannian points.
//!
//! The normal form is a column Hermite form over the discrete valuation ring
//! O ∩ Q(eps): lower triangular with diagonal eps^{d_i}, and every entry
//! below the diagonal a Laurent polynomial supported on exponents < d_i.
//! Uniqueness per coset follows from a triangular-unit argument, and is
//! exercised by the randomized right-multiplication suites.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{FieldElem, Valuation};
use crate::polylinalg::MatrixF;
use crate::rootcomb::{CoweightM, LeviDatum};

/// A coset g GL(n, O) in the affine Grassmannian, stored as its canonical
/// lattice normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassPoint {
    n: usize,
    rep: MatrixF,
}

impl GrassPoint {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The canonical representative matrix.
    pub fn rep(&self) -> &MatrixF {
        &self.rep
    }

    /// The connected-component invariant: val(det(rep)), constant on cosets.
    pub fn nu(&self) -> i64 {
        self.rep.det().val().finite()
    }

    /// The identity coset.
    pub fn identity(n: usize) -> GrassPoint {
        GrassPoint { n, rep: MatrixF::identity(n) }
    }

    /// The torus point eps^mu.
    pub fn torus(mu: &[i64]) -> GrassPoint {
        let rep = MatrixF::diagonal(mu.iter().map(|&k| FieldElem::eps_pow(k)).collect());
        GrassPoint { n: mu.len(), rep }
    }
}

/// Compute the canonical representative of the coset g GL(n, O).
/// Errors with `SingularMatrix` when det(g) = 0.
pub fn canonicalize(g: &MatrixF) -> Result<GrassPoint> {
    let n = g.n();
    let mut w = g.clone();
    let mut diag_exp = vec![0i64; n];

    // Triangularize: for each row choose the most negative-valuation entry as
    // pivot (lowest column index on ties), normalize it to a pure power of
    // eps by a unit column scaling, and clear the rest of the row.
    for i in 0..n {
        let mut best: Option<(i64, usize)> = None;
        for c in i..n {
            if let Valuation::Finite(v) = w[(i, c)].val() {
                if best.map_or(true, |(bv, _)| v < bv) {
                    best = Some((v, c));
                }
            }
        }
        let (d, c) = best.ok_or(Error::SingularMatrix)?;
        swap_cols(&mut w, i, c);
        let unit_inv = w[(i, i)].shift(-d).inv().expect("pivot is nonzero");
        scale_col(&mut w, i, &unit_inv);
        for c2 in i + 1..n {
            let factor = w[(i, c2)].shift(-d);
            if factor.is_zero() {
                continue;
            }
            debug_assert!(factor.is_integral());
            sub_col(&mut w, c2, i, &factor);
        }
        diag_exp[i] = d;
    }

    // Reduce each below-diagonal entry modulo eps^{d_i} O using the column
    // whose pivot sits in its row; the reduced entry is the Laurent prefix of
    // the old one below exponent d_i.
    for j in 0..n {
        for i in j + 1..n {
            let e = w[(i, j)].clone();
            let prefix = e.laurent_prefix(diag_exp[i]);
            let q = e.sub(&prefix).shift(-diag_exp[i]);
            if q.is_zero() {
                continue;
            }
            debug_assert!(q.is_integral());
            sub_col(&mut w, j, i, &q);
            debug_assert_eq!(w[(i, j)], prefix);
        }
    }

    Ok(GrassPoint { n, rep: w })
}

fn swap_cols(m: &mut MatrixF, a: usize, b: usize) {
    if a == b {
        return;
    }
    for r in 0..m.n() {
        let x = m[(r, a)].clone();
        m[(r, a)] = std::mem::replace(&mut m[(r, b)], x);
    }
}

fn scale_col(m: &mut MatrixF, c: usize, factor: &FieldElem) {
    for r in 0..m.n() {
        let cur = std::mem::replace(&mut m[(r, c)], FieldElem::zero());
        m[(r, c)] = cur.mul(factor);
    }
}

/// col_dst -= factor * col_src
fn sub_col(m: &mut MatrixF, dst: usize, src: usize, factor: &FieldElem) {
    for r in 0..m.n() {
        let delta = m[(r, src)].mul(factor);
        if delta.is_zero() {
            continue;
        }
        let cur = std::mem::replace(&mut m[(r, dst)], FieldElem::zero());
        m[(r, dst)] = cur.sub(&delta);
    }
}

/// Coset equality of two invertible representatives: a^{-1} b must lie in
/// GL(n, O). Agrees with equality of canonical forms.
pub fn same_coset(a: &MatrixF, b: &MatrixF) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::InvalidDatum("size mismatch".into()));
    }
    let inv = a.inverse().ok_or(Error::SingularMatrix)?;
    Ok(inv.mul(b).is_gln_o())
}

/// Left translation: the canonical form of g * x.
pub fn act(g: &MatrixF, x: &GrassPoint) -> Result<GrassPoint> {
    canonicalize(&g.mul(x.rep()))
}

/// A point of the Levi Grassmannian X_M: one Grassmannian point per block,
/// indexed by the Levi's canonical block order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeviPoint {
    levi: LeviDatum,
    points: Vec<GrassPoint>,
}

impl LeviPoint {
    pub fn new(levi: LeviDatum, points: Vec<GrassPoint>) -> Result<LeviPoint> {
        if levi.num_blocks() != points.len() {
            return Err(Error::InvalidDatum("one point per block required".into()));
        }
        for (b, p) in levi.blocks().iter().zip(&points) {
            if b.len() != p.n() {
                return Err(Error::InvalidDatum(format!(
                    "block {b:?} needs a point of size {}, got {}",
                    b.len(),
                    p.n()
                )));
            }
        }
        Ok(LeviPoint { levi, points })
    }

    pub fn levi(&self) -> &LeviDatum {
        &self.levi
    }

    pub fn points(&self) -> &[GrassPoint] {
        &self.points
    }

    /// The per-block val∘det vector in the coweight quotient of the Levi.
    pub fn nu(&self) -> CoweightM {
        let components = self.points.iter().map(GrassPoint::nu).collect();
        CoweightM::new(self.levi.clone(), components).expect("sizes match by invariant")
    }

    /// Embed into the full Grassmannian as a block-diagonal point.
    pub fn embed(&self) -> GrassPoint {
        let n = self.levi.n();
        let mut rep = MatrixF::zero(n);
        for (block, point) in self.levi.blocks().iter().zip(&self.points) {
            for (bi, &i) in block.iter().enumerate() {
                for (bj, &j) in block.iter().enumerate() {
                    rep[(i - 1, j - 1)] = point.rep()[(bi, bj)].clone();
                }
            }
        }
        canonicalize(&rep).expect("blocks are invertible")
    }
}

impl Serialize for GrassPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GrassPoint", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("rep", &self.rep)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for GrassPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            rep: MatrixF,
        }
        let raw = Raw::deserialize(d)?;
        if raw.rep.n() != raw.n {
            return Err(serde::de::Error::custom("rep size does not match n"));
        }
        // Any invertible representative is accepted; the stored point is its
        // canonical form.
        canonicalize(&raw.rep).map_err(serde::de::Error::custom)
    }
}

impl Serialize for LeviPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LeviPoint", 2)?;
        st.serialize_field("blocks", &self.levi)?;
        st.serialize_field("points", &self.points)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LeviPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            blocks: LeviDatum,
            points: Vec<GrassPoint>,
        }
        let raw = Raw::deserialize(d)?;
        LeviPoint::new(raw.blocks, raw.points).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::randgen;
    use rand::SeedableRng;

    fn fe(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    #[test]
    fn canonicalize_identity_and_units() {
        assert_eq!(canonicalize(&MatrixF::identity(3)).unwrap(), GrassPoint::identity(3));
        // any k in GL(n, O) canonicalizes to the identity coset
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let k = randgen::random_gln_o(&mut rng, 3);
            assert_eq!(canonicalize(&k).unwrap(), GrassPoint::identity(3));
        }
    }

    #[test]
    fn canonicalize_is_a_coset_representative() {
        // oracle: g^{-1} * canonical lies in GL(n, O)
        let g = MatrixF::from_rows(vec![
            vec![fe("1"), fe("0")],
            vec![fe("1 / 1*eps^1"), fe("1")],
        ]);
        let x = canonicalize(&g).unwrap();
        let check = g.inverse().unwrap().mul(x.rep());
        assert!(check.is_gln_o());
        // idempotent
        assert_eq!(canonicalize(x.rep()).unwrap(), x);
        // this particular g is already in normal form
        assert_eq!(x.rep(), &g);
    }

    #[test]
    fn canonical_invariance_randomized() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 2..=3 {
            for _ in 0..60 {
                let g = randgen::random_invertible(&mut rng, n);
                let k = randgen::random_gln_o(&mut rng, n);
                let a = canonicalize(&g).unwrap();
                let b = canonicalize(&g.mul(&k)).unwrap();
                assert_eq!(a, b);
                assert!(same_coset(a.rep(), &g).unwrap());
            }
        }
    }

    #[test]
    fn nu_examples() {
        assert_eq!(GrassPoint::identity(2).nu(), 0);
        let d = canonicalize(&MatrixF::diagonal(vec![
            FieldElem::eps_pow(2),
            FieldElem::eps_pow(-1),
        ]))
        .unwrap();
        assert_eq!(d.nu(), 1);
        let u = canonicalize(&MatrixF::from_rows(vec![
            vec![fe("1"), fe("0")],
            vec![fe("1 / 1*eps^2"), fe("1")],
        ]))
        .unwrap();
        assert_eq!(u.nu(), 0);
    }

    #[test]
    fn distinct_torus_points_are_distinct_cosets() {
        let x = GrassPoint::torus(&[1, 0]);
        let y = GrassPoint::torus(&[0, 1]);
        assert!(!same_coset(x.rep(), y.rep()).unwrap());
        assert_ne!(canonicalize(x.rep()).unwrap(), canonicalize(y.rep()).unwrap());
    }

    #[test]
    fn action_axioms() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let x = GrassPoint::torus(&[1, -1]);
        assert_eq!(act(&MatrixF::identity(2), &x).unwrap(), canonicalize(x.rep()).unwrap());
        // torus translation
        let a = MatrixF::diagonal(vec![FieldElem::eps_pow(2), FieldElem::eps_pow(-3)]);
        assert_eq!(act(&a, &x).unwrap(), canonicalize(GrassPoint::torus(&[3, -4]).rep()).unwrap());
        // act(g, act(h, x)) = act(gh, x)
        for _ in 0..15 {
            let g = randgen::random_invertible(&mut rng, 2);
            let h = randgen::random_invertible(&mut rng, 2);
            let lhs = act(&g, &act(&h, &x).unwrap()).unwrap();
            let rhs = act(&g.mul(&h), &x).unwrap();
            assert_eq!(lhs, rhs);
        }
        // nu is additive under the action
        let g = randgen::random_invertible(&mut rng, 2);
        let y = act(&g, &x).unwrap();
        assert_eq!(y.nu(), g.det().val().finite() + x.nu());
    }

    #[test]
    fn levi_nu_examples() {
        let levi = LeviDatum::new(3, vec![vec![1, 2], vec![3]]).unwrap();
        let block1 = canonicalize(&MatrixF::diagonal(vec![
            FieldElem::eps_pow(1),
            FieldElem::one(),
        ]))
        .unwrap();
        let block2 = GrassPoint::torus(&[-2]);
        let lp = LeviPoint::new(levi, vec![block1, block2]).unwrap();
        assert_eq!(lp.nu().components(), &[1, -2]);
        // all identity blocks -> zero vector
        let levi = LeviDatum::torus(3);
        let lp = LeviPoint::new(
            levi,
            vec![GrassPoint::identity(1), GrassPoint::identity(1), GrassPoint::identity(1)],
        )
        .unwrap();
        assert_eq!(lp.nu().components(), &[0, 0, 0]);
    }

    #[test]
    fn grass_point_json_roundtrip() {
        let g = MatrixF::from_rows(vec![
            vec![fe("1"), fe("0")],
            vec![fe("1 / 1*eps^1"), fe("1*eps^2")],
        ]);
        let x = canonicalize(&g).unwrap();
        let json = serde_json::to_string(&x).unwrap();
        let back: GrassPoint = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }
}
