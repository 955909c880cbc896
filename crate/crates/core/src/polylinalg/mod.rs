//! Polynomials and square matrices over exact fields: determinants,
//! inverses, characteristic polynomials, resultants, and rational canonical
//! data over Q.

mod canonical;
mod matrix;
mod poly;

pub use canonical::{frobenius_form, is_regular_matrix, minpoly, minpoly_krylov};
pub use matrix::{resultant, Matrix, MatrixF, MatrixQ};
pub use poly::{Poly, PolyF, PolyQ, Scalar};

#[cfg(test)]
mod proptests {
    use super::*;
    use crate::exactfield::{rat, FieldElem, Rational};
    use proptest::prelude::*;

    fn arb_fe() -> impl Strategy<Value = FieldElem> {
        // small Laurent elements: c * eps^k + d
        ((-6i64..6), (1i64..4), (-2i64..3), (-3i64..4))
            .prop_map(|(p, q, k, d)| {
                FieldElem::monomial(rat(p, q), k).add(&FieldElem::from_int(d))
            })
    }

    fn arb_matf(n: usize) -> impl Strategy<Value = MatrixF> {
        prop::collection::vec(arb_fe(), n * n).prop_map(move |v| Matrix::new(n, v))
    }

    fn arb_matq(n: usize) -> impl Strategy<Value = MatrixQ> {
        prop::collection::vec((-5i64..6).prop_map(|p| rat(p, 1)), n * n)
            .prop_map(move |v| Matrix::new(n, v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn det_is_multiplicative(a in arb_matf(3), b in arb_matf(3)) {
            prop_assert_eq!(a.mul(&b).det(), a.det().mul(&b.det()));
        }

        #[test]
        fn charpoly_is_conjugation_invariant(m in arb_matf(3), g in arb_matf(3)) {
            if let Some(ginv) = g.inverse() {
                let conj = g.mul(&m).mul(&ginv);
                prop_assert_eq!(conj.charpoly(), m.charpoly());
            }
        }

        #[test]
        fn minpoly_divides_charpoly(m in arb_matq(3)) {
            let mp = minpoly(&m);
            let cp = m.charpoly();
            let (_, r) = cp.divrem(&mp);
            prop_assert!(r.is_zero());
            let single = frobenius_form(&m).len() == 1;
            prop_assert_eq!(mp.degree() == Some(3), single);
        }

        #[test]
        fn resultant_vanishes_iff_common_factor(
            r1 in -3i64..4, r2 in -3i64..4, r3 in -3i64..4, r4 in -3i64..4
        ) {
            let p = PolyF::from_roots(&[FieldElem::from_int(r1), FieldElem::from_int(r2)]);
            let q = PolyF::from_roots(&[FieldElem::from_int(r3), FieldElem::from_int(r4)]);
            let res = resultant(&p, &q).unwrap();
            let g = PolyF::gcd(&p, &q);
            prop_assert_eq!(res.is_zero(), g.degree() != Some(0));
        }

        #[test]
        fn krylov_and_smith_minpoly_agree(m in arb_matq(4)) {
            prop_assert_eq!(minpoly(&m), minpoly_krylov(&m));
        }
    }
}
