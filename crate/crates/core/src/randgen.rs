//! Seeded random generators for matrices used by the well-definedness and
//! structural test suites.
//!
//! Elements of GL(n, O) are built as products of elementary matrices with
//! O-entries, diagonal unit matrices and permutations, so membership holds by
//! construction. Random invertible matrices over F extend this with torus
//! factors eps^mu and shears with arbitrary Laurent-polynomial entries.

use rand::Rng;

use crate::exactfield::{rat, EpsPoly, FieldElem, Rational};
use crate::polylinalg::MatrixF;

fn random_rational(rng: &mut impl Rng) -> Rational {
    let p = rng.gen_range(-4i64..=4);
    let q = rng.gen_range(1i64..=3);
    rat(p, q)
}

/// A random element of O ∩ Q(eps): a polynomial in eps of small degree.
pub fn random_o_elem(rng: &mut impl Rng, max_deg: usize) -> FieldElem {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs = (0..=deg).map(|_| random_rational(rng)).collect();
    FieldElem::from_poly(EpsPoly::from_coeffs(coeffs))
}

/// A random unit of O: nonzero constant term plus higher-order noise.
pub fn random_o_unit(rng: &mut impl Rng) -> FieldElem {
    let mut c0 = random_rational(rng);
    if num_traits::Zero::is_zero(&c0) {
        c0 = rat(1, 1);
    }
    let mut coeffs = vec![c0];
    for _ in 0..rng.gen_range(0..3) {
        coeffs.push(random_rational(rng));
    }
    FieldElem::from_poly(EpsPoly::from_coeffs(coeffs))
}

/// A random Laurent polynomial over Q with exponents in [-max_pole, max_deg].
pub fn random_laurent(rng: &mut impl Rng, max_pole: i64, max_deg: i64) -> FieldElem {
    let terms = rng.gen_range(0..=2);
    let mut acc = FieldElem::zero();
    for _ in 0..terms {
        let k = rng.gen_range(-max_pole..=max_deg);
        acc = acc.add(&FieldElem::monomial(random_rational(rng), k));
    }
    acc
}

fn shear(n: usize, i: usize, j: usize, t: &FieldElem) -> MatrixF {
    let mut m = MatrixF::identity(n);
    m[(i, j)] = t.clone();
    m
}

fn permutation(rng: &mut impl Rng, n: usize) -> MatrixF {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let mut m = MatrixF::zero(n);
    for (i, &p) in perm.iter().enumerate() {
        m[(i, p)] = FieldElem::one();
    }
    m
}

/// A random element of GL(n, O): a bounded product of elementary matrices
/// with O-entries, diagonal units, and permutations.
pub fn random_gln_o(rng: &mut impl Rng, n: usize) -> MatrixF {
    let mut m = MatrixF::diagonal((0..n).map(|_| random_o_unit(rng)).collect());
    for _ in 0..rng.gen_range(2..6) {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                if i == j {
                    j = (j + 1) % n;
                }
                m = m.mul(&shear(n, i, j, &random_o_elem(rng, 2)));
            }
            1 => {
                m = m.mul(&permutation(rng, n));
            }
            _ => {
                m = m.mul(&MatrixF::diagonal((0..n).map(|_| random_o_unit(rng)).collect()));
            }
        }
    }
    debug_assert!(m.is_gln_o());
    m
}

/// A random invertible element of GL(n, F): shears with Laurent entries,
/// torus factors, and permutations.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> MatrixF {
    let mu: Vec<i64> = (0..n).map(|_| rng.gen_range(-3i64..=3)).collect();
    let mut m = MatrixF::diagonal(mu.into_iter().map(FieldElem::eps_pow).collect());
    for _ in 0..rng.gen_range(2..5) {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                if i == j {
                    j = (j + 1) % n;
                }
                m = m.mul(&shear(n, i, j, &random_laurent(rng, 3, 3)));
            }
            1 => {
                m = m.mul(&permutation(rng, n));
            }
            _ => {
                let mu: Vec<i64> = (0..n).map(|_| rng.gen_range(-2i64..=2)).collect();
                m = m.mul(&MatrixF::diagonal(mu.into_iter().map(FieldElem::eps_pow).collect()));
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn generated_matrices_have_claimed_properties() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for n in 2..=4 {
            for _ in 0..25 {
                let k = random_gln_o(&mut rng, n);
                assert!(k.is_gln_o());
                let g = random_invertible(&mut rng, n);
                assert!(!g.det().is_zero());
            }
        }
    }
}
