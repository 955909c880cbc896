//! Rational canonical data for matrices over Q: invariant factors (Frobenius
//! normal form data) and minimal polynomials.
//!
//! Two matrices over a field are conjugate iff their invariant factor lists
//! agree, so these lists serve as canonical names for conjugacy classes of
//! residue matrices.

use num_traits::Zero;

use crate::exactfield::Rational;
use crate::polylinalg::matrix::MatrixQ;
use crate::polylinalg::poly::{Poly, PolyQ, Scalar};

/// Invariant factors d_1 | d_2 | ... of x*I - m, the nonconstant diagonal of
/// its Smith normal form over Q[x], each monic and listed in divisibility
/// order. Their product is the characteristic polynomial.
pub fn frobenius_form(m: &MatrixQ) -> Vec<PolyQ> {
    let n = m.n();
    let mut xi_minus_m: Vec<Vec<PolyQ>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut p = Poly::constant(-m[(i, j)].clone());
            if i == j {
                p = p.add(&Poly::x());
            }
            row.push(p);
        }
        xi_minus_m.push(row);
    }
    let diag = smith_diagonal(xi_minus_m);
    diag.into_iter()
        .filter(|d| d.degree().map_or(false, |deg| deg >= 1))
        .map(|d| d.monic())
        .collect()
}

/// Monic minimal polynomial: the largest invariant factor of x*I - m.
pub fn minpoly(m: &MatrixQ) -> PolyQ {
    if m.n() == 0 {
        return PolyQ::one();
    }
    frobenius_form(m).pop().expect("nonzero size has an invariant factor")
}

/// True iff m is a cyclic (regular) matrix: minimal polynomial of full degree,
/// equivalently a single invariant factor.
pub fn is_regular_matrix(m: &MatrixQ) -> bool {
    frobenius_form(m).len() <= 1
}

/// Minimal polynomial by iterated Krylov spans. Independent of the Smith
/// normal form route; used to cross-check it.
pub fn minpoly_krylov(m: &MatrixQ) -> PolyQ {
    let n = m.n();
    let mut acc = PolyQ::one();
    for basis in 0..n {
        let mut v = vec![Rational::zero(); n];
        v[basis] = Rational::from_integer(1.into());
        let local = krylov_local_minpoly(m, v);
        acc = PolyQ::lcm(&acc, &local);
        if acc.degree() == Some(n) {
            break;
        }
    }
    acc
}

/// Minimal monic p with p(m) v = 0, found by reducing successive Krylov
/// vectors against an echelon basis while tracking the combination that
/// produced each reduced vector.
fn krylov_local_minpoly(m: &MatrixQ, v: Vec<Rational>) -> PolyQ {
    let n = m.n();
    // (reduced vector, lead position, combination over Krylov powers)
    let mut echelon: Vec<(Vec<Rational>, usize, Vec<Rational>)> = Vec::new();
    let mut power = v;
    let mut k = 0usize;
    loop {
        let mut combo = vec![Rational::zero(); k + 1];
        combo[k] = Rational::from_integer(1.into());
        let mut vec = power.clone();
        for (row, lead, row_combo) in &echelon {
            if vec[*lead].is_zero() {
                continue;
            }
            let factor = vec[*lead].clone() / row[*lead].clone();
            for i in 0..n {
                let delta = &factor * &row[i];
                vec[i] -= delta;
            }
            for (i, c) in row_combo.iter().enumerate() {
                let delta = &factor * c;
                combo[i] -= delta;
            }
        }
        match vec.iter().position(|c| !c.is_zero()) {
            None => return PolyQ::from_coeffs(combo).monic(),
            Some(lead) => {
                echelon.push((vec, lead, combo));
            }
        }
        // next Krylov vector
        let mut next = vec![Rational::zero(); n];
        for i in 0..n {
            for j in 0..n {
                let delta = &m[(i, j)] * &power[j];
                next[i] += delta;
            }
        }
        power = next;
        k += 1;
        assert!(k <= n, "Krylov chain exceeded dimension");
    }
}

/// Diagonal of the Smith normal form of a square polynomial matrix over a
/// field, in divisibility order (not normalized to monic).
fn smith_diagonal<K: Scalar>(mut m: Vec<Vec<Poly<K>>>) -> Vec<Poly<K>> {
    let n = m.len();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        'pivot: loop {
            // Find the minimal-degree nonzero entry in the trailing block.
            let mut best: Option<(usize, usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if let Some(d) = m[i][j].degree() {
                        if best.map_or(true, |(bd, _, _)| d < bd) {
                            best = Some((d, i, j));
                        }
                    }
                }
            }
            let (_, pi, pj) = match best {
                Some(b) => b,
                None => {
                    // Trailing block is zero; remaining diagonal entries are 0.
                    for _ in k..n {
                        diag.push(Poly::zero());
                    }
                    return diag;
                }
            };
            m.swap(k, pi);
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            let pivot = m[k][k].clone();
            // Clear column k below the pivot.
            let mut progressed = false;
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let (q, r) = m[i][k].divrem(&pivot);
                for j in k..n {
                    let delta = q.mul(&m[k][j]);
                    m[i][j] = m[i][j].sub(&delta);
                }
                if !r.is_zero() {
                    progressed = true;
                }
            }
            if progressed {
                continue 'pivot;
            }
            // Clear row k to the right of the pivot.
            for j in k + 1..n {
                if m[k][j].is_zero() {
                    continue;
                }
                let (q, r) = m[k][j].divrem(&pivot);
                for i in k..n {
                    let delta = q.mul(&m[i][k]);
                    m[i][j] = m[i][j].sub(&delta);
                }
                if !r.is_zero() {
                    progressed = true;
                }
            }
            if progressed {
                continue 'pivot;
            }
            // Pivot must divide the rest of the block; otherwise fold the
            // offending row into row k and repeat.
            for i in k + 1..n {
                for j in k + 1..n {
                    let (_, r) = m[i][j].divrem(&pivot);
                    if !r.is_zero() {
                        for j2 in k..n {
                            m[k][j2] = m[k][j2].add(&m[i][j2].clone());
                        }
                        continue 'pivot;
                    }
                }
            }
            diag.push(pivot);
            break 'pivot;
        }
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;
    use crate::polylinalg::matrix::Matrix;

    fn mq(rows: Vec<Vec<i64>>) -> MatrixQ {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|c| rat(c, 1)).collect())
                .collect(),
        )
    }

    fn pq(cs: &[i64]) -> PolyQ {
        PolyQ::from_coeffs(cs.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn minpoly_examples() {
        // diag(1, 2) -> (x-1)(x-2)
        assert_eq!(minpoly(&mq(vec![vec![1, 0], vec![0, 2]])), pq(&[2, -3, 1]));
        // [[0,1],[0,0]] -> x^2
        assert_eq!(minpoly(&mq(vec![vec![0, 1], vec![0, 0]])), pq(&[0, 0, 1]));
        // zero 2x2 -> x
        assert_eq!(minpoly(&mq(vec![vec![0, 0], vec![0, 0]])), pq(&[0, 1]));
    }

    #[test]
    fn frobenius_examples() {
        // diag(1, 2) is cyclic: one invariant factor (x-1)(x-2)
        assert_eq!(frobenius_form(&mq(vec![vec![1, 0], vec![0, 2]])), vec![pq(&[2, -3, 1])]);
        // zero 2x2 -> [x, x]
        assert_eq!(
            frobenius_form(&mq(vec![vec![0, 0], vec![0, 0]])),
            vec![pq(&[0, 1]), pq(&[0, 1])]
        );
        // rank-1 nilpotent [[0,0],[-2,0]] is cyclic with factor x^2
        assert_eq!(frobenius_form(&mq(vec![vec![0, 0], vec![-2, 0]])), vec![pq(&[0, 0, 1])]);
    }

    #[test]
    fn regularity_matches_minpoly_degree() {
        assert!(is_regular_matrix(&mq(vec![vec![0, 0], vec![-2, 0]])));
        assert!(!is_regular_matrix(&mq(vec![vec![0, 0], vec![0, 0]])));
        assert!(is_regular_matrix(&mq(vec![vec![1, 0], vec![0, 2]])));
        // diag(1, 1) is not regular
        assert!(!is_regular_matrix(&mq(vec![vec![1, 0], vec![0, 1]])));
    }

    #[test]
    fn krylov_agrees_with_smith_route() {
        let samples = vec![
            mq(vec![vec![1, 0], vec![0, 2]]),
            mq(vec![vec![0, 1], vec![0, 0]]),
            mq(vec![vec![2, 1, 0], vec![0, 2, 0], vec![0, 0, 3]]),
            mq(vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 3]]),
            mq(vec![vec![0, -1, 3], vec![1, 2, -2], vec![4, 0, 1]]),
        ];
        for m in samples {
            assert_eq!(minpoly(&m), minpoly_krylov(&m));
        }
    }

    #[test]
    fn invariant_factors_multiply_to_charpoly() {
        let m = mq(vec![vec![2, 1, 0], vec![0, 2, 0], vec![0, 0, 2]]);
        let prod = frobenius_form(&m)
            .into_iter()
            .fold(PolyQ::one(), |acc, d| acc.mul(&d));
        assert_eq!(prod, m.charpoly());
        // divisibility chain
        let inv = frobenius_form(&m);
        for w in inv.windows(2) {
            let (_, r) = w[1].divrem(&w[0]);
            assert!(r.is_zero());
        }
    }
}
