use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::matrix::IntegerMatrix;
use super::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A symmetric integral bilinear form with its invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricForm {
    pub matrix: IntegerMatrix,
    pub rank: usize,
    pub signature: i64,
    pub parity: Parity,
}

/// Rank, signature and parity by exact congruence diagonalization over Q.
pub fn form_invariants(a: &IntegerMatrix) -> Result<SymmetricForm, AlgebraError> {
    if !a.is_symmetric() {
        return Err(AlgebraError::NotSymmetric);
    }
    let n = a.rows();
    let mut m: Vec<Vec<BigRational>> =
        (0..n).map(|i| (0..n).map(|j| BigRational::from_integer(a.get(i, j).clone())).collect()).collect();
    let (mut pos, mut neg) = (0usize, 0usize);
    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // hyperbolic pair: e_k + e_j has square 2 m[k][j] != 0
                for c in 0..n {
                    let x = m[j][c].clone();
                    m[k][c] += x;
                }
                for row in m.iter_mut() {
                    let x = row[j].clone();
                    row[k] += x;
                }
            } else {
                continue;
            }
        }
        let p = m[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &p;
            for c in k..n {
                let x = &f * &m[k][c];
                m[i][c] -= x;
            }
            for row in m.iter_mut().skip(k) {
                let x = &f * &row[k];
                row[i] -= x;
            }
        }
    }
    let parity = if (0..n).all(|i| a.get(i, i).is_even()) { Parity::Even } else { Parity::Odd };
    Ok(SymmetricForm { matrix: a.clone(), rank: pos + neg, signature: pos as i64 - neg as i64, parity })
}

/// The positive definite even unimodular form of rank 8.
pub fn e8() -> IntegerMatrix {
    IntegerMatrix::from_rows(&[
        [2, -1, 0, 0, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0, 0, 0],
        [0, -1, 2, -1, 0, 0, 0, 0],
        [0, 0, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, -1],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, 0],
        [0, 0, 0, 0, -1, 0, 0, 2],
    ])
}

/// The hyperbolic plane.
pub fn hyperbolic() -> IntegerMatrix {
    IntegerMatrix::from_rows(&[[0, 1], [1, 0]])
}

pub fn is_unimodular(a: &IntegerMatrix) -> bool {
    a.is_square() && super::matrix::determinant(a).abs() == BigInt::from(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn e8_is_positive_even_unimodular() {
        let f = form_invariants(&e8()).unwrap();
        assert_eq!((f.rank, f.signature, f.parity), (8, 8, Parity::Even));
        assert!(is_unimodular(&e8()));
    }

    #[test]
    fn hyperbolic_plane() {
        let f = form_invariants(&hyperbolic()).unwrap();
        assert_eq!((f.rank, f.signature, f.parity), (2, 0, Parity::Even));
    }

    #[test]
    fn k3_lattice() {
        let h = hyperbolic();
        let m = e8().negated().direct_sum(&e8().negated()).direct_sum(&h).direct_sum(&h).direct_sum(&h);
        let f = form_invariants(&m).unwrap();
        assert_eq!((f.rank, f.signature, f.parity), (22, -16, Parity::Even));
        let g = form_invariants(&e8().direct_sum(&e8()).direct_sum(&h).direct_sum(&h).direct_sum(&h)).unwrap();
        assert_eq!((g.rank, g.signature), (22, 16));
    }

    #[test]
    fn odd_and_degenerate() {
        let f = form_invariants(&IntegerMatrix::from_rows(&[[1, 0, 0], [0, -1, 0], [0, 0, 0]])).unwrap();
        assert_eq!((f.rank, f.signature, f.parity), (2, 0, Parity::Odd));
        assert!(form_invariants(&IntegerMatrix::from_rows(&[[0, 1], [2, 0]])).is_err());
    }

    fn unimodular(n: usize) -> impl Strategy<Value = IntegerMatrix> {
        // product of elementary matrices
        proptest::collection::vec((0..n, 0..n, -2i64..=2), 0..12).prop_map(move |ops| {
            let mut p = IntegerMatrix::identity(n);
            for (i, j, c) in ops {
                if i != j {
                    let mut e = IntegerMatrix::identity(n);
                    e.set(i, j, BigInt::from(c));
                    p = e.mul(&p);
                }
            }
            p
        })
    }

    proptest! {
        #[test]
        fn congruence_invariance(p in unimodular(8)) {
            let a = e8().direct_sum(&IntegerMatrix::zeros(0, 0));
            let b = p.mul(&a).mul(&p.transpose());
            let fa = form_invariants(&a).unwrap();
            let fb = form_invariants(&b).unwrap();
            prop_assert_eq!((fa.rank, fa.signature, fa.parity), (fb.rank, fb.signature, fb.parity));
        }

        #[test]
        fn congruence_invariance_indefinite(p in unimodular(4)) {
            let a = hyperbolic().direct_sum(&IntegerMatrix::from_rows(&[[1, 0], [0, -3]]));
            let b = p.mul(&a).mul(&p.transpose());
            let fa = form_invariants(&a).unwrap();
            let fb = form_invariants(&b).unwrap();
            prop_assert_eq!((fa.rank, fa.signature, fa.parity), (fb.rank, fb.signature, fb.parity));
        }
    }
}
