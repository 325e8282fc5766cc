//! Orientation, fundamental class and the cup-product intersection form of a
//! closed 4-dimensional pseudomanifold.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::algebra::{form_invariants, integer_kernel, smith_normal_form, AlgebraError, FaceLattice, IntegerMatrix, SymmetricForm};
use crate::complex::{Simplex, SimplicialComplex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormError {
    #[error("expected a 4-dimensional complex, got dimension {0}")]
    Dimension(usize),
    #[error("complex is not a closed pseudomanifold")]
    NotClosed,
    #[error("ridge {0} lies in more than two facets")]
    Branching(Simplex),
    #[error("complex is not strongly connected")]
    Disconnected,
    #[error("complex is not orientable (contradiction at ridge {0})")]
    NotOrientable(Simplex),
    #[error("cup-product matrix is not symmetric on cohomology")]
    Asymmetric,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Integer cochain: value per simplex in sorted vertex order, zero if absent.
pub type Cochain = BTreeMap<Simplex, BigInt>;

/// Sign per facet relative to the sorted vertex order, aligned with
/// `SimplicialComplex::facets`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub signs: Vec<i8>,
}

impl Orientation {
    pub fn reversed(&self) -> Orientation {
        Orientation { signs: self.signs.iter().map(|s| -s).collect() }
    }

    /// Whether induced orientations cancel on every interior ridge.
    pub fn is_coherent(&self, c: &SimplicialComplex) -> bool {
        let mut sum: FxHashMap<Simplex, i32> = FxHashMap::default();
        for (f, &s) in c.facets().iter().zip(&self.signs) {
            for (pos, r) in f.facets().enumerate() {
                *sum.entry(r).or_default() += s as i32 * if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        let degrees = c.ridge_degrees();
        sum.iter().all(|(r, &x)| x == 0 || degrees[r] == 1)
    }
}

/// Coherent orientation by breadth-first propagation across ridges. The
/// first facet is positive. Boundary ridges are allowed.
pub fn orient(c: &SimplicialComplex) -> Result<Orientation, FormError> {
    let mut ridges: FxHashMap<Simplex, Vec<(usize, i8)>> = FxHashMap::default();
    for (k, f) in c.facets().iter().enumerate() {
        for (pos, r) in f.facets().enumerate() {
            ridges.entry(r).or_default().push((k, if pos % 2 == 0 { 1 } else { -1 }));
        }
    }
    if let Some((r, _)) = ridges.iter().find(|(_, v)| v.len() > 2) {
        return Err(FormError::Branching(r.clone()));
    }
    let mut signs = vec![0i8; c.num_facets()];
    signs[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for (pos, r) in c.facets()[k].facets().enumerate() {
            let here = signs[k] * if pos % 2 == 0 { 1 } else { -1 };
            for &(j, s) in &ridges[&r] {
                if j == k {
                    continue;
                }
                // induced signs must cancel
                let want = -here * s;
                if signs[j] == 0 {
                    signs[j] = want;
                    queue.push_back(j);
                } else if signs[j] != want {
                    return Err(FormError::NotOrientable(r));
                }
            }
        }
    }
    if signs.contains(&0) {
        return Err(FormError::Disconnected);
    }
    Ok(Orientation { signs })
}

/// `<a u b, [M]>` with `(a u b)(v0..v4) = a(v0 v1 v2) b(v2 v3 v4)`.
pub fn cup_pairing(c: &SimplicialComplex, o: &Orientation, a: &Cochain, b: &Cochain) -> BigInt {
    let mut total = BigInt::zero();
    for (f, &s) in c.facets().iter().zip(&o.signs) {
        let v = f.vertices();
        let front = Simplex::from_sorted(&v[..3]);
        let back = Simplex::from_sorted(&v[2..]);
        if let (Some(x), Some(y)) = (a.get(&front), b.get(&back)) {
            total += x * y * BigInt::from(s);
        }
    }
    total
}

/// `(d a)(s) = sum_k (-1)^k a(s minus its k-th vertex)` over the faces `s`
/// of `c` one dimension up.
pub fn coboundary(c: &SimplicialComplex, a: &Cochain) -> Cochain {
    let Some(k) = a.keys().next().map(|s| s.len() + 1) else { return Cochain::new() };
    let mut out = Cochain::new();
    for s in c.faces_of_size(k) {
        let mut x = BigInt::zero();
        for (pos, r) in s.facets().enumerate() {
            if let Some(y) = a.get(&r) {
                if pos % 2 == 0 {
                    x += y;
                } else {
                    x -= y;
                }
            }
        }
        if !x.is_zero() {
            out.insert(s, x);
        }
    }
    out
}

/// A basis of the integral 2-cocycles.
pub fn cocycle_basis(c: &SimplicialComplex) -> Vec<Cochain> {
    let lattice = FaceLattice::of(c);
    let delta = lattice.boundary_matrix(3).transpose();
    integer_kernel(&delta)
        .into_iter()
        .map(|v| v.into_iter().map(|(i, x)| (lattice.faces[2][i as usize].clone(), x)).collect())
        .collect()
}

/// Intersection form on `H^2(c)` modulo torsion.
///
/// The cup-product matrix is taken on a basis of cocycles and then restricted
/// to a complement of its radical, which contains the coboundaries and the
/// torsion classes.
pub fn intersection_form(c: &SimplicialComplex, o: &Orientation) -> Result<SymmetricForm, FormError> {
    if c.dim() != 4 {
        return Err(FormError::Dimension(c.dim()));
    }
    if !c.is_closed_pseudomanifold() {
        return Err(FormError::NotClosed);
    }
    let basis = cocycle_basis(c);
    let n = basis.len();
    let mut g = IntegerMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g.set(i, j, cup_pairing(c, o, &basis[i], &basis[j]));
        }
    }
    if !g.is_symmetric() {
        return Err(FormError::Asymmetric);
    }
    let snf = smith_normal_form(&g);
    let r = snf.invariant_factors().len();
    // the first r columns of V span a complement of the radical
    let mut v1 = IntegerMatrix::zeros(n, r);
    for i in 0..n {
        for j in 0..r {
            v1.set(i, j, snf.v.get(i, j).clone());
        }
    }
    let q = v1.transpose().mul(&g).mul(&v1);
    Ok(form_invariants(&q)?)
}

/// `|sig(Q_next)| = |sig(Q_prev) + 1|`.
pub fn signature_step_check(prev: i64, next: i64) -> bool {
    next.abs() == (prev + 1).abs()
}

/// Rows of the matrix, then a summary line.
pub fn write_form(form: &SymmetricForm) -> String {
    let mut out = String::new();
    for i in 0..form.matrix.rows() {
        let row: Vec<String> = form.matrix.row(i).iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    writeln!(out, "rank={} signature={} parity={}", form.rank, form.signature, form.parity).unwrap();
    out
}

/// Summary with the signature's absolute value, for orientation-free
/// comparisons.
pub fn form_summary(form: &SymmetricForm) -> String {
    format!("rank={} |signature|={} parity={}", form.rank, form.signature.abs(), form.parity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::simplex_boundary;
    use crate::construction::{kummer_k4_16, reference_k3_17};
    use crate::algebra::{determinant, Parity};
    use num_traits::Signed;

    #[test]
    fn sphere_orientations() {
        let s = simplex_boundary(6);
        let o = orient(&s).unwrap();
        assert!(o.is_coherent(&s));
        assert!(o.reversed().is_coherent(&s));
        let q = intersection_form(&s, &o).unwrap();
        assert_eq!(q.rank, 0);
    }

    #[test]
    fn step_rule() {
        assert!(signature_step_check(0, 1));
        assert!(signature_step_check(0, -1));
        assert!(signature_step_check(3, 4));
        assert!(!signature_step_check(3, 2));
    }

    #[test]
    fn kummer_form() {
        let k = kummer_k4_16();
        let o = orient(&k).unwrap();
        assert!(o.is_coherent(&k));
        let q = intersection_form(&k, &o).unwrap();
        assert_eq!((q.rank, q.signature, q.parity), (6, 0, Parity::Even));
    }

    #[test]
    fn k3_form() {
        let k = reference_k3_17().unwrap();
        let o = orient(&k).unwrap();
        let q = intersection_form(&k, &o).unwrap();
        assert_eq!((q.rank, q.signature.abs(), q.parity), (22, 16, Parity::Even));
        assert_eq!(determinant(&q.matrix).abs(), BigInt::from(1));
        let r = intersection_form(&k, &o.reversed()).unwrap();
        assert_eq!(r.signature, -q.signature);
        assert!(write_form(&q).ends_with(&format!("rank=22 signature={} parity=even\n", q.signature)));
    }

    #[test]
    fn coboundaries_pair_to_zero() {
        let k = reference_k3_17().unwrap();
        let o = orient(&k).unwrap();
        let basis = cocycle_basis(&k);
        let mut a = Cochain::new();
        for (n, e) in k.faces_of_size(2).into_iter().enumerate().take(40) {
            a.insert(e, BigInt::from(n as i64 % 7 - 3));
        }
        let da = coboundary(&k, &a);
        assert!(coboundary(&k, &da).is_empty());
        for b in basis.iter().take(10) {
            assert!(cup_pairing(&k, &o, &da, b).is_zero());
            assert!(cup_pairing(&k, &o, b, &da).is_zero());
        }
    }
}
