use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rustc_hash::FxHashMap;

use super::sparse::{invariant_factors, rank_mod_p, SparseMatrix};
use super::AlgebraError;
use crate::complex::{Simplex, SimplicialComplex};

/// Integral homology, one entry per dimension `0..=d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    /// Invariant factors greater than one, ascending.
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyProfile {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// Betti numbers over `F_p` implied by universal coefficients.
    pub fn betti_mod(&self, p: u64) -> Vec<usize> {
        let pb = BigInt::from(p);
        let ptors = |i: usize| self.torsion[i].iter().filter(|d| (*d % &pb) == BigInt::from(0)).count();
        (0..self.betti.len()).map(|i| self.betti[i] + ptors(i) + if i > 0 { ptors(i - 1) } else { 0 }).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (b, t) in self.betti.iter().zip(&self.torsion) {
            let mut terms = Vec::new();
            match b {
                0 => {}
                1 => terms.push("Z".to_string()),
                b => terms.push(format!("Z^{b}")),
            }
            let mut k = 0;
            while k < t.len() {
                let run = t[k..].iter().take_while(|x| **x == t[k]).count();
                terms.push(if run == 1 { format!("Z_{}", t[k]) } else { format!("(Z_{})^{run}", t[k]) });
                k += run;
            }
            parts.push(if terms.is_empty() { "0".to_string() } else { terms.join("+") });
        }
        write!(f, "({})", parts.join(", "))
    }
}

/// Faces of a complex grouped by dimension: `faces[k]` lists the k-faces,
/// sorted. Need not be pure.
#[derive(Clone, Debug, Default)]
pub struct FaceLattice {
    pub faces: Vec<Vec<Simplex>>,
}

impl FaceLattice {
    pub fn of(c: &SimplicialComplex) -> Self {
        Self::from_faces(c.facets().iter().cloned())
    }

    /// Closure of the given simplices under taking faces.
    pub fn from_faces<I: IntoIterator<Item = Simplex>>(gens: I) -> Self {
        let mut all: Vec<Simplex> = gens.into_iter().flat_map(|s| s.faces().collect::<Vec<_>>()).collect();
        all.sort_unstable();
        all.dedup();
        let top = all.iter().map(Simplex::len).max().unwrap_or(0);
        let mut faces = vec![Vec::new(); top];
        for s in all {
            faces[s.len() - 1].push(s);
        }
        FaceLattice { faces }
    }

    pub fn is_empty(&self) -> bool {
        self.faces.iter().all(Vec::is_empty)
    }

    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    /// Boundary map from k-faces to (k-1)-faces, `k >= 1`.
    pub fn boundary_matrix(&self, k: usize) -> SparseMatrix {
        let lower = &self.faces[k - 1];
        let index: FxHashMap<&Simplex, u32> = lower.iter().enumerate().map(|(i, s)| (s, i as u32)).collect();
        let mut m = SparseMatrix::new(lower.len(), self.faces[k].len());
        for (j, s) in self.faces[k].iter().enumerate() {
            let mut col: Vec<(u32, i64)> =
                s.facets().enumerate().map(|(pos, f)| (index[&f], if pos % 2 == 0 { 1 } else { -1 })).collect();
            col.sort_unstable();
            m.columns[j] = col;
        }
        m
    }

    /// Augmentation onto the empty face.
    fn augmentation(&self) -> SparseMatrix {
        let n = self.faces.first().map(Vec::len).unwrap_or(0);
        let mut m = SparseMatrix::new(1, n);
        for col in m.columns.iter_mut() {
            col.push((0, 1));
        }
        m
    }
}

/// Integral homology of a pure complex.
pub fn homology(c: &SimplicialComplex) -> HomologyProfile {
    homology_of(&FaceLattice::of(c))
}

pub fn homology_of(l: &FaceLattice) -> HomologyProfile {
    let n = l.faces.len();
    // factors[k] = invariant factors of the boundary d_k (k-faces -> (k-1)-faces)
    let factors: Vec<Vec<BigInt>> =
        (0..=n).map(|k| if k == 0 || k == n { Vec::new() } else { invariant_factors(&l.boundary_matrix(k)) }).collect();
    let mut betti = Vec::with_capacity(n);
    let mut torsion = Vec::with_capacity(n);
    for k in 0..n {
        let z = l.faces[k].len() - factors[k].len();
        betti.push(z - factors[k + 1].len());
        torsion.push(factors[k + 1].iter().filter(|d| !d.is_one()).cloned().collect());
    }
    HomologyProfile { betti, torsion }
}

fn check_prime(p: u64) -> Result<(), AlgebraError> {
    let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if prime {
        Ok(())
    } else {
        Err(AlgebraError::NotPrime(p))
    }
}

/// Betti numbers over `F_p` of a pure complex.
pub fn betti_numbers(c: &SimplicialComplex, p: u64) -> Result<Vec<usize>, AlgebraError> {
    betti_numbers_of(&FaceLattice::of(c), p)
}

pub fn betti_numbers_of(l: &FaceLattice, p: u64) -> Result<Vec<usize>, AlgebraError> {
    check_prime(p)?;
    let n = l.faces.len();
    let ranks: Vec<usize> = (0..=n).map(|k| if k == 0 || k == n { 0 } else { rank_mod_p(&l.boundary_matrix(k), p) }).collect();
    Ok((0..n).map(|k| l.faces[k].len() - ranks[k] - ranks[k + 1]).collect())
}

/// Reduced Betti numbers over `F_p`; entry `i` is degree `i - 1`, so the
/// vector starts at degree -1. The empty complex gives `[1]`.
pub fn reduced_homology(l: &FaceLattice, p: u64) -> Result<Vec<usize>, AlgebraError> {
    check_prime(p)?;
    if l.is_empty() {
        return Ok(vec![1]);
    }
    let n = l.faces.len();
    let mut ranks = vec![0usize; n + 1];
    ranks[0] = rank_mod_p(&l.augmentation(), p);
    for (k, r) in ranks.iter_mut().enumerate().take(n).skip(1) {
        *r = rank_mod_p(&l.boundary_matrix(k), p);
    }
    let mut out = vec![1 - ranks[0]];
    out.extend((0..n).map(|k| l.faces[k].len() - ranks[k] - ranks[k + 1]));
    Ok(out)
}
