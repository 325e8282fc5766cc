//! PL Morse theory of regular simplexwise linear functions: multiplicity
//! vectors, critical point counts and level slicings.

mod catalog;
mod slicing;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::algebra::{betti_numbers, reduced_homology, AlgebraError, FaceLattice};
use crate::complex::{SimplicialComplex, Vertex};

pub use catalog::{identify_slicing, reference_catalog, CatalogEntry, SliceVerdict};
pub use slicing::{slicing, slicing_below, Cell, Slicing};

#[derive(Debug, Error, PartialEq)]
pub enum MorseError {
    #[error("vertex {0} is not in the complex")]
    NoSuchVertex(Vertex),
    #[error("order is not a permutation of the vertex set: {0}")]
    BadOrder(String),
    #[error("level {0} is a vertex value")]
    VertexLevel(f64),
    #[error("level {0} is outside (0, 1)")]
    LevelRange(f64),
    #[error("slicing is not a closed 3-manifold: {0}")]
    NotManifold(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A regular simplexwise linear function given by a vertex order:
/// `f(v_k) = k / (n - 1)` for `k = 0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RslFunction {
    order: Vec<Vertex>,
    pos: FxHashMap<Vertex, usize>,
}

impl RslFunction {
    /// Checks that `order` lists every vertex of `c` exactly once.
    pub fn new(c: &SimplicialComplex, order: Vec<Vertex>) -> Result<Self, MorseError> {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != c.vertices() {
            return Err(MorseError::BadOrder(format!("{order:?}")));
        }
        let pos = order.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        Ok(RslFunction { order, pos })
    }

    /// Ascending labels.
    pub fn ascending(c: &SimplicialComplex) -> Self {
        RslFunction::new(c, c.vertices()).expect("vertex list is a permutation")
    }

    /// The order `-f`.
    pub fn reversed(&self) -> Self {
        let order: Vec<Vertex> = self.order.iter().rev().copied().collect();
        let pos = order.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        RslFunction { order, pos }
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Position of `v` in the order.
    pub fn rank(&self, v: Vertex) -> Option<usize> {
        self.pos.get(&v).copied()
    }

    pub fn value(&self, v: Vertex) -> Option<f64> {
        let n = self.order.len();
        self.rank(v).map(|k| if n > 1 { k as f64 / (n - 1) as f64 } else { 0.0 })
    }
}

/// Parses an order such as `1..5,7,6,8,9,11,10,12..16`.
pub fn parse_order(s: &str) -> Result<Vec<Vertex>, MorseError> {
    let bad = || MorseError::BadOrder(s.to_string());
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let (a, b): (Vertex, Vertex) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
            if a > b {
                return Err(bad());
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    Ok(out)
}

/// The part of the link of `v` spanned by vertices below `v`.
pub fn lower_link(c: &SimplicialComplex, f: &RslFunction, v: Vertex) -> Result<FaceLattice, MorseError> {
    let r = f.rank(v).ok_or(MorseError::NoSuchVertex(v))?;
    let lk = c.vertex_link(v).map_err(|_| MorseError::NoSuchVertex(v))?;
    let below = |u: &Vertex| f.rank(*u).is_some_and(|k| k < r);
    Ok(FaceLattice::from_faces(lk.facets().iter().map(|s| {
        crate::complex::Simplex::from_sorted(&s.vertices().iter().copied().filter(below).collect::<Vec<_>>())
    })))
}

/// `m_i(v) = dim H~_{i-1}(lower link; F_p)` for `i = 0..=d`. The empty
/// lower link of the minimum gives `m_0 = 1`.
pub fn multiplicity_vector(c: &SimplicialComplex, f: &RslFunction, v: Vertex, p: u64) -> Result<Vec<usize>, MorseError> {
    let l = lower_link(c, f, v)?;
    let h = reduced_homology(&l, p)?;
    let d = c.dim();
    let mut m = vec![0; d + 1];
    for (i, x) in h.into_iter().enumerate().take(d + 1) {
        m[i] = x;
    }
    Ok(m)
}

/// Multiplicity vectors of all vertices in order, with their sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseProfile {
    pub vectors: Vec<(Vertex, Vec<usize>)>,
    /// `mu_i`, the number of critical points of index `i`.
    pub mu: Vec<usize>,
    pub total: usize,
}

impl MorseProfile {
    /// `sum (-1)^i mu_i`.
    pub fn alternating_sum(&self) -> i64 {
        self.mu.iter().enumerate().map(|(i, &m)| if i % 2 == 0 { m as i64 } else { -(m as i64) }).sum()
    }

    /// Table rows: level `k/(n-1)`, vertex, vector.
    pub fn table(&self) -> String {
        let n = self.vectors.len();
        let mut out = String::new();
        for (k, (v, m)) in self.vectors.iter().enumerate() {
            let level = if k == 0 {
                "0".to_string()
            } else if k + 1 == n {
                "1".to_string()
            } else {
                format!("{k}/{}", n - 1)
            };
            let m: Vec<String> = m.iter().map(|x| x.to_string()).collect();
            out += &format!("{level:>6} {v:>4} ({})\n", m.join(","));
        }
        let mu: Vec<String> = self.mu.iter().map(|x| x.to_string()).collect();
        out += &format!("mu=({}) total={}\n", mu.join(","), self.total);
        out
    }
}

pub fn critical_point_counts(c: &SimplicialComplex, f: &RslFunction, p: u64) -> Result<MorseProfile, MorseError> {
    let vectors: Vec<(Vertex, Vec<usize>)> = f
        .order()
        .par_iter()
        .map(|&v| multiplicity_vector(c, f, v, p).map(|m| (v, m)))
        .collect::<Result<_, _>>()?;
    let mut mu = vec![0; c.dim() + 1];
    for (_, m) in &vectors {
        for (i, x) in m.iter().enumerate() {
            mu[i] += x;
        }
    }
    let total = mu.iter().sum();
    Ok(MorseProfile { vectors, mu, total })
}

/// Whether `mu_i = b_i(F_p)` for every `i`.
pub fn is_perfect(c: &SimplicialComplex, f: &RslFunction, p: u64) -> Result<bool, MorseError> {
    Ok(critical_point_counts(c, f, p)?.mu == betti_numbers(c, p)?)
}
