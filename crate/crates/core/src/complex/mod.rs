//! Facet-based simplicial complexes.
//!
//! A [`SimplicialComplex`] is pure: it is stored as its sorted, duplicate-free
//! list of facets, all of the same dimension. Two complexes are equal exactly
//! when their facet sets are equal. Labels are positive integers; structured
//! names (such as `a11` or `b3`) live in an optional [`NamingTable`].

mod io;
mod iso;
mod simplex;

use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::{FxHashMap, FxHashSet};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use io::{parse_complex, write_complex, ParseError};
pub use iso::{automorphism_group_order, find_isomorphism, for_each_isomorphism, is_isomorphism, Isomorphism};
pub use simplex::{simplex, Simplex, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("empty complex")]
    Empty,
    #[error("complex is not pure: expected facets with {expected} vertices, found {found:?}")]
    NotPure { expected: usize, found: Simplex },
    #[error("repeated vertex in simplex {0:?}")]
    RepeatedVertex(Vec<Vertex>),
    #[error("vertex label 0 is reserved")]
    ZeroLabel,
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Simplex),
    #[error("vertex {0} is not in the complex")]
    MissingVertex(Vertex),
    #[error("the link of a facet is the empty complex")]
    LinkOfFacet,
}

/// Maps vertex labels to structured names such as `a23` or `b4`.
pub type NamingTable = BTreeMap<Vertex, String>;

/// Face counts `f_0, ..., f_d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    dim: usize,
    facets: Vec<Simplex>,
    names: NamingTable,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(dim={}, facets={:?})", self.dim, self.facets)
    }
}

impl SimplicialComplex {
    /// Builds a pure complex from its facets. Duplicate facets are merged.
    pub fn new<I: IntoIterator<Item = Simplex>>(facets: I) -> Result<Self, ComplexError> {
        let mut facets: Vec<Simplex> = facets.into_iter().collect();
        let size = facets.first().ok_or(ComplexError::Empty)?.len();
        if size == 0 {
            return Err(ComplexError::Empty);
        }
        if let Some(bad) = facets.iter().find(|s| s.len() != size) {
            return Err(ComplexError::NotPure { expected: size, found: bad.clone() });
        }
        facets.sort_unstable();
        facets.dedup();
        Ok(SimplicialComplex { dim: size - 1, facets, names: NamingTable::new() })
    }

    /// Builds a complex from integer facet lists.
    pub fn from_lists<I, F>(lists: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[Vertex]>,
    {
        let facets = lists
            .into_iter()
            .map(|l| Simplex::new(l.as_ref().iter().copied()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(facets)
    }

    pub fn with_names(mut self, names: NamingTable) -> Self {
        self.names = names;
        self
    }

    pub fn names(&self) -> &NamingTable {
        &self.names
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn contains_facet(&self, s: &Simplex) -> bool {
        self.facets.binary_search(s).is_ok()
    }

    /// Sorted vertex labels.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self.facets.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices().len()
    }

    pub fn max_label(&self) -> Vertex {
        self.facets.iter().filter_map(|f| f.vertices().last().copied()).max().unwrap_or(0)
    }

    /// All faces with `k` vertices, sorted.
    pub fn faces_of_size(&self, k: usize) -> Vec<Simplex> {
        if k == 0 || k > self.dim + 1 {
            return Vec::new();
        }
        if k == self.dim + 1 {
            return self.facets.clone();
        }
        let mut set = FxHashSet::default();
        for f in &self.facets {
            for s in f.faces_of_size(k) {
                set.insert(s);
            }
        }
        let mut out: Vec<Simplex> = set.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// All faces of dimension `k`.
    pub fn faces(&self, k: usize) -> Vec<Simplex> {
        self.faces_of_size(k + 1)
    }

    /// Every nonempty face, grouped by dimension.
    pub fn all_faces(&self) -> Vec<Vec<Simplex>> {
        (0..=self.dim).map(|k| self.faces(k)).collect()
    }

    /// Face set for membership queries.
    pub fn face_set(&self) -> FxHashSet<Simplex> {
        let mut set = FxHashSet::default();
        for f in &self.facets {
            for s in f.faces() {
                set.insert(s);
            }
        }
        set
    }

    pub fn f_vector(&self) -> FVector {
        let mut sets: Vec<FxHashSet<Simplex>> = vec![FxHashSet::default(); self.dim + 1];
        for f in &self.facets {
            for s in f.faces() {
                sets[s.len() - 1].insert(s);
            }
        }
        FVector(sets.iter().map(|s| s.len()).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    pub fn has_face(&self, s: &Simplex) -> bool {
        if s.is_empty() {
            return true;
        }
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    /// Facets containing `s`.
    pub fn cofacets(&self, s: &Simplex) -> Vec<&Simplex> {
        self.facets.iter().filter(|f| s.is_face_of(f)).collect()
    }

    /// The link `{ t : t ∩ s = ∅, t ∪ s ∈ C }`, of dimension `d - dim(s) - 1`.
    pub fn link(&self, s: &Simplex) -> Result<SimplicialComplex, ComplexError> {
        let cof = self.cofacets(s);
        if cof.is_empty() {
            return Err(ComplexError::NotAFace(s.clone()));
        }
        if s.len() == self.dim + 1 {
            return Err(ComplexError::LinkOfFacet);
        }
        SimplicialComplex::new(cof.into_iter().map(|f| f.difference(s)))
    }

    pub fn vertex_link(&self, v: Vertex) -> Result<SimplicialComplex, ComplexError> {
        self.link(&Simplex::from_sorted(&[v])).map_err(|e| match e {
            ComplexError::NotAFace(_) => ComplexError::MissingVertex(v),
            e => e,
        })
    }

    /// Closed star of a vertex: all facets containing it.
    pub fn star(&self, v: Vertex) -> Result<SimplicialComplex, ComplexError> {
        let s = Simplex::from_sorted(&[v]);
        let cof: Vec<Simplex> = self.cofacets(&s).into_iter().cloned().collect();
        if cof.is_empty() {
            return Err(ComplexError::MissingVertex(v));
        }
        SimplicialComplex::new(cof)
    }

    /// The complex minus the open star of `v` (facets not containing `v`).
    pub fn delete_vertex_star(&self, v: Vertex) -> Result<SimplicialComplex, ComplexError> {
        if !self.facets.iter().any(|f| f.contains(v)) {
            return Err(ComplexError::MissingVertex(v));
        }
        SimplicialComplex::new(self.facets.iter().filter(|f| !f.contains(v)).cloned())
    }

    /// Ridge (codimension-one face) incidence counts.
    pub fn ridge_degrees(&self) -> FxHashMap<Simplex, usize> {
        let mut deg = FxHashMap::default();
        for f in &self.facets {
            for r in f.facets() {
                *deg.entry(r).or_insert(0) += 1;
            }
        }
        deg
    }

    /// Closure of the ridges contained in exactly one facet; `None` when
    /// there are none.
    pub fn boundary(&self) -> Option<SimplicialComplex> {
        if self.dim == 0 {
            return None;
        }
        let ridges: Vec<Simplex> =
            self.ridge_degrees().into_iter().filter(|(_, d)| *d == 1).map(|(r, _)| r).collect();
        if ridges.is_empty() {
            None
        } else {
            SimplicialComplex::new(ridges).ok()
        }
    }

    /// Facet adjacency through shared ridges is connected.
    pub fn is_strongly_connected(&self) -> bool {
        let mut by_ridge: FxHashMap<Simplex, Vec<usize>> = FxHashMap::default();
        for (k, f) in self.facets.iter().enumerate() {
            for r in f.facets() {
                by_ridge.entry(r).or_default().push(k);
            }
        }
        let mut seen = vec![false; self.facets.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(k) = stack.pop() {
            for r in self.facets[k].facets() {
                for &j in &by_ridge[&r] {
                    if !seen[j] {
                        seen[j] = true;
                        count += 1;
                        stack.push(j);
                    }
                }
            }
        }
        count == self.facets.len()
    }

    /// Every ridge lies in exactly two facets and the facets are strongly
    /// connected.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        if self.dim == 0 {
            return self.facets.len() == 2;
        }
        self.ridge_degrees().values().all(|&d| d == 2) && self.is_strongly_connected()
    }

    /// Every ridge lies in one or two facets and the facets are strongly
    /// connected.
    pub fn is_pseudomanifold_with_boundary(&self) -> bool {
        self.ridge_degrees().values().all(|&d| d == 1 || d == 2) && self.is_strongly_connected()
    }

    /// Largest `k` such that every `k`-subset of vertices spans a face.
    pub fn neighborliness(&self) -> usize {
        let n = self.num_vertices();
        let f = self.f_vector();
        let mut k = 0;
        while k < f.0.len() && f.0[k] as u128 == binomial(n as u64, (k + 1) as u64) {
            k += 1;
        }
        k
    }

    /// Relabels vertices; fails if the map is not injective on some facet.
    pub fn relabel<F: Fn(Vertex) -> Vertex>(&self, f: F) -> Result<SimplicialComplex, ComplexError> {
        let facets = self
            .facets
            .iter()
            .map(|s| s.map(&f).ok_or_else(|| ComplexError::RepeatedVertex(s.vertices().to_vec())))
            .collect::<Result<Vec<_>, _>>()?;
        let names = self.names.iter().map(|(&v, n)| (f(v), n.clone())).collect();
        Ok(SimplicialComplex::new(facets)?.with_names(names))
    }

    /// Relabels vertices to `1..=n` in increasing label order.
    pub fn normalized(&self) -> (SimplicialComplex, FxHashMap<Vertex, Vertex>) {
        let map: FxHashMap<Vertex, Vertex> =
            self.vertices().into_iter().enumerate().map(|(k, v)| (v, k as Vertex + 1)).collect();
        let c = self.relabel(|v| map[&v]).expect("bijective relabel");
        (c, map)
    }

    /// Canonical text used for hashing: one facet per line.
    pub fn canonical_string(&self) -> String {
        let mut s = String::with_capacity(self.facets.len() * 16);
        for f in &self.facets {
            let line: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// SHA-256 over the canonical facet serialization, hex encoded.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("dim={}\n", self.dim).as_bytes());
        h.update(self.canonical_string().as_bytes());
        hex::encode(h.finalize())
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Result of the generalized Heawood bound `C(n-4, 3) >= 10 (chi - 2)` for
/// combinatorial 4-manifolds on `n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeawoodCheck {
    pub lhs: i128,
    pub rhs: i128,
    pub holds: bool,
    pub equality: bool,
}

pub fn heawood_check(n: u64, chi: i64) -> HeawoodCheck {
    let lhs = if n >= 4 { binomial(n - 4, 3) as i128 } else { 0 };
    let rhs = 10 * (chi as i128 - 2);
    HeawoodCheck { lhs, rhs, holds: lhs >= rhs, equality: lhs == rhs }
}

/// Boundary complex of the simplex on `1..=n` (an `(n-2)`-sphere).
pub fn simplex_boundary(n: Vertex) -> SimplicialComplex {
    let full = Simplex::new(1..=n).expect("distinct");
    SimplicialComplex::new(full.facets()).expect("nonempty")
}

/// A single simplex on `1..=n` as a complex.
pub fn full_simplex(n: Vertex) -> SimplicialComplex {
    SimplicialComplex::new([Simplex::new(1..=n).expect("distinct")]).expect("nonempty")
}

/// Barycentric subdivision. Vertices are the faces of `c`, numbered in
/// (size, lexicographic) order; facets are maximal chains.
pub fn barycentric_subdivision(c: &SimplicialComplex) -> SimplicialComplex {
    let mut faces: Vec<Simplex> = c.all_faces().into_iter().flatten().collect();
    faces.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let index: FxHashMap<&Simplex, Vertex> = faces.iter().enumerate().map(|(k, f)| (f, k as Vertex + 1)).collect();
    let mut out = Vec::new();
    for f in c.facets() {
        // chains from vertex to facet are the orderings of its vertices
        let mut chains: Vec<Vec<Simplex>> = vec![vec![f.clone()]];
        for _ in 1..f.len() {
            chains = chains
                .into_iter()
                .flat_map(|ch| {
                    let last = ch.last().expect("nonempty chain").clone();
                    last.facets()
                        .map(|g| {
                            let mut next = ch.clone();
                            next.push(g);
                            next
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        out.extend(chains.into_iter().map(|ch| Simplex::new(ch.iter().map(|g| index[g])).expect("distinct faces")));
    }
    SimplicialComplex::new(out).expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivided_sphere_counts() {
        let sd = barycentric_subdivision(&simplex_boundary(5));
        assert_eq!(sd.f_vector().0, vec![30, 150, 240, 120]);
        assert!(sd.is_closed_pseudomanifold());
        assert_eq!(barycentric_subdivision(&simplex_boundary(4)).f_vector().0, vec![14, 36, 24]);
    }

    #[test]
    fn boundary_of_four_simplex() {
        let s = simplex_boundary(5);
        assert_eq!(s.f_vector().0, vec![5, 10, 10, 5]);
        assert_eq!(s.euler_characteristic(), 0);
        assert!(s.is_closed_pseudomanifold());
        let lk = s.vertex_link(1).unwrap();
        assert_eq!(lk, simplex_boundary(5).vertex_link(1).unwrap());
        assert_eq!(lk.f_vector().0, vec![4, 6, 4]);
    }

    #[test]
    fn single_simplex_has_boundary() {
        let t = full_simplex(5);
        assert!(!t.is_closed_pseudomanifold());
        assert_eq!(t.boundary().unwrap(), simplex_boundary(5));
        assert!(simplex_boundary(5).boundary().is_none());
    }

    #[test]
    fn star_in_five_sphere_boundary() {
        let s = simplex_boundary(6);
        let st = s.star(1).unwrap();
        assert_eq!(st.num_facets(), 5);
        assert_eq!(st.boundary().unwrap().relabel(|v| v - 1).unwrap(), simplex_boundary(5));
    }

    #[test]
    fn errors() {
        assert_eq!(SimplicialComplex::new(Vec::new()).unwrap_err(), ComplexError::Empty);
        assert!(matches!(
            SimplicialComplex::from_lists([vec![1, 2, 3], vec![1, 2]]),
            Err(ComplexError::NotPure { .. })
        ));
        let s = simplex_boundary(5);
        assert_eq!(s.vertex_link(9).unwrap_err(), ComplexError::MissingVertex(9));
        assert_eq!(s.link(&simplex(&[1, 2, 3, 4])).unwrap_err(), ComplexError::LinkOfFacet);
    }

    #[test]
    fn heawood() {
        assert_eq!(heawood_check(16, 24), HeawoodCheck { lhs: 220, rhs: 220, holds: true, equality: true });
        assert_eq!(heawood_check(16, 8), HeawoodCheck { lhs: 220, rhs: 60, holds: true, equality: false });
    }

    #[test]
    fn neighborliness_of_sphere() {
        // boundary of the 4-simplex is 4-neighborly in the sense that all
        // 1-, 2-, 3- and 4-subsets of its 5 vertices span faces
        assert_eq!(simplex_boundary(5).neighborliness(), 4);
    }
}
