//! Mutable complex with incremental face degrees, for fast flip search.

use indexmap::IndexSet;
use rand::Rng;
use rustc_hash::{FxBuildHasher, FxHashMap, FxHashSet};

use super::{Flip, FlipError};
use crate::complex::{Simplex, SimplicialComplex, Vertex};

type FxIndexSet<T> = IndexSet<T, FxBuildHasher>;

/// A pure complex under bistellar moves.
///
/// `count[S]` is the number of facets containing `S`. A face `A` with `k`
/// vertices is a flip candidate when `count[A] = d + 2 - k`, the degree that
/// an `i`-move with `i = d + 1 - k` requires.
#[derive(Clone)]
pub struct FlipState {
    dim: usize,
    facets: FxIndexSet<Simplex>,
    count: FxHashMap<Simplex, u32>,
    star: FxHashMap<Vertex, FxHashSet<Simplex>>,
    candidates: Vec<FxIndexSet<Simplex>>,
    /// Extra simplices treated as present (faces of a surrounding complex).
    forbidden: FxHashSet<Simplex>,
    /// Labels unavailable for new vertices.
    reserved: FxHashSet<Vertex>,
    /// Vertices that must never be removed.
    protected: FxHashSet<Vertex>,
    /// Every applied flip `(A, B)` also forbids the faces of `A u B`.
    glue: bool,
}

impl FlipState {
    pub fn new(c: &SimplicialComplex) -> Self {
        let dim = c.dim();
        let mut s = FlipState {
            dim,
            facets: FxIndexSet::default(),
            count: FxHashMap::default(),
            star: FxHashMap::default(),
            candidates: vec![FxIndexSet::default(); dim + 2],
            forbidden: FxHashSet::default(),
            reserved: FxHashSet::default(),
            protected: FxHashSet::default(),
            glue: false,
        };
        for f in c.facets() {
            s.add_facet(f.clone());
        }
        s
    }

    /// Treats every face of `outer` as present and reserves its labels.
    pub fn with_forbidden(mut self, outer: &SimplicialComplex) -> Self {
        for f in outer.facets() {
            for face in f.faces() {
                if face.len() == 1 {
                    self.reserved.insert(face.vertices()[0]);
                }
                self.forbidden.insert(face);
            }
        }
        self
    }

    pub fn forbid(&mut self, s: &Simplex) {
        for face in s.faces() {
            if face.len() == 1 {
                self.reserved.insert(face.vertices()[0]);
            }
            self.forbidden.insert(face);
        }
    }

    /// Treats the state as the boundary of a larger complex that grows by
    /// the simplex `A u B` with every flip.
    pub fn track_gluing(mut self) -> Self {
        self.glue = true;
        self
    }

    pub fn protect(&mut self, v: Vertex) {
        self.protected.insert(v);
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.star.len()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.star.contains_key(&v)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim + 1];
        for k in self.count.keys() {
            f[k.len() - 1] += 1;
        }
        f
    }

    pub fn to_complex(&self) -> SimplicialComplex {
        SimplicialComplex::new(self.facets.iter().cloned()).expect("flip state is never empty")
    }

    /// Present in the complex or in the forbidden set.
    pub fn is_present(&self, s: &Simplex) -> bool {
        self.count.contains_key(s) || self.forbidden.contains(s)
    }

    pub fn is_face(&self, s: &Simplex) -> bool {
        self.count.contains_key(s)
    }

    pub fn vertex_star(&self, v: Vertex) -> impl Iterator<Item = &Simplex> {
        self.star.get(&v).into_iter().flatten()
    }

    /// Smallest positive label not in use and not reserved.
    pub fn fresh_vertex(&self) -> Vertex {
        (1..).find(|v| !self.star.contains_key(v) && !self.reserved.contains(v)).expect("labels are unbounded")
    }

    fn set_candidate(&mut self, s: &Simplex, count: u32) {
        let k = s.len();
        if count as usize + k == self.dim + 2 {
            self.candidates[k].insert(s.clone());
        } else {
            self.candidates[k].swap_remove(s);
        }
    }

    fn add_facet(&mut self, f: Simplex) {
        for face in f.faces() {
            let c = self.count.entry(face.clone()).or_insert(0);
            *c += 1;
            let c = *c;
            self.set_candidate(&face, c);
        }
        for &v in f.vertices() {
            self.star.entry(v).or_default().insert(f.clone());
        }
        self.facets.insert(f);
    }

    fn remove_facet(&mut self, f: &Simplex) {
        assert!(self.facets.swap_remove(f), "removing a missing facet {f}");
        for face in f.faces() {
            let c = self.count.get_mut(&face).expect("face counted");
            *c -= 1;
            let c = *c;
            if c == 0 {
                self.count.remove(&face);
                self.candidates[face.len()].swap_remove(&face);
            } else {
                self.set_candidate(&face, c);
            }
        }
        for &v in f.vertices() {
            let st = self.star.get_mut(&v).expect("vertex star");
            st.remove(f);
            if st.is_empty() {
                self.star.remove(&v);
            }
        }
    }

    /// Vertices of the link of `a`, or `None` if `a` is not a face.
    fn link_vertices(&self, a: &Simplex) -> Option<Simplex> {
        let pivot = a.vertices().iter().min_by_key(|v| self.star.get(v).map_or(0, |s| s.len()))?;
        let mut out = Simplex::empty();
        let mut any = false;
        for f in self.star.get(pivot)? {
            if a.is_face_of(f) {
                any = true;
                out = out.union(&f.difference(a));
            }
        }
        any.then_some(out)
    }

    /// The flip at face `a`, if `a` admits one. For a facet the complement is
    /// a fresh vertex.
    pub fn flip_at(&self, a: &Simplex) -> Option<Flip> {
        let k = a.len();
        if k == 0 || k > self.dim + 1 {
            return None;
        }
        let i = self.dim + 1 - k;
        if self.count.get(a).copied() != Some(i as u32 + 1) {
            return None;
        }
        if i == self.dim && self.protected.contains(&a.vertices()[0]) {
            return None;
        }
        if i == 0 {
            return Some(Flip { a: a.clone(), b: Simplex::new([self.fresh_vertex()]).expect("fresh label") });
        }
        let b = self.link_vertices(a)?;
        if b.len() != i + 1 || self.is_present(&b) {
            return None;
        }
        Some(Flip { a: a.clone(), b })
    }

    /// Checks the definition clause by clause.
    pub fn validate(&self, flip: &Flip) -> Result<(), FlipError> {
        let (a, b) = (&flip.a, &flip.b);
        if a.len() + b.len() != self.dim + 2 || a.is_empty() || b.is_empty() {
            return Err(FlipError::Dimension { a: a.clone(), b: b.clone(), dim: self.dim });
        }
        if !a.is_disjoint(b) {
            return Err(FlipError::NotDisjoint { a: a.clone(), b: b.clone() });
        }
        if !self.is_face(a) {
            return Err(FlipError::NotAFace(a.clone()));
        }
        let i = flip.index();
        if i == self.dim && self.protected.contains(&a.vertices()[0]) {
            return Err(FlipError::Protected(a.vertices()[0]));
        }
        if i == 0 {
            let v = b.vertices()[0];
            if self.has_vertex(v) || self.reserved.contains(&v) {
                return Err(FlipError::VertexInUse(v));
            }
            return Ok(());
        }
        let lk = self.link_vertices(a).unwrap_or_default();
        if self.count[a] as usize != i + 1 || lk != *b {
            return Err(FlipError::LinkMismatch { a: a.clone(), b: b.clone() });
        }
        if self.is_present(b) {
            return Err(FlipError::ComplementPresent(b.clone()));
        }
        Ok(())
    }

    /// Applies a flip after validating it.
    pub fn apply(&mut self, flip: &Flip) -> Result<(), FlipError> {
        self.validate(flip)?;
        self.apply_unchecked(flip);
        Ok(())
    }

    pub(crate) fn apply_unchecked(&mut self, flip: &Flip) {
        let (a, b) = (&flip.a, &flip.b);
        for v in b.vertices() {
            self.remove_facet(&a.union(&b.without(*v)));
        }
        for v in a.vertices() {
            self.add_facet(a.without(*v).union(b));
        }
        if self.glue {
            self.forbid(&a.union(b));
        }
    }

    /// Replaces vertex `old` by the unused label `new`. Under gluing this
    /// attaches the cone `new * star(old)`.
    pub fn rename_vertex(&mut self, old: Vertex, new: Vertex) -> Result<(), FlipError> {
        if self.has_vertex(new) || self.reserved.contains(&new) {
            return Err(FlipError::VertexInUse(new));
        }
        let star: Vec<Simplex> = match self.star.get(&old) {
            Some(s) => s.iter().cloned().collect(),
            None => return Err(FlipError::NotAFace(Simplex::new([old]).expect("single vertex"))),
        };
        if self.protected.contains(&old) {
            return Err(FlipError::Protected(old));
        }
        for f in &star {
            if self.glue {
                self.forbid(&f.with(new));
            }
            self.remove_facet(f);
        }
        for f in star {
            self.add_facet(f.without(old).with(new));
        }
        Ok(())
    }

    /// All valid flips, sorted.
    pub fn valid_flips(&self) -> Vec<Flip> {
        let mut out: Vec<Flip> = self.candidates.iter().flatten().filter_map(|a| self.flip_at(a)).collect();
        out.sort();
        out
    }

    /// All valid flips of index `i`, in candidate order.
    pub fn flips_of_index(&self, i: usize) -> Vec<Flip> {
        self.candidates[self.dim + 1 - i].iter().filter_map(|a| self.flip_at(a)).collect()
    }

    /// A uniformly random valid flip of index `i`, skipping `avoid`.
    pub fn random_flip<R: Rng>(&self, i: usize, avoid: Option<&Flip>, rng: &mut R) -> Option<Flip> {
        let cands = &self.candidates[self.dim + 1 - i];
        if cands.is_empty() {
            return None;
        }
        // cheap rejection sampling first, exhaustive scan as fallback
        for _ in 0..24 {
            let a = &cands[rng.gen_range(0..cands.len())];
            if let Some(f) = self.flip_at(a) {
                if Some(&f) != avoid {
                    return Some(f);
                }
            }
        }
        let all: Vec<Flip> = cands.iter().filter_map(|a| self.flip_at(a)).filter(|f| Some(f) != avoid).collect();
        if all.is_empty() {
            None
        } else {
            Some(all[rng.gen_range(0..all.len())].clone())
        }
    }
}
