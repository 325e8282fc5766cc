use std::collections::VecDeque;
use std::fmt;

use rustc_hash::FxHashSet;

use super::ConstructionError;
use crate::complex::{Simplex, SimplicialComplex, Vertex};

/// A permutation of `1..=n`; `images[v]` is the image of `v` (index 0 unused).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<Vertex>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..=n as Vertex).collect() }
    }

    /// Parses cycle notation such as `(1,7,12)(2,8,11)` on the points `1..=n`.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self, ConstructionError> {
        let bad = |msg: &str| ConstructionError::BadPermutation(format!("{s:?}: {msg}"));
        let mut p = Self::identity(n);
        let mut seen = vec![false; n + 1];
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let cycle = body[..close]
                .split(',')
                .map(|t| t.parse::<Vertex>().map_err(|_| bad("bad point")))
                .collect::<Result<Vec<_>, _>>()?;
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a as usize > n || seen[a as usize] {
                    return Err(bad("point out of range or repeated"));
                }
                seen[a as usize] = true;
                p.images[a as usize] = cycle[(k + 1) % cycle.len()];
            }
            rest = &body[close + 1..];
        }
        Ok(p)
    }

    pub fn from_images(images: Vec<Vertex>) -> Result<Self, ConstructionError> {
        let mut seen = vec![false; images.len()];
        if images.first() != Some(&0) {
            return Err(ConstructionError::BadPermutation("index 0 must map to 0".into()));
        }
        for &x in &images {
            if x as usize >= images.len() || seen[x as usize] {
                return Err(ConstructionError::BadPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len() - 1
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.images[v as usize]
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&v| self.images[v as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (v, &w) in self.images.iter().enumerate() {
            inv[w as usize] = v as Vertex;
        }
        Permutation { images: inv }
    }

    pub fn apply_simplex(&self, s: &Simplex) -> Simplex {
        s.map(|v| self.apply(v)).expect("permutations are injective")
    }

    pub fn is_automorphism_of(&self, c: &SimplicialComplex) -> bool {
        c.facets().iter().all(|f| c.contains_facet(&self.apply_simplex(f)))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut any = false;
        for start in 1..=n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cyc.push(v.to_string());
                v = self.images[v] as usize;
            }
            write!(f, "({})", cyc.join(","))?;
            any = true;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A permutation group given by generators on `1..=n`.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    n: usize,
    generators: Vec<Permutation>,
}

impl PermutationGroup {
    pub fn new(n: usize, generators: Vec<Permutation>) -> Result<Self, ConstructionError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != n) {
            return Err(ConstructionError::BadPermutation(format!("{g:?} acts on {} points, expected {n}", g.degree())));
        }
        Ok(PermutationGroup { n, generators })
    }

    pub fn from_cycles(n: usize, gens: &[&str]) -> Result<Self, ConstructionError> {
        Self::new(n, gens.iter().map(|g| Permutation::parse_cycles(g, n)).collect::<Result<_, _>>()?)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, by closure under the generators.
    pub fn elements(&self) -> Vec<Permutation> {
        let id = Permutation::identity(self.n);
        let mut seen: FxHashSet<Permutation> = FxHashSet::default();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        let mut out = Vec::new();
        while let Some(g) = queue.pop_front() {
            for s in &self.generators {
                let h = s.compose(&g);
                if seen.insert(h.clone()) {
                    queue.push_back(h);
                }
            }
            out.push(g);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.elements().len()
    }

    /// Orbit of a simplex under the group.
    pub fn orbit(&self, s: &Simplex) -> Vec<Simplex> {
        let mut seen: FxHashSet<Simplex> = FxHashSet::default();
        seen.insert(s.clone());
        let mut queue = VecDeque::from([s.clone()]);
        while let Some(t) = queue.pop_front() {
            for g in &self.generators {
                let u = g.apply_simplex(&t);
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
        let mut out: Vec<Simplex> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }
}

/// Group order of the group generated by `generators` (cycle notation).
pub fn group_order(n: usize, generators: &[&str]) -> Result<usize, ConstructionError> {
    Ok(PermutationGroup::from_cycles(n, generators)?.order())
}

/// Union of the orbits of the representatives.
pub fn orbit_complex(group: &PermutationGroup, representatives: &[Simplex]) -> Result<SimplicialComplex, ConstructionError> {
    if let Some(first) = representatives.first() {
        if let Some(bad) = representatives.iter().find(|r| r.len() != first.len()) {
            return Err(ConstructionError::MixedOrbitDimensions(first.clone(), bad.clone()));
        }
    }
    let facets: Vec<Simplex> = representatives.iter().flat_map(|r| group.orbit(r)).collect();
    Ok(SimplicialComplex::new(facets)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::simplex;

    #[test]
    fn cycles_round_trip() {
        let p = Permutation::parse_cycles("(1,3,2)(4,5)", 5).unwrap();
        assert_eq!(p.apply(1), 3);
        assert_eq!(p.apply(2), 1);
        assert_eq!(format!("{p:?}"), "(1,3,2)(4,5)");
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(5));
        assert!(Permutation::parse_cycles("(1,1)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,4)", 3).is_err());
    }

    #[test]
    fn transposition_has_order_two() {
        assert_eq!(group_order(4, &["(1,2)"]).unwrap(), 2);
        assert_eq!(group_order(5, &["(1,2,3,4,5)", "(1,2)"]).unwrap(), 120);
    }

    #[test]
    fn trivial_group_orbit() {
        let g = PermutationGroup::new(5, vec![]).unwrap();
        let c = orbit_complex(&g, &[simplex(&[1, 2, 3])]).unwrap();
        assert_eq!(c.num_facets(), 1);
        assert!(orbit_complex(&g, &[simplex(&[1, 2, 3]), simplex(&[1, 2])]).is_err());
    }
}
