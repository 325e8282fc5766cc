use std::collections::BTreeMap;

use rustc_hash::FxHashSet;

use super::ConstructionError;
use crate::complex::{NamingTable, Simplex, SimplicialComplex, Vertex};

/// A vertex assignment between two complexes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialMap {
    assignment: BTreeMap<Vertex, Vertex>,
}

impl SimplicialMap {
    pub fn insert(&mut self, from: Vertex, to: Vertex) {
        self.assignment.insert(from, to);
    }

    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        self.assignment.get(&v).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.assignment
    }

    /// Image vertex set of a simplex (collapsed vertices merged).
    pub fn image_of(&self, s: &Simplex) -> Result<Simplex, ConstructionError> {
        let mut v: Vec<Vertex> =
            s.vertices().iter().map(|&x| self.get(x).ok_or(ConstructionError::Unmapped(x))).collect::<Result<_, _>>()?;
        v.sort_unstable();
        v.dedup();
        Ok(Simplex::new(v)?)
    }

    /// Every facet must land on a face of `target`.
    pub fn check_simplicial(&self, source: &SimplicialComplex, target: &SimplicialComplex) -> Result<(), ConstructionError> {
        let faces = target.face_set();
        for f in source.facets() {
            let im = self.image_of(f)?;
            if !faces.contains(&im) {
                return Err(ConstructionError::NotSimplicial(format!("{f} maps to {im}, not a face of the target")));
            }
        }
        Ok(())
    }

    /// The complex spanned by the images of the facets.
    pub fn image(&self, source: &SimplicialComplex) -> Result<SimplicialComplex, ConstructionError> {
        let mut images: Vec<Simplex> =
            source.facets().iter().map(|f| self.image_of(f)).collect::<Result<FxHashSet<_>, _>>()?.into_iter().collect();
        images.sort_by_key(|s| std::cmp::Reverse(s.len()));
        let top = images[0].len();
        let maximal: Vec<Simplex> = images
            .iter()
            .enumerate()
            .filter(|(k, s)| !images[..*k].iter().any(|t| t.len() > s.len() && s.is_face_of(t)))
            .map(|(_, s)| s.clone())
            .collect();
        if let Some(bad) = maximal.iter().find(|s| s.len() != top) {
            return Err(ConstructionError::NotSimplicial(format!("image is not pure: maximal face {bad}")));
        }
        Ok(SimplicialComplex::new(maximal)?)
    }
}

/// Mapping cylinder of `map: source -> target`.
///
/// Each prism `F x [0,1]` over a facet `F = <v_0 ... v_d>` (sorted labels) is
/// cut into the staircase simplices `<h(v_0) ... h(v_j) v_j ... v_d>`; the
/// bottom vertices `h(v)` are target vertices shifted past the source labels.
/// Simplices whose bottom part collapses are dropped. The top copy keeps the
/// source labels, so the boundary is the source itself.
pub fn mapping_cylinder(
    source: &SimplicialComplex,
    map: &SimplicialMap,
    target: &SimplicialComplex,
) -> Result<SimplicialComplex, ConstructionError> {
    map.check_simplicial(source, target)?;
    let offset = source.max_label();
    let mut facets = Vec::new();
    for f in source.facets() {
        let v = f.vertices();
        for j in 0..v.len() {
            let mut bottom: Vec<Vertex> = v[..=j].iter().map(|&x| map.get(x).expect("checked") + offset).collect();
            bottom.sort_unstable();
            if bottom.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            bottom.extend_from_slice(&v[j..]);
            facets.push(Simplex::new(bottom)?);
        }
    }
    let mut names: NamingTable = source.names().clone();
    for (&t, name) in target.names() {
        names.insert(t + offset, format!("{name}'"));
    }
    Ok(SimplicialComplex::new(facets)?.with_names(names))
}
