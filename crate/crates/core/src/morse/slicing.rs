//! Level sets of rsl functions.
//!
//! A 4-simplex split `|B| : |A|` by the level contributes the product
//! `Delta^{|B|-1} x Delta^{|A|-1}` on its cut edges: a tetrahedron for a
//! `1:4` or `4:1` split, a prism otherwise. Prisms are triangulated by the
//! staircase of monotone chains in the `B x A` grid with both factors in
//! label order, so neighbouring prisms agree on their shared squares.

use std::collections::BTreeSet;

use rustc_hash::FxHashMap;

use super::{MorseError, RslFunction};
use crate::complex::{NamingTable, Simplex, SimplicialComplex, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    Tetrahedron,
    Prism,
}

/// The piece of one facet cut out by the level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub facet: Simplex,
    pub below: Vec<Vertex>,
    pub above: Vec<Vertex>,
    /// The triangulation of the cell, in slicing labels.
    pub tetrahedra: Vec<Simplex>,
}

impl Cell {
    pub fn kind(&self) -> CellKind {
        if self.below.len() == 1 || self.above.len() == 1 {
            CellKind::Tetrahedron
        } else {
            CellKind::Prism
        }
    }
}

#[derive(Clone, Debug)]
pub struct Slicing {
    /// Vertices below the level.
    pub below: BTreeSet<Vertex>,
    pub level: Option<f64>,
    pub cells: Vec<Cell>,
    /// Cut edges `(low, high)` in label order; label `k + 1` names entry `k`.
    pub edges: Vec<(Vertex, Vertex)>,
    pub complex: SimplicialComplex,
}

impl Slicing {
    pub fn edge_label(&self, low: Vertex, high: Vertex) -> Option<Vertex> {
        self.edges.binary_search(&(low, high)).ok().map(|k| k as Vertex + 1)
    }
}

/// The level set `f^{-1}(alpha)` of a closed 4-complex.
pub fn slicing(c: &SimplicialComplex, f: &RslFunction, alpha: f64) -> Result<Slicing, MorseError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(MorseError::LevelRange(alpha));
    }
    let n = f.len();
    let scaled = alpha * (n.max(2) - 1) as f64;
    if (scaled - scaled.round()).abs() < 1e-9 {
        return Err(MorseError::VertexLevel(alpha));
    }
    let k = scaled.ceil() as usize;
    let mut s = slicing_below(c, f.order()[..k].iter().copied())?;
    s.level = Some(alpha);
    Ok(s)
}

/// The slicing separating `below` from the remaining vertices.
pub fn slicing_below<I: IntoIterator<Item = Vertex>>(c: &SimplicialComplex, below: I) -> Result<Slicing, MorseError> {
    let below: BTreeSet<Vertex> = below.into_iter().collect();
    let verts = c.vertices();
    if let Some(&v) = below.iter().find(|v| verts.binary_search(v).is_err()) {
        return Err(MorseError::NoSuchVertex(v));
    }
    if below.is_empty() || below.len() == verts.len() {
        return Err(MorseError::NotManifold("empty level set".into()));
    }
    let is_below = |v: &Vertex| below.contains(v);
    let mut edges = BTreeSet::new();
    for e in c.faces_of_size(2) {
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        match (is_below(&a), is_below(&b)) {
            (true, false) => {
                edges.insert((a, b));
            }
            (false, true) => {
                edges.insert((b, a));
            }
            _ => {}
        }
    }
    let edges: Vec<(Vertex, Vertex)> = edges.into_iter().collect();
    let label: FxHashMap<(Vertex, Vertex), Vertex> = edges.iter().enumerate().map(|(k, &e)| (e, k as Vertex + 1)).collect();

    let mut cells = Vec::new();
    let mut tets = Vec::new();
    for facet in c.facets() {
        let (lo, hi): (Vec<Vertex>, Vec<Vertex>) = facet.vertices().iter().partition(|v| is_below(v));
        if lo.is_empty() || hi.is_empty() {
            continue;
        }
        let mut cell_tets = Vec::new();
        for chain in staircase(lo.len(), hi.len()) {
            let t = Simplex::new(chain.into_iter().map(|(i, j)| label[&(lo[i], hi[j])])).expect("distinct cut edges");
            cell_tets.push(t);
        }
        tets.extend(cell_tets.iter().cloned());
        cells.push(Cell { facet: facet.clone(), below: lo, above: hi, tetrahedra: cell_tets });
    }
    let names: NamingTable = edges.iter().enumerate().map(|(k, (a, b))| (k as Vertex + 1, format!("{a}-{b}"))).collect();
    let complex = SimplicialComplex::new(tets).map_err(|e| MorseError::NotManifold(e.to_string()))?.with_names(names);
    check_closed_3_manifold(&complex)?;
    Ok(Slicing { below, level: None, cells, edges, complex })
}

/// Maximal monotone lattice paths from `(0, 0)` to `(p - 1, q - 1)`.
fn staircase(p: usize, q: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut path = vec![(0, 0)];
    fn go(p: usize, q: usize, path: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let (i, j) = *path.last().expect("non-empty");
        if i + 1 == p && j + 1 == q {
            out.push(path.clone());
            return;
        }
        if i + 1 < p {
            path.push((i + 1, j));
            go(p, q, path, out);
            path.pop();
        }
        if j + 1 < q {
            path.push((i, j + 1));
            go(p, q, path, out);
            path.pop();
        }
    }
    go(p, q, &mut path, &mut out);
    out
}

fn check_closed_3_manifold(c: &SimplicialComplex) -> Result<(), MorseError> {
    if c.dim() != 3 || !c.is_closed_pseudomanifold() {
        return Err(MorseError::NotManifold("not a closed 3-pseudomanifold".into()));
    }
    for v in c.vertices() {
        let lk = c.vertex_link(v).map_err(|e| MorseError::NotManifold(e.to_string()))?;
        if !is_2_sphere(&lk) {
            return Err(MorseError::NotManifold(format!("link of {v} is not a 2-sphere")));
        }
    }
    Ok(())
}

/// A connected closed surface with circle vertex links and `chi = 2`.
pub(crate) fn is_2_sphere(c: &SimplicialComplex) -> bool {
    if c.dim() != 2 || !c.is_closed_pseudomanifold() || !c.is_strongly_connected() || c.euler_characteristic() != 2 {
        return false;
    }
    c.vertices().into_iter().all(|v| {
        c.vertex_link(v).is_ok_and(|lk| lk.is_strongly_connected() && lk.f_vector().0[0] == lk.num_facets())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::homology;
    use crate::complex::simplex_boundary;
    use crate::construction::{k3_16, kummer_k4_16};

    #[test]
    fn staircase_counts() {
        assert_eq!(staircase(1, 4).len(), 1);
        assert_eq!(staircase(2, 3).len(), 3);
        assert_eq!(staircase(3, 2).len(), 3);
        assert!(staircase(2, 3).iter().all(|c| c.len() == 4));
    }

    #[test]
    fn sphere_slices_are_spheres() {
        let s = simplex_boundary(6);
        let f = RslFunction::ascending(&s);
        for k in 1..5 {
            let sl = slicing(&s, &f, (k as f64 + 0.5) / 5.0).unwrap();
            assert!(is_2_sphere(&sl.complex.vertex_link(1).unwrap()));
            assert_eq!(homology(&sl.complex).betti, vec![1, 0, 0, 1]);
        }
        assert!(matches!(slicing(&s, &f, 0.4), Err(MorseError::VertexLevel(_))));
        assert!(matches!(slicing(&s, &f, 1.5), Err(MorseError::LevelRange(_))));
    }

    #[test]
    fn every_facet_cut_once() {
        let k = kummer_k4_16();
        let sl = slicing_below(&k, 1..=8).unwrap();
        let cut = k.facets().iter().filter(|f| {
            let n = f.vertices().iter().filter(|v| **v <= 8).count();
            n > 0 && n < 5
        });
        assert_eq!(cut.count(), sl.cells.len());
        let tets: usize = sl.cells.iter().map(|c| c.tetrahedra.len()).sum();
        assert_eq!(tets, sl.complex.num_facets());
        assert!(sl.cells.iter().any(|c| c.kind() == CellKind::Prism));
    }

    #[test]
    fn single_vertex_slice_is_its_link() {
        let t = k3_16();
        let sl = slicing_below(&t, [1]).unwrap();
        let lk = t.vertex_link(1).unwrap();
        assert_eq!(sl.complex.f_vector(), lk.f_vector());
        assert_eq!(sl.edge_label(1, 2), Some(1));
    }
}
