//! The centrally symmetric 3-sphere built on an `m x m` grid torus, its
//! simplicial Hopf map, and quotients by the diagonal shift.

use super::group::{Permutation, PermutationGroup};
use super::map::SimplicialMap;
use super::ConstructionError;
use crate::complex::{NamingTable, Simplex, SimplicialComplex, Vertex};

/// Labels of the grid sphere on `m x m` vertices `a_ij`, centres `b_i`, `c_j`.
#[derive(Clone, Copy, Debug)]
pub struct GridLabels {
    pub m: u32,
}

impl GridLabels {
    fn wrap(&self, i: i64) -> u32 {
        (i - 1).rem_euclid(self.m as i64) as u32 + 1
    }

    pub fn a(&self, i: i64, j: i64) -> Vertex {
        (self.wrap(i) - 1) * self.m + self.wrap(j)
    }

    pub fn b(&self, i: i64) -> Vertex {
        self.m * self.m + self.wrap(i)
    }

    pub fn c(&self, j: i64) -> Vertex {
        self.m * self.m + self.m + self.wrap(j)
    }

    pub fn num_vertices(&self) -> u32 {
        self.m * self.m + 2 * self.m
    }

    pub fn names(&self) -> NamingTable {
        let sep = if self.m > 9 { "_" } else { "" };
        let mut t = NamingTable::new();
        for i in 1..=self.m as i64 {
            for j in 1..=self.m as i64 {
                t.insert(self.a(i, j), format!("a{i}{sep}{j}"));
            }
            t.insert(self.b(i), format!("b{i}"));
            t.insert(self.c(i), format!("c{i}"));
        }
        t
    }

    /// Inverse of the labelling: `('a', i, j)`, `('b', i, 0)` or `('c', j, 0)`.
    pub fn decode(&self, v: Vertex) -> (char, u32, u32) {
        let m = self.m;
        if v <= m * m {
            ('a', (v - 1) / m + 1, (v - 1) % m + 1)
        } else if v <= m * m + m {
            ('b', v - m * m, 0)
        } else {
            ('c', v - m * m - m, 0)
        }
    }
}

fn s(v: &[Vertex]) -> Simplex {
    Simplex::new(v.iter().copied()).expect("grid sphere simplices have distinct vertices")
}

/// The grid 3-sphere for an `m`-gon times an `m`-gon (`m >= 3`).
pub fn build_grid_sphere(m: u32) -> Result<SimplicialComplex, ConstructionError> {
    if m < 3 {
        return Err(ConstructionError::Parameter(format!("polygon size {m} < 3")));
    }
    let g = GridLabels { m };
    let mut facets = Vec::with_capacity(36 * m as usize);
    for i in 1..=m as i64 {
        for j in 1..=m as i64 {
            // b-prism between rows i-1 and i
            let (bi, cj) = (g.b(i), g.c(j));
            facets.push(s(&[bi, g.a(i - 1, j), g.a(i - 1, j + 1), g.a(i, j + 1)]));
            facets.push(s(&[bi, g.a(i - 1, j), g.a(i, j), g.a(i, j + 1)]));
            facets.push(s(&[bi, g.b(i + 1), g.a(i, j), g.a(i, j + 1)]));
            // c-prism between columns j-1 and j
            facets.push(s(&[cj, g.a(i, j - 1), g.a(i, j), g.a(i + 1, j)]));
            facets.push(s(&[cj, g.a(i, j - 1), g.a(i + 1, j - 1), g.a(i + 1, j)]));
            facets.push(s(&[cj, g.c(j + 1), g.a(i, j), g.a(i + 1, j)]));
        }
    }
    Ok(SimplicialComplex::new(facets)?.with_names(g.names()))
}

/// The 48-vertex centrally symmetric 3-sphere on the hexagon torus.
pub fn build_s3_cs() -> SimplicialComplex {
    build_grid_sphere(6).expect("m = 6 is valid")
}

/// The Hopf map from the grid sphere onto the double pyramid over an
/// `m`-gon: `a_ij` goes to the diagonal class of `j - i`, centres to apexes.
/// Target labels: polygon `1..=m` (class 0 is `m`), apexes `m+1` and `m+2`.
pub fn hopf_map(m: u32) -> SimplicialMap {
    let g = GridLabels { m };
    let mut map = SimplicialMap::default();
    for i in 1..=m as i64 {
        for j in 1..=m as i64 {
            let class = (j - i).rem_euclid(m as i64) as u32;
            map.insert(g.a(i, j), if class == 0 { m } else { class });
        }
        map.insert(g.b(i), m + 1);
        map.insert(g.c(i), m + 2);
    }
    map
}

pub fn hopf_map_cs() -> SimplicialMap {
    hopf_map(6)
}

/// Double pyramid over an `m`-gon, labelled as the Hopf map target.
pub fn double_pyramid(m: u32) -> SimplicialComplex {
    let mut facets = Vec::new();
    for k in 1..=m {
        let next = k % m + 1;
        facets.push(s(&[k, next, m + 1]));
        facets.push(s(&[k, next, m + 2]));
    }
    let mut names = NamingTable::new();
    for k in 1..=m {
        names.insert(k, format!("a{k}"));
    }
    names.insert(m + 1, "b".into());
    names.insert(m + 2, "c".into());
    SimplicialComplex::new(facets).expect("polygon double pyramid").with_names(names)
}

/// Image of the Hopf map on the 48-vertex sphere.
pub fn hopf_image() -> SimplicialComplex {
    let sphere = build_s3_cs();
    hopf_map_cs().image(&sphere).expect("the Hopf map is simplicial")
}

/// The diagonal shift `a_ij -> a_{i+t,j+t}`, `b_i -> b_{i+t}`, `c_j -> c_{j+t}`.
pub fn diagonal_shift(m: u32, t: i64) -> Permutation {
    let g = GridLabels { m };
    let mut images = vec![0; g.num_vertices() as usize + 1];
    for i in 1..=m as i64 {
        for j in 1..=m as i64 {
            images[g.a(i, j) as usize] = g.a(i + t, j + t);
        }
        images[g.b(i) as usize] = g.b(i + t);
        images[g.c(i) as usize] = g.c(i + t);
    }
    Permutation::from_images(images).expect("shift is a bijection")
}

/// The antipodal map of the 48-vertex sphere.
pub fn antipodal_map() -> Permutation {
    diagonal_shift(6, 3)
}

/// Quotient of `c` by a group acting freely: vertices are relabelled to the
/// smallest label in their orbit. Fails unless every face orbit has full
/// size and maps to a face of the same dimension.
pub fn free_quotient(c: &SimplicialComplex, group: &PermutationGroup) -> Result<(SimplicialComplex, Vec<Vertex>), ConstructionError> {
    let elements = group.elements();
    let order = elements.len();
    let n = group.degree();
    let mut rep: Vec<Vertex> = (0..=n as Vertex).collect();
    for v in 1..=n as Vertex {
        for g in &elements {
            rep[v as usize] = rep[v as usize].min(g.apply(v));
        }
        if order > 1 && elements.iter().filter(|g| g.apply(v) == v).count() > 1 {
            return Err(ConstructionError::NotFree(format!("vertex {v} has a nontrivial stabilizer")));
        }
    }
    if let Some(g) = elements.iter().find(|g| !g.is_automorphism_of(c)) {
        return Err(ConstructionError::NotFree(format!("{g:?} is not an automorphism")));
    }
    let facets = c
        .facets()
        .iter()
        .map(|f| f.map(|v| rep[v as usize]).ok_or_else(|| ConstructionError::NotFree(format!("facet {f} collapses"))))
        .collect::<Result<Vec<_>, _>>()?;
    let q = SimplicialComplex::new(facets)?;
    let (fs, fq) = (c.f_vector(), q.f_vector());
    if fs.0.iter().zip(&fq.0).any(|(&a, &b)| a != b * order) {
        return Err(ConstructionError::NotFree(format!("face numbers {fs} do not divide to {fq}")));
    }
    let names: NamingTable = c.names().iter().filter(|(v, _)| rep[**v as usize] == **v).map(|(v, s)| (*v, s.clone())).collect();
    Ok((q.with_names(names), rep))
}

/// The lens space `L(k,1)` as the quotient of the `3k x 3k` grid sphere by
/// the cyclic shift by three, with the induced Hopf map onto the double
/// pyramid over a `3k`-gon.
pub fn lens_space(k: u32) -> Result<(SimplicialComplex, SimplicialMap), ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::Parameter(format!("lens parameter {k} < 2")));
    }
    let m = 3 * k;
    let sphere = build_grid_sphere(m)?;
    let group = PermutationGroup::new(GridLabels { m }.num_vertices() as usize, vec![diagonal_shift(m, 3)])?;
    let (q, rep) = free_quotient(&sphere, &group)?;
    let h = hopf_map(m);
    let mut induced = SimplicialMap::default();
    for v in sphere.vertices() {
        let r = rep[v as usize];
        let image = h.get(v).expect("total map");
        match induced.get(r) {
            Some(prev) if prev != image => {
                return Err(ConstructionError::NotSimplicial(format!("shift is not compatible with the Hopf map at {v}")))
            }
            _ => induced.insert(r, image),
        }
    }
    Ok((q, induced))
}

/// The 24-vertex RP^3 and its Hopf map.
pub fn antipodal_quotient() -> SimplicialComplex {
    lens_space(2).expect("the antipodal action is free").0
}
