use super::ConstructionError;
use crate::complex::{Simplex, SimplicialComplex, Vertex};

/// The boundary of an `n`-gon on `1..=n`.
pub fn polygon(n: u32) -> Result<SimplicialComplex, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::Parameter(format!("polygon with {n} < 3 vertices")));
    }
    Ok(SimplicialComplex::from_lists((1..=n).map(|k| [k, k % n + 1]))?)
}

/// Staircase triangulation of `a x b`. Vertex `(x, y)` (positions in the
/// sorted vertex lists) gets label `x * |b| + y + 1`.
pub fn product(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex, ConstructionError> {
    let (va, vb) = (a.vertices(), b.vertices());
    let nb = vb.len() as Vertex;
    let pos = |list: &[Vertex], v: Vertex| list.binary_search(&v).expect("vertex of the complex") as Vertex;
    let mut facets = Vec::new();
    for f in a.facets() {
        let fa: Vec<Vertex> = f.vertices().iter().map(|&v| pos(&va, v)).collect();
        for g in b.facets() {
            let gb: Vec<Vertex> = g.vertices().iter().map(|&v| pos(&vb, v)).collect();
            staircases(fa.len() - 1, gb.len() - 1, &mut |path| {
                facets.push(Simplex::new(path.iter().map(|&(x, y)| fa[x] * nb + gb[y] + 1)).expect("distinct grid points"));
            });
        }
    }
    Ok(SimplicialComplex::new(facets)?)
}

/// Calls `visit` with every monotone lattice path from `(0,0)` to `(p,q)`.
fn staircases(p: usize, q: usize, visit: &mut dyn FnMut(&[(usize, usize)])) {
    fn rec(x: usize, y: usize, p: usize, q: usize, path: &mut Vec<(usize, usize)>, visit: &mut dyn FnMut(&[(usize, usize)])) {
        path.push((x, y));
        if x == p && y == q {
            visit(path);
        }
        if x < p {
            rec(x + 1, y, p, q, path, visit);
        }
        if y < q {
            rec(x, y + 1, p, q, path, visit);
        }
        path.pop();
    }
    rec(0, 0, p, q, &mut Vec::new(), visit);
}

/// Connected sum of two closed pseudomanifolds of equal dimension: one facet
/// is removed from each and the boundaries are identified in label order.
pub fn connected_sum(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex, ConstructionError> {
    if a.dim() != b.dim() {
        return Err(ConstructionError::Parameter(format!("dimensions {} and {} differ", a.dim(), b.dim())));
    }
    let fa = a.facets()[0].clone();
    let fb = b.facets()[0].clone();
    let base = a.max_label();
    let others: Vec<Vertex> = b.vertices().into_iter().filter(|v| !fb.contains(*v)).collect();
    let relabel = |v: Vertex| match fb.position(v) {
        Some(k) => fa.vertices()[k],
        None => base + 1 + others.binary_search(&v).expect("vertex of b") as Vertex,
    };
    let mut facets: Vec<Simplex> = a.facets()[1..].to_vec();
    for f in &b.facets()[1..] {
        facets.push(f.map(relabel).expect("relabel is injective"));
    }
    Ok(SimplicialComplex::new(facets)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::homology;
    use crate::complex::simplex_boundary;

    #[test]
    fn torus_from_triangles() {
        let c3 = polygon(3).unwrap();
        let t2 = product(&c3, &c3).unwrap();
        assert_eq!(t2.f_vector().0, vec![9, 27, 18]);
        assert!(t2.is_closed_pseudomanifold());
        assert_eq!(homology(&t2).betti, vec![1, 2, 1]);
        let t3 = product(&t2, &c3).unwrap();
        assert_eq!(homology(&t3).betti, vec![1, 3, 3, 1]);
    }

    #[test]
    fn sphere_times_circle() {
        let s = product(&simplex_boundary(4), &polygon(3).unwrap()).unwrap();
        assert_eq!(homology(&s).betti, vec![1, 1, 1, 1]);
        assert!(s.is_closed_pseudomanifold());
    }

    #[test]
    fn sums_add_homology() {
        let t2 = product(&polygon(3).unwrap(), &polygon(3).unwrap()).unwrap();
        let g2 = connected_sum(&t2, &t2).unwrap();
        assert_eq!(homology(&g2).betti, vec![1, 4, 1]);
        assert_eq!(g2.euler_characteristic(), -2);
    }
}
