//! Builders for the concrete complexes: orbit triangulations of the Kummer
//! variety and the K3 surface, the grid 3-sphere with its Hopf map, lens
//! space quotients, mapping cylinders and the stored reference complexes.

mod data;
mod group;
mod hopf;
mod map;
mod product;

use thiserror::Error;

use crate::complex::{simplex, ComplexError, SimplicialComplex};

pub use group::{group_order, orbit_complex, Permutation, PermutationGroup};
pub use hopf::{
    antipodal_map, antipodal_quotient, build_grid_sphere, build_s3_cs, diagonal_shift, double_pyramid, free_quotient,
    hopf_image, hopf_map, hopf_map_cs, lens_space, GridLabels,
};
pub use map::{mapping_cylinder, SimplicialMap};
pub use product::{connected_sum, polygon, product};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("bad permutation {0}")]
    BadPermutation(String),
    #[error("orbit representatives {0} and {1} have different dimensions")]
    MixedOrbitDimensions(crate::complex::Simplex, crate::complex::Simplex),
    #[error("map is not simplicial: {0}")]
    NotSimplicial(String),
    #[error("vertex {0} has no image")]
    Unmapped(u32),
    #[error("group action is not free: {0}")]
    NotFree(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("stored complex {name} has checksum {found}, expected {expected}")]
    Checksum { name: &'static str, expected: &'static str, found: String },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

pub const KUMMER_GENERATORS: [&str; 2] =
    ["(1,7,12)(2,8,11)(3,10,16)(4,9,15)", "(1,9,10,14,16,8,7,3)(2,13,12,6,15,4,5,11)"];
pub const KUMMER_ORBITS: [[u32; 5]; 1] = [[1, 2, 4, 8, 16]];

pub const K3_GENERATORS: [&str; 2] = ["(1,3,8,4,9,16,15,2,14,12,6,7,13,5,10)", "(1,11,16)(2,10,14)(3,12,13)(4,9,15)(5,7,8)"];
pub const K3_ORBITS: [[u32; 5]; 2] = [[1, 2, 3, 8, 12], [1, 2, 5, 8, 14]];

const BOUNDED_CP2_HOLE_SHA256: &str = "06018d24c0ae1135f3396e37f0638c937b8ac2cc1f7522c5cf5b5c5b7dadc049";
const K3_17_SHA256: &str = "dee5d065b6f4ff6c3fb8dd586b92967965fc680fc7292b4faea077f028edd7c8";

pub fn kummer_group() -> PermutationGroup {
    PermutationGroup::from_cycles(16, &KUMMER_GENERATORS).expect("valid generators")
}

pub fn k3_group() -> PermutationGroup {
    PermutationGroup::from_cycles(16, &K3_GENERATORS).expect("valid generators")
}

/// The 16-vertex Kummer variety.
pub fn kummer_k4_16() -> SimplicialComplex {
    orbit_complex(&kummer_group(), &KUMMER_ORBITS.map(|r| simplex(&r))).expect("orbit complex")
}

/// The 16-vertex K3 surface.
pub fn k3_16() -> SimplicialComplex {
    orbit_complex(&k3_group(), &K3_ORBITS.map(|r| simplex(&r))).expect("orbit complex")
}

fn checked(name: &'static str, expected: &'static str, facets: &[[u32; 5]]) -> Result<SimplicialComplex, ConstructionError> {
    let c = SimplicialComplex::from_lists(facets)?;
    let found = c.hash();
    if found != expected {
        return Err(ConstructionError::Checksum { name, expected, found });
    }
    Ok(c)
}

/// The 11-vertex bounded complex whose boundary is RP^3 (the resolution piece).
pub fn reference_c() -> Result<SimplicialComplex, ConstructionError> {
    checked("C", BOUNDED_CP2_HOLE_SHA256, &data::BOUNDED_CP2_HOLE)
}

/// The 17-vertex K3 surface.
pub fn reference_k3_17() -> Result<SimplicialComplex, ConstructionError> {
    checked("K3_17", K3_17_SHA256, &data::K3_17)
}

/// Mapping cylinder of the Hopf map of `L(k,1)` onto the double pyramid over
/// a `3k`-gon. For `k = 2` the source is the 24-vertex RP^3.
pub fn build_lens_cylinder(k: u32) -> Result<SimplicialComplex, ConstructionError> {
    let (lens, h) = lens_space(k)?;
    mapping_cylinder(&lens, &h, &double_pyramid(3 * k))
}

/// The unreduced Hopf mapping cylinder over the 24-vertex RP^3.
pub fn hopf_cylinder() -> SimplicialComplex {
    build_lens_cylinder(2).expect("the RP^3 cylinder is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{betti_numbers, homology};
    use crate::complex::find_isomorphism;

    #[test]
    fn kummer_orbit() {
        assert_eq!(kummer_group().order(), 1920);
        let k = kummer_k4_16();
        assert_eq!(k.f_vector().0, vec![16, 120, 400, 480, 192]);
        assert!(kummer_group().generators().iter().all(|g| g.is_automorphism_of(&k)));
        assert_eq!(k.neighborliness(), 2);
    }

    #[test]
    fn k3_orbit() {
        assert_eq!(k3_group().order(), 240);
        let k = k3_16();
        assert_eq!(k3_group().orbit(&simplex(&[1, 2, 3, 8, 12])).len(), 240);
        assert_eq!(k3_group().orbit(&simplex(&[1, 2, 5, 8, 14])).len(), 48);
        assert_eq!(k.f_vector().0, vec![16, 120, 560, 720, 288]);
        assert!(k.neighborliness() >= 3);
    }

    #[test]
    fn reference_c_data() {
        let c = reference_c().unwrap();
        assert_eq!(c.f_vector().0, vec![11, 51, 107, 95, 30]);
        let b = c.boundary().unwrap();
        assert_eq!(b.f_vector().0, vec![11, 51, 80, 40]);
        // every edge of C lies on the boundary
        assert_eq!(b.faces(1).len(), c.faces(1).len());
    }

    #[test]
    fn reference_k3_17_data() {
        let k = reference_k3_17().unwrap();
        assert_eq!(k.f_vector().0, vec![17, 135, 610, 780, 312]);
        assert!(k.is_closed_pseudomanifold());
        assert!(k.neighborliness() < 2);
    }

    #[test]
    fn hopf_cylinder_retracts_to_sphere() {
        let c = hopf_cylinder();
        assert!(c.is_pseudomanifold_with_boundary());
        let h = homology(&c);
        assert_eq!(h.betti, vec![1, 0, 1, 0, 0]);
        assert!(h.is_torsion_free());
        assert_eq!(c.euler_characteristic(), 2);
        let p = antipodal_quotient();
        let b = c.boundary().unwrap();
        assert!(find_isomorphism(&b, &p).is_some());
    }

    #[test]
    fn lens_cylinders() {
        for k in [2u32, 3, 5] {
            let c = build_lens_cylinder(k).unwrap();
            let b = c.boundary().unwrap();
            assert_eq!(homology(&b).torsion[1], vec![k.into()], "k = {k}");
            assert_eq!(betti_numbers(&c, 2).unwrap(), vec![1, 0, 1, 0, 0]);
        }
        assert!(build_lens_cylinder(1).is_err());
    }
}
