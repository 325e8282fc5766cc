//! Heuristic recognition of slicings against a small catalog of 3-manifolds
//! built from this crate's constructions.

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::Slicing;
use crate::algebra::{homology, HomologyProfile};
use crate::complex::{simplex_boundary, SimplicialComplex};
use crate::construction::{connected_sum, lens_space, polygon, product, reference_c};
use crate::flip::{bistellar_equivalent, is_standard_sphere, reduce, AnnealSchedule, SphereVerdict};

/// A named reference triangulation, already flip-reduced.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub complex: SimplicialComplex,
    pub homology: HomologyProfile,
}

fn entry(name: &'static str, c: SimplicialComplex) -> CatalogEntry {
    let sched = AnnealSchedule::for_dim(3).with_seed(7);
    let complex = reduce(&c, &sched).complex;
    let homology = homology(&complex);
    CatalogEntry { name, complex, homology }
}

/// RP^3, L(3,1), L(4,1), L(5,1), T^3, S^2 x S^1 and a few connected sums.
/// There is no Poincare sphere; homology spheres other than S^3 get a
/// homology-only verdict.
pub fn reference_catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let rp3 = reference_c().expect("shipped C").boundary().expect("C has a boundary");
        let circle = polygon(3).expect("triangle");
        let torus = product(&circle, &circle).expect("product");
        let s2s1 = product(&simplex_boundary(4), &circle).expect("product");
        let rp3_2 = connected_sum(&rp3, &rp3).expect("same dimension");
        let sources: Vec<(&'static str, SimplicialComplex)> = vec![
            ("RP^3", rp3.clone()),
            ("L(3,1)", lens_space(3).expect("lens").0),
            ("L(4,1)", lens_space(4).expect("lens").0),
            ("L(5,1)", lens_space(5).expect("lens").0),
            ("T^3", product(&torus, &circle).expect("product")),
            ("S^2xS^1", s2s1.clone()),
            ("RP^3#RP^3", rp3_2.clone()),
            ("RP^3#RP^3#RP^3", connected_sum(&rp3_2, &rp3).expect("same dimension")),
            ("S^2xS^1#RP^3#RP^3", connected_sum(&s2s1, &rp3_2).expect("same dimension")),
        ];
        sources.into_par_iter().map(|(n, c)| entry(n, c)).collect()
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SliceVerdict {
    /// Reduced to the boundary of the 4-simplex.
    Sphere,
    /// Flip-equivalent to a catalog entry.
    Matched(&'static str),
    /// Homology of S^3 but not reduced to a simplex boundary.
    HomologySphere,
    /// Nothing matched; only the homology is known.
    Unknown(HomologyProfile),
}

impl fmt::Display for SliceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SliceVerdict::Sphere => write!(f, "S^3"),
            SliceVerdict::Matched(n) => write!(f, "{n}"),
            SliceVerdict::HomologySphere => write!(f, "homology sphere, not recognized as S^3"),
            SliceVerdict::Unknown(h) => write!(f, "unknown with homology {h}"),
        }
    }
}

/// Seeds tried per catalog entry.
const MATCH_SEEDS: u64 = 4;

/// Homology first, then sphere recognition, then flip matching against the
/// catalog entries with the same homology.
pub fn identify_slicing(s: &Slicing, sched: &AnnealSchedule) -> (HomologyProfile, SliceVerdict) {
    let c = &s.complex;
    let h = homology(c);
    if h.betti == [1, 0, 0, 1] && h.is_torsion_free() {
        let v = match is_standard_sphere(c, sched) {
            SphereVerdict::Yes => SliceVerdict::Sphere,
            _ => SliceVerdict::HomologySphere,
        };
        return (h, v);
    }
    for e in reference_catalog().iter().filter(|e| e.homology == h) {
        for k in 0..MATCH_SEEDS {
            if bistellar_equivalent(c, &e.complex, &sched.clone().with_seed(sched.seed.wrapping_add(k * 101))).is_some() {
                return (h, SliceVerdict::Matched(e.name));
            }
        }
    }
    let v = SliceVerdict::Unknown(h.clone());
    (h, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_homology() {
        let cat = reference_catalog();
        let torsion = |n: &str| cat.iter().find(|e| e.name == n).unwrap().homology.torsion[1].clone();
        assert_eq!(torsion("RP^3"), vec![2u64.into()]);
        assert_eq!(torsion("L(5,1)"), vec![5u64.into()]);
        assert_eq!(torsion("RP^3#RP^3"), vec![2u64.into(), 2u64.into()]);
        let t3 = cat.iter().find(|e| e.name == "T^3").unwrap();
        assert_eq!(t3.homology.betti, vec![1, 3, 3, 1]);
        assert!(cat.iter().all(|e| e.complex.is_closed_pseudomanifold()));
    }
}
