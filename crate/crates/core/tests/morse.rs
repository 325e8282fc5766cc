use k3blowup::algebra::{betti_numbers, homology};
use k3blowup::complex::{SimplicialComplex, Vertex};
use k3blowup::construction::{k3_16, kummer_k4_16, Permutation};
use k3blowup::flip::AnnealSchedule;
use k3blowup::intersection::orient;
use k3blowup::morse::*;
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_orders(c: &SimplicialComplex, seed: u64, n: usize) -> Vec<RslFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let mut o = c.vertices();
            o.shuffle(&mut rng);
            RslFunction::new(c, o).unwrap()
        })
        .collect()
}

fn column(c: &SimplicialComplex, order: &str) -> Vec<(Vertex, Vec<usize>)> {
    let f = RslFunction::new(c, parse_order(order).unwrap()).unwrap();
    critical_point_counts(c, &f, 2).unwrap().vectors
}

/// Rows `(vertex, index-2 multiplicity)` between the minimum and maximum.
fn middle(rows: &[(Vertex, usize)]) -> Vec<(Vertex, Vec<usize>)> {
    let mut out = vec![];
    for (k, &(v, m)) in rows.iter().enumerate() {
        let vec = match k {
            0 => vec![1, 0, 0, 0, 0],
            15 => vec![0, 0, 0, 0, 1],
            _ => vec![0, 0, m, 0, 0],
        };
        out.push((v, vec));
    }
    out
}

#[test]
fn k3_table_first_column() {
    let t = k3_16();
    let rows = [(1, 0), (2, 0), (3, 0), (4, 1), (5, 2), (7, 3), (6, 2), (8, 3), (9, 3), (11, 2), (10, 3), (12, 2), (13, 1), (14, 0), (15, 0), (16, 0)];
    assert_eq!(column(&t, "1..5,7,6,8,9,11,10,12..16"), middle(&rows));
}

#[test]
fn k3_table_second_column() {
    let t = k3_16();
    let rows = [(2, 0), (3, 0), (4, 0), (5, 0), (6, 1), (7, 3), (1, 4), (8, 3), (9, 3), (16, 4), (10, 3), (11, 1), (12, 0), (13, 0), (14, 0), (15, 0)];
    assert_eq!(column(&t, "2..7,1,8,9,16,10..15"), middle(&rows));
}

/// The third column repeats the first column's order in its header but not
/// its vectors; this order reproduces the printed vectors.
#[test]
fn k3_table_third_column() {
    let t = k3_16();
    let printed = [0, 0, 0, 1, 1, 2, 4, 3, 3, 4, 2, 1, 1, 0, 0, 0];
    let order = "1,2,3,5,6,4,7,8,9,10,13,11,12,14,15,16";
    let got = column(&t, order);
    let rows: Vec<(Vertex, usize)> = got.iter().zip(printed).map(|((v, _), m)| (*v, m)).collect();
    assert_eq!(got, middle(&rows));
    let header: Vec<usize> = column(&t, "1..5,7,6,8,9,11,10,12..16").iter().map(|(_, m)| m[2]).collect();
    assert_ne!(header, printed);
}

#[test]
fn kummer_table() {
    let k = kummer_k4_16();
    let first = column(&k, "1..16");
    let expect: [[usize; 5]; 16] = [
        [1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 1, 1, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 1, 1, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 1, 1, 0],
        [0, 0, 1, 1, 0],
        [0, 0, 1, 1, 1],
    ];
    for (k, (v, m)) in first.iter().enumerate() {
        assert_eq!(*v as usize, k + 1);
        assert_eq!(m, &expect[k]);
    }
    let second = column(&k, "1,4,6,2,3,5,7..16");
    let labels: Vec<Vertex> = second.iter().map(|(v, _)| *v).collect();
    assert_eq!(labels, parse_order("1,4,6,2,3,5,7..16").unwrap());
    let mut expect2 = expect;
    expect2[1] = [0, 0, 0, 0, 0];
    expect2[2] = [0, 1, 0, 0, 0];
    expect2[3] = [0, 0, 1, 0, 0];
    expect2[4] = [0, 0, 1, 0, 0];
    for (k, (_, m)) in second.iter().enumerate() {
        assert_eq!(m, &expect2[k]);
    }
    let f = RslFunction::new(&k, parse_order("1,4,6,2,3,5,7..16").unwrap()).unwrap();
    assert_eq!(critical_point_counts(&k, &f, 2).unwrap().total, 20);
    assert!(!is_perfect(&k, &f, 2).unwrap());
}

#[test]
fn poincare_relation_and_morse_inequalities() {
    for c in [kummer_k4_16(), k3_16()] {
        let chi = c.euler_characteristic();
        for p in [2, 3] {
            let b = betti_numbers(&c, p).unwrap();
            for f in random_orders(&c, 5 + p, 6) {
                let prof = critical_point_counts(&c, &f, p).unwrap();
                assert_eq!(prof.alternating_sum(), chi);
                assert!(prof.mu.iter().zip(&b).all(|(m, b)| m >= b));
            }
        }
    }
}

#[test]
fn duality_holds_on_k3_and_fails_on_kummer() {
    let t = k3_16();
    for f in random_orders(&t, 1, 20) {
        let up = critical_point_counts(&t, &f, 2).unwrap();
        let down = critical_point_counts(&t, &f.reversed(), 2).unwrap();
        for (v, m) in &up.vectors {
            let (_, n) = down.vectors.iter().find(|(u, _)| u == v).unwrap();
            assert_eq!(m.iter().rev().collect::<Vec<_>>(), n.iter().collect::<Vec<_>>());
        }
    }
    let k = kummer_k4_16();
    let f = RslFunction::ascending(&k);
    let up = critical_point_counts(&k, &f, 2).unwrap();
    let down = critical_point_counts(&k, &f.reversed(), 2).unwrap();
    let mut rev = up.mu.clone();
    rev.reverse();
    assert_ne!(rev, down.mu);
}

#[test]
fn antipodal_symmetry_of_k3() {
    let t = k3_16();
    let p = Permutation::parse_cycles("(1,16)(2,15)(3,14)(4,13)(5,12)(6,11)(7,10)(8,9)", 16).unwrap();
    assert!(p.is_automorphism_of(&t));
}

fn torsion_1(c: &SimplicialComplex) -> (usize, Vec<BigInt>) {
    let h = homology(c);
    (h.betti[1], h.torsion[1].clone())
}

fn z(n: i64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn middle_slicings_are_three_tori() {
    for c in [kummer_k4_16(), k3_16()] {
        let f = RslFunction::ascending(&c);
        let s = slicing(&c, &f, 0.5).unwrap();
        let h = homology(&s.complex);
        assert_eq!(h.betti, vec![1, 3, 3, 1]);
        assert!(h.is_torsion_free());
        assert!(orient(&s.complex).is_ok());
    }
}

#[test]
fn k3_slicings() {
    let t = k3_16();
    let f = RslFunction::ascending(&t);
    let rp3 = slicing(&t, &f, 7.0 / 30.0).unwrap();
    assert_eq!(rp3.below, (1..=4).collect());
    assert_eq!(torsion_1(&rp3.complex), (0, vec![z(2)]));
    assert_eq!(torsion_1(&slicing_below(&t, 1..=5).unwrap().complex), (0, vec![z(4)]));
    assert_eq!(torsion_1(&slicing_below(&t, 2..=6).unwrap().complex), (0, vec![z(2)]));
    assert_eq!(torsion_1(&slicing_below(&t, [1, 2, 3, 5, 6]).unwrap().complex), (0, vec![z(3)]));
    assert_eq!(torsion_1(&slicing_below(&t, 2..=7).unwrap().complex), (0, vec![z(2), z(2)]));
    let sigma = slicing_below(&t, 1..=7).unwrap();
    assert_eq!(homology(&sigma.complex).betti, vec![1, 0, 0, 1]);
    assert!(homology(&sigma.complex).is_torsion_free());
    let (_, v) = identify_slicing(&sigma, &AnnealSchedule::for_dim(3).with_seed(1).with_budget(20_000, 10));
    assert_eq!(v, SliceVerdict::HomologySphere);
}

#[test]
fn small_slicings_of_k3_are_spheres() {
    let t = k3_16();
    let sched = AnnealSchedule::for_dim(3).with_seed(2);
    for below in [vec![1], vec![1, 2], vec![1, 2, 3], vec![2, 3, 4, 5], vec![7, 11, 14]] {
        let s = slicing_below(&t, below).unwrap();
        assert_eq!(identify_slicing(&s, &sched).1, SliceVerdict::Sphere);
    }
}

#[test]
fn lens_slicing_is_identified() {
    let t = k3_16();
    let s = slicing_below(&t, 1..=5).unwrap();
    let (_, v) = identify_slicing(&s, &AnnealSchedule::for_dim(3).with_seed(3));
    assert_eq!(v, SliceVerdict::Matched("L(4,1)"));
}

#[test]
fn kummer_slicings() {
    let k = kummer_k4_16();
    let expect = [(0, vec![z(2)]), (0, vec![z(2), z(2)]), (0, vec![z(2), z(2), z(2)]), (1, vec![z(2), z(2)])];
    for (n, e) in expect.into_iter().enumerate() {
        let s = slicing_below(&k, 1..=(n as Vertex + 1)).unwrap();
        assert_eq!(torsion_1(&s.complex), e);
    }
}

#[test]
fn slicings_of_k3_are_connected_orientable() {
    let t = k3_16();
    for f in random_orders(&t, 9, 8) {
        let mut prev: Option<SimplicialComplex> = None;
        for k in 1..16 {
            let s = slicing(&t, &f, (k as f64 - 0.5) / 15.0).unwrap();
            assert!(s.complex.is_strongly_connected());
            assert_eq!(s.complex.euler_characteristic(), 0);
            assert!(orient(&s.complex).is_ok());
            let again = slicing(&t, &f, (k as f64 - 0.2) / 15.0).unwrap();
            assert_eq!(again.complex, s.complex);
            prev = Some(s.complex);
        }
        assert!(prev.is_some());
    }
}
