//! The ten acceptance criteria, one line each. Runs without the test
//! harness so the lines are always printed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use k3blowup::algebra::{betti_numbers, check_snf, e8, form_invariants, homology, hyperbolic, smith_normal_form, IntegerMatrix, Parity};
use k3blowup::blowup::{check_step, replay_manifest, singular_vertices, Manifest, StepInvariants};
use k3blowup::complex::{automorphism_group_order, binomial, find_isomorphism, simplex_boundary, SimplicialComplex, Vertex};
use k3blowup::construction::{
    antipodal_quotient, build_s3_cs, group_order, hopf_cylinder, k3_16, kummer_k4_16, reference_c, reference_k3_17, K3_GENERATORS,
    KUMMER_GENERATORS,
};
use k3blowup::fixtures;
use k3blowup::flip::{apply_flip, first_success, is_standard_sphere, reduce, reduce_bounded, AnnealSchedule, FlipState, SphereVerdict};
use k3blowup::intersection::{intersection_form, orient};
use k3blowup::morse::{critical_point_counts, identify_slicing, parse_order, slicing, slicing_below, RslFunction, SliceVerdict};

type Check = Result<String, String>;

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn ranks(c: &SimplicialComplex) -> (Vec<usize>, Vec<Vec<BigInt>>) {
    let h = homology(c);
    (h.betti, h.torsion)
}

fn z(n: i64) -> BigInt {
    BigInt::from(n)
}

fn orbit_construction() -> Check {
    let k = kummer_k4_16();
    ensure(k.num_facets() == 192 && k.f_vector().0 == [16, 120, 400, 480, 192], format!("K4 f={}", k.f_vector()))?;
    ensure(group_order(16, &KUMMER_GENERATORS).unwrap() == 1920, "Kummer group order")?;
    ensure(k.neighborliness() == 2, "K4 neighborliness")?;
    let t = k3_16();
    ensure(t.num_facets() == 288 && t.f_vector().0 == [16, 120, 560, 720, 288], format!("K3 f={}", t.f_vector()))?;
    ensure(group_order(16, &K3_GENERATORS).unwrap() == 240, "K3 group order")?;
    ensure(t.neighborliness() == 3, "K3 neighborliness")?;
    Ok("f-vectors, group orders 1920/240, 2- and 3-neighborly".into())
}

fn homology_groups() -> Check {
    let k = ranks(&kummer_k4_16());
    ensure(k == (vec![1, 0, 6, 0, 1], vec![vec![], vec![], vec![z(2); 5], vec![], vec![]]), format!("K4 {k:?}"))?;
    let k3 = (vec![1, 0, 22, 0, 1], vec![vec![]; 5]);
    ensure(ranks(&k3_16()) == k3, "K3_16 homology")?;
    ensure(ranks(&reference_k3_17().unwrap()) == k3, "K3_17 homology")?;
    ensure(betti_numbers(&kummer_k4_16(), 2).unwrap() == [1, 0, 11, 5, 1], "K4 F_2 Betti numbers")?;
    Ok("H(K4) = (Z,0,Z^6+(Z_2)^5,0,Z), H(K3_16) = H(K3_17) = (Z,0,Z^22,0,Z)".into())
}

fn intersection_forms() -> Check {
    let k = kummer_k4_16();
    let q = intersection_form(&k, &orient(&k).unwrap()).unwrap();
    ensure((q.rank, q.signature, q.parity) == (6, 0, Parity::Even), format!("K4 {q:?}"))?;
    let t = reference_k3_17().unwrap();
    let q = intersection_form(&t, &orient(&t).unwrap()).unwrap();
    ensure((q.rank, q.signature.abs(), q.parity) == (22, 16, Parity::Even), "K3_17 form")?;
    let f = form_invariants(&e8()).unwrap();
    ensure((f.rank, f.signature, f.parity) == (8, 8, Parity::Even), "E8")?;
    let big = e8().direct_sum(&e8()).direct_sum(&hyperbolic()).direct_sum(&hyperbolic()).direct_sum(&hyperbolic());
    let f = form_invariants(&big).unwrap();
    ensure((f.rank, f.signature, f.parity) == (22, 16, Parity::Even), "E8+E8+3H")?;
    Ok(format!("K4 (6,0,even), K3_17 (22,{},even), E8, E8+E8+3H", q.signature))
}

fn mapping_cylinder() -> Check {
    let s = build_s3_cs();
    ensure(s.num_facets() == 216, "S3_cs facets")?;
    ensure(automorphism_group_order(&s) == 144, "S3_cs automorphisms")?;
    ensure(find_isomorphism(&reduce(&s, &AnnealSchedule::for_dim(3).with_seed(1)).complex, &simplex_boundary(5)).is_some(), "S3_cs reduction")?;
    let rp3 = antipodal_quotient();
    ensure(rp3.num_vertices() == 24, "RP^3 vertices")?;
    ensure(ranks(&rp3) == (vec![1, 0, 0, 1], vec![vec![], vec![z(2)], vec![], vec![]]), "RP^3 homology")?;
    let cyl = hopf_cylinder();
    ensure(cyl.euler_characteristic() == 2, "cylinder chi")?;
    ensure(ranks(&cyl) == (vec![1, 0, 1, 0, 0], vec![vec![]; 5]), "cylinder homology")?;
    let c = reference_c().unwrap();
    let hit = first_success(1, 10, 1, |seed| {
        let r = reduce_bounded(&cyl, Some(&c), &AnnealSchedule::for_dim(4).with_seed(seed))?;
        r.iso.map(|_| r.complex)
    });
    let (seed, reduced) = hit.ok_or("no seed in 1..=10 reached C")?;
    ensure(find_isomorphism(&reduced, &c).is_some(), "result not isomorphic to C")?;
    ensure(reduced.boundary().unwrap().f_vector().0 == [11, 51, 80, 40], "boundary f-vector")?;
    Ok(format!("cylinder f={} reduced to C with seed {seed}", cyl.f_vector()))
}

fn resolution_replay() -> Check {
    let path = fixtures::fixture_dir().join("resolution/manifest.txt");
    let m = Manifest::load(&path).map_err(|e| e.to_string())?;
    let sched = AnnealSchedule::for_dim(4).with_seed(1);
    let mut prev = m.initial.clone();
    let mut problems = Vec::new();
    let mut b2_mod2 = vec![prev.b2_mod2];
    let fin = replay_manifest(&kummer_k4_16(), &m, &mut |step, c| {
        let inv = StepInvariants::of(c, &sched).expect("orientable");
        if let Err(e) = check_step(&prev, &inv, step) {
            problems.push(e.to_string());
        }
        if inv != m.steps[step - 1].invariants {
            problems.push(format!("step {step}: invariants differ from the manifest"));
        }
        b2_mod2.push(inv.b2_mod2);
        prev = inv;
    })
    .map_err(|e| e.to_string())?;
    ensure(problems.is_empty(), problems.join("; "))?;
    ensure(fin.is_closed_pseudomanifold() && fin.euler_characteristic() == 24, "final chi")?;
    let sing = singular_vertices(&fin, &sched);
    ensure(sing.singular.is_empty() && sing.unknown.is_empty(), format!("singular vertices {sing:?}"))?;
    ensure(ranks(&fin) == (vec![1, 0, 22, 0, 1], vec![vec![]; 5]), "final homology")?;
    let q = intersection_form(&fin, &orient(&fin).unwrap()).unwrap();
    ensure((q.rank, q.signature.abs(), q.parity) == (22, 16, Parity::Even), "final form")?;
    Ok(format!("16 steps replayed, final f={}, F_2 b2 {:?}", fin.f_vector(), b2_mod2))
}

fn table_one() -> Check {
    let t = reference_k3_17().unwrap();
    let sched = AnnealSchedule::for_dim(3).with_seed(1);
    let spheres = t.vertices().into_iter().filter(|&v| is_standard_sphere(&t.vertex_link(v).unwrap(), &sched) == SphereVerdict::Yes).count();
    ensure(spheres == 17, format!("{spheres}/17 links recognized"))?;
    let f1 = t.f_vector().0[1];
    ensure(f1 == 135 && (f1 as u128) < binomial(17, 2), "f_1")?;
    Ok("17/17 links are 3-spheres, f_1 = 135 < 136".into())
}

fn column(c: &SimplicialComplex, order: &str) -> Vec<(Vertex, Vec<usize>)> {
    let f = RslFunction::new(c, parse_order(order).unwrap()).unwrap();
    critical_point_counts(c, &f, 2).unwrap().vectors
}

fn k3_column(order: &str, labels: &str, mid: [usize; 16]) -> Result<(), String> {
    let got = column(&k3_16(), order);
    let labels = parse_order(labels).unwrap();
    for (k, (v, m)) in got.iter().enumerate() {
        let want = match k {
            0 => vec![1, 0, 0, 0, 0],
            15 => vec![0, 0, 0, 0, 1],
            _ => vec![0, 0, mid[k], 0, 0],
        };
        ensure(*v == labels[k] && *m == want, format!("{order}: row {k} vertex {v} {m:?}"))?;
    }
    Ok(())
}

fn morse_tables() -> Check {
    k3_column("1..5,7,6,8,9,11,10,12..16", "1..5,7,6,8,9,11,10,12..16", [0, 0, 0, 1, 2, 3, 2, 3, 3, 2, 3, 2, 1, 0, 0, 0])?;
    k3_column("2..7,1,8,9,16,10..15", "2..7,1,8,9,16,10..15", [0, 0, 0, 0, 1, 3, 4, 3, 3, 4, 3, 1, 0, 0, 0, 0])?;
    k3_column("1,2,3,5,6,4,7,8,9,10,13,11,12,14,15,16", "1,2,3,5,6,4,7,8,9,10,13,11,12,14,15,16", [0, 0, 0, 1, 1, 2, 4, 3, 3, 4, 2, 1, 1, 0, 0, 0])?;
    let k = kummer_k4_16();
    let a = column(&k, "1..16");
    let total = |c: &[(Vertex, Vec<usize>)]| c.iter().flat_map(|(_, m)| m).sum::<usize>();
    ensure(total(&a) == 18 && a[7].1 == [0, 0, 1, 1, 0] && a[15].1 == [0, 0, 1, 1, 1], "Kummer first column")?;
    let b = column(&k, "1,4,6,2,3,5,7..16");
    ensure(total(&b) == 20 && b[2] == (6, vec![0, 1, 0, 0, 0]), "Kummer second column")?;
    ensure(a[6..] == b[6..], "Kummer columns agree above level 6/15")?;
    Ok("three K3 columns, Kummer totals 18 and 20 with mu_1 = 1 at vertex 6".into())
}

fn perfectness() -> Check {
    let t = k3_16();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let mut o = t.vertices();
        o.shuffle(&mut rng);
        let f = RslFunction::new(&t, o).unwrap();
        let p = critical_point_counts(&t, &f, 2).unwrap();
        ensure(p.mu == [1, 0, 22, 0, 1], format!("mu = {:?} for {:?}", p.mu, f.order()))?;
        ensure(p.alternating_sum() == 24, "Poincare relation on K3")?;
    }
    let mut tested = 100;
    for c in [kummer_k4_16(), t.clone(), reference_k3_17().unwrap()] {
        for p in [2, 3, 5] {
            for _ in 0..5 {
                let mut o = c.vertices();
                o.shuffle(&mut rng);
                let f = RslFunction::new(&c, o).unwrap();
                ensure(critical_point_counts(&c, &f, p).unwrap().alternating_sum() == c.euler_characteristic(), "Poincare relation")?;
                tested += 1;
            }
        }
    }
    Ok(format!("100 random orders perfect, Poincare relation on {tested} (complex, order, field) triples"))
}

fn slicings() -> Check {
    let torus = (vec![1, 3, 3, 1], vec![vec![]; 4]);
    for c in [kummer_k4_16(), k3_16()] {
        let s = slicing(&c, &RslFunction::ascending(&c), 0.5).map_err(|e| e.to_string())?;
        ensure(orient(&s.complex).is_ok(), "middle slicing orientable")?;
        ensure(ranks(&s.complex) == torus, "middle slicing homology")?;
    }
    let t = k3_16();
    let h1 = |c: &SimplicialComplex, below: Vec<Vertex>| {
        let h = homology(&slicing_below(c, below).unwrap().complex);
        (h.betti[1], h.torsion[1].clone())
    };
    ensure(h1(&t, (1..=4).collect()) == (0, vec![z(2)]), "{1..4}")?;
    ensure(h1(&t, (1..=5).collect()) == (0, vec![z(4)]), "{1..5}")?;
    let sigma = slicing_below(&t, 1..=7).unwrap();
    let sched = AnnealSchedule::for_dim(3).with_seed(1).with_budget(20_000, 10);
    let (h, v) = identify_slicing(&sigma, &sched);
    ensure(h.betti == [1, 0, 0, 1] && h.is_torsion_free() && v == SliceVerdict::HomologySphere, format!("{{1..7}}: {v}"))?;
    let k = kummer_k4_16();
    let expect = [(0, vec![z(2)]), (0, vec![z(2), z(2)]), (0, vec![z(2); 3]), (1, vec![z(2), z(2)])];
    for (n, e) in expect.into_iter().enumerate() {
        ensure(h1(&k, (1..=n as Vertex + 1).collect()) == e, format!("Kummer {} below", n + 1))?;
    }
    let (_, lens) = identify_slicing(&slicing_below(&t, 1..=5).unwrap(), &AnnealSchedule::for_dim(3).with_seed(3));
    Ok(format!("T^3 in the middle, Z_2, Z_4, homology sphere; Kummer H_1 as expected; {{1..5}} identified as {lens}"))
}

fn random_flip_suite(c: &SimplicialComplex, seed: u64) -> Result<(), String> {
    let mut st = FlipState::new(c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (chi, h) = (c.euler_characteristic(), homology(c));
    let d = c.dim();
    for k in 0..200 {
        let i = rng.gen_range(0..=d);
        let Some(f) = st.random_flip(i, None, &mut rng) else { continue };
        let before = st.to_complex();
        let after = apply_flip(&before, &f).map_err(|e| e.to_string())?;
        ensure(apply_flip(&after, &f.reverse()).map_err(|e| e.to_string())? == before, "flip then reverse is not the identity")?;
        st.apply(&f).map_err(|e| e.to_string())?;
        ensure(after.euler_characteristic() == chi, "chi changed")?;
        if k % 50 == 49 {
            ensure(homology(&after) == h, "homology changed")?;
            if d == 4 {
                let o = orient(&after).map_err(|e| e.to_string())?;
                ensure(o.is_coherent(&after), "orientation not coherent")?;
            }
        }
    }
    Ok(())
}

fn property_suites() -> Check {
    for (n, c) in [kummer_k4_16(), k3_16(), reference_k3_17().unwrap()].iter().enumerate() {
        random_flip_suite(c, 40 + n as u64)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let (r, c) = (rng.gen_range(1..7), rng.gen_range(1..7));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-6..=6)).collect()).collect();
        let a = IntegerMatrix::from_rows(&rows);
        let s = smith_normal_form(&a);
        ensure(check_snf(&a, &s.d, &s.u, &s.v), "SNF re-multiplication")?;
    }
    let t = k3_16();
    let mut count = 0;
    for seed in 0..5 {
        let mut o = t.vertices();
        o.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let f = RslFunction::new(&t, o).unwrap();
        for k in 1..16 {
            let s = slicing(&t, &f, (k as f64 - 0.5) / 15.0).map_err(|e| e.to_string())?;
            ensure(s.complex.is_closed_pseudomanifold(), "slicing not closed")?;
            count += 1;
        }
    }
    Ok(format!("200 random flips on 3 fixtures, 30 SNF checks, {count} closed slicings"))
}

fn main() {
    let criteria: [(&str, fn() -> Check, u64); 10] = [
        ("orbit construction", orbit_construction, 5),
        ("homology", homology_groups, 60),
        ("intersection forms", intersection_forms, 120),
        ("mapping cylinder pipeline", mapping_cylinder, 600),
        ("resolution replay", resolution_replay, 1800),
        ("17-vertex K3", table_one, 600),
        ("Morse tables", morse_tables, 300),
        ("perfectness", perfectness, 600),
        ("slicings", slicings, 900),
        ("property suites", property_suites, 600),
    ];
    let mut failed = 0;
    for (k, (name, f, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let out = match out {
            Ok(_) if took > Duration::from_secs(limit) => Err(format!("took {took:.1?}, limit {limit}s")),
            o => o,
        };
        match out {
            Ok(msg) => println!("criterion {:2} PASS {name}: {msg} [{took:.1?}]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:2} FAIL {name}: {msg} [{took:.1?}]", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
