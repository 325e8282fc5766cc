//! Simplicial blowups of singular vertices and the resolution of all
//! singularities of a 4-pseudomanifold.
//!
//! A blowup removes the open star of a vertex whose link is a real
//! projective 3-space, retriangulates the new boundary until it is
//! isomorphic to the boundary of the bounded complex `C`, and glues in `C`.

mod manifest;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{betti_numbers, homology, HomologyProfile};
use crate::complex::{for_each_isomorphism, Isomorphism, NamingTable, Simplex, SimplicialComplex, Vertex};
use crate::construction::reference_c;
use crate::flip::{is_standard_sphere, reduce_to, retriangulate_boundary, AnnealSchedule, FlipLog, SphereVerdict};
use crate::intersection::{intersection_form, orient, FormError};

pub use manifest::{replay_manifest, Manifest, ManifestError, StepRecord};

/// Default vertex ceiling for the reduction after each blowup.
pub const VERTEX_CEILING: usize = 24;

#[derive(Debug, Error)]
pub enum BlowupError {
    #[error("vertex {0} is not in the complex")]
    NoSuchVertex(Vertex),
    #[error("link of vertex {0} is not a real projective 3-space")]
    NotProjective(Vertex),
    #[error("retriangulation of the link of {vertex} failed within budget")]
    Retriangulation { vertex: Vertex, log: Box<FlipLog> },
    #[error("gluing along the link of {0} did not give a closed pseudomanifold")]
    Gluing(Vertex),
    #[error("edge {0} does not have a 2-sphere link")]
    EdgeLink(Simplex),
    #[error("step {step}: {what}")]
    Invariant { step: usize, what: String },
    #[error("no orientation of step {step} satisfies the signature rule")]
    Orientation { step: usize },
    #[error("pattern has {found} signs, need {expected}")]
    Pattern { expected: usize, found: usize },
    #[error(transparent)]
    Form(#[from] FormError),
}

/// Orientation of the glued copy of `C` relative to the complex it is glued
/// into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn other(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            _ => Err(format!("expected + or -, got {s:?}")),
        }
    }
}

/// Parses a string such as `++++-+--` into signs.
pub fn parse_pattern(s: &str) -> Result<Vec<Sign>, String> {
    s.chars().map(|c| c.to_string().parse()).collect()
}

/// Vertices whose links are not recognized as spheres.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SingularSet {
    pub singular: Vec<Vertex>,
    /// Sphere homology, but not reduced to the boundary of a simplex.
    pub unknown: Vec<Vertex>,
}

fn projective_homology() -> HomologyProfile {
    let two = num_bigint::BigInt::from(2);
    HomologyProfile { betti: vec![1, 0, 0, 1], torsion: vec![vec![], vec![two], vec![], vec![]] }
}

/// Checks that every edge link of a 4-complex is a 2-sphere.
pub fn check_edge_links(c: &SimplicialComplex) -> Result<(), BlowupError> {
    for e in c.faces_of_size(2) {
        let lk = c.link(&e).map_err(|_| BlowupError::EdgeLink(e.clone()))?;
        if !lk.is_closed_pseudomanifold() || lk.euler_characteristic() != 2 || !lk.is_strongly_connected() {
            return Err(BlowupError::EdgeLink(e));
        }
    }
    Ok(())
}

/// Vertices whose link is not a standard sphere. Links with the homology of
/// a real projective 3-space are singular without further search.
pub fn singular_vertices(c: &SimplicialComplex, sched: &AnnealSchedule) -> SingularSet {
    let rp3 = projective_homology();
    let verdicts: Vec<(Vertex, SphereVerdict)> = c
        .vertices()
        .into_par_iter()
        .map(|v| {
            let lk = c.vertex_link(v).expect("vertex of c");
            if homology(&lk) == rp3 {
                return (v, SphereVerdict::No);
            }
            (v, is_standard_sphere(&lk, sched))
        })
        .collect();
    let mut out = SingularSet::default();
    for (v, verdict) in verdicts {
        match verdict {
            SphereVerdict::Yes => {}
            SphereVerdict::No => out.singular.push(v),
            SphereVerdict::Unknown => out.unknown.push(v),
        }
    }
    out
}

/// The bounded complex `C` with the data needed for gluing.
pub(crate) struct Piece {
    pub c: SimplicialComplex,
    pub boundary: SimplicialComplex,
    /// Induced orientation sign of each boundary facet of `C`.
    pub boundary_sign: std::collections::BTreeMap<Simplex, i8>,
    /// Automorphisms of the boundary with their orientation characters.
    pub automorphisms: Vec<(Isomorphism, i8)>,
    /// Faces of `C` not on its boundary.
    pub interior: Vec<Simplex>,
}

/// Sign of the permutation sorting `v`.
fn parity(v: &[Vertex]) -> i8 {
    let mut s = 1;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                s = -s;
            }
        }
    }
    s
}

/// Induced orientation of the boundary facets of an oriented bounded complex.
fn boundary_signs(c: &SimplicialComplex) -> Result<std::collections::BTreeMap<Simplex, i8>, FormError> {
    let o = orient(c)?;
    let degrees = c.ridge_degrees();
    let mut out = std::collections::BTreeMap::new();
    for (f, &s) in c.facets().iter().zip(&o.signs) {
        for (pos, r) in f.facets().enumerate() {
            if degrees[&r] == 1 {
                out.insert(r, s * if pos % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    Ok(out)
}

/// Orientation character of `iso: a -> b` for oriented closed complexes.
fn character(a: &std::collections::BTreeMap<Simplex, i8>, b: &std::collections::BTreeMap<Simplex, i8>, iso: &Isomorphism) -> i8 {
    let (f, &s) = a.iter().next().expect("nonempty boundary");
    let img: Vec<Vertex> = f.vertices().iter().map(|v| iso[v]).collect();
    let t = Simplex::new(img.iter().copied()).expect("injective");
    s * parity(&img) * b[&t]
}

pub(crate) fn piece() -> &'static Piece {
    static PIECE: OnceLock<Piece> = OnceLock::new();
    PIECE.get_or_init(|| {
        let c = reference_c().expect("shipped data is intact");
        let boundary = c.boundary().expect("C has a boundary");
        let boundary_sign = boundary_signs(&c).expect("C is orientable");
        let mut automorphisms = Vec::new();
        for_each_isomorphism(&boundary, &boundary, |iso| {
            automorphisms.push((iso.clone(), character(&boundary_sign, &boundary_sign, iso)));
            true
        });
        let bd_faces = boundary.face_set();
        let mut interior: Vec<Simplex> = c.face_set().into_iter().filter(|s| !bd_faces.contains(s)).collect();
        interior.sort();
        Piece { c, boundary, boundary_sign, automorphisms, interior }
    })
}

/// How `C` was attached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gluing {
    /// Boundary vertices identified directly.
    Direct,
    /// Through a collar `dC x [0,1]`, because a direct identification would
    /// merge interior faces of `C` with faces already present.
    Collar,
}

impl fmt::Display for Gluing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gluing::Direct => "direct",
            Gluing::Collar => "collar",
        })
    }
}

impl FromStr for Gluing {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "direct" => Ok(Gluing::Direct),
            "collar" => Ok(Gluing::Collar),
            _ => Err(format!("unknown gluing {s:?}")),
        }
    }
}

/// A complex with the open star of `vertex` removed and its boundary made
/// isomorphic to the boundary of `C`.
#[derive(Clone, Debug)]
pub struct Prepared {
    pub vertex: Vertex,
    pub complex: SimplicialComplex,
    /// Some isomorphism from the boundary of `complex` to the boundary of `C`.
    pub psi: Isomorphism,
    pub log: FlipLog,
}

/// Removes the open star of `v` and retriangulates the boundary.
pub fn prepare(m: &SimplicialComplex, v: Vertex, sched: &AnnealSchedule) -> Result<Prepared, BlowupError> {
    let lk = m.vertex_link(v).map_err(|_| BlowupError::NoSuchVertex(v))?;
    if homology(&lk) != projective_homology() {
        return Err(BlowupError::NotProjective(v));
    }
    let mb = m.delete_vertex_star(v).map_err(|_| BlowupError::NoSuchVertex(v))?;
    let r = retriangulate_boundary(&mb, &piece().boundary, sched);
    match r.iso {
        Some(psi) => Ok(Prepared { vertex: v, complex: r.complex, psi, log: r.log }),
        None => Err(BlowupError::Retriangulation { vertex: v, log: Box::new(r.log) }),
    }
}

/// The candidate isomorphisms of the requested sign, in a fixed order.
fn candidates(p: &Prepared, sign: Sign) -> Result<Vec<Isomorphism>, BlowupError> {
    let pc = piece();
    let bd_sign = boundary_signs(&p.complex)?;
    let base = character(&bd_sign, &pc.boundary_sign, &p.psi);
    // compatible orientations induce opposite boundary orientations
    let want = -(sign.value() as i8);
    Ok(pc
        .automorphisms
        .iter()
        .filter(|(_, ch)| base * ch == want)
        .map(|(a, _)| p.psi.iter().map(|(&x, y)| (x, a[y])).collect())
        .collect())
}

/// Glues `C` onto a prepared complex along `psi`. Returns `None` when a
/// direct gluing would identify interior faces of `C` with existing faces.
fn glue_with(p: &Prepared, psi: &Isomorphism, gluing: Gluing) -> Option<SimplicialComplex> {
    let pc = piece();
    let inv: Isomorphism = psi.iter().map(|(&x, &y)| (y, x)).collect();
    let base = p.complex.max_label();
    let mut names: NamingTable = p.complex.names().clone();
    let mut facets: Vec<Simplex> = p.complex.facets().to_vec();
    match gluing {
        Gluing::Direct => {
            let lbl = |x: Vertex| inv.get(&x).copied().unwrap_or(base + x);
            let faces = p.complex.face_set();
            if pc.interior.iter().any(|s| faces.contains(&s.map(lbl).expect("injective"))) {
                return None;
            }
            for x in pc.c.vertices().into_iter().filter(|x| !inv.contains_key(x)) {
                names.insert(base + x, format!("c{}_{x}", p.vertex));
            }
            facets.extend(pc.c.facets().iter().map(|f| f.map(lbl).expect("injective")));
        }
        Gluing::Collar => {
            for x in pc.c.vertices() {
                names.insert(base + x, format!("c{}_{x}", p.vertex));
            }
            facets.extend(pc.c.facets().iter().map(|f| f.map(|x| base + x).expect("injective")));
            for f in pc.boundary.facets() {
                let v = f.vertices();
                for j in 0..v.len() {
                    let verts = v[..=j].iter().map(|x| inv[x]).chain(v[j..].iter().map(|&x| base + x));
                    facets.push(Simplex::new(verts).expect("disjoint labels"));
                }
            }
        }
    }
    let out = SimplicialComplex::new(facets).ok()?.with_names(names);
    out.is_closed_pseudomanifold().then_some(out)
}

/// Glues `C` with the given orientation, directly if some isomorphism of
/// that sign allows it and through a collar otherwise.
pub fn glue(p: &Prepared, sign: Sign) -> Result<(SimplicialComplex, Isomorphism, Gluing), BlowupError> {
    let cands = candidates(p, sign)?;
    for psi in &cands {
        if let Some(c) = glue_with(p, psi, Gluing::Direct) {
            return Ok((c, psi.clone(), Gluing::Direct));
        }
    }
    let psi = cands.into_iter().next().expect("both orientation classes are nonempty");
    let c = glue_with(p, &psi, Gluing::Collar).ok_or(BlowupError::Gluing(p.vertex))?;
    Ok((c, psi, Gluing::Collar))
}

/// Glues along a recorded isomorphism, as in a replay.
pub fn glue_recorded(p: &Prepared, psi: &Isomorphism, gluing: Gluing) -> Result<SimplicialComplex, BlowupError> {
    glue_with(p, psi, gluing).ok_or(BlowupError::Gluing(p.vertex))
}

/// Invariants recorded after each step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepInvariants {
    pub euler: i64,
    pub singular: usize,
    pub b2: usize,
    pub b2_mod2: usize,
    pub rank: usize,
    pub signature: i64,
    pub even: bool,
}

impl StepInvariants {
    pub fn of(c: &SimplicialComplex, sched: &AnnealSchedule) -> Result<StepInvariants, BlowupError> {
        let h = homology(c);
        let b2_mod2 = betti_numbers(c, 2).expect("2 is prime")[2];
        let q = intersection_form(c, &orient(c)?)?;
        Ok(StepInvariants {
            euler: c.euler_characteristic(),
            singular: singular_vertices(c, sched).singular.len(),
            b2: h.betti[2],
            b2_mod2,
            rank: q.rank,
            signature: q.signature,
            even: q.parity == crate::algebra::Parity::Even,
        })
    }
}

/// One blowup as performed.
#[derive(Clone, Debug)]
pub struct BlowupStep {
    pub vertex: Vertex,
    pub seed: u64,
    pub sign: Sign,
    pub gluing: Gluing,
    pub psi: Isomorphism,
    pub boundary_log: FlipLog,
    pub reduction_log: FlipLog,
    pub invariants: StepInvariants,
    pub hash: String,
}

/// Blows up `v` with the given orientation and reduces the result to at most
/// `ceiling` vertices where the budget allows.
pub fn blowup(
    m: &SimplicialComplex,
    v: Vertex,
    sign: Sign,
    sched: &AnnealSchedule,
    ceiling: usize,
) -> Result<(SimplicialComplex, BlowupStep), BlowupError> {
    let p = prepare(m, v, sched)?;
    finish(m, &p, sign, sched, ceiling)
}

fn finish(
    m: &SimplicialComplex,
    p: &Prepared,
    sign: Sign,
    sched: &AnnealSchedule,
    ceiling: usize,
) -> Result<(SimplicialComplex, BlowupStep), BlowupError> {
    let (glued, psi, gluing) = glue(p, sign)?;
    let red = reduce_to(&glued, &reduction_schedule(sched), ceiling);
    let out = carry_names(&red.complex, m.names(), glued.names());
    let invariants = StepInvariants::of(&out, sched)?;
    let step = BlowupStep {
        vertex: p.vertex,
        seed: sched.seed,
        sign,
        gluing,
        psi,
        boundary_log: p.log.clone(),
        reduction_log: red.log,
        invariants,
        hash: out.hash(),
    };
    Ok((out, step))
}

/// Glued complexes sit in deep local minima; the default relaxation leaves
/// them well above the ceiling.
fn reduction_schedule(sched: &AnnealSchedule) -> AnnealSchedule {
    let mut s = sched.clone();
    s.relax_rounds = s.relax_rounds.max(200);
    s.budget_rounds = s.budget_rounds.max(200);
    s.budget_flips = s.budget_flips.max(2_000_000);
    s
}

/// Keeps the names of vertices that survive.
pub(crate) fn carry_names(c: &SimplicialComplex, a: &NamingTable, b: &NamingTable) -> SimplicialComplex {
    let verts = c.vertices();
    let names: NamingTable = a
        .iter()
        .chain(b)
        .filter(|(v, _)| verts.binary_search(v).is_ok())
        .map(|(&v, n)| (v, n.clone()))
        .collect();
    c.clone().with_names(names)
}

/// Options for a full resolution.
#[derive(Clone, Debug)]
pub struct ResolveOptions {
    pub sched: AnnealSchedule,
    pub ceiling: usize,
    /// Resolution order; ascending labels when empty.
    pub order: Vec<Vertex>,
    /// Seeds tried per step before giving up.
    pub attempts: u64,
}

impl ResolveOptions {
    pub fn new(sched: AnnealSchedule) -> Self {
        ResolveOptions { sched, ceiling: VERTEX_CEILING, order: Vec::new(), attempts: 8 }
    }
}

/// A finished or partial resolution.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub input_hash: String,
    pub initial: StepInvariants,
    pub complex: SimplicialComplex,
    pub steps: Vec<BlowupStep>,
}

/// The step-to-step assertions: singular count down by one, Euler
/// characteristic and rational second Betti number up by one, signature rule.
pub fn check_step(prev: &StepInvariants, next: &StepInvariants, step: usize) -> Result<(), BlowupError> {
    let fail = |what: String| Err(BlowupError::Invariant { step, what });
    if next.singular + 1 != prev.singular {
        return fail(format!("singular count {} -> {}", prev.singular, next.singular));
    }
    if next.euler != prev.euler + 1 {
        return fail(format!("Euler characteristic {} -> {}", prev.euler, next.euler));
    }
    if next.b2 != prev.b2 + 1 {
        return fail(format!("second Betti number {} -> {}", prev.b2, next.b2));
    }
    if next.b2_mod2 < prev.b2_mod2 {
        return fail(format!("second Betti number mod 2 {} -> {}", prev.b2_mod2, next.b2_mod2));
    }
    Ok(())
}

/// Blows up every singular vertex. The signed running signature `s` follows
/// `pattern`: step `k` must reach `|sig| = |s + pattern[k]|`. With `s = 0`
/// both orientations qualify and `+` is taken.
pub fn resolve_all(m: &SimplicialComplex, pattern: &[Sign], opts: &ResolveOptions) -> Result<Resolution, (Resolution, BlowupError)> {
    resolve_with(m, pattern, opts, &mut |_, _| {})
}

/// As [`resolve_all`], reporting the partial resolution after each step.
pub fn resolve_with(
    m: &SimplicialComplex,
    pattern: &[Sign],
    opts: &ResolveOptions,
    progress: &mut dyn FnMut(usize, &Resolution),
) -> Result<Resolution, (Resolution, BlowupError)> {
    let initial = match StepInvariants::of(m, &opts.sched) {
        Ok(i) => i,
        Err(e) => {
            let r = Resolution { input_hash: m.hash(), initial: StepInvariants::empty(), complex: m.clone(), steps: vec![] };
            return Err((r, e));
        }
    };
    let mut res = Resolution { input_hash: m.hash(), initial: initial.clone(), complex: m.clone(), steps: Vec::new() };
    if let Err(e) = check_edge_links(m) {
        return Err((res, e));
    }
    let singular = singular_vertices(m, &opts.sched).singular;
    if pattern.len() != singular.len() {
        return Err((res, BlowupError::Pattern { expected: singular.len(), found: pattern.len() }));
    }
    let order: Vec<Vertex> = if opts.order.is_empty() { singular } else { opts.order.clone() };
    let mut prev = initial;
    let mut running = 0i64;
    for (k, (&v, &want)) in order.iter().zip(pattern).enumerate() {
        let target = (running + want.value()).abs();
        let mut done = None;
        let mut last_err = BlowupError::Orientation { step: k + 1 };
        'seeds: for a in 0..opts.attempts {
            let sched = opts.sched.clone().with_seed(opts.sched.seed.wrapping_add(1000 * k as u64 + a));
            let p = match prepare(&res.complex, v, &sched) {
                Ok(p) => p,
                Err(e) => {
                    last_err = e;
                    continue;
                }
            };
            for sign in [Sign::Plus, Sign::Minus] {
                match finish(&res.complex, &p, sign, &sched, opts.ceiling) {
                    Ok((c, step)) if step.invariants.signature.abs() == target => {
                        if let Err(e) = check_step(&prev, &step.invariants, k + 1) {
                            last_err = e;
                            continue;
                        }
                        done = Some((c, step));
                        break 'seeds;
                    }
                    Ok(_) => {}
                    Err(e) => last_err = e,
                }
            }
        }
        let Some((c, step)) = done else { return Err((res, last_err)) };
        running += want.value();
        prev = step.invariants.clone();
        res.complex = c;
        res.steps.push(step);
        progress(k + 1, &res);
    }
    Ok(res)
}

impl StepInvariants {
    fn empty() -> Self {
        StepInvariants { euler: 0, singular: 0, b2: 0, b2_mod2: 0, rank: 0, signature: 0, even: true }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::simplex_boundary;
    use crate::construction::{kummer_k4_16, reference_k3_17};

    #[test]
    fn piece_data() {
        let p = piece();
        assert_eq!(p.automorphisms.len(), 48);
        assert_eq!(p.automorphisms.iter().filter(|(_, c)| *c == -1).count(), 24);
        assert_eq!(p.interior.len(), 27 + 55 + 30);
    }

    #[test]
    fn singular_sets() {
        let sched = AnnealSchedule::for_dim(3);
        assert_eq!(singular_vertices(&kummer_k4_16(), &sched).singular, (1..=16).collect::<Vec<_>>());
        assert_eq!(singular_vertices(&reference_k3_17().unwrap(), &sched), SingularSet::default());
        assert_eq!(singular_vertices(&simplex_boundary(6), &sched), SingularSet::default());
    }

    #[test]
    fn pattern_parsing() {
        assert_eq!(parse_pattern("+-").unwrap(), vec![Sign::Plus, Sign::Minus]);
        assert!(parse_pattern("+x").is_err());
    }

    #[test]
    fn first_blowup_of_kummer() {
        let k = kummer_k4_16();
        let sched = AnnealSchedule::for_dim(4).with_seed(11);
        let before = StepInvariants::of(&k, &sched).unwrap();
        let (c, step) = blowup(&k, 1, Sign::Plus, &sched, VERTEX_CEILING).unwrap();
        assert!(c.is_closed_pseudomanifold());
        check_step(&before, &step.invariants, 1).unwrap();
        assert_eq!(step.invariants.signature.abs(), 1);
    }

    #[test]
    fn collar_gluing_agrees_with_direct() {
        let k = kummer_k4_16();
        let sched = AnnealSchedule::for_dim(4).with_seed(11);
        let p = prepare(&k, 1, &sched).unwrap();
        let psi = candidates(&p, Sign::Plus).unwrap().remove(0);
        let collar = glue_with(&p, &psi, Gluing::Collar).unwrap();
        assert!(collar.is_closed_pseudomanifold());
        assert_eq!(collar.num_vertices(), p.complex.num_vertices() + piece().c.num_vertices());
        let (direct, _, _) = glue(&p, Sign::Plus).unwrap();
        let reduce = |c: &SimplicialComplex| reduce_to(c, &reduction_schedule(&sched), VERTEX_CEILING).complex;
        let a = StepInvariants::of(&reduce(&collar), &sched).unwrap();
        let b = StepInvariants::of(&reduce(&direct), &sched).unwrap();
        assert_eq!((a.euler, a.singular, a.b2, a.b2_mod2), (b.euler, b.singular, b.b2, b.b2_mod2));
        assert_eq!((a.signature.abs(), a.even), (b.signature.abs(), b.even));
    }
}
