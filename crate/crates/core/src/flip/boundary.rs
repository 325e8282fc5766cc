//! Boundary retriangulation of a bounded complex by gluing simplices.
//!
//! A flip `(A, B)` of the boundary is realized by attaching the simplex
//! `A u B` along `A * dB`. This is allowed exactly when `B` is not yet a face
//! of the whole complex; the new boundary is then `dA * B` in place of
//! `A * dB`, and the old complex is a subcomplex of the new one.
//!
//! Longer flip paths are searched on the bare boundary and then replayed with
//! the gluing constraints. A move whose complement `B` is an interior face is
//! unblocked by renaming a vertex `w` of `B` to a fresh label `w'`, realized by
//! gluing the cone `w' * star(w)`.

use std::collections::BTreeMap;

use super::anneal::bistellar_equivalent;
use super::{AnnealSchedule, Flip, FlipError, FlipLog, FlipState, Rename};
use crate::complex::{for_each_isomorphism, Isomorphism, Simplex, SimplicialComplex, Vertex};

/// Unconstrained paths tried before giving up.
const PATH_ATTEMPTS: u64 = 6;

#[derive(Clone, Debug)]
pub struct Retriangulation {
    pub complex: SimplicialComplex,
    /// Boundary of `complex` onto the target, when the search succeeded.
    pub iso: Option<Isomorphism>,
    /// Simplices glued on, in order.
    pub glued: Vec<Simplex>,
    /// The corresponding boundary flips.
    pub log: FlipLog,
    pub exhausted: bool,
}

impl Retriangulation {
    pub fn succeeded(&self) -> bool {
        self.iso.is_some()
    }
}

fn isomorphism(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<Isomorphism> {
    let mut found = None;
    for_each_isomorphism(a, b, |iso| {
        found = Some(iso.clone());
        false
    });
    found
}

/// Exhaustive search over all flip sequences of length at most `depth`.
fn shallow_search(st: &FlipState, target: &SimplicialComplex, tf: &[usize], depth: usize) -> Option<(FlipState, Vec<Flip>, Isomorphism)> {
    if st.f_vector() == tf {
        if let Some(iso) = isomorphism(&st.to_complex(), target) {
            return Some((st.clone(), Vec::new(), iso));
        }
    }
    if depth == 0 {
        return None;
    }
    for f in st.valid_flips() {
        let mut next = st.clone();
        next.apply_unchecked(&f);
        if let Some((end, mut rest, iso)) = shallow_search(&next, target, tf, depth - 1) {
            rest.insert(0, f);
            return Some((end, rest, iso));
        }
    }
    None
}

struct Replay {
    state: FlipState,
    moves: Vec<Flip>,
    renames: Vec<Rename>,
    glued: Vec<Simplex>,
}

/// Replays `moves` under the gluing constraints of `st`. New vertices get the
/// next label `st` allows; blocked complements are freed by renaming.
fn replay_glued(mut st: FlipState, moves: &[Flip]) -> Option<Replay> {
    let mut label: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut out = Replay { state: st.clone(), moves: Vec::new(), renames: Vec::new(), glued: Vec::new() };
    for m in moves {
        let tr = |label: &BTreeMap<Vertex, Vertex>, s: &Simplex| s.map(|v| *label.get(&v).unwrap_or(&v));
        loop {
            let f = if m.index() == 0 {
                Flip { a: tr(&label, &m.a)?, b: Simplex::new([st.fresh_vertex()]).ok()? }
            } else {
                Flip { a: tr(&label, &m.a)?, b: tr(&label, &m.b)? }
            };
            match st.apply(&f) {
                Ok(()) => {
                    if m.index() == 0 {
                        label.insert(m.b.vertices()[0], f.b.vertices()[0]);
                    }
                    out.glued.push(f.a.union(&f.b));
                    out.moves.push(f);
                    break;
                }
                Err(FlipError::ComplementPresent(b)) => {
                    let w = *b.vertices().iter().min_by_key(|&&w| (st.vertex_star(w).count(), w))?;
                    let fresh = st.fresh_vertex();
                    out.glued.extend(st.vertex_star(w).map(|f| f.with(fresh)));
                    st.rename_vertex(w, fresh).ok()?;
                    for v in label.values_mut().filter(|v| **v == w) {
                        *v = fresh;
                    }
                    label.entry(w).or_insert(fresh);
                    out.renames.push(Rename { at: out.moves.len(), old: w, new: fresh });
                }
                Err(_) => return None,
            }
        }
    }
    out.state = st;
    Some(out)
}

/// Glues simplices onto `m` until its boundary is isomorphic to `target`.
///
/// Sequences of up to two flips are found by exhaustive search; longer ones
/// come from unconstrained paths replayed with gluing.
pub fn retriangulate_boundary(m: &SimplicialComplex, target: &SimplicialComplex, sched: &AnnealSchedule) -> Retriangulation {
    let bd = m.boundary().expect("complex has a boundary");
    let start = FlipState::new(&bd).with_forbidden(m).track_gluing();
    let tf = target.f_vector().0;
    let done = |r: Replay, iso: Option<Isomorphism>, exhausted: bool| {
        let complex = SimplicialComplex::new(m.facets().iter().cloned().chain(r.glued.iter().cloned()))
            .expect("gluing keeps the complex pure")
            .with_names(m.names().clone());
        let log = FlipLog {
            initial: bd.hash(),
            final_hash: r.state.to_complex().hash(),
            seed: sched.seed,
            moves: r.moves,
            renames: r.renames,
        };
        Retriangulation { complex, iso, glued: r.glued, log, exhausted }
    };
    if let Some((state, moves, iso)) = shallow_search(&start, target, &tf, 2) {
        let glued = moves.iter().map(|f| f.a.union(&f.b)).collect();
        return done(Replay { state, moves, renames: Vec::new(), glued }, Some(iso), false);
    }
    for k in 0..PATH_ATTEMPTS {
        let seed = sched.seed.wrapping_add(k.wrapping_mul(0x9e37_79b9));
        let Some((log, _)) = bistellar_equivalent(&bd, target, &sched.clone().with_seed(seed)) else { continue };
        let Some(r) = replay_glued(start.clone(), &log.moves) else { continue };
        if let Some(iso) = isomorphism(&r.state.to_complex(), target) {
            return done(r, Some(iso), false);
        }
    }
    done(Replay { state: start, moves: Vec::new(), renames: Vec::new(), glued: Vec::new() }, None, true)
}

/// Replays a retriangulation log on `m`, gluing as the moves go. Checks
/// both hashes against the boundary.
pub fn replay_boundary_log(m: &SimplicialComplex, log: &FlipLog) -> Result<SimplicialComplex, FlipError> {
    let bd = m.boundary().expect("complex has a boundary");
    if bd.hash() != log.initial {
        return Err(FlipError::HashMismatch { which: "initial", expected: log.initial.clone(), found: bd.hash() });
    }
    let mut st = FlipState::new(&bd).with_forbidden(m).track_gluing();
    let mut glued = Vec::new();
    let mut renames = log.renames.iter().peekable();
    let step = |k: usize| move |e| FlipError::Replay { step: k + 1, source: Box::new(e) };
    for (k, f) in log.moves.iter().enumerate() {
        while let Some(r) = renames.next_if(|r| r.at == k) {
            glued.extend(st.vertex_star(r.old).map(|s| s.with(r.new)));
            st.rename_vertex(r.old, r.new).map_err(step(k))?;
        }
        st.apply(f).map_err(step(k))?;
        glued.push(f.a.union(&f.b));
    }
    for r in renames {
        glued.extend(st.vertex_star(r.old).map(|s| s.with(r.new)));
        st.rename_vertex(r.old, r.new).map_err(step(log.moves.len()))?;
    }
    let found = st.to_complex().hash();
    if found != log.final_hash {
        return Err(FlipError::HashMismatch { which: "final", expected: log.final_hash.clone(), found });
    }
    Ok(SimplicialComplex::new(m.facets().iter().cloned().chain(glued)).expect("pure").with_names(m.names().clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{full_simplex, simplex, simplex_boundary};

    #[test]
    fn already_matching() {
        let m = full_simplex(5);
        let r = retriangulate_boundary(&m, &simplex_boundary(5), &AnnealSchedule::for_dim(3));
        assert!(r.succeeded());
        assert!(r.glued.is_empty());
    }

    #[test]
    fn two_cone_steps() {
        let m = full_simplex(5);
        let mut st = FlipState::new(&simplex_boundary(5));
        st.apply(&Flip { a: simplex(&[1, 2, 3, 4]), b: simplex(&[6]) }).unwrap();
        st.apply(&Flip { a: simplex(&[1, 2, 3, 6]), b: simplex(&[7]) }).unwrap();
        let target = st.to_complex();
        let r = retriangulate_boundary(&m, &target, &AnnealSchedule::for_dim(3).with_seed(5));
        assert!(r.succeeded());
        assert_eq!(r.glued.len(), 2);
        // the old complex survives as a subcomplex
        assert!(m.facets().iter().all(|f| r.complex.contains_facet(f)));
        let bd = r.complex.boundary().unwrap();
        assert!(crate::complex::is_isomorphism(&bd, &target, r.iso.as_ref().unwrap()));
        assert!(r.complex.is_pseudomanifold_with_boundary());
    }
}
