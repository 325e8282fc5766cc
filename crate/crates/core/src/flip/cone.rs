//! Flip reduction of a complex with boundary: the boundary is coned off by a
//! protected apex, the closed result is reduced, and the apex star is
//! removed again.

use super::anneal::anneal;
use super::{AnnealSchedule, FlipLog, FlipState};
use crate::complex::{for_each_isomorphism, Isomorphism, SimplicialComplex, Vertex};

/// `c` together with `apex * boundary(c)`.
pub fn cone_off(c: &SimplicialComplex, apex: Vertex) -> Option<SimplicialComplex> {
    let bd = c.boundary()?;
    let facets = c.facets().iter().cloned().chain(bd.facets().iter().map(|f| f.with(apex)));
    SimplicialComplex::new(facets).ok()
}

#[derive(Clone, Debug)]
pub struct BoundedReduction {
    pub complex: SimplicialComplex,
    /// Flips of the coned complex.
    pub log: FlipLog,
    pub apex: Vertex,
    /// Onto the target, when one was given and reached.
    pub iso: Option<Isomorphism>,
}

fn apex_fixing_iso(a: &SimplicialComplex, b: &SimplicialComplex, apex_a: Vertex, apex_b: Vertex) -> Option<Isomorphism> {
    let mut found = None;
    for_each_isomorphism(a, b, |iso| {
        if iso.get(&apex_a) == Some(&apex_b) {
            found = Some(iso.clone());
            false
        } else {
            true
        }
    });
    found
}

/// Reduces a pseudomanifold with boundary. With a `target`, the search runs
/// until the result is isomorphic to it; otherwise it stops at the fewest
/// vertices found.
pub fn reduce_bounded(c: &SimplicialComplex, target: Option<&SimplicialComplex>, sched: &AnnealSchedule) -> Option<BoundedReduction> {
    let apex = c.max_label() + 1;
    let coned = cone_off(c, apex)?;
    let mut st = FlipState::new(&coned);
    st.protect(apex);
    let goal_cone = match target {
        Some(t) => {
            let ta = t.max_label() + 1;
            Some((cone_off(t, ta)?, ta))
        }
        None => None,
    };
    let tf = goal_cone.as_ref().map(|(g, _)| g.f_vector().0);
    let run = anneal(st, sched, &mut |s: &FlipState| match (&goal_cone, &tf) {
        (Some((g, ta)), Some(tf)) => &s.f_vector() == tf && apex_fixing_iso(&s.to_complex(), g, apex, *ta).is_some(),
        _ => false,
    });
    let closed = run.state.to_complex();
    let iso = match &goal_cone {
        Some((g, ta)) if run.reached => {
            let mut iso = apex_fixing_iso(&closed, g, apex, *ta)?;
            iso.remove(&apex);
            Some(iso)
        }
        Some(_) => None,
        None => None,
    };
    let complex = closed.delete_vertex_star(apex).ok()?;
    let log = FlipLog { initial: coned.hash(), final_hash: closed.hash(), seed: sched.seed, moves: run.moves, renames: vec![] };
    Some(BoundedReduction { complex, log, apex, iso })
}
