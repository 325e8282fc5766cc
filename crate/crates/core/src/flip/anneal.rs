//! Randomized vertex reduction in the style of BISTELLAR: greedy removal of
//! vertices and edges, random lower-index moves when stuck, and restarts from
//! the best complex seen.

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Flip, FlipLog, FlipState};
use crate::algebra::homology;
use crate::complex::{for_each_isomorphism, Isomorphism, SimplicialComplex, Vertex};

/// Parameters of a reduction run.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnealSchedule {
    /// Relative weight of each flip index during heating; entry `i` is used
    /// for `i`-moves with `i <= d - 2`. Missing entries count as zero.
    pub heat_weights: Vec<f64>,
    /// Heating rounds without improvement before restarting from the best.
    pub relax_rounds: usize,
    /// Restarts from the best complex before giving up.
    pub budget_rounds: usize,
    /// Hard cap on the number of flips.
    pub budget_flips: usize,
    pub seed: u64,
}

impl AnnealSchedule {
    pub fn for_dim(d: usize) -> Self {
        let heat_weights = match d {
            0..=2 => vec![1.0],
            3 => vec![1.0, 6.0],
            _ => vec![1.0, 3.0, 6.0],
        };
        AnnealSchedule { heat_weights, relax_rounds: 30, budget_rounds: 40, budget_flips: 200_000, seed: 0 }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_budget(mut self, flips: usize, rounds: usize) -> Self {
        self.budget_flips = flips;
        self.budget_rounds = rounds;
        self
    }

    fn validate(&self, d: usize) -> Vec<f64> {
        let w: Vec<f64> = (0..d.saturating_sub(1).max(1)).map(|i| self.heat_weights.get(i).copied().unwrap_or(0.0)).collect();
        assert!(w.iter().all(|x| *x >= 0.0 && x.is_finite()), "heat weights must be non-negative");
        w
    }
}

/// Result of an annealing run.
#[derive(Clone)]
pub struct AnnealRun {
    pub state: FlipState,
    pub moves: Vec<Flip>,
    /// The goal predicate held at the returned state.
    pub reached: bool,
    /// The flip budget ran out.
    pub exhausted: bool,
}

fn lex_less(a: &[usize], b: &[usize]) -> bool {
    a < b
}

/// Core loop. Stops as soon as `goal` holds; otherwise returns the best
/// (lexicographically smallest f-vector) state with the moves leading to it.
pub fn anneal(start: FlipState, sched: &AnnealSchedule, goal: &mut dyn FnMut(&FlipState) -> bool) -> AnnealRun {
    let d = start.dim();
    let weights = sched.validate(d);
    let heat_dist = WeightedIndex::new(&weights).ok();
    let mut rng = ChaCha8Rng::seed_from_u64(sched.seed);
    let mut cur = start;
    let mut moves: Vec<Flip> = Vec::new();
    let mut best_f = cur.f_vector();
    let mut best = cur.clone();
    let mut best_len = 0usize;
    let mut last: Option<Flip> = None;
    let (mut stall, mut restarts, mut heat_level) = (0usize, 0usize, 0usize);

    loop {
        if goal(&cur) {
            return AnnealRun { state: cur, moves, reached: true, exhausted: false };
        }
        if moves.len() >= sched.budget_flips {
            moves.truncate(best_len);
            return AnnealRun { state: best, moves, reached: false, exhausted: true };
        }
        let undo = last.as_ref().map(Flip::reverse);
        let descent = [d, d.saturating_sub(1)]
            .into_iter()
            .filter(|&i| i >= 1)
            .find_map(|i| cur.random_flip(i, undo.as_ref(), &mut rng));
        if let Some(f) = descent {
            cur.apply_unchecked(&f);
            moves.push(f.clone());
            last = Some(f);
            let fv = cur.f_vector();
            if lex_less(&fv, &best_f) {
                best_f = fv;
                best = cur.clone();
                best_len = moves.len();
                stall = 0;
            }
            continue;
        }
        // stuck in a local minimum: heat
        stall += 1;
        if stall > sched.relax_rounds {
            restarts += 1;
            if restarts > sched.budget_rounds {
                moves.truncate(best_len);
                return AnnealRun { state: best, moves, reached: false, exhausted: false };
            }
            cur = best.clone();
            moves.truncate(best_len);
            last = None;
            stall = 0;
            heat_level = (heat_level + 1) % (2 * d + 2);
            continue;
        }
        let Some(dist) = &heat_dist else {
            moves.truncate(best_len);
            return AnnealRun { state: best, moves, reached: false, exhausted: false };
        };
        let n_heat = 1 + heat_level / 2;
        for _ in 0..n_heat {
            let i = dist.sample(&mut rng);
            if let Some(f) = cur.random_flip(i, undo.as_ref(), &mut rng) {
                cur.apply_unchecked(&f);
                moves.push(f.clone());
                last = Some(f);
            }
        }
    }
}

/// Outcome of [`reduce`].
#[derive(Clone, Debug)]
pub struct Reduction {
    pub complex: SimplicialComplex,
    pub log: FlipLog,
    /// The flip budget ran out before the search converged.
    pub exhausted: bool,
}

/// Reduces the vertex count of a closed complex by bistellar flips.
pub fn reduce(c: &SimplicialComplex, sched: &AnnealSchedule) -> Reduction {
    let floor = c.dim() + 2;
    reduce_with(FlipState::new(c), c, sched, &mut |s: &FlipState| s.num_vertices() <= floor)
}

/// Reduces until at most `max_vertices` remain, or the budget runs out.
pub fn reduce_to(c: &SimplicialComplex, sched: &AnnealSchedule, max_vertices: usize) -> Reduction {
    reduce_with(FlipState::new(c), c, sched, &mut |s: &FlipState| s.num_vertices() <= max_vertices)
}

pub(crate) fn reduce_with(
    st: FlipState,
    c: &SimplicialComplex,
    sched: &AnnealSchedule,
    goal: &mut dyn FnMut(&FlipState) -> bool,
) -> Reduction {
    let run = anneal(st, sched, goal);
    let complex = run.state.to_complex();
    let log = FlipLog { initial: c.hash(), final_hash: complex.hash(), seed: sched.seed, moves: run.moves, renames: vec![] };
    Reduction { complex, log, exhausted: run.exhausted }
}

/// Runs `f` on seeds `0..seeds` with up to `jobs` in flight and returns the
/// first success in seed order, so the result does not depend on `jobs`.
pub fn first_success<T: Send, F: Fn(u64) -> Option<T> + Sync>(base_seed: u64, seeds: u64, jobs: usize, f: F) -> Option<(u64, T)> {
    let jobs = jobs.max(1) as u64;
    let mut start = 0;
    while start < seeds {
        let end = (start + jobs).min(seeds);
        let found = (start..end)
            .into_par_iter()
            .map(|k| f(base_seed + k).map(|t| (base_seed + k, t)))
            .find_first(Option::is_some)
            .flatten();
        if found.is_some() {
            return found;
        }
        start = end;
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SphereVerdict {
    Yes,
    No,
    Unknown,
}

/// Decides whether `c` is a standard PL sphere by reducing it to the
/// boundary of a simplex. A homology mismatch gives `No`.
pub fn is_standard_sphere(c: &SimplicialComplex, sched: &AnnealSchedule) -> SphereVerdict {
    let d = c.dim();
    if !c.is_closed_pseudomanifold() {
        return SphereVerdict::No;
    }
    let h = homology(c);
    let mut sphere_betti = vec![0; d + 1];
    sphere_betti[0] += 1;
    sphere_betti[d] += 1;
    if h.betti != sphere_betti || !h.is_torsion_free() {
        return SphereVerdict::No;
    }
    if c.num_vertices() == d + 2 {
        return SphereVerdict::Yes;
    }
    if reduce(c, sched).complex.num_vertices() == d + 2 {
        SphereVerdict::Yes
    } else {
        SphereVerdict::Unknown
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

/// A flip sequence carrying `a` to a complex isomorphic to `b`, with that
/// isomorphism. `None` means nothing was found within the budget.
pub fn bistellar_equivalent(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    sched: &AnnealSchedule,
) -> Option<(FlipLog, Isomorphism)> {
    if a.dim() != b.dim() {
        return None;
    }
    if let Some(iso) = isomorphism(a, b) {
        let log = FlipLog { initial: a.hash(), final_hash: a.hash(), seed: sched.seed, moves: vec![], renames: vec![] };
        return Some((log, iso));
    }
    if homology(a) != homology(b) {
        return None;
    }
    let ra = reduce(a, sched);
    let rb = reduce(b, &sched.clone().with_seed(sched.seed.wrapping_add(1)));
    // walk from the reduced `a` until it matches the reduced `b`
    let target = rb.complex.clone();
    let tf = target.f_vector().0;
    let walk = anneal(FlipState::new(&ra.complex), &sched.clone().with_seed(sched.seed.wrapping_add(2)), &mut |s: &FlipState| {
        s.f_vector() == tf && isomorphism(&s.to_complex(), &target).is_some()
    });
    if !walk.reached {
        return None;
    }
    let reached = walk.state.to_complex();
    let phi = isomorphism(&reached, &target)?;
    let mut moves = ra.log.moves;
    moves.extend(walk.moves);

    // undo b's reduction, carried over to the labels of `reached`
    let inverse: std::collections::BTreeMap<Vertex, Vertex> = phi.iter().map(|(&x, &y)| (y, x)).collect();
    let mut map = inverse.clone();
    let mut next = moves
        .iter()
        .flat_map(|m| m.a.vertices().iter().chain(m.b.vertices()).copied())
        .chain(a.vertices())
        .max()
        .unwrap_or(0)
        + 1;
    let mut st = FlipState::new(&reached);
    for m in rb.log.moves.iter().rev() {
        let r = m.reverse();
        for &v in r.a.vertices().iter().chain(r.b.vertices()) {
            map.entry(v).or_insert_with(|| {
                next += 1;
                next - 1
            });
        }
        let t = Flip { a: r.a.map(|v| map[&v]).expect("injective"), b: r.b.map(|v| map[&v]).expect("injective") };
        st.apply(&t).ok()?;
        moves.push(t);
    }
    let result = st.to_complex();
    let iso = isomorphism(&result, b)?;
    let log = FlipLog { initial: a.hash(), final_hash: result.hash(), seed: sched.seed, moves, renames: vec![] };
    Some((log, iso))
}
