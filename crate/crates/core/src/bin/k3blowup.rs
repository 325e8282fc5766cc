use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use k3blowup::algebra::{betti_numbers, homology};
use k3blowup::blowup::{check_step, parse_pattern, replay_manifest, resolve_with, Manifest, ResolveOptions, StepInvariants};
use k3blowup::complex::{heawood_check, simplex, write_complex, SimplicialComplex, Vertex};
use k3blowup::construction::{orbit_complex, PermutationGroup, K3_GENERATORS, K3_ORBITS, KUMMER_GENERATORS, KUMMER_ORBITS};
use k3blowup::fixtures::{self, FIXTURE_ENV};
use k3blowup::flip::{is_standard_sphere, reduce, reduce_bounded, AnnealSchedule, SphereVerdict};
use k3blowup::intersection::{intersection_form, orient, write_form};
use k3blowup::morse::{critical_point_counts, identify_slicing, parse_order, slicing, slicing_below, RslFunction};

#[derive(Parser)]
#[command(name = "k3blowup", version, about = "Combinatorial 4-manifolds, blowups and PL Morse slicings")]
struct Cli {
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Budget {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    budget_flips: Option<usize>,
    #[arg(long)]
    budget_rounds: Option<usize>,
}

impl Budget {
    fn schedule(&self, dim: usize) -> AnnealSchedule {
        let mut s = AnnealSchedule::for_dim(dim).with_seed(self.seed);
        if let Some(f) = self.budget_flips {
            s.budget_flips = f;
        }
        if let Some(r) = self.budget_rounds {
            s.budget_rounds = r;
        }
        s
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// f-vector, Euler characteristic, neighborliness and manifold checks.
    Info {
        /// Complex file or fixture name.
        input: String,
        #[command(flatten)]
        budget: Budget,
    },
    /// Integral homology, plus Betti numbers over F_p with --field.
    Homology {
        input: String,
        #[arg(long)]
        field: Option<u64>,
    },
    /// Bistellar reduction; complexes with boundary are reduced with the boundary coned off.
    Reduce {
        input: String,
        #[command(flatten)]
        budget: Budget,
        /// Search until the result is isomorphic to this complex.
        #[arg(long)]
        target: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Multiplicity vectors of an rsl function.
    Morse {
        input: String,
        /// Vertex order such as `1..5,7,6,8..16`; ascending when absent.
        #[arg(long)]
        order: Option<String>,
        #[arg(long, default_value_t = 2)]
        field: u64,
    },
    /// Level set of an rsl function, with a heuristic identification.
    Slice {
        input: String,
        #[arg(long)]
        order: Option<String>,
        /// Level in (0, 1).
        #[arg(long, conflicts_with = "below")]
        level: Option<f64>,
        /// Vertices below the level, e.g. `1..5`.
        #[arg(long)]
        below: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Intersection form of a closed orientable 4-pseudomanifold.
    Isoform { input: String },
    /// Union of orbits under a permutation group.
    OrbitBuild {
        /// `k4_16` or `k3_16`; otherwise give --degree, --generator and --orbit.
        #[arg(long)]
        preset: Option<String>,
        #[arg(long)]
        degree: Option<usize>,
        /// Generator in cycle notation; repeatable.
        #[arg(long)]
        generator: Vec<String>,
        /// Orbit representative as comma-separated labels; repeatable.
        #[arg(long)]
        orbit: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Resolves all singular vertices, or replays a manifest with --manifest.
    Resolve {
        #[arg(default_value = "k4_16")]
        input: String,
        /// One sign per singular vertex.
        #[arg(long)]
        pattern: Option<String>,
        /// Manifest to replay.
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Output directory for a fresh run.
        #[arg(long, default_value = "resolution")]
        out: PathBuf,
        #[arg(long, default_value_t = 24)]
        ceiling: usize,
        #[command(flatten)]
        budget: Budget,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }
}

fn load(input: &str) -> Result<SimplicialComplex, CliError> {
    fixtures::load(input).map_err(|e| match e {
        fixtures::FixtureError::Parse { .. } => CliError::Parse(e.to_string()),
        _ => CliError::Io(format!("{e} (fixtures in {}, override with {FIXTURE_ENV})", fixtures::fixture_dir().display())),
    })
}

fn write(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn order_of(c: &SimplicialComplex, order: &Option<String>) -> Result<RslFunction, CliError> {
    match order {
        None => Ok(RslFunction::ascending(c)),
        Some(s) => {
            let o = parse_order(s).map_err(|e| CliError::Parse(e.to_string()))?;
            RslFunction::new(c, o).map_err(|e| CliError::Parse(e.to_string()))
        }
    }
}

fn info(input: &str, budget: &Budget) -> Result<(), CliError> {
    let c = load(input)?;
    let f = c.f_vector();
    let chi = c.euler_characteristic();
    println!("f={f} chi={chi} dim={} facets={}", c.dim(), c.num_facets());
    println!("neighborly={}", c.neighborliness());
    if c.dim() == 4 {
        let h = heawood_check(c.num_vertices() as u64, chi);
        println!("heawood C(n-4,3)={} 10(chi-2)={} holds={} equality={}", h.lhs, h.rhs, h.holds, h.equality);
    }
    if !c.is_closed_pseudomanifold() {
        let bd = c.boundary().map(|b| b.f_vector().to_string()).unwrap_or_else(|| "none".into());
        println!("pseudomanifold_with_boundary={} closed=no boundary f={bd}", if c.is_pseudomanifold_with_boundary() { "yes" } else { "no" });
        return Ok(());
    }
    let sched = budget.schedule(c.dim().saturating_sub(1));
    let mut spheres = 0;
    let mut unknown = 0;
    for v in c.vertices() {
        match is_standard_sphere(&c.vertex_link(v).expect("vertex of c"), &sched) {
            SphereVerdict::Yes => spheres += 1,
            SphereVerdict::Unknown => unknown += 1,
            SphereVerdict::No => {}
        }
    }
    let verdict = if spheres == c.num_vertices() {
        "combinatorial manifold"
    } else if unknown > 0 {
        "undecided within budget"
    } else {
        "pseudomanifold with non-sphere links"
    };
    println!("pseudomanifold=yes closed=yes sphere_links={spheres}/{} verdict={verdict}", c.num_vertices());
    Ok(())
}

fn resolve(
    input: &str,
    pattern: &Option<String>,
    manifest: &Option<PathBuf>,
    out: &PathBuf,
    ceiling: usize,
    budget: &Budget,
) -> Result<(), CliError> {
    let k = load(input)?;
    if let Some(path) = manifest {
        let m = Manifest::load(path).map_err(|e| CliError::Parse(e.to_string()))?;
        let mut prev = m.initial.clone();
        let sched = budget.schedule(4);
        let mut failure = None;
        let fin = replay_manifest(&k, &m, &mut |step, c| {
            if failure.is_some() {
                return;
            }
            match StepInvariants::of(c, &sched) {
                Ok(inv) => {
                    if let Err(e) = check_step(&prev, &inv, step) {
                        failure = Some(e.to_string());
                    }
                    println!("step {step:2}: chi={} singular={} b2={} signature={}", inv.euler, inv.singular, inv.b2, inv.signature);
                    prev = inv;
                }
                Err(e) => failure = Some(e.to_string()),
            }
        })
        .map_err(|e| CliError::Invariant(e.to_string()))?;
        if let Some(f) = failure {
            return Err(CliError::Invariant(f));
        }
        println!("final f={} hash={}", fin.f_vector(), fin.hash());
        return Ok(());
    }
    let sched = budget.schedule(4);
    let n = k3blowup::blowup::singular_vertices(&k, &sched).singular.len();
    let pattern = parse_pattern(&pattern.clone().unwrap_or_else(|| "+".repeat(n))).map_err(CliError::Parse)?;
    let mut opts = ResolveOptions::new(sched);
    opts.ceiling = ceiling;
    let res = resolve_with(&k, &pattern, &opts, &mut |k, r| {
        let s = r.steps.last().expect("one step per report");
        let i = &s.invariants;
        println!("step {k:2}: vertex {} sign {} chi={} singular={} b2={} signature={}", s.vertex, s.sign, i.euler, i.singular, i.b2, i.signature);
    });
    let (r, err) = match res {
        Ok(r) => (r, None),
        Err((r, e)) => (r, Some(e)),
    };
    let m = Manifest::from_resolution(&r, &pattern, ceiling);
    let path = m.write(out, "manifest.txt").map_err(|e| CliError::Io(e.to_string()))?;
    write(&out.join("final.complex"), &write_complex(&r.complex))?;
    println!("manifest {}", path.display());
    match err {
        None => {
            println!("final f={} signature={}", r.complex.f_vector(), r.steps.last().map_or(r.initial.signature, |s| s.invariants.signature));
            Ok(())
        }
        Some(k3blowup::blowup::BlowupError::Retriangulation { vertex, .. }) => Err(CliError::Budget(format!("retriangulation at vertex {vertex}"))),
        Some(e) => Err(CliError::Invariant(e.to_string())),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().map_err(|e| CliError::Io(e.to_string()))?;
    }
    match &cli.cmd {
        Cmd::Info { input, budget } => info(input, budget),
        Cmd::Homology { input, field } => {
            let c = load(input)?;
            println!("H_* = {}", homology(&c));
            if let Some(p) = field {
                let b = betti_numbers(&c, *p).map_err(|e| CliError::Parse(e.to_string()))?;
                println!("betti(F_{p}) = {b:?}");
            }
            Ok(())
        }
        Cmd::Reduce { input, budget, target, out, log } => {
            let c = load(input)?;
            let (complex, text, done) = if c.is_closed_pseudomanifold() {
                let r = reduce(&c, &budget.schedule(c.dim()));
                let done = !r.exhausted;
                (r.complex, r.log.to_text(), done)
            } else {
                let t = target.as_deref().map(load).transpose()?;
                let r = reduce_bounded(&c, t.as_ref(), &budget.schedule(c.dim()))
                    .ok_or_else(|| CliError::Invariant("not a pseudomanifold with boundary".into()))?;
                let done = t.is_none() || r.iso.is_some();
                (r.complex, r.log.to_text(), done)
            };
            println!("f={} hash={}", complex.f_vector(), complex.hash());
            if let Some(p) = out {
                write(p, &write_complex(&complex))?;
            }
            if let Some(p) = log {
                write(p, &text)?;
            }
            if done {
                Ok(())
            } else {
                Err(CliError::Budget("target not reached".into()))
            }
        }
        Cmd::Morse { input, order, field } => {
            let c = load(input)?;
            let f = order_of(&c, order)?;
            let prof = critical_point_counts(&c, &f, *field).map_err(|e| CliError::Parse(e.to_string()))?;
            print!("{}", prof.table());
            Ok(())
        }
        Cmd::Slice { input, order, level, below, out, budget } => {
            let c = load(input)?;
            let s = match (level, below) {
                (_, Some(b)) => slicing_below(&c, parse_order(b).map_err(|e| CliError::Parse(e.to_string()))?),
                (Some(a), None) => slicing(&c, &order_of(&c, order)?, *a),
                (None, None) => slicing(&c, &order_of(&c, order)?, 0.5),
            }
            .map_err(|e| CliError::Invariant(e.to_string()))?;
            if let Some(p) = out {
                write(p, &write_complex(&s.complex))?;
            }
            let (h, v) = identify_slicing(&s, &budget.schedule(3));
            println!("f={} homology={h} verdict={v}", s.complex.f_vector());
            Ok(())
        }
        Cmd::Isoform { input } => {
            let c = load(input)?;
            let o = orient(&c).map_err(|e| CliError::Invariant(e.to_string()))?;
            let q = intersection_form(&c, &o).map_err(|e| CliError::Invariant(e.to_string()))?;
            print!("{}", write_form(&q));
            Ok(())
        }
        Cmd::OrbitBuild { preset, degree, generator, orbit, out } => {
            let (n, gens, reps): (usize, Vec<String>, Vec<Vec<Vertex>>) = match preset.as_deref() {
                Some("k4_16") => (16, KUMMER_GENERATORS.map(String::from).to_vec(), KUMMER_ORBITS.map(|r| r.to_vec()).to_vec()),
                Some("k3_16") => (16, K3_GENERATORS.map(String::from).to_vec(), K3_ORBITS.map(|r| r.to_vec()).to_vec()),
                Some(p) => return Err(CliError::Parse(format!("unknown preset {p:?}"))),
                None => {
                    let n = degree.ok_or_else(|| CliError::Parse("--degree is required without --preset".into()))?;
                    let reps = orbit
                        .iter()
                        .map(|s| s.split(',').map(|x| x.trim().parse::<Vertex>()).collect::<Result<Vec<_>, _>>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| CliError::Parse(format!("orbit representative: {e}")))?;
                    (n, generator.clone(), reps)
                }
            };
            let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
            let g = PermutationGroup::from_cycles(n, &refs).map_err(|e| CliError::Parse(e.to_string()))?;
            let reps: Vec<_> = reps.iter().map(|r| simplex(r)).collect();
            let c = orbit_complex(&g, &reps).map_err(|e| CliError::Invariant(e.to_string()))?;
            eprintln!("group order {} facets {} f={}", g.order(), c.num_facets(), c.f_vector());
            match out {
                Some(p) => write(p, &write_complex(&c)),
                None => {
                    print!("{}", write_complex(&c));
                    Ok(())
                }
            }
        }
        Cmd::Resolve { input, pattern, manifest, out, ceiling, budget } => resolve(input, pattern, manifest, out, *ceiling, budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
