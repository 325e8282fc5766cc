//! Plain-text run manifest for a resolution, with separate flip-log files.
//!
//! ```text
//! input=<sha256>
//! pattern=<signs>
//! ceiling=<n>
//! initial euler=8 singular=16 b2=6 b2_mod2=11 rank=6 signature=0 parity=even
//! step=1 vertex=1 seed=7 sign=+ gluing=direct boundary_log=step01.boundary.log reduction_log=step01.reduce.log psi=1:3,2:7 euler=9 ... hash=<sha256>
//! final=<sha256>
//! ```

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::{carry_names, glue_recorded, Gluing, Prepared, Resolution, Sign, StepInvariants};
use crate::complex::{Isomorphism, SimplicialComplex, Vertex};
use crate::flip::{replay_boundary_log, FlipError, FlipLog};

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("manifest line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("step {step}: {source}")]
    Flip { step: usize, source: FlipError },
    #[error("step {step}: {msg}")]
    Replay { step: usize, msg: String },
    #[error("{which} hash mismatch: expected {expected}, found {found}")]
    Hash { which: String, expected: String, found: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
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

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub input: String,
    pub pattern: String,
    pub ceiling: usize,
    pub initial: StepInvariants,
    pub steps: Vec<StepRecord>,
    pub final_hash: String,
}

fn invariants_text(i: &StepInvariants) -> String {
    format!(
        "euler={} singular={} b2={} b2_mod2={} rank={} signature={} parity={}",
        i.euler,
        i.singular,
        i.b2,
        i.b2_mod2,
        i.rank,
        i.signature,
        if i.even { "even" } else { "odd" }
    )
}

fn log_names(k: usize) -> (String, String) {
    (format!("step{k:02}.boundary.log"), format!("step{k:02}.reduce.log"))
}

impl Manifest {
    pub fn from_resolution(r: &Resolution, pattern: &[Sign], ceiling: usize) -> Manifest {
        Manifest {
            input: r.input_hash.clone(),
            pattern: pattern.iter().map(|s| s.to_string()).collect(),
            ceiling,
            initial: r.initial.clone(),
            steps: r
                .steps
                .iter()
                .map(|s| StepRecord {
                    vertex: s.vertex,
                    seed: s.seed,
                    sign: s.sign,
                    gluing: s.gluing,
                    psi: s.psi.clone(),
                    boundary_log: s.boundary_log.clone(),
                    reduction_log: s.reduction_log.clone(),
                    invariants: s.invariants.clone(),
                    hash: s.hash.clone(),
                })
                .collect(),
            final_hash: r.complex.hash(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out += &format!("input={}\npattern={}\nceiling={}\n", self.input, self.pattern, self.ceiling);
        out += &format!("initial {}\n", invariants_text(&self.initial));
        for (k, s) in self.steps.iter().enumerate() {
            let (b, r) = log_names(k + 1);
            let psi: Vec<String> = s.psi.iter().map(|(x, y)| format!("{x}:{y}")).collect();
            out += &format!(
                "step={} vertex={} seed={} sign={} gluing={} boundary_log={b} reduction_log={r} psi={} {} hash={}\n",
                k + 1,
                s.vertex,
                s.seed,
                s.sign,
                s.gluing,
                psi.join(","),
                invariants_text(&s.invariants),
                s.hash
            );
        }
        out += &format!("final={}\n", self.final_hash);
        out
    }

    /// Writes the manifest and its flip logs into `dir`.
    pub fn write(&self, dir: &Path, name: &str) -> Result<PathBuf, ManifestError> {
        let io_err = |path: &Path| {
            let path = path.to_path_buf();
            move |source| ManifestError::Io { path, source }
        };
        fs::create_dir_all(dir).map_err(io_err(dir))?;
        for (k, s) in self.steps.iter().enumerate() {
            let (b, r) = log_names(k + 1);
            fs::write(dir.join(&b), s.boundary_log.to_text()).map_err(io_err(&dir.join(&b)))?;
            fs::write(dir.join(&r), s.reduction_log.to_text()).map_err(io_err(&dir.join(&r)))?;
        }
        let path = dir.join(name);
        fs::write(&path, self.to_text()).map_err(io_err(&path))?;
        Ok(path)
    }

    /// Reads a manifest and the flip logs it names, relative to its directory.
    pub fn load(path: &Path) -> Result<Manifest, ManifestError> {
        let text = fs::read_to_string(path).map_err(|source| ManifestError::Io { path: path.to_path_buf(), source })?;
        let dir = path.parent().unwrap_or(Path::new("."));
        Manifest::parse(&text, &mut |name| {
            let p = dir.join(name);
            fs::read_to_string(&p).map_err(|source| ManifestError::Io { path: p, source })
        })
    }

    /// Parses manifest text; `read` supplies the named log files.
    pub fn parse(text: &str, read: &mut dyn FnMut(&str) -> Result<String, ManifestError>) -> Result<Manifest, ManifestError> {
        let mut m = Manifest {
            input: String::new(),
            pattern: String::new(),
            ceiling: super::VERTEX_CEILING,
            initial: StepInvariants::empty(),
            steps: Vec::new(),
            final_hash: String::new(),
        };
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let syntax = |msg: String| ManifestError::Syntax { line, msg };
            let fields: BTreeMap<&str, &str> = l
                .split_whitespace()
                .filter_map(|t| t.split_once('='))
                .collect();
            let get = |key: &str| fields.get(key).copied().ok_or_else(|| syntax(format!("missing {key}")));
            let num = |key: &str| -> Result<i64, ManifestError> { get(key)?.parse().map_err(|_| syntax(format!("bad {key}"))) };
            let invariants = || -> Result<StepInvariants, ManifestError> {
                Ok(StepInvariants {
                    euler: num("euler")?,
                    singular: num("singular")? as usize,
                    b2: num("b2")? as usize,
                    b2_mod2: num("b2_mod2")? as usize,
                    rank: num("rank")? as usize,
                    signature: num("signature")?,
                    even: get("parity")? == "even",
                })
            };
            if let Some(v) = l.strip_prefix("input=") {
                m.input = v.to_string();
            } else if let Some(v) = l.strip_prefix("pattern=") {
                m.pattern = v.to_string();
            } else if let Some(v) = l.strip_prefix("ceiling=") {
                m.ceiling = v.parse().map_err(|_| syntax("bad ceiling".into()))?;
            } else if let Some(v) = l.strip_prefix("final=") {
                m.final_hash = v.to_string();
            } else if l.starts_with("initial ") {
                m.initial = invariants()?;
            } else if l.starts_with("step=") {
                let mut psi = Isomorphism::new();
                for pair in get("psi")?.split(',') {
                    let (x, y) = pair.split_once(':').ok_or_else(|| syntax(format!("bad psi entry {pair:?}")))?;
                    let parse = |t: &str| t.parse::<Vertex>().map_err(|_| syntax(format!("bad label {t:?}")));
                    psi.insert(parse(x)?, parse(y)?);
                }
                let log = |key: &str, read: &mut dyn FnMut(&str) -> Result<String, ManifestError>| -> Result<FlipLog, ManifestError> {
                    FlipLog::parse(&read(get(key)?)?).map_err(|e| syntax(format!("{key}: {e}")))
                };
                let boundary_log = log("boundary_log", read)?;
                let reduction_log = log("reduction_log", read)?;
                m.steps.push(StepRecord {
                    vertex: num("vertex")? as Vertex,
                    seed: get("seed")?.parse().map_err(|_| syntax("bad seed".into()))?,
                    sign: get("sign")?.parse().map_err(syntax)?,
                    gluing: get("gluing")?.parse().map_err(syntax)?,
                    psi,
                    boundary_log,
                    reduction_log,
                    invariants: invariants()?,
                    hash: get("hash")?.to_string(),
                });
            } else {
                return Err(syntax(format!("unrecognized line {l:?}")));
            }
        }
        Ok(m)
    }
}

/// Replays a manifest on its input complex, checking every recorded hash.
/// `each` sees the complex after every step.
pub fn replay_manifest(
    input: &SimplicialComplex,
    m: &Manifest,
    each: &mut dyn FnMut(usize, &SimplicialComplex),
) -> Result<SimplicialComplex, ManifestError> {
    if input.hash() != m.input {
        return Err(ManifestError::Hash { which: "input".into(), expected: m.input.clone(), found: input.hash() });
    }
    let mut cur = input.clone();
    for (k, s) in m.steps.iter().enumerate() {
        let step = k + 1;
        let mb = cur.delete_vertex_star(s.vertex).map_err(|e| ManifestError::Replay { step, msg: e.to_string() })?;
        let bounded = replay_boundary_log(&mb, &s.boundary_log).map_err(|source| ManifestError::Flip { step, source })?;
        let p = Prepared { vertex: s.vertex, complex: bounded, psi: s.psi.clone(), log: s.boundary_log.clone() };
        let glued = glue_recorded(&p, &s.psi, s.gluing).map_err(|e| ManifestError::Replay { step, msg: e.to_string() })?;
        let reduced = s.reduction_log.replay(&glued).map_err(|source| ManifestError::Flip { step, source })?;
        let next = carry_names(&reduced, cur.names(), glued.names());
        if next.hash() != s.hash {
            return Err(ManifestError::Hash { which: format!("step {step}"), expected: s.hash.clone(), found: next.hash() });
        }
        each(step, &next);
        cur = next;
    }
    if cur.hash() != m.final_hash {
        return Err(ManifestError::Hash { which: "final".into(), expected: m.final_hash.clone(), found: cur.hash() });
    }
    Ok(cur)
}
