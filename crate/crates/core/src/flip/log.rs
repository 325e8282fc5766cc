//! Text format for flip sequences:
//!
//! ```text
//! initial=<sha256>
//! final=<sha256>
//! seed=<u64>
//! <i> A:<labels> B:<labels>
//! r <old> <new>
//! ```
//!
//! An `r` line renames a vertex before the next move; boundary
//! retriangulation uses it to attach a cone over a vertex star.

use std::fmt::Write as _;

use super::{Flip, FlipError, FlipState};
use crate::complex::{Simplex, SimplicialComplex, Vertex};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlipLog {
    pub initial: String,
    pub final_hash: String,
    pub seed: u64,
    pub moves: Vec<Flip>,
    pub renames: Vec<Rename>,
}

/// Vertex `old` becomes `new` just before move number `at` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rename {
    pub at: usize,
    pub old: Vertex,
    pub new: Vertex,
}

fn labels(s: &Simplex) -> String {
    s.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_labels(t: &str, line: usize) -> Result<Simplex, FlipError> {
    let v = t
        .split(',')
        .map(|x| x.parse::<Vertex>().map_err(|_| FlipError::LogSyntax { line, msg: format!("bad label {x:?}") }))
        .collect::<Result<Vec<_>, _>>()?;
    Simplex::new(v).map_err(|e| FlipError::LogSyntax { line, msg: e.to_string() })
}

impl FlipLog {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "initial={}", self.initial).unwrap();
        writeln!(out, "final={}", self.final_hash).unwrap();
        writeln!(out, "seed={}", self.seed).unwrap();
        let mut renames = self.renames.iter().peekable();
        for (k, m) in self.moves.iter().enumerate() {
            while let Some(r) = renames.next_if(|r| r.at == k) {
                writeln!(out, "r {} {}", r.old, r.new).unwrap();
            }
            writeln!(out, "{} A:{} B:{}", m.index(), labels(&m.a), labels(&m.b)).unwrap();
        }
        for r in renames {
            writeln!(out, "r {} {}", r.old, r.new).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<FlipLog, FlipError> {
        let mut log = FlipLog::default();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let syntax = |msg: &str| FlipError::LogSyntax { line, msg: msg.to_string() };
            if let Some(h) = l.strip_prefix("initial=") {
                log.initial = h.to_string();
            } else if let Some(h) = l.strip_prefix("final=") {
                log.final_hash = h.to_string();
            } else if let Some(s) = l.strip_prefix("seed=") {
                log.seed = s.parse().map_err(|_| syntax("bad seed"))?;
            } else if let Some(rest) = l.strip_prefix("r ") {
                let mut it = rest.split_whitespace().map(|x| x.parse::<Vertex>());
                let (Some(Ok(old)), Some(Ok(new)), None) = (it.next(), it.next(), it.next()) else {
                    return Err(syntax("bad rename"));
                };
                log.renames.push(Rename { at: log.moves.len(), old, new });
            } else {
                let mut it = l.split_whitespace();
                let i: usize = it.next().and_then(|x| x.parse().ok()).ok_or_else(|| syntax("missing index"))?;
                let a = it.next().and_then(|x| x.strip_prefix("A:")).ok_or_else(|| syntax("missing A:"))?;
                let b = it.next().and_then(|x| x.strip_prefix("B:")).ok_or_else(|| syntax("missing B:"))?;
                let flip = Flip { a: parse_labels(a, line)?, b: parse_labels(b, line)? };
                if flip.index() != i {
                    return Err(syntax("index does not match the size of A"));
                }
                log.moves.push(flip);
            }
        }
        Ok(log)
    }

    /// Replays the moves on `c`, checking both hashes.
    pub fn replay(&self, c: &SimplicialComplex) -> Result<SimplicialComplex, FlipError> {
        if c.hash() != self.initial {
            return Err(FlipError::HashMismatch { which: "initial", expected: self.initial.clone(), found: c.hash() });
        }
        let out = self.replay_unchecked(c)?;
        if out.hash() != self.final_hash {
            return Err(FlipError::HashMismatch { which: "final", expected: self.final_hash.clone(), found: out.hash() });
        }
        Ok(out)
    }

    /// Replays without hash checks.
    pub fn replay_unchecked(&self, c: &SimplicialComplex) -> Result<SimplicialComplex, FlipError> {
        let mut st = FlipState::new(c);
        let mut renames = self.renames.iter().peekable();
        let step = |k: usize| move |e| FlipError::Replay { step: k + 1, source: Box::new(e) };
        for (k, m) in self.moves.iter().enumerate() {
            while let Some(r) = renames.next_if(|r| r.at == k) {
                st.rename_vertex(r.old, r.new).map_err(step(k))?;
            }
            st.apply(m).map_err(step(k))?;
        }
        for r in renames {
            st.rename_vertex(r.old, r.new).map_err(step(self.moves.len()))?;
        }
        Ok(st.to_complex())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{simplex, simplex_boundary};

    #[test]
    fn round_trip_and_replay() {
        let c = simplex_boundary(5);
        let first = Flip { a: simplex(&[1, 2, 3, 4]), b: simplex(&[6]) };
        let invalid = Flip { a: simplex(&[1, 2, 6]), b: simplex(&[5, 7]) };
        let mut st = FlipState::new(&c);
        st.apply(&first).unwrap();
        st.rename_vertex(5, 9).unwrap();
        let second = st.valid_flips().into_iter().find(|f| f.index() == 1).unwrap();
        st.apply(&second).unwrap();
        let log = FlipLog { initial: c.hash(), final_hash: st.to_complex().hash(), seed: 7, moves: vec![first, second], renames: vec![Rename { at: 1, old: 5, new: 9 }] };
        let text = log.to_text();
        let back = FlipLog::parse(&text).unwrap();
        assert_eq!(back, log);
        assert_eq!(back.replay(&c).unwrap(), st.to_complex());
        assert!(back.replay(&simplex_boundary(4)).is_err());
        assert!(text.contains("r 5 9\n"));
        let bad = FlipLog { moves: vec![invalid], renames: vec![], ..log };
        assert!(matches!(bad.replay_unchecked(&c), Err(FlipError::Replay { step: 1, .. })));
        assert!(FlipLog::parse("2 A:1,2 B:3\n").is_err());
    }
}
