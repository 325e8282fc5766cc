//! Shipped complexes. The directory defaults to `fixtures/` at the workspace
//! root and can be moved with `K3BLOWUP_FIXTURES`.

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::complex::{parse_complex, ParseError, SimplicialComplex};
use crate::construction::{build_s3_cs, hopf_image, k3_16, kummer_k4_16, reference_c, reference_k3_17};

pub const FIXTURE_ENV: &str = "K3BLOWUP_FIXTURES";

/// Fixture names with a one-line description.
pub const FIXTURES: [(&str, &str); 6] = [
    ("k4_16", "16-vertex Kummer variety"),
    ("k3_16", "16-vertex K3 surface"),
    ("k3_17", "17-vertex K3 surface"),
    ("C", "11-vertex piece with RP^3 boundary"),
    ("S3_cs", "48-vertex grid 3-sphere"),
    ("P", "double pyramid over a hexagon"),
];

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("unknown fixture or missing file {0:?}")]
    Unknown(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
}

pub fn fixture_dir() -> PathBuf {
    match std::env::var_os(FIXTURE_ENV) {
        Some(d) => PathBuf::from(d),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"),
    }
}

pub fn fixture_path(name: &str) -> PathBuf {
    fixture_dir().join(format!("{name}.complex"))
}

/// Builds a fixture from the constructions instead of reading it.
pub fn build_fixture(name: &str) -> Option<SimplicialComplex> {
    Some(match name {
        "k4_16" => kummer_k4_16(),
        "k3_16" => k3_16(),
        "k3_17" => reference_k3_17().ok()?,
        "C" => reference_c().ok()?,
        "S3_cs" => build_s3_cs(),
        "P" => hopf_image(),
        _ => return None,
    })
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex, FixtureError> {
    let text = std::fs::read_to_string(path).map_err(|source| FixtureError::Io { path: path.to_path_buf(), source })?;
    parse_complex(&text).map_err(|source| FixtureError::Parse { path: path.to_path_buf(), source })
}

/// A file path, or else the name of a shipped fixture.
pub fn load(arg: &str) -> Result<SimplicialComplex, FixtureError> {
    let p = Path::new(arg);
    if p.is_file() {
        return read_complex(p);
    }
    let f = fixture_path(arg);
    if f.is_file() {
        return read_complex(&f);
    }
    Err(FixtureError::Unknown(arg.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_files_match_constructions() {
        for (name, _) in FIXTURES {
            let shipped = load(name).unwrap();
            assert_eq!(shipped, build_fixture(name).unwrap(), "{name}");
        }
        assert!(matches!(load("no_such_fixture"), Err(FixtureError::Unknown(_))));
    }
}
