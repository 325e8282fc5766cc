//! Line-based complex file format.
//!
//! ```text
//! dim=<d> n=<f0>
//! names=<label>:<name>        (zero or more lines)
//! <v0> <v1> ... <vd>          (one facet per line)
//! ```
//!
//! [`write_complex`] always emits facets in canonical order, so writing a
//! parsed canonical file reproduces it byte for byte.

use std::fmt::Write as _;

use thiserror::Error;

use super::{ComplexError, NamingTable, Simplex, SimplicialComplex, Vertex};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header declares {declared} but the facets {what}")]
    HeaderMismatch { declared: String, what: String },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    let mut dim = None;
    let mut n = None;
    for tok in header.split_whitespace() {
        let (key, val) = tok.split_once('=').ok_or_else(|| syntax(hline, format!("bad header token {tok:?}")))?;
        let val: usize = val.parse().map_err(|_| syntax(hline, format!("bad number in {tok:?}")))?;
        match key {
            "dim" => dim = Some(val),
            "n" => n = Some(val),
            _ => return Err(syntax(hline, format!("unknown header key {key:?}"))),
        }
    }
    let dim = dim.ok_or_else(|| syntax(hline, "header lacks dim="))?;
    let n = n.ok_or_else(|| syntax(hline, "header lacks n="))?;

    let mut names = NamingTable::new();
    let mut facets = Vec::new();
    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("names=") {
            let (label, name) = rest.split_once(':').ok_or_else(|| syntax(ln, "names= entry must be label:name"))?;
            let label: Vertex = label.parse().map_err(|_| syntax(ln, format!("bad label {label:?}")))?;
            names.insert(label, name.to_string());
            continue;
        }
        let verts = line
            .split_whitespace()
            .map(|t| t.parse::<Vertex>().map_err(|_| syntax(ln, format!("bad vertex label {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if verts.len() != dim + 1 {
            return Err(syntax(ln, format!("facet has {} vertices, expected {}", verts.len(), dim + 1)));
        }
        facets.push(Simplex::new(verts).map_err(|e| syntax(ln, e.to_string()))?);
    }
    let c = SimplicialComplex::new(facets)?;
    if c.num_vertices() != n {
        return Err(ParseError::HeaderMismatch { declared: format!("n={n}"), what: format!("use {} vertices", c.num_vertices()) });
    }
    Ok(c.with_names(names))
}

pub fn write_complex(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    writeln!(out, "dim={} n={}", c.dim(), c.num_vertices()).unwrap();
    for (v, name) in c.names() {
        writeln!(out, "names={v}:{name}").unwrap();
    }
    out.push_str(&c.canonical_string());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_names() {
        let text = "dim=2 n=4\nnames=1:a\nnames=4:b_1\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n";
        let c = parse_complex(text).unwrap();
        assert_eq!(c.names().get(&4).map(String::as_str), Some("b_1"));
        assert_eq!(write_complex(&c), text);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_complex("dim=2 n=3\n1 2 3\n1 x 3\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }), "{err}");
        let err = parse_complex("dim=2 n=3\n1 2\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }));
        let err = parse_complex("dim=2 n=5\n1 2 3\n").unwrap_err();
        assert!(matches!(err, ParseError::HeaderMismatch { .. }));
        assert!(parse_complex("").is_err());
    }
}
