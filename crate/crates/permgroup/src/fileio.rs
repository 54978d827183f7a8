use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::group::PermGroup;
use crate::perm::{Perm, PermError};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("io error reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Parse {
        path: String,
        line: usize,
        #[source]
        source: PermError,
    },
    #[error("{path}: missing or malformed 'degree:' header")]
    MissingDegree { path: String },
    #[error("{path}: no generators")]
    NoGenerators { path: String },
}

/// Generator file format, shared repo-wide:
///   - lines beginning with '#' are comments,
///   - first non-comment line is `degree: N`,
///   - each subsequent non-comment line is one permutation in disjoint
///     cycle notation (1-based points).
pub fn parse_group_text(text: &str, path: &str) -> Result<PermGroup, FileError> {
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Perm> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree:")
                    .ok_or_else(|| FileError::MissingDegree { path: path.into() })?;
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| FileError::MissingDegree { path: path.into() })?;
                degree = Some(n);
            }
            Some(n) => {
                let p = Perm::parse(line, n).map_err(|source| FileError::Parse {
                    path: path.into(),
                    line: lineno + 1,
                    source,
                })?;
                gens.push(p);
            }
        }
    }
    let n = degree.ok_or_else(|| FileError::MissingDegree { path: path.into() })?;
    if gens.is_empty() {
        return Err(FileError::NoGenerators { path: path.into() });
    }
    Ok(PermGroup::new(n, gens).expect("degrees checked at parse"))
}

pub fn read_group_file(path: &Path) -> Result<PermGroup, FileError> {
    let text = std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_group_text(&text, &path.display().to_string())
}

/// Renders a group back to the generator file format. `header` lines are
/// emitted as comments at the top.
pub fn format_group(group: &PermGroup, header: &[&str]) -> String {
    let mut out = String::new();
    for h in header {
        let _ = writeln!(out, "# {h}");
    }
    let _ = writeln!(out, "degree: {}", group.degree());
    for g in group.gens() {
        let _ = writeln!(out, "{g}");
    }
    out
}
