use std::path::Path;
use std::sync::Arc;

use lscat::cohom::{builtin as complexes, face_poset, parse_complex_json, SimplicialComplex};
use lscat::finspace::{builtin, parse_space_json};
use lscat::{Caps, FinSpace, LsError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Compute,
    Axioms,
    Relations,
    Verify,
    Demo,
}

/// Where the space came from. Files are re-read on replay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Input {
    Builtin(String),
    SpaceFile(String),
    ComplexBuiltin(String),
    ComplexFile(String),
}

/// Everything a report depends on. Serialized at the top of every report;
/// running it again reproduces the report exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunManifest {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<Input>,
    /// Invariant names, or `all`.
    #[serde(default)]
    pub operations: Vec<String>,
    /// Relation checks such as `prop42` or `lemma41:2`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<String>,
    pub caps: Caps,
    pub format: Format,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sizes: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
}

/// A loaded input: the space to work on and, for complexes, the complex.
pub struct Loaded {
    pub space: Arc<FinSpace>,
    pub complex: Option<SimplicialComplex>,
}

fn read(path: &str) -> Result<String, LsError> {
    std::fs::read_to_string(path).map_err(|e| LsError::Invalid(format!("cannot read `{path}`: {e}")))
}

impl Input {
    /// `--space` takes a file path if one exists, else a builtin name.
    pub fn space(arg: &str) -> Input {
        if Path::new(arg).is_file() {
            Input::SpaceFile(arg.to_string())
        } else {
            Input::Builtin(arg.to_string())
        }
    }

    pub fn complex(arg: &str) -> Input {
        if Path::new(arg).is_file() {
            Input::ComplexFile(arg.to_string())
        } else {
            Input::ComplexBuiltin(arg.to_string())
        }
    }

    pub fn load(&self) -> Result<Loaded, LsError> {
        let (space, complex) = match self {
            Input::Builtin(name) => (builtin::parse(name)?, None),
            Input::SpaceFile(path) => (parse_space_json(&read(path)?)?, None),
            Input::ComplexBuiltin(name) => {
                let c = complexes::parse(name)?;
                (face_poset(&c)?, Some(c))
            }
            Input::ComplexFile(path) => {
                let c = parse_complex_json(&read(path)?)?;
                (face_poset(&c)?, Some(c))
            }
        };
        Ok(Loaded {
            space: Arc::new(space),
            complex,
        })
    }
}

/// Parses `3..7` or `3..=7` (both inclusive).
pub fn parse_sizes(text: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("expected `min..max`, got `{text}`"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|_| format!("bad lower size `{lo}`"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("bad upper size `{hi}`"))?;
    if lo == 0 || lo > hi || hi > 12 {
        return Err(format!("sizes must satisfy 1 <= min <= max <= 12, got {lo}..{hi}"));
    }
    Ok((lo, hi))
}
