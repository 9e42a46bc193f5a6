mod commands;
mod demo;
mod manifest;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lscat::finspace::DEFAULT_MAP_CAP;
use lscat::{Caps, LsError};
use serde_json::{json, Value};

use manifest::{parse_sizes, Command, Format, Input, RunManifest};

const INVARIANTS: [&str; 6] = ["nu_H", "nu_LS", "nu_c", "nu_CL", "cuplength", "all"];
const CATEGORIES: [&str; 5] = ["nu_H", "nu_LS", "nu_c", "nu_CL", "all"];

/// Lusternik-Schnirelmann type categories of finite spaces.
#[derive(Parser)]
#[command(name = "lscat", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Space JSON file or builtin name such as `circle4` or `chain(3)`.
    #[arg(long)]
    space: Option<String>,
    /// Simplicial complex JSON file or builtin (`rp2_6`, `torus7`); its face poset is used.
    #[arg(long)]
    complex: Option<String>,
}

impl InputArgs {
    fn input(&self) -> Input {
        match (&self.space, &self.complex) {
            (Some(s), _) => Input::space(s),
            (_, Some(c)) => Input::complex(c),
            _ => unreachable!("clap requires one input"),
        }
    }
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Most self-maps enumerated by a homotopy search.
    #[arg(long, default_value_t = DEFAULT_MAP_CAP)]
    cap_maps: usize,
    /// Most candidate maps an exhaustive oracle may enumerate.
    #[arg(long, default_value_t = lscat::finspace::DEFAULT_ORACLE_BOUND)]
    cap_oracle: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn manifest(&self, command: Command) -> RunManifest {
        RunManifest {
            command,
            input: None,
            operations: Vec::new(),
            checks: Vec::new(),
            subset: None,
            caps: Caps {
                maps: self.cap_maps,
                oracle: self.cap_oracle,
            },
            format: self.format,
            seed: self.seed,
            sizes: None,
            count: None,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate invariants on one subset.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "all", value_parser = INVARIANTS)]
        invariant: Vec<String>,
        /// Comma-separated point labels, `full`, or empty for the empty set.
        #[arg(long, default_value = "full")]
        subset: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check axioms (i)-(v) for category functions on one space.
    Axioms {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, visible_alias = "nu", default_value = "all", value_parser = CATEGORIES)]
        invariant: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Check relations between invariants on one space.
    Relations {
        #[command(flatten)]
        input: InputArgs,
        /// prop42, prop33, lemma41:n, chain, cor43 or t_nu_cl; repeat or comma-separate.
        #[arg(long, required = true, value_delimiter = ',')]
        check: Vec<String>,
        #[arg(long, visible_alias = "nu", default_value = "all", value_parser = CATEGORIES)]
        invariant: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run every suite over generated spaces.
    Verify {
        #[arg(long, default_value = "3..7", value_parser = parse_sizes)]
        sizes: (usize, usize),
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[command(flatten)]
        common: Common,
    },
    /// List builtin spaces and complexes with expected values.
    Demo {
        #[command(flatten)]
        common: Common,
    },
    /// Re-run the manifest of an earlier report (JSON or markdown).
    Replay {
        report: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn error_json(err: &LsError) -> Value {
    let mut v = json!({ "message": err.to_string() });
    let kind = match err {
        LsError::Json { line, column, .. } => {
            v["line"] = json!(line);
            v["column"] = json!(column);
            "json"
        }
        LsError::UnknownPoint { field, label } => {
            v["field"] = json!(field);
            v["label"] = json!(label);
            "unknown_point"
        }
        LsError::Cycle(_) => "cycle",
        LsError::DuplicateLabel(_) => "duplicate_label",
        LsError::PointOutOfRange { .. } => "point_out_of_range",
        LsError::TooManyPoints(_) => "too_many_points",
        LsError::UnknownBuiltin(_) => "unknown_builtin",
        LsError::InvalidComplex(_) => "invalid_complex",
        LsError::Undecided { .. } | LsError::OracleBound { .. } => "cap_exceeded",
        _ => "invalid",
    };
    v["kind"] = json!(kind);
    v
}

fn fail(err: &LsError) -> ExitCode {
    eprintln!("{}", json!({ "error": error_json(err) }));
    ExitCode::from(2)
}

fn threads() -> Result<usize, LsError> {
    match std::env::var("LSCAT_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| LsError::Invalid(format!("LSCAT_THREADS must be a positive integer, got `{v}`"))),
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn read_manifest(path: &PathBuf) -> Result<RunManifest, LsError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LsError::Invalid(format!("cannot read `{}`: {e}", path.display())))?;
    let json_text = render::manifest_block(&text).unwrap_or(&text);
    let value: Value = serde_json::from_str(json_text)?;
    let manifest = value.get("manifest").cloned().unwrap_or(value);
    serde_json::from_value(manifest).map_err(|e| LsError::Invalid(format!("bad manifest: {e}")))
}

fn build(cmd: Cmd) -> Result<(RunManifest, Option<PathBuf>), LsError> {
    Ok(match cmd {
        Cmd::Compute {
            input,
            invariant,
            subset,
            common,
        } => {
            let mut m = common.manifest(Command::Compute);
            m.input = Some(input.input());
            m.operations = invariant;
            m.subset = Some(subset);
            (m, common.out)
        }
        Cmd::Axioms {
            input,
            invariant,
            common,
        } => {
            let mut m = common.manifest(Command::Axioms);
            m.input = Some(input.input());
            m.operations = invariant;
            (m, common.out)
        }
        Cmd::Relations {
            input,
            check,
            invariant,
            common,
        } => {
            let mut m = common.manifest(Command::Relations);
            m.input = Some(input.input());
            m.operations = invariant;
            m.checks = check;
            (m, common.out)
        }
        Cmd::Verify { sizes, count, common } => {
            let mut m = common.manifest(Command::Verify);
            m.sizes = Some(sizes);
            m.count = Some(count);
            (m, common.out)
        }
        Cmd::Demo { common } => (common.manifest(Command::Demo), common.out),
        Cmd::Replay { report, out } => (read_manifest(&report)?, out),
    })
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), LsError> {
    let io = |e: std::io::Error| LsError::Invalid(format!("cannot write report: {e}"));
    match out {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(io),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || -> Result<bool, LsError> {
        let threads = threads()?;
        let (manifest, out) = build(cli.cmd)?;
        let outcome = commands::run(&manifest, threads)?;
        let text = match manifest.format {
            Format::Json => serde_json::to_string_pretty(&outcome.report).expect("serializable") + "\n",
            Format::Markdown => render::markdown(&outcome.report),
        };
        emit(&text, out.as_ref())?;
        Ok(outcome.failed)
    };
    match run() {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => fail(&e),
    }
}
