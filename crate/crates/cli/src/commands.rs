//! Command-line verbs. Each one reads JSON, calls the core library and
//! renders the result; `main` only parses arguments and maps exit codes.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use mutwb_core::typea::{self, DEFAULT_BFS_LIMIT};
use mutwb_core::worked_examples::{verify, Report, WorkedExamples};
use mutwb_core::{
    cokernel, snf, Diagonal, Error, ExchangeMatrix, IntMatrix, Quiver, Triangulation,
};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

pub const BFS_ENV: &str = "MUTWB_MAX_BFS";

#[derive(Debug, Parser)]
#[command(name = "mutwb", version, about = "Exact quiver mutation workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    /// Entrywise mutation formula.
    Formula,
    /// Conjugation by the involution `S`.
    SMatrix,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mutate an exchange matrix at index k.
    Mutate {
        input: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value = "formula")]
        via: Via,
        /// Write the result here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cokernel of a matrix, or of a triangulation's exchange matrix.
    K0 {
        input: PathBuf,
        /// Print the descriptor as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Smith normal form `U A V = D` of an integer matrix.
    Snf { input: PathBuf },
    /// Convert between quivers, exchange matrices and triangulations.
    ///
    /// A quiver yields its exchange matrix; a matrix or a triangulation
    /// yields its quiver.
    Quiver { input: PathBuf },
    /// Flip one diagonal of a triangulation.
    TypeaFlip {
        input: PathBuf,
        #[arg(long, value_parser = parse_diagonal)]
        diagonal: Diagonal,
    },
    /// Shortest flip sequence between two triangulations.
    TypeaPath {
        from: PathBuf,
        to: PathBuf,
        /// Also print the composed change-of-basis matrix.
        #[arg(long)]
        with_t: bool,
    },
    /// Re-run the two worked examples of the generalized mutation rule.
    #[command(name = "verify-paper")]
    VerifyExamples {
        #[arg(long)]
        json: bool,
        /// Fixture file replacing the built-in examples.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Run the HTTP session service.
    Serve {
        #[arg(long, default_value_t = 8000)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
    },
}

fn parse_diagonal(s: &str) -> Result<Diagonal, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected a,b but got {s:?}"))?;
    let a = a.trim().parse::<usize>().map_err(|e| e.to_string())?;
    let b = b.trim().parse::<usize>().map_err(|e| e.to_string())?;
    Ok(Diagonal::new(a, b))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Index(Error),
    #[error(transparent)]
    Core(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } => 2,
            CliError::Index(_) => 3,
            CliError::Core(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::IndexOutOfRange { .. } | Error::NotADiagonal(_) => CliError::Index(e),
            other => CliError::Core(other),
        }
    }
}

/// Text for stdout and the exit code that goes with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_json<T: DeserializeOwned>(path: &Path, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    parse_json(path, &read(path)?)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable output");
    s.push('\n');
    s
}

/// JSON inputs accepted where more than one form makes sense.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyInput {
    Quiver(Quiver),
    Matrix(ExchangeMatrix),
    Triangulation(Triangulation),
}

/// Detects the form from its keys: `arrows` for a quiver, `m` for a
/// triangulation, `data` for a matrix.
pub fn parse_any(path: &Path, text: &str) -> Result<AnyInput, CliError> {
    let value: Value = parse_json(path, text)?;
    let has = |key: &str| value.get(key).is_some();
    let bad = |e: serde_json::Error| CliError::Parse(format!("{}: {e}", path.display()));
    if has("arrows") {
        serde_json::from_value(value)
            .map(AnyInput::Quiver)
            .map_err(bad)
    } else if has("m") {
        serde_json::from_value(value)
            .map(AnyInput::Triangulation)
            .map_err(bad)
    } else if has("data") {
        serde_json::from_value(value)
            .map(AnyInput::Matrix)
            .map_err(bad)
    } else {
        Err(CliError::Parse(format!(
            "{}: expected a quiver, matrix or triangulation",
            path.display()
        )))
    }
}

pub fn mutate(b: &ExchangeMatrix, k: usize, via: Via) -> Result<ExchangeMatrix, CliError> {
    Ok(match via {
        Via::Formula => b.fz_mutate(k)?,
        Via::SMatrix => b.mutate_via_s(k)?,
    })
}

/// Reads a plain matrix or a triangulation and returns the matrix whose
/// cokernel is wanted.
fn k0_input(path: &Path) -> Result<IntMatrix, CliError> {
    let text = read(path)?;
    let value: Value = parse_json(path, &text)?;
    if value.get("m").is_some() {
        let t: Triangulation = parse_json(path, &text)?;
        Ok(t.exchange_matrix().matrix().clone())
    } else {
        parse_json(path, &text)
    }
}

fn bfs_limit() -> Result<usize, CliError> {
    match std::env::var(BFS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("{BFS_ENV}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_BFS_LIMIT),
    }
}

/// Report as text (one line per check) or JSON; exit code 1 on any failure.
pub fn verify_examples(examples: &WorkedExamples, json: bool) -> Output {
    let report = verify(examples);
    let stdout = if json {
        to_json(&report)
    } else {
        render_report(&report)
    };
    Output {
        stdout,
        code: if report.all_passed() { 0 } else { 1 },
    }
}

fn render_report(report: &Report) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        match &c.detail {
            Some(d) => writeln!(out, "{status}  {}: {d}", c.name),
            None => writeln!(out, "{status}  {}", c.name),
        }
        .unwrap();
    }
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    writeln!(out, "{} checks, {failed} failed", report.checks.len()).unwrap();
    out
}

/// Runs every verb except `serve`.
pub fn execute(command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Mutate {
            input,
            k,
            via,
            output,
        } => {
            let b: ExchangeMatrix = load(input)?;
            let text = to_json(&mutate(&b, *k, *via)?);
            match output {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|source| CliError::Io {
                        path: path.clone(),
                        source,
                    })?;
                    Ok(Output::ok(String::new()))
                }
                None => Ok(Output::ok(text)),
            }
        }
        Command::K0 { input, json } => {
            let g = cokernel(&k0_input(input)?);
            Ok(Output::ok(if *json {
                to_json(&g)
            } else {
                format!("{g}\n")
            }))
        }
        Command::Snf { input } => {
            let a: IntMatrix = load(input)?;
            Ok(Output::ok(to_json(&snf(&a))))
        }
        Command::Quiver { input } => {
            let text = match parse_any(input, &read(input)?)? {
                AnyInput::Quiver(q) => to_json(&q.exchange_matrix()),
                AnyInput::Matrix(b) => to_json(&b.to_quiver()),
                AnyInput::Triangulation(t) => to_json(&typea::quiver_of(&t)),
            };
            Ok(Output::ok(text))
        }
        Command::TypeaFlip { input, diagonal } => {
            let t: Triangulation = load(input)?;
            let (next, mv) = typea::flip(&t, *diagonal)?;
            Ok(Output::ok(to_json(&serde_json::json!({
                "triangulation": next,
                "move": mv,
            }))))
        }
        Command::TypeaPath { from, to, with_t } => {
            let a: Triangulation = load(from)?;
            let b: Triangulation = load(to)?;
            let moves = typea::flip_path_with_limit(&a, &b, bfs_limit()?)?;
            let mut out = serde_json::json!({ "length": moves.len(), "moves": moves });
            if *with_t {
                out["t"] = serde_json::to_value(typea::composed_t_along(&a, &moves)?)
                    .expect("serializable output");
            }
            Ok(Output::ok(to_json(&out)))
        }
        Command::VerifyExamples { json, fixtures } => {
            let examples = match fixtures {
                Some(path) => load(path)?,
                None => WorkedExamples::new(),
            };
            Ok(verify_examples(&examples, *json))
        }
        Command::Serve { .. } => unreachable!("serve is handled by the binary"),
    }
}
