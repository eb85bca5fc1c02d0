//! The `homlie` command-line tool.
//!
//! Every subcommand prints one report: a JSON object (`--json`) or its
//! indented text rendering. Reports carry the schema version, the command
//! line, SHA-256 digests of every input file, a status and the result.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success; the answer is affirmative |
//! | 1 | mathematical negative: invalid input object, not isomorphic, not extensible, failed self-check |
//! | 2 | parse or usage error |
//! | 3 | a standing hypothesis fails (no diagonal section, non-diagonal standing sequence, unmet precondition) |

pub mod commands;
pub mod input;
pub mod output;

use std::collections::BTreeMap;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use homlie_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error in {path} at line {line}, column {column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("usage error: {0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) => EXIT_PARSE,
            CliError::Core(e) => match e {
                Error::InvalidAlgebra(_)
                | Error::InvalidRepresentation(_)
                | Error::InvalidExtensionData(_)
                | Error::NotExtensible(_)
                | Error::Singular(_) => EXIT_NEGATIVE,
                Error::DimensionMismatch { .. } | Error::UnsupportedDegree(_) => EXIT_PARSE,
                Error::NotDiagonal(_) | Error::StandingSequence(_) | Error::Precondition(_) | Error::Internal(_) => {
                    EXIT_HYPOTHESIS
                }
            },
        }
    }

    fn payload(&self) -> Value {
        match self {
            CliError::Parse {
                path,
                line,
                column,
                message,
            } => json!({"kind": "parse", "file": path, "line": line, "column": column, "message": message}),
            CliError::Usage(m) => json!({"kind": "usage", "message": m}),
            CliError::Core(e) => core_payload(e),
        }
    }
}

fn core_payload(e: &Error) -> Value {
    match e {
        Error::InvalidAlgebra(r) => json!({
            "kind": "invalid-algebra",
            "message": "invalid Hom-Lie algebra",
            "witnesses": r.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
        Error::InvalidExtensionData(r) => json!({
            "kind": "invalid-extension-data",
            "message": "invalid extension datum",
            "witnesses": r.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
        Error::InvalidRepresentation(w) => json!({
            "kind": "invalid-representation",
            "message": "invalid representation",
            "witnesses": [w],
        }),
        Error::NotExtensible(class) => json!({
            "kind": "not-extensible",
            "message": "the homomorphism is not extensible: its obstruction class is non-zero",
            "class": class,
        }),
        Error::NotDiagonal(m) => json!({
            "kind": "not-diagonal",
            "message": format!("not diagonal over ℚ: {m}"),
        }),
        Error::StandingSequence(s) => json!({
            "kind": "standing-sequence",
            "message": format!("not diagonal over ℚ: the sequence {s} has no twist-invariant splitting"),
            "sequence": s.to_string(),
        }),
        Error::Singular(what) => json!({"kind": "singular", "message": format!("{what} is singular")}),
        Error::Precondition(m) => json!({"kind": "precondition", "message": m}),
        Error::Internal(m) => json!({"kind": "internal", "message": m}),
        Error::DimensionMismatch { .. } | Error::UnsupportedDegree(_) => {
            json!({"kind": "usage", "message": e.to_string()})
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "homlie", version, about = "Exact computations with regular Hom-Lie algebras over ℚ")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// List the built-in fixtures and exit.
    #[arg(long)]
    pub fixtures: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

/// Algebra arguments are file paths or `fixture:NAME`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Hom-Lie axioms.
    Validate { algebra: String },
    /// Der(g) and Inn(g) with RREF bases, plus Out and Cen dimensions.
    Der { algebra: String },
    /// Out(g) = Der(g)/Inn(g) with its induced bracket and twist.
    Out { algebra: String },
    /// The center Cen(g).
    Center { algebra: String },
    /// C^k, Z^k, B^k and H^k of a representation.
    Cohomology {
        algebra: String,
        representation: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// Obstruction class of a morphism g -> Out(h).
    Obstruction { algebra: String, morphism: String },
    /// Isomorphism classes of extensions realizing a morphism g -> Out(h).
    Classify {
        algebra: String,
        morphism: String,
        /// Write one extension file per class basis element into this directory.
        #[arg(long)]
        out: Option<String>,
    },
    /// Decide whether two extension data are isomorphic.
    Iso { first: String, second: String },
    /// Build the total algebra of an extension datum.
    Build { extension: String },
    /// Extract an extension datum from a raw extension h -> total -> g.
    Extract { raw: String },
    /// Randomized self-check of core identities.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Der { .. } => "der",
            Command::Out { .. } => "out",
            Command::Center { .. } => "center",
            Command::Cohomology { .. } => "cohomology",
            Command::Obstruction { .. } => "obstruction",
            Command::Classify { .. } => "classify",
            Command::Iso { .. } => "iso",
            Command::Build { .. } => "build",
            Command::Extract { .. } => "extract",
            Command::Selfcheck { .. } => "selfcheck",
        }
    }
}

/// The result of a successfully evaluated command: a payload and whether
/// the answer is affirmative.
pub struct Outcome {
    pub affirmative: bool,
    pub result: Value,
}

/// Runs the tool on `args` (including the program name) and returns the
/// text to print and the exit code.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            return (e.render().to_string(), code);
        }
    };
    if cli.fixtures {
        return (fixture_list(cli.json), EXIT_OK);
    }
    let Some(command) = cli.command else {
        return ("usage error: a subcommand or --fixtures is required\n".into(), EXIT_PARSE);
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut loader = input::Loader::default();
    let outcome = commands::dispatch(&command, &mut loader);
    let (status, code, body_key, body) = match outcome {
        Ok(o) if o.affirmative => ("ok", EXIT_OK, "result", o.result),
        Ok(o) => ("negative", EXIT_NEGATIVE, "result", o.result),
        Err(e) => {
            let code = e.exit_code();
            let status = match code {
                EXIT_NEGATIVE => "negative",
                EXIT_PARSE => "parse-error",
                _ => "hypothesis-failure",
            };
            (status, code, "error", e.payload())
        }
    };
    let inputs: BTreeMap<String, String> = loader.digests().clone();
    let mut report = json!({
        "schema": input::SCHEMA,
        "command": {"name": command.name(), "args": echo},
        "inputs": inputs,
        "status": status,
        "exit_code": code,
    });
    report[body_key] = body;
    let text = if cli.json { output::to_json(&report) } else { output::to_text(&report) };
    (text, code)
}

fn fixture_list(as_json: bool) -> String {
    let names: Vec<&str> = homlie_core::homlie::FIXTURE_NAMES.to_vec();
    let notes = json!({
        "abelian_N": "N-dimensional abelian, twist = identity",
        "aff1_Q": "[e1,e2] = e2, twist = diag(1, Q) for a positive integer Q",
        "heisenberg3": "[e1,e2] = e3, twist = identity",
        "heisenberg3_236": "[e1,e2] = e3, twist = diag(2,3,6)",
        "sl2": "[h,e] = 2e, [h,f] = -2f, [e,f] = h, twist = identity",
    });
    let v = json!({"schema": input::SCHEMA, "fixtures": names, "descriptions": notes, "usage": "fixture:NAME"});
    if as_json {
        output::to_json(&v)
    } else {
        output::to_text(&v)
    }
}
