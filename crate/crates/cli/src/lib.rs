//! The `qhsa` command line: argument parsing, input resolution and the
//! subcommands. [`run`] returns the process exit code.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 on any
//! input error (unreadable file, malformed document, unusable twistor).

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use qhsa_core::document::{
    parse_structure, parse_twist, serialize_structure, serialize_twist, DocumentError, StructureDocument,
    TwistDocument,
};
use qhsa_core::drinfeld::{DrinfeldData, DrinfeldError};
use qhsa_core::fixtures;
use qhsa_core::report::CheckReport;
use qhsa_core::suite::{run_suites, run_twistor_suites, ReportDocument, Suite};
use qhsa_core::twist::{
    opposite_structure, prime_structure, tensor_product_structure, twist_structure, TwistError, Twistor,
};
use qhsa_core::QhsaStructure;

/// Directory searched for bare fixture names before the bundled set.
pub const FIXTURE_DIR_VAR: &str = "QHSA_FIXTURE_DIR";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qhsa", version, about = "Exact checks for quasi-Hopf superalgebra structure documents")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run check suites on a structure (and optionally a twistor).
    Check {
        structure: String,
        /// Comma-separated suite names; defaults to every suite except `triangular`.
        #[arg(long, value_delimiter = ',')]
        suites: Vec<Suite>,
        /// Also check a twistor against the structure and the twisted structure.
        #[arg(long)]
        twistor: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Validate the algebra and the structure maps only.
    Validate {
        structure: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Write a transformed structure and check it.
    Transform {
        structure: String,
        #[command(flatten)]
        kind: TransformKind,
        /// Where to write the transformed structure document.
        #[arg(long)]
        output: PathBuf,
        /// Name recorded in the written document.
        #[arg(long)]
        name: Option<String>,
        /// Where to write the report; standard output if absent.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        timing: bool,
    },
    /// Compute the Drinfeld twist of a structure.
    Drinfeld {
        structure: String,
        /// Write `F_D` with its inverse and normalization as a twistor document.
        #[arg(long)]
        emit_twist: Option<PathBuf>,
        /// Run the full Drinfeld theorem battery.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TransformKind {
    /// Twist by the given twistor document.
    #[arg(long)]
    twist: Option<String>,
    #[arg(long)]
    opposite: bool,
    #[arg(long)]
    prime: bool,
    /// Graded tensor product with a second structure.
    #[arg(long)]
    tensor: Option<String>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Where to write the report; standard output if absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Include per-suite wall time in JSON reports.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("no file or fixture named \"{0}\"")]
    NotFound(String),
    #[error("{path}: {source}")]
    Document { path: String, source: DocumentError },
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error(transparent)]
    Drinfeld(#[from] DrinfeldError),
}

/// Reads a structure or twistor. A path that exists is read as is; otherwise
/// the name is looked up in the fixture directory and then among the bundled
/// documents, with or without its extension.
fn resolve(arg: &str, ext: &str, bundled: fn(&str) -> Option<&'static str>) -> Result<(String, String), CliError> {
    let read = |p: &Path| {
        fs::read_to_string(p).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        })
    };
    let path = Path::new(arg);
    if path.is_file() {
        return Ok((arg.to_string(), read(path)?));
    }
    let stem = arg.strip_suffix(ext).unwrap_or(arg);
    if let Some(dir) = std::env::var_os(FIXTURE_DIR_VAR) {
        for candidate in [Path::new(&dir).join(arg), Path::new(&dir).join(format!("{stem}{ext}"))] {
            if candidate.is_file() {
                return Ok((candidate.display().to_string(), read(&candidate)?));
            }
        }
    }
    bundled(stem)
        .map(|t| (format!("{stem}{ext}"), t.to_string()))
        .ok_or_else(|| CliError::NotFound(arg.to_string()))
}

fn load_structure(arg: &str) -> Result<QhsaStructure, CliError> {
    let (path, text) = resolve(arg, ".qhsa", fixtures::structure_text)?;
    parse_structure(&text)
        .and_then(|d| d.to_structure())
        .map_err(|source| CliError::Document { path, source })
}

fn load_twistor(arg: &str) -> Result<(String, TwistDocument), CliError> {
    let (path, text) = resolve(arg, ".twist", fixtures::twistor_text)?;
    let doc = parse_twist(&text).map_err(|source| CliError::Document {
        path: path.clone(),
        source,
    })?;
    Ok((path, doc))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn emit(doc: &ReportDocument, format: Format, timing: bool, output: Option<&Path>) -> Result<i32, CliError> {
    let text = match format {
        Format::Text => doc.to_string(),
        Format::Json if timing => doc.to_json(),
        Format::Json => doc.without_timing().to_json(),
    };
    match output {
        Some(p) => write_file(p, &text)?,
        None => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
        }
    }
    Ok(if doc.passed() { EXIT_PASS } else { EXIT_FAIL })
}

const BASE: [Suite; 4] = [Suite::Algebra, Suite::Structure, Suite::QuasiBialgebra, Suite::Antipode];

fn cmd_check(structure: &str, suites: &[Suite], twistor: Option<&str>, out: &OutputArgs) -> Result<i32, CliError> {
    let h = load_structure(structure)?;
    let selection = if suites.is_empty() { Suite::defaults() } else { suites.to_vec() };
    let mut doc = run_suites(&h, &selection);
    if let Some(arg) = twistor {
        let (path, t) = load_twistor(arg)?;
        let (f, inv) = t
            .elements(&h)
            .map_err(|source| CliError::Document { path, source })?;
        run_twistor_suites(&h, &f, inv.as_ref(), &mut doc);
    }
    emit(&doc, out.format, out.timing, out.output.as_deref())
}

fn cmd_validate(structure: &str, out: &OutputArgs) -> Result<i32, CliError> {
    let h = load_structure(structure)?;
    let doc = run_suites(&h, &[Suite::Algebra, Suite::Structure]);
    emit(&doc, out.format, out.timing, out.output.as_deref())
}

fn cmd_transform(
    structure: &str,
    kind: &TransformKind,
    output: &Path,
    name: Option<&str>,
    report: Option<&Path>,
    format: Format,
    timing: bool,
) -> Result<i32, CliError> {
    let h = load_structure(structure)?;
    let (result, doc) = if let Some(arg) = &kind.twist {
        let (path, t) = load_twistor(arg)?;
        let (f, inv) = t
            .elements(&h)
            .map_err(|source| CliError::Document { path, source })?;
        let twistor = Twistor::for_structure(&h, f.clone(), inv.clone())?;
        let mut doc = ReportDocument::new(h.name());
        run_twistor_suites(&h, &f, inv.as_ref(), &mut doc);
        (twist_structure(&h, &twistor), doc)
    } else {
        let result = if kind.opposite {
            opposite_structure(&h)?
        } else if kind.prime {
            prime_structure(&h)?
        } else {
            let b = load_structure(kind.tensor.as_deref().expect("one transform is required"))?;
            tensor_product_structure(&h, &b)?
        };
        let doc = run_suites(&result, &Suite::defaults());
        (result, doc)
    };
    let result = match name {
        Some(n) => result.with_name(n),
        None => result,
    };
    write_file(output, &serialize_structure(&StructureDocument::from_structure(&result)))?;
    emit(&doc, format, timing, report)
}

fn cmd_drinfeld(structure: &str, emit_twist: Option<&Path>, verify: bool, out: &OutputArgs) -> Result<i32, CliError> {
    let h = load_structure(structure)?;
    let mut selection = BASE.to_vec();
    if verify {
        selection.push(Suite::Drinfeld);
    }
    let mut doc = run_suites(&h, &selection);
    if !doc.passed() {
        return emit(&doc, out.format, out.timing, out.output.as_deref());
    }
    let data = DrinfeldData::compute(&h)?;
    let mut values = CheckReport::new();
    values.info("drinfeld.gamma", data.gamma.to_string());
    values.info("drinfeld.gamma_bar", data.gamma_bar.to_string());
    values.info("drinfeld.f_d", data.f_d.to_string());
    values.info("drinfeld.f_d_inverse", data.f_d_inverse.to_string());
    values.info(
        "drinfeld.normalization",
        format!("eps(alpha) = {}, eps(beta) = {}", data.normalization.0, data.normalization.1),
    );
    doc.push_report("drinfeld-values", values, 0.0);
    if let Some(path) = emit_twist {
        let twist = TwistDocument::from_element(
            format!("{}-drinfeld", h.name()),
            &data.f_d,
            Some(&data.f_d_inverse),
            Some(data.normalization.clone()),
        );
        write_file(path, &serialize_twist(&twist))?;
    }
    emit(&doc, out.format, out.timing, out.output.as_deref())
}

/// Runs a parsed command line and returns the exit code. Input errors are
/// reported on standard error.
pub fn run(cli: Cli) -> i32 {
    let outcome = match &cli.command {
        Command::Check {
            structure,
            suites,
            twistor,
            out,
        } => cmd_check(structure, suites, twistor.as_deref(), out),
        Command::Validate { structure, out } => cmd_validate(structure, out),
        Command::Transform {
            structure,
            kind,
            output,
            name,
            report,
            format,
            timing,
        } => cmd_transform(structure, kind, output, name.as_deref(), report.as_deref(), *format, *timing),
        Command::Drinfeld {
            structure,
            emit_twist,
            verify,
            out,
        } => cmd_drinfeld(structure, emit_twist.as_deref(), *verify, out),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("qhsa: {e}");
        EXIT_INPUT
    })
}

/// Parses `args` (program name first). Usage errors exit with code 2 through
/// clap; `--help` and `--version` exit with 0.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_PASS
            }
        }
    }
}
