//! Command-line frontend: classify spinor batches, construct spinor
//! families, run verification suites, Hopf coordinates and mapping checks.

mod document;
mod error;
mod make;
mod report;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lounesto::par::{map_slice, Execution};
use lounesto::verify::{run_suite, Suite, VerifyConfig};
use lounesto::{Rep, DEFAULT_TOL};
use serde::Serialize;

use crate::document::{read_documents, InputFormat, SpinorDocument};
use crate::error::CliError;
use crate::make::{make, Family};
use crate::report::{
    classification_report, classification_table, hopf_report, hopf_table, map_table, mapping_report,
    suite_table, Extras, HopfRecord, MapRecord,
};

#[derive(Debug, Parser)]
#[command(
    name = "lounesto",
    version,
    about = "Spinor bilinears, Lounesto classes, ELKO and Hopf coordinates"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Representation of untagged input and of constructed output.
    #[arg(long, global = true, default_value = "chiral")]
    rep: Rep,
    /// Relative zero tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// JSON lines output (default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Aligned text table output.
    #[arg(long, global = true)]
    table: bool,
    /// Write output to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<String>,
    /// Process records on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Debug, Args)]
struct Input {
    /// JSON-lines or CSV file, "-" for stdin.
    path: String,
    #[arg(long, value_enum, default_value = "auto")]
    format: InputFormat,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify every spinor of a batch.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Include the mapping-condition report.
        #[arg(long)]
        mapping: bool,
        /// Include Hopf coordinates.
        #[arg(long)]
        hopf: bool,
    },
    /// Emit a spinor document of a named family.
    Make {
        #[command(subcommand)]
        family: Family,
    },
    /// Run a seeded verification suite.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hopf coordinates, chart comparison and obstruction per spinor.
    Hopf {
        #[command(flatten)]
        input: Input,
    },
    /// Conditions for mapping each spinor to an ELKO.
    MapCheck {
        #[command(flatten)]
        input: Input,
    },
}

fn execution(g: &Global) -> Execution {
    if g.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn json_lines<T: Serialize>(items: &[T]) -> String {
    items.iter().map(|x| serde_json::to_string(x).expect("reports serialize") + "\n").collect()
}

fn emit(g: &Global, text: &str) -> Result<(), CliError> {
    let (path, mut out): (&str, Box<dyn Write>) = match &g.output {
        Some(p) => {
            let f = File::create(p).map_err(|source| CliError::Io { path: p.clone(), source })?;
            (p.as_str(), Box::new(BufWriter::new(f)))
        }
        None => ("<stdout>", Box::new(BufWriter::new(std::io::stdout().lock()))),
    };
    let io = |source| CliError::Io { path: path.into(), source };
    out.write_all(text.as_bytes()).map_err(io)?;
    out.flush().map_err(io)
}

/// Exit status on success: 0, or 2 when an inconsistency was found.
fn run(cli: &Cli) -> Result<u8, CliError> {
    let g = &cli.global;
    if !(g.tol > 0.0 && g.tol.is_finite()) {
        return Err(CliError::Invalid(format!("--tol must be positive, got {}", g.tol)));
    }
    let exec = execution(g);
    match &cli.command {
        Command::Classify { input, mapping, hopf } => {
            let docs = read_documents(&input.path, input.format)?;
            let extras = Extras { mapping: *mapping, hopf: *hopf };
            let indexed: Vec<(usize, &SpinorDocument)> = docs.iter().enumerate().collect();
            let reports =
                map_slice(exec, &indexed, |(i, d)| classification_report(*i, d, g.rep, g.tol, extras));
            emit(g, &if g.table { classification_table(&reports) } else { json_lines(&reports) })?;
            Ok(if reports.iter().any(|r| r.inconsistent) { 2 } else { 0 })
        }
        Command::Make { family } => {
            let (psi, metadata) = make(family)?;
            let doc = SpinorDocument::from_spinor(&psi.to_rep(g.rep), metadata);
            emit(g, &json_lines(&[doc]))?;
            Ok(0)
        }
        Command::Verify { suite, samples, seed } => {
            let cfg = VerifyConfig { samples: *samples as usize, seed: *seed, tol: g.tol, execution: exec };
            let report = run_suite(*suite, &cfg);
            emit(g, &if g.table { suite_table(&report) } else { json_lines(&[&report]) })?;
            Ok(if report.passed { 0 } else { 2 })
        }
        Command::Hopf { input } => {
            let docs = read_documents(&input.path, input.format)?;
            let indexed: Vec<(usize, &SpinorDocument)> = docs.iter().enumerate().collect();
            let records = map_slice(exec, &indexed, |(i, d)| HopfRecord {
                index: *i,
                input: d.resolved(g.rep),
                hopf: hopf_report(d, g.rep, g.tol),
            });
            emit(g, &if g.table { hopf_table(&records) } else { json_lines(&records) })?;
            Ok(0)
        }
        Command::MapCheck { input } => {
            let docs = read_documents(&input.path, input.format)?;
            let indexed: Vec<(usize, &SpinorDocument)> = docs.iter().enumerate().collect();
            let records = map_slice(exec, &indexed, |(i, d)| MapRecord {
                index: *i,
                input: d.resolved(g.rep),
                tol: g.tol,
                mapping: mapping_report(d, g.rep, g.tol),
            });
            let inconsistent = records.iter().any(|r| r.mapping.inconsistent);
            emit(g, &if g.table { map_table(&records) } else { json_lines(&records) })?;
            Ok(if inconsistent { 2 } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
