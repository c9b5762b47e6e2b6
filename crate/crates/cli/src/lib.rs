//! Command-line frontend: `decide`, `synth`, `verify` and `trace`.
//!
//! Exit codes are the machine contract: 0 for member / success / pass,
//! 1 for a negative answer (not a member, failed verification), 2 for usage,
//! parse and runtime errors.

pub mod json;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use d0l_synth::membership::decide_membership;
use d0l_synth::synth::{synthesize_general, SynthesisError};
use d0l_synth::verify::{verify_growth, Method};
use d0l_synth::{parse_polynomial, MembershipVerdict, Polynomial, SynthesisReport};
use num_bigint::BigInt;

use crate::json::{SystemDocument, VerdictDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

const DEFAULT_N_MAX: u64 = 10;

#[derive(Debug, Parser)]
#[command(name = "d0l", version, about = "Synthesize D0L-systems with polynomial growth")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the polynomial maps every natural number to a positive integer.
    Decide {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Build a D0L-system whose growth function is the polynomial.
    Synth {
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the result here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Synthesize, then check growth against the polynomial on [0, N].
    Verify {
        expr: String,
        #[arg(long = "n-max", default_value_t = DEFAULT_N_MAX)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Matrix)]
        method: MethodArg,
    },
    /// Print growth lengths next to polynomial values for n in [0, N].
    Trace {
        expr: String,
        #[arg(long = "n-max", default_value_t = DEFAULT_N_MAX)]
        n_max: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Matrix,
    Expand,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Matrix => Method::Matrix,
            MethodArg::Expand => Method::Expand,
            MethodArg::Both => Method::Both,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}

fn parse(expr: &str) -> Result<Polynomial, String> {
    parse_polynomial(expr).map_err(|e| format!("cannot parse `{expr}`: {e}"))
}

fn io(e: std::io::Error) -> String {
    e.to_string()
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Decide { expr, json } => {
            let f = parse(expr)?;
            let verdict = decide_membership(&f).map_err(|e| e.to_string())?;
            let text = if *json {
                let doc = VerdictDocument::new(&f, &verdict);
                serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())? + "\n"
            } else {
                render_verdict(&f, &verdict)
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(if verdict.is_member() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Synth { expr, format, out: path } => {
            let report = match synthesize(expr, out)? {
                Ok(report) => report,
                Err(code) => return Ok(code),
            };
            let text = match format {
                Format::Json => {
                    let doc = SystemDocument::from_report(&report);
                    serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())? + "\n"
                }
                Format::Text => render_report(&report),
            };
            match path {
                Some(path) => std::fs::write(path, text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { expr, n_max, method } => {
            let report = match synthesize(expr, out)? {
                Ok(report) => report,
                Err(code) => return Ok(code),
            };
            let outcome = verify_growth(&report.system, &report.input, *n_max, (*method).into())
                .map_err(|e| format!("{e}; try --method matrix"))?;
            writeln!(out, "{outcome}").map_err(io)?;
            Ok(if outcome.passed() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Trace { expr, n_max } => {
            let report = match synthesize(expr, out)? {
                Ok(report) => report,
                Err(code) => return Ok(code),
            };
            out.write_all(render_trace(&report, *n_max).as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

/// `Ok(Err(code))` when the polynomial is rejected; the verdict has already
/// been printed.
fn synthesize(expr: &str, out: &mut dyn Write) -> Result<Result<SynthesisReport, i32>, String> {
    let f = parse(expr)?;
    match synthesize_general(&f) {
        Ok(report) => Ok(Ok(report)),
        Err(SynthesisError::NotInF(verdict)) => {
            out.write_all(render_verdict(&f, &verdict).as_bytes()).map_err(io)?;
            Ok(Err(EXIT_NEGATIVE))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn join(values: &[BigInt]) -> String {
    values.iter().map(|v| format!(" {v}")).collect()
}

pub fn render_verdict(f: &Polynomial, verdict: &MembershipVerdict) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "polynomial: {f}");
    match verdict {
        MembershipVerdict::Member(cert) => {
            let _ = writeln!(s, "verdict: Member");
            let _ = writeln!(s, "shift_k: {}", cert.shift_k);
            let _ = writeln!(s, "difference_values_at_k:{}", join(&cert.difference_values_at_k));
            let _ = writeln!(s, "prefix_values:{}", join(&cert.prefix_values));
        }
        MembershipVerdict::NotMember { witness_n, reason } => {
            let _ = writeln!(s, "verdict: NotMember");
            let _ = writeln!(s, "witness_n: {witness_n}");
            let _ = writeln!(s, "reason: {}", reason.as_str());
        }
    }
    s
}

/// Header lines followed by one `a -> w` line per letter.
pub fn render_report(report: &SynthesisReport) -> String {
    let s = &report.system;
    let mut text = String::new();
    let _ = writeln!(text, "polynomial: {}", report.input);
    let _ = writeln!(text, "degree: {}", report.degree);
    let _ = writeln!(text, "shift_k: {}", report.shift_k);
    let _ = writeln!(text, "difference_values:{}", join(&report.difference_values));
    let _ = write!(text, "{s}");
    text
}

pub fn render_trace(report: &SynthesisReport, n_max: u64) -> String {
    let table = report.system.growth_table(n_max);
    let rows: Vec<[String; 4]> = table
        .entries()
        .map(|(n, len)| {
            let value = report.input.evaluate(&BigInt::from(n));
            let ok = value == BigInt::from(len.clone()).into();
            [n.to_string(), len.to_string(), value.to_string(), if ok { "✓" } else { "✗" }.to_owned()]
        })
        .collect();
    let header = ["n".to_owned(), "|σⁿ(axiom)|".to_owned(), "F(n)".to_owned(), "match".to_owned()];
    let mut widths = [0usize; 4];
    for row in std::iter::once(&header).chain(&rows) {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut text = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let cells: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        let _ = writeln!(text, "{}", cells.join("  ").trim_end());
    }
    text
}
