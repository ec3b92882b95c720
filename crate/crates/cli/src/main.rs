//! `conseq`: close sets under a logic-system, check consequence-operator
//! laws, count influence multiplicities and emit chain systems.
//!
//! Exit codes: 0 on success, 1 on usage, parse or validation errors, 2 when a
//! checked property fails.

mod report;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use conseq_core::{
    chain_elements, chain_system, check_axioms, close, closed_form_binary, closed_form_ternary,
    parse_bytes, parse_set, render_system, tabulate, verify_theorem_2_3, weight_binary,
    weight_ternary, DeductionSet, LawReport, LogicSystem, SystemDocument, UNIVERSE_CAP,
};

use report::{OutputMode, Record};

#[derive(Debug, Parser)]
#[command(name = "conseq", version, about = "Deduction with mixed logic-systems")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "lines")]
    output: OutputMode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Close a set of symbols under the rules of a system.
    Close {
        file: PathBuf,
        /// Comma-separated symbol names; a leading `*` is ignored.
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        /// Use the one-pass closed form; fails unless the system is mixed
        /// ternary or mixed binary.
        #[arg(long)]
        fastpath: bool,
    },
    /// Tabulate the generated operator and check the consequence axioms.
    Check {
        file: PathBuf,
        /// Largest universe to enumerate (at most 16).
        #[arg(long, default_value_t = UNIVERSE_CAP)]
        universe_cap: usize,
    },
    /// Check both directions of the closed-form characterization of a mixed
    /// ternary system.
    #[command(name = "verify-thm23")]
    VerifyThm23 { file: PathBuf },
    /// Count the rules backing a conclusion.
    Influence {
        file: PathBuf,
        #[arg(long)]
        conclusion: String,
        /// Anchor premise (ternary systems).
        #[arg(long)]
        premise: Option<String>,
    },
    /// Build the chain system over `{prefix}0 ..= {prefix}{length}`.
    Chain {
        /// Number of links in the chain.
        #[arg(long)]
        length: usize,
        #[arg(long, default_value = "s")]
        prefix: String,
        /// Print the chain as a `.lgs` document instead of checking it.
        #[arg(long)]
        emit: bool,
    },
    /// Print the canonical rendering of a system.
    Canon { file: PathBuf },
}

enum Failure {
    /// Exit code 1.
    Invalid(String),
    /// Exit code 2.
    PropertyFailed,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut out = Output {
        mode: cli.output,
        stdout: io::stdout().lock(),
    };
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::PropertyFailed) => ExitCode::from(2),
    }
}

struct Output<W> {
    mode: OutputMode,
    stdout: W,
}

impl<W: Write> Output<W> {
    fn emit(&mut self, record: Record) -> Result<(), Failure> {
        writeln!(self.stdout, "{}", record.render(self.mode))?;
        Ok(())
    }
}

fn load(path: &Path) -> Result<SystemDocument, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    parse_bytes(&bytes)
        .map(|doc| doc.with_source_name(path.display().to_string()))
        .map_err(|e| {
            Failure::Invalid(format!(
                "{}:{}:{}: {}",
                path.display(),
                e.line,
                e.column,
                e.kind
            ))
        })
}

fn run<W: Write>(command: Command, out: &mut Output<W>) -> Result<(), Failure> {
    match command {
        Command::Close {
            file,
            input,
            fastpath,
        } => {
            let doc = load(&file)?;
            let x = parse_set(&doc.language, &input)?;
            let (path, result) = if fastpath {
                fast_close(&doc.system, &x)?
            } else {
                ("generic", close(&doc.system, &x)?)
            };
            out.emit(
                Record::new("close", result.to_string())
                    .field("path", path)
                    .field("size", result.len())
                    .field("result", &result),
            )
        }
        Command::Check { file, universe_cap } => {
            if universe_cap > UNIVERSE_CAP {
                return Err(Failure::Invalid(format!(
                    "--universe-cap may not exceed {UNIVERSE_CAP}"
                )));
            }
            let doc = load(&file)?;
            let universe = DeductionSet::from_ids(doc.language.clone(), doc.language.ids());
            if universe.len() > universe_cap {
                return Err(Failure::Invalid(format!(
                    "universe of {} symbols exceeds the cap of {universe_cap}",
                    universe.len()
                )));
            }
            let table = tabulate(&doc.system, &universe)?;
            emit_report("check", &check_axioms(&table), out)
        }
        Command::VerifyThm23 { file } => {
            let doc = load(&file)?;
            emit_report("verify-thm23", &verify_theorem_2_3(&doc.system)?, out)
        }
        Command::Influence {
            file,
            conclusion,
            premise,
        } => {
            let doc = load(&file)?;
            let weight = match &premise {
                Some(p) => weight_ternary(&doc.system, p, &conclusion)?,
                None => weight_binary(&doc.system, &conclusion)?,
            };
            let rules = weight
                .matched
                .iter()
                .map(|i| {
                    doc.line_map
                        .get_index(*i)
                        .map_or(0, |(_, line)| *line)
                        .to_string()
                })
                .collect::<Vec<_>>()
                .join(",");
            let anchor = premise
                .as_deref()
                .map(|p| format!(" via {p}"))
                .unwrap_or_default();
            out.emit(
                Record::new(
                    "influence",
                    format!("{conclusion}{anchor}: multiplicity {}", weight.multiplicity),
                )
                .field("conclusion", &conclusion)
                .field("premise", premise.as_deref().unwrap_or(""))
                .field("multiplicity", weight.multiplicity)
                .field("lines", rules),
            )
        }
        Command::Chain {
            length,
            prefix,
            emit,
        } => {
            let elements = chain_elements(&prefix, length)?;
            let system = chain_system(&elements)?;
            if emit {
                write!(out.stdout, "{}", render_system(system.language(), &system))?;
                return Ok(());
            }
            check_chain(&system, &elements, out)
        }
        Command::Canon { file } => {
            let doc = load(&file)?;
            write!(out.stdout, "{doc}")?;
            Ok(())
        }
    }
}

fn fast_close(
    system: &LogicSystem,
    x: &DeductionSet,
) -> Result<(&'static str, DeductionSet), Failure> {
    if system.is_mixed_ternary().is_ok() {
        return Ok(("ternary", closed_form_ternary(system, x)?));
    }
    if system.is_mixed_binary().is_ok() {
        return Ok(("binary", closed_form_binary(system, x)?));
    }
    let all_binary = system.rules().all(|r| r.arity() == 2);
    let why = if all_binary {
        system.is_mixed_binary().unwrap_err()
    } else {
        system.is_mixed_ternary().unwrap_err()
    };
    Err(Failure::Invalid(format!(
        "--fastpath refused, system is not mixed: {why}"
    )))
}

fn emit_report<W: Write>(
    command: &str,
    report: &LawReport,
    out: &mut Output<W>,
) -> Result<(), Failure> {
    for verdict in &report.verdicts {
        let status = if verdict.passed() { "pass" } else { "fail" };
        let line = match &verdict.counterexample {
            Some(w) => format!("{}: {status} counterexample {w}", verdict.law),
            None => format!("{}: {status}", verdict.law),
        };
        let mut record = Record::new(command, line)
            .field("law", verdict.law)
            .field("verdict", status);
        if let Some(w) = &verdict.counterexample {
            record = record.field("counterexample", w);
        }
        out.emit(record)?;
    }
    out.emit(
        Record::new(
            command,
            format!("subsets checked: {}", report.subsets_checked),
        )
        .field("subsets_checked", report.subsets_checked)
        .field("passed", report.passed()),
    )?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::PropertyFailed)
    }
}

fn check_chain<W: Write>(
    system: &LogicSystem,
    elements: &[conseq_core::Symbol],
    out: &mut Output<W>,
) -> Result<(), Failure> {
    let lambda = elements.len() - 1;
    let mut samples = vec![0, 1, lambda / 2, lambda];
    samples.dedup();
    let mut ok = true;
    for i in samples {
        let start = DeductionSet::from_names(system.language().clone(), [elements[i].name()])?;
        let closed = close(system, &start)?;
        let expected = lambda + 1 - i;
        let full = closed.len() == lambda + 1;
        let holds = closed.len() == expected
            && elements[i..].iter().all(|e| closed.contains_name(e.name()))
            && full == (i == 0);
        ok &= holds;
        out.emit(
            Record::new(
                "chain",
                format!(
                    "from {}: {} of {} symbols{}{}",
                    elements[i],
                    closed.len(),
                    lambda + 1,
                    if full { " (full)" } else { "" },
                    if holds { "" } else { " UNEXPECTED" },
                ),
            )
            .field("start", &elements[i])
            .field("size", closed.len())
            .field("full", full)
            .field("verdict", if holds { "pass" } else { "fail" }),
        )?;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::PropertyFailed)
    }
}
