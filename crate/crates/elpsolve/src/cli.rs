//! The `elpsolve` command.
//!
//! Exit codes: 0 when a worldview was found (or `--models 0` was given),
//! 1 when there is none, 2 on bad input and 3 when `--verify` finds a
//! disagreement.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::num::NonZeroUsize;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use elp_core::family::propagation_family;
use elp_core::normal_form::{normalize, restrict_worldview};
use elp_core::oracle::{enumerate_worldviews, worldviews_by_valuation, OracleBudget};
use elp_core::solver::{GeneratorKind, SolveError, SolverConfig, WorldviewSolver};
use elp_core::transform::TransformBundle;
use elp_core::{BeliefInterpretation, Program};

use crate::parser::parse_program;
use crate::report::{result_line, stats_line, worldview_block};

pub const EXIT_FOUND: i32 = 0;
pub const EXIT_NONE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    T0,
    G0,
    G1,
}

impl From<Generator> for GeneratorKind {
    fn from(g: Generator) -> Self {
        match g {
            Generator::T0 => GeneratorKind::T0,
            Generator::G0 => GeneratorKind::G0,
            Generator::G1 => GeneratorKind::G1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    T0,
    G0,
    G1,
    Nf,
}

/// Computes worldviews of ground epistemic logic programs.
#[derive(Debug, Parser)]
#[command(name = "elpsolve", version)]
pub struct Args {
    /// Program file; `-` reads standard input.
    #[arg(required_unless_present = "gen_family", conflicts_with = "gen_family")]
    pub file: Option<PathBuf>,

    /// Solve the propagation benchmark program of size N instead of a file.
    #[arg(long, value_name = "N")]
    pub gen_family: Option<usize>,

    #[arg(long, value_enum, default_value_t = Generator::G1)]
    pub generator: Generator,

    /// Number of worldviews to compute; 0 computes all of them.
    #[arg(long, value_name = "N", default_value_t = 1)]
    pub models: usize,

    /// Print candidate and test counters.
    #[arg(long)]
    pub stats: bool,

    /// Cross-check against the brute-force oracle and re-test skipped
    /// candidates.
    #[arg(long)]
    pub verify: bool,

    /// Print a companion program and exit.
    #[arg(long, value_enum, value_name = "PROGRAM")]
    pub emit: Option<Emit>,

    /// Only print the final result line.
    #[arg(long)]
    pub quiet: bool,
}

fn load(args: &Args, err: &mut dyn Write) -> Option<Program> {
    if let Some(n) = args.gen_family {
        return match propagation_family(n) {
            Ok(p) => Some(p),
            Err(e) => {
                let _ = writeln!(err, "elpsolve: {e}");
                None
            }
        };
    }
    let path = args.file.as_ref().expect("clap requires FILE or --gen-family");
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "elpsolve: cannot read {}: {e}", path.display());
            return None;
        }
    };
    match parse_program(&text) {
        Ok(parsed) => {
            for w in &parsed.warnings {
                let _ = writeln!(err, "{}:{w}", path.display());
            }
            Some(parsed.program)
        }
        Err(errors) => {
            for e in &errors {
                let _ = writeln!(err, "{}:{e}", path.display());
            }
            None
        }
    }
}

/// Checks the solver's answer against the brute-force oracle on the
/// original program, falling back to guessing subjective valuations when
/// there are too many atoms to enumerate belief interpretations. Returns a
/// description of the first disagreement.
fn verify_against_oracle(
    original: &Program,
    found: &[BeliefInterpretation],
    requested: Option<NonZeroUsize>,
    err: &mut dyn Write,
) -> Result<(), String> {
    let expected = match enumerate_worldviews(original, OracleBudget::default()) {
        Ok(w) => w,
        Err(_) => match worldviews_by_valuation(original) {
            Ok(w) => w,
            Err(e) => {
                let _ = writeln!(err, "elpsolve: oracle check skipped: {e}");
                return Ok(());
            }
        },
    };
    let expected: BTreeSet<_> = expected.into_iter().collect();
    let got: BTreeSet<_> = found.iter().cloned().collect();
    if got.len() != found.len() {
        return Err("solver reported the same worldview twice".into());
    }
    if !got.is_subset(&expected) {
        return Err("solver reported a belief set the oracle rejects".into());
    }
    let wanted = requested.map_or(expected.len(), |n| n.get().min(expected.len()));
    if got.len() != wanted {
        return Err(format!("solver found {} worldviews, the oracle {}", got.len(), expected.len()));
    }
    let _ = writeln!(err, "elpsolve: oracle agrees ({} worldviews)", expected.len());
    Ok(())
}

/// Runs the command with explicit arguments and output streams and returns
/// the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_FOUND };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&args, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "elpsolve: {e}");
            EXIT_INPUT
        }
    }
}

fn execute(args: &Args, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let Some(original) = load(args, err) else {
        return Ok(EXIT_INPUT);
    };
    let nf = match normalize(&original) {
        Ok(nf) => nf.program,
        Err(e) => {
            writeln!(err, "elpsolve: {e}")?;
            return Ok(EXIT_INPUT);
        }
    };

    if let Some(emit) = args.emit {
        let text = match emit {
            Emit::Nf => nf.to_string(),
            _ => match TransformBundle::new(&nf) {
                Ok(b) => match emit {
                    Emit::T0 => b.t0.to_string(),
                    Emit::G0 => b.g0.to_string(),
                    _ => b.g1.to_string(),
                },
                Err(e) => {
                    writeln!(err, "elpsolve: {e}")?;
                    return Ok(EXIT_INPUT);
                }
            },
        };
        write!(out, "{text}")?;
        return Ok(EXIT_FOUND);
    }

    let requested = NonZeroUsize::new(args.models);
    let config = SolverConfig {
        generator: args.generator.into(),
        max_worldviews: requested,
        collect_stats: args.stats,
        verify: args.verify,
    };
    let mut solver = match WorldviewSolver::new(&nf, config) {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "elpsolve: {e}")?;
            return Ok(EXIT_INPUT);
        }
    };
    let found = match solver.solve() {
        Ok(found) => found,
        Err(e @ SolveError::SkipDisagreement) => {
            writeln!(err, "elpsolve: verification failed: {e}")?;
            return Ok(EXIT_VERIFY);
        }
        Err(e) => {
            writeln!(err, "elpsolve: internal error: {e}")?;
            return Ok(EXIT_VERIFY);
        }
    };

    let visible = original.user_atoms();
    if !args.quiet {
        let symbols = solver.bundle().symbols();
        for (i, wv) in found.iter().enumerate() {
            write!(out, "{}", worldview_block(i + 1, wv, symbols, &visible))?;
        }
    }

    if args.verify {
        let atoms = original.atoms();
        let projected: Vec<_> = found.iter().map(|w| restrict_worldview(&w.belief_set, &atoms)).collect();
        if let Err(msg) = verify_against_oracle(&original, &projected, requested, err) {
            writeln!(err, "elpsolve: verification failed: {msg}")?;
            return Ok(EXIT_VERIFY);
        }
        writeln!(err, "elpsolve: {} skipped candidates re-tested", solver.stats().skips_verified)?;
    }

    if args.stats {
        writeln!(out, "{}", stats_line(solver.stats()))?;
    }
    writeln!(out, "{}", result_line(found.len()))?;
    Ok(if found.is_empty() && requested.is_some() { EXIT_NONE } else { EXIT_FOUND })
}
