//! Batch command-line driver.

use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::mpsc;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bg::lk::{lk_saturate, LkVerdict};
use crate::engine::{
    explain, prove, DefineMode, EngineConfig, InputClause, ProverResult, Role,
    SelectionStrategy,
};
use crate::simplify::BgSimpMode;
use crate::sym::VarKind;

use super::parser::{parse_problem_file, ParseOptions};
use super::szs::{status_line, status_of, SzsStatus, OUTPUT_END, OUTPUT_START};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IntVarsOpt {
    Abstraction,
    Ordinary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BgSimpOpt {
    Cautious,
    Aggressive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DefineOpt {
    Off,
    Standard,
    RecklessPre,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SelectOpt {
    None,
    LargestNegative,
}

#[derive(Args, Clone, Debug)]
pub struct ProveArgs {
    /// Problem file in the typed clausal format.
    pub file: Option<PathBuf>,

    /// Kind of unmarked integer variables.
    #[arg(long, value_enum, default_value = "abstraction")]
    pub int_vars: IntVarsOpt,

    /// Background simplification strength.
    #[arg(long, value_enum, default_value = "cautious")]
    pub bg_simp: BgSimpOpt,

    /// Definition introduction mode.
    #[arg(long, value_enum, default_value = "standard")]
    pub define: DefineOpt,

    /// CPU time budget in seconds.
    #[arg(long)]
    pub timeout: Option<f64>,

    /// Run the background refutation check every N iterations.
    #[arg(long, default_value_t = 10)]
    pub close_period: usize,

    /// Print the refutation between SZS output markers.
    #[arg(long)]
    pub proof: bool,

    /// Time-slice both variable-kind configurations in parallel.
    #[arg(long)]
    pub auto: bool,

    /// Directories searched for includes (after the input's directory).
    #[arg(long = "include-path")]
    pub include_path: Vec<PathBuf>,

    /// Literal selection strategy.
    #[arg(long, value_enum, default_value = "none")]
    pub select: SelectOpt,

    /// Treat the input as sufficiently complete when reporting saturation.
    #[arg(long)]
    pub assume_sufficiently_complete: bool,

    /// Clause budget.
    #[arg(long, default_value_t = 200_000)]
    pub max_clauses: usize,

    /// Iteration budget.
    #[arg(long, default_value_t = 100_000)]
    pub max_steps: usize,

    /// Operator precedence override: comma-separated names, highest first.
    #[arg(long, value_delimiter = ',')]
    pub precedence: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Saturate a problem and report its SZS status (the default).
    Prove(ProveArgs),
    /// Linear-integer saturation mode: decides pure arithmetic clause sets
    /// over the integers exactly; other inputs run with domain-element
    /// abstraction and the arithmetic clause-set monitor.
    LiaSaturate(ProveArgs),
}

#[derive(Parser, Debug)]
#[command(name = "hsprover", version, about = "Hierarchic superposition prover modulo linear integer arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    #[clap(flatten)]
    pub direct: ProveArgs,
}

fn engine_config(args: &ProveArgs, lia_mode: bool, cancel: Option<Arc<AtomicBool>>) -> EngineConfig {
    EngineConfig {
        bg_simp: match args.bg_simp {
            BgSimpOpt::Cautious => BgSimpMode::Cautious,
            BgSimpOpt::Aggressive => BgSimpMode::Aggressive,
        },
        define_mode: match args.define {
            DefineOpt::Off => DefineMode::Off,
            DefineOpt::Standard => DefineMode::Standard,
            DefineOpt::RecklessPre => DefineMode::RecklessPre,
        },
        selection: match args.select {
            SelectOpt::None => SelectionStrategy::Nothing,
            SelectOpt::LargestNegative => SelectionStrategy::LargestNegative,
        },
        close_period: args.close_period,
        max_seconds: args.timeout,
        max_clauses: args.max_clauses,
        max_steps: args.max_steps,
        assume_sufficiently_complete: args.assume_sufficiently_complete,
        lia_mode,
        precedence_override: args.precedence.clone(),
        cancel,
        ..EngineConfig::default()
    }
}

fn parse_options(args: &ProveArgs, kind: VarKind) -> ParseOptions {
    ParseOptions {
        int_var_kind: kind,
        include_dirs: args.include_path.clone(),
    }
}

fn var_kind(args: &ProveArgs) -> VarKind {
    match args.int_vars {
        IntVarsOpt::Abstraction => VarKind::Abstraction,
        IntVarsOpt::Ordinary => VarKind::Ordinary,
    }
}

struct RunOutput {
    status: SzsStatus,
    result: Option<ProverResult>,
}

fn run_engine(inputs: Vec<InputClause>, cfg: EngineConfig) -> RunOutput {
    let result = prove(inputs, cfg);
    RunOutput {
        status: status_of(&result),
        result: Some(result),
    }
}

/// Runs both variable-kind configurations in parallel; the first definitive
/// verdict cancels the other worker.
fn run_auto(args: &ProveArgs, file: &PathBuf, lia_mode: bool) -> Result<RunOutput, String> {
    let cancel = Arc::new(AtomicBool::new(false));
    let (tx, rx) = mpsc::channel::<Result<RunOutput, String>>();
    let mut handles = Vec::new();
    for kind in [VarKind::Abstraction, VarKind::Ordinary] {
        let tx = tx.clone();
        let cancel = cancel.clone();
        let args = args.clone();
        let file = file.clone();
        handles.push(std::thread::spawn(move || {
            let opts = parse_options(&args, kind);
            let out = match parse_problem_file(&file, &opts) {
                Err(e) => Err(e.to_string()),
                Ok(problem) => {
                    let cfg = engine_config(&args, lia_mode, Some(cancel));
                    Ok(run_engine(problem.clauses, cfg))
                }
            };
            let _ = tx.send(out);
        }));
    }
    drop(tx);
    let mut fallback: Option<RunOutput> = None;
    let mut error: Option<String> = None;
    for received in rx {
        match received {
            Err(e) => error = Some(e),
            Ok(out) => {
                if out.status.is_definitive() {
                    cancel.store(true, Ordering::Relaxed);
                    for h in handles {
                        let _ = h.join();
                    }
                    return Ok(out);
                }
                // Prefer a more informative inconclusive status.
                let better = match (&fallback, out.status) {
                    (None, _) => true,
                    (Some(prev), s) => s == SzsStatus::Unknown && prev.status != SzsStatus::Unknown,
                };
                if better {
                    fallback = Some(out);
                }
            }
        }
    }
    for h in handles {
        let _ = h.join();
    }
    match (fallback, error) {
        (Some(out), _) => Ok(out),
        (None, Some(e)) => Err(e),
        (None, None) => Err("no worker produced a result".into()),
    }
}

/// Entry point used by `main` and by tests. Prints the SZS status line (and
/// the proof when requested) to stdout, errors to stderr, and returns the
/// exit code: 0 for a definitive verdict, 1 for inconclusive, 2 for input
/// errors.
pub fn run_cli<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with success exits.
            if e.use_stderr() {
                eprintln!("{e}");
                return 2;
            }
            print!("{e}");
            return 0;
        }
    };
    let (args, lia_mode) = match cli.command {
        Some(Command::Prove(args)) => (args, false),
        Some(Command::LiaSaturate(args)) => (args, true),
        None => (cli.direct, false),
    };
    let Some(file) = args.file.clone() else {
        eprintln!("error: no input file given");
        return 2;
    };
    let display = file.display().to_string();

    if args.auto {
        return match run_auto(&args, &file, lia_mode) {
            Ok(out) => finish(out, &display, &args),
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        };
    }

    let opts = parse_options(&args, var_kind(&args));
    let problem = match parse_problem_file(&file, &opts) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };

    if lia_mode {
        // A pure background problem in the supported fragment is decided
        // outright.
        let clauses: Vec<_> = problem.clauses.iter().map(|ic| ic.clause.clone()).collect();
        if clauses.iter().all(|c| c.is_bg()) {
            if let Ok((_, verdict)) = lk_saturate(&clauses) {
                let has_conjecture = problem
                    .clauses
                    .iter()
                    .any(|ic| ic.role == Role::NegatedConjecture);
                let status = match verdict {
                    LkVerdict::UnsatOverZ if has_conjecture => SzsStatus::Theorem,
                    LkVerdict::UnsatOverZ => SzsStatus::Unsatisfiable,
                    LkVerdict::SatOverZ => SzsStatus::Satisfiable,
                };
                println!("{}", status_line(status, &display));
                return status.exit_code();
            }
        }
    }

    let cfg = engine_config(&args, lia_mode, None);
    let out = run_engine(problem.clauses, cfg);
    finish(out, &display, &args)
}

fn finish(out: RunOutput, display: &str, args: &ProveArgs) -> i32 {
    println!("{}", status_line(out.status, display));
    if args.proof {
        if let Some(result) = &out.result {
            if let Some(proof) = explain(result) {
                println!("{OUTPUT_START}");
                print!("{proof}");
                println!("{OUTPUT_END}");
            }
        }
    }
    out.status.exit_code()
}
