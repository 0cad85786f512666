//! `imzv` — batch verification of interpolated multiple zeta value
//! identities: symbolic kernel relations, their finite (mod p) analogues,
//! and numeric consistency checks.

use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use imzv_cli::formats::{
    index_json, indexsum_json, modpoly_json, numeric_json, parse_index, parse_prime_range,
};
use imzv_cli::report::{summarize, write_csv, write_json};
use imzv_cli::suites::{run_suite, SuiteOptions, SUITE_NAMES};

use imzv_core::finite::{primes_in, Fp};
use imzv_core::index::Index;
use imzv_core::interp::{g_interp, g_poly, h_poly, interpolate_index};
use imzv_core::numeric::mzv_numeric;
use imzv_core::rat::{parse_rat, Rat};

#[derive(Parser)]
#[command(
    name = "imzv",
    version,
    about = "Exact and numeric verification of interpolated multiple zeta value identities",
    after_help = "Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalTarget {
    /// The Ohno kernel of (index, m).
    #[value(name = "g")]
    Kernel,
    /// The expanded kernel of (index, m).
    #[value(name = "h")]
    Expanded,
    /// The interpolated kernel of (index, m).
    #[value(name = "G")]
    KernelInterp,
    /// The interpolation map applied to the index.
    #[value(name = "It")]
    Interpolation,
    /// The dual index.
    #[value(name = "dual")]
    Dual,
    /// The Hoffman dual index.
    #[value(name = "hoffman-dual")]
    HoffmanDual,
    /// Truncated real multiple zeta value.
    #[value(name = "zeta")]
    Zeta,
    /// Per-prime interpolated harmonic sums.
    #[value(name = "zetaA")]
    ZetaFinite,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite, streaming one report per instance.
    Check {
        /// Suite to run.
        #[arg(value_parser = PossibleValuesParser::new(SUITE_NAMES))]
        suite: String,
        /// Largest index weight in the sweep.
        #[arg(long)]
        max_weight: Option<u32>,
        /// Largest shift m in the sweep.
        #[arg(long)]
        max_m: Option<u32>,
        /// Largest total weight k for the sum-formula style suites.
        #[arg(long, alias = "k-max")]
        k_max: Option<u32>,
        /// Inclusive prime range, e.g. 11..47.
        #[arg(long, value_parser = parse_prime_range)]
        primes: Option<(u64, u64)>,
        /// Truncation point of the real sums.
        #[arg(long)]
        trunc: Option<usize>,
        /// Absolute tolerance of the numeric comparisons.
        #[arg(long)]
        tol: Option<f64>,
        /// Interpolation point as an exact rational, e.g. 1/2. Numeric
        /// suites default to checking 0, 1/2 and 1.
        #[arg(long, value_parser = parse_rat_arg)]
        t: Option<Rat>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Omit timing fields so identical runs are byte-identical.
        #[arg(long)]
        stable: bool,
        /// Number of worker threads (default: all cores). Output order is
        /// deterministic either way.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Evaluate a single object and print it as JSON.
    Eval {
        target: EvalTarget,
        /// Comma-separated index, e.g. 2,1,3 (empty string for the empty
        /// index).
        #[arg(long, value_parser = parse_index)]
        index: Index,
        /// Shift m for the kernel targets.
        #[arg(long, default_value_t = 0)]
        m: u32,
        /// Truncation point for zeta.
        #[arg(long, default_value_t = 1_000_000)]
        trunc: usize,
        /// Inclusive prime range for zetaA.
        #[arg(long, value_parser = parse_prime_range, default_value = "11..47")]
        primes: (u64, u64),
    },
}

fn parse_rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check {
            suite,
            max_weight,
            max_m,
            k_max,
            primes,
            trunc,
            tol,
            t,
            format,
            stable,
            jobs,
        } => {
            if let Some(jobs) = jobs {
                // order restoration does not depend on the pool size
                if let Err(e) = rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build_global()
                {
                    eprintln!("imzv: cannot size the thread pool: {e}");
                    return ExitCode::from(2);
                }
            }
            let opts = SuiteOptions {
                max_weight,
                max_m,
                k_max,
                primes,
                trunc,
                tol,
                t_value: t,
            };
            let reports = match run_suite(&suite, &opts) {
                Ok(reports) => reports,
                Err(e) => {
                    eprintln!("imzv: {e}");
                    return ExitCode::from(2);
                }
            };
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            let written = match format {
                Format::Json => write_json(&mut out, &reports, stable),
                Format::Csv => write_csv(&mut out, &reports, stable),
            };
            if let Err(e) = written {
                eprintln!("imzv: cannot write reports: {e}");
                return ExitCode::from(2);
            }
            let (pass, fail) = summarize(&reports);
            eprintln!("imzv: {suite}: {pass} passed, {fail} failed");
            if fail == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Eval {
            target,
            index,
            m,
            trunc,
            primes,
        } => match eval_target(target, &index, m, trunc, primes) {
            Ok(value) => {
                println!("{value}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("imzv: {e}");
                ExitCode::from(2)
            }
        },
    }
}

fn eval_target(
    target: EvalTarget,
    index: &Index,
    m: u32,
    trunc: usize,
    primes: (u64, u64),
) -> Result<Value, String> {
    match target {
        EvalTarget::Kernel => Ok(indexsum_json(&g_poly(m as i64, index))),
        EvalTarget::Expanded => {
            if index.is_empty() {
                return Err("the expanded kernel needs a non-empty index".into());
            }
            Ok(indexsum_json(&h_poly(m as i64, index)))
        }
        EvalTarget::KernelInterp => Ok(indexsum_json(&g_interp(m as i64, index))),
        EvalTarget::Interpolation => Ok(indexsum_json(&interpolate_index(index))),
        EvalTarget::Dual => index
            .dual()
            .map(|d| index_json(&d))
            .map_err(|e| e.to_string()),
        EvalTarget::HoffmanDual => index
            .hoffman_dual()
            .map(|d| index_json(&d))
            .map_err(|e| e.to_string()),
        EvalTarget::Zeta => mzv_numeric(index, trunc)
            .map(|v| numeric_json(&v))
            .map_err(|e| e.to_string()),
        EvalTarget::ZetaFinite => {
            let mut rows = Vec::new();
            for p in primes_in(primes.0, primes.1) {
                let fp = Fp::new(p).map_err(|e| e.to_string())?;
                rows.push(modpoly_json(&fp.zeta_t(index)));
            }
            Ok(json!(rows))
        }
    }
}
