use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dickson_core::identity::{Conventions, IdentityCase, IdentityId};
use dickson_harness::parse::parse_bindings;
use dickson_harness::{convergence_table, eval::eval_one, run_suite, table_csv, HarnessError, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "dickson-verify",
    version,
    about = "Numerically verify Dickson-polynomial generating-function identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a case suite and write a residual report.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the suite seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Overrides the report path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate one expression: upper_gamma, lower_gamma, dickson_first, dickson_second, theorem_lhs, theorem_rhs.
    Eval {
        expr: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Print partial sums of an identity's left side as CSV.
    Table {
        #[arg(long)]
        case: String,
        /// Comma-separated bindings such as `k=0.5,a=2,x=0.5,z=1/3`.
        #[arg(long, default_value = "")]
        params: String,
        /// Comma-separated truncation orders.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
    },
}

fn run(cli: Cli) -> Result<i32, HarnessError> {
    match cli.command {
        Command::Verify { config, seed, out } => {
            let mut cfg = SuiteConfig::load(&config)?;
            if let Some(seed) = seed {
                cfg.seed = seed;
            }
            if let Some(out) = out {
                cfg.output.path = out;
            }
            let summary = run_suite(&cfg)?;
            println!(
                "total={} passed={} failed={} errored={} branch_flagged={} wall_time={:.3}s report={}",
                summary.total,
                summary.passed,
                summary.failed,
                summary.errored,
                summary.branch_flagged,
                summary.wall_time.as_secs_f64(),
                cfg.output.path.display()
            );
            Ok(summary.exit_code())
        }
        Command::Eval { expr, args } => {
            println!("{}", eval_one(&expr, &args)?);
            Ok(0)
        }
        Command::Table { case, params, n } => {
            let id: IdentityId = case.parse().map_err(|_| HarnessError::Usage(format!("unknown case id {case:?}")))?;
            let bindings = parse_bindings(params.split(',').filter(|s| !s.trim().is_empty()))?;
            let case = IdentityCase::new(id, bindings).map_err(|e| HarnessError::Usage(e.to_string()))?;
            let rows = convergence_table(&case, &n, Conventions::default())?;
            print!("{}", table_csv(&rows));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
