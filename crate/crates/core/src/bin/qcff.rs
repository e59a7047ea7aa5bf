use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qcff::report::{factor_report, run_report, JobConfig, RunOptions};
use qcff::selfcheck::{run_selfcheck, Scope};
use qcff::Error;

#[derive(Parser)]
#[command(
    name = "qcff",
    version,
    about = "Cyclotomic and quasi-cyclotomic function field toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Small,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on a JSON job config.
    Report {
        #[arg(long)]
        config: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow an empty pair set and report only the cyclotomic layer.
        #[arg(long)]
        cyclotomic_only: bool,
    },
    /// Run the exhaustive property suites.
    Selfcheck {
        #[arg(long, value_enum, default_value = "small")]
        scope: ScopeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Factor a polynomial over F_q.
    Factor {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(err.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Report {
            config,
            out,
            cyclotomic_only,
        } => {
            let report = JobConfig::load(&config)
                .and_then(|cfg| run_report(&cfg, RunOptions { cyclotomic_only }));
            let json = match report {
                Ok(r) => r.to_json(),
                Err(e) => return fail(e),
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, json) {
                        return fail(Error::Io(format!("{}: {e}", path.display())));
                    }
                }
                None => print!("{json}"),
            }
            ExitCode::SUCCESS
        }
        Command::Selfcheck { scope, seed } => {
            let scope = match scope {
                ScopeArg::Small => Scope::Small,
                ScopeArg::Full => Scope::Full,
            };
            let summary = match run_selfcheck(scope, seed) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            for suite in &summary.suites {
                println!("{suite}");
            }
            println!("{} cases checked", summary.total_cases());
            if summary.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Factor { q, poly, seed } => match factor_report(q, &poly, seed) {
            Ok(r) => {
                print!("{}", r.to_json());
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
    }
}
