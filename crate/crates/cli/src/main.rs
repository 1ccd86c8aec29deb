use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pile_cli::commands::{cmd_nullpoint, cmd_solve, cmd_sweep, oracle_check};
use pile_cli::runspec::{DepthFrom, Formats};
use pile_cli::{CliError, RunSpec};

#[derive(Parser)]
#[command(name = "pile", version, about = "Thermo-mechanical response and null points of energy piles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Displacement, strain and stress profiles for every [load]
    Solve(Common),
    /// Thermal and combined null points for every [load]
    Nullpoint(Common),
    /// Combined null point against eta for every [sweep]
    Sweep(Common),
    /// Cross-check the closed forms against the finite-difference solver
    OracleCheck {
        #[command(flatten)]
        common: Common,
        /// Scale psi seen by the closed forms (verification of the checker itself)
        #[arg(long, hide = true)]
        corrupt_psi: Option<f64>,
    },
}

#[derive(Args)]
struct Common {
    /// Run spec file
    #[arg(long)]
    spec: PathBuf,
    /// Output directory (overrides [output] dir)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Grid points (profiles, reports, sweeps) or FD nodes (oracle-check)
    #[arg(long)]
    grid: Option<usize>,
    /// Measure positions from the pile tip or head
    #[arg(long, value_parser = ["tip", "head"])]
    depth_from: Option<String>,
    /// Comma-separated output formats: csv, json, svg
    #[arg(long)]
    format: Option<String>,
}

fn load_spec(common: &Common, is_oracle: bool) -> Result<RunSpec, CliError> {
    let mut spec = RunSpec::read(&common.spec)?;
    if let Some(dir) = &common.out {
        spec.output.dir = dir.clone();
    }
    if let (Some(grid), false) = (common.grid, is_oracle) {
        spec.options.grid = grid;
    }
    if let Some(d) = &common.depth_from {
        spec.options.depth_from = DepthFrom::parse(d).expect("validated by clap");
    }
    if let Some(f) = &common.format {
        spec.output.formats = Formats::parse(f).map_err(CliError::Validation)?;
    }
    spec.validate()?;
    Ok(spec)
}

fn report_written(paths: &[PathBuf]) {
    for p in paths {
        println!("wrote {}", p.display());
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve(common) => {
            let spec = load_spec(&common, false)?;
            report_written(&cmd_solve(&spec)?);
        }
        Command::Nullpoint(common) => {
            let spec = load_spec(&common, false)?;
            let (table, written) = cmd_nullpoint(&spec)?;
            print!("{table}");
            report_written(&written);
        }
        Command::Sweep(common) => {
            let spec = load_spec(&common, false)?;
            let (_, written) = cmd_sweep(&spec)?;
            report_written(&written);
        }
        Command::OracleCheck { common, corrupt_psi } => {
            let spec = load_spec(&common, true)?;
            if let Some(n) = common.grid {
                if n < 3 {
                    return Err(CliError::Validation(format!("oracle grid must be at least 3, got {n}")));
                }
            }
            let report = oracle_check(&spec, common.grid, corrupt_psi)?;
            print!("{}", report.render());
            if !report.passed() {
                return Err(CliError::Tolerance(report.failures().join(", ")));
            }
            println!("all checks passed");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
