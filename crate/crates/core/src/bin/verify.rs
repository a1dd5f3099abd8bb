use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fano_chow::bott::{cohomology, is_acyclic, Cohomology, WeightC3};
use fano_chow::checks::{self, Filter, RunOptions};
use fano_chow::chow::catalog;
use fano_chow::pencil;

#[derive(Parser)]
#[command(name = "verify", about = "Exact checks of the intersection-theoretic computations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List registered checks.
    List,
    /// Run one check or all of them.
    Run {
        #[arg(long, conflicts_with = "all")]
        check: Option<String>,
        #[arg(long)]
        all: bool,
        /// Restrict to a section tag, e.g. 3 or §3.
        #[arg(long)]
        section: Option<String>,
        /// Include slow checks.
        #[arg(long)]
        slow: bool,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Omit elapsed times so reports are byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
    },
    /// Cohomology of a homogeneous bundle on the isotropic flag variety.
    Bott {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Print the net of skew forms and its flattening.
    Pencil {
        #[arg(long)]
        dump: bool,
    },
    /// Export a catalog ring.
    Ring {
        #[arg(long)]
        export: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.cmd {
        Cmd::List => print!("{}", checks::list_text()),
        Cmd::Run { check, all, section, slow, format, workers, seed, no_timing } => {
            let opts = RunOptions { seed, workers, timing: !no_timing };
            let summary = match (check, all) {
                (Some(name), _) => checks::run_one(&name, &opts)?,
                (None, true) => checks::run_all(&Filter { section, slow }, &opts),
                (None, false) => return Err("pass --check <name> or --all".into()),
            };
            print!("{}", summary.render(&format)?);
            return Ok(if summary.all_passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
        Cmd::Bott { weight } => {
            let w: WeightC3 = weight.parse()?;
            match cohomology(&w) {
                Cohomology::Acyclic(_) => {
                    let wit = is_acyclic(&w).expect("acyclic");
                    println!("{w}: acyclic ({wit})");
                }
                Cohomology::Concentrated { degree, dimension } => println!("{w}: H^{degree} of dimension {dimension}"),
            }
        }
        Cmd::Pencil { dump } => {
            if !dump {
                return Err("pass --dump".into());
            }
            print!("{}", pencil::dump());
        }
        Cmd::Ring { export } => print!("{}", catalog(&export)?.export()),
    }
    Ok(ExitCode::SUCCESS)
}
