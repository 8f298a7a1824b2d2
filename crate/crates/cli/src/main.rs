//! `szlab`: command-line front end for the Suzuki-group toolkit.
//!
//! Every subcommand prints one JSON document (or CSV for `degree --csv`) to
//! stdout or `--out`. Exit status: 0 on success, 1 when a certificate or
//! consistency check fails or a budget runs out, 2 on usage errors.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "szlab", version, about = "Suzuki groups, subgroup lattices and permutability degrees")]
pub struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Finite-field checks.
    #[command(subcommand)]
    Field(FieldCommand),
    /// Suzuki group construction and structure checks.
    #[command(subcommand)]
    Sz(SzCommand),
    /// Conjugacy-class counts of subgroups of the Sylow 2-subgroup.
    Classes {
        #[arg(long)]
        m: u32,
        /// Also run the brute-force lattice oracle (m = 3 only).
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Exact inequality certificates.
    Certify {
        /// Run the full sweep up to --m-max.
        #[arg(long, requires = "m_max", conflicts_with = "m")]
        all: bool,
        #[arg(long)]
        m_max: Option<u32>,
        /// Certificates for a single field degree.
        #[arg(long, required_unless_present = "all")]
        m: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Exact subgroup permutability degree of small groups.
    Degree {
        /// Group family: dihedral, cq8, modular-s3, modular-d.
        #[arg(long, requires = "n", conflicts_with = "cayley")]
        family: Option<String>,
        /// Family index, a single value or an inclusive range `a..b`.
        #[arg(long)]
        n: Option<String>,
        /// Cayley table file: order on the first line, then the table rows.
        #[arg(long, required_unless_present = "family")]
        cayley: Option<PathBuf>,
        /// Emit CSV instead of JSON.
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Subgroup-lattice survey of Sz(8).
    Lattice {
        #[arg(long)]
        m: u32,
        /// Also compute the exact permutability degree of the whole group.
        #[arg(long)]
        degree: bool,
        /// Wall-clock budget for --degree, in minutes.
        #[arg(long, requires = "degree")]
        budget_mins: Option<f64>,
        /// Subgroup cache; read when present, written otherwise.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Partial --degree progress; resumed from when present.
        #[arg(long, requires = "degree")]
        checkpoint: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
pub enum FieldCommand {
    /// Check the field and the gcd identity behind the θ-norm bijection.
    Verify {
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
pub enum SzCommand {
    /// Build Sz(q) and write P, C and N(P) to a subgroup cache.
    Build {
        #[arg(long)]
        m: u32,
        /// Cache file to write.
        #[arg(long)]
        out: PathBuf,
    },
    /// Structure certificate for the Sylow 2-subgroup.
    VerifyStructure {
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match report::dispatch(cli.command) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(report::exit_code_for(&e))
        }
    }
}
