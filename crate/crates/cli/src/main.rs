use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use f1hall::DimVector;
use f1hall_cli::{run, Command, JobSpec, OutputFormat};

/// Exact computations with quiver representations over F1 and their Hall algebra.
#[derive(Parser, Debug)]
#[command(name = "f1hall", version)]
struct Cli {
    /// Quiver file (`vertices r` then `edge s t` lines).
    #[arg(long, global = true)]
    quiver: Option<PathBuf>,
    /// Worker threads for parallel jobs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Isomorphism classes of a fixed dimension vector.
    Enumerate {
        /// Dimension vector, comma separated.
        #[arg(long, value_parser = parse_dim)]
        dim: DimVector,
        /// Restrict to nilpotent representations.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        nilpotent: bool,
    },
    /// Indecomposable classes up to a total dimension.
    Indecomposables {
        #[arg(long)]
        max_dim: usize,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        nilpotent: bool,
    },
    /// Krull-Schmidt decomposition of a representation file or class.
    Decompose {
        #[arg(long, conflicts_with = "class")]
        rep: Option<PathBuf>,
        /// Class name (e.g. `S0`, `N2`, `I[0,3]`) or hex key.
        #[arg(long)]
        class: Option<String>,
    },
    /// Hall product `[left]·[right]`.
    HallMult {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Coproduct of a basis class.
    HallComult {
        #[arg(long)]
        class: String,
    },
    /// Check the Serre relations for every ordered pair of vertices.
    Serre,
    /// Cartan matrix and positive roots.
    Roots,
    /// Graded dimensions of U(n+), the composition algebra and the Hall algebra.
    RhoReport {
        #[arg(long, value_parser = parse_dim, conflicts_with = "max_dim")]
        dim: Option<DimVector>,
        /// Report every dimension vector with entries up to this bound.
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Check the closed-form model of a Jordan, cyclic or type A quiver.
    FamilyVerify {
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long)]
        max_power: Option<usize>,
    },
}

fn parse_dim(s: &str) -> Result<DimVector, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad dimension entry {t:?}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(DimVector)
}

fn job_spec(cli: Cli) -> Result<JobSpec, String> {
    let quiver = cli.quiver.ok_or("--quiver is required")?;
    let mut job = match cli.command {
        Sub::Enumerate { dim, nilpotent } => {
            let mut j = JobSpec::new(Command::Enumerate, quiver);
            j.dim = Some(dim);
            j.nilpotent = nilpotent;
            j
        }
        Sub::Indecomposables { max_dim, nilpotent } => {
            let mut j = JobSpec::new(Command::Indecomposables, quiver);
            j.max_dim = Some(max_dim);
            j.nilpotent = nilpotent;
            j
        }
        Sub::Decompose { rep, class } => {
            let mut j = JobSpec::new(Command::Decompose, quiver);
            j.rep_path = rep;
            j.classes.extend(class);
            j
        }
        Sub::HallMult { left, right } => {
            let mut j = JobSpec::new(Command::HallMult, quiver);
            j.classes = vec![left, right];
            j
        }
        Sub::HallComult { class } => {
            let mut j = JobSpec::new(Command::HallComult, quiver);
            j.classes = vec![class];
            j
        }
        Sub::Serre => JobSpec::new(Command::Serre, quiver),
        Sub::Roots => JobSpec::new(Command::Roots, quiver),
        Sub::RhoReport { dim, max_dim } => {
            let mut j = JobSpec::new(Command::RhoReport, quiver);
            j.dim = dim;
            j.max_dim = max_dim;
            j
        }
        Sub::FamilyVerify { max_dim, max_power } => {
            let mut j = JobSpec::new(Command::FamilyVerify, quiver);
            j.max_dim = max_dim;
            j.max_power = max_power;
            j
        }
    };
    job.jobs = cli.jobs;
    job.format = match cli.format {
        Format::Text => OutputFormat::Text,
        Format::Tsv => OutputFormat::Tsv,
    };
    Ok(job)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let job = match job_spec(cli) {
        Ok(job) => job,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = run(&job, &mut out, &mut io::stderr());
    let _ = out.flush();
    ExitCode::from(code as u8)
}
