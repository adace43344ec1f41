use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rootgraded::leibniz::DEFAULT_CAP;
use rootgraded::report::RunReport;

mod commands;
mod input;

#[derive(Parser)]
#[command(name = "rootgraded", version, about = "Root-graded Leibniz algebras over exact rationals")]
struct Cli {
    /// `text`, `json`, or a path to write the JSON report to.
    #[arg(long, global = true, default_value = "text")]
    report: String,

    /// Largest number of tensor coordinates a chain space may have.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,

    /// Seed for the sampled Weyl-word cross-checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Roots and A2-pair classes of a simply-laced root system.
    Roots {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        a2_classes: bool,
    },
    /// Build a Chevalley algebra and print its invariants.
    Chevalley {
        #[command(flatten)]
        ty: TypeArgs,
        /// Re-check the Jacobi identity and Cartan relations exhaustively.
        #[arg(long)]
        verify: bool,
    },
    /// Dialgebra checks.
    Dialg {
        #[command(subcommand)]
        command: DialgCommand,
    },
    /// Leibniz algebra checks, homology and universal central extensions.
    Leib {
        #[command(subcommand)]
        command: LeibCommand,
    },
    /// Build gl, sl, stl or g ⊗ D over a dialgebra.
    Build {
        #[arg(long, value_enum)]
        what: BuildKind,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        dialgebra: PathBuf,
        /// Root system for `tensor`; for matrix algebras it must be A(n-1).
        #[arg(long)]
        roots: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recover the coordinate dialgebra of a root-graded algebra.
    Recognize {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        embedding: PathBuf,
        #[arg(long)]
        roots: String,
        /// Where to write the recovered dialgebra.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build, grade, recognize and compare with the input dialgebra.
    Roundtrip {
        #[arg(long, value_enum)]
        what: RoundtripKind,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        dialgebra: PathBuf,
        #[arg(long)]
        roots: Option<String>,
    },
    /// Run every acceptance scenario.
    Acceptance,
}

#[derive(Args)]
struct TypeArgs {
    #[arg(long = "type")]
    kind: String,
    #[arg(long)]
    rank: usize,
}

impl TypeArgs {
    fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }
}

#[derive(Subcommand)]
enum DialgCommand {
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        axioms: Axioms,
    },
}

#[derive(Subcommand)]
enum LeibCommand {
    /// Check the Leibniz identity.
    Check {
        #[arg(long)]
        input: PathBuf,
    },
    /// Dimension of HL_n with coefficients in the ground field.
    Homology {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// Universal central extension of a perfect algebra.
    Uce {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Axioms {
    Ass,
    Alt,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum BuildKind {
    Gl,
    Sl,
    Stl,
    Tensor,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum RoundtripKind {
    Sl,
    Stl,
    Tensor,
}

/// `Err` means the input could not be read; failed checks live in the report.
fn run(cli: &Cli) -> anyhow::Result<RunReport> {
    let opts = commands::Options {
        cap: cli.cap,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Roots { ty, a2_classes } => commands::roots(&ty.label(), *a2_classes),
        Command::Chevalley { ty, verify } => commands::chevalley(&ty.label(), *verify),
        Command::Dialg {
            command: DialgCommand::Check { input, axioms },
        } => commands::dialg_check(input, *axioms),
        Command::Leib { command } => match command {
            LeibCommand::Check { input } => commands::leib_check(input),
            LeibCommand::Homology { input, degree } => commands::leib_homology(input, *degree, &opts),
            LeibCommand::Uce { input, out } => commands::leib_uce(input, out.as_deref(), &opts),
        },
        Command::Build {
            what,
            n,
            dialgebra,
            roots,
            out,
        } => commands::build(*what, *n, dialgebra, roots.as_deref(), out, &opts),
        Command::Recognize {
            algebra,
            embedding,
            roots,
            out,
        } => commands::recognize(algebra, embedding, roots, out.as_deref(), &opts),
        Command::Roundtrip {
            what,
            n,
            dialgebra,
            roots,
        } => commands::roundtrip(*what, *n, dialgebra, roots.as_deref(), &opts),
        Command::Acceptance => Ok(commands::acceptance(&opts)),
    }
}

fn emit(cli: &Cli, report: &RunReport) -> anyhow::Result<()> {
    match cli.report.as_str() {
        "text" => print!("{}", report.to_text()),
        "json" => println!("{}", report.to_json()),
        path => {
            std::fs::write(path, report.to_json() + "\n")
                .map_err(|e| anyhow::anyhow!("cannot write report to {path}: {e}"))?;
            print!("{}", report.to_text());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &report) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
