use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use conefourier::Method;
use conefourier_cli::{run, usage_object, Command, JobRequest, UsageError, EXIT_USAGE};

#[derive(Parser)]
#[command(name = "conefourier", version, about = "Exact Fourier transforms of polyhedral cones and polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check pointedness and general position of a cone
    Validate(Common),
    /// Numerator polynomial of a cone's transform
    Transform(Common),
    /// Compute the numerator both ways and compare
    Compare(Common),
    /// Check minors of the interpolation matrix for diagonal families
    Vervan(Common),
    /// Evaluate a polytope's transform at a point
    BrionEval(Common),
    /// Time both numerator methods on random cones
    Bench(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Triangulation,
    Interpolation,
}

#[derive(Args)]
struct Common {
    /// JSON file, inline JSON, or `-` for standard input
    input: Option<String>,
    #[arg(long, value_enum, default_value = "interpolation")]
    method: MethodArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random samples
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, short)]
    verbose: bool,
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Write bench tables as CSV
    #[arg(long)]
    csv: bool,
    /// Diagonal family as a JSON list of index lists
    #[arg(long)]
    family: Option<String>,
    /// Evaluation point as a JSON array or {"xi": [...]}
    #[arg(long)]
    xi: Option<String>,
    /// Dimension of random cones
    #[arg(long, short = 'd')]
    dimension: Option<usize>,
    /// Generator count of random cones
    #[arg(long, short = 'n')]
    generators: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, c) = match cli.command {
        Cmd::Validate(c) => (Command::Validate, c),
        Cmd::Transform(c) => (Command::Transform, c),
        Cmd::Compare(c) => (Command::Compare, c),
        Cmd::Vervan(c) => (Command::Vervan, c),
        Cmd::BrionEval(c) => (Command::BrionEval, c),
        Cmd::Bench(c) => (Command::Bench, c),
    };
    let job = JobRequest {
        command,
        input: c.input,
        method: match c.method {
            MethodArg::Triangulation => Method::Triangulation,
            MethodArg::Interpolation => Method::Interpolation,
        },
        seed: c.seed,
        random: c.random,
        verbose: c.verbose,
        output: c.output,
        csv: c.csv,
        family: c.family,
        xi: c.xi,
        dimension: c.dimension,
        generators: c.generators,
    };
    let outcome = run(&job);
    match &job.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.stdout) {
                let e = UsageError(format!("cannot write {}: {e}", path.display()));
                println!("{}", usage_object(&e));
                return ExitCode::from(EXIT_USAGE as u8);
            }
        }
        None => print!("{}", outcome.stdout),
    }
    ExitCode::from(outcome.status as u8)
}
