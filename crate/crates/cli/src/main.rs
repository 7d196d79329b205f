//! `semigen`: membership checks, radii, decay rates and semiflows from the
//! command line.

// guards like `!(x > 0.0)` also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod error;
mod format;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use semigen::semiflow::DEFAULT_STEP_TOL;
use semigen::GridSpec;

use crate::args::{FunctionSource, Sweep};
use crate::commands::{ConvolveQuery, FlowQuery, Format};
use crate::error::CliError;

#[derive(Parser)]
#[command(name = "semigen", version, about = "Semigroup generators and starlike classes on the unit disk")]
struct Cli {
    /// Series truncation order (at least 16).
    #[arg(long, global = true, env = "SEMIGEN_ORDER", value_parser = clap::value_parser!(u64).range(16..))]
    order: Option<u64>,

    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for randomly built functions.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grid membership check of a function in a class.
    Member(MemberArgs),
    /// Starlikeness radius for `A_beta` and a target `phi`.
    Radius(RadiusArgs),
    /// Semiflow trajectory of a generator.
    Flow(FlowArgs),
    /// Hadamard product, optionally checked against a class.
    Convolve(ConvolveArgs),
    /// The function `kappa(beta)`.
    Kappa(KappaArgs),
    /// Write the radius, kappa and decay-rate tables.
    Table(TableArgs),
}

#[derive(Args)]
struct MemberArgs {
    /// Class as `name[:key=value,...]`: a_beta, g0, u, bs or janowski.
    #[arg(long)]
    class: String,
    /// Extra `key=value` class parameters.
    #[arg(long = "param", allow_hyphen_values = true)]
    params: Vec<String>,
    /// Function as `name[:key=value,...]` or a series file ending in `.json`.
    #[arg(long, required_unless_present = "series", conflicts_with = "series")]
    function: Option<String>,
    /// Series file `{"order": N, "coeffs": [[re, im], ...]}`.
    #[arg(long)]
    series: Option<PathBuf>,
    /// Sampling grid `rings=K,angles=M[,rmax=R]`.
    #[arg(long, value_parser = args::grid)]
    grid: Option<GridSpec>,
}

#[derive(Args)]
struct RadiusArgs {
    #[arg(long, required_unless_present = "sweep", conflicts_with = "sweep", allow_hyphen_values = true)]
    beta: Option<f64>,
    /// `janowski:A,B`, `sg`, `parabolic`, `rhoexp` or `custom:FILE`.
    #[arg(long, default_value = "parabolic", allow_hyphen_values = true)]
    target: String,
    /// Table over `beta=start:end:step`.
    #[arg(long, value_parser = args::sweep)]
    sweep: Option<Sweep>,
}

#[derive(Args)]
struct FlowArgs {
    /// Generator as `name[:key=value,...]` or a series file ending in `.json`.
    #[arg(long, required_unless_present = "series", conflicts_with = "series")]
    function: Option<String>,
    /// Extra `key=value` function parameters.
    #[arg(long = "param", allow_hyphen_values = true)]
    params: Vec<String>,
    #[arg(long)]
    series: Option<PathBuf>,
    /// Start point `re,im`.
    #[arg(long, value_parser = args::complex, allow_hyphen_values = true)]
    z0: Complex64,
    /// Final time.
    #[arg(long = "T", alias = "t-end")]
    t_end: f64,
    /// Number of equal time steps to report.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Decay rate for the bound column: a number or a class such as `janowski:a=0,b=-1`.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    rate: String,
    #[arg(long, default_value_t = DEFAULT_STEP_TOL)]
    step_tol: f64,
}

#[derive(Args)]
struct ConvolveArgs {
    #[arg(long)]
    f: String,
    #[arg(long)]
    g: String,
    /// Class to check the product against.
    #[arg(long)]
    check: Option<String>,
    #[arg(long, value_parser = args::grid)]
    grid: Option<GridSpec>,
}

#[derive(Args)]
struct KappaArgs {
    #[arg(long, required_unless_present = "sweep", conflicts_with = "sweep", allow_hyphen_values = true)]
    beta: Option<f64>,
    #[arg(long, value_parser = args::sweep)]
    sweep: Option<Sweep>,
}

#[derive(Args)]
struct TableArgs {
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_parser = args::sweep, default_value = "beta=0:1:0.05")]
    sweep: Sweep,
    /// Janowski target `A,B` for the janowski table.
    #[arg(long, default_value = "0.5,-0.5", allow_hyphen_values = true)]
    janowski: String,
}

fn source(function: &Option<String>, series: &Option<PathBuf>, params: &[String]) -> Result<FunctionSource, CliError> {
    match (function, series) {
        (Some(f), _) => FunctionSource::parse(f, params),
        (None, Some(p)) if params.is_empty() => Ok(FunctionSource::File(p.clone())),
        (None, Some(_)) => Err(CliError::Usage("--param does not apply to --series".into())),
        (None, None) => Err(CliError::Usage("need --function or --series".into())),
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let order = cli.order.map(|n| n as usize);
    let seed = cli.seed;
    match cli.command {
        Command::Member(a) => {
            let class = args::class(&a.class, &a.params)?;
            let f = source(&a.function, &a.series, &[])?;
            let grid = a.grid.unwrap_or_default();
            commands::member(class, &f, &grid, order, seed, cli.format.unwrap_or(Format::Json))
        }
        Command::Radius(a) => {
            let target = args::target(&a.target)?;
            match (a.beta, a.sweep) {
                (_, Some(s)) => commands::radius_sweep(&s, &target, cli.format.unwrap_or(Format::Csv)),
                (Some(beta), None) => commands::radius(beta, &target, cli.format.unwrap_or(Format::Json)),
                (None, None) => Err(CliError::Usage("need --beta or --sweep".into())),
            }
        }
        Command::Flow(a) => {
            let f = source(&a.function, &a.series, &a.params)?;
            let label = match (&a.function, &a.series) {
                (Some(s), _) => s.clone(),
                (None, Some(p)) => p.display().to_string(),
                (None, None) => unreachable!("source() rejects a missing function"),
            };
            let q = FlowQuery {
                f: &f,
                label,
                z0: a.z0,
                t_end: a.t_end,
                samples: a.samples,
                rate: commands::rate(&a.rate)?,
                step_tol: a.step_tol,
                order,
                seed,
            };
            commands::flow(&q, cli.format.unwrap_or(Format::Csv))
        }
        Command::Convolve(a) => {
            let f = FunctionSource::parse(&a.f, &[])?;
            let g = FunctionSource::parse(&a.g, &[])?;
            let check = a.check.as_deref().map(|c| args::class(c, &[])).transpose()?;
            let grid = a.grid.unwrap_or_default();
            let q = ConvolveQuery { f: &f, g: &g, labels: (a.f, a.g), check, grid: &grid, order, seed };
            commands::convolve(&q, cli.format.unwrap_or(Format::Json))
        }
        Command::Kappa(a) => {
            let format = cli.format.unwrap_or(Format::Json);
            match (a.beta, a.sweep) {
                (_, Some(s)) => commands::kappa_cmd(&s.values, false, format),
                (Some(beta), None) => commands::kappa_cmd(&[beta], true, format),
                (None, None) => Err(CliError::Usage("need --beta or --sweep".into())),
            }
        }
        Command::Table(a) => {
            let (ja, jb) = match args::complex(&a.janowski) {
                Ok(c) if a.janowski.contains(',') => (c.re, c.im),
                _ => return Err(CliError::Usage(format!("--janowski expects A,B, got `{}`", a.janowski))),
            };
            commands::table(&a.out, &a.sweep, (ja, jb))
        }
    }
}

/// Collapses a clap diagnostic to its first paragraph on one line.
fn one_line(rendered: &str) -> String {
    rendered
        .lines()
        .map(str::trim)
        .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
        .filter(|l| !l.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            eprintln!("semigen: {}", one_line(&e.render().to_string()));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("semigen: error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            println!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
