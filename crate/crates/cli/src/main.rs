use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cube_iso::measure::parse_rational;
use cube_iso::Rational;
use cube_iso_cli::commands::{self, sharpness_table};
use cube_iso_cli::{CliError, Report, Scope};

#[derive(Debug, Parser)]
#[command(name = "cube-iso", version, about = "Exhaustive checks of isoperimetric inequalities on the discrete cube")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Bias as `num/den` or a finite decimal.
    #[arg(long, global = true)]
    p: Option<String>,
    #[arg(long, global = true, default_value_t = 2)]
    k: usize,
    #[arg(long, global = true)]
    t: Option<usize>,
    #[arg(long, global = true)]
    s: Option<usize>,
    #[arg(long, global = true, default_value_t = 64)]
    depth: usize,
    #[arg(long = "eps-max", global = true, default_value_t = 0.2)]
    eps_max: f64,
    #[arg(long, global = true, default_value_t = 200)]
    grid: usize,
    #[arg(long, global = true, value_enum, default_value_t = Scope::All)]
    scope: Scope,
    /// Truth-table file for `--scope file`.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long = "monotone-only", global = true)]
    monotone_only: bool,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum Command {
    /// Weak biased isoperimetric inequality over a scope of functions.
    VerifyWeak,
    /// Edge isoperimetry against lex families, every family at n.
    FullIso,
    /// Kruskal-Katona over every family of k-sets.
    Kk,
    /// Monotone biased isoperimetry against limit lex families.
    MonotoneFull,
    /// Empirical stability constant over near-extremal functions.
    StabilityScan,
    /// The sharpness families and the stability lower bound.
    Sharpness,
    /// Grid scans of the two-variable inequalities.
    LemmaScan,
    /// Margulis-Russo identity over every monotone family.
    Russo,
}

fn required<T: Copy>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Input(format!("missing --{flag}")))
}

fn bias(cli: &Cli) -> Result<Rational, CliError> {
    Ok(parse_rational(cli.p.as_deref().ok_or_else(|| CliError::Input("missing --p".into()))?)?)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::VerifyWeak => {
            let n = if cli.scope == Scope::File { cli.n.unwrap_or(0) } else { required(cli.n, "n")? };
            commands::cmd_verify_weak(n, &bias(cli)?, cli.scope, cli.input.as_deref(), cli.tol)
        }
        Command::FullIso => commands::cmd_full_iso(required(cli.n, "n")?),
        Command::Kk => commands::cmd_kk(required(cli.n, "n")?, cli.k),
        Command::MonotoneFull => commands::cmd_monotone_full(required(cli.n, "n")?, &bias(cli)?, cli.depth),
        Command::StabilityScan => {
            commands::cmd_stability_scan(required(cli.n, "n")?, &bias(cli)?, cli.eps_max, cli.monotone_only)
        }
        Command::Sharpness => {
            let report = commands::cmd_sharpness(cli.n, required(cli.t, "t")?, required(cli.s, "s")?, &bias(cli)?, cli.tol)?;
            eprintln!("{}", sharpness_table(&report));
            Ok(report)
        }
        Command::LemmaScan => commands::cmd_lemma_scan(&bias(cli)?, cli.grid),
        Command::Russo => commands::cmd_russo(required(cli.n, "n")?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        pool = pool.num_threads(jobs);
    }
    let pool = match pool.build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(report) => {
            println!("{}", report.to_json());
            eprintln!("{}", report.summary());
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
