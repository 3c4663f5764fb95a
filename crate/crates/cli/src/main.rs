//! `edcs`: approximation ratios, sweeps, tight instances and LP exports.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edcs_core::edcs::tight_example;
use edcs_core::export::{export_lp_json, export_lp_text};
use edcs_core::lp::build_lp;
use edcs_core::profiles::{enumerate_edge_profiles, enumerate_vertex_profiles_with, ProfileOptions};
use edcs_core::report::{compute_ratio, diagonal_cells, grid_cells, sweep, Mode, RatioTable};
use edcs_core::roundtrip::{solution_to_instance, verify_file};
use edcs_core::scalar::format_decimal;
use edcs_core::simplex::solve_exact;
use edcs_core::{Error, GraphFile, Params, Rational};

/// Environment variable holding the sweep worker count.
const WORKERS_VAR: &str = "EDCS_WORKERS";

#[derive(Parser)]
#[command(name = "edcs", version, about = "Approximation ratios of (beta, beta-)-EDCS via a factor-revealing LP")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the LP for one parameter pair and print the ratio.
    Ratio {
        beta: u32,
        beta_minus: u32,
        #[command(flatten)]
        mode: ModeFlags,
    },
    /// Solve every cell up to a maximum beta.
    Sweep(SweepArgs),
    /// Build a verified instance attaining the LP optimum.
    Construct {
        beta: u32,
        beta_minus: u32,
        #[arg(long, default_value_t = 1)]
        min_scale: u64,
        /// Graph JSON destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a graph JSON file.
    Verify {
        path: PathBuf,
        /// Override the file's beta.
        #[arg(long, requires = "beta_minus")]
        beta: Option<u32>,
        #[arg(long, requires = "beta")]
        beta_minus: Option<u32>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Write the LP as CPLEX LP text or as a JSON model.
    ExportLp {
        beta: u32,
        beta_minus: u32,
        #[arg(long, value_enum, default_value_t = LpFormat::Lp)]
        format: LpFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the three-group instance for (2k+1, 2k) with groups of size n.
    TightExample {
        k: usize,
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the vertex (and optionally edge) profiles as JSON.
    DumpProfiles {
        beta: u32,
        beta_minus: u32,
        #[arg(long)]
        edges: bool,
        /// Leave out degree-zero profiles outside both matchings.
        #[arg(long)]
        no_isolated: bool,
    },
}

#[derive(Args)]
struct ModeFlags {
    /// Exact rational simplex (default for beta <= 12).
    #[arg(long, conflicts_with = "float")]
    exact: bool,
    /// Floating-point simplex (default above beta 12).
    #[arg(long)]
    float: bool,
}

impl ModeFlags {
    fn choice(&self) -> Option<Mode> {
        match (self.exact, self.float) {
            (true, _) => Some(Mode::Exact),
            (_, true) => Some(Mode::Float),
            _ => None,
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Largest beta (same as --max-beta).
    #[arg(conflicts_with = "max_beta_flag")]
    max_beta: Option<u32>,
    #[arg(long = "max-beta", id = "max_beta_flag")]
    max_beta_flag: Option<u32>,
    #[command(flatten)]
    mode: ModeFlags,
    /// Only the cells (beta, beta - c) for these offsets c.
    #[arg(long, value_delimiter = ',')]
    diagonal: Vec<u32>,
    /// Output prefix; writes <prefix>.csv, <prefix>.json, <prefix>.svg.
    /// Without it the CSV goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [SweepFormat::Csv, SweepFormat::Json])]
    format: Vec<SweepFormat>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepFormat {
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum LpFormat {
    Lp,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

/// Failure classes mapped to exit codes.
enum Failure {
    Verification(String),
    Usage(String),
    Operational(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Params(_) => Failure::Usage(e.to_string()),
            _ => Failure::Operational(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Operational(format!("I/O error: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Ratio { beta, beta_minus, mode } => cmd_ratio(beta, beta_minus, mode.choice()),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Construct { beta, beta_minus, min_scale, out } => {
            cmd_construct(beta, beta_minus, min_scale, out.as_deref())
        }
        Command::Verify { path, beta, beta_minus, format } => cmd_verify(&path, beta.zip(beta_minus), format),
        Command::ExportLp { beta, beta_minus, format, out } => cmd_export_lp(beta, beta_minus, format, out.as_deref()),
        Command::TightExample { k, n, out } => cmd_tight_example(k, n, out.as_deref()),
        Command::DumpProfiles { beta, beta_minus, edges, no_isolated } => {
            cmd_dump_profiles(beta, beta_minus, edges, no_isolated)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Operational(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn params(beta: u32, beta_minus: u32) -> Result<Params, Failure> {
    Params::new(beta, beta_minus)
        .map_err(|_| Failure::Usage(format!("need integers beta > beta_minus >= 1, got ({beta}, {beta_minus})")))
}

/// Writes to `out`, or to stdout when `out` is `None`.
fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Operational(format!("cannot write {}: {e}", path.display()))),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn cmd_ratio(beta: u32, beta_minus: u32, mode: Option<Mode>) -> Outcome {
    let p = params(beta, beta_minus)?;
    let e = compute_ratio(&p, mode.unwrap_or_else(|| Mode::auto(&p)))?;
    match (&e.exact, &e.optimum) {
        (Some(r), Some(opt)) => {
            println!("{r} = {}", format_decimal(r, 10));
            let two_thirds = Rational::new(2, 3);
            let cmp = match r.cmp(&two_thirds) {
                std::cmp::Ordering::Greater => "above",
                std::cmp::Ordering::Equal => "equal to",
                std::cmp::Ordering::Less => "below",
            };
            println!(
                "beta = {beta}, beta_minus = {beta_minus}: LP optimum {opt}, exact and certified, {cmp} 2/3, {} pivots, {} ms",
                e.pivots, e.solve_millis
            );
        }
        _ => {
            println!("{:.10}", e.float);
            println!(
                "beta = {beta}, beta_minus = {beta_minus}: float mode, 4 places {}, {} pivots, {} ms",
                e.decimal, e.pivots, e.solve_millis
            );
        }
    }
    for w in &e.warnings {
        eprintln!("warning: {w}");
    }
    Ok(())
}

fn workers() -> Result<usize, Failure> {
    match std::env::var(WORKERS_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| Failure::Usage(format!("{WORKERS_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn cmd_sweep(args: SweepArgs) -> Outcome {
    let max_beta = args
        .max_beta
        .or(args.max_beta_flag)
        .ok_or_else(|| Failure::Usage("sweep needs a maximum beta".into()))?;
    if max_beta < 2 {
        return Err(Failure::Usage(format!("maximum beta must be at least 2, got {max_beta}")));
    }
    if args.diagonal.contains(&0) {
        return Err(Failure::Usage("diagonal offsets must be positive".into()));
    }
    let cells =
        if args.diagonal.is_empty() { grid_cells(max_beta) } else { diagonal_cells(max_beta, &args.diagonal) };
    let table = sweep(&cells, args.mode.choice(), workers()?)?;
    let csv = |t: &RatioTable| if args.diagonal.is_empty() { t.to_csv() } else { t.to_long_csv() };
    match &args.out {
        None => emit(None, &csv(&table))?,
        Some(prefix) => {
            for f in &args.format {
                let (ext, text) = match f {
                    SweepFormat::Csv => ("csv", csv(&table)),
                    SweepFormat::Json => ("json", table.to_json()),
                    SweepFormat::Svg => ("svg", table.to_svg()),
                };
                let path = prefix.with_extension(ext);
                emit(Some(&path), &text)?;
                eprintln!("wrote {}", path.display());
            }
        }
    }
    if let Some(best) = table.best() {
        eprintln!("best ratio {} at ({}, {})", best.decimal, best.beta, best.beta_minus);
    }
    for e in table.entries.values().filter(|e| !e.warnings.is_empty()) {
        eprintln!("warning: ({}, {}): {}", e.beta, e.beta_minus, e.warnings.join("; "));
    }
    Ok(())
}

fn cmd_construct(beta: u32, beta_minus: u32, min_scale: u64, out: Option<&Path>) -> Outcome {
    let p = params(beta, beta_minus)?;
    if min_scale == 0 {
        return Err(Failure::Usage("--min-scale must be positive".into()));
    }
    let lp = build_lp(&p)?;
    let res = solve_exact(&lp)?;
    let inst = solution_to_instance(&lp, &res, min_scale)?;
    let report = verify_file(&inst.to_file(), Some(p));
    emit(out, &(inst.to_file().to_json() + "\n"))?;
    eprint!("{}", report.to_text());
    if !report.passed() {
        return Err(Failure::Verification("constructed instance failed its checks".into()));
    }
    Ok(())
}

fn cmd_verify(path: &Path, override_params: Option<(u32, u32)>, format: ReportFormat) -> Outcome {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Operational(format!("cannot read {}: {e}", path.display())))?;
    let file = GraphFile::from_json(&text).map_err(|e| Failure::Operational(format!("{}: {e}", path.display())))?;
    let p = override_params.map(|(b, bm)| params(b, bm)).transpose()?;
    let report = verify_file(&file, p);
    match format {
        ReportFormat::Text => print!("{}", report.to_text()),
        ReportFormat::Json => println!("{}", report.to_json()),
    }
    if report.passed() {
        Ok(())
    } else {
        let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
        Err(Failure::Verification(failed.join(", ")))
    }
}

fn cmd_export_lp(beta: u32, beta_minus: u32, format: LpFormat, out: Option<&Path>) -> Outcome {
    let lp = build_lp(&params(beta, beta_minus)?)?;
    let text = match format {
        LpFormat::Lp => export_lp_text(&lp),
        LpFormat::Json => export_lp_json(&lp),
    };
    emit(out, &text)
}

fn cmd_tight_example(k: usize, n: usize, out: Option<&Path>) -> Outcome {
    if k == 0 || n < k {
        return Err(Failure::Usage(format!("tight-example needs n >= k >= 1, got k = {k}, n = {n}")));
    }
    let inst = tight_example(k, n)?;
    emit(out, &(inst.to_file().to_json() + "\n"))
}

fn cmd_dump_profiles(beta: u32, beta_minus: u32, edges: bool, no_isolated: bool) -> Outcome {
    let p = params(beta, beta_minus)?;
    let vps = enumerate_vertex_profiles_with(&p, ProfileOptions { include_isolated: !no_isolated })?;
    let json = if edges {
        let eps = enumerate_edge_profiles(&p, &vps)?;
        serde_json::json!({ "params": p, "vertex_profiles": vps, "edge_profiles": eps })
    } else {
        serde_json::json!({ "params": p, "vertex_profiles": vps })
    };
    println!("{}", serde_json::to_string_pretty(&json).expect("profiles always serialize"));
    Ok(())
}
