use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twsurf_core::Rect;

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "twsurf",
    version,
    about = "Curvature analysis of translation surfaces z = f(u) + g(v)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print the JSON report to standard output instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    report: Option<PathBuf>,

    /// Include wall-clock timings (makes reports non-reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SurfaceArgs {
    /// Generator f(u).
    #[arg(long = "f", value_name = "EXPR", allow_hyphen_values = true)]
    pub f: Option<String>,

    /// Generator g(v).
    #[arg(long = "g", value_name = "EXPR", allow_hyphen_values = true)]
    pub g: Option<String>,

    /// Named surface instead of --f/--g: scherk, cmc, blair, paraboloid, cylinder.
    #[arg(long, value_name = "NAME", conflicts_with = "g")]
    pub surface: Option<String>,

    /// Comma-separated parameters of the named surface, e.g. `1/2,1`.
    #[arg(
        long,
        value_name = "LIST",
        requires = "surface",
        allow_hyphen_values = true
    )]
    pub params: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct GridArgs {
    /// Parameter rectangle umin,umax,vmin,vmax (defaults to the named
    /// surface's domain, else [-1,1]^2).
    #[arg(long, value_name = "RECT", allow_hyphen_values = true)]
    pub rect: Option<Rect>,

    /// Grid points per side.
    #[arg(long, default_value_t = 21)]
    pub n: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MeshFormat {
    Obj,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanCondition {
    Jacobian,
    SecondGaussian,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact Weingarten classification of a polynomial translation surface.
    Classify {
        #[arg(long = "f", value_name = "EXPR", allow_hyphen_values = true)]
        f: String,
        #[arg(long = "g", value_name = "EXPR", allow_hyphen_values = true)]
        g: String,
    },
    /// Numeric Jacobian test of (H, K) on a grid, with an optional heat-map CSV.
    Weingarten {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Finite-difference step.
        #[arg(long, default_value_t = twsurf_core::numeric::DEFAULT_STEP)]
        step: f64,
        /// Heat-map CSV of the Jacobian field.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Curvatures at a point.
    Curvature {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Point u,v.
        #[arg(long, value_name = "U,V", allow_hyphen_values = true)]
        at: String,
    },
    /// Run a verification target (or `all`).
    Verify {
        #[arg(default_value = "all")]
        target: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Export a triangulated grid of the surface.
    Mesh {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value = "obj")]
        format: MeshFormat,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Least-squares linear Weingarten fit 2aH + bK = c.
    Lwfit {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Scan power-law exponents f' = a u^p, g' = b v^q over k/den, k in lo..=hi.
    Scan {
        #[arg(long, value_enum, default_value = "jacobian")]
        condition: ScanCondition,
        #[arg(long, default_value_t = 3)]
        den: i64,
        #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
        hi: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match cli.command {
        Command::Classify { f, g } => commands::classify(&f, &g),
        Command::Weingarten {
            surface,
            grid,
            tol,
            step,
            out,
        } => commands::weingarten(&surface, &grid, tol, step, out.as_deref()),
        Command::Curvature { surface, at } => commands::curvature(&surface, &at),
        Command::Verify { target, seed } => commands::verify(&target, seed),
        Command::Mesh {
            surface,
            grid,
            format,
            out,
        } => commands::mesh(&surface, &grid, format, &out),
        Command::Lwfit { surface, grid } => commands::lwfit(&surface, &grid),
        Command::Scan {
            condition,
            den,
            lo,
            hi,
        } => commands::scan(condition, den, lo, hi),
    };
    let mut outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if cli.timings {
        let seconds = start.elapsed().as_secs_f64();
        outcome.report["timings"] = serde_json::json!({ "seconds": seconds });
        outcome.text.push_str(&format!("elapsed: {seconds:.3}s\n"));
    }
    let json = serde_json::to_string_pretty(&outcome.report).expect("reports serialize");
    if cli.json {
        println!("{json}");
    } else {
        print!("{}", outcome.text);
    }
    if let Some(path) = cli.report {
        if let Err(e) = std::fs::write(&path, format!("{json}\n")) {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if outcome.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
