//! Batch front end: parses algebra and functional descriptions, runs the
//! analysis suites with recorded seeds, and emits machine-readable reports.
//!
//! Exit codes: 0 all checks passed, 1 at least one inequality check failed,
//! 2 configuration error.

mod svg;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use zpd_core::report::{
    analyze, batch, batch_csv, to_json_17, AlgebraSpec, ConfigError, PhiSource, RandomPhi,
    RunConfig,
};
use zpd_core::seminorms::{beta_search, zpd_linear_check, SearchOptions};
use zpd_core::{spanning, torus};

#[derive(Parser)]
#[command(name = "zpd", version, about = "Seminorm analysis on finite-dimensional Banach algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<String>,
    /// Optional SVG rendering of the run (fiber disks or window plots).
    #[arg(long)]
    svg: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the seminorm suite on one (algebra, functional) pair.
    Analyze {
        /// Algebra description file, or shorthand `cyclic:M` / `matrix:N`.
        #[arg(long)]
        algebra: String,
        /// Functional file, or shorthand `random:SEED[:SCALE]` /
        /// `elementary:J,K`.
        #[arg(long)]
        phi: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        restarts: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run N seeded random functionals and emit a CSV summary.
    Batch {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        #[arg(long, default_value_t = 64)]
        restarts: usize,
        /// CSV output path (stdout when omitted).
        #[arg(long)]
        out: Option<String>,
    },
    /// Search for functionals maximizing the defect / zero-product ratio.
    BetaSearch {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        restarts: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify the circle-window constructions at a truncation degree.
    TorusVerify {
        #[arg(long, default_value_t = 4096)]
        degree: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the clock-shift spanning group and verify its identities.
    Pauli {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Linear zero-product-determined check for an algebra.
    ZpdCheck {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 120)]
        restarts: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(pass) => {
            if pass {
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

fn run(cli: Cli) -> Result<bool, ConfigError> {
    match cli.command {
        Command::Analyze { algebra, phi, seed, restarts, output } => {
            let spec = parse_algebra(&algebra)?;
            let dim = spec.build()?.dim;
            let phi_source = parse_phi(&phi, dim, seed)?;
            let config = RunConfig { algebra: spec, phi: phi_source, seed, restarts };
            let report = analyze(&config)?;
            if let Some(path) = &output.svg {
                let alg = config.algebra.build()?;
                let functional = config.phi.build(alg.dim)?;
                if let Some(doc) = svg::fiber_disks_svg(&functional, &alg) {
                    write_out(Some(path.clone()), &doc)?;
                }
            }
            emit_json(&output.out, serde_json::to_value(&report).expect("serializable"))?;
            Ok(report.all_pass)
        }
        Command::Batch { algebra, count, seed, scale, restarts, out } => {
            let spec = parse_algebra(&algebra)?;
            let rows = batch(&spec, count, seed, scale, restarts)?;
            let csv = batch_csv(&rows);
            write_out(out, &csv)?;
            Ok(rows.iter().all(|r| r.p913_pass))
        }
        Command::BetaSearch { algebra, seed, restarts, output } => {
            let spec = parse_algebra(&algebra)?;
            let alg = spec.build()?;
            let report = beta_search(&alg, &SearchOptions { restarts, seed })?;
            let pass = report.within_kappa;
            emit_json(&output.out, serde_json::to_value(&report).expect("serializable"))?;
            Ok(pass)
        }
        Command::TorusVerify { degree, seed, output } => {
            if degree < 30 {
                return Err(ConfigError::Invalid("degree must be at least 30".into()));
            }
            let report = torus::run_verify(degree, seed);
            if let Some(path) = &output.svg {
                write_out(Some(path.clone()), &svg::windows_svg(degree.min(2048)))?;
            }
            let pass = report.pass;
            emit_json(&output.out, serde_json::to_value(&report).expect("serializable"))?;
            Ok(pass)
        }
        Command::Pauli { n, seed, output } => {
            let report = spanning::run_spanning_suite(n, seed)
                .map_err(|e| ConfigError::Invalid(e.to_string()))?;
            let pass = report.pass;
            emit_json(&output.out, serde_json::to_value(&report).expect("serializable"))?;
            Ok(pass)
        }
        Command::ZpdCheck { algebra, seed, restarts, output } => {
            let spec = parse_algebra(&algebra)?;
            let alg = spec.build()?;
            let report = zpd_linear_check(&alg, &SearchOptions { restarts, seed })?;
            let pass = report.is_zpd || report.degenerate;
            emit_json(&output.out, serde_json::to_value(&report).expect("serializable"))?;
            Ok(pass)
        }
    }
}

/// `cyclic:M`, `matrix:N`, or a JSON description file.
fn parse_algebra(arg: &str) -> Result<AlgebraSpec, ConfigError> {
    if let Some(rest) = arg.strip_prefix("cyclic:") {
        let order = rest
            .parse()
            .map_err(|_| ConfigError::Invalid(format!("bad cyclic order {rest:?}")))?;
        return Ok(AlgebraSpec::Cyclic { order });
    }
    if let Some(rest) = arg.strip_prefix("matrix:") {
        let n = rest
            .parse()
            .map_err(|_| ConfigError::Invalid(format!("bad matrix side {rest:?}")))?;
        return Ok(AlgebraSpec::Matrix { n });
    }
    AlgebraSpec::parse_file(arg)
}

/// `random:SEED[:SCALE]`, `elementary:J,K`, or a JSON functional file.
fn parse_phi(arg: &str, dim: usize, default_seed: u64) -> Result<PhiSource, ConfigError> {
    if let Some(rest) = arg.strip_prefix("random:") {
        let mut parts = rest.split(':');
        let seed = match parts.next() {
            Some("") | None => default_seed,
            Some(s) => s
                .parse()
                .map_err(|_| ConfigError::Invalid(format!("bad random seed {s:?}")))?,
        };
        let scale = match parts.next() {
            None => 1.0,
            Some(s) => s
                .parse()
                .map_err(|_| ConfigError::Invalid(format!("bad random scale {s:?}")))?,
        };
        return Ok(PhiSource::Random { random: RandomPhi { seed, scale } });
    }
    if let Some(rest) = arg.strip_prefix("elementary:") {
        let coords: Vec<&str> = rest.split(',').collect();
        if coords.len() != 2 {
            return Err(ConfigError::Invalid("elementary:J,K takes two indices".into()));
        }
        let j: usize = coords[0]
            .parse()
            .map_err(|_| ConfigError::Invalid(format!("bad index {:?}", coords[0])))?;
        let k: usize = coords[1]
            .parse()
            .map_err(|_| ConfigError::Invalid(format!("bad index {:?}", coords[1])))?;
        if j >= dim || k >= dim {
            return Err(ConfigError::Invalid(format!(
                "elementary indices ({j},{k}) out of range for dimension {dim}"
            )));
        }
        let rows = (0..dim)
            .map(|r| {
                (0..dim)
                    .map(|c| if (r, c) == (j, k) { [1.0, 0.0] } else { [0.0, 0.0] })
                    .collect()
            })
            .collect();
        return Ok(PhiSource::Explicit(rows));
    }
    PhiSource::parse_file(arg)
}

fn emit_json(out: &Option<String>, value: serde_json::Value) -> Result<(), ConfigError> {
    let text = to_json_17(&value);
    write_out(out.clone(), &format!("{text}\n"))
}

fn write_out(path: Option<String>, text: &str) -> Result<(), ConfigError> {
    match path {
        Some(p) => std::fs::write(&p, text)
            .map_err(|source| ConfigError::Io { path: p, source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
