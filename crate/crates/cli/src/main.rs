mod cache;
mod output;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use eisenzero::constant_term::{phi, scatter};
use eisenzero::field::FieldSpec;
use eisenzero::spectral::{
    astar_center_root, astar_kronecker, astar_spectral, rho_track, AStarMethod, AStarResult,
};
use eisenzero::verify::{run_suite, Suite, SuiteOptions};
use eisenzero::zeros::{
    certify_all, count_rectangle, find_real_zero, line_value_with, scan_line_adaptive_with, Rect, ScanConfig,
    Target,
};
use eisenzero::zeta::{lambda_k, xi_k};
use eisenzero::Error;

use cache::EvalCache;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_DOMAIN: u8 = 3;
const EXIT_SCAN: u8 = 4;
const EXIT_CONVENTION: u8 = 5;

#[derive(Parser, Debug)]
#[command(name = "eisenzero", version, about = "Zeros of Eisenstein series constant terms")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Keep evaluated Λ values in an append-only cache file.
    #[arg(long, global = true)]
    cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate Λ, ξ, φ or the scattering function at one point.
    Eval {
        #[arg(long)]
        field: FieldSpec,
        #[arg(long = "fn", value_enum)]
        function: Function,
        #[arg(long)]
        a: Option<f64>,
        /// Point as `re,im`.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        s: Complex64,
    },
    /// Line zeros up to --tmax and the real zero, one JSON object per line.
    Zeros {
        #[arg(long)]
        field: FieldSpec,
        #[arg(long)]
        a: f64,
        #[arg(long)]
        tmax: f64,
        #[arg(long)]
        tmin: Option<f64>,
        #[arg(long)]
        step: Option<f64>,
        /// Bisection tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Argument-principle zero count on a rectangle.
    Count {
        #[arg(long)]
        field: FieldSpec,
        #[arg(long)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        re_lo: f64,
        #[arg(long, allow_hyphen_values = true)]
        re_hi: f64,
        #[arg(long, allow_hyphen_values = true)]
        t_lo: f64,
        #[arg(long, allow_hyphen_values = true)]
        t_hi: f64,
    },
    /// Critical height a* by one or all routes.
    Astar {
        #[arg(long)]
        field: FieldSpec,
        #[arg(long, value_enum, default_value_t = AStarChoice::Spectral)]
        method: AStarChoice,
    },
    /// ρ_a and line ordinates over a grid of heights.
    Track {
        #[arg(long)]
        field: FieldSpec,
        /// Ascending heights, comma-separated.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        a_grid: Vec<f64>,
        #[arg(long, default_value_t = 20.0)]
        tmax: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run the acceptance battery and write a JSON report.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Core)]
        suite: SuiteArg,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, hide = true, default_value_t = 1.0)]
        tamper_tolerance: f64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Function {
    Lambda,
    Xi,
    Phi,
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AStarChoice {
    Spectral,
    Root,
    Kronecker,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Core,
    Full,
}

fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let (re, im) = s.split_once(',').ok_or_else(|| format!("expected re,im, got '{s}'"))?;
    let re: f64 = re.trim().parse().map_err(|e| format!("real part: {e}"))?;
    let im: f64 = im.trim().parse().map_err(|e| format!("imaginary part: {e}"))?;
    Ok(Complex64::new(re, im))
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::ConventionMismatch { .. }) => EXIT_CONVENTION,
        Some(
            Error::StepTooCoarse { .. }
            | Error::BoundaryNearZero { .. }
            | Error::PhaseStepExceeded { .. }
            | Error::AmbiguousBracket { .. }
            | Error::Unrefined { .. }
            | Error::LadderMismatch { .. },
        ) => EXIT_SCAN,
        Some(_) => EXIT_DOMAIN,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let cache = if cli.cache { Some(EvalCache::open(&EvalCache::default_dir())?) } else { None };
    let code = match cli.command {
        Command::Eval { field, function, a, s } => eval(field, function, a, s, cache.as_ref())?,
        Command::Zeros { field, a, tmax, tmin, step, tol, format } => {
            let mut cfg = ScanConfig { t_max: tmax, ..ScanConfig::default() };
            if let Some(t) = tmin {
                cfg.t_min = t;
            }
            if let Some(s) = step {
                cfg.step = s;
            }
            if let Some(t) = tol {
                cfg.refine_tol = t;
            }
            zeros(field, a, &cfg, format, cache.as_ref())?
        }
        Command::Count { field, a, re_lo, re_hi, t_lo, t_hi } => {
            let target = Target::field(field, a)?;
            let n = count_rectangle(&target, &Rect::new(re_lo, re_hi, t_lo, t_hi)?, &ScanConfig::default())?;
            println!("{n}");
            0
        }
        Command::Astar { field, method } => astar(field, method)?,
        Command::Track { field, a_grid, tmax, format } => {
            let cfg = ScanConfig { t_max: tmax.max(ScanConfig::default().t_min), ..ScanConfig::default() };
            let t = rho_track(field, &a_grid, &cfg)?;
            let stdout = io::stdout();
            match format {
                Format::Csv => output::write_trajectory_csv(stdout.lock(), &t)?,
                Format::Json => {
                    let mut out = stdout.lock();
                    serde_json::to_writer(&mut out, &t)?;
                    out.write_all(b"\n")?;
                }
            }
            0
        }
        Command::Verify { suite, out, tamper_tolerance } => verify(suite, out, tamper_tolerance)?,
    };
    if let Some(c) = &cache {
        c.flush()?;
    }
    Ok(code)
}

fn eval(field: FieldSpec, function: Function, a: Option<f64>, s: Complex64, cache: Option<&EvalCache>) -> Result<u8> {
    let v = match function {
        Function::Lambda => match cache {
            Some(c) => c.lambda(field, s)?,
            None => lambda_k(field, s)?,
        },
        Function::Xi => xi_k(field, s)?,
        Function::Phi => {
            let a = a.ok_or_else(|| anyhow!("--fn phi needs --a"))?;
            phi(field, a, s)?
        }
        Function::C => scatter(field, s)?,
    };
    println!("{}", output::complex(v));
    Ok(0)
}

fn zeros(field: FieldSpec, a: f64, cfg: &ScanConfig, format: Format, cache: Option<&EvalCache>) -> Result<u8> {
    let target = Target::field(field, a)?;
    let line = |t: f64| match cache {
        Some(c) => line_value_with(field, a, t, |f, s| c.lambda(f, s)),
        None => target.line_value(t),
    };
    let mut records = scan_line_adaptive_with(&target, cfg, line)?;
    if let Some(r) = find_real_zero(field, a, cfg)? {
        records.push(r);
    }
    certify_all(&target, &mut records, cfg)?;
    records.sort_by(|x, y| x.im.total_cmp(&y.im).then(x.re.total_cmp(&y.re)));
    // nothing is written until every record is certified
    let stdout = io::stdout();
    match format {
        Format::Json => output::write_json_lines(&mut stdout.lock(), &records)?,
        Format::Csv => output::write_zeros_csv(stdout.lock(), &records)?,
    }
    Ok(0)
}

fn method_name(m: AStarMethod) -> &'static str {
    match m {
        AStarMethod::SpectralDerivative => "spectral",
        AStarMethod::CenterRoot => "root",
        AStarMethod::KroneckerClosedForm => "kronecker",
    }
}

fn astar(field: FieldSpec, choice: AStarChoice) -> Result<u8> {
    let mut rows: Vec<AStarResult> = Vec::new();
    if matches!(choice, AStarChoice::Spectral | AStarChoice::All) {
        rows.push(astar_spectral(field)?);
    }
    if matches!(choice, AStarChoice::Root | AStarChoice::All) {
        rows.push(astar_center_root(field)?);
    }
    if choice == AStarChoice::Kronecker || (choice == AStarChoice::All && !field.is_rational()) {
        rows.push(astar_kronecker(field)?);
    }
    let mut out = io::stdout().lock();
    writeln!(out, "{:<10} {:<22} {:<12}", "method", "a*", "accuracy")?;
    for r in &rows {
        writeln!(
            out,
            "{:<10} {:<22} {:<12}",
            method_name(r.method),
            output::sig15(r.value),
            format!("{:.1e}", r.accuracy_estimate)
        )?;
    }
    if rows.len() > 1 {
        writeln!(out)?;
        writeln!(out, "{:<20} {}", "pair", "relative difference")?;
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let d = (rows[i].value - rows[j].value).abs() / rows[i].value;
                let pair = format!("{}-{}", method_name(rows[i].method), method_name(rows[j].method));
                writeln!(out, "{pair:<20} {d:.3e}")?;
            }
        }
    }
    Ok(0)
}

fn verify(suite: SuiteArg, out: Option<PathBuf>, tamper: f64) -> Result<u8> {
    if !(tamper >= 0.0) {
        bail!("tolerance scale must be non-negative");
    }
    let suite = match suite {
        SuiteArg::Core => Suite::Core,
        SuiteArg::Full => Suite::Full,
    };
    let start = Instant::now();
    let mut report = run_suite(suite, &SuiteOptions { tolerance_scale: tamper });
    let mut meta = std::collections::BTreeMap::new();
    meta.insert("version".to_string(), env!("CARGO_PKG_VERSION").to_string());
    meta.insert("elapsedSeconds".to_string(), format!("{:.1}", start.elapsed().as_secs_f64()));
    if tamper != 1.0 {
        meta.insert("toleranceScale".to_string(), tamper.to_string());
    }
    report.metadata = Some(meta);
    let json = serde_json::to_string_pretty(&report)?;
    match &out {
        Some(path) => fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?,
        None => println!("{json}"),
    }
    for c in report.failures() {
        eprintln!("FAIL {}: measured {:?} expected {:?} tolerance {:e}", c.id, c.measured, c.expected, c.tolerance);
    }
    let passed = report.checks.iter().filter(|c| c.passed()).count();
    eprintln!("{passed}/{} checks passed", report.checks.len());
    Ok(if report.passed() { 0 } else { EXIT_VERIFY_FAILED })
}
