//! Command-line front end: `sample`, `verify`, `spectrum`, `bench`.
//!
//! Exit codes: 0 when all work succeeded and every check passed, 1 when a
//! report or benchmark row failed, 2 on any error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::noise::{sample_noise, SeedSpec};
use crate::processes::{
    for_each_path, gram_matrix, near_zero_count, symmetric_eigenvalues, FftSynthesizer, GridSpec, Kernel,
    PathCsvWriter, PathSource, ProcessKind, Synthesis, MAX_DENSE_POINTS,
};
use crate::verify::{run_suite, Suite, SuiteConfig, NEAR_ZERO_RATIO};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Largest elementwise naive/FFT deviation accepted by `bench`.
pub const BENCH_DEVIATION_TOL: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "circle-noise",
    version,
    about = "White noise, Brownian bridge and Levy's Brownian motion on the circle"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write replicate sample paths as a wide CSV.
    Sample(SampleArgs),
    /// Run a verification suite and write its JSON report.
    Verify(VerifyArgs),
    /// Eigenvalues of a kernel Gram matrix.
    Spectrum(SpectrumArgs),
    /// Time naive against FFT path synthesis.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MethodArg {
    Fft,
    Naive,
}

impl From<MethodArg> for Synthesis {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Fft => Synthesis::Fft,
            MethodArg::Naive => Synthesis::Naive,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SeedArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Ignore --seed and draw one from the clock; the seed is recorded in
    /// the output.
    #[arg(long)]
    pub fresh_seed: bool,
}

impl SeedArgs {
    pub fn resolve(&self) -> u64 {
        if self.fresh_seed {
            let nanos = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_nanos() as u64)
                .unwrap_or(0);
            eprintln!("fresh seed: {nanos}");
            nanos
        } else {
            self.seed
        }
    }
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    /// bridge or levy.
    #[arg(long)]
    pub process: String,
    #[arg(long, default_value_t = 1024)]
    pub trunc: usize,
    #[arg(long, default_value_t = 4096)]
    pub grid: usize,
    #[arg(long, default_value_t = 20_000)]
    pub reps: usize,
    #[command(flatten)]
    pub seed: SeedArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::Fft)]
    pub method: MethodArg,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 1024)]
    pub trunc: usize,
    #[arg(long, default_value_t = 4096)]
    pub grid: usize,
    #[arg(long, default_value_t = 20_000)]
    pub reps: usize,
    #[command(flatten)]
    pub seed: SeedArgs,
    #[arg(long, default_value_t = NEAR_ZERO_RATIO)]
    pub tol_ratio: f64,
    /// Report path; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// levy, bridge or min.
    #[arg(long, default_value = "levy")]
    pub kernel: String,
    /// Uniform grid `j / grid`, used unless --points is given.
    #[arg(long, default_value_t = 16)]
    pub grid: usize,
    /// Comma-separated points in [0, 1).
    #[arg(long, value_delimiter = ',')]
    pub points: Option<Vec<f64>>,
    /// Drop the point 0, where every kernel here vanishes.
    #[arg(long)]
    pub exclude_zero: bool,
    #[arg(long, default_value_t = NEAR_ZERO_RATIO)]
    pub tol_ratio: f64,
    /// CSV path; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated `N:M` pairs.
    #[arg(long, value_delimiter = ',', default_value = "8:32,64:256,512:2048,4096:16384")]
    pub sizes: Vec<String>,
    /// bridge or levy.
    #[arg(long, default_value = "bridge")]
    pub process: String,
    /// Timed repetitions per row; the fastest is reported.
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
    #[command(flatten)]
    pub seed: SeedArgs,
}

/// Parses arguments from the process and runs; returns the exit code.
pub fn main_entry() -> i32 {
    run(Cli::parse())
}

pub fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Sample(a) => run_sample(&a),
        Command::Verify(a) => run_verify(&a),
        Command::Spectrum(a) => run_spectrum(&a),
        Command::Bench(a) => run_bench(&a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn run_sample(a: &SampleArgs) -> Result<i32> {
    let kind: ProcessKind = a.process.parse()?;
    let grid = GridSpec::new(a.grid)?;
    let method = Synthesis::from(a.method);
    if method == Synthesis::Fft && a.grid < 2 * a.trunc + 1 {
        return Err(Error::Aliasing {
            grid: a.grid,
            trunc: a.trunc,
        });
    }
    let seed = a.seed.resolve();
    let source = PathSource::Spectral {
        kind,
        trunc: a.trunc,
        method,
    };
    let comment = format!("{source} grid={} reps={} seed={seed}", a.grid, a.reps);
    let mut writer = PathCsvWriter::new(BufWriter::new(File::create(&a.out)?), grid, Some(&comment))?;
    let half = a.grid / 2;
    let last = a.grid - 1;
    let (mut sum_half, mut sum_last) = (0.0, 0.0);
    for_each_path(source, grid, SeedSpec::new(seed), a.reps, |r, path| {
        sum_half += path[half] * path[half];
        sum_last += path[last] * path[last];
        writer.write_path(r, path)
    })?;
    writer.finish()?;
    let kernel = kind.kernel();
    let reps = a.reps.max(1) as f64;
    for (j, sum) in [(half, sum_half), (last, sum_last)] {
        let t = grid.point(j);
        println!(
            "mean variance at t={t}: {:.6} (kernel {:.6})",
            sum / reps,
            kernel.eval(t, t)
        );
    }
    println!("wrote {} paths on {} points to {}", a.reps, a.grid, a.out.display());
    Ok(EXIT_OK)
}

pub fn run_verify(a: &VerifyArgs) -> Result<i32> {
    let suite: Suite = a.suite.parse()?;
    let config = SuiteConfig {
        trunc: a.trunc,
        grid: a.grid,
        reps: a.reps,
        seed: a.seed.resolve(),
        tol_ratio: a.tol_ratio,
    };
    let report = run_suite(suite, &config)?;
    let mut out = output(a.out.as_ref())?;
    writeln!(out, "{}", report.to_json()?)?;
    out.flush()?;
    for c in report.failures() {
        eprintln!(
            "FAIL {}: statistic {:e}, expected {:e}, tolerance {:e} ({})",
            c.name, c.statistic, c.expected, c.tolerance, c.detail
        );
    }
    eprintln!(
        "{}: {}/{} checks passed",
        suite,
        report.checks.iter().filter(|c| c.pass).count(),
        report.checks.len()
    );
    Ok(if report.overall_pass { EXIT_OK } else { EXIT_FAILED })
}

pub fn run_spectrum(a: &SpectrumArgs) -> Result<i32> {
    let kernel: Kernel = a.kernel.parse()?;
    let mut points = match &a.points {
        Some(p) => p.clone(),
        None => GridSpec::new(a.grid)?.points().collect(),
    };
    if a.exclude_zero {
        points.retain(|&t| t != 0.0);
    }
    if points.is_empty() {
        return Err(Error::InvalidArgument("no points left".into()));
    }
    if points.len() > MAX_DENSE_POINTS {
        return Err(Error::InvalidArgument(format!(
            "{} points exceed the dense limit {MAX_DENSE_POINTS}",
            points.len()
        )));
    }
    let eig = symmetric_eigenvalues(gram_matrix(&kernel, &points)?);
    let zeros = near_zero_count(&eig, a.tol_ratio);
    let mut out = output(a.out.as_ref())?;
    writeln!(
        out,
        "# kernel={kernel} points={} exclude_zero={} tol_ratio={:e}",
        points.len(),
        a.exclude_zero,
        a.tol_ratio
    )?;
    writeln!(out, "# near_zero={zeros} lambda_max={:e}", eig[eig.len() - 1])?;
    writeln!(out, "index,eigenvalue")?;
    for (i, l) in eig.iter().enumerate() {
        writeln!(out, "{i},{l:?}")?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}

/// One timed comparison of the two synthesis routes.
#[derive(Debug, Clone, Copy)]
pub struct BenchRow {
    pub trunc: usize,
    pub grid: usize,
    pub naive_secs: f64,
    pub fft_secs: f64,
    pub max_deviation: f64,
}

impl BenchRow {
    pub fn speedup(&self) -> f64 {
        self.naive_secs / self.fft_secs
    }
}

pub fn bench_row(kind: ProcessKind, trunc: usize, grid: usize, repeats: usize, seed: u64) -> Result<BenchRow> {
    let spec = GridSpec::new(grid)?;
    let x = sample_noise(trunc, SeedSpec::new(seed), 0)?;
    let synth = FftSynthesizer::new(spec);
    let (mut naive_secs, mut fft_secs) = (f64::INFINITY, f64::INFINITY);
    let (mut naive, mut fft) = (Vec::new(), Vec::new());
    for _ in 0..repeats.max(1) {
        let t0 = Instant::now();
        naive = crate::processes::synthesize_path_naive(kind, &x, &spec)?;
        naive_secs = naive_secs.min(t0.elapsed().as_secs_f64());
        let t0 = Instant::now();
        fft = synth.synthesize(kind, &x)?;
        fft_secs = fft_secs.min(t0.elapsed().as_secs_f64());
    }
    let max_deviation = naive.iter().zip(&fft).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    Ok(BenchRow {
        trunc,
        grid,
        naive_secs,
        fft_secs,
        max_deviation,
    })
}

fn parse_size(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidArgument(format!("size '{s}' is not of the form N:M"));
    let (n, m) = s.trim().split_once(':').ok_or_else(bad)?;
    Ok((n.parse().map_err(|_| bad())?, m.parse().map_err(|_| bad())?))
}

pub fn run_bench(a: &BenchArgs) -> Result<i32> {
    let kind: ProcessKind = a.process.parse()?;
    let sizes = a.sizes.iter().map(|s| parse_size(s)).collect::<Result<Vec<_>>>()?;
    let seed = a.seed.resolve();
    println!("# process={kind} repeats={} seed={seed}", a.repeats);
    println!(
        "{:>6} {:>7} {:>12} {:>12} {:>9} {:>12}",
        "N", "M", "naive_ms", "fft_ms", "speedup", "max_dev"
    );
    let mut ok = true;
    for (n, m) in sizes {
        let row = bench_row(kind, n, m, a.repeats, seed)?;
        ok &= row.max_deviation <= BENCH_DEVIATION_TOL;
        println!(
            "{:>6} {:>7} {:>12.3} {:>12.3} {:>9.2} {:>12.3e}",
            row.trunc,
            row.grid,
            row.naive_secs * 1e3,
            row.fft_secs * 1e3,
            row.speedup(),
            row.max_deviation
        );
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sizes() {
        assert_eq!(parse_size("8:32").unwrap(), (8, 32));
        assert!(parse_size("8x32").is_err());
    }

    #[test]
    fn small_bench_row_agrees() {
        let row = bench_row(ProcessKind::Levy, 8, 32, 1, 1).unwrap();
        assert!(row.max_deviation <= BENCH_DEVIATION_TOL);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
