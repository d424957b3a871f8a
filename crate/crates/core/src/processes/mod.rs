//! Brownian bridge and Levy circular Brownian motion: covariance kernels,
//! spectral path synthesis and a dense Cholesky oracle.

mod cholesky;
mod kernel;
mod synthesis;

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

pub use cholesky::{cholesky_sample, factor_with_jitter, CholeskySampler, JITTER_MAX, JITTER_START};
pub use kernel::{
    circular_distance, gram_matrix, kernel_eval, kernel_spectrum, near_zero_count, symmetric_eigenvalues, Kernel,
    MAX_DENSE_POINTS,
};
pub use synthesis::{synthesize_path_fft, synthesize_path_naive, FftSynthesizer, IMAG_RESIDUE_TOL};

use crate::error::{Error, Result};
use crate::fourier::{bridge_test_function, eta_test_function, FourierSeries};
use crate::noise::{sample_noise, SeedSpec};

/// Processes obtained by pairing a family of test functions with white noise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProcessKind {
    /// `t -> (1_[0,t) - t)(x)`, covariance `min(s, t) - s t`.
    Bridge,
    /// `t -> eta_t(x)`, Levy's covariance with origin 0.
    Levy,
}

impl ProcessKind {
    pub fn test_function(self, t: f64, trunc: usize) -> Result<FourierSeries> {
        match self {
            ProcessKind::Bridge => bridge_test_function(t, trunc),
            ProcessKind::Levy => eta_test_function(t, trunc),
        }
    }

    /// Covariance of the limiting process.
    pub fn kernel(self) -> Kernel {
        match self {
            ProcessKind::Bridge => Kernel::Bridge,
            ProcessKind::Levy => Kernel::levy(),
        }
    }

    /// Bound on `|(f_s, f_t) - K(s, t)|` from dropping frequencies above
    /// `trunc`: the two-sided tail of `|c_n(t)|^2` with `|1 - e^{i x}|^2 <= 4`.
    pub fn truncation_bound(self, trunc: usize) -> f64 {
        let pi2n = std::f64::consts::PI.powi(2) * trunc as f64;
        match self {
            ProcessKind::Bridge => 2.0 / pi2n,
            ProcessKind::Levy => 4.0 / pi2n,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProcessKind::Bridge => "bridge",
            ProcessKind::Levy => "levy",
        }
    }
}

impl fmt::Display for ProcessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProcessKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bridge" => Ok(ProcessKind::Bridge),
            "levy" => Ok(ProcessKind::Levy),
            "white-noise" | "white_noise" | "noise" => Err(Error::NoPointwisePath),
            other => Err(Error::InvalidArgument(format!(
                "unknown process '{other}' (expected bridge or levy)"
            ))),
        }
    }
}

/// Uniform grid `t_j = j / M`, `j = 0..M`; the endpoint 1 is the same point
/// as 0 and is excluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    m: usize,
}

impl GridSpec {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!("grid needs at least 2 points, got {m}")));
        }
        Ok(GridSpec { m })
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn point(&self, j: usize) -> f64 {
        j as f64 / self.m as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.m).map(|j| self.point(j))
    }

    /// Index of `t` if it lies exactly on the grid.
    pub fn index_of(&self, t: f64) -> Option<usize> {
        let j = (t * self.m as f64).round();
        (j >= 0.0 && (j as usize) < self.m && self.point(j as usize) == t).then_some(j as usize)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Synthesis {
    Fft,
    Naive,
}

/// Where the paths of an ensemble come from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PathSource {
    Spectral {
        kind: ProcessKind,
        trunc: usize,
        method: Synthesis,
    },
    Cholesky {
        kernel: Kernel,
    },
}

impl fmt::Display for PathSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathSource::Spectral { kind, trunc, method } => {
                let method = match method {
                    Synthesis::Fft => "fft",
                    Synthesis::Naive => "naive",
                };
                write!(f, "process={kind} trunc={trunc} method={method}")
            }
            PathSource::Cholesky { kernel } => write!(f, "cholesky kernel={kernel}"),
        }
    }
}

enum Generator {
    Fft(ProcessKind, usize, FftSynthesizer),
    Naive(ProcessKind, usize),
    Cholesky(CholeskySampler),
}

impl Generator {
    fn new(source: PathSource, grid: GridSpec) -> Result<Self> {
        Ok(match source {
            PathSource::Spectral {
                kind,
                trunc,
                method: Synthesis::Fft,
            } => {
                if grid.len() < 2 * trunc + 1 {
                    return Err(Error::Aliasing {
                        grid: grid.len(),
                        trunc,
                    });
                }
                Generator::Fft(kind, trunc, FftSynthesizer::new(grid))
            }
            PathSource::Spectral {
                kind,
                trunc,
                method: Synthesis::Naive,
            } => Generator::Naive(kind, trunc),
            PathSource::Cholesky { kernel } => Generator::Cholesky(CholeskySampler::for_grid(kernel, &grid)?),
        })
    }

    fn path(&self, grid: &GridSpec, seed: SeedSpec, replicate: u64) -> Result<Vec<f64>> {
        match self {
            Generator::Fft(kind, trunc, synth) => synth.synthesize(*kind, &sample_noise(*trunc, seed, replicate)?),
            Generator::Naive(kind, trunc) => {
                synthesize_path_naive(*kind, &sample_noise(*trunc, seed, replicate)?, grid)
            }
            Generator::Cholesky(sampler) => Ok(sampler.sample(seed, replicate)),
        }
    }
}

const CHUNK: usize = 256;

/// Generates replicates `0..reps` in parallel chunks and hands each path to
/// `sink` in replicate order, so memory stays bounded by one chunk.
pub fn for_each_path<F>(source: PathSource, grid: GridSpec, seed: SeedSpec, reps: usize, mut sink: F) -> Result<()>
where
    F: FnMut(u64, &[f64]) -> Result<()>,
{
    let generator = Generator::new(source, grid)?;
    let mut start = 0;
    while start < reps {
        let end = (start + CHUNK).min(reps);
        let chunk: Vec<Vec<f64>> = (start as u64..end as u64)
            .into_par_iter()
            .map(|r| generator.path(&grid, seed, r))
            .collect::<Result<_>>()?;
        for (offset, path) in chunk.iter().enumerate() {
            sink((start + offset) as u64, path)?;
        }
        start = end;
    }
    Ok(())
}

/// Replicate paths held in memory.
#[derive(Debug, Clone)]
pub struct PathEnsemble {
    grid: GridSpec,
    source: PathSource,
    seed: SeedSpec,
    paths: Vec<Vec<f64>>,
}

impl PathEnsemble {
    pub fn generate(source: PathSource, grid: GridSpec, seed: SeedSpec, reps: usize) -> Result<Self> {
        let mut paths = Vec::with_capacity(reps);
        for_each_path(source, grid, seed, reps, |_, p| {
            paths.push(p.to_vec());
            Ok(())
        })?;
        Ok(PathEnsemble {
            grid,
            source,
            seed,
            paths,
        })
    }

    pub fn spectral(kind: ProcessKind, trunc: usize, grid: GridSpec, seed: SeedSpec, reps: usize) -> Result<Self> {
        let source = PathSource::Spectral {
            kind,
            trunc,
            method: Synthesis::Fft,
        };
        Self::generate(source, grid, seed, reps)
    }

    pub fn cholesky(kernel: Kernel, grid: GridSpec, seed: SeedSpec, reps: usize) -> Result<Self> {
        Self::generate(PathSource::Cholesky { kernel }, grid, seed, reps)
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn source(&self) -> PathSource {
        self.source
    }

    pub fn seed(&self) -> SeedSpec {
        self.seed
    }

    pub fn paths(&self) -> &[Vec<f64>] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// `(1/R) sum_r path_r(i) path_r(j)`; the processes have mean zero.
    pub fn second_moment(&self, i: usize, j: usize) -> f64 {
        self.paths.iter().map(|p| p[i] * p[j]).sum::<f64>() / self.paths.len() as f64
    }

    pub fn write_csv<W: Write>(&self, mut writer: W, comment: Option<&str>) -> Result<()> {
        let mut csv = PathCsvWriter::new(&mut writer, self.grid, comment)?;
        for (r, p) in self.paths.iter().enumerate() {
            csv.write_path(r as u64, p)?;
        }
        csv.finish()
    }
}

/// Wide-format path CSV: `replicate,t0,t1,...`, one row per replicate.
pub struct PathCsvWriter<W: Write> {
    inner: csv::Writer<W>,
    row: Vec<String>,
}

impl<W: Write> PathCsvWriter<W> {
    /// Writes the optional `#` comment line and the header.
    pub fn new(mut writer: W, grid: GridSpec, comment: Option<&str>) -> Result<Self> {
        if let Some(c) = comment {
            writeln!(writer, "# {c}")?;
        }
        let mut inner = csv::Writer::from_writer(writer);
        let mut header = Vec::with_capacity(grid.len() + 1);
        header.push("replicate".to_string());
        header.extend((0..grid.len()).map(|j| format!("t{j}")));
        inner.write_record(&header)?;
        Ok(PathCsvWriter { inner, row: header })
    }

    pub fn write_path(&mut self, replicate: u64, path: &[f64]) -> Result<()> {
        self.row.clear();
        self.row.push(replicate.to_string());
        self.row.extend(path.iter().map(|v| format!("{v:?}")));
        self.inner.write_record(&self.row)?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        self.inner.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn grid_points() {
        let g = GridSpec::new(8).unwrap();
        assert_eq!(g.points().collect::<Vec<_>>()[..3], [0.0, 0.125, 0.25]);
        assert_eq!(g.index_of(0.75), Some(6));
        assert_eq!(g.index_of(0.1), None);
        assert!(GridSpec::new(1).is_err());
    }

    #[test]
    fn process_names() {
        assert_eq!("levy".parse::<ProcessKind>().unwrap(), ProcessKind::Levy);
        assert!(matches!(
            "white-noise".parse::<ProcessKind>(),
            Err(Error::NoPointwisePath)
        ));
        assert!(matches!(
            "wiener".parse::<ProcessKind>(),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn spectral_paths_are_pinned_at_origin() {
        let grid = GridSpec::new(64).unwrap();
        for kind in [ProcessKind::Bridge, ProcessKind::Levy] {
            let ens = PathEnsemble::spectral(kind, 31, grid, SeedSpec::new(5), 200).unwrap();
            assert!(ens.second_moment(0, 0) <= 1e-20);
            assert!(ens.paths().iter().flatten().all(|v| v.is_finite()));
        }
    }

    #[test]
    fn ensemble_is_independent_of_chunking() {
        let grid = GridSpec::new(32).unwrap();
        let seed = SeedSpec::new(11);
        let ens = PathEnsemble::spectral(ProcessKind::Bridge, 15, grid, seed, CHUNK + 3).unwrap();
        let synth = FftSynthesizer::new(grid);
        let direct = synth
            .synthesize(ProcessKind::Bridge, &sample_noise(15, seed, CHUNK as u64 + 1).unwrap())
            .unwrap();
        assert_eq!(ens.paths()[CHUNK + 1], direct);
    }

    #[test]
    fn bridge_variance_shrinks_near_one() {
        let grid = GridSpec::new(64).unwrap();
        let ens = PathEnsemble::spectral(ProcessKind::Bridge, 31, grid, SeedSpec::new(2), 4000).unwrap();
        let t = grid.point(63);
        let var = ens.second_moment(63, 63);
        let se = (2.0 / 4000.0f64).sqrt() * t * (1.0 - t);
        assert_abs_diff_eq!(var, t * (1.0 - t), epsilon = 4.0 * se + 1.0 / (9.8 * 31.0));
        assert!(var < ens.second_moment(32, 32));
    }

    #[test]
    fn csv_layout() {
        let grid = GridSpec::new(4).unwrap();
        let ens = PathEnsemble::spectral(ProcessKind::Levy, 1, grid, SeedSpec::new(0), 2).unwrap();
        let mut buf = Vec::new();
        ens.write_csv(&mut buf, Some("cfg")).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "# cfg");
        assert_eq!(lines[1], "replicate,t0,t1,t2,t3");
        assert_eq!(lines.len(), 4);
        let row: Vec<f64> = lines[2].split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(row[1..], ens.paths()[0][..]);
    }
}
