//! Named groups of checks.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::checks::*;
use super::report::{CheckResult, ReportConfig, VerificationReport};
use crate::error::{Error, Result};
use crate::fourier::{bridge_test_function, eta_test_function, pulse_test_function, FourierSeries};
use crate::noise::{SeedSpec, StreamDomain, MIN_REPLICATES};
use crate::processes::{GridSpec, Kernel, PathSource, ProcessKind, Synthesis};

/// Points whose pairwise products make up the covariance pair grid.
pub const PAIR_POINTS: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];
/// Grid points, all multiples of `1/8`, used by the path-based checks.
pub const PATH_POINTS: [f64; 5] = [0.125, 0.25, 0.5, 0.75, 0.875];
/// Oracle grid size for the Cholesky comparison.
pub const ORACLE_GRID: usize = 256;
/// Truncation of the spectral side of the oracle comparison.
pub const ORACLE_TRUNC: usize = 4096;
/// Truncation used by the exact identity checks.
pub const IDENTITY_TRUNC: usize = 1001;
/// Number of random pairs in the identity suite.
pub const IDENTITY_PAIRS: usize = 20;

/// All unordered pairs `(s, t)` with `s <= t` from `points`.
pub fn unordered_pairs(points: &[f64]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for (i, &s) in points.iter().enumerate() {
        for &t in &points[i..] {
            out.push((s, t));
        }
    }
    out
}

/// Distinct pairs `s < t`.
pub fn distinct_pairs(points: &[f64]) -> Vec<(f64, f64)> {
    unordered_pairs(points).into_iter().filter(|(s, t)| s != t).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Covariance,
    Normality,
    Independence,
    Identity,
    Charfunc,
    Degeneracy,
    Hs,
    All,
}

impl Suite {
    pub const MEMBERS: [Suite; 7] = [
        Suite::Covariance,
        Suite::Normality,
        Suite::Independence,
        Suite::Identity,
        Suite::Charfunc,
        Suite::Degeneracy,
        Suite::Hs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Covariance => "covariance",
            Suite::Normality => "normality",
            Suite::Independence => "independence",
            Suite::Identity => "identity",
            Suite::Charfunc => "charfunc",
            Suite::Degeneracy => "degeneracy",
            Suite::Hs => "hs",
            Suite::All => "all",
        }
    }

    /// Whether the suite draws Monte Carlo samples.
    pub fn is_statistical(self) -> bool {
        !matches!(self, Suite::Identity | Suite::Degeneracy)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::MEMBERS)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown suite '{s}' (expected covariance, normality, independence, identity, charfunc, degeneracy, hs or all)"
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub trunc: usize,
    pub grid: usize,
    pub reps: usize,
    pub seed: u64,
    pub tol_ratio: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trunc: 1024,
            grid: 4096,
            reps: 20_000,
            seed: 42,
            tol_ratio: NEAR_ZERO_RATIO,
        }
    }
}

impl SuiteConfig {
    fn seed_spec(&self) -> SeedSpec {
        SeedSpec::new(self.seed)
    }

    fn report_config(&self) -> ReportConfig {
        ReportConfig {
            trunc: self.trunc,
            grid: self.grid,
            reps: self.reps,
            seed: self.seed,
        }
    }
}

/// Runs a suite and assembles its report in declaration order.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<VerificationReport> {
    if suite.is_statistical() && config.reps < MIN_REPLICATES {
        return Err(Error::TooFewReplicates {
            got: config.reps,
            min: MIN_REPLICATES,
        });
    }
    let checks = match suite {
        Suite::All => {
            let mut all = Vec::new();
            for member in Suite::MEMBERS {
                all.extend(suite_checks(member, config)?);
            }
            all
        }
        _ => suite_checks(suite, config)?,
    };
    Ok(VerificationReport::new(suite.name(), config.report_config(), checks))
}

fn suite_checks(suite: Suite, config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    match suite {
        Suite::Covariance => covariance(config),
        Suite::Normality => normality(config),
        Suite::Independence => independence(config),
        Suite::Identity => identity(config),
        Suite::Charfunc => charfunc(config),
        Suite::Degeneracy => degeneracy(config),
        Suite::Hs => hs(config),
        Suite::All => run_suite(Suite::All, config).map(|r| r.checks),
    }
}

fn covariance(c: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let seed = c.seed_spec();
    let pairs = unordered_pairs(&PAIR_POINTS);
    let mut out = check_parseval_bridge(c.trunc.max(16), &pairs)?;
    out.extend(check_eta_gram(c.trunc, &pairs)?);
    out.extend(mc_covariance_check(
        ProcessKind::Bridge,
        c.trunc,
        &[(0.25, 0.5), (0.1, 0.9)],
        c.reps,
        seed,
    )?);
    out.extend(mc_covariance_check(
        ProcessKind::Levy,
        c.trunc,
        &[(0.2, 0.4), (0.2, 0.9)],
        c.reps,
        seed,
    )?);

    let grid = GridSpec::new(c.grid)?;
    let index_pairs = distinct_pairs(&PATH_POINTS)
        .into_iter()
        .map(|(s, t)| {
            (
                (s * c.grid as f64).round() as usize,
                (t * c.grid as f64).round() as usize,
            )
        })
        .collect::<Vec<_>>();
    for kind in [ProcessKind::Bridge, ProcessKind::Levy] {
        let source = PathSource::Spectral {
            kind,
            trunc: c.trunc,
            method: Synthesis::Fft,
        };
        out.extend(path_covariance_check(
            source,
            kind.kernel(),
            grid,
            &index_pairs,
            c.reps,
            seed,
            kind.truncation_bound(c.trunc),
        )?);
    }

    let spectral = PathSource::Spectral {
        kind: ProcessKind::Bridge,
        trunc: ORACLE_TRUNC,
        method: Synthesis::Fft,
    };
    out.extend(oracle_equivalence_check(
        spectral,
        GridSpec::new(4 * ORACLE_TRUNC)?,
        Kernel::Bridge,
        GridSpec::new(ORACLE_GRID)?,
        &distinct_pairs(&PATH_POINTS),
        c.reps,
        seed,
        ProcessKind::Bridge.truncation_bound(ORACLE_TRUNC),
    )?);
    Ok(out)
}

fn normality(c: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let seed = c.seed_spec();
    let funcs: [(&str, FourierSeries); 4] = [
        ("bridge_0.5", bridge_test_function(0.5, c.trunc)?),
        ("cos2", FourierSeries::cosine(2, 1.0)),
        ("eta_0.7", eta_test_function(0.7, c.trunc)?),
        ("pulse_0.3", pulse_test_function(0.3, 0.1, 2.0, c.trunc)?),
    ];
    funcs
        .iter()
        .map(|(name, f)| ks_normality_check(name, f, c.trunc, c.reps, seed))
        .collect()
}

fn independence(c: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let seed = c.seed_spec();
    let n = c.trunc;
    Ok(vec![
        independence_check(
            "pulses_[0,0.2)_[0.5,0.7)",
            &pulse_test_function(0.0, 0.1, 1.0, n)?,
            &pulse_test_function(0.5, 0.1, 1.0, n)?,
            n,
            c.reps,
            seed,
        )?,
        independence_check(
            "cos1_cos2",
            &FourierSeries::cosine(1, 1.0),
            &FourierSeries::cosine(2, 1.0),
            n,
            c.reps,
            seed,
        )?,
        independence_check(
            "pulses_[0.1,0.3)_[0.3,0.7)",
            &pulse_test_function(0.1, 0.1, 1.5, n)?,
            &pulse_test_function(0.3, 0.2, 1.0, n)?,
            n,
            c.reps,
            seed,
        )?,
    ])
}

/// `IDENTITY_PAIRS` pseudo-random `(t, s)` pairs on `[0, 1)`, drawn from
/// the seed's own stream so the identity suite does not consume noise.
pub fn identity_pairs(seed: u64) -> Vec<(f64, f64)> {
    let mut rng = SeedSpec::new(seed).rng(StreamDomain::Identity, 0);
    (0..IDENTITY_PAIRS)
        .map(|_| (rng.random::<f64>(), rng.random::<f64>()))
        .collect()
}

fn identity(c: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for (t, s) in identity_pairs(c.seed) {
        out.push(check_levy_identity(t, s, IDENTITY_TRUNC)?);
        out.push(check_mirror(0.5 + 0.5 * s.max(1e-9), IDENTITY_TRUNC)?);
    }
    Ok(out)
}

fn charfunc(c: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let seed = c.seed_spec();
    let n = c.trunc;
    let p1 = pulse_test_function(0.0, 0.1, 1.0, n)?;
    let p2 = pulse_test_function(0.5, 0.1, 1.0, n)?;
    let mut out = vec![
        char_functional_check("zero", &FourierSeries::zeros(n), n, c.reps, seed)?,
        char_functional_check("cos1", &FourierSeries::cosine(1, 1.0), n, c.reps, seed)?,
        char_functional_check("bridge_0.3", &bridge_test_function(0.3, n)?, n, c.reps, seed)?,
        char_functional_check("pulse_0.0", &p1, n, c.reps, seed)?,
        char_functional_product_check("pulses", &p1, &p2, n, c.reps, seed)?,
    ];
    let funcs = [
        p1,
        p2,
        FourierSeries::cosine(1, 0.5),
        bridge_test_function(0.3, n)?,
        eta_test_function(0.6, n)?,
    ];
    out.push(char_functional_psd_check(&funcs, n, c.reps, seed)?);
    Ok(out)
}

fn degeneracy(c: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let uniform = uniform_antipodal_points(8);
    Ok(vec![
        check_degenerate_spectrum(&[0.1, 0.6, 0.3, 0.8], c.tol_ratio)?,
        check_degenerate_spectrum(&uniform, c.tol_ratio)?,
        check_definite(Kernel::Bridge, &uniform[1..])?,
        check_antipodal_quadratic_form(0.1, 0.3)?,
        check_antipodal_quadratic_form(0.05, 0.95)?,
    ])
}

fn hs(c: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let se = hminus1_norm_se(c.trunc, c.reps);
    Ok(vec![
        hs_sum_check(1_000_000)?,
        hs_two_sided_check(1_000_000)?,
        noise_hminus1_check(c.trunc, c.reps, c.seed_spec(), SE_BAND * se)?,
    ])
}
