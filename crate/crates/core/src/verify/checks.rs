//! Individual tolerance-bearing checks.
//!
//! Monte Carlo tolerances are a `4 SE` band plus, where the statistic
//! targets a limit the truncation cannot reach, the analytic truncation
//! bound. Both terms are reported in `detail`.

use std::f64::consts::PI;

use nalgebra::{Complex, DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::report::{CheckResult, EXACT_TOL};
use super::stats::{ks_critical_001, ks_statistic_normal, product_moment_se, second_moment, zero_mean_correlation};
use crate::error::{Error, Result};
use crate::fourier::{bridge_test_function, eta_test_function, hilbert_schmidt_sum, FourierSeries};
use crate::noise::{empirical_char_functional, map_replicates, pair, SeedSpec, MIN_REPLICATES};
use crate::processes::{
    for_each_path, gram_matrix, kernel_spectrum, near_zero_count, symmetric_eigenvalues, GridSpec, Kernel, PathSource,
    ProcessKind,
};

/// Width of the Monte Carlo band in standard errors.
pub const SE_BAND: f64 = 4.0;
/// Default ratio below which an eigenvalue counts as zero.
pub const NEAR_ZERO_RATIO: f64 = 1e-10;
/// Smallest `lambda_min / lambda_max` accepted as strictly positive definite.
pub const DEFINITE_RATIO: f64 = 1e-8;

fn require_reps(reps: usize) -> Result<()> {
    if reps < MIN_REPLICATES {
        return Err(Error::TooFewReplicates {
            got: reps,
            min: MIN_REPLICATES,
        });
    }
    Ok(())
}

fn antipode(t: f64) -> f64 {
    if t < 0.5 {
        t + 0.5
    } else {
        t - 0.5
    }
}

/// Parseval Gram of the bridge test functions against `min(s, t) - s t`.
pub fn check_parseval_bridge(trunc: usize, pairs: &[(f64, f64)]) -> Result<Vec<CheckResult>> {
    if trunc < 16 {
        return Err(Error::InvalidArgument(format!("truncation {trunc} below 16")));
    }
    let bound = ProcessKind::Bridge.truncation_bound(trunc);
    pairs
        .iter()
        .map(|&(s, t)| {
            let fs = bridge_test_function(s, trunc)?;
            let ft = bridge_test_function(t, trunc)?;
            let gram = fs.inner_product(&ft).re;
            Ok(CheckResult::within(
                format!("parseval_bridge({s},{t})"),
                gram,
                Kernel::Bridge.eval(s, t),
                bound + 1e-10,
                format!("N={trunc}; truncation bound 2/(pi^2 N)={bound:.3e}; rounding 1e-10"),
            ))
        })
        .collect()
}

/// Gram of the `eta_t` test functions against Levy's covariance with
/// origin 0 (equal to `min(s, t)` when both points lie in `[0, 1/2]`).
pub fn check_eta_gram(trunc: usize, pairs: &[(f64, f64)]) -> Result<Vec<CheckResult>> {
    let bound = ProcessKind::Levy.truncation_bound(trunc);
    pairs
        .iter()
        .map(|&(s, t)| {
            let fs = eta_test_function(s, trunc)?;
            let ft = eta_test_function(t, trunc)?;
            let gram = fs.inner_product(&ft).re;
            Ok(CheckResult::within(
                format!("eta_gram({s},{t})"),
                gram,
                Kernel::levy().eval(s, t),
                bound + 1e-10,
                format!(
                    "N={trunc}; expected levy kernel (min(s,t)={}); truncation bound 4/(pi^2 N)={bound:.3e}",
                    s.min(t)
                ),
            ))
        })
        .collect()
}

/// `|| (eta_t + eta_t') - (eta_s + eta_s') ||` where `'` is the antipode.
pub fn check_levy_identity(t: f64, s: f64, trunc: usize) -> Result<CheckResult> {
    let lhs = &eta_test_function(t, trunc)? + &eta_test_function(antipode(t), trunc)?;
    let rhs = &eta_test_function(s, trunc)? + &eta_test_function(antipode(s), trunc)?;
    let residual = (&lhs - &rhs).l2_norm_sq().sqrt();
    Ok(CheckResult::within(
        format!("levy_identity({t},{s})"),
        residual,
        0.0,
        EXACT_TOL,
        format!("N={trunc}; coefficient residual of B(t)+B(t') - B(s)-B(s')"),
    ))
}

/// `|| eta_s - eta_0 - eta_{1/2} + eta_{s - 1/2} ||` for `s` in `(1/2, 1)`.
pub fn check_mirror(s: f64, trunc: usize) -> Result<CheckResult> {
    if !(s > 0.5 && s < 1.0) {
        return Err(Error::OutOfDomain {
            name: "s",
            value: s,
            domain: "(1/2, 1)",
        });
    }
    let residual = &(&eta_test_function(s, trunc)? - &eta_test_function(0.0, trunc)?)
        - &(&eta_test_function(0.5, trunc)? - &eta_test_function(s - 0.5, trunc)?);
    Ok(CheckResult::within(
        format!("mirror({s})"),
        residual.l2_norm_sq().sqrt(),
        0.0,
        EXACT_TOL,
        format!("N={trunc}; coefficient residual of B(s) - B(0) - B(1/2) + B(s-1/2)"),
    ))
}

/// Variance of `B(t) + B(t') - B(s) - B(s')` under the Levy kernel.
pub fn check_antipodal_quadratic_form(t: f64, s: f64) -> Result<CheckResult> {
    let pts = [t, antipode(t), s, antipode(s)];
    let g = gram_matrix(&Kernel::levy(), &pts)?;
    let v = [1.0, 1.0, -1.0, -1.0];
    let mut q = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            q += v[i] * g[(i, j)] * v[j];
        }
    }
    Ok(CheckResult::within(
        format!("levy_quadratic_form({t},{s})"),
        q,
        0.0,
        EXACT_TOL,
        "quadratic form (1,1,-1,-1) on an antipodal quadruple",
    ))
}

/// `2m` points `j / (2m)`, closed under the antipodal map.
pub fn uniform_antipodal_points(m: usize) -> Vec<f64> {
    (0..2 * m).map(|j| j as f64 / (2 * m) as f64).collect()
}

/// The Levy Gram on `2m` antipodally symmetric points must have at least
/// `m - 1` eigenvalues below `tol_ratio * lambda_max`.
pub fn check_degenerate_spectrum(points: &[f64], tol_ratio: f64) -> Result<CheckResult> {
    let m = points.len() / 2;
    if m < 2 || !points.len().is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "need an even number of at least 4 points, got {}",
            points.len()
        )));
    }
    for &p in points {
        let a = antipode(p);
        if !points.iter().any(|&q| (q - a).abs() <= 1e-15) {
            return Err(Error::InvalidArgument(format!(
                "antipode of {p} missing from point set"
            )));
        }
    }
    let eig = kernel_spectrum(&Kernel::levy(), points)?;
    let count = near_zero_count(&eig, tol_ratio);
    Ok(CheckResult::at_least(
        format!("levy_degenerate_spectrum(m={m})"),
        count as f64,
        (m - 1) as f64,
        format!(
            "{count} of {} eigenvalues below {tol_ratio:e} * lambda_max={:.6e}",
            eig.len(),
            eig.last().copied().unwrap_or(0.0)
        ),
    ))
}

/// Strict positive definiteness of a kernel's Gram: `lambda_min / lambda_max`
/// must reach [`DEFINITE_RATIO`].
pub fn check_definite(kernel: Kernel, points: &[f64]) -> Result<CheckResult> {
    let eig = kernel_spectrum(&kernel, points)?;
    let ratio = eig[0] / eig[eig.len() - 1];
    Ok(CheckResult::at_least(
        format!("{}_definite(n={})", kernel.name(), points.len()),
        ratio,
        DEFINITE_RATIO,
        format!("lambda_min={:.6e}; lambda_max={:.6e}", eig[0], eig[eig.len() - 1]),
    ))
}

/// Monte Carlo covariance of the pairings `f_s(x)`, `f_t(x)` against the
/// process kernel.
pub fn mc_covariance_check(
    kind: ProcessKind,
    trunc: usize,
    pairs: &[(f64, f64)],
    reps: usize,
    seed: SeedSpec,
) -> Result<Vec<CheckResult>> {
    require_reps(reps)?;
    let mut points: Vec<f64> = pairs.iter().flat_map(|&(s, t)| [s, t]).collect();
    points.sort_by(f64::total_cmp);
    points.dedup();
    let funcs = points
        .iter()
        .map(|&t| kind.test_function(t, trunc))
        .collect::<Result<Vec<_>>>()?;
    let values: Vec<Vec<f64>> = map_replicates(trunc, seed, reps, |x| {
        funcs.iter().map(|f| pair(f, x).unwrap_or(f64::NAN)).collect()
    })?;
    let column = |t: f64| -> Vec<f64> {
        let i = points.iter().position(|&p| p == t).unwrap_or(0);
        values.iter().map(|row| row[i]).collect()
    };
    let kernel = kind.kernel();
    let bias = kind.truncation_bound(trunc);
    Ok(pairs
        .iter()
        .map(|&(s, t)| {
            let cov = second_moment(&column(s), &column(t));
            let se = product_moment_se(kernel.eval(s, s), kernel.eval(t, t), kernel.eval(s, t), reps);
            CheckResult::within(
                format!("mc_covariance_{}({s},{t})", kind.name()),
                cov,
                kernel.eval(s, t),
                SE_BAND * se + bias,
                format!(
                    "N={trunc} R={reps}; 4*SE={:.3e}; truncation bound={bias:.3e}",
                    SE_BAND * se
                ),
            )
        })
        .collect())
}

/// `(1/R) sum_r path_r(i) path_r(j)` for each index pair.
pub fn path_second_moments(
    source: PathSource,
    grid: GridSpec,
    seed: SeedSpec,
    reps: usize,
    index_pairs: &[(usize, usize)],
) -> Result<Vec<f64>> {
    let mut sums = vec![0.0; index_pairs.len()];
    for_each_path(source, grid, seed, reps, |_, path| {
        for (acc, &(i, j)) in sums.iter_mut().zip(index_pairs) {
            *acc += path[i] * path[j];
        }
        Ok(())
    })?;
    Ok(sums.into_iter().map(|s| s / reps as f64).collect())
}

/// Covariance of synthesized grid paths against `kernel`, with an explicit
/// bias allowance for the truncation.
pub fn path_covariance_check(
    source: PathSource,
    kernel: Kernel,
    grid: GridSpec,
    index_pairs: &[(usize, usize)],
    reps: usize,
    seed: SeedSpec,
    bias: f64,
) -> Result<Vec<CheckResult>> {
    require_reps(reps)?;
    let moments = path_second_moments(source, grid, seed, reps, index_pairs)?;
    Ok(index_pairs
        .iter()
        .zip(moments)
        .map(|(&(i, j), cov)| {
            let (s, t) = (grid.point(i), grid.point(j));
            let se = product_moment_se(kernel.eval(s, s), kernel.eval(t, t), kernel.eval(s, t), reps);
            CheckResult::within(
                format!("path_covariance({s},{t})"),
                cov,
                kernel.eval(s, t),
                SE_BAND * se + bias,
                format!(
                    "{source} M={} R={reps}; 4*SE={:.3e}; bias allowance={bias:.3e}",
                    grid.len(),
                    SE_BAND * se
                ),
            )
        })
        .collect())
}

fn grid_index(grid: GridSpec, t: f64) -> Result<usize> {
    grid.index_of(t)
        .ok_or_else(|| Error::InvalidArgument(format!("point {t} is not on the grid of size {}", grid.len())))
}

/// Compares empirical covariances of a spectral sampler and a Cholesky
/// oracle of the same kernel at point pairs lying on both grids. The
/// spectral grid may be finer than the oracle grid so that the truncation
/// can exceed what the oracle grid alone would allow without aliasing.
/// The tolerance is the sum of both `4 SE` bands plus `bias`.
#[allow(clippy::too_many_arguments)]
pub fn oracle_equivalence_check(
    spectral: PathSource,
    spectral_grid: GridSpec,
    kernel: Kernel,
    oracle_grid: GridSpec,
    pairs: &[(f64, f64)],
    reps: usize,
    seed: SeedSpec,
    bias: f64,
) -> Result<Vec<CheckResult>> {
    require_reps(reps)?;
    let index_pairs = |grid: GridSpec| -> Result<Vec<(usize, usize)>> {
        pairs
            .iter()
            .map(|&(s, t)| Ok((grid_index(grid, s)?, grid_index(grid, t)?)))
            .collect()
    };
    let a = path_second_moments(spectral, spectral_grid, seed, reps, &index_pairs(spectral_grid)?)?;
    let oracle = PathSource::Cholesky { kernel };
    let b = path_second_moments(oracle, oracle_grid, seed, reps, &index_pairs(oracle_grid)?)?;
    Ok(pairs
        .iter()
        .zip(a.iter().zip(&b))
        .map(|(&(s, t), (ca, cb))| {
            let se = product_moment_se(kernel.eval(s, s), kernel.eval(t, t), kernel.eval(s, t), reps);
            CheckResult::within(
                format!("oracle_equivalence({s},{t})"),
                ca - cb,
                0.0,
                2.0 * SE_BAND * se + bias,
                format!(
                    "{spectral} M={}; cholesky M={}; spectral={ca:.6e} cholesky={cb:.6e}; 4*SE each={:.3e}; bias={bias:.3e}",
                    spectral_grid.len(),
                    oracle_grid.len(),
                    SE_BAND * se
                ),
            )
        })
        .collect())
}

fn truncated_norm_sq(f: &FourierSeries, trunc: usize) -> f64 {
    f.with_max_freq(f.max_freq().min(trunc)).l2_norm_sq()
}

/// Kolmogorov-Smirnov distance of the standardized pairings from `N(0, 1)`.
pub fn ks_normality_check(
    name: &str,
    f: &FourierSeries,
    trunc: usize,
    reps: usize,
    seed: SeedSpec,
) -> Result<CheckResult> {
    require_reps(reps)?;
    f.hminus1_norm_sq()?;
    let norm = truncated_norm_sq(f, trunc).sqrt();
    if norm == 0.0 {
        return Err(Error::ZeroNorm);
    }
    let z: Vec<f64> = map_replicates(trunc, seed, reps, |x| pair(f, x).map(|v| v / norm))?
        .into_iter()
        .collect::<Result<_>>()?;
    let d = ks_statistic_normal(&z);
    Ok(CheckResult::within(
        format!("ks_normality({name})"),
        d,
        0.0,
        ks_critical_001(reps),
        format!("N={trunc} R={reps}; ||f||={norm:.6e}; critical 1.63/sqrt(R) at alpha=0.01"),
    ))
}

/// Sample correlation of the pairings of orthogonal test functions.
///
/// Orthogonality is required up to `1e-8` plus the tail bound
/// `2 C_f C_g / N` for series with `|c_n| <= C / |n|`. The expected value is
/// the exact correlation of the truncated pairings.
pub fn independence_check(
    name: &str,
    f: &FourierSeries,
    g: &FourierSeries,
    trunc: usize,
    reps: usize,
    seed: SeedSpec,
) -> Result<CheckResult> {
    require_reps(reps)?;
    let ft = f.with_max_freq(f.max_freq().min(trunc));
    let gt = g.with_max_freq(g.max_freq().min(trunc));
    let inner = ft.inner_product(&gt).re;
    let tol = 1e-8 + 2.0 * f.decay_constant() * g.decay_constant() / trunc as f64;
    if inner.abs() > tol {
        return Err(Error::NotOrthogonal { inner, tol });
    }
    let (nf, ng) = (ft.l2_norm_sq(), gt.l2_norm_sq());
    if nf == 0.0 || ng == 0.0 {
        return Err(Error::ZeroNorm);
    }
    let values: Vec<(f64, f64)> = map_replicates(trunc, seed, reps, |x| {
        (pair(f, x).unwrap_or(f64::NAN), pair(g, x).unwrap_or(f64::NAN))
    })?;
    let (a, b): (Vec<f64>, Vec<f64>) = values.into_iter().unzip();
    let corr = zero_mean_correlation(&a, &b);
    Ok(CheckResult::within(
        format!("independence({name})"),
        corr,
        inner / (nf * ng).sqrt(),
        SE_BAND / (reps as f64).sqrt(),
        format!("N={trunc} R={reps}; truncated (f,g)={inner:.3e} (orthogonality tol {tol:.3e})"),
    ))
}

/// `|C_hat(f) - exp(-||f||^2 / 2)|` with the norm of the truncated `f`.
pub fn char_functional_check(
    name: &str,
    f: &FourierSeries,
    trunc: usize,
    reps: usize,
    seed: SeedSpec,
) -> Result<CheckResult> {
    require_reps(reps)?;
    let c_hat = empirical_char_functional(f, trunc, reps, seed)?;
    let exact = (-0.5 * truncated_norm_sq(f, trunc)).exp();
    Ok(CheckResult::within(
        format!("char_functional({name})"),
        (c_hat - exact).norm(),
        0.0,
        SE_BAND / (reps as f64).sqrt(),
        format!(
            "N={trunc} R={reps}; C_hat={:.6e}{:+.6e}i; exp(-||f||^2/2)={exact:.6e}",
            c_hat.re, c_hat.im
        ),
    ))
}

/// `|C_hat(f1 + f2) - C_hat(f1) C_hat(f2)|` for disjointly supported test
/// functions; the allowance adds the exact truncated deviation from the
/// product rule.
pub fn char_functional_product_check(
    name: &str,
    f1: &FourierSeries,
    f2: &FourierSeries,
    trunc: usize,
    reps: usize,
    seed: SeedSpec,
) -> Result<CheckResult> {
    require_reps(reps)?;
    let sum = f1 + f2;
    let lhs = empirical_char_functional(&sum, trunc, reps, seed)?;
    let rhs = empirical_char_functional(f1, trunc, reps, seed)? * empirical_char_functional(f2, trunc, reps, seed)?;
    let c = |f: &FourierSeries| (-0.5 * truncated_norm_sq(f, trunc)).exp();
    let deviation = (c(&sum) - c(f1) * c(f2)).abs();
    let band = 12.0 / (reps as f64).sqrt();
    Ok(CheckResult::within(
        format!("char_functional_product({name})"),
        (lhs - rhs).norm(),
        0.0,
        band + deviation,
        format!("N={trunc} R={reps}; band 12/sqrt(R)={band:.3e}; truncated product-rule deviation={deviation:.3e}"),
    ))
}

/// Smallest eigenvalue ratio of the empirical matrix
/// `[C_hat(xi_j - xi_k)]_{jk}`, which is positive semidefinite.
pub fn char_functional_psd_check(
    funcs: &[FourierSeries],
    trunc: usize,
    reps: usize,
    seed: SeedSpec,
) -> Result<CheckResult> {
    require_reps(reps)?;
    let n = funcs.len();
    let values: Vec<Vec<f64>> = map_replicates(trunc, seed, reps, |x| {
        funcs.iter().map(|f| pair(f, x).unwrap_or(f64::NAN)).collect()
    })?;
    let mut m = DMatrix::<Complex<f64>>::zeros(n, n);
    for row in &values {
        for j in 0..n {
            for k in 0..n {
                m[(j, k)] += Complex64::from_polar(1.0, row[j] - row[k]);
            }
        }
    }
    m /= Complex::new(reps as f64, 0.0);
    let mut eig: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    let ratio = eig[0] / eig[n - 1];
    Ok(CheckResult::at_least(
        format!("char_functional_psd(n={n})"),
        ratio,
        -EXACT_TOL,
        format!("R={reps}; lambda_min={:.3e}; lambda_max={:.3e}", eig[0], eig[n - 1]),
    ))
}

/// `sum_{n=1}^{n_max} 1/n^2` against `pi^2 / 6`.
pub fn hs_sum_check(n_max: usize) -> Result<CheckResult> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    let s = hilbert_schmidt_sum(n_max);
    Ok(CheckResult::within(
        format!("hilbert_schmidt_sum({n_max})"),
        s,
        PI * PI / 6.0,
        1.0 / n_max as f64 + EXACT_TOL,
        "one-sided; tail sum_{n>N} 1/n^2 < 1/N",
    ))
}

/// Two-sided variant, `sum_{0<|n|<=n_max} 1/n^2` against `pi^2 / 3`.
pub fn hs_two_sided_check(n_max: usize) -> Result<CheckResult> {
    let one = hs_sum_check(n_max)?;
    Ok(CheckResult::within(
        format!("hilbert_schmidt_two_sided({n_max})"),
        2.0 * one.statistic,
        PI * PI / 3.0,
        2.0 / n_max as f64 + EXACT_TOL,
        "two-sided; twice the one-sided sum",
    ))
}

/// Standard error of the mean of `||x||^2_{H-1}` over `reps` samples:
/// the variance per sample is `4 sum_{n<=N} 1/n^4`.
pub fn hminus1_norm_se(trunc: usize, reps: usize) -> f64 {
    let quartic: f64 = (1..=trunc).rev().map(|n| (n as f64).powi(-4)).sum();
    (4.0 * quartic / reps as f64).sqrt()
}

/// Mean of `||x||^2_{H-1}` against `2 sum_{n<=N} 1/n^2`.
pub fn noise_hminus1_check(trunc: usize, reps: usize, seed: SeedSpec, tolerance: f64) -> Result<CheckResult> {
    require_reps(reps)?;
    let values = map_replicates(trunc, seed, reps, crate::noise::noise_hminus1_norm_sq)?;
    let mean = values.iter().sum::<f64>() / reps as f64;
    Ok(CheckResult::within(
        format!("noise_hminus1_mean(N={trunc})"),
        mean,
        2.0 * hilbert_schmidt_sum(trunc),
        tolerance,
        format!("R={reps}; SE={:.3e}", hminus1_norm_se(trunc, reps)),
    ))
}

/// Eigenvalues of the kernel Gram on a point set, returned with the count
/// of near-zero eigenvalues.
pub fn spectrum_with_count(kernel: Kernel, points: &[f64], tol_ratio: f64) -> Result<(Vec<f64>, usize)> {
    let eig = symmetric_eigenvalues(gram_matrix(&kernel, points)?);
    let count = near_zero_count(&eig, tol_ratio);
    Ok((eig, count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::pulse_test_function;
    use approx::assert_abs_diff_eq;

    const R: usize = 20_000;

    #[test]
    fn parseval_bridge_examples() {
        let res = check_parseval_bridge(4096, &[(0.5, 0.5), (0.25, 0.75), (0.0, 0.3)]).unwrap();
        assert!(res.iter().all(|c| c.pass), "{res:#?}");
        assert_abs_diff_eq!(res[0].statistic, 0.25, epsilon = 1e-4);
        assert_eq!(res[1].expected, 0.0625);
        assert_eq!(res[2].statistic, 0.0);
        assert_eq!(res[2].expected, 0.0);
        assert!(check_parseval_bridge(8, &[(0.1, 0.2)]).is_err());
    }

    #[test]
    fn eta_gram_examples() {
        let res = check_eta_gram(4095, &[(0.5, 0.5), (0.2, 0.9), (0.0, 0.7), (0.1, 0.4)]).unwrap();
        assert!(res.iter().all(|c| c.pass), "{res:#?}");
        assert_eq!(res[0].expected, 0.5);
        assert_abs_diff_eq!(res[1].expected, 0.0, epsilon = 1e-15);
        assert_eq!(res[2].statistic, 0.0);
        assert_abs_diff_eq!(res[3].expected, 0.1, epsilon = 1e-15);
    }

    #[test]
    fn exact_identities() {
        for (t, s) in [(0.1, 0.37), (0.3, 0.3), (0.0, 0.5), (0.8, 0.05)] {
            let c = check_levy_identity(t, s, 1001).unwrap();
            assert!(c.pass, "{c:?}");
        }
        assert_eq!(check_levy_identity(0.3, 0.3, 11).unwrap().statistic, 0.0);
        assert_eq!(check_levy_identity(0.0, 0.5, 11).unwrap().statistic, 0.0);
        for (s, n) in [(0.75, 1001), (0.5 + 1e-9, 1001), (0.9, 11)] {
            let c = check_mirror(s, n).unwrap();
            assert!(c.pass, "{c:?}");
        }
        assert!(check_mirror(0.5, 11).is_err());
        assert!(check_mirror(0.3, 11).is_err());
    }

    #[test]
    fn degeneracy_contrast() {
        let c = check_degenerate_spectrum(&[0.1, 0.6, 0.3, 0.8], NEAR_ZERO_RATIO).unwrap();
        assert!(c.pass && c.statistic >= 1.0, "{c:?}");
        let pts = uniform_antipodal_points(8);
        let c = check_degenerate_spectrum(&pts, NEAR_ZERO_RATIO).unwrap();
        assert!(c.pass && c.statistic >= 7.0, "{c:?}");
        let interior: Vec<f64> = pts[1..].to_vec();
        let c = check_definite(Kernel::Bridge, &interior).unwrap();
        assert!(c.pass, "{c:?}");
        let (_, bridge_zeros) = spectrum_with_count(Kernel::Bridge, &interior, NEAR_ZERO_RATIO).unwrap();
        assert_eq!(bridge_zeros, 0);
        assert!(!check_definite(Kernel::levy(), &pts).unwrap().pass);
        assert!(check_degenerate_spectrum(&[0.1, 0.6, 0.3, 0.7], NEAR_ZERO_RATIO).is_err());
        assert!(check_antipodal_quadratic_form(0.1, 0.3).unwrap().pass);
    }

    #[test]
    fn mc_covariance_examples() {
        let seed = SeedSpec::new(42);
        let res = mc_covariance_check(ProcessKind::Bridge, 1024, &[(0.25, 0.5)], R, seed).unwrap();
        assert_eq!(res[0].expected, 0.125);
        assert!(res[0].pass, "{res:?}");
        let res = mc_covariance_check(ProcessKind::Levy, 1024, &[(0.2, 0.4), (0.2, 0.9)], R, seed).unwrap();
        assert_abs_diff_eq!(res[0].expected, 0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(res[1].expected, 0.0, epsilon = 1e-15);
        assert!(res.iter().all(|c| c.pass), "{res:?}");
        assert!(matches!(
            mc_covariance_check(ProcessKind::Bridge, 64, &[(0.1, 0.2)], 100, seed),
            Err(Error::TooFewReplicates { .. })
        ));
    }

    #[test]
    fn ks_examples() {
        let seed = SeedSpec::new(42);
        let f = bridge_test_function(0.5, 1024).unwrap();
        assert!(ks_normality_check("bridge", &f, 1024, R, seed).unwrap().pass);
        let g = FourierSeries::cosine(2, 1.0);
        assert!(ks_normality_check("cos2", &g, 1024, R, seed).unwrap().pass);
        assert!(matches!(
            ks_normality_check("cos2", &g, 1024, 100, seed),
            Err(Error::TooFewReplicates { .. })
        ));
        assert!(matches!(
            ks_normality_check("zero", &FourierSeries::zeros(4), 1024, R, seed),
            Err(Error::ZeroNorm)
        ));
    }

    #[test]
    fn independence_examples() {
        let seed = SeedSpec::new(42);
        let n = 1024;
        let f = pulse_test_function(0.0, 0.1, 1.0, n).unwrap();
        let g = pulse_test_function(0.5, 0.1, 1.0, n).unwrap();
        assert!(independence_check("pulses", &f, &g, n, R, seed).unwrap().pass);
        let c1 = FourierSeries::cosine(1, 1.0);
        let c2 = FourierSeries::cosine(2, 1.0);
        let c = independence_check("cos", &c1, &c2, n, R, seed).unwrap();
        assert!(c.pass);
        assert_eq!(c.expected, 0.0);
        assert!(matches!(
            independence_check("same", &f, &f, n, R, seed),
            Err(Error::NotOrthogonal { .. })
        ));
    }

    #[test]
    fn char_functional_examples() {
        let seed = SeedSpec::new(42);
        let zero = char_functional_check("zero", &FourierSeries::zeros(4), 64, R, seed).unwrap();
        assert_eq!(zero.statistic, 0.0);
        let c = char_functional_check("cos1", &FourierSeries::cosine(1, 1.0), 64, R, seed).unwrap();
        assert!(c.pass, "{c:?}");
        let n = 1024;
        let f1 = pulse_test_function(0.0, 0.1, 1.0, n).unwrap();
        let f2 = pulse_test_function(0.5, 0.1, 1.0, n).unwrap();
        assert!(
            char_functional_product_check("pulses", &f1, &f2, n, R, seed)
                .unwrap()
                .pass
        );
        let funcs = [
            f1,
            f2,
            FourierSeries::cosine(1, 0.5),
            bridge_test_function(0.3, n).unwrap(),
        ];
        assert!(char_functional_psd_check(&funcs, n, 2000, seed).unwrap().pass);
    }

    #[test]
    fn hs_examples() {
        let c = hs_sum_check(1_000_000).unwrap();
        assert!(c.pass);
        assert_abs_diff_eq!(c.statistic, 1.644933, epsilon = 1e-6);
        assert_eq!(hs_sum_check(1).unwrap().statistic, 1.0);
        assert!(hs_sum_check(1).unwrap().pass);
        let two = hs_two_sided_check(1000).unwrap();
        assert_eq!(two.statistic, 2.0 * hs_sum_check(1000).unwrap().statistic);
    }
}
