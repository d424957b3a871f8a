//! Truncated two-sided Fourier series on the circle `S = R/Z`.
//!
//! A [`FourierSeries`] stores the coefficients `c_n` of
//! `f(t) = sum_{|n| <= N} c_n e^{i 2 pi n t}` for every `n` in `-N..=N`,
//! including the mean coefficient `c_0`. Real-valued series keep the full
//! two-sided layout and are checked for Hermitian symmetry on construction.
//!
//! The constructors for indicator-type test functions produce their
//! coefficients analytically, never by quadrature.

use std::f64::consts::{PI, SQRT_2, TAU};
use std::io::Write;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

const HERMITIAN_TOL: f64 = 1e-12;

/// `e^{i 2 pi x}` with `x` reduced to `[-1/2, 1/2]` before scaling.
#[inline]
pub(crate) fn unit(x: f64) -> Complex64 {
    let r = x - x.round();
    Complex64::from_polar(1.0, TAU * r)
}

fn check_unit_point(name: &'static str, t: f64) -> Result<()> {
    if (0.0..1.0).contains(&t) {
        Ok(())
    } else {
        Err(Error::OutOfDomain {
            name,
            value: t,
            domain: "[0, 1)",
        })
    }
}

fn check_truncation(trunc: usize) -> Result<()> {
    if trunc == 0 {
        return Err(Error::InvalidArgument("truncation must be at least 1".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct FourierSeries {
    max_freq: usize,
    /// `coeffs[n + max_freq] = c_n`.
    coeffs: Vec<Complex64>,
    real_valued: bool,
}

impl FourierSeries {
    /// Builds a series from the full two-sided coefficient vector, ordered
    /// from `c_{-N}` to `c_N`.
    pub fn new(max_freq: usize, coeffs: Vec<Complex64>, real_valued: bool) -> Result<Self> {
        if coeffs.len() != 2 * max_freq + 1 {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients for max_freq {}, got {}",
                2 * max_freq + 1,
                max_freq,
                coeffs.len()
            )));
        }
        let series = FourierSeries {
            max_freq,
            coeffs,
            real_valued,
        };
        series.validate()?;
        Ok(series)
    }

    /// Builds a real-valued series from `c_0` and `c_1..=c_N`; the negative
    /// frequencies are filled in as complex conjugates.
    pub fn from_positive(c0: f64, positive: &[Complex64]) -> Result<Self> {
        let n = positive.len();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * n + 1];
        coeffs[n] = Complex64::new(c0, 0.0);
        for (k, &c) in positive.iter().enumerate() {
            coeffs[n + k + 1] = c;
            coeffs[n - k - 1] = c.conj();
        }
        Self::new(n, coeffs, true)
    }

    pub fn zeros(max_freq: usize) -> Self {
        FourierSeries {
            max_freq,
            coeffs: vec![Complex64::new(0.0, 0.0); 2 * max_freq + 1],
            real_valued: true,
        }
    }

    /// The basis function `psi_n(t) = e^{i 2 pi n t}`.
    pub fn basis(n: i64) -> Self {
        let max_freq = n.unsigned_abs().max(1) as usize;
        let mut s = Self::zeros(max_freq);
        s.coeffs[(n + max_freq as i64) as usize] = Complex64::new(1.0, 0.0);
        s.real_valued = n == 0;
        s
    }

    /// `amp * (psi_n + psi_{-n})`, the real cosine `2 amp cos(2 pi n t)`.
    pub fn cosine(n: usize, amp: f64) -> Self {
        let max_freq = n.max(1);
        let mut s = Self::zeros(max_freq);
        s.coeffs[max_freq + n] += amp;
        if n > 0 {
            s.coeffs[max_freq - n] += amp;
        }
        s
    }

    /// Constant function `value`.
    pub fn constant(value: f64, max_freq: usize) -> Self {
        let mut s = Self::zeros(max_freq.max(1));
        let mid = s.max_freq;
        s.coeffs[mid] = Complex64::new(value, 0.0);
        s
    }

    fn validate(&self) -> Result<()> {
        let n = self.max_freq as i64;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::NonFinite { freq: i as i64 - n });
            }
        }
        if self.real_valued {
            if self.coeffs[self.max_freq].im.abs() > HERMITIAN_TOL {
                return Err(Error::NotHermitian { freq: 0 });
            }
            for k in 1..=n {
                if (self.coeff(k) - self.coeff(-k).conj()).norm() > HERMITIAN_TOL {
                    return Err(Error::NotHermitian { freq: k });
                }
            }
        }
        Ok(())
    }

    pub fn max_freq(&self) -> usize {
        self.max_freq
    }

    pub fn is_real_valued(&self) -> bool {
        self.real_valued
    }

    /// Coefficient at frequency `n`; zero beyond the truncation.
    #[inline]
    pub fn coeff(&self, n: i64) -> Complex64 {
        if n.unsigned_abs() as usize > self.max_freq {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs[(n + self.max_freq as i64) as usize]
    }

    /// Two-sided coefficients from `c_{-N}` to `c_N`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `c_1..=c_N`.
    pub fn positive(&self) -> &[Complex64] {
        &self.coeffs[self.max_freq + 1..]
    }

    pub fn mean(&self) -> Complex64 {
        self.coeffs[self.max_freq]
    }

    pub fn is_zero_mean(&self) -> bool {
        self.mean() == Complex64::new(0.0, 0.0)
    }

    pub(crate) fn require_zero_mean(&self) -> Result<()> {
        if self.is_zero_mean() {
            Ok(())
        } else {
            Err(Error::NotZeroMean { c0: self.mean().norm() })
        }
    }

    /// Returns the series restricted to `|n| <= max_freq`, zero padded if
    /// `max_freq` exceeds the current truncation.
    pub fn with_max_freq(&self, max_freq: usize) -> Self {
        let coeffs = (-(max_freq as i64)..=max_freq as i64).map(|n| self.coeff(n)).collect();
        FourierSeries {
            max_freq,
            coeffs,
            real_valued: self.real_valued,
        }
    }

    /// L2 inner product `(f, g) = sum_n c_n(f) conj(c_n(g))`. Series of
    /// different truncations are aligned by zero padding the shorter one.
    pub fn inner_product(&self, other: &FourierSeries) -> Complex64 {
        let common = self.max_freq.min(other.max_freq) as i64;
        if self.real_valued && other.real_valued {
            let mut acc = 0.0;
            for n in 1..=common {
                acc += (self.coeff(n) * other.coeff(n).conj()).re;
            }
            let zero = (self.mean() * other.mean().conj()).re;
            Complex64::new(zero + 2.0 * acc, 0.0)
        } else {
            (-common..=common).map(|n| self.coeff(n) * other.coeff(n).conj()).sum()
        }
    }

    pub fn l2_norm_sq(&self) -> f64 {
        self.inner_product(self).re
    }

    /// Squared norm of the Sobolev space of order one with zero mean,
    /// `sum_n n^2 |c_n|^2`.
    pub fn h1_norm_sq(&self) -> Result<f64> {
        self.require_zero_mean()?;
        Ok(self.weighted_norm_sq(|n| n * n))
    }

    /// Dual norm `sum_{n != 0} |c_n|^2 / n^2`.
    pub fn hminus1_norm_sq(&self) -> Result<f64> {
        self.require_zero_mean()?;
        Ok(self.weighted_norm_sq(|n| 1.0 / (n * n)))
    }

    fn weighted_norm_sq(&self, weight: impl Fn(f64) -> f64) -> f64 {
        let n = self.max_freq as i64;
        // smallest weights first when weight decays
        let mut acc = 0.0;
        for k in (1..=n).rev() {
            let w = weight(k as f64);
            acc += w * (self.coeff(k).norm_sqr() + self.coeff(-k).norm_sqr());
        }
        acc
    }

    /// Evaluates the truncated series at `t`.
    pub fn evaluate(&self, t: f64) -> Complex64 {
        let n = self.max_freq as i64;
        if self.real_valued {
            let mut acc = 0.0;
            for k in 1..=n {
                acc += (self.coeff(k) * unit(k as f64 * t)).re;
            }
            Complex64::new(self.mean().re + 2.0 * acc, 0.0)
        } else {
            (-n..=n).map(|k| self.coeff(k) * unit(k as f64 * t)).sum()
        }
    }

    /// Drops the mean coefficient.
    pub fn project_zero_mean(&self) -> Self {
        let mut out = self.clone();
        out.coeffs[out.max_freq] = Complex64::new(0.0, 0.0);
        out
    }

    /// `max_n |n| |c_n|`. For indicator-type series `|c_n| <= C / |n|` holds
    /// at every frequency, which bounds the discarded tail.
    pub fn decay_constant(&self) -> f64 {
        let n = self.max_freq as i64;
        (1..=n)
            .map(|k| k as f64 * self.coeff(k).norm().max(self.coeff(-k).norm()))
            .fold(0.0, f64::max)
    }

    /// Writes `n,re,im` rows, one per frequency from `-N` to `N`.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["n", "re", "im"])?;
        let n = self.max_freq as i64;
        for k in -n..=n {
            let c = self.coeff(k);
            w.write_record(&[k.to_string(), format!("{:e}", c.re), format!("{:e}", c.im)])?;
        }
        w.flush()?;
        Ok(())
    }
}

impl Add for &FourierSeries {
    type Output = FourierSeries;

    fn add(self, rhs: &FourierSeries) -> FourierSeries {
        let max_freq = self.max_freq.max(rhs.max_freq);
        let n = max_freq as i64;
        FourierSeries {
            max_freq,
            coeffs: (-n..=n).map(|k| self.coeff(k) + rhs.coeff(k)).collect(),
            real_valued: self.real_valued && rhs.real_valued,
        }
    }
}

impl Sub for &FourierSeries {
    type Output = FourierSeries;

    fn sub(self, rhs: &FourierSeries) -> FourierSeries {
        self + &(rhs * -1.0)
    }
}

impl Mul<f64> for &FourierSeries {
    type Output = FourierSeries;

    fn mul(self, a: f64) -> FourierSeries {
        FourierSeries {
            max_freq: self.max_freq,
            coeffs: self.coeffs.iter().map(|c| c * a).collect(),
            real_valued: self.real_valued,
        }
    }
}

/// Coefficient of `1_[a, b)` at frequency `n != 0`:
/// `(e^{-i 2 pi n a} - e^{-i 2 pi n b}) / (i 2 pi n)`.
fn indicator_coeff(a: f64, b: f64, n: i64) -> Complex64 {
    let nf = n as f64;
    (unit(-nf * a) - unit(-nf * b)) / Complex64::new(0.0, TAU * nf)
}

/// Indicator of `[a, b)` with `0 <= a <= b <= 1`, truncated at `trunc`.
pub fn indicator_function(a: f64, b: f64, trunc: usize) -> Result<FourierSeries> {
    check_truncation(trunc)?;
    if !(0.0 <= a && a <= b && b <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "indicator interval [{a}, {b}) must satisfy 0 <= a <= b <= 1"
        )));
    }
    let positive: Vec<_> = (1..=trunc as i64).map(|n| indicator_coeff(a, b, n)).collect();
    FourierSeries::from_positive(b - a, &positive)
}

/// `1_[0, t) - t`, the zero-mean test function whose pairing with white
/// noise is the Brownian bridge at `t`.
pub fn bridge_test_function(t: f64, trunc: usize) -> Result<FourierSeries> {
    check_unit_point("t", t)?;
    check_truncation(trunc)?;
    let positive: Vec<_> = (1..=trunc as i64).map(|n| indicator_coeff(0.0, t, n)).collect();
    FourierSeries::from_positive(0.0, &positive)
}

/// `eta_t(u) = (1 / (sqrt 2 pi)) sum_{k odd} (e^{i 2 pi k t} - 1) / |k| e^{i 2 pi k u}`.
///
/// Pairing `eta_t` with white noise gives Levy's circular Brownian motion
/// with origin 0. Even frequencies are exactly zero.
pub fn eta_test_function(t: f64, trunc: usize) -> Result<FourierSeries> {
    check_unit_point("t", t)?;
    check_truncation(trunc)?;
    let positive: Vec<_> = (1..=trunc as i64).map(|k| eta_coeff(t, k)).collect();
    FourierSeries::from_positive(0.0, &positive)
}

/// `h_k(t)` for `k > 0`.
#[inline]
pub(crate) fn eta_coeff(t: f64, k: i64) -> Complex64 {
    if k % 2 == 0 {
        return Complex64::new(0.0, 0.0);
    }
    (unit(k as f64 * t) - 1.0) * eta_weight(k)
}

/// `1 / (sqrt 2 pi |k|)`.
#[inline]
pub(crate) fn eta_weight(k: i64) -> f64 {
    1.0 / (SQRT_2 * PI * k.unsigned_abs() as f64)
}

/// `amp * (1_[a, a+w) - 1_[a+w, a+2w))`: a two-lobed pulse with zero
/// integral supported on `[a, a + 2w)`.
pub fn pulse_test_function(a: f64, width: f64, amp: f64, trunc: usize) -> Result<FourierSeries> {
    check_truncation(trunc)?;
    if width.is_nan() || width <= 0.0 {
        return Err(Error::OutOfDomain {
            name: "width",
            value: width,
            domain: "(0, 1/2]",
        });
    }
    check_unit_point("a", a)?;
    let mid = a + width;
    let end = a + 2.0 * width;
    if end > 1.0 {
        return Err(Error::Wraparound { start: a, end });
    }
    let positive: Vec<_> = (1..=trunc as i64)
        .map(|n| (indicator_coeff(a, mid, n) - indicator_coeff(mid, end, n)) * amp)
        .collect();
    FourierSeries::from_positive(0.0, &positive)
}

/// Partial sum `sum_{n=1}^{n_max} 1/n^2`, the squared Hilbert-Schmidt norm of
/// the embedding of the first-order Sobolev space into L2 restricted to
/// positive frequencies.
pub fn hilbert_schmidt_sum(n_max: usize) -> f64 {
    (1..=n_max).rev().map(|n| 1.0 / (n as f64 * n as f64)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn basis_is_orthonormal() {
        let p1 = FourierSeries::basis(1);
        let p2 = FourierSeries::basis(2);
        assert_eq!(p1.inner_product(&p1), c(1.0, 0.0));
        assert_eq!(p1.inner_product(&p2), c(0.0, 0.0));
        assert_eq!(FourierSeries::basis(3).l2_norm_sq(), 1.0);
        assert_eq!(FourierSeries::zeros(5).l2_norm_sq(), 0.0);
    }

    #[test]
    fn bridge_self_inner_product_matches_odd_sum() {
        // Independent route: only odd n contribute 1 / (pi^2 n^2) each.
        let n = 4096;
        let oracle: f64 = (1..=n)
            .rev()
            .filter(|k| k % 2 == 1)
            .map(|k| 2.0 / (PI * PI * (k * k) as f64))
            .sum();
        assert_abs_diff_eq!(oracle, 0.25, epsilon = 1e-3);
        let f = bridge_test_function(0.5, n).unwrap();
        let ip = f.inner_product(&f);
        assert_eq!(ip.im, 0.0);
        assert_abs_diff_eq!(ip.re, oracle, epsilon = 1e-12);
        assert_abs_diff_eq!(ip.re, 0.25, epsilon = 1e-3);
    }

    #[test]
    fn eta_half_has_norm_one_half() {
        let n = 4095;
        let oracle: f64 = (1..=n)
            .rev()
            .filter(|k| k % 2 == 1)
            .map(|k| 2.0 * 4.0 / (2.0 * PI * PI * (k * k) as f64))
            .sum();
        let f = eta_test_function(0.5, n).unwrap();
        assert_abs_diff_eq!(f.l2_norm_sq(), oracle, epsilon = 1e-12);
        assert_abs_diff_eq!(f.l2_norm_sq(), 0.5, epsilon = 1e-3);
    }

    #[test]
    fn h1_norm_examples() {
        assert_eq!(FourierSeries::basis(1).h1_norm_sq().unwrap(), 1.0);
        assert_eq!(FourierSeries::cosine(2, 1.0).h1_norm_sq().unwrap(), 8.0);
        for n in [1i64, 2, 7, -5] {
            let xi = &FourierSeries::basis(n) * (1.0 / n as f64);
            assert_abs_diff_eq!(xi.h1_norm_sq().unwrap(), 1.0, epsilon = 1e-15);
        }
        assert!(matches!(
            FourierSeries::constant(1.0, 3).h1_norm_sq(),
            Err(Error::NotZeroMean { .. })
        ));
    }

    #[test]
    fn hminus1_norm_examples() {
        assert_eq!(FourierSeries::basis(1).hminus1_norm_sq().unwrap(), 1.0);
        assert_eq!(FourierSeries::basis(4).hminus1_norm_sq().unwrap(), 1.0 / 16.0);
        assert!(FourierSeries::constant(2.0, 3).hminus1_norm_sq().is_err());

        let n = 1_000_000usize;
        let mut coeffs = vec![c(0.0, 0.0); 2 * n + 1];
        for k in 1..=n {
            coeffs[n + k] = c(1.0, 0.0);
        }
        let f = FourierSeries::new(n, coeffs, false).unwrap();
        let mut oracle = 0.0;
        for k in (1..=n).rev() {
            oracle += 1.0 / (k as f64).powi(2);
        }
        let v = f.hminus1_norm_sq().unwrap();
        assert_abs_diff_eq!(v, oracle, epsilon = 1e-12);
        assert_abs_diff_eq!(v, 1.6449331, epsilon = 1e-6);
    }

    #[test]
    fn evaluate_examples() {
        let p1 = FourierSeries::basis(1);
        assert_abs_diff_eq!(p1.evaluate(0.0).re, 1.0, epsilon = 1e-15);
        let v = p1.evaluate(0.25);
        assert_abs_diff_eq!(v.re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.im, 1.0, epsilon = 1e-15);

        // 1_[0, 1/2)(1/4) - 1/2 = 1/2 away from the jumps.
        let f = bridge_test_function(0.5, 4096).unwrap();
        let v = f.evaluate(0.25);
        assert_eq!(v.im, 0.0);
        assert_abs_diff_eq!(v.re, 0.5, epsilon = 0.01);
    }

    #[test]
    fn bridge_coefficient_examples() {
        assert_eq!(bridge_test_function(0.0, 16).unwrap().l2_norm_sq(), 0.0);
        let f = bridge_test_function(0.5, 4).unwrap();
        assert_abs_diff_eq!(f.coeff(1).re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(f.coeff(1).im, -1.0 / PI, epsilon = 1e-15);
        assert_abs_diff_eq!(f.coeff(2).norm(), 0.0, epsilon = 1e-15);
        assert_eq!(f.mean(), c(0.0, 0.0));
        assert!(bridge_test_function(1.0, 4).is_err());
        assert!(bridge_test_function(-0.1, 4).is_err());
    }

    #[test]
    fn eta_coefficient_examples() {
        assert_eq!(eta_test_function(0.0, 9).unwrap().l2_norm_sq(), 0.0);
        let f = eta_test_function(0.5, 3).unwrap();
        assert_abs_diff_eq!(f.coeff(1).re, -SQRT_2 / PI, epsilon = 1e-15);
        assert_abs_diff_eq!(f.coeff(1).re, -0.45016, epsilon = 1e-5);
        let g = eta_test_function(0.25, 8).unwrap();
        for k in (-8i64..=8).filter(|k| k % 2 == 0) {
            assert_eq!(g.coeff(k), c(0.0, 0.0));
        }
        assert!(eta_test_function(1.5, 3).is_err());
    }

    /// Midpoint quadrature of a piecewise-constant integrand; exact up to
    /// the cells containing jumps, which align with the cell edges here.
    fn quad(f: impl Fn(f64) -> f64, cells: usize) -> f64 {
        (0..cells).map(|j| f((j as f64 + 0.5) / cells as f64)).sum::<f64>() / cells as f64
    }

    fn pulse_value(a: f64, w: f64, amp: f64, t: f64) -> f64 {
        if t >= a && t < a + w {
            amp
        } else if t >= a + w && t < a + 2.0 * w {
            -amp
        } else {
            0.0
        }
    }

    #[test]
    fn pulse_examples() {
        let p = pulse_test_function(0.0, 0.25, 1.0, 64).unwrap();
        assert_eq!(p.mean(), c(0.0, 0.0));

        let f = pulse_test_function(0.0, 0.1, 1.0, 8192).unwrap();
        let g = pulse_test_function(0.5, 0.1, 1.0, 8192).unwrap();
        let oracle = quad(|t| pulse_value(0.0, 0.1, 1.0, t) * pulse_value(0.5, 0.1, 1.0, t), 1000);
        assert_eq!(oracle, 0.0);
        assert_abs_diff_eq!(f.inner_product(&g).re, oracle, epsilon = 1e-6);

        let h = pulse_test_function(0.0, 0.25, 1.0, 4096).unwrap();
        let oracle = quad(|t| pulse_value(0.0, 0.25, 1.0, t).powi(2), 1000);
        assert_abs_diff_eq!(oracle, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(h.l2_norm_sq(), oracle, epsilon = 1e-3);

        assert!(matches!(
            pulse_test_function(0.7, 0.2, 1.0, 8),
            Err(Error::Wraparound { .. })
        ));
        assert!(pulse_test_function(0.1, 0.0, 1.0, 8).is_err());
    }

    #[test]
    fn project_zero_mean_examples() {
        let one = FourierSeries::constant(1.0, 4);
        assert_eq!(one.project_zero_mean(), FourierSeries::zeros(4));

        let f = bridge_test_function(0.3, 32).unwrap();
        assert_eq!(f.project_zero_mean(), f);

        let t = 0.3;
        let ind = indicator_function(0.0, t, 32).unwrap();
        assert_abs_diff_eq!(ind.mean().re, t, epsilon = 1e-15);
        let projected = ind.project_zero_mean();
        for n in -32i64..=32 {
            assert_eq!(projected.coeff(n), f.coeff(n));
        }
    }

    #[test]
    fn rejects_broken_hermitian_symmetry() {
        let coeffs = vec![c(1.0, 0.0), c(0.0, 0.0), c(0.5, 0.0)];
        assert!(matches!(
            FourierSeries::new(1, coeffs, true),
            Err(Error::NotHermitian { freq: 1 })
        ));
        let coeffs = vec![c(0.0, 0.0), c(f64::NAN, 0.0), c(0.0, 0.0)];
        assert!(matches!(
            FourierSeries::new(1, coeffs, false),
            Err(Error::NonFinite { freq: 0 })
        ));
    }

    #[test]
    fn mixed_truncations_zero_pad() {
        let f = bridge_test_function(0.4, 8).unwrap();
        let g = bridge_test_function(0.4, 64).unwrap();
        assert_eq!(f.inner_product(&g), f.inner_product(&f));
        assert_eq!(f.with_max_freq(64).inner_product(&g), f.inner_product(&g));
    }

    #[test]
    fn hilbert_schmidt_partial_sums() {
        assert_eq!(hilbert_schmidt_sum(1), 1.0);
        assert_abs_diff_eq!(hilbert_schmidt_sum(1_000_000), 1.644933, epsilon = 1e-6);
        assert!(PI * PI / 6.0 - hilbert_schmidt_sum(1000) < 1.0 / 1000.0);
    }

    #[test]
    fn csv_dump_has_one_row_per_frequency() {
        let mut buf = Vec::new();
        FourierSeries::basis(1).write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "n,re,im");
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[3], "1,1e0,0e0");
    }
}
