use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

/// Dense factorizations and eigen-decompositions are limited to this many
/// points.
pub const MAX_DENSE_POINTS: usize = 4096;

/// Shorter-arc distance on `R/Z`.
pub fn circular_distance(s: f64, t: f64) -> f64 {
    let d = (s - t).abs().rem_euclid(1.0);
    d.min(1.0 - d)
}

/// Closed-form covariance kernels on the circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kernel {
    /// Levy's circular Brownian motion,
    /// `(r(o, s) + r(o, t) - r(s, t)) / 2`.
    Levy { origin: f64 },
    /// Brownian bridge, `min(s, t) - s t`.
    Bridge,
    /// Euclidean Brownian motion, `min(s, t)`.
    Min,
}

impl Kernel {
    pub fn levy() -> Self {
        Kernel::Levy { origin: 0.0 }
    }

    pub fn eval(&self, s: f64, t: f64) -> f64 {
        match *self {
            Kernel::Levy { origin } => {
                0.5 * (circular_distance(origin, t) + circular_distance(origin, s) - circular_distance(s, t))
            }
            Kernel::Bridge => s.min(t) - s * t,
            Kernel::Min => s.min(t),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Kernel::Levy { .. } => "levy",
            Kernel::Bridge => "bridge",
            Kernel::Min => "min",
        }
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kernel::Levy { origin } if *origin != 0.0 => write!(f, "levy(origin={origin})"),
            k => f.write_str(k.name()),
        }
    }
}

impl FromStr for Kernel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "levy" => Ok(Kernel::levy()),
            "bridge" => Ok(Kernel::Bridge),
            "min" => Ok(Kernel::Min),
            other => Err(Error::InvalidArgument(format!(
                "unknown kernel '{other}' (expected levy, bridge or min)"
            ))),
        }
    }
}

pub fn kernel_eval(kernel: &Kernel, s: f64, t: f64) -> f64 {
    kernel.eval(s, t)
}

/// `G_ij = K(p_i, p_j)` for distinct points.
pub fn gram_matrix(kernel: &Kernel, points: &[f64]) -> Result<DMatrix<f64>> {
    let mut sorted = points.to_vec();
    sorted.sort_by(f64::total_cmp);
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicatePoint(w[0]));
    }
    let m = points.len();
    let mut g = DMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..=i {
            let v = kernel.eval(points[i], points[j]);
            g[(i, j)] = v;
            g[(j, i)] = v;
        }
    }
    Ok(g)
}

/// Eigenvalues of a symmetric matrix in ascending order.
pub fn symmetric_eigenvalues(g: DMatrix<f64>) -> Vec<f64> {
    let mut eig: Vec<f64> = SymmetricEigen::new(g).eigenvalues.iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Ascending eigenvalues of the kernel's Gram matrix on `points`.
pub fn kernel_spectrum(kernel: &Kernel, points: &[f64]) -> Result<Vec<f64>> {
    if points.len() > MAX_DENSE_POINTS {
        return Err(Error::InvalidArgument(format!(
            "{} points exceed the dense limit of {MAX_DENSE_POINTS}",
            points.len()
        )));
    }
    Ok(symmetric_eigenvalues(gram_matrix(kernel, points)?))
}

/// Number of eigenvalues with magnitude below `tol_ratio * lambda_max`.
pub fn near_zero_count(eigenvalues: &[f64], tol_ratio: f64) -> usize {
    let max = eigenvalues.iter().copied().fold(0.0, f64::max);
    eigenvalues.iter().filter(|&&l| l.abs() < tol_ratio * max).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn circular_distance_examples() {
        assert_eq!(circular_distance(0.2, 0.2), 0.0);
        assert_abs_diff_eq!(circular_distance(0.9, 0.1), 0.2, epsilon = 1e-15);
        assert_eq!(circular_distance(0.0, 0.5), 0.5);
        assert_eq!(circular_distance(0.3, 0.8), circular_distance(0.8, 0.3));
    }

    #[test]
    fn kernel_examples() {
        let levy = Kernel::levy();
        assert_abs_diff_eq!(levy.eval(0.3, 0.3), 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(levy.eval(0.2, 0.9), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(Kernel::Bridge.eval(0.25, 0.75), 0.0625, epsilon = 1e-15);
        assert_eq!(Kernel::Min.eval(0.25, 0.5), 0.25);
    }

    #[test]
    fn levy_is_min_on_the_first_half_circle() {
        let levy = Kernel::levy();
        for i in 0..=50 {
            for j in 0..=50 {
                let (s, t) = (i as f64 / 100.0, j as f64 / 100.0);
                assert_abs_diff_eq!(levy.eval(s, t), s.min(t), epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn gram_examples() {
        let g = gram_matrix(&Kernel::Bridge, &[0.0]).unwrap();
        assert_eq!(g[(0, 0)], 0.0);

        let g = gram_matrix(&Kernel::Min, &[0.25, 0.5]).unwrap();
        assert_eq!(g, DMatrix::from_row_slice(2, 2, &[0.25, 0.25, 0.25, 0.5]));

        assert!(matches!(
            gram_matrix(&Kernel::Min, &[0.1, 0.3, 0.1]),
            Err(Error::DuplicatePoint(_))
        ));
    }

    #[test]
    fn antipodal_quadratic_form_vanishes() {
        // Var(B(t) + B(t') - B(s) - B(s')) expanded directly from the kernel.
        let levy = Kernel::levy();
        for &(t, s) in &[(0.1, 0.3), (0.05, 0.45), (0.2, 0.2 + 1e-3)] {
            let pts = [t, t + 0.5, s, s + 0.5];
            let g = gram_matrix(&levy, &pts).unwrap();
            let v = nalgebra::DVector::from_row_slice(&[1.0, 1.0, -1.0, -1.0]);
            let q = (v.transpose() * &g * &v)[(0, 0)];
            assert_abs_diff_eq!(q, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn spectrum_of_single_point() {
        let eig = kernel_spectrum(&Kernel::levy(), &[0.3]).unwrap();
        assert_abs_diff_eq!(eig[0], 0.3, epsilon = 1e-15);
    }

    #[test]
    fn parses_kernel_names() {
        assert_eq!("bridge".parse::<Kernel>().unwrap(), Kernel::Bridge);
        assert_eq!("levy".parse::<Kernel>().unwrap(), Kernel::levy());
        assert!("brownian".parse::<Kernel>().is_err());
    }
}
