//! White noise is only defined through pairings with zero-mean test
//! functions. Each pairing is a centred Gaussian with variance `||f||^2`.
//!
//! ```bash
//! cargo run --example white_noise_pairing
//! ```

use circle_noise::error::Result;
use circle_noise::fourier::{pulse_test_function, FourierSeries};
use circle_noise::noise::{empirical_char_functional, map_replicates, pair, sample_noise, SeedSpec};

fn main() -> Result<()> {
    let seed = SeedSpec::new(42);
    let n = 1024;
    let reps = 20_000;

    let x = sample_noise(n, seed, 0)?;
    let f = FourierSeries::cosine(3, 1.0);
    println!("one sample, pairing with 2 cos(6 pi u): {:.6}", pair(&f, &x)?);

    // A constant is not a test function.
    let err = pair(&FourierSeries::constant(1.0, 4), &x).unwrap_err();
    println!("pairing with a constant: {err}");

    let a = pulse_test_function(0.0, 0.1, 1.0, n)?;
    let b = pulse_test_function(0.5, 0.1, 1.0, n)?;
    let pairs: Vec<(f64, f64)> = map_replicates(n, seed, reps, |x| (pair(&a, x).unwrap(), pair(&b, x).unwrap()))?;
    let var_a = pairs.iter().map(|p| p.0 * p.0).sum::<f64>() / reps as f64;
    let cov = pairs.iter().map(|p| p.0 * p.1).sum::<f64>() / reps as f64;
    println!(
        "disjoint pulses: Var={var_a:.4} (||f||^2={:.4}), Cov={cov:.4}",
        a.l2_norm_sq()
    );

    let c = empirical_char_functional(&f, n, reps, seed)?;
    println!(
        "E exp(i x(f)) = {:.4}{:+.4}i, exp(-||f||^2/2) = {:.4}",
        c.re,
        c.im,
        (-0.5 * f.l2_norm_sq()).exp()
    );
    Ok(())
}
