//! Truncated Fourier series on the circle: the bridge and `eta_t` test
//! functions, their Parseval Gram values, and the Sobolev norms.
//!
//! ```bash
//! cargo run --example fourier_basics
//! ```

use circle_noise::error::Result;
use circle_noise::fourier::{bridge_test_function, eta_test_function, hilbert_schmidt_sum, indicator_function};
use circle_noise::processes::Kernel;

fn main() -> Result<()> {
    let n = 4096;
    println!("bridge Gram (f_s, f_t) against min(s,t) - st, N={n}");
    for (s, t) in [(0.25, 0.5), (0.5, 0.5), (0.1, 0.9)] {
        let gram = bridge_test_function(s, n)?
            .inner_product(&bridge_test_function(t, n)?)
            .re;
        println!("  ({s}, {t}): {gram:.6}  exact {:.6}", Kernel::Bridge.eval(s, t));
    }

    println!("eta Gram (eta_s, eta_t) against Levy's kernel, N={}", n - 1);
    for (s, t) in [(0.2, 0.4), (0.5, 0.5), (0.2, 0.9), (0.75, 0.75)] {
        let gram = eta_test_function(s, n - 1)?
            .inner_product(&eta_test_function(t, n - 1)?)
            .re;
        println!(
            "  ({s}, {t}): {gram:.6}  levy {:.6}  min {:.2}",
            Kernel::levy().eval(s, t),
            s.min(t)
        );
    }

    // The indicator has infinite H1 norm; its truncations grow like N.
    for n in [64, 256, 1024] {
        let f = indicator_function(0.25, 0.5, n)?.project_zero_mean();
        println!(
            "indicator [1/4, 1/2), N={n}: L2^2={:.5}  H-1^2={:.3e}  H1^2={:.1}",
            f.l2_norm_sq(),
            f.hminus1_norm_sq()?,
            f.h1_norm_sq()?
        );
    }
    println!("sum_(n<=10^6) 1/n^2 = {:.7}", hilbert_schmidt_sum(1_000_000));
    Ok(())
}
