//! The dense Cholesky sampler is an independent oracle for the spectral
//! sampler: both should reproduce the same kernel.
//!
//! ```bash
//! cargo run --example cholesky_oracle
//! ```

use circle_noise::error::Result;
use circle_noise::noise::SeedSpec;
use circle_noise::processes::{GridSpec, Kernel, PathEnsemble, ProcessKind};

fn main() -> Result<()> {
    let grid = GridSpec::new(128)?;
    let seed = SeedSpec::new(3);
    let reps = 5000;
    let spectral = PathEnsemble::spectral(ProcessKind::Levy, 63, grid, seed, reps)?;
    let oracle = PathEnsemble::cholesky(Kernel::levy(), grid, seed, reps)?;
    println!(
        "{:>6} {:>6} {:>9} {:>9} {:>9}",
        "s", "t", "kernel", "spectral", "cholesky"
    );
    for (i, j) in [(16, 32), (32, 32), (16, 96), (64, 120)] {
        let (s, t) = (grid.point(i), grid.point(j));
        println!(
            "{s:>6.3} {t:>6.3} {:>9.4} {:>9.4} {:>9.4}",
            Kernel::levy().eval(s, t),
            spectral.second_moment(i, j),
            oracle.second_moment(i, j)
        );
    }
    Ok(())
}
