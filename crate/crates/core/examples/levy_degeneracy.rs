//! On antipodally symmetric points Levy's Brownian motion satisfies
//! `B(t) + B(t + 1/2) = B(s) + B(s + 1/2)`, so its Gram matrix loses rank.
//! The bridge on the same points (minus the pinned origin) does not.
//!
//! ```bash
//! cargo run --example levy_degeneracy
//! ```

use circle_noise::error::Result;
use circle_noise::processes::{kernel_spectrum, near_zero_count, Kernel};
use circle_noise::verify::uniform_antipodal_points;

fn main() -> Result<()> {
    let pts = uniform_antipodal_points(8);
    let levy = kernel_spectrum(&Kernel::levy(), &pts)?;
    let bridge = kernel_spectrum(&Kernel::Bridge, &pts[1..])?;
    println!("{:>5} {:>14} {:>14}", "index", "levy", "bridge");
    for (i, l) in levy.iter().enumerate() {
        let b = bridge.get(i).map(|v| format!("{v:14.6e}")).unwrap_or_default();
        println!("{i:>5} {l:>14.6e} {b}");
    }
    println!(
        "near-zero (< 1e-10 lambda_max): levy {}, bridge {}",
        near_zero_count(&levy, 1e-10),
        near_zero_count(&bridge, 1e-10)
    );
    Ok(())
}
