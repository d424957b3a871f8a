//! Direct summation against FFT synthesis of one path.
//!
//! ```bash
//! cargo run --release --example fft_vs_naive
//! ```

use circle_noise::cli::bench_row;
use circle_noise::error::Result;
use circle_noise::processes::ProcessKind;

fn main() -> Result<()> {
    println!(
        "{:>6} {:>7} {:>10} {:>10} {:>10}",
        "N", "M", "speedup", "max_dev", "kind"
    );
    for (n, m) in [(8, 32), (128, 512), (1024, 4096)] {
        for kind in [ProcessKind::Bridge, ProcessKind::Levy] {
            let row = bench_row(kind, n, m, 2, 1)?;
            println!(
                "{n:>6} {m:>7} {:>10.1} {:>10.2e} {kind:>10}",
                row.speedup(),
                row.max_deviation
            );
        }
    }
    Ok(())
}
