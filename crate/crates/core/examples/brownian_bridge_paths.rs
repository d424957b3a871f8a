//! Spectral bridge and Levy paths on a grid, written as a wide CSV.
//!
//! ```bash
//! cargo run --example brownian_bridge_paths -- /tmp/paths.csv
//! ```

use std::fs::File;
use std::io::BufWriter;

use circle_noise::error::Result;
use circle_noise::noise::SeedSpec;
use circle_noise::processes::{GridSpec, PathEnsemble, ProcessKind};

fn main() -> Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "bridge_paths.csv".into());
    let grid = GridSpec::new(1024)?;
    let seed = SeedSpec::new(7);

    let bridge = PathEnsemble::spectral(ProcessKind::Bridge, 511, grid, seed, 2000)?;
    let half = grid.index_of(0.5).unwrap();
    let quarter = grid.index_of(0.25).unwrap();
    println!(
        "bridge: Var B(1/2)={:.4} (0.25)  Cov(B(1/4),B(1/2))={:.4} (0.125)",
        bridge.second_moment(half, half),
        bridge.second_moment(quarter, half)
    );

    let levy = PathEnsemble::spectral(ProcessKind::Levy, 511, grid, seed, 2000)?;
    let p = &levy.paths()[0];
    let t = grid.index_of(0.125).unwrap();
    println!(
        "levy: B(0)={}  B(1/8)+B(5/8)={:.6}  B(3/8)+B(7/8)={:.6}",
        p[0],
        p[t] + p[t + 512],
        p[3 * t] + p[7 * t]
    );

    let sample = PathEnsemble::spectral(ProcessKind::Bridge, 511, grid, seed, 5)?;
    sample.write_csv(
        BufWriter::new(File::create(&out)?),
        Some("process=bridge trunc=511 grid=1024 seed=7"),
    )?;
    println!("wrote 5 bridge paths to {out}");
    Ok(())
}
