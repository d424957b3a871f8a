//! Runs one verification suite and prints its JSON report.
//!
//! ```bash
//! cargo run --example verify_report -- degeneracy
//! ```

use circle_noise::error::Result;
use circle_noise::verify::{run_suite, Suite, SuiteConfig};

fn main() -> Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("identity").parse()?;
    let config = SuiteConfig {
        reps: 2000,
        ..SuiteConfig::default()
    };
    let report = run_suite(suite, &config)?;
    println!("{}", report.to_json()?);
    eprintln!("overall pass: {}", report.overall_pass);
    Ok(())
}
