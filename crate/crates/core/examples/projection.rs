//! Norm of the projection of a centered Bernoulli vector onto random
//! 200-dimensional subspaces of `R^2000`.
//!
//! ```text
//! cargo run --release --example projection -- 100
//! ```

use specgraph::cli_io::Seed;
use specgraph::experiments::run_projection_concentration;

fn main() -> specgraph::Result<()> {
    let trials: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100);
    let r = run_projection_concentration(2000, 0.3, 200, 6.0, trials, Seed(9))?;
    let (lo, hi) = r
        .trials
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(a, b), t| (a.min(t.norm), b.max(t.norm)));
    println!("sigma sqrt(dim) = {:.4}", r.expected_norm);
    println!("mean norm over {trials} trials = {:.4} (range {lo:.3}..{hi:.3})", r.mean_norm);
    println!(
        "deviations >= {}: {} (frequency {}, bound {:.2e})",
        r.t, r.exceed_count, r.deviation_frequency, r.bound
    );
    Ok(())
}
