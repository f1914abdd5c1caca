//! Averaged trace moments `(1/n) tr W^k` of `G(1000, 0.1)` against the
//! Catalan numbers.
//!
//! ```text
//! cargo run --release --example moments
//! ```

use specgraph::experiments::{run_moment_check, EnsembleConfig};

fn main() -> specgraph::Result<()> {
    let r = run_moment_check(&EnsembleConfig::gnp(1000, 0.1, 20, 3), 8)?;
    println!("np = {}", r.np);
    println!("{:>2}  {:>10}  {:>10}  {:>10}  {:>8}", "k", "mean", "limit", "deviation", "scale");
    for row in &r.rows {
        println!(
            "{:>2}  {:>10.5}  {:>10}  {:>10.5}  {:>8.4}",
            row.k, row.mean, row.semicircle, row.deviation, row.error_scale
        );
    }
    Ok(())
}
