//! Times the dense eigensolver on a `G(n, p)` adjacency matrix and reports
//! the decomposition invariants.
//!
//! ```text
//! cargo run --release --example eigensolver -- 1000 0.2
//! ```

use std::time::Instant;

use specgraph::eigensolve::{eigendecompose, eigenvalues, normalize_uncentered_gnp};
use specgraph::graphgen::{adjacency_matrix, sample_gnp};

fn main() -> specgraph::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1000);
    let p: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(0.2);

    let g = sample_gnp(n, p, 1)?;
    let b = normalize_uncentered_gnp(&adjacency_matrix(&g), p)?;

    let t = Instant::now();
    let values = eigenvalues(&b)?;
    println!("eigenvalues only: {:.2?}", t.elapsed());

    let t = Instant::now();
    let full = eigendecompose(&b)?;
    println!("full decomposition: {:.2?}", t.elapsed());

    let trace: f64 = values.iter().sum();
    println!("n = {n}, top eigenvalue = {:.6}", values[n - 1]);
    println!("sum of eigenvalues - trace = {:.3e}", trace - b.trace());
    println!("max residual = {:.3e}", full.max_residual(&b));
    if n <= 1000 {
        println!("max orthonormality error = {:.3e}", full.max_orthonormality_error());
    }
    Ok(())
}
