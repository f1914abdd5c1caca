//! Compares `|e_1 . u|` for the middle eigenvector `u` of `G(n, 0.2)` samples
//! with `|e_1 . v|` for uniform points `v` on the sphere. Evidence only.
//!
//! ```text
//! cargo run --release --example isotropy -- 500 100
//! ```

use specgraph::experiments::{basis_vector, run_isotropy_check, EnsembleConfig, Normalization};

fn main() -> specgraph::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(500);
    let trials: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    let cfg = EnsembleConfig::gnp(n, 0.2, trials, 21).with_normalization(Normalization::UncenteredGnp);
    let r = run_isotropy_check(&cfg, &basis_vector(n, 0), trials)?;
    let mean = |xs: &mut dyn Iterator<Item = f64>| {
        let v: Vec<f64> = xs.collect();
        v.iter().sum::<f64>() / v.len() as f64
    };
    println!("eigenvector index {} of {n}", r.eigen_index);
    println!("mean |w.u| = {:.5}", mean(&mut r.trials.iter().map(|t| t.abs_projection)));
    println!("mean |w.v| = {:.5} (sphere)", mean(&mut r.reference.iter().copied()));
    println!("two-sample KS = {:.4}", r.ks);
    Ok(())
}
