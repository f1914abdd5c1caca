//! Adjacency spectra of random cubic graphs against the Kesten–McKay law,
//! and how the normalized law approaches the semicircle as `d` grows.
//!
//! ```text
//! cargo run --release --example kesten_mckay
//! ```

use specgraph::cli_io::Seed;
use specgraph::experiments::run_mckay_convergence;
use specgraph::spectral_laws::{km_normalized_density, semicircle_density};

fn main() -> specgraph::Result<()> {
    let r = run_mckay_convergence(1000, 3, 5, Seed(11), 30)?;
    for t in &r.trials {
        println!("trial {}: removed top {:.12}, KS = {:.4}", t.index, t.removed_top, t.ks);
    }
    println!("mean KS vs f_3 = {:.4}", r.mean_ks);

    for d in [3usize, 10, 50, 200] {
        let gap = (0..=400)
            .map(|i| -2.0 + 0.01 * i as f64)
            .map(|y| (km_normalized_density(y, d).unwrap() - semicircle_density(y)).abs())
            .fold(0.0, f64::max);
        println!("d = {d:>3}: sup |normalized f_d - rho_sc| = {gap:.4}");
    }
    Ok(())
}
