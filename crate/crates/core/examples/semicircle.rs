//! Spectrum of the centered, scaled adjacency matrix of `G(2000, 0.2)` next to
//! the semicircle density, as a text histogram.
//!
//! ```text
//! cargo run --release --example semicircle -- 2000 0.2
//! ```

use specgraph::cli_io::emit_histogram;
use specgraph::eigensolve::{eigenvalues, normalize_centered_gnp};
use specgraph::graphgen::{adjacency_matrix, sample_gnp};
use specgraph::spectral_laws::{semicircle_density, Esd, LimitLaw};

fn main() -> specgraph::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2000);
    let p: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(0.2);

    let g = sample_gnp(n, p, 2024)?;
    let w = normalize_centered_gnp(&adjacency_matrix(&g), p)?;
    let esd = Esd::new(eigenvalues(&w)?)?;
    println!("KS distance to the semicircle: {:.4}", esd.ks_distance(LimitLaw::Semicircle));

    let h = emit_histogram(&esd, 25, -2.5, 2.5)?;
    println!("{:>7}  {:>8}  {:>8}", "x", "ESD", "rho_sc");
    for i in 0..h.bins() {
        let mid = 0.5 * (h.bin_edges[i] + h.bin_edges[i + 1]);
        let bar = "#".repeat((h.density[i] * 100.0).round() as usize);
        println!("{mid:>7.2}  {:>8.4}  {:>8.4}  {bar}", h.density[i], semicircle_density(mid));
    }
    Ok(())
}
