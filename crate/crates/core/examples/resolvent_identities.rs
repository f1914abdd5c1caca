//! Exact identities: rank-one and Cauchy interlacing, the Schur-complement
//! formula for the Stieltjes transform, the eigenvector-entry formula, and the
//! semicircle fixed point.
//!
//! ```text
//! cargo run --release --example resolvent_identities
//! ```

use num_complex::Complex64;
use specgraph::cli_io::Seed;
use specgraph::eigensolve::{eigenvalues, normalize_centered_gnp};
use specgraph::experiments::identities;
use specgraph::graphgen::{adjacency_matrix, sample_gnp};
use specgraph::spectral_laws::{stieltjes_semicircle, Esd};

fn main() -> specgraph::Result<()> {
    let seed = Seed(7);
    let z = Complex64::new(0.3, 0.1);

    let r = identities::check_rank_one_interlacing(20, 1000, seed)?;
    println!("rank-one interlacing: {} cases, {} violations", r.cases, r.count_above(0.0));
    let r = identities::check_minor_interlacing(20, 200, seed)?;
    println!("minor interlacing: worst overshoot {:e}", r.max_abs_residual);
    let r = identities::run_minor_stieltjes_checks(50, z, 100, seed)?;
    println!("minor Stieltjes identity at z = {z}: max residual {:.2e}", r.max_abs_residual);
    let r = identities::run_eigvec_entry_checks(30, 0.5, 0.01, 100, seed)?;
    println!("eigenvector-entry formula: max relative error {:.2e}", r.max_abs_residual);
    let grid = identities::stieltjes_grid(-3.0, 3.0, 50, &[0.1, 1.0]);
    let r = identities::check_stieltjes_fixed_point(&grid)?;
    println!("s + 1/(s + z) on {} grid points: max {:.2e}", r.cases, r.max_abs_residual);

    // the empirical transform of one sample against the limit
    let g = sample_gnp(2000, 0.2, 1)?;
    let esd = Esd::new(eigenvalues(&normalize_centered_gnp(&adjacency_matrix(&g), 0.2)?)?)?;
    let z = Complex64::new(0.5, 0.5);
    let (sn, s) = (esd.stieltjes(z)?, stieltjes_semicircle(z)?);
    println!("G(2000, 0.2): s_n({z}) = {sn:.5}, s({z}) = {s:.5}, |diff| = {:.4}", (sn - s).norm());
    Ok(())
}
