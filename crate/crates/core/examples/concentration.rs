//! Eigenvalue counts in fixed intervals across 50 samples of `G_{1000,30}`
//! and `G(1000, 0.1)`, against `n` times the semicircle mass.
//!
//! ```text
//! cargo run --release --example concentration
//! ```

use specgraph::experiments::{run_esd_concentration_multi, EnsembleConfig};
use specgraph::spectral_laws::{min_interval_length_gnp, min_interval_length_regular, Interval, ThresholdParams};

fn main() -> specgraph::Result<()> {
    let intervals = [Interval::new(-1.0, 1.0)?, Interval::new(-0.5, 0.5)?];
    for (name, cfg) in [
        ("G(1000, d=30)", EnsembleConfig::gnd(1000, 30, 50, 1)),
        ("G(1000, p=0.1)", EnsembleConfig::gnp(1000, 0.1, 50, 1)),
    ] {
        for r in run_esd_concentration_multi(&cfg, &intervals, 0.1)? {
            let (lo, hi) = r
                .per_trial_counts
                .iter()
                .fold((usize::MAX, 0), |(a, b), &c| (a.min(c), b.max(c)));
            println!(
                "{name} I = [{}, {}]: expected {:.1}, counts {lo}..{hi}, failure fraction {:.2}",
                r.interval.a(),
                r.interval.b(),
                r.expected_mass,
                r.failure_fraction
            );
        }
    }

    // the interval lengths the asymptotic statements need, constants set to 1
    println!(
        "length thresholds at delta = 0.1: G(n, p) with np = 100: {:.3}, G(n, d) with d = 30: {:.3}",
        min_interval_length_gnp(&ThresholdParams::new(0.1, 100.0)?)?,
        min_interval_length_regular(&ThresholdParams::new(0.1, 30.0)?)?
    );
    Ok(())
}
