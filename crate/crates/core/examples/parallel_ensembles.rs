//! The same ensemble on one and on four worker threads gives identical
//! reports, because every trial is a pure function of its derived seed.
//!
//! ```text
//! cargo run --release --example parallel_ensembles
//! ```

use std::time::Instant;

use specgraph::cli_io::{derive_trial_seed, Seed};
use specgraph::experiments::{run_semicircle_convergence, with_threads, EnsembleConfig};

fn main() -> specgraph::Result<()> {
    let cfg = EnsembleConfig::gnp(400, 0.1, 16, 99);
    for i in 0..3 {
        println!("trial {i} seed = {:#018x}", derive_trial_seed(Seed(99), i).0);
    }
    let mut reports = Vec::new();
    for threads in [1, 4] {
        let t = Instant::now();
        let r = with_threads(threads, || run_semicircle_convergence(&cfg, 40))??;
        println!("{threads} thread(s): mean KS {:.5} in {:.2?}", r.mean_ks, t.elapsed());
        reports.push(serde_json::to_string(&r)?);
    }
    assert_eq!(reports[0], reports[1]);
    println!("reports identical");
    Ok(())
}
