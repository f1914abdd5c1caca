use serde::{Deserialize, Serialize};

use super::config::{EnsembleConfig, ModelTemplate, Normalization};
use super::runner::run_trials;
use crate::cli_io::Seed;
use crate::eigensolve;
use crate::error::{Error, Result};
use crate::spectral_laws::{semicircle_moment, Esd};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentTrial {
    pub index: usize,
    pub seed: Seed,
    /// Empirical moments `k = 1..=k_max`.
    pub moments: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentRow {
    pub k: u32,
    pub mean: f64,
    pub semicircle: f64,
    pub deviation: f64,
    /// `1 / sqrt(np)` for odd `k`, `1 / (np)` for even `k`.
    pub error_scale: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentReport {
    pub k_max: u32,
    pub np: f64,
    pub rows: Vec<MomentRow>,
    pub trials: Vec<MomentTrial>,
}

impl MomentReport {
    pub fn row(&self, k: u32) -> Option<&MomentRow> {
        self.rows.iter().find(|r| r.k == k)
    }
}

/// Ensemble averages of `(1/n) tr W^k` against the semicircle moments.
pub fn run_moment_check(cfg: &EnsembleConfig, k_max: u32) -> Result<MomentReport> {
    cfg.validate()?;
    let p = match (cfg.model, cfg.normalization) {
        (ModelTemplate::Gnp { p }, Normalization::CenteredGnp) => p,
        _ => return Err(Error::invalid("the moment check needs G(n, p) with the centered normalization")),
    };
    if k_max == 0 {
        return Err(Error::invalid("k_max must be at least 1"));
    }
    let trials = run_trials(cfg.master_seed, cfg.trials, |index, seed| {
        let (_, m) = cfg.trial_matrix(seed)?;
        let esd = Esd::new(eigensolve::eigenvalues(&m)?)?;
        Ok(MomentTrial {
            index,
            seed,
            moments: (1..=k_max).map(|k| esd.moment(k)).collect(),
        })
    })?;
    let np = cfg.n as f64 * p;
    let rows = (1..=k_max)
        .map(|k| {
            let mean = trials.iter().map(|t| t.moments[k as usize - 1]).sum::<f64>() / trials.len() as f64;
            let semicircle = semicircle_moment(k);
            MomentRow {
                k,
                mean,
                semicircle,
                deviation: mean - semicircle,
                error_scale: if k % 2 == 1 { 1.0 / np.sqrt() } else { 1.0 / np },
            }
        })
        .collect();
    Ok(MomentReport { k_max, np, rows, trials })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_moment_near_one() {
        let r = run_moment_check(&EnsembleConfig::gnp(300, 0.2, 3, 4), 4).unwrap();
        assert_eq!(r.rows.len(), 4);
        assert!((r.row(2).unwrap().mean - 1.0).abs() < 0.05);
        assert!((r.row(4).unwrap().mean - 2.0).abs() < 0.2);
        assert_eq!(r.trials[0].moments.len(), 4);
    }
}
