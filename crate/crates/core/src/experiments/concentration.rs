use serde::{Deserialize, Serialize};

use super::config::{EnsembleConfig, Normalization};
use super::runner::run_trials;
use crate::cli_io::Seed;
use crate::eigensolve;
use crate::error::{Error, Result};
use crate::spectral_laws::{semicircle_mass, Esd, Interval};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConcentrationTrial {
    pub index: usize,
    pub seed: Seed,
    pub count: usize,
    /// `|N_I - expected| / expected`.
    pub relative_error: f64,
    pub failed: bool,
}

/// Eigenvalue counts in one interval against `n` times its semicircle mass.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConcentrationReport {
    pub interval: Interval,
    pub delta: f64,
    pub expected_mass: f64,
    pub per_trial_counts: Vec<usize>,
    /// Fraction of trials with `|N_I - expected| > delta * expected`.
    pub failure_fraction: f64,
    pub trials: Vec<ConcentrationTrial>,
}

/// Counts eigenvalues of the normalized matrix in `interval` for every trial.
pub fn run_esd_concentration(cfg: &EnsembleConfig, interval: Interval, delta: f64) -> Result<ConcentrationReport> {
    let mut reports = run_esd_concentration_multi(cfg, &[interval], delta)?;
    Ok(reports.remove(0))
}

/// Same as [`run_esd_concentration`] for several intervals, sharing one
/// spectrum per trial.
pub fn run_esd_concentration_multi(
    cfg: &EnsembleConfig,
    intervals: &[Interval],
    delta: f64,
) -> Result<Vec<ConcentrationReport>> {
    cfg.validate()?;
    if !matches!(
        cfg.normalization,
        Normalization::CenteredGnp | Normalization::UncenteredGnp | Normalization::Regular
    ) {
        return Err(Error::invalid("concentration compares against the semicircle; normalize the matrix"));
    }
    if !(delta > 0.0) {
        return Err(Error::invalid(format!("delta = {delta} must be positive")));
    }
    if intervals.is_empty() {
        return Err(Error::invalid("no intervals given"));
    }
    let counts = run_trials(cfg.master_seed, cfg.trials, |_, seed| {
        let (_, m) = cfg.trial_matrix(seed)?;
        let esd = Esd::new(eigensolve::eigenvalues(&m)?)?;
        Ok(intervals.iter().map(|i| esd.count_in(i)).collect::<Vec<_>>())
    })?;

    Ok(intervals
        .iter()
        .enumerate()
        .map(|(k, &interval)| {
            let expected = cfg.n as f64 * semicircle_mass(&interval);
            let trials: Vec<ConcentrationTrial> = counts
                .iter()
                .enumerate()
                .map(|(index, c)| {
                    let count = c[k];
                    let deviation = (count as f64 - expected).abs();
                    ConcentrationTrial {
                        index,
                        seed: cfg.trial_seed(index),
                        count,
                        relative_error: if expected > 0.0 { deviation / expected } else { deviation },
                        failed: deviation > delta * expected,
                    }
                })
                .collect();
            ConcentrationReport {
                interval,
                delta,
                expected_mass: expected,
                per_trial_counts: trials.iter().map(|t| t.count).collect(),
                failure_fraction: trials.iter().filter(|t| t.failed).count() as f64 / trials.len() as f64,
                trials,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_spectrum_interval_never_fails() {
        let cfg = EnsembleConfig::gnd(200, 10, 3, 2);
        let r = run_esd_concentration(&cfg, Interval::new(-3.0, 3.0).unwrap(), 0.1).unwrap();
        assert_eq!(r.per_trial_counts, vec![200; 3]);
        assert_eq!(r.failure_fraction, 0.0);
        assert!(r.trials.iter().all(|t| t.relative_error == 0.0));
    }

    #[test]
    fn multi_matches_single() {
        let cfg = EnsembleConfig::gnp(150, 0.2, 3, 5);
        let a = Interval::new(-1.0, 1.0).unwrap();
        let b = Interval::new(-0.5, 0.5).unwrap();
        let multi = run_esd_concentration_multi(&cfg, &[a, b], 0.1).unwrap();
        assert_eq!(multi[1], run_esd_concentration(&cfg, b, 0.1).unwrap());
        assert!((multi[0].expected_mass - 150.0 * 0.608_997_781_044_229_4).abs() < 1e-9);
    }
}
