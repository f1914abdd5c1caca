use serde::{Deserialize, Serialize};

use super::config::{EnsembleConfig, ModelTemplate, Normalization};
use super::runner::run_trials;
use crate::cli_io::{HistogramFile, Seed};
use crate::eigensolve;
use crate::error::{Error, Result};
use crate::graphgen;
use crate::spectral_laws::{Esd, LimitLaw};

/// Range of the pooled histogram for normalized spectra.
pub const SEMICIRCLE_HISTOGRAM_RANGE: (f64, f64) = (-2.5, 2.5);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SemicircleTrial {
    pub index: usize,
    pub seed: Seed,
    pub ks: f64,
    /// `|sum lambda - trace| / max(1, |trace|)`.
    pub trace_error: f64,
    /// Eigenvalues outside the histogram range `[-2.5, 2.5]`.
    pub outside_edge: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub law: LimitLaw,
    pub trials: Vec<SemicircleTrial>,
    pub mean_ks: f64,
    pub max_ks: f64,
    /// All trials' eigenvalues pooled.
    pub histogram: HistogramFile,
}

/// KS distance between each trial's normalized spectrum and the semicircle
/// law, plus a pooled histogram over `[-2.5, 2.5]`.
pub fn run_semicircle_convergence(cfg: &EnsembleConfig, bins: usize) -> Result<ConvergenceReport> {
    cfg.validate()?;
    if !matches!(cfg.normalization, Normalization::CenteredGnp | Normalization::Regular) {
        return Err(Error::invalid(
            "semicircle convergence needs the centered G(n, p) or the regular normalization",
        ));
    }
    let (lo, hi) = SEMICIRCLE_HISTOGRAM_RANGE;
    let spectra = run_trials(cfg.master_seed, cfg.trials, |index, seed| {
        let (_, m) = cfg.trial_matrix(seed)?;
        let esd = Esd::new(eigensolve::eigenvalues(&m)?)?;
        let trace = m.trace();
        let sum: f64 = esd.values().iter().sum();
        let trial = SemicircleTrial {
            index,
            seed,
            ks: esd.ks_distance(LimitLaw::Semicircle),
            trace_error: (sum - trace).abs() / trace.abs().max(1.0),
            outside_edge: esd.values().iter().filter(|&&v| !(lo..=hi).contains(&v)).count(),
        };
        Ok((trial, esd))
    })?;
    let pooled: Vec<f64> = spectra.iter().flat_map(|(_, e)| e.values().iter().copied()).collect();
    let trials: Vec<SemicircleTrial> = spectra.into_iter().map(|(t, _)| t).collect();
    let ks: Vec<f64> = trials.iter().map(|t| t.ks).collect();
    Ok(ConvergenceReport {
        law: LimitLaw::Semicircle,
        mean_ks: mean(&ks),
        max_ks: ks.iter().fold(0.0, |a: f64, &b| a.max(b)),
        histogram: HistogramFile::from_values(&pooled, bins, lo, hi)?,
        trials,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct McKayTrial {
    pub index: usize,
    pub seed: Seed,
    pub ks: f64,
    /// The largest eigenvalue, dropped before the comparison.
    pub removed_top: f64,
    /// Remaining eigenvalues still equal to `d` (up to `1e-8 d`); non-zero
    /// only for disconnected samples.
    pub extra_at_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct McKayReport {
    pub law: LimitLaw,
    pub n: usize,
    pub master_seed: Seed,
    pub trials: Vec<McKayTrial>,
    pub mean_ks: f64,
    pub max_ks: f64,
    /// Trials with `extra_at_degree > 0`.
    pub flagged_trials: usize,
    /// Pooled spectra (top eigenvalue removed) over `1.25` times the support.
    pub histogram: HistogramFile,
}

/// Raw adjacency spectra of `G(n, d)` against the Kesten–McKay law. Exactly one
/// eigenvalue, the largest, is removed from every spectrum.
pub fn run_mckay_convergence(n: usize, d: usize, trials: usize, master_seed: Seed, bins: usize) -> Result<McKayReport> {
    let law = LimitLaw::kesten_mckay(d)?;
    let cfg = EnsembleConfig::gnd(n, d, trials, master_seed).with_normalization(Normalization::RawAdjacency);
    cfg.validate()?;
    let df = d as f64;
    let spectra = run_trials(master_seed, trials, |index, seed| {
        let g = ModelTemplate::Gnd { d }.sample(n, seed)?;
        let full = Esd::new(eigensolve::eigenvalues(&graphgen::adjacency_matrix(&g))?)?;
        let esd = full.without_top()?;
        let trial = McKayTrial {
            index,
            seed,
            ks: esd.ks_distance(law),
            removed_top: full.values()[n - 1],
            extra_at_degree: esd.values().iter().filter(|&&v| v >= df - 1e-8 * df).count(),
        };
        Ok((trial, esd))
    })?;
    let (_, r) = law.support();
    let pooled: Vec<f64> = spectra.iter().flat_map(|(_, e)| e.values().iter().copied()).collect();
    let trials: Vec<McKayTrial> = spectra.into_iter().map(|(t, _)| t).collect();
    let ks: Vec<f64> = trials.iter().map(|t| t.ks).collect();
    Ok(McKayReport {
        law,
        n,
        master_seed,
        mean_ks: mean(&ks),
        max_ks: ks.iter().fold(0.0, |a: f64, &b| a.max(b)),
        flagged_trials: trials.iter().filter(|t| t.extra_at_degree > 0).count(),
        histogram: HistogramFile::from_values(&pooled, bins, -1.25 * r, 1.25 * r)?,
        trials,
    })
}

pub(crate) fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}
