use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use super::config::EnsembleConfig;
use super::runner::run_trials;
use crate::cli_io::Seed;
use crate::eigensolve::{self, dot};
use crate::error::{Error, Result};
use crate::rng::rng_from_seed;
use crate::spectral_laws::two_sample_ks;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsotropyTrial {
    pub index: usize,
    pub seed: Seed,
    /// `|w . u|` for the middle eigenvector `u`.
    pub abs_projection: f64,
}

/// Evidence only: nothing here is asserted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsotropyReport {
    /// 0-based ascending index of the eigenvector used (`ceil(n/2) - 1`).
    pub eigen_index: usize,
    pub reference_seed: Seed,
    pub reference: Vec<f64>,
    /// Two-sample KS statistic between the eigenvector and sphere samples.
    pub ks: f64,
    pub trials: Vec<IsotropyTrial>,
}

/// Uniform point on the unit sphere in `R^n` (normalized Gaussian vector).
pub fn sphere_sample<R: Rng>(n: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let g: Vec<f64> = (0..n).map(|_| StandardNormal.sample(rng)).collect();
        let norm = dot(&g, &g).sqrt();
        if norm > 0.0 {
            return g.into_iter().map(|x| x / norm).collect();
        }
    }
}

/// Index of the eigenvector compared against the sphere: the `ceil(n/2)`-th
/// smallest eigenvalue.
pub fn middle_index(n: usize) -> usize {
    n.div_ceil(2) - 1
}

/// Compares `|w . u|` over trials, `u` the middle eigenvector of each sample,
/// with `|w . v|` for `n_reference` uniform sphere points `v`.
pub fn run_isotropy_check(cfg: &EnsembleConfig, w: &[f64], n_reference: usize) -> Result<IsotropyReport> {
    cfg.validate()?;
    if w.len() != cfg.n {
        return Err(Error::invalid(format!("w has length {}, expected {}", w.len(), cfg.n)));
    }
    if (dot(w, w).sqrt() - 1.0).abs() > 1e-10 {
        return Err(Error::invalid("w must be a unit vector"));
    }
    if n_reference == 0 {
        return Err(Error::invalid("need at least one reference sample"));
    }
    let eigen_index = middle_index(cfg.n);
    let trials = run_trials(cfg.master_seed, cfg.trials, |index, seed| {
        let (_, m) = cfg.trial_matrix(seed)?;
        let (_, vectors) = eigensolve::eigenpairs_at(&m, &[eigen_index])?;
        Ok(IsotropyTrial {
            index,
            seed,
            abs_projection: dot(w, &vectors[0]).abs(),
        })
    })?;
    // a stream no trial index can reach
    let reference_seed = cfg.master_seed.trial(u64::MAX);
    let mut rng = rng_from_seed(reference_seed.0);
    let reference: Vec<f64> = (0..n_reference)
        .map(|_| dot(w, &sphere_sample(cfg.n, &mut rng)).abs())
        .collect();
    let observed: Vec<f64> = trials.iter().map(|t| t.abs_projection).collect();
    Ok(IsotropyReport {
        eigen_index,
        reference_seed,
        ks: two_sample_ks(&observed, &reference)?,
        reference,
        trials,
    })
}

/// `e_k` in `R^n`.
pub fn basis_vector(n: usize, k: usize) -> Vec<f64> {
    let mut e = vec![0.0; n];
    e[k] = 1.0;
    e
}
