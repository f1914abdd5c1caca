use serde::{Deserialize, Serialize};

use super::config::{EnsembleConfig, ModelTemplate, Normalization};
use super::runner::run_trials;
use crate::cli_io::Seed;
use crate::eigensolve::{self, SpectralDecomposition, SymMatrix};
use crate::error::{Error, Result};
use crate::spectral_laws::delocalization_bound;

/// Eigenvalue gaps below this trigger the Gaussian perturbation.
pub const DEGENERATE_GAP: f64 = 1e-12;
/// Perturbation size relative to the Frobenius norm of the matrix.
pub const PERTURBATION_SCALE: f64 = 1e-8;

/// Half-open range `start..end` of ascending eigenvalue indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexRange {
    pub start: usize,
    pub end: usize,
}

impl IndexRange {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DelocalizationTrial {
    pub index: usize,
    pub seed: Seed,
    /// Largest `||u_i||_inf` over the bulk eigenvectors.
    pub max_inf_norm: f64,
    /// Eigenvalue index attaining `max_inf_norm`.
    pub argmax: usize,
    pub bulk: IndexRange,
    /// Whether the spectrum had a gap below `DEGENERATE_GAP` and was perturbed.
    pub perturbed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DelocalizationReport {
    pub kappa: f64,
    pub per_trial_max_inf_norm: Vec<f64>,
    /// Bound with its unknown leading constant set to 1.
    pub bound_value: f64,
    pub bulk_index_sets: Vec<IndexRange>,
    pub median_max_inf_norm: f64,
    pub trials: Vec<DelocalizationTrial>,
}

impl DelocalizationReport {
    pub fn within_bound(&self) -> bool {
        self.per_trial_max_inf_norm.iter().all(|&x| x <= self.bound_value)
    }
}

pub fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Indices of the eigenvalues in `[-2 + kappa, 2 - kappa]`; contiguous because
/// the spectrum is sorted.
pub fn bulk_range(eigenvalues: &[f64], kappa: f64) -> IndexRange {
    let (lo, hi) = (-2.0 + kappa, 2.0 - kappa);
    let start = eigenvalues.partition_point(|&v| v < lo);
    let end = eigenvalues.partition_point(|&v| v <= hi).max(start);
    IndexRange { start, end }
}

/// Decomposes `m`, first perturbing it by `PERTURBATION_SCALE * ||m||_F`
/// Gaussian noise if two eigenvalues are closer than `DEGENERATE_GAP`.
pub fn decompose_simple_spectrum(m: &SymMatrix, seed: Seed) -> Result<(SpectralDecomposition, bool)> {
    let dec = eigensolve::eigendecompose(m)?;
    if dec.min_gap() >= DEGENERATE_GAP {
        return Ok((dec, false));
    }
    let eps = PERTURBATION_SCALE * m.frobenius_norm().max(f64::MIN_POSITIVE);
    let perturbed = eigensolve::gaussian_perturb(m, eps, seed.trial(2).0)?;
    Ok((eigensolve::eigendecompose(&perturbed)?, true))
}

/// Sup-norms of the bulk eigenvectors of `B = A / (sigma sqrt(n))`.
pub fn run_delocalization(cfg: &EnsembleConfig, kappa: f64) -> Result<DelocalizationReport> {
    cfg.validate()?;
    let p = match (cfg.model, cfg.normalization) {
        (ModelTemplate::Gnp { p }, Normalization::UncenteredGnp) => p,
        _ => return Err(Error::invalid("delocalization runs on G(n, p) with the uncentered normalization")),
    };
    if !(kappa > 0.0 && kappa < 2.0) {
        return Err(Error::invalid(format!("kappa = {kappa} must lie in (0, 2)")));
    }
    let bound_value = delocalization_bound(cfg.n, p, kappa)?;
    let trials = run_trials(cfg.master_seed, cfg.trials, |index, seed| {
        let (_, m) = cfg.trial_matrix(seed)?;
        let (dec, perturbed) = decompose_simple_spectrum(&m, seed)?;
        let bulk = bulk_range(dec.eigenvalues(), kappa);
        if bulk.is_empty() {
            return Err(Error::DegenerateInput(format!(
                "trial {index}: no eigenvalue in [{}, {}]",
                -2.0 + kappa,
                2.0 - kappa
            )));
        }
        let (argmax, max_inf_norm) = (bulk.start..bulk.end)
            .map(|i| (i, inf_norm(dec.eigenvector(i))))
            .fold((bulk.start, 0.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        Ok(DelocalizationTrial {
            index,
            seed,
            max_inf_norm,
            argmax,
            bulk,
            perturbed,
        })
    })?;
    let norms: Vec<f64> = trials.iter().map(|t| t.max_inf_norm).collect();
    Ok(DelocalizationReport {
        kappa,
        median_max_inf_norm: median(&norms),
        per_trial_max_inf_norm: norms,
        bound_value,
        bulk_index_sets: trials.iter().map(|t| t.bulk).collect(),
        trials,
    })
}

pub fn median(xs: &[f64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let k = v.len();
    if k == 0 {
        return f64::NAN;
    }
    if k % 2 == 1 {
        v[k / 2]
    } else {
        0.5 * (v[k / 2 - 1] + v[k / 2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_basis_vector_is_localized() {
        let mut e = vec![0.0; 10];
        e[3] = 1.0;
        assert_eq!(inf_norm(&e), 1.0);
        assert!((inf_norm(&[0.6, -0.8]) - 0.8).abs() < 1e-15);
    }

    #[test]
    fn bulk_range_selects_by_location() {
        let ev = [-2.5, -1.6, -1.0, 0.0, 1.5, 1.51, 3.0];
        assert_eq!(bulk_range(&ev, 0.5), IndexRange { start: 2, end: 5 });
        assert!(bulk_range(&[3.0, 4.0], 0.5).is_empty());
    }

    #[test]
    fn degenerate_spectrum_gets_perturbed() {
        let m = SymMatrix::identity(5);
        let (dec, perturbed) = decompose_simple_spectrum(&m, Seed(3)).unwrap();
        assert!(perturbed);
        assert!(dec.min_gap() > 0.0);
        let (_, perturbed) = decompose_simple_spectrum(&SymMatrix::from_diagonal(&[1.0, 2.0]), Seed(3)).unwrap();
        assert!(!perturbed);
    }

    #[test]
    fn small_ensemble() {
        let cfg = EnsembleConfig::gnp(300, 0.2, 2, 6).with_normalization(Normalization::UncenteredGnp);
        let r = run_delocalization(&cfg, 0.5).unwrap();
        for t in &r.trials {
            assert!(t.max_inf_norm > 0.0 && t.max_inf_norm <= 1.0);
            assert!(t.bulk.len() > 200);
            assert!(!t.perturbed);
        }
        assert!(r.per_trial_max_inf_norm.iter().all(|&x| x < 0.5));
        assert!(run_delocalization(&EnsembleConfig::gnp(50, 0.2, 1, 0), 0.5).is_err());
    }

    #[test]
    fn median_even_and_odd() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
