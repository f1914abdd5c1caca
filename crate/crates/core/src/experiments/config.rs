use serde::{Deserialize, Serialize};

use crate::cli_io::Seed;
use crate::eigensolve::{self, SymMatrix};
use crate::error::{Error, Result};
use crate::graphgen::{self, Graph};

/// Which matrix of a sampled graph an experiment looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// `(A - pJ) / (sigma sqrt(n))`.
    CenteredGnp,
    /// `A / (sigma sqrt(n))`.
    UncenteredGnp,
    /// `(A - (d/n) J) / sqrt(n q (1 - q))`, `q = d/n`.
    Regular,
    RawAdjacency,
}

impl std::str::FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "centered-gnp" => Ok(Normalization::CenteredGnp),
            "uncentered-gnp" => Ok(Normalization::UncenteredGnp),
            "regular" => Ok(Normalization::Regular),
            "raw" | "raw-adjacency" => Ok(Normalization::RawAdjacency),
            _ => Err(Error::invalid(format!("unknown normalization {s:?}"))),
        }
    }
}

/// A random graph model with its parameters but without a seed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum ModelTemplate {
    Gnp { p: f64 },
    Gnd { d: usize },
}

impl ModelTemplate {
    pub fn sample(&self, n: usize, seed: Seed) -> Result<Graph> {
        match *self {
            ModelTemplate::Gnp { p } => graphgen::sample_gnp(n, p, seed.0),
            ModelTemplate::Gnd { d } => graphgen::sample_regular(n, d, seed.0),
        }
    }

    /// Expected degree: `(n - 1) p` or `d`.
    pub fn mean_degree(&self, n: usize) -> f64 {
        match *self {
            ModelTemplate::Gnp { p } => p * (n as f64 - 1.0),
            ModelTemplate::Gnd { d } => d as f64,
        }
    }
}

/// One seeded ensemble: `trials` independent graphs whose seeds are derived
/// from `master_seed` by trial index.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleConfig {
    #[serde(flatten)]
    pub model: ModelTemplate,
    pub n: usize,
    pub trials: usize,
    pub master_seed: Seed,
    pub normalization: Normalization,
    /// Adds `eps N` (symmetric Gaussian) to every normalized matrix.
    pub perturb_eps: Option<f64>,
}

impl EnsembleConfig {
    /// Uses the natural normalization of the model: centered for `G(n, p)`,
    /// regular for `G(n, d)`.
    pub fn new(model: ModelTemplate, n: usize, trials: usize, master_seed: impl Into<Seed>) -> Self {
        let normalization = match model {
            ModelTemplate::Gnp { .. } => Normalization::CenteredGnp,
            ModelTemplate::Gnd { .. } => Normalization::Regular,
        };
        EnsembleConfig {
            model,
            n,
            trials,
            master_seed: master_seed.into(),
            normalization,
            perturb_eps: None,
        }
    }

    pub fn gnp(n: usize, p: f64, trials: usize, master_seed: impl Into<Seed>) -> Self {
        Self::new(ModelTemplate::Gnp { p }, n, trials, master_seed)
    }

    pub fn gnd(n: usize, d: usize, trials: usize, master_seed: impl Into<Seed>) -> Self {
        Self::new(ModelTemplate::Gnd { d }, n, trials, master_seed)
    }

    pub fn with_normalization(mut self, normalization: Normalization) -> Self {
        self.normalization = normalization;
        self
    }

    pub fn with_perturbation(mut self, eps: f64) -> Self {
        self.perturb_eps = Some(eps);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::invalid("an ensemble needs at least one trial"));
        }
        if self.n == 0 {
            return Err(Error::invalid("n must be positive"));
        }
        if let Some(eps) = self.perturb_eps {
            if !(eps > 0.0 && eps.is_finite()) {
                return Err(Error::invalid(format!("perturbation size {eps} must be positive")));
            }
        }
        match (self.model, self.normalization) {
            (ModelTemplate::Gnp { p }, Normalization::CenteredGnp | Normalization::UncenteredGnp) => {
                if !(p > 0.0 && p < 1.0) {
                    return Err(Error::invalid(format!("normalizing G(n, p) needs 0 < p < 1, got {p}")));
                }
            }
            (ModelTemplate::Gnp { p }, Normalization::RawAdjacency) => {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::invalid(format!("p = {p} is not a probability")));
                }
            }
            (ModelTemplate::Gnd { d }, Normalization::Regular | Normalization::RawAdjacency) => {
                if d >= self.n || (self.n * d) % 2 == 1 {
                    return Err(Error::invalid(format!("no {d}-regular graph on {} vertices", self.n)));
                }
                if self.normalization == Normalization::Regular && d == 0 {
                    return Err(Error::invalid("the regular normalization needs d > 0"));
                }
            }
            (model, normalization) => {
                return Err(Error::invalid(format!(
                    "normalization {normalization:?} does not apply to {model:?}"
                )))
            }
        }
        Ok(())
    }

    pub fn trial_seed(&self, index: usize) -> Seed {
        self.master_seed.trial(index as u64)
    }

    /// The experiment matrix of a sampled graph. When `perturb_eps` is set the
    /// Gaussian noise is seeded from `seed` (the graph's own trial seed).
    pub fn matrix(&self, graph: &Graph, seed: Seed) -> Result<SymMatrix> {
        let a = graphgen::adjacency_matrix(graph);
        let m = normalize(&a, self.model, self.normalization)?;
        match self.perturb_eps {
            Some(eps) => eigensolve::gaussian_perturb(&m, eps, perturbation_seed(seed).0),
            None => Ok(m),
        }
    }

    /// Graph and experiment matrix of trial `index`.
    pub fn trial_matrix(&self, seed: Seed) -> Result<(Graph, SymMatrix)> {
        let g = self.model.sample(self.n, seed)?;
        let m = self.matrix(&g, seed)?;
        Ok((g, m))
    }
}

/// Seed of the Gaussian perturbation attached to a trial.
pub(crate) fn perturbation_seed(trial: Seed) -> Seed {
    trial.trial(1)
}

/// The experiment matrix of an adjacency matrix under `normalization`; `model`
/// supplies `p` or `d`.
pub fn normalize(a: &SymMatrix, model: ModelTemplate, normalization: Normalization) -> Result<SymMatrix> {
    match (normalization, model) {
        (Normalization::RawAdjacency, _) => Ok(a.clone()),
        (Normalization::CenteredGnp, ModelTemplate::Gnp { p }) => eigensolve::normalize_centered_gnp(a, p),
        (Normalization::UncenteredGnp, ModelTemplate::Gnp { p }) => eigensolve::normalize_uncentered_gnp(a, p),
        (Normalization::Regular, ModelTemplate::Gnd { d }) => eigensolve::normalize_regular(a, d),
        (normalization, model) => Err(Error::invalid(format!(
            "normalization {normalization:?} does not apply to {model:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(EnsembleConfig::gnp(100, 0.1, 1, 0).validate().is_ok());
        assert!(EnsembleConfig::gnp(100, 0.1, 0, 0).validate().is_err());
        assert!(EnsembleConfig::gnp(100, 1.0, 1, 0).validate().is_err());
        assert!(EnsembleConfig::gnp(100, 1.0, 1, 0)
            .with_normalization(Normalization::RawAdjacency)
            .validate()
            .is_ok());
        assert!(EnsembleConfig::gnd(9, 3, 1, 0).validate().is_err());
        assert!(EnsembleConfig::gnd(10, 3, 1, 0)
            .with_normalization(Normalization::CenteredGnp)
            .validate()
            .is_err());
        assert!(EnsembleConfig::gnp(10, 0.5, 1, 0).with_perturbation(0.0).validate().is_err());
    }

    #[test]
    fn trial_matrix_is_deterministic() {
        let cfg = EnsembleConfig::gnp(40, 0.3, 3, 9).with_perturbation(1e-3);
        let s = cfg.trial_seed(2);
        assert_eq!(cfg.trial_matrix(s).unwrap(), cfg.trial_matrix(s).unwrap());
        assert_ne!(cfg.trial_matrix(s).unwrap().1, cfg.trial_matrix(cfg.trial_seed(1)).unwrap().1);
    }

    #[test]
    fn normalization_parses() {
        assert_eq!("regular".parse::<Normalization>().unwrap(), Normalization::Regular);
        assert_eq!("raw".parse::<Normalization>().unwrap(), Normalization::RawAdjacency);
        assert!("other".parse::<Normalization>().is_err());
    }
}
