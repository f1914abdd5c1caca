use serde::{Deserialize, Serialize};

use super::config::{EnsembleConfig, ModelTemplate};
use super::delocalization::inf_norm;
use super::runner::run_trials;
use crate::cli_io::Seed;
use crate::eigensolve;
use crate::error::{Error, Result};
use crate::graphgen::{self, degree_sequence};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TopEigenTrial {
    pub index: usize,
    pub seed: Seed,
    pub lambda_max: f64,
    pub max_degree: usize,
    pub top_inf_norm: f64,
    /// `sqrt(max_degree) / lambda_max`, an upper bound for `top_inf_norm`.
    pub inf_norm_bound: f64,
    pub lambda_in_window: bool,
    pub degree_in_window: bool,
    pub inequality_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TopEigenReport {
    pub np: f64,
    /// `[np - 3 sqrt(np), np + 3 sqrt(np)]`.
    pub lambda_window: (f64, f64),
    /// `[0.9 np, 1.1 np]`.
    pub degree_window: (f64, f64),
    pub trials: Vec<TopEigenTrial>,
}

impl TopEigenReport {
    pub fn lambda_flags(&self) -> usize {
        self.trials.iter().filter(|t| !t.lambda_in_window).count()
    }

    pub fn degree_flags(&self) -> usize {
        self.trials.iter().filter(|t| !t.degree_in_window).count()
    }

    pub fn inequality_failures(&self) -> usize {
        self.trials.iter().filter(|t| !t.inequality_holds).count()
    }
}

/// Largest adjacency eigenvalue, maximum degree and the top eigenvector of
/// `G(n, p)` samples. The normalization of `cfg` is ignored: this works on `A`.
///
/// The sup-norm bound follows from `lambda u_i = sum_{j ~ i} u_j` and
/// Cauchy–Schwarz: `|u_i| <= sqrt(deg i) / lambda` for a unit vector `u`.
pub fn run_top_eigen_check(cfg: &EnsembleConfig) -> Result<TopEigenReport> {
    let p = match cfg.model {
        ModelTemplate::Gnp { p } => p,
        ModelTemplate::Gnd { .. } => return Err(Error::invalid("the top eigenvalue check runs on G(n, p)")),
    };
    if cfg.trials == 0 || cfg.n == 0 {
        return Err(Error::invalid("need n >= 1 and at least one trial"));
    }
    let np = cfg.n as f64 * p;
    let slack = 3.0 * np.sqrt();
    let lambda_window = (np - slack, np + slack);
    let degree_window = (0.9 * np, 1.1 * np);
    let n = cfg.n;
    let trials = run_trials(cfg.master_seed, cfg.trials, |index, seed| {
        let g = graphgen::sample_gnp(n, p, seed.0)?;
        let max_degree = degree_sequence(&g).into_iter().max().unwrap_or(0);
        let (values, vectors) = eigensolve::eigenpairs_at(&graphgen::adjacency_matrix(&g), &[n - 1])?;
        let lambda_max = values[n - 1];
        let top_inf_norm = inf_norm(&vectors[0]);
        let inf_norm_bound = (max_degree as f64).sqrt() / lambda_max;
        Ok(TopEigenTrial {
            index,
            seed,
            lambda_max,
            max_degree,
            top_inf_norm,
            inf_norm_bound,
            lambda_in_window: lambda_window.0 <= lambda_max && lambda_max <= lambda_window.1,
            degree_in_window: degree_window.0 <= max_degree as f64 && max_degree as f64 <= degree_window.1,
            // relative slack covers the rounding in the computed eigenpair
            inequality_holds: lambda_max > 0.0 && top_inf_norm <= inf_norm_bound * (1.0 + 1e-12),
        })
    })?;
    Ok(TopEigenReport {
        np,
        lambda_window,
        degree_window,
        trials,
    })
}
