use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use super::runner::run_trials;
use crate::cli_io::Seed;
use crate::eigensolve::{axpy, dot};
use crate::error::{Error, Result};
use crate::rng::rng_from_seed;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProjectionTrial {
    pub index: usize,
    pub seed: Seed,
    /// `||pi_H(Y)||`.
    pub norm: f64,
    /// `| ||pi_H(Y)|| - sigma sqrt(dim) |`.
    pub deviation: f64,
    pub exceeded: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProjectionReport {
    pub n: usize,
    pub p: f64,
    pub dim: usize,
    pub t: f64,
    pub sigma: f64,
    /// `sigma sqrt(dim)`.
    pub expected_norm: f64,
    /// `10 exp(-t^2 / 4)`, the per-trial deviation probability bound.
    pub bound: f64,
    pub mean_norm: f64,
    pub exceed_count: usize,
    pub deviation_frequency: f64,
    pub trials: Vec<ProjectionTrial>,
}

/// Orthonormal basis (rows) of a uniformly random `dim`-dimensional subspace
/// of `R^n`: a Gaussian frame run through modified Gram–Schmidt.
pub fn random_subspace<R: Rng>(n: usize, dim: usize, rng: &mut R) -> Result<Vec<Vec<f64>>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(dim);
    for _ in 0..dim {
        let mut v: Vec<f64> = (0..n).map(|_| StandardNormal.sample(rng)).collect();
        for q in &basis {
            let c = dot(q, &v);
            axpy(&mut v, -c, q);
        }
        let norm = dot(&v, &v).sqrt();
        if !(norm > 1e-10) {
            return Err(Error::NumericFailure("Gaussian frame is numerically rank deficient".into()));
        }
        v.iter_mut().for_each(|x| *x /= norm);
        basis.push(v);
    }
    Ok(basis)
}

/// `||pi_H(y)||` for `H` spanned by the orthonormal rows of `basis`.
pub fn projection_norm(basis: &[Vec<f64>], y: &[f64]) -> f64 {
    basis.iter().map(|q| dot(q, y).powi(2)).sum::<f64>().sqrt()
}

/// Projects `Y` with i.i.d. entries `xi - p`, `xi ~ Bernoulli(p)`, onto a
/// fresh random `dim`-dimensional subspace per trial and records how often
/// the norm leaves `sigma sqrt(dim) +- t`.
pub fn run_projection_concentration(
    n: usize,
    p: f64,
    dim: usize,
    t: f64,
    trials: usize,
    master_seed: Seed,
) -> Result<ProjectionReport> {
    if dim == 0 || dim > n {
        return Err(Error::invalid(format!("need 1 <= dim <= n, got dim = {dim}, n = {n}")));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::invalid(format!("p = {p} must lie strictly between 0 and 1")));
    }
    if !(t >= 0.0) || trials == 0 {
        return Err(Error::invalid("need t >= 0 and at least one trial"));
    }
    let sigma = (p * (1.0 - p)).sqrt();
    let expected_norm = sigma * (dim as f64).sqrt();
    let trials = run_trials(master_seed, trials, |index, seed| {
        let mut rng = rng_from_seed(seed.0);
        // Y first, then the frame, both from the trial's stream
        let y: Vec<f64> = (0..n)
            .map(|_| if rng.random::<f64>() < p { 1.0 - p } else { -p })
            .collect();
        let basis = random_subspace(n, dim, &mut rng)?;
        let norm = projection_norm(&basis, &y);
        let deviation = (norm - expected_norm).abs();
        Ok(ProjectionTrial {
            index,
            seed,
            norm,
            deviation,
            exceeded: deviation >= t,
        })
    })?;
    let exceed_count = trials.iter().filter(|t| t.exceeded).count();
    Ok(ProjectionReport {
        n,
        p,
        dim,
        t,
        sigma,
        expected_norm,
        bound: 10.0 * (-t * t / 4.0).exp(),
        mean_norm: trials.iter().map(|t| t.norm).sum::<f64>() / trials.len() as f64,
        exceed_count,
        deviation_frequency: exceed_count as f64 / trials.len() as f64,
        trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_is_orthonormal() {
        let mut rng = rng_from_seed(1);
        let b = random_subspace(30, 12, &mut rng).unwrap();
        for i in 0..12 {
            for j in 0..12 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((dot(&b[i], &b[j]) - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn full_space_keeps_the_norm() {
        let mut rng = rng_from_seed(2);
        let n = 40;
        let b = random_subspace(n, n, &mut rng).unwrap();
        let y: Vec<f64> = (0..n).map(|i| (i as f64).sin()).collect();
        assert!((projection_norm(&b, &y) - dot(&y, &y).sqrt()).abs() < 1e-10);
    }

    #[test]
    fn small_ensemble_concentrates() {
        let r = run_projection_concentration(400, 0.3, 40, 6.0, 30, Seed(3)).unwrap();
        assert_eq!(r.exceed_count, 0);
        assert!((r.mean_norm - r.expected_norm).abs() < 0.5);
        assert!(run_projection_concentration(10, 0.3, 11, 1.0, 1, Seed(0)).is_err());
    }
}
