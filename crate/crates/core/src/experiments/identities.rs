//! Exact matrix identities behind the spectral arguments, checked numerically.
//!
//! Each check returns an [`IdentityReport`] whose residual is zero (counting
//! identities) or at rounding level (analytic identities).

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use super::runner::run_trials;
use crate::cli_io::Seed;
use crate::eigensolve::{self, dot, SymMatrix};
use crate::error::{Error, Result};
use crate::graphgen;
use crate::rng::rng_from_seed;
use crate::spectral_laws::{stieltjes_semicircle, Esd, Interval};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCase {
    pub index: usize,
    /// Absent for checks on a caller-supplied matrix.
    pub seed: Option<Seed>,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub cases: usize,
    pub max_abs_residual: f64,
    /// Seed of the first case attaining `max_abs_residual`, if cases are seeded.
    pub worst_case_seed: Option<Seed>,
    pub trials: Vec<IdentityCase>,
}

impl IdentityReport {
    /// Cases whose residual exceeds `tol`; `count_above(0.0)` counts every
    /// violation of a counting identity.
    pub fn count_above(&self, tol: f64) -> usize {
        self.trials.iter().filter(|c| c.residual > tol).count()
    }

    fn from_cases(trials: Vec<IdentityCase>) -> Self {
        let mut worst = 0;
        for (i, c) in trials.iter().enumerate() {
            if c.residual > trials[worst].residual {
                worst = i;
            }
        }
        IdentityReport {
            cases: trials.len(),
            max_abs_residual: trials.iter().fold(0.0, |m, c| m.max(c.residual)),
            worst_case_seed: trials.get(worst).and_then(|c| c.seed),
            trials,
        }
    }

    fn single(residual: f64) -> Self {
        Self::from_cases(vec![IdentityCase {
            index: 0,
            seed: None,
            residual,
        }])
    }

    /// Concatenates reports, renumbering cases.
    pub fn merge(reports: Vec<IdentityReport>) -> Self {
        let trials = reports
            .into_iter()
            .flat_map(|r| r.trials)
            .enumerate()
            .map(|(index, c)| IdentityCase { index, ..c })
            .collect();
        Self::from_cases(trials)
    }
}

/// Symmetric matrix with independent `N(0, 1/n)` entries on and above the diagonal.
pub fn random_symmetric<R: Rng>(n: usize, rng: &mut R) -> SymMatrix {
    let s = 1.0 / (n as f64).sqrt();
    SymMatrix::from_upper_fn(n, |_, _| {
        let g: f64 = StandardNormal.sample(rng);
        s * g
    })
}

fn gaussian_vector<R: Rng>(n: usize, rng: &mut R) -> Vec<f64> {
    (0..n).map(|_| StandardNormal.sample(rng)).collect()
}

/// `N_I(A + alpha v v^T) - N_I(A)`.
pub fn rank_one_count_difference(a: &SymMatrix, alpha: f64, v: &[f64], interval: &Interval) -> Result<i64> {
    let before = Esd::new(eigensolve::eigenvalues(a)?)?.count_in(interval);
    let after = Esd::new(eigensolve::eigenvalues(&a.rank_one_update(alpha, v)?)?)?.count_in(interval);
    Ok(after as i64 - before as i64)
}

/// Random `n x n` symmetric `A`, rank-one `B = +-v v^T` and random intervals:
/// the residual of a case is `max(0, |N_I(A + B) - N_I(A)| - 1)` over its
/// intervals. Any non-zero residual is a violation.
pub fn check_rank_one_interlacing(n: usize, trials: usize, master_seed: Seed) -> Result<IdentityReport> {
    const INTERVALS_PER_CASE: usize = 4;
    if n == 0 || trials == 0 {
        return Err(Error::invalid("need n >= 1 and at least one case"));
    }
    let cases = run_trials(master_seed, trials, |index, seed| {
        let mut rng = rng_from_seed(seed.0);
        let a = random_symmetric(n, &mut rng);
        let v = gaussian_vector(n, &mut rng);
        let alpha = if rng.random::<bool>() { 1.0 } else { -1.0 };
        let before = Esd::new(eigensolve::eigenvalues(&a)?)?;
        let after = Esd::new(eigensolve::eigenvalues(&a.rank_one_update(alpha, &v)?)?)?;
        let mut residual: f64 = 0.0;
        for _ in 0..INTERVALS_PER_CASE {
            let x: f64 = rng.random_range(-3.0..3.0);
            let y: f64 = rng.random_range(-3.0..3.0);
            let interval = Interval::new(x.min(y), x.max(y))?;
            let diff = after.count_in(&interval) as i64 - before.count_in(&interval) as i64;
            residual = residual.max((diff.abs() - 1).max(0) as f64);
        }
        Ok(IdentityCase {
            index,
            seed: Some(seed),
            residual,
        })
    })?;
    Ok(IdentityReport::from_cases(cases))
}

/// Largest violation of `lambda_i(M) <= lambda_i(M_k) <= lambda_{i+1}(M)`.
pub fn minor_interlacing_violation(m: &SymMatrix, k: usize) -> Result<f64> {
    let outer = eigensolve::eigenvalues(m)?;
    let inner = eigensolve::eigenvalues(&eigensolve::principal_minor(m, k)?)?;
    Ok(inner
        .iter()
        .enumerate()
        .map(|(i, &mu)| (outer[i] - mu).max(mu - outer[i + 1]).max(0.0))
        .fold(0.0, f64::max))
}

/// Cauchy interlacing for a random principal minor of random symmetric matrices.
pub fn check_minor_interlacing(n: usize, trials: usize, master_seed: Seed) -> Result<IdentityReport> {
    if n < 2 || trials == 0 {
        return Err(Error::invalid("need n >= 2 and at least one case"));
    }
    let cases = run_trials(master_seed, trials, |index, seed| {
        let mut rng = rng_from_seed(seed.0);
        let m = random_symmetric(n, &mut rng);
        let k = rng.random_range(0..n);
        Ok(IdentityCase {
            index,
            seed: Some(seed),
            residual: minor_interlacing_violation(&m, k)?,
        })
    })?;
    Ok(IdentityReport::from_cases(cases))
}

/// Both sides of `s_n(z) = (1/n) sum_k 1 / (m_kk - z - a_k^T (M_k - z)^{-1} a_k)`,
/// where `M_k` drops row and column `k` and `a_k` is column `k` without entry `k`.
/// The inner resolvent uses the eigendecomposition of `M_k`.
pub fn minor_stieltjes_sides(m: &SymMatrix, z: Complex64) -> Result<(Complex64, Complex64)> {
    if !(z.im > 0.0) {
        return Err(Error::invalid(format!("need Im z > 0, got {z}")));
    }
    let n = m.n();
    let lhs = Esd::new(eigensolve::eigenvalues(m)?)?.stieltjes(z)?;
    if n == 1 {
        return Ok((lhs, (Complex64::new(m.get(0, 0), 0.0) - z).inv()));
    }
    let mut rhs = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let minor = eigensolve::principal_minor(m, k)?;
        let dec = eigensolve::eigendecompose(&minor)?;
        let a: Vec<f64> = (0..n).filter(|&j| j != k).map(|j| m.get(j, k)).collect();
        let quad: Complex64 = dec
            .eigenvalues()
            .iter()
            .zip(dec.eigenvectors())
            .map(|(&mu, u)| Complex64::new(dot(u, &a).powi(2), 0.0) / (Complex64::new(mu, 0.0) - z))
            .sum();
        let denom = Complex64::new(m.get(k, k), 0.0) - z - quad;
        if denom.norm() == 0.0 || !denom.is_finite() {
            return Err(Error::NumericFailure(format!("singular minor resolvent at k = {k}")));
        }
        rhs += denom.inv();
    }
    Ok((lhs, rhs / n as f64))
}

pub fn check_minor_stieltjes_identity(m: &SymMatrix, z: Complex64) -> Result<IdentityReport> {
    let (lhs, rhs) = minor_stieltjes_sides(m, z)?;
    Ok(IdentityReport::single((lhs - rhs).norm()))
}

/// The minor Stieltjes identity on random symmetric `n x n` matrices.
pub fn run_minor_stieltjes_checks(n: usize, z: Complex64, trials: usize, master_seed: Seed) -> Result<IdentityReport> {
    if n == 0 || trials == 0 {
        return Err(Error::invalid("need n >= 1 and at least one case"));
    }
    let cases = run_trials(master_seed, trials, |index, seed| {
        let m = random_symmetric(n, &mut rng_from_seed(seed.0));
        let (lhs, rhs) = minor_stieltjes_sides(&m, z)?;
        Ok(IdentityCase {
            index,
            seed: Some(seed),
            residual: (lhs - rhs).norm(),
        })
    })?;
    Ok(IdentityReport::from_cases(cases))
}

/// Minor eigenvalues closer than this (relative to `max(1, ||M||_F)`) to the
/// target eigenvalue count as shared.
const SHARED_EIGENVALUE_TOLERANCE: f64 = 1e-13;

/// Squared first coordinate of the `i`-th eigenvector of `M = [[a, X^T], [X, B]]`
/// from `1 / (1 + sum_j (mu_j - lambda_i)^-2 (u_j^T X)^2)`, where `mu_j, u_j`
/// are the eigenpairs of `B`. Returns `(formula, actual)`.
pub fn eigvec_entry_sides(m: &SymMatrix, i: usize) -> Result<(f64, f64)> {
    let n = m.n();
    if n < 2 {
        return Err(Error::invalid("need n >= 2"));
    }
    if i >= n {
        return Err(Error::invalid(format!("eigenvalue index {i} out of range for n = {n}")));
    }
    let full = eigensolve::eigendecompose(m)?;
    let minor = eigensolve::eigendecompose(&eigensolve::principal_minor(m, 0)?)?;
    entry_formula(m, &full, &minor, i)
}

fn entry_formula(
    m: &SymMatrix,
    full: &eigensolve::SpectralDecomposition,
    minor: &eigensolve::SpectralDecomposition,
    i: usize,
) -> Result<(f64, f64)> {
    let lambda = full.eigenvalues()[i];
    let tol = SHARED_EIGENVALUE_TOLERANCE * m.frobenius_norm().max(1.0);
    if let Some(mu) = minor.eigenvalues().iter().find(|&&mu| (mu - lambda).abs() <= tol) {
        return Err(Error::DegenerateInput(format!(
            "minor eigenvalue {mu} coincides with eigenvalue {lambda}"
        )));
    }
    let x: Vec<f64> = (1..m.n()).map(|j| m.get(j, 0)).collect();
    let weights: Vec<f64> = minor.eigenvectors().map(|u| dot(u, &x).powi(2)).collect();
    let gaps = secular_gaps(m.get(0, 0), minor.eigenvalues(), &weights, lambda);
    let sum: f64 = weights.iter().zip(&gaps).map(|(w, g)| w / (g * g)).sum();
    Ok((1.0 / (1.0 + sum), full.eigenvector(i)[0].powi(2)))
}

/// `lambda - mu_j` for every minor eigenvalue, with `lambda` polished as a
/// root of `lambda - a - sum_j w_j / (lambda - mu_j) = 0`.
///
/// Subtracting two eigenvalues that each carry an absolute error of order
/// `eps ||M||` loses all relative accuracy when `lambda` sits next to some
/// `mu_k`. Newton steps on the offset `delta = lambda - mu_k` recover it: the
/// step error is then of order `eps |delta|`.
fn secular_gaps(a: f64, mu: &[f64], weights: &[f64], lambda: f64) -> Vec<f64> {
    let Some(k) = (0..mu.len()).min_by(|&p, &q| (mu[p] - lambda).abs().total_cmp(&(mu[q] - lambda).abs())) else {
        return Vec::new();
    };
    let offsets: Vec<f64> = mu.iter().map(|&m| mu[k] - m).collect();
    let secular = |delta: f64| {
        let mut f = mu[k] + delta - a;
        let mut df = 1.0;
        for (w, o) in weights.iter().zip(&offsets) {
            let g = o + delta;
            f -= w / g;
            df += w / (g * g);
        }
        (f, df)
    };
    let mut delta = lambda - mu[k];
    let (mut f, mut df) = secular(delta);
    for _ in 0..8 {
        let next = delta - f / df;
        // never cross a pole
        if !next.is_finite() || next == 0.0 || next.signum() != delta.signum() {
            break;
        }
        let (fn_, dfn) = secular(next);
        if fn_.abs() >= f.abs() {
            break;
        }
        (delta, f, df) = (next, fn_, dfn);
    }
    offsets.iter().map(|o| o + delta).collect()
}

fn relative_error(formula: f64, actual: f64) -> f64 {
    (formula - actual).abs() / actual.max(f64::MIN_POSITIVE)
}

/// Relative error of the eigenvector-entry formula for eigenvalue `i`.
pub fn check_eigvec_entry_identity(m: &SymMatrix, i: usize) -> Result<IdentityReport> {
    let (formula, actual) = eigvec_entry_sides(m, i)?;
    Ok(IdentityReport::single(relative_error(formula, actual)))
}

/// The eigenvector-entry formula for every eigenvalue of `m`.
pub fn check_eigvec_entry_identity_all(m: &SymMatrix) -> Result<IdentityReport> {
    if m.n() < 2 {
        return Err(Error::invalid("need n >= 2"));
    }
    let full = eigensolve::eigendecompose(m)?;
    let minor = eigensolve::eigendecompose(&eigensolve::principal_minor(m, 0)?)?;
    let cases = (0..m.n())
        .map(|i| {
            let (formula, actual) = entry_formula(m, &full, &minor, i)?;
            Ok(IdentityCase {
                index: i,
                seed: None,
                residual: relative_error(formula, actual),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport::from_cases(cases))
}

/// `G(n, p)` adjacency matrices plus `eps` Gaussian noise, all eigenvalues
/// checked. Case residual is the worst relative error over the eigenvalues.
pub fn run_eigvec_entry_checks(n: usize, p: f64, eps: f64, trials: usize, master_seed: Seed) -> Result<IdentityReport> {
    if trials == 0 {
        return Err(Error::invalid("need at least one case"));
    }
    let cases = run_trials(master_seed, trials, |index, seed| {
        let g = graphgen::sample_gnp(n, p, seed.0)?;
        let m = eigensolve::gaussian_perturb(&graphgen::adjacency_matrix(&g), eps, seed.trial(1).0)?;
        Ok(IdentityCase {
            index,
            seed: Some(seed),
            residual: check_eigvec_entry_identity_all(&m)?.max_abs_residual,
        })
    })?;
    Ok(IdentityReport::from_cases(cases))
}

/// `re_points` evenly spaced real parts in `[re_min, re_max]` for each imaginary part.
pub fn stieltjes_grid(re_min: f64, re_max: f64, re_points: usize, ims: &[f64]) -> Vec<Complex64> {
    let step = if re_points > 1 {
        (re_max - re_min) / (re_points - 1) as f64
    } else {
        0.0
    };
    ims.iter()
        .flat_map(|&im| (0..re_points).map(move |k| Complex64::new(re_min + step * k as f64, im)))
        .collect()
}

/// `|s + 1/(s + z)|` for the semicircle transform at every grid point.
pub fn check_stieltjes_fixed_point(grid: &[Complex64]) -> Result<IdentityReport> {
    let cases = grid
        .iter()
        .enumerate()
        .map(|(index, &z)| {
            let s = stieltjes_semicircle(z)?;
            Ok(IdentityCase {
                index,
                seed: None,
                residual: (s + (s + z).inv()).norm(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport::from_cases(cases))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap() -> SymMatrix {
        SymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap()
    }

    #[test]
    fn rank_one_hand_case() {
        let a = SymMatrix::from_diagonal(&[1.0, 2.0, 3.0]);
        let i = Interval::new(1.5, 2.5).unwrap();
        assert_eq!(rank_one_count_difference(&a, 1.0, &[1.0, 0.0, 0.0], &i).unwrap(), 1);
        let everything = Interval::new(-1e10, 1e10).unwrap();
        assert_eq!(rank_one_count_difference(&a, -1.0, &[1.0, 1.0, 1.0], &everything).unwrap(), 0);
    }

    #[test]
    fn interlacing_has_no_violations() {
        let r = check_rank_one_interlacing(12, 50, Seed(1)).unwrap();
        assert_eq!(r.count_above(0.0), 0);
        assert_eq!(r.max_abs_residual, 0.0);
        assert_eq!(r.worst_case_seed, Some(Seed(1).trial(0)));
        assert_eq!(check_minor_interlacing(10, 30, Seed(2)).unwrap().count_above(0.0), 0);
    }

    #[test]
    fn minor_stieltjes_hand_case() {
        let (lhs, rhs) = minor_stieltjes_sides(&swap(), Complex64::new(0.0, 1.0)).unwrap();
        assert!((lhs - Complex64::new(0.0, 0.5)).norm() < 1e-15);
        assert!((rhs - Complex64::new(0.0, 0.5)).norm() < 1e-15);
        assert!(minor_stieltjes_sides(&swap(), Complex64::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn minor_stieltjes_diagonal_and_random() {
        let z = Complex64::new(0.3, 0.1);
        let d = SymMatrix::from_diagonal(&[0.5, -1.0, 2.0]);
        assert!(check_minor_stieltjes_identity(&d, z).unwrap().max_abs_residual < 1e-15);
        let r = run_minor_stieltjes_checks(20, z, 5, Seed(3)).unwrap();
        assert!(r.max_abs_residual < 1e-10, "{}", r.max_abs_residual);
    }

    #[test]
    fn eigvec_entry_hand_cases() {
        let (formula, actual) = eigvec_entry_sides(&swap(), 1).unwrap();
        assert!((formula - 0.5).abs() < 1e-15);
        assert!((actual - 0.5).abs() < 1e-15);
        let shared = SymMatrix::identity(2);
        assert!(matches!(check_eigvec_entry_identity(&shared, 0), Err(Error::DegenerateInput(_))));
        let r = run_eigvec_entry_checks(12, 0.4, 0.01, 5, Seed(4)).unwrap();
        assert!(r.max_abs_residual < 1e-8, "{}", r.max_abs_residual);
    }

    #[test]
    fn fixed_point_grid() {
        let grid = stieltjes_grid(-3.0, 3.0, 50, &[0.1, 1.0]);
        assert_eq!(grid.len(), 100);
        assert_eq!(grid[49], Complex64::new(3.0, 0.1));
        let r = check_stieltjes_fixed_point(&grid).unwrap();
        assert!(r.max_abs_residual <= 1e-12);
        assert_eq!(r.worst_case_seed, None);
    }
}
