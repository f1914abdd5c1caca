//! Dense symmetric eigensolver and the matrix normalizations used for
//! `G(n, p)` and `G(n, d)` spectra.
//!
//! [`eigendecompose`] reduces to tridiagonal form with Householder
//! reflections and then runs implicit-shift QL, accumulating the rotations
//! into the eigenvectors. [`eigenvalues`] skips the accumulation and costs a
//! fraction of the full decomposition. [`eigenpairs_at`] recovers a handful
//! of eigenvectors by inverse iteration on the tridiagonal form.

mod matrix;
mod tridiagonal;

use rand_distr::{Distribution, StandardNormal};

pub use matrix::SymMatrix;
pub(crate) use matrix::{axpy, dot};

use crate::error::{Error, Result};
use crate::rng::rng_from_seed;
use tridiagonal::{ql_implicit, shifted_tridiagonal_solve, Tridiagonal};

/// Two coordinates whose magnitudes agree to this relative tolerance count as
/// tied for the sign rule, and the lower index decides.
const SIGN_TIE_TOLERANCE: f64 = 1e-12;

/// Full ordered eigensystem of a symmetric matrix.
///
/// Eigenvalues ascend; eigenvector `i` belongs to eigenvalue `i`. Each
/// eigenvector has its largest-magnitude coordinate positive (ties go to the
/// lowest index).
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralDecomposition {
    n: usize,
    eigenvalues: Vec<f64>,
    /// Row-major, row `i` is eigenvector `i`.
    eigenvectors: Vec<f64>,
}

impl SpectralDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvector(&self, i: usize) -> &[f64] {
        &self.eigenvectors[i * self.n..(i + 1) * self.n]
    }

    pub fn eigenvectors(&self) -> impl Iterator<Item = &[f64]> {
        self.eigenvectors.chunks_exact(self.n.max(1))
    }

    pub fn into_eigenvalues(self) -> Vec<f64> {
        self.eigenvalues
    }

    /// `max_i ||M v_i - lambda_i v_i||_2`.
    pub fn max_residual(&self, m: &SymMatrix) -> f64 {
        (0..self.n)
            .map(|i| {
                let v = self.eigenvector(i);
                let mv = m.matvec(v);
                mv.iter()
                    .zip(v)
                    .map(|(a, b)| (a - self.eigenvalues[i] * b).powi(2))
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max)
    }

    /// `max_{i,j} |v_i . v_j - delta_ij|`.
    pub fn max_orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot(self.eigenvector(i), self.eigenvector(j)) - target).abs());
            }
        }
        worst
    }

    /// Smallest gap between consecutive eigenvalues (infinite when `n < 2`).
    pub fn min_gap(&self) -> f64 {
        min_gap(&self.eigenvalues)
    }
}

pub(crate) fn min_gap(sorted: &[f64]) -> f64 {
    sorted.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min)
}

fn check_input(m: &SymMatrix) -> Result<()> {
    if m.n() == 0 {
        return Err(Error::invalid("matrix must be at least 1x1"));
    }
    if !m.is_finite() {
        return Err(Error::invalid("matrix has non-finite entries"));
    }
    Ok(())
}

/// Makes the largest-magnitude coordinate positive.
pub fn apply_sign_convention(v: &mut [f64]) {
    let max = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if let Some(lead) = v.iter().find(|x| x.abs() >= max * (1.0 - SIGN_TIE_TOLERANCE)) {
        if *lead < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

fn ascending_order(values: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
    order
}

/// Full eigendecomposition.
pub fn eigendecompose(m: &SymMatrix) -> Result<SpectralDecomposition> {
    check_input(m)?;
    let n = m.n();
    let tri = Tridiagonal::reduce(m);
    let mut vt = tri.q_transposed();
    let (mut d, mut e) = (tri.diag, tri.offdiag);
    ql_implicit(&mut d, &mut e, Some(&mut vt))?;

    let order = ascending_order(&d);
    let mut eigenvectors = Vec::with_capacity(n * n);
    for &k in &order {
        let start = eigenvectors.len();
        eigenvectors.extend_from_slice(&vt[k * n..(k + 1) * n]);
        apply_sign_convention(&mut eigenvectors[start..]);
    }
    Ok(SpectralDecomposition {
        n,
        eigenvalues: order.iter().map(|&k| d[k]).collect(),
        eigenvectors,
    })
}

/// Ascending eigenvalues only.
pub fn eigenvalues(m: &SymMatrix) -> Result<Vec<f64>> {
    check_input(m)?;
    let tri = Tridiagonal::reduce(m);
    let (mut d, mut e) = (tri.diag, tri.offdiag);
    ql_implicit(&mut d, &mut e, None)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Ascending eigenvalues together with the eigenvectors at the requested
/// (ascending-order) indices.
///
/// Vectors come from inverse iteration on the tridiagonal form, which is only
/// reliable for well separated eigenvalues; when a requested eigenvalue has a
/// close neighbour this falls back to the full decomposition.
pub fn eigenpairs_at(m: &SymMatrix, indices: &[usize]) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    check_input(m)?;
    let n = m.n();
    if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
        return Err(Error::invalid(format!("eigenvalue index {bad} out of range for n = {n}")));
    }
    let tri = Tridiagonal::reduce(m);
    let (mut d, mut e) = (tri.diag.clone(), tri.offdiag.clone());
    ql_implicit(&mut d, &mut e, None)?;
    d.sort_by(f64::total_cmp);

    let scale = tri.diag.iter().chain(&tri.offdiag).fold(1.0f64, |s, x| s.max(x.abs()));
    let separated = |i: usize| {
        let below = if i > 0 { d[i] - d[i - 1] } else { f64::INFINITY };
        let above = if i + 1 < n { d[i + 1] - d[i] } else { f64::INFINITY };
        below.min(above) > 1e-8 * scale
    };
    if !indices.iter().all(|&i| separated(i)) {
        let full = eigendecompose(m)?;
        let vectors = indices.iter().map(|&i| full.eigenvector(i).to_vec()).collect();
        return Ok((full.into_eigenvalues(), vectors));
    }

    let mut vectors = Vec::with_capacity(indices.len());
    for &i in indices {
        let lambda = d[i];
        let mut z: Vec<f64> = (0..n).map(|k| 1.0 + ((k * 7919) % 101) as f64 / 101.0).collect();
        let mut converged = false;
        for _ in 0..8 {
            shifted_tridiagonal_solve(&tri.diag, &tri.offdiag, lambda, &mut z);
            let norm = dot(&z, &z).sqrt();
            if !norm.is_finite() || norm == 0.0 {
                break;
            }
            z.iter_mut().for_each(|x| *x /= norm);
            if tridiagonal_residual(&tri.diag, &tri.offdiag, lambda, &z) <= 1e-13 * scale {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NumericFailure(format!(
                "inverse iteration did not converge for eigenvalue index {i}"
            )));
        }
        tri.back_transform(&mut z);
        apply_sign_convention(&mut z);
        vectors.push(z);
    }
    Ok((d, vectors))
}

fn tridiagonal_residual(diag: &[f64], offdiag: &[f64], lambda: f64, z: &[f64]) -> f64 {
    let n = diag.len();
    (0..n)
        .map(|i| {
            let mut s = (diag[i] - lambda) * z[i];
            if i > 0 {
                s += offdiag[i - 1] * z[i - 1];
            }
            if i + 1 < n {
                s += offdiag[i] * z[i + 1];
            }
            s * s
        })
        .sum::<f64>()
        .sqrt()
}

fn check_open_probability(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::invalid(format!("p = {p} must lie strictly between 0 and 1")));
    }
    Ok((p * (1.0 - p)).sqrt())
}

/// `W = (A - p J) / (sigma sqrt(n))` with `sigma = sqrt(p (1 - p))`.
pub fn normalize_centered_gnp(a: &SymMatrix, p: f64) -> Result<SymMatrix> {
    let sigma = check_open_probability(p)?;
    let scale = sigma * (a.n() as f64).sqrt();
    Ok(a.map(|x| (x - p) / scale))
}

/// `B = A / (sigma sqrt(n))`.
pub fn normalize_uncentered_gnp(a: &SymMatrix, p: f64) -> Result<SymMatrix> {
    let sigma = check_open_probability(p)?;
    let scale = sigma * (a.n() as f64).sqrt();
    Ok(a.map(|x| x / scale))
}

/// `(A - (d/n) J) / sqrt(n (d/n) (1 - d/n))` for the adjacency matrix of a
/// `d`-regular graph.
pub fn normalize_regular(a: &SymMatrix, d: usize) -> Result<SymMatrix> {
    let n = a.n();
    if d == 0 || d >= n {
        return Err(Error::invalid(format!("need 0 < d < n, got d = {d}, n = {n}")));
    }
    let q = d as f64 / n as f64;
    let scale = (q * (1.0 - q)).sqrt() * (n as f64).sqrt();
    Ok(a.map(|x| (x - q) / scale))
}

/// `M + eps N`, where `N` has independent standard Gaussian entries on and
/// above the diagonal (drawn row by row) mirrored below it.
pub fn gaussian_perturb(m: &SymMatrix, eps: f64, seed: u64) -> Result<SymMatrix> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::invalid(format!("perturbation size {eps} must be positive")));
    }
    let mut rng = rng_from_seed(seed);
    Ok(SymMatrix::from_upper_fn(m.n(), |i, j| {
        let g: f64 = StandardNormal.sample(&mut rng);
        m.get(i, j) + eps * g
    }))
}

/// The `(n-1) x (n-1)` matrix with row and column `k` removed.
pub fn principal_minor(m: &SymMatrix, k: usize) -> Result<SymMatrix> {
    let n = m.n();
    if n < 2 {
        return Err(Error::invalid("a principal minor needs n >= 2"));
    }
    if k >= n {
        return Err(Error::invalid(format!("index {k} out of range for n = {n}")));
    }
    let keep = |i: usize| if i < k { i } else { i + 1 };
    Ok(SymMatrix::from_upper_fn(n - 1, |i, j| m.get(keep(i), keep(j))))
}
