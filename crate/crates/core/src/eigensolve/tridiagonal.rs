//! Householder reduction to tridiagonal form and the implicit-shift QL
//! iteration on the resulting tridiagonal matrix.
//!
//! The reduction works on the lower triangle of a row-major copy so that the
//! symmetric matrix-vector product and the rank-two update both stream
//! contiguous row prefixes.

use super::matrix::{axpy, dot, SymMatrix};
use crate::error::{Error, Result};

/// QL sweeps allowed per eigenvalue, as a multiple of `n`.
const MAX_SWEEPS_PER_N: usize = 30;

/// Plane rotations are buffered and applied to the eigenvector rows in
/// column blocks of this width, so a batch of sweeps costs one pass over the
/// eigenvector array instead of one pass per sweep.
const ROTATION_BLOCK_COLS: usize = 32;
/// Buffered rotations per `n` before a flush.
const ROTATION_BATCH_PER_N: usize = 16;

struct Reflector {
    /// Index of the first row the reflector acts on.
    start: usize,
    v: Vec<f64>,
    beta: f64,
}

/// `A = Q T Q^T` with `T` tridiagonal and `Q` the product of the stored
/// reflectors.
pub(crate) struct Tridiagonal {
    pub diag: Vec<f64>,
    /// `offdiag[i]` couples `i` and `i + 1`; the last entry is zero.
    pub offdiag: Vec<f64>,
    reflectors: Vec<Reflector>,
}

impl Tridiagonal {
    pub fn reduce(m: &SymMatrix) -> Self {
        let n = m.n();
        let mut a = m.as_slice().to_vec();
        let mut diag = vec![0.0; n];
        let mut offdiag = vec![0.0; n];
        let mut reflectors = Vec::with_capacity(n.saturating_sub(2));
        let mut p = vec![0.0; n];

        for k in 0..n.saturating_sub(2) {
            let len = n - k - 1;
            let start = k + 1;
            diag[k] = a[k * n + k];
            let mut v: Vec<f64> = (0..len).map(|t| a[(start + t) * n + k]).collect();

            let scale = v.iter().fold(0.0f64, |s, x| s.max(x.abs()));
            let tail_sq: f64 = if scale == 0.0 {
                0.0
            } else {
                v[1..].iter().map(|x| (x / scale) * (x / scale)).sum()
            };
            if tail_sq == 0.0 {
                // Column is already reduced.
                offdiag[k] = v[0];
                continue;
            }
            let x0 = v[0];
            let head = x0 / scale;
            let norm = (head * head + tail_sq).sqrt() * scale;
            let alpha = if x0 > 0.0 { -norm } else { norm };
            v[0] -= alpha;
            let beta = 1.0 / (alpha * (alpha - x0));
            offdiag[k] = alpha;

            // p = beta * S v over the trailing block S, using its lower triangle.
            let p = &mut p[..len];
            p.fill(0.0);
            for r in 0..len {
                let row = &a[(start + r) * n + start..(start + r) * n + start + r + 1];
                let (below, d) = row.split_at(r);
                let acc = dot(below, &v[..r]);
                axpy(&mut p[..r], v[r], below);
                p[r] += acc + d[0] * v[r];
            }
            p.iter_mut().for_each(|x| *x *= beta);
            let k_coef = 0.5 * beta * dot(p, &v);
            axpy(p, -k_coef, &v);
            // S -= v w^T + w v^T with w = p.
            for r in 0..len {
                let row = &mut a[(start + r) * n + start..(start + r) * n + start + r + 1];
                axpy(row, -v[r], &p[..=r]);
                axpy(row, -p[r], &v[..=r]);
            }
            reflectors.push(Reflector { start, v, beta });
        }
        if n >= 2 {
            diag[n - 2] = a[(n - 2) * n + n - 2];
            offdiag[n - 2] = a[(n - 1) * n + n - 2];
        }
        if n >= 1 {
            diag[n - 1] = a[n * n - 1];
        }
        Tridiagonal {
            diag,
            offdiag,
            reflectors,
        }
    }

    /// `Q^T` as a row-major `n x n` array (row `i` is column `i` of `Q`).
    pub fn q_transposed(&self) -> Vec<f64> {
        let n = self.diag.len();
        let mut q = vec![0.0; n * n];
        for i in 0..n {
            q[i * n + i] = 1.0;
        }
        let mut w = vec![0.0; n];
        // Backward accumulation Q = H_0 (H_1 (... H_last)); at step k only
        // rows and columns >= start are touched.
        for refl in self.reflectors.iter().rev() {
            let s = refl.start;
            let w = &mut w[s..];
            w.fill(0.0);
            for (r, &vr) in refl.v.iter().enumerate() {
                axpy(w, vr, &q[(s + r) * n + s..(s + r + 1) * n]);
            }
            for (r, &vr) in refl.v.iter().enumerate() {
                axpy(&mut q[(s + r) * n + s..(s + r + 1) * n], -refl.beta * vr, w);
            }
        }
        transpose_in_place(&mut q, n);
        q
    }

    /// Maps an eigenvector `z` of `T` to the eigenvector `Q z` of `A`.
    pub fn back_transform(&self, z: &mut [f64]) {
        for refl in self.reflectors.iter().rev() {
            let seg = &mut z[refl.start..];
            let t = refl.beta * dot(&refl.v, seg);
            axpy(seg, -t, &refl.v);
        }
    }
}

fn transpose_in_place(a: &mut [f64], n: usize) {
    for i in 0..n {
        for j in (i + 1)..n {
            a.swap(i * n + j, j * n + i);
        }
    }
}

/// Implicit-shift QL on a symmetric tridiagonal matrix.
///
/// On return `diag` holds the (unsorted) eigenvalues. When `vectors_t` is
/// given, it must hold `n` rows of length `n`; every plane rotation is applied
/// to pairs of its rows, so row `i` ends up as the eigenvector for `diag[i]`.
pub(crate) fn ql_implicit(diag: &mut [f64], offdiag: &mut [f64], mut vectors_t: Option<&mut [f64]>) -> Result<()> {
    let n = diag.len();
    if n == 0 {
        return Ok(());
    }
    offdiag[n - 1] = 0.0;
    let max_sweeps = MAX_SWEEPS_PER_N * n;
    let mut pending: Vec<(usize, f64, f64)> = Vec::new();
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                let e = offdiag[m].abs();
                if e <= f64::EPSILON * dd || e < f64::MIN_POSITIVE {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > max_sweeps {
                return Err(Error::NumericFailure(format!(
                    "QL iteration did not converge for eigenvalue {l} after {max_sweeps} shifts"
                )));
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * offdiag[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + offdiag[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0f64, 1.0f64, 0.0f64);
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * offdiag[i];
                let b = c * offdiag[i];
                r = f.hypot(g);
                offdiag[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    offdiag[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                if vectors_t.is_some() {
                    pending.push((i, c, s));
                }
            }
            if underflow {
                continue;
            }
            diag[l] -= p;
            offdiag[l] = g;
            offdiag[m] = 0.0;
            if let Some(vt) = vectors_t.as_deref_mut() {
                if pending.len() >= ROTATION_BATCH_PER_N * n {
                    apply_rotations(vt, n, &pending);
                    pending.clear();
                }
            }
        }
    }
    if let Some(vt) = vectors_t {
        apply_rotations(vt, n, &pending);
    }
    Ok(())
}

/// Applies `(i, c, s)` rotations, in order, to rows `i` and `i + 1` of the
/// row-major `n`-column array `vt`. Columns are independent, so the batch is
/// run block by block.
fn apply_rotations(vt: &mut [f64], n: usize, rotations: &[(usize, f64, f64)]) {
    if rotations.is_empty() {
        return;
    }
    for col in (0..n).step_by(ROTATION_BLOCK_COLS) {
        let width = ROTATION_BLOCK_COLS.min(n - col);
        for &(i, c, s) in rotations {
            let (upper, lower) = vt.split_at_mut((i + 1) * n);
            let ri = &mut upper[i * n + col..i * n + col + width];
            let rj = &mut lower[col..col + width];
            for (x, y) in ri.iter_mut().zip(rj.iter_mut()) {
                let h = *y;
                *y = s * *x + c * h;
                *x = c * *x - s * h;
            }
        }
    }
}

/// Solves `(T - shift) x = b` for a symmetric tridiagonal `T` by Gaussian
/// elimination with partial pivoting. Zero pivots are replaced by a tiny
/// value, which is what inverse iteration wants.
pub(crate) fn shifted_tridiagonal_solve(diag: &[f64], offdiag: &[f64], shift: f64, b: &mut [f64]) {
    let n = diag.len();
    let tiny = f64::EPSILON * diag.iter().chain(offdiag).fold(f64::MIN_POSITIVE, |m, x| m.max(x.abs()));
    // Row i of the eliminated system: u0[i] x_i + u1[i] x_{i+1} + u2[i] x_{i+2}.
    let mut u0 = vec![0.0; n];
    let mut u1 = vec![0.0; n];
    let mut u2 = vec![0.0; n];
    // Current working row (pivot candidate) coefficients.
    let mut cur_d = diag.first().map_or(0.0, |d| d - shift);
    let mut cur_e = if n > 1 { offdiag[0] } else { 0.0 };
    let mut cur_f = 0.0;
    for i in 0..n {
        if i + 1 == n {
            u0[i] = if cur_d == 0.0 { tiny } else { cur_d };
            break;
        }
        let sub = offdiag[i];
        let next_d = diag[i + 1] - shift;
        let next_e = if i + 2 < n { offdiag[i + 1] } else { 0.0 };
        if cur_d.abs() >= sub.abs() {
            let piv = if cur_d == 0.0 { tiny } else { cur_d };
            let mult = sub / piv;
            u0[i] = piv;
            u1[i] = cur_e;
            u2[i] = cur_f;
            b[i + 1] -= mult * b[i];
            cur_d = next_d - mult * cur_e;
            cur_e = next_e - mult * cur_f;
            cur_f = 0.0;
        } else {
            // Swap the working row with row i + 1.
            let mult = cur_d / sub;
            u0[i] = sub;
            u1[i] = next_d;
            u2[i] = next_e;
            b.swap(i, i + 1);
            b[i + 1] -= mult * b[i];
            let (d2, e2) = (cur_e - mult * next_d, cur_f - mult * next_e);
            cur_d = d2;
            cur_e = e2;
            cur_f = 0.0;
        }
    }
    for i in (0..n).rev() {
        let mut x = b[i];
        if i + 1 < n {
            x -= u1[i] * b[i + 1];
        }
        if i + 2 < n {
            x -= u2[i] * b[i + 2];
        }
        b[i] = x / u0[i];
    }
}
