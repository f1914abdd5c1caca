//! Helpers shared by the eigensolver contract tests and the acceptance run.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use specgraph::eigensolve::{self, SpectralDecomposition, SymMatrix};
use specgraph::graphgen::{adjacency_matrix, sample_gnp, sample_regular};
use specgraph::rng::rng_from_seed;

/// `(name, value, limit)` of a violated invariant.
pub type Violation = (&'static str, f64, f64);

/// Contract violations of one decomposition.
pub fn contract_violations(m: &SymMatrix, dec: &SpectralDecomposition) -> Vec<Violation> {
    let n = m.n();
    let scale = m.frobenius_norm().max(1.0);
    let mut bad = Vec::new();
    let residual = dec.max_residual(m);
    if residual > 1e-10 * scale {
        bad.push(("residual", residual, 1e-10 * scale));
    }
    let ortho = dec.max_orthonormality_error();
    if ortho > 1e-10 {
        bad.push(("orthonormality", ortho, 1e-10));
    }
    let sum: f64 = dec.eigenvalues().iter().sum();
    let trace = m.trace();
    if (sum - trace).abs() > 1e-8 * trace.abs().max(1.0) {
        bad.push(("trace", (sum - trace).abs(), 1e-8 * trace.abs().max(1.0)));
    }
    let squares: f64 = dec.eigenvalues().iter().map(|l| l * l).sum();
    let frob2 = m.frobenius_norm().powi(2);
    if (squares - frob2).abs() > 1e-8 * frob2.max(1.0) {
        bad.push(("frobenius", (squares - frob2).abs(), 1e-8 * frob2.max(1.0)));
    }
    if dec.eigenvalues().windows(2).any(|w| w[0] > w[1]) {
        bad.push(("ascending", 1.0, 0.0));
    }
    for i in 0..n {
        let v = dec.eigenvector(i);
        let big = v.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()));
        // the largest-magnitude coordinate (first one, up to ties) is positive
        let first = v.iter().position(|x| x.abs() >= big * (1.0 - 1e-12)).unwrap();
        if v[first] <= 0.0 {
            bad.push(("sign", v[first], 0.0));
        }
    }
    bad
}

/// One of several matrix families, chosen by `kind`.
pub fn random_matrix(kind: u32, n: usize, seed: u64) -> SymMatrix {
    let mut rng = rng_from_seed(seed);
    match kind % 6 {
        0 => SymMatrix::from_upper_fn(n, |_, _| rng.sample::<f64, _>(StandardNormal)),
        1 => {
            let p = rng.random_range(0.05..0.95);
            adjacency_matrix(&sample_gnp(n, p, seed).unwrap())
        }
        2 => {
            // regular graphs have highly repeated eigenvalues for small d; d = 8
            // rejection sampling is too slow for a test loop
            let d = if n < 3 { 0 } else { 2 * rng.random_range(1..=((n - 1) / 2).min(2)) };
            adjacency_matrix(&sample_regular(n, d, seed).unwrap())
        }
        3 => {
            // clustered spectrum: few distinct diagonal values, rotated
            let diag: Vec<f64> = (0..n).map(|_| rng.random_range(0..3) as f64).collect();
            let q = SymMatrix::from_upper_fn(n, |_, _| 1e-9 * rng.sample::<f64, _>(StandardNormal));
            SymMatrix::from_diagonal(&diag).add(&q).unwrap()
        }
        4 => {
            let scale = 10f64.powi(rng.random_range(-6..=6));
            SymMatrix::from_upper_fn(n, |_, _| scale * rng.random_range(-1.0..1.0))
        }
        _ => {
            // low rank plus small noise
            let x: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
            let y: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
            SymMatrix::from_upper_fn(n, |i, j| x[i] * x[j] - y[i] * y[j])
        }
    }
}

/// Coefficients (constant term first) of a polynomial product.
fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Vec<f64>, b: &[f64], sign: f64) {
    if a.len() < b.len() {
        a.resize(b.len(), 0.0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += sign * y;
    }
}

/// `det(M - x I)` by cofactor expansion along the first row, with entries
/// as polynomials in `x`.
fn char_poly(entries: &[Vec<Vec<f64>>]) -> Vec<f64> {
    let n = entries.len();
    if n == 1 {
        return entries[0][0].clone();
    }
    let mut det = vec![0.0];
    for col in 0..n {
        let minor: Vec<Vec<Vec<f64>>> = entries[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = poly_mul(&entries[0][col], &char_poly(&minor));
        poly_add(&mut det, &term, if col % 2 == 0 { 1.0 } else { -1.0 });
    }
    det
}

/// All roots of a polynomial by Durand–Kerner iteration.
fn durand_kerner(coeffs: &[f64]) -> Vec<Complex64> {
    let degree = coeffs.len() - 1;
    let lead = coeffs[degree];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| Complex64::new(c / lead, 0.0)).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
    let radius = 1.0 + monic[..degree].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..degree).map(|k| seed.powu(k as u32) * radius).collect();
    for _ in 0..2000 {
        let mut moved = 0.0_f64;
        for k in 0..degree {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..degree {
                if j != k {
                    denom *= roots[k] - roots[j];
                }
            }
            let step = eval(roots[k]) / denom;
            roots[k] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 * radius {
            break;
        }
    }
    roots
}

pub fn oracle_eigenvalues(m: &SymMatrix) -> Vec<f64> {
    let n = m.n();
    let entries: Vec<Vec<Vec<f64>>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { vec![m.get(i, j), -1.0] } else { vec![m.get(i, j)] }).collect())
        .collect();
    let mut roots: Vec<f64> = durand_kerner(&char_poly(&entries)).iter().map(|z| z.re).collect();
    roots.sort_by(f64::total_cmp);
    roots
}

/// Runs the decomposition contract on 1000 matrices from every family, sizes
/// 1..=200. Returns the failing cases.
pub fn contract_sweep(master: u64) -> Vec<(u64, u32, usize, Vec<Violation>)> {
    let mut rng = rng_from_seed(master);
    let mut failures = Vec::new();
    for case in 0..1000u64 {
        // mostly small, with a tail up to 200
        let n = if case % 10 == 0 { rng.random_range(100..=200) } else { rng.random_range(1..=60) };
        let kind = rng.random_range(0..6);
        let m = random_matrix(kind, n, master ^ case);
        let dec = eigensolve::eigendecompose(&m).unwrap();
        let bad = contract_violations(&m, &dec);
        if !bad.is_empty() {
            failures.push((case, kind, n, bad));
        }
    }
    failures
}

/// Largest eigenvalue disagreement with the characteristic polynomial over
/// `cases` random matrices of size 1..=5 whose eigenvalues are at least 1e-3
/// apart (Durand–Kerner loses accuracy on clustered roots).
pub fn oracle_sweep(master: u64, cases: usize) -> f64 {
    let mut rng = rng_from_seed(master);
    let mut worst: f64 = 0.0;
    let mut done = 0;
    while done < cases {
        let n = rng.random_range(1..=5);
        let m = SymMatrix::from_upper_fn(n, |_, _| rng.random_range(-1.0..1.0));
        let ours = eigensolve::eigenvalues(&m).unwrap();
        if ours.windows(2).any(|w| w[1] - w[0] <= 1e-3) {
            continue;
        }
        for (a, b) in ours.iter().zip(oracle_eigenvalues(&m)) {
            worst = worst.max((a - b).abs());
        }
        done += 1;
    }
    worst
}
