use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::LimitLaw;
use crate::error::{Error, Result};

/// Closed interval `[a, b]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    a: f64,
    b: f64,
}

impl Interval {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if a.is_nan() || b.is_nan() || a > b {
            return Err(Error::invalid(format!("[{a}, {b}] is not an interval")));
        }
        Ok(Interval { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn length(&self) -> f64 {
        self.b - self.a
    }

    pub fn contains(&self, x: f64) -> bool {
        self.a <= x && x <= self.b
    }
}

/// Empirical spectral distribution: the eigenvalues of one matrix, ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct Esd {
    values: Vec<f64>,
}

impl Esd {
    /// Sorts the values; rejects an empty or non-finite list.
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("an ESD needs at least one eigenvalue"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("eigenvalues must be finite"));
        }
        values.sort_by(f64::total_cmp);
        Ok(Esd { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of eigenvalues `<= x`.
    fn count_le(&self, x: f64) -> usize {
        self.values.partition_point(|&v| v <= x)
    }

    fn count_lt(&self, x: f64) -> usize {
        self.values.partition_point(|&v| v < x)
    }

    /// `F_n(x)`: the fraction of eigenvalues `<= x`.
    pub fn cdf(&self, x: f64) -> f64 {
        self.count_le(x) as f64 / self.len() as f64
    }

    /// Eigenvalues in the closed interval.
    pub fn count_in(&self, interval: &Interval) -> usize {
        self.count_le(interval.b()) - self.count_lt(interval.a())
    }

    /// `(1/n) sum lambda_i^k`.
    pub fn moment(&self, k: u32) -> f64 {
        let k = k as i32;
        self.values.iter().map(|v| v.powi(k)).sum::<f64>() / self.len() as f64
    }

    /// `(1/n) sum 1 / (lambda_i - z)`.
    pub fn stieltjes(&self, z: Complex64) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for &v in &self.values {
            let diff = Complex64::new(v, 0.0) - z;
            if diff.norm() == 0.0 {
                return Err(Error::SingularInput(format!("z = {z} is an eigenvalue")));
            }
            acc += diff.inv();
        }
        Ok(acc / self.len() as f64)
    }

    /// Kolmogorov–Smirnov distance to a continuous law, evaluated on both
    /// sides of every jump of the empirical CDF.
    pub fn ks_distance(&self, law: LimitLaw) -> f64 {
        ks_against_cdf(&self.values, |x| law.cdf(x))
    }

    /// Drops the largest eigenvalue.
    pub fn without_top(&self) -> Result<Esd> {
        if self.len() < 2 {
            return Err(Error::invalid("cannot drop the only eigenvalue"));
        }
        Ok(Esd {
            values: self.values[..self.len() - 1].to_vec(),
        })
    }
}

pub(crate) fn ks_against_cdf(sorted: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let n = sorted.len() as f64;
    let mut worst: f64 = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let x = sorted[i];
        let mut j = i;
        while j < sorted.len() && sorted[j] == x {
            j += 1;
        }
        let f = cdf(x);
        worst = worst.max((i as f64 / n - f).abs()).max((j as f64 / n - f).abs());
        i = j;
    }
    worst
}

/// Two-sample Kolmogorov–Smirnov statistic `sup |F_a - F_b|`.
pub fn two_sample_ks(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::invalid("two-sample KS needs non-empty samples"));
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut worst: f64 = 0.0;
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        worst = worst.max((i as f64 / na - j as f64 / nb).abs());
    }
    Ok(worst)
}
