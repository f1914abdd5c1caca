use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::Interval;
use crate::error::{Error, Result};

/// A limiting spectral distribution.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "law", rename_all = "kebab-case")]
pub enum LimitLaw {
    /// Density `sqrt(4 - x^2) / (2 pi)` on `[-2, 2]`.
    Semicircle,
    /// McKay's law for the unnormalized adjacency spectrum of a `d`-regular
    /// graph, supported on `[-2 sqrt(d-1), 2 sqrt(d-1)]`. Requires `d >= 2`;
    /// build it with [`LimitLaw::kesten_mckay`].
    KestenMcKay { d: usize },
}

impl LimitLaw {
    pub fn kesten_mckay(d: usize) -> Result<Self> {
        check_degree(d)?;
        Ok(LimitLaw::KestenMcKay { d })
    }

    pub fn support(&self) -> (f64, f64) {
        match *self {
            LimitLaw::Semicircle => (-2.0, 2.0),
            LimitLaw::KestenMcKay { d } => {
                let r = 2.0 * ((d - 1) as f64).sqrt();
                (-r, r)
            }
        }
    }

    pub fn density(&self, x: f64) -> f64 {
        match *self {
            LimitLaw::Semicircle => semicircle_density(x),
            LimitLaw::KestenMcKay { d } => km_density_unchecked(x, d),
        }
    }

    pub fn cdf(&self, x: f64) -> f64 {
        match *self {
            LimitLaw::Semicircle => semicircle_cdf(x),
            LimitLaw::KestenMcKay { d } => km_cdf_unchecked(x, d),
        }
    }

    /// Mass of a closed interval.
    pub fn mass(&self, interval: &Interval) -> f64 {
        (self.cdf(interval.b()) - self.cdf(interval.a())).max(0.0)
    }

    /// Inverse CDF by bisection, `q` in `[0, 1]`.
    pub fn quantile(&self, q: f64) -> f64 {
        let (mut lo, mut hi) = self.support();
        if q <= 0.0 {
            return lo;
        }
        if q >= 1.0 {
            return hi;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.cdf(mid) < q {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

pub fn semicircle_density(x: f64) -> f64 {
    if x.abs() <= 2.0 {
        (4.0 - x * x).sqrt() / (2.0 * PI)
    } else {
        0.0
    }
}

/// `P(X <= x)` from the closed antiderivative
/// `(x sqrt(4 - x^2) / 2 + 2 asin(x / 2)) / (2 pi)`.
pub fn semicircle_cdf(x: f64) -> f64 {
    if x <= -2.0 {
        0.0
    } else if x >= 2.0 {
        1.0
    } else {
        0.5 + (0.5 * x * (4.0 - x * x).sqrt() + 2.0 * (x / 2.0).asin()) / (2.0 * PI)
    }
}

pub fn semicircle_mass(interval: &Interval) -> f64 {
    LimitLaw::Semicircle.mass(interval)
}

/// `k`-th moment of the semicircle law: zero for odd `k`, the Catalan number
/// `C(2m, m) / (m + 1)` for `k = 2m`.
pub fn semicircle_moment(k: u32) -> f64 {
    if k % 2 == 1 {
        return 0.0;
    }
    let m = k / 2;
    // C(2m, m) / (m + 1) built up as a running product of exact ratios.
    let mut c = 1.0f64;
    for i in 0..m {
        c = c * 2.0 * (2 * i + 1) as f64 / (i + 2) as f64;
    }
    c.round()
}

fn check_degree(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::invalid(format!("Kesten-McKay law needs d >= 2, got {d}")));
    }
    Ok(())
}

/// McKay density `d sqrt(4(d-1) - x^2) / (2 pi (d^2 - x^2))` on
/// `|x| <= 2 sqrt(d-1)`.
pub fn kesten_mckay_density(x: f64, d: usize) -> Result<f64> {
    check_degree(d)?;
    Ok(km_density_unchecked(x, d))
}

fn km_density_unchecked(x: f64, d: usize) -> f64 {
    let df = d as f64;
    let r2 = 4.0 * (df - 1.0);
    if x * x > r2 {
        return 0.0;
    }
    df * (r2 - x * x).sqrt() / (2.0 * PI * (df * df - x * x))
}

/// McKay density after rescaling the variable by `sqrt(d-1)`:
/// `sqrt(d-1) f_d(sqrt(d-1) y)`, supported on `[-2, 2]`.
pub fn km_normalized_density(y: f64, d: usize) -> Result<f64> {
    check_degree(d)?;
    let s = ((d - 1) as f64).sqrt();
    Ok(s * km_density_unchecked(s * y, d))
}

/// Closed-form CDF of the McKay law. With `R = 2 sqrt(d-1)` and
/// `x = R sin(t)`, the density integrates to
/// `1/2 + (d asin(x/R) - (d-2) atan((d-2) tan(t) / d)) / (2 pi)`.
pub fn kesten_mckay_cdf(x: f64, d: usize) -> Result<f64> {
    check_degree(d)?;
    Ok(km_cdf_unchecked(x, d))
}

fn km_cdf_unchecked(x: f64, d: usize) -> f64 {
    let df = d as f64;
    let r = 2.0 * (df - 1.0).sqrt();
    if x <= -r {
        return 0.0;
    }
    if x >= r {
        return 1.0;
    }
    let cos_part = (r * r - x * x).sqrt();
    let g = df * (x / r).asin() - (df - 2.0) * ((df - 2.0) * x).atan2(df * cos_part);
    (0.5 + g / (2.0 * PI)).clamp(0.0, 1.0)
}
