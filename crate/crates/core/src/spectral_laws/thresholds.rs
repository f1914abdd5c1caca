use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Inputs to the interval-length thresholds.
///
/// `entry_bound` (`1/sqrt(p)` for `G(n, p)`) and `fourth_moment` are carried
/// for reporting; the threshold formulas below only read `delta` and
/// `np_or_d`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdParams {
    pub delta: f64,
    pub np_or_d: f64,
    pub entry_bound: f64,
    pub fourth_moment: f64,
}

impl ThresholdParams {
    pub fn new(delta: f64, np_or_d: f64) -> Result<Self> {
        if !(delta > 0.0) {
            return Err(Error::invalid(format!("delta = {delta} must be positive")));
        }
        Ok(ThresholdParams {
            delta,
            np_or_d,
            entry_bound: f64::NAN,
            fourth_moment: f64::NAN,
        })
    }

    /// Parameters for `G(n, p)`: entries bounded by `1/sqrt(p)` after
    /// normalization, fourth moment `(1 - 3p + 3p^2) / (p (1 - p))`.
    pub fn for_gnp(delta: f64, n: usize, p: f64) -> Result<Self> {
        let mut params = Self::new(delta, n as f64 * p)?;
        params.entry_bound = 1.0 / p.sqrt();
        params.fourth_moment = (1.0 - 3.0 * p + 3.0 * p * p) / (p * (1.0 - p));
        Ok(params)
    }
}

/// Shortest interval on which the ESD of `G(n, p)` is shown to concentrate:
/// `(log(np) / (delta^4 sqrt(np)))^(1/5)`. Leading constants are omitted.
pub fn min_interval_length_gnp(params: &ThresholdParams) -> Result<f64> {
    let np = params.np_or_d;
    if !(np > 1.0) || !(params.delta > 0.0) {
        return Err(Error::invalid("need np > 1 and delta > 0"));
    }
    Ok((np.ln() / (params.delta.powi(4) * np.sqrt())).powf(0.2))
}

/// Same for `G(n, d)`: `delta^(-4/5) d^(-1/10) log(d)^(1/5)`.
pub fn min_interval_length_regular(params: &ThresholdParams) -> Result<f64> {
    let d = params.np_or_d;
    if !(d >= 2.0) || !(params.delta > 0.0) {
        return Err(Error::invalid("need d >= 2 and delta > 0"));
    }
    Ok(params.delta.powf(-0.8) * d.powf(-0.1) * d.ln().powf(0.2))
}

/// Infinity-norm bound for bulk eigenvectors of `B_n`,
/// `sqrt(log(g)^2.2 log(n) / (np))` with `g = np / log(n)`. The unknown
/// `kappa`-dependent constant is taken to be 1.
pub fn delocalization_bound(n: usize, p: f64, kappa: f64) -> Result<f64> {
    if !(kappa > 0.0) {
        return Err(Error::invalid(format!("kappa = {kappa} must be positive")));
    }
    let log_n = (n as f64).ln();
    let np = n as f64 * p;
    if !(np > log_n) {
        return Err(Error::invalid(format!("need np > log n, got np = {np}, log n = {log_n}")));
    }
    let g = np / log_n;
    Ok((g.ln().powf(2.2) * log_n / np).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_threshold_values() {
        let t = min_interval_length_gnp(&ThresholdParams::new(0.5, 400.0).unwrap()).unwrap();
        assert!((t - 1.368_121_274_090_588).abs() < 1e-12);
        let mut prev = f64::INFINITY;
        for np in [10.0, 100.0, 1e3, 1e4, 1e6] {
            let t = min_interval_length_gnp(&ThresholdParams::new(0.5, np).unwrap()).unwrap();
            assert!(t < prev);
            prev = t;
        }
        let huge_delta = min_interval_length_gnp(&ThresholdParams::new(1e12, 400.0).unwrap()).unwrap();
        assert!(huge_delta < 1e-8);
        assert!(min_interval_length_gnp(&ThresholdParams::new(0.5, 1.0).unwrap()).is_err());
        assert!(ThresholdParams::new(0.0, 10.0).is_err());
    }

    #[test]
    fn regular_threshold_values() {
        let t = min_interval_length_regular(&ThresholdParams::new(0.1, 1e6).unwrap()).unwrap();
        assert!((t - 2.679_621_093_470_942).abs() < 1e-12);
        let a = min_interval_length_regular(&ThresholdParams::new(0.1, 1e3).unwrap()).unwrap();
        let b = min_interval_length_regular(&ThresholdParams::new(0.1, 1e4).unwrap()).unwrap();
        assert!(b < a);
        let half = min_interval_length_regular(&ThresholdParams::new(0.05, 1e3).unwrap()).unwrap();
        assert!((half / a - 2f64.powf(0.8)).abs() < 1e-12);
    }

    #[test]
    fn delocalization_bound_values() {
        let b = delocalization_bound(2000, 0.2, 0.5).unwrap();
        assert!((b - 0.626_978_831_808_979).abs() < 1e-12);
        // g = e exactly
        let n = 1000usize;
        let log_n = (n as f64).ln();
        let p = std::f64::consts::E * log_n / n as f64;
        let b = delocalization_bound(n, p, 0.5).unwrap();
        assert!((b - (log_n / (n as f64 * p)).sqrt()).abs() < 1e-12);
        assert!(delocalization_bound(1000, 0.005, 0.5).is_err());
        assert!(delocalization_bound(1000, 0.2, 0.0).is_err());
    }

    #[test]
    fn delocalization_bound_monotonicity_in_p() {
        // As a function of g = np / log n the bound is proportional to
        // log(g)^1.1 / sqrt(g), which peaks at g = e^2.2.
        let n = 2000usize;
        let log_n = (n as f64).ln();
        let p_of_g = |g: f64| g * log_n / n as f64;
        let peak = 2.2f64.exp();
        let sweep = |lo: f64, hi: f64| -> Vec<f64> {
            (0..=100)
                .map(|i| delocalization_bound(n, p_of_g(lo + (hi - lo) * i as f64 / 100.0), 0.5).unwrap())
                .collect()
        };
        let rising = sweep(std::f64::consts::E * 1.0001, peak * 0.9999);
        assert!(rising.windows(2).all(|w| w[1] > w[0]));
        let falling = sweep(peak * 1.0001, n as f64 / log_n);
        assert!(falling.windows(2).all(|w| w[1] < w[0]));
    }
}
