use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectral_laws::Esd;

/// Equal-width histogram. Bins are half-open `[e_i, e_{i+1})` except the last,
/// which is closed, so the bins partition `[lo, hi]`. Values outside
/// `[lo, hi]` go to `overflow`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HistogramFile {
    pub bin_edges: Vec<f64>,
    pub counts: Vec<u64>,
    /// `counts / (in-range total * bin width)`; all zero when nothing landed in range.
    pub density: Vec<f64>,
    pub overflow: u64,
}

impl HistogramFile {
    pub fn from_values(values: &[f64], bins: usize, lo: f64, hi: f64) -> Result<Self> {
        if bins == 0 {
            return Err(Error::invalid("a histogram needs at least one bin"));
        }
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::invalid(format!("histogram range [{lo}, {hi}] is empty")));
        }
        let width = (hi - lo) / bins as f64;
        let mut bin_edges: Vec<f64> = (0..bins).map(|i| lo + width * i as f64).collect();
        bin_edges.push(hi);

        let mut counts = vec![0u64; bins];
        let mut overflow = 0;
        for &x in values {
            if !(lo..=hi).contains(&x) {
                overflow += 1;
                continue;
            }
            // the float estimate can be off by one near an edge; settle it against the stored edges
            let mut k = (((x - lo) / width) as usize).min(bins - 1);
            while k > 0 && x < bin_edges[k] {
                k -= 1;
            }
            while k + 1 < bins && x >= bin_edges[k + 1] {
                k += 1;
            }
            counts[k] += 1;
        }
        let total: u64 = counts.iter().sum();
        let density = counts
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                if total == 0 {
                    0.0
                } else {
                    c as f64 / (total as f64 * (bin_edges[i + 1] - bin_edges[i]))
                }
            })
            .collect();
        Ok(HistogramFile {
            bin_edges,
            counts,
            density,
            overflow,
        })
    }

    pub fn bins(&self) -> usize {
        self.counts.len()
    }
}

/// Histogram of an ESD over `[lo, hi]`.
pub fn emit_histogram(esd: &Esd, bins: usize, lo: f64, hi: f64) -> Result<HistogramFile> {
    HistogramFile::from_values(esd.values(), bins, lo, hi)
}
