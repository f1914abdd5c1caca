//! Limit laws for graph spectra and queries on empirical spectral
//! distributions.

mod esd;
mod laws;
mod stieltjes;
mod thresholds;

pub use esd::{two_sample_ks, Esd, Interval};
pub use laws::{
    kesten_mckay_cdf, kesten_mckay_density, km_normalized_density, semicircle_cdf, semicircle_density,
    semicircle_mass, semicircle_moment, LimitLaw,
};
pub use stieltjes::stieltjes_semicircle;
pub use thresholds::{delocalization_bound, min_interval_length_gnp, min_interval_length_regular, ThresholdParams};
