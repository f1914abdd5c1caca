//! Seeded ensembles and exact identity checks.
//!
//! An ensemble is an [`EnsembleConfig`]: a model template, a size, a trial
//! count and a master seed. Trial `i` samples its graph from
//! `derive_trial_seed(master, i)`, so trials are independent and run in
//! parallel on the current rayon pool (see [`with_threads`]); results are put
//! back in trial order before any aggregation, so every report is the same
//! for any number of threads.

mod concentration;
mod config;
mod convergence;
mod delocalization;
pub mod identities;
mod isotropy;
mod moments;
mod projection;
mod runner;
mod top_eigen;

pub use concentration::{run_esd_concentration, run_esd_concentration_multi, ConcentrationReport, ConcentrationTrial};
pub use config::{normalize, EnsembleConfig, ModelTemplate, Normalization};
pub use convergence::{
    run_mckay_convergence, run_semicircle_convergence, ConvergenceReport, McKayReport, McKayTrial, SemicircleTrial,
    SEMICIRCLE_HISTOGRAM_RANGE,
};
pub use delocalization::{
    bulk_range, decompose_simple_spectrum, inf_norm, median, run_delocalization, DelocalizationReport,
    DelocalizationTrial, IndexRange, DEGENERATE_GAP, PERTURBATION_SCALE,
};
pub use identities::{IdentityCase, IdentityReport};
pub use isotropy::{basis_vector, middle_index, run_isotropy_check, sphere_sample, IsotropyReport, IsotropyTrial};
pub use moments::{run_moment_check, MomentReport, MomentRow, MomentTrial};
pub use projection::{projection_norm, random_subspace, run_projection_concentration, ProjectionReport, ProjectionTrial};
pub use runner::with_threads;
pub use top_eigen::{run_top_eigen_check, TopEigenReport, TopEigenTrial};
