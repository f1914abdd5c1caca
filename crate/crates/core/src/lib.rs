//! Spectra of sparse random graphs.
//!
//! `specgraph` samples Erdős–Rényi graphs `G(n, p)` and uniform random
//! `d`-regular graphs `G(n, d)`, computes their full spectra with a dense
//! Householder + implicit-shift QL eigensolver, and checks the resulting
//! empirical spectral distributions against the semicircle and Kesten–McKay
//! limit laws. The [`experiments`] module bundles seeded Monte Carlo
//! ensembles (concentration on intervals, eigenvector delocalization, trace
//! moments, ...) and exact matrix identity checks; [`cli_io`] holds the
//! on-disk formats and the `specgraph` command line.
//!
//! Every random quantity is a pure function of a 64-bit seed, and ensemble
//! trials derive their seeds from a master seed, so results are identical
//! regardless of how many worker threads run the trials.
//!
//! ```
//! use specgraph::{graphgen, eigensolve, spectral_laws::{Esd, LimitLaw}};
//!
//! let g = graphgen::sample_gnp(300, 0.2, 11).unwrap();
//! let w = eigensolve::normalize_centered_gnp(&graphgen::adjacency_matrix(&g), 0.2).unwrap();
//! let esd = Esd::new(eigensolve::eigenvalues(&w).unwrap()).unwrap();
//! assert!(esd.ks_distance(LimitLaw::Semicircle) < 0.1);
//! ```

// `!(x > 0.0)` style checks are deliberate: they reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli_io;
pub mod eigensolve;
pub mod error;
pub mod experiments;
pub mod graphgen;
pub mod rng;
pub mod spectral_laws;

pub use error::{Error, Result};
