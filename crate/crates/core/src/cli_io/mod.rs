//! File formats, seeds and the `specgraph` command line.
//!
//! * edge lists: a header line `n m`, then one `u v` line per edge (`u < v`,
//!   sorted);
//! * eigenvalue CSV: header `index,eigenvalue`, one row per eigenvalue in
//!   ascending order, shortest round-trip decimals;
//! * histograms and reports: JSON (see [`HistogramFile`] and [`Report`]);
//! * config files: flat `key = value` lines mirroring the command-line flags.

mod cli;
mod config_file;
mod edge_list;
mod eigen_csv;
mod histogram;
mod report;
mod seed;

pub use cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, SEED_ENV};
pub use config_file::{config_to_args, parse_config_file};
pub use edge_list::{format_edge_list, parse_edge_list, read_edge_list, write_edge_list};
pub use eigen_csv::{format_eigenvalues, parse_eigenvalues, read_eigenvalues, write_eigenvalues};
pub use histogram::{emit_histogram, HistogramFile};
pub use report::{Report, SCHEMA_VERSION};
pub use seed::{derive_trial_seed, Seed};
