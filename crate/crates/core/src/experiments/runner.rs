use rayon::prelude::*;

use crate::cli_io::Seed;
use crate::error::{Error, Result};

/// Runs `f` inside a dedicated pool of `threads` workers. Ensemble functions
/// called from `f` spread their trials over that pool.
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    if threads == 0 {
        return Err(Error::invalid("need at least one worker thread"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::invalid(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

/// Evaluates `f(index, seed)` for every trial in parallel. Results come back in
/// trial order; if several trials fail, the error of the lowest index wins, so
/// the outcome does not depend on scheduling.
pub(crate) fn run_trials<T, F>(master: Seed, trials: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize, Seed) -> Result<T> + Sync,
{
    let results: Vec<Result<T>> = (0..trials)
        .into_par_iter()
        .map(|i| f(i, master.trial(i as u64)))
        .collect();
    results.into_iter().collect()
}
