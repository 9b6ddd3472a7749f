//! Parallel driver for the certified search. Restarts are independent by
//! construction (each draws its simplex from a counter-keyed stream), so
//! they can run on a thread pool; the conclusion step picks the certified
//! restart with the smallest index, which makes the outcome identical to
//! the sequential driver no matter how the pool schedules the work.

use rayon::prelude::*;
use stabkit_core::search::{conclude, prepare, run_restart, SearchReport, SearchSpec};
use stabkit_core::Result;

pub fn search_parallel(spec: &SearchSpec) -> Result<SearchReport> {
    let prepared = prepare(spec)?;
    let results: Vec<_> =
        (0..prepared.restarts()).into_par_iter().map(|i| run_restart(&prepared, i)).collect();
    Ok(conclude(results))
}
