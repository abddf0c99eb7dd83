use std::time::{Duration, Instant};

use arstar_core::oracle::{Executor, Expansion};
use arstar_core::{Error, StarColouring};
use rayon::prelude::*;

/// Expands a level's parents on a rayon pool. Results are collected in
/// parent order, so the search outcome does not depend on the thread count.
pub struct RayonExecutor {
    pool: rayon::ThreadPool,
    deadline: Option<(Instant, Duration)>,
}

impl RayonExecutor {
    pub fn new(threads: usize, budget: Option<Duration>) -> Self {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build()
            .expect("thread pool");
        RayonExecutor {
            pool,
            deadline: budget.map(|b| (Instant::now() + b, b)),
        }
    }

    fn out_of_time(&self) -> Option<Error> {
        let (at, budget) = self.deadline?;
        (Instant::now() > at).then(|| Error::CapExceeded {
            what: "time budget (s)",
            got: budget.as_secs() as usize + 1,
            cap: budget.as_secs() as usize,
        })
    }
}

impl Executor for RayonExecutor {
    fn expand_all(
        &self,
        parents: &[StarColouring],
        job: &(dyn Fn(&StarColouring) -> arstar_core::Result<Expansion> + Sync),
    ) -> Vec<arstar_core::Result<Expansion>> {
        self.pool.install(|| {
            parents
                .par_iter()
                .map(|p| match self.out_of_time() {
                    Some(e) => Err(e),
                    None => job(p),
                })
                .collect()
        })
    }
}
