//! Command-line companion to `arstar-core`: JSON file formats, a threaded
//! executor for the oracle, theorem checks and reproducible reports.

pub mod commands;
pub mod error;
pub mod exec;
pub mod format;
pub mod manifest;
pub mod theorems;

use std::time::Duration;

use arstar_core::oracle::{OracleOptions, ORACLE_CAP};

pub use error::{CliError, Result};
pub use exec::RayonExecutor;

/// Largest oracle cap accepted on the command line.
pub const MAX_ORACLE_N: usize = ORACLE_CAP;

/// Caps and worker pool shared by every command.
pub struct Context {
    pub opts: OracleOptions,
    pub exec: RayonExecutor,
}

impl Context {
    pub fn new(
        threads: usize,
        max_n: usize,
        max_nodes: Option<u64>,
        budget: Option<Duration>,
    ) -> Self {
        Context {
            opts: OracleOptions {
                cap: max_n,
                prune: true,
                max_nodes,
            },
            exec: RayonExecutor::new(threads, budget),
        }
    }
}
