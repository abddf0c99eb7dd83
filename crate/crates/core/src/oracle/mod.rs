//! Exact computation at desk scale.
//!
//! Star-colourings of `K_n` are generated one vertex at a time from
//! canonical representatives of `K_{n-1}`, so each level holds one colouring
//! per isomorphism class. Pattern avoidance is hereditary, which lets the same
//! engine compute `ar*`, `nsar` and the extremal census.

mod extremal;
mod labelled;
mod redblue;
mod search;
mod structure;
mod tuples;

pub use extremal::{ex_small, zarankiewicz_small, ExResult, EX_CAP, ZARANKIEWICZ_CAP};
pub use labelled::{for_each_labelled_colouring, labelled_count};
pub use redblue::{check_redblue, REDBLUE_EDGE_CAP};
pub use search::{
    admissible, enumerate_star_colourings, expand_parent, extremal_colourings, nsar, nsar_with,
    seed_lower_bound, star_anti_ramsey, star_anti_ramsey_family, star_anti_ramsey_with, Executor,
    Expansion, LevelJob, Sequential,
};
pub use structure::{check_structure_ck, check_structure_k4minus, k4minus_templates, CkStructure};
pub use tuples::{check_tuple, find_covering_tuple, find_initial_great_tuple, TupleP, TupleReport};

use alloc::vec::Vec;

use crate::canon::CanonKey;
use crate::colouring::StarColouring;

/// Default vertex cap for exhaustive colouring searches.
pub const ORACLE_CAP: usize = 7;

/// Outcome of an exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleValue {
    Exact(usize),
    /// No admissible object exists (for example `ar*` of a forest once every
    /// colouring contains it).
    Nonexistent,
    /// The search reached its cap; the true value is at least this.
    AtLeast(usize),
}

impl OracleValue {
    pub fn exact(self) -> Option<usize> {
        match self {
            OracleValue::Exact(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_explored: u64,
    pub pruned: u64,
}

impl SearchStats {
    pub fn absorb(&mut self, other: SearchStats) {
        self.nodes_explored += other.nodes_explored;
        self.pruned += other.pruned;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub key: CanonKey,
    pub colouring: StarColouring,
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub value: OracleValue,
    pub witnesses: Vec<Witness>,
    pub stats: SearchStats,
}

/// Knobs shared by the colouring searches.
#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    pub cap: usize,
    /// Bound pruning against an incumbent seeded from the constructions.
    pub prune: bool,
    /// Abort once this many children have been generated.
    pub max_nodes: Option<u64>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            cap: ORACLE_CAP,
            prune: true,
            max_nodes: None,
        }
    }
}
