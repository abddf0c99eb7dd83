//! Star-colourings of complete graphs.
//!
//! A star-colouring of `K_n` partitions its edges into colour classes that are
//! all stars (no monochromatic matching of size two and no monochromatic
//! triangle). This crate models such colourings, builds the standard families
//! of extremal colourings, searches for rainbow subgraphs and computes
//! star-anti-Ramsey numbers exactly for small `n`.
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats, threading
//! and the command line live in the `arstar` companion crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bits;
pub mod canon;
pub mod colouring;
pub mod constructions;
pub mod detect;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod oracle;
pub mod rng;
pub mod tournament;

pub use colouring::{StarColouring, StarCount, TieBreak, ValidationReport, Violation};
pub use error::{Error, Result};
pub use graph::{Edge, SimpleGraph};
pub use tournament::{Digraph, Tournament};

/// Largest vertex count supported by [`SimpleGraph`], [`StarColouring`] and
/// [`Tournament`]. Colour sets are tracked in a `u128`, and `K_16` has 120
/// edges.
pub const MAX_VERTICES: usize = 16;
