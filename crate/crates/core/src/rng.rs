//! Seeded randomness. Every random routine takes an explicit generator; the
//! helpers here derive independent streams from one user seed.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colouring::StarColouring;
use crate::error::{check_cap, Result};
use crate::graph::Edge;
use crate::tournament::Tournament;
use crate::MAX_VERTICES;

pub type SeededRng = ChaCha8Rng;

/// Generator for `stream` under `seed`. Distinct streams never overlap.
pub fn stream(seed: u64, stream: u64) -> SeededRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Random star-colouring: a random tournament, then each out-neighbourhood
/// split into colour groups. A group joins an existing group at its centre
/// with probability `merge`.
pub fn random_star_colouring<R: Rng + ?Sized>(
    n: usize,
    merge: f64,
    rng: &mut R,
) -> Result<StarColouring> {
    check_cap("colouring vertices", n, MAX_VERTICES)?;
    let t = Tournament::random(n, rng)?;
    Ok(colouring_from_out_groups(&t, merge, rng))
}

pub(crate) fn colouring_from_out_groups<R: Rng + ?Sized>(
    t: &Tournament,
    merge: f64,
    rng: &mut R,
) -> StarColouring {
    let mut classes: Vec<Vec<Edge>> = Vec::new();
    for v in 0..t.n() {
        let mut groups: Vec<Vec<Edge>> = Vec::new();
        for u in crate::bits::Bits32(t.out_mask(v)) {
            let e = Edge::new(v, u);
            if !groups.is_empty() && rng.gen_bool(merge) {
                let g = rng.gen_range(0..groups.len());
                groups[g].push(e);
            } else {
                groups.push(alloc::vec![e]);
            }
        }
        classes.extend(groups);
    }
    StarColouring::from_classes(t.n(), classes).expect("out-groups form stars")
}

/// Random permutation of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        p.swap(i, j);
    }
    p
}
