use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{subsets_of_size, Bits32};
use crate::canon::{canonical_key_capped, CanonKey};
use crate::colouring::{Centre, StarColouring};
use crate::constructions::{k4minus_extremal, EvenShape};
use crate::error::{invalid, Result};
use crate::graph::Edge;
use crate::tournament::Tournament;

/// Exact-canonicalisation cap used by the structure checkers.
const STRUCTURE_CANON_CAP: usize = 12;

/// A split witnessing the extremal `C_k` structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CkStructure {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// Tournament on `a`, vertex `i` standing for `a[i]`.
    pub tournament: Tournament,
}

/// Looks for a split `A, B` with `|B| = k - 1` such that every `x` in `A`
/// centres exactly one class, that class covers `B` and the out-neighbours
/// of `x` in a `C_k`-free tournament on `A`, and every edge inside `B` has
/// its own colour.
pub fn check_structure_ck(c: &StarColouring, k: usize) -> Result<Option<CkStructure>> {
    let n = c.n();
    if k < 3 {
        return Err(invalid("need k >= 3"));
    }
    if n < k {
        return Ok(None);
    }
    for b_mask in subsets_of_size(n, k - 1) {
        if let Some(s) = split_structure(c, k, b_mask)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn split_structure(c: &StarColouring, k: usize, b_mask: u32) -> Result<Option<CkStructure>> {
    let n = c.n();
    let a: Vec<usize> = (0..n).filter(|&v| b_mask >> v & 1 == 0).collect();
    let b: Vec<usize> = Bits32(b_mask).collect();
    for (i, &u) in b.iter().enumerate() {
        for &v in &b[i + 1..] {
            if c.class(c.colour(u, v)).len() != 1 {
                return Ok(None);
            }
        }
    }
    let mut leaves = vec![0u32; n];
    for &x in &a {
        let at = c.classes_centred_at(x);
        if at.len() != 1 || c.centre(at[0]) != Centre::Unique(x) {
            return Ok(None);
        }
        leaves[x] = c.class(at[0]).iter().fold(0, |m, e| m | 1 << e.other(x));
        if leaves[x] & b_mask != b_mask {
            return Ok(None);
        }
    }
    let mut arcs = Vec::new();
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in a.iter().enumerate().skip(i + 1) {
            match (leaves[x] >> y & 1, leaves[y] >> x & 1) {
                (1, 0) => arcs.push((i, j)),
                (0, 1) => arcs.push((j, i)),
                _ => return Ok(None),
            }
        }
    }
    let t = Tournament::from_arcs(a.len(), &arcs)?;
    if !t.is_ck_free(k)? {
        return Ok(None);
    }
    Ok(Some(CkStructure {
        a,
        b,
        tournament: t,
    }))
}

/// All colourings described by the extremal `K_4^-` structure on `n`
/// vertices: the odd pairing, or every admissible `a` and `S` when `n` is
/// even.
pub fn k4minus_templates(n: usize) -> Result<Vec<StarColouring>> {
    if n < 2 {
        return Err(invalid("need n >= 2"));
    }
    if n % 2 == 1 || n == 2 {
        return Ok(vec![k4minus_extremal(n, None)?]);
    }
    let mut out = Vec::new();
    for a in 1..=(n - 2) / 2 {
        let t = [2 * a - 2, 2 * a - 1, 2 * a];
        let tri = [
            Edge::new(t[0], t[1]),
            Edge::new(t[0], t[2]),
            Edge::new(t[1], t[2]),
        ];
        for mask in 1u32..8 {
            if mask.count_ones() > 2 {
                continue;
            }
            let s_edges = Bits32(mask).map(|i| tri[i]).collect();
            out.push(k4minus_extremal(n, Some(&EvenShape { a, s_edges }))?);
        }
    }
    Ok(out)
}

/// Whether some vertex ordering realises the extremal `K_4^-` structure,
/// decided by comparing canonical forms with every template.
pub fn check_structure_k4minus(c: &StarColouring) -> Result<bool> {
    let n = c.n();
    if n < 2 {
        return Ok(false);
    }
    let target = canonical_key_capped(c, STRUCTURE_CANON_CAP)?;
    let keys: BTreeSet<CanonKey> = k4minus_templates(n)?
        .iter()
        .filter(|t| t.colour_count() == c.colour_count())
        .map(|t| canonical_key_capped(t, STRUCTURE_CANON_CAP))
        .collect::<Result<_>>()?;
    Ok(keys.contains(&target))
}
