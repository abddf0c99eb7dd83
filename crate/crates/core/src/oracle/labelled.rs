use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits32;
use crate::colouring::StarColouring;
use crate::error::{check_cap, Result};
use crate::graph::Edge;
use crate::tournament::Tournament;

/// Calls `f` once for every labelled star-colouring of `K_n`.
///
/// Each colouring is generated from its induced orientation: multi-edge
/// classes point away from their centre and single-edge classes point from
/// the lower to the higher endpoint. Every out-neighbourhood is then split
/// into groups, and a singleton group `{u}` at `v` is allowed only when
/// `v < u`, so no colouring is produced twice.
pub fn for_each_labelled_colouring(
    n: usize,
    cap: usize,
    mut f: impl FnMut(&StarColouring),
) -> Result<()> {
    check_cap("labelled enumeration vertices", n, cap.min(8))?;
    if n <= 1 {
        f(&StarColouring::trivial(n));
        return Ok(());
    }
    let m = n * (n - 1) / 2;
    for bits in 0..1u64 << m {
        let t = Tournament::from_bits(n, bits)?;
        let outs: Vec<Vec<usize>> = (0..n).map(|v| Bits32(t.out_mask(v)).collect()).collect();
        let mut classes: Vec<Vec<Edge>> = Vec::new();
        vertex_partitions(&outs, 0, &mut classes, &mut |cls| {
            f(&StarColouring::build_unchecked(n, cls.to_vec()));
        });
    }
    Ok(())
}

fn vertex_partitions(
    outs: &[Vec<usize>],
    v: usize,
    classes: &mut Vec<Vec<Edge>>,
    f: &mut dyn FnMut(&[Vec<Edge>]),
) {
    if v == outs.len() {
        f(classes);
        return;
    }
    let leaves = &outs[v];
    let mut rgs = vec![0usize; leaves.len()];
    partitions_of(leaves.len(), 0, 0, &mut rgs, &mut |rgs, blocks| {
        let mut groups: Vec<Vec<Edge>> = vec![Vec::new(); blocks];
        for (i, &b) in rgs.iter().enumerate() {
            groups[b].push(Edge::new(v, leaves[i]));
        }
        if groups.iter().any(|g| g.len() == 1 && leaves_of(g, v) < v) {
            return;
        }
        let before = classes.len();
        classes.extend(groups);
        vertex_partitions(outs, v + 1, classes, f);
        classes.truncate(before);
    });
}

fn leaves_of(group: &[Edge], v: usize) -> usize {
    group[0].other(v)
}

/// Restricted-growth strings of length `len`.
fn partitions_of(
    len: usize,
    pos: usize,
    blocks: usize,
    rgs: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize], usize),
) {
    if pos == len {
        f(rgs, blocks);
        return;
    }
    for b in 0..=blocks {
        rgs[pos] = b;
        partitions_of(len, pos + 1, blocks.max(b + 1), rgs, f);
    }
}

/// Number of labelled star-colourings of `K_n`.
pub fn labelled_count(n: usize, cap: usize) -> Result<u64> {
    let mut count = 0u64;
    for_each_labelled_colouring(n, cap, |_| count += 1)?;
    Ok(count)
}
