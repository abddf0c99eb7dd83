//! Exact small-graph invariants: vertex arboricity, edge arboricity,
//! chromatic number, girth and circumference.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{low_mask, Bits32};
use crate::error::{check_cap, Result};
use crate::graph::SimpleGraph;

/// Default vertex cap for the exhaustive invariant searches.
pub const INVARIANT_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphInvariants {
    /// Fewest parts in a vertex partition whose parts induce forests.
    pub va: usize,
    /// Fewest forests partitioning the edge set.
    pub ea: usize,
    pub chi: usize,
    /// Shortest cycle length, `None` for forests.
    pub girth: Option<usize>,
}

pub fn graph_invariants(g: &SimpleGraph) -> Result<GraphInvariants> {
    check_cap("invariant vertices", g.n(), INVARIANT_CAP)?;
    Ok(GraphInvariants {
        va: vertex_arboricity(g),
        ea: edge_arboricity(g),
        chi: chromatic_number(g),
        girth: girth(g),
    })
}

/// Smallest `p` such that the vertices split into `p` forest-inducing parts.
pub fn vertex_arboricity(g: &SimpleGraph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&p| {
            let mut parts = vec![0u32; p];
            assign_vertices(g, 0, &mut parts, 0)
        })
        .unwrap_or(n)
}

fn assign_vertices(g: &SimpleGraph, v: usize, parts: &mut [u32], used: usize) -> bool {
    if v == g.n() {
        return true;
    }
    // Parts beyond `used` are interchangeable; only open the first empty one.
    let limit = (used + 1).min(parts.len());
    for i in 0..limit {
        let grown = parts[i] | 1 << v;
        if !g.is_forest_in(grown) {
            continue;
        }
        let old = parts[i];
        parts[i] = grown;
        if assign_vertices(g, v + 1, parts, used.max(i + 1)) {
            return true;
        }
        parts[i] = old;
    }
    false
}

/// Smallest number of forests covering the edges, by exhaustive search
/// starting from the `⌈e/(v-1)⌉` lower bound.
pub fn edge_arboricity(g: &SimpleGraph) -> usize {
    let edges = g.edges();
    if edges.is_empty() {
        return 0;
    }
    let lower = edges.len().div_ceil(g.n() - 1);
    (lower..=edges.len())
        .find(|&p| {
            let mut forests: Vec<Vec<usize>> = (0..p).map(|_| (0..g.n()).collect()).collect();
            assign_edges(&edges, 0, &mut forests, 0)
        })
        .expect("one forest per edge always works")
}

fn find(parent: &[usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

fn assign_edges(
    edges: &[crate::graph::Edge],
    idx: usize,
    forests: &mut [Vec<usize>],
    used: usize,
) -> bool {
    if idx == edges.len() {
        return true;
    }
    let e = edges[idx];
    let limit = (used + 1).min(forests.len());
    for i in 0..limit {
        let (ru, rv) = (find(&forests[i], e.u), find(&forests[i], e.v));
        if ru == rv {
            continue;
        }
        forests[i][ru] = rv;
        if assign_edges(edges, idx + 1, forests, used.max(i + 1)) {
            return true;
        }
        forests[i][ru] = ru;
    }
    false
}

/// Nash-Williams: `max ⌈e(S)/(|S|-1)⌉` over vertex subsets with `|S| >= 2`.
/// Independent of [`edge_arboricity`]; used to cross-check it.
pub fn nash_williams_bound(g: &SimpleGraph) -> usize {
    let n = g.n();
    let mut best = 0;
    for mask in 1..=low_mask(n) {
        let k = mask.count_ones() as usize;
        if k < 2 {
            continue;
        }
        best = best.max(g.edges_in(mask).div_ceil(k - 1));
    }
    best
}

pub fn chromatic_number(g: &SimpleGraph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    // Vertices in decreasing degree order colour faster.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(g.degree(v)));
    (1..=n)
        .find(|&k| {
            let mut colour = vec![usize::MAX; n];
            colour_rec(g, &order, 0, k, 0, &mut colour)
        })
        .unwrap_or(n)
}

fn colour_rec(
    g: &SimpleGraph,
    order: &[usize],
    idx: usize,
    k: usize,
    used: usize,
    colour: &mut [usize],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if Bits32(g.neighbours(v)).any(|w| colour[w] == c) {
            continue;
        }
        colour[v] = c;
        if colour_rec(g, order, idx + 1, k, used.max(c + 1), colour) {
            return true;
        }
        colour[v] = usize::MAX;
    }
    false
}

/// Shortest cycle length via BFS from every vertex.
pub fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for y in Bits32(g.neighbours(x)) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Longest cycle length, `None` for forests.
pub fn circumference(g: &SimpleGraph) -> Option<usize> {
    let n = g.n();
    let mut best = 0usize;
    for s in 0..n {
        // Cycles whose smallest vertex is `s`.
        let allowed = low_mask(n) & !low_mask(s + 1);
        longest_cycle_from(g, s, s, 1 << s, 1, allowed, &mut best);
    }
    (best >= 3).then_some(best)
}

fn longest_cycle_from(
    g: &SimpleGraph,
    start: usize,
    at: usize,
    visited: u32,
    len: usize,
    allowed: u32,
    best: &mut usize,
) {
    if len >= 3 && g.has_edge(at, start) {
        *best = (*best).max(len);
    }
    for y in Bits32(g.neighbours(at) & allowed & !visited) {
        longest_cycle_from(g, start, y, visited | 1 << y, len + 1, allowed, best);
    }
}
