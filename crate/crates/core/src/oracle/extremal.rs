use alloc::vec;
use alloc::vec::Vec;

use super::SearchStats;
use crate::bits::{subsets_of_size, Bits32};
use crate::error::{check_cap, invalid, Result};
use crate::graph::{complete_edges, contains_subgraph, Edge, SimpleGraph};

/// Vertex cap for [`ex_small`].
pub const EX_CAP: usize = 10;
/// Side cap for [`zarankiewicz_small`].
pub const ZARANKIEWICZ_CAP: usize = 7;

/// An exact extremal number with one extremal graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExResult {
    pub value: usize,
    pub witness: SimpleGraph,
    pub stats: SearchStats,
}

/// `ex(n, family)`: the most edges in an `n`-vertex graph containing no
/// member of `family` as a subgraph.
///
/// Searches by maximum degree `d`, downwards: vertex 0 has degree `d` with
/// neighbours `1..=d`, and no vertex exceeds `d`.
pub fn ex_small(n: usize, family: &[SimpleGraph]) -> Result<ExResult> {
    check_cap("ex vertices", n, EX_CAP)?;
    if family.iter().any(|h| h.edge_count() == 0) {
        return Err(invalid("family members need at least one edge"));
    }
    let mut s = ExSearch {
        edges: Vec::new(),
        family,
        cap: 0,
        best: SimpleGraph::empty(n)?,
        best_count: 0,
        stats: SearchStats::default(),
    };
    for d in (1..n).rev() {
        if s.best_count >= n * d / 2 {
            break;
        }
        let mut g = SimpleGraph::empty(n)?;
        for v in 1..=d {
            g.add_edge(0, v);
        }
        if family.iter().any(|h| contains_subgraph(&g, h)) {
            continue;
        }
        s.cap = d;
        s.edges = complete_edges(n).into_iter().filter(|e| e.u != 0).collect();
        s.rec(0, &mut g, d);
    }
    Ok(ExResult {
        value: s.best_count,
        witness: s.best,
        stats: s.stats,
    })
}

struct ExSearch<'a> {
    /// Undecided edges, colex order.
    edges: Vec<Edge>,
    family: &'a [SimpleGraph],
    /// Degree cap for the current branch.
    cap: usize,
    best: SimpleGraph,
    best_count: usize,
    stats: SearchStats,
}

impl ExSearch<'_> {
    /// Edges still addable from position `i`, bounded by degree capacity.
    fn room(&self, i: usize, g: &SimpleGraph) -> usize {
        let rest = &self.edges[i..];
        let mut spare = 0;
        for v in 0..g.n() {
            let free = self.cap.saturating_sub(g.degree(v));
            let touching = rest.iter().filter(|e| e.contains(v)).count();
            spare += free.min(touching);
        }
        (spare / 2).min(rest.len())
    }

    fn rec(&mut self, i: usize, g: &mut SimpleGraph, count: usize) {
        self.stats.nodes_explored += 1;
        if count > self.best_count {
            self.best_count = count;
            self.best = g.clone();
        }
        if i == self.edges.len() {
            return;
        }
        if count + self.room(i, g) <= self.best_count {
            self.stats.pruned += 1;
            return;
        }
        let e = self.edges[i];
        if g.degree(e.u) < self.cap && g.degree(e.v) < self.cap {
            g.add_edge(e.u, e.v);
            if !self.family.iter().any(|h| contains_subgraph(g, h)) {
                self.rec(i + 1, g, count + 1);
            }
            g.remove_edge(e.u, e.v);
        }
        self.rec(i + 1, g, count);
    }
}

/// `z(m, n; s, t)`: the most edges in an `m × n` bipartite graph with no `s`
/// rows sharing `t` common columns.
///
/// Rows are listed by decreasing size, ties by increasing mask, and the
/// first row is an initial segment of the columns. The witness has rows
/// `0..m` and columns `m..m + n`.
pub fn zarankiewicz_small(m: usize, n: usize, s: usize, t: usize) -> Result<ExResult> {
    check_cap("Zarankiewicz rows", m, ZARANKIEWICZ_CAP)?;
    check_cap("Zarankiewicz columns", n, ZARANKIEWICZ_CAP)?;
    if s == 0 || t == 0 {
        return Err(invalid("s and t must be positive"));
    }
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|&x| (core::cmp::Reverse(x.count_ones()), x));
    let mut z = ZSearch {
        m,
        s,
        t,
        masks,
        rows: Vec::with_capacity(m),
        best: 0,
        best_rows: vec![0; m],
        stats: SearchStats::default(),
    };
    for size in (0..=n).rev().filter(|_| m > 0) {
        z.rows.push((1u32 << size) - 1);
        if z.ok_last() {
            let start = z
                .masks
                .iter()
                .position(|&x| x == (1u32 << size) - 1)
                .expect("mask present");
            z.rec(start, size);
        }
        z.rows.pop();
    }
    let mut g = SimpleGraph::empty(m + n)?;
    for (r, &mask) in z.best_rows.iter().enumerate() {
        for c in Bits32(mask) {
            g.add_edge(r, m + c);
        }
    }
    Ok(ExResult {
        value: z.best,
        witness: g,
        stats: z.stats,
    })
}

struct ZSearch {
    m: usize,
    s: usize,
    t: usize,
    masks: Vec<u32>,
    rows: Vec<u32>,
    best: usize,
    best_rows: Vec<u32>,
    stats: SearchStats,
}

impl ZSearch {
    /// No `s` rows including the newest share `t` columns.
    fn ok_last(&self) -> bool {
        let k = self.rows.len();
        if k < self.s {
            return true;
        }
        let last = self.rows[k - 1];
        subsets_of_size(k - 1, self.s - 1).into_iter().all(|sub| {
            let common = Bits32(sub).fold(last, |acc, i| acc & self.rows[i]);
            (common.count_ones() as usize) < self.t
        })
    }

    /// `rows` is non-empty; the next row comes at or after mask index `from`.
    fn rec(&mut self, from: usize, last_size: usize) {
        self.stats.nodes_explored += 1;
        let have: usize = self.rows.iter().map(|r| r.count_ones() as usize).sum();
        let left = self.m - self.rows.len();
        if left == 0 {
            if have > self.best {
                self.best = have;
                self.best_rows = self.rows.clone();
            }
            return;
        }
        if have + left * last_size <= self.best {
            self.stats.pruned += 1;
            return;
        }
        for idx in from..self.masks.len() {
            let mask = self.masks[idx];
            let size = mask.count_ones() as usize;
            if have + size * left <= self.best {
                // Later masks are no larger.
                self.stats.pruned += 1;
                break;
            }
            self.rows.push(mask);
            if self.ok_last() {
                self.rec(idx, size);
            }
            self.rows.pop();
        }
    }
}
