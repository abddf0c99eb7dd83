use alloc::format;
use alloc::vec::Vec;

use crate::error::{check_cap, invalid, precondition, Result};
use crate::graph::{complete_bipartite_minus, contains_subgraph, Edge, SimpleGraph};

/// Largest join edge count accepted by [`check_redblue`].
pub const REDBLUE_EDGE_CAP: usize = 24;

/// Whether removing any forest from `t1 + t2` leaves an odd cycle or a
/// `K_{s,t}^-` with `s = v(t1)`, `t = v(t2)`.
///
/// Removing less leaves more, so it suffices to try spanning trees.
pub fn check_redblue(t1: &SimpleGraph, t2: &SimpleGraph) -> Result<bool> {
    let (s, t) = (t1.n(), t2.n());
    if !t1.is_tree() || !t2.is_tree() {
        return Err(invalid("both arguments must be trees"));
    }
    if s < 3 || t < 3 {
        return Err(precondition(format!(
            "need v(T1), v(T2) >= 3, got {s}, {t}"
        )));
    }
    let join = t1.join(t2)?;
    let edges = join.edges();
    check_cap("join edges", edges.len(), REDBLUE_EDGE_CAP)?;
    let target = complete_bipartite_minus(s.min(t), s.max(t))?;
    let mut st = TreeWalk {
        join: &join,
        edges: &edges,
        target: &target,
        parent: (0..join.n()).collect(),
        chosen: Vec::new(),
    };
    Ok(st.rec(0))
}

struct TreeWalk<'a> {
    join: &'a SimpleGraph,
    edges: &'a [Edge],
    target: &'a SimpleGraph,
    parent: Vec<usize>,
    chosen: Vec<Edge>,
}

impl TreeWalk<'_> {
    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    /// False as soon as some spanning tree leaves a bipartite remainder free
    /// of the target.
    fn rec(&mut self, i: usize) -> bool {
        let n = self.join.n();
        if self.chosen.len() + 1 == n {
            let mut rest = self.join.clone();
            for e in &self.chosen {
                rest.remove_edge(e.u, e.v);
            }
            return !rest.is_bipartite() || contains_subgraph(&rest, self.target);
        }
        if i == self.edges.len() || self.edges.len() - i < n - 1 - self.chosen.len() {
            return true;
        }
        let e = self.edges[i];
        let (a, b) = (self.find(e.u), self.find(e.v));
        if a != b {
            self.parent[a] = b;
            self.chosen.push(e);
            let ok = self.rec(i + 1);
            self.chosen.pop();
            self.parent[a] = a;
            if !ok {
                return false;
            }
        }
        self.rec(i + 1)
    }
}
