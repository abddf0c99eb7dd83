//! Labelled simple graphs, the pattern zoo, and plain subgraph search.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{low_mask, Bits32};
use crate::error::{invalid, Error, Result};

/// Largest vertex count of a [`SimpleGraph`] (adjacency rows are `u32`).
pub const MAX_GRAPH_VERTICES: usize = 32;

/// An unordered pair `{u, v}` stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalises the endpoint order. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "self-loop {a}-{a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.contains(other.u) || self.contains(other.v)
    }

    /// Position of this edge in colex order: (0,1),(0,2),(1,2),(0,3),...
    pub fn colex_index(&self) -> usize {
        self.v * (self.v - 1) / 2 + self.u
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// All edges of `K_n` in colex order.
pub fn complete_edges(n: usize) -> Vec<Edge> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            out.push(Edge { u, v });
        }
    }
    out
}

/// Undirected simple graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u32>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        crate::error::check_cap("graph vertices", n, MAX_GRAPH_VERTICES)?;
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut g = SimpleGraph::empty(n)?;
        for e in edges {
            let (a, b) = e.into();
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if g.has_edge(a, b) {
                let e = Edge::new(a, b);
                return Err(Error::DuplicateEdge(e.u, e.v));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub fn from_adjacency(adj: Vec<u32>) -> Self {
        SimpleGraph { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Self {
        let full = low_mask(n);
        let adj = (0..n).map(|v| full & !(1 << v)).collect();
        SimpleGraph { n, adj }
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub(crate) fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1 << b);
        self.adj[b] &= !(1 << a);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u32] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges sorted lexicographically by `(u, v)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in Bits32(self.adj[u] >> (u + 1)) {
                out.push(Edge { u, v: u + 1 + v });
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        let full = low_mask(self.n);
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1 << v))
            .collect();
        SimpleGraph { n: self.n, adj }
    }

    /// Subgraph induced by `mask`, relabelled to `0..popcount` in vertex order.
    pub fn induced(&self, mask: u32) -> Self {
        let verts: Vec<usize> = Bits32(mask).collect();
        let mut g = SimpleGraph {
            n: verts.len(),
            adj: vec![0; verts.len()],
        };
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn without_isolated(&self) -> Self {
        let mut mask = 0u32;
        for v in 0..self.n {
            if self.adj[v] != 0 {
                mask |= 1 << v;
            }
        }
        self.induced(mask)
    }

    /// Number of connected components of the subgraph induced by `mask`.
    pub fn components_in(&self, mask: u32) -> usize {
        let mut seen = 0u32;
        let mut count = 0;
        for s in Bits32(mask) {
            if seen >> s & 1 == 1 {
                continue;
            }
            count += 1;
            let mut frontier = 1u32 << s;
            seen |= frontier;
            while frontier != 0 {
                let mut next = 0u32;
                for x in Bits32(frontier) {
                    next |= self.adj[x] & mask;
                }
                frontier = next & !seen;
                seen |= frontier;
            }
        }
        count
    }

    /// Edge count of the subgraph induced by `mask`.
    pub fn edges_in(&self, mask: u32) -> usize {
        Bits32(mask)
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Whether the subgraph induced by `mask` is acyclic.
    pub fn is_forest_in(&self, mask: u32) -> bool {
        self.edges_in(mask) + self.components_in(mask) == mask.count_ones() as usize
    }

    pub fn is_forest(&self) -> bool {
        self.is_forest_in(low_mask(self.n))
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components_in(low_mask(self.n)) == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// Two-colouring when the graph is bipartite.
    pub fn bipartition(&self) -> Option<u32> {
        let mut side = 0u32;
        let mut seen = 0u32;
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            seen |= 1 << s;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                let xs = side >> x & 1;
                for y in Bits32(self.adj[x]) {
                    if seen >> y & 1 == 0 {
                        seen |= 1 << y;
                        if xs == 0 {
                            side |= 1 << y;
                        }
                        stack.push(y);
                    } else if side >> y & 1 == xs {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Relabels by `perm`: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut g = SimpleGraph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for e in self.edges() {
            g.add_edge(perm[e.u], perm[e.v]);
        }
        g
    }

    /// Disjoint union plus all cross edges; `self` occupies `0..self.n()`.
    pub fn join(&self, other: &SimpleGraph) -> Result<Self> {
        let n = self.n + other.n;
        let mut g = SimpleGraph::empty(n)?;
        for e in self.edges() {
            g.add_edge(e.u, e.v);
        }
        for e in other.edges() {
            g.add_edge(self.n + e.u, self.n + e.v);
        }
        for a in 0..self.n {
            for b in 0..other.n {
                g.add_edge(a, self.n + b);
            }
        }
        Ok(g)
    }
}

/// Pattern vertex order for backtracking: start at a vertex of maximum
/// degree, then always take the vertex with most already-ordered neighbours.
pub fn search_order(g: &SimpleGraph, start: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut order: Vec<usize> = start.to_vec();
    let mut placed: u32 = start.iter().fold(0, |m, &v| m | 1 << v);
    while order.len() < n {
        let best = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (g.neighbours(v) & placed).count_ones(),
                    g.degree(v),
                    core::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        order.push(best);
        placed |= 1 << best;
    }
    order
}

/// Finds a (not necessarily induced) copy of `pattern` in `host`, returning
/// the image of each pattern vertex.
pub fn find_subgraph(host: &SimpleGraph, pattern: &SimpleGraph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() {
        return None;
    }
    if pattern.n() == 0 {
        return Some(Vec::new());
    }
    let order = search_order(pattern, &[]);
    let back: Vec<u32> = order
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            order[..i]
                .iter()
                .enumerate()
                .filter(|&(_, &q)| pattern.has_edge(p, q))
                .fold(0u32, |m, (j, _)| m | 1 << j)
        })
        .collect();
    let mut image = vec![usize::MAX; order.len()];
    fn rec(
        depth: usize,
        host: &SimpleGraph,
        pattern: &SimpleGraph,
        order: &[usize],
        back: &[u32],
        used: u32,
        image: &mut [usize],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let mut cand = low_mask(host.n()) & !used;
        for j in Bits32(back[depth]) {
            cand &= host.neighbours(image[j]);
        }
        let need = pattern.degree(order[depth]);
        for h in Bits32(cand) {
            if host.degree(h) < need {
                continue;
            }
            image[depth] = h;
            if rec(depth + 1, host, pattern, order, back, used | 1 << h, image) {
                return true;
            }
        }
        false
    }
    if rec(0, host, pattern, &order, &back, 0, &mut image) {
        let mut map = vec![0; pattern.n()];
        for (i, &p) in order.iter().enumerate() {
            map[p] = image[i];
        }
        Some(map)
    } else {
        None
    }
}

pub fn contains_subgraph(host: &SimpleGraph, pattern: &SimpleGraph) -> bool {
    find_subgraph(host, pattern).is_some()
}

// ---------------------------------------------------------------------------
// Pattern zoo
// ---------------------------------------------------------------------------

pub fn cycle(k: usize) -> Result<SimpleGraph> {
    if k < 3 {
        return Err(invalid(format!("cycle length {k} < 3")));
    }
    SimpleGraph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
}

pub fn complete(k: usize) -> Result<SimpleGraph> {
    crate::error::check_cap("graph vertices", k, MAX_GRAPH_VERTICES)?;
    Ok(SimpleGraph::complete(k))
}

/// `K_k` minus the edge between its last two vertices.
pub fn complete_minus(k: usize) -> Result<SimpleGraph> {
    if k < 2 {
        return Err(invalid(format!("K_{k}^- needs k >= 2")));
    }
    let mut g = complete(k)?;
    g.remove_edge(k - 2, k - 1);
    Ok(g)
}

/// `K_{s,t}` with parts `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<SimpleGraph> {
    if s == 0 || t == 0 {
        return Err(invalid("complete bipartite parts must be non-empty"));
    }
    let mut g = SimpleGraph::empty(s + t)?;
    for a in 0..s {
        for b in 0..t {
            g.add_edge(a, s + b);
        }
    }
    Ok(g)
}

/// `K_{s,t}` minus the edge `{0, s}`.
pub fn complete_bipartite_minus(s: usize, t: usize) -> Result<SimpleGraph> {
    let mut g = complete_bipartite(s, t)?;
    g.remove_edge(0, s);
    Ok(g)
}

/// Path with `t` edges.
pub fn path(t: usize) -> Result<SimpleGraph> {
    SimpleGraph::from_edges(t + 1, (0..t).map(|i| (i, i + 1)))
}

/// The star `K_{1,t}` centred at vertex 0.
pub fn star(t: usize) -> Result<SimpleGraph> {
    if t == 0 {
        return Err(invalid("star needs at least one edge"));
    }
    SimpleGraph::from_edges(t + 1, (1..=t).map(|i| (0, i)))
}

/// Perfect matching with `m` edges.
pub fn matching(m: usize) -> Result<SimpleGraph> {
    if m == 0 {
        return Err(invalid("matching needs at least one edge"));
    }
    SimpleGraph::from_edges(2 * m, (0..m).map(|i| (2 * i, 2 * i + 1)))
}

/// Turán graph `T_parts(n)`, balanced parts of consecutive vertices, largest first.
pub fn turan(parts: usize, n: usize) -> Result<SimpleGraph> {
    if parts == 0 || parts > n.max(1) {
        return Err(invalid(format!(
            "Turán graph with {parts} parts on {n} vertices"
        )));
    }
    let sizes = crate::bits::balanced_sizes(n, parts);
    let mut part_of = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part_of.extend(core::iter::repeat_n(i, s));
    }
    let mut g = SimpleGraph::empty(n)?;
    for a in 0..n {
        for b in a + 1..n {
            if part_of[a] != part_of[b] {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// The `d`-dimensional hypercube.
pub fn hypercube(d: usize) -> Result<SimpleGraph> {
    if d == 0 || d > 5 {
        return Err(invalid(format!("hypercube dimension {d} outside 1..=5")));
    }
    let n = 1usize << d;
    let mut g = SimpleGraph::empty(n)?;
    for v in 0..n {
        for i in 0..d {
            let w = v ^ (1 << i);
            if v < w {
                g.add_edge(v, w);
            }
        }
    }
    Ok(g)
}

/// Parses a pattern name.
///
/// Grammar: `K<k>`, `K<k>-`, `C<k>`, `P<t>` (t edges), `M<m>`, `star<t>`,
/// `K<s>,<t>`, `K<s>,<t>-`, `T<l>(<n>)`, `Q<d>`, `join(<a>,<b>)`.
pub fn parse_pattern(name: &str) -> Result<SimpleGraph> {
    let s = name.trim();
    let bad = || Error::UnknownPattern(s.to_string());
    let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
    if let Some(inner) = s.strip_prefix("join(").and_then(|r| r.strip_suffix(')')) {
        let split = split_top_level(inner).ok_or_else(bad)?;
        let a = parse_pattern(&inner[..split])?;
        let b = parse_pattern(&inner[split + 1..])?;
        return a.join(&b);
    }
    if let Some(rest) = s.strip_prefix("star") {
        return star(num(rest)?);
    }
    if let Some(rest) = s.strip_prefix('T') {
        let (l, rest) = rest.split_once('(').ok_or_else(bad)?;
        let n = rest.strip_suffix(')').ok_or_else(bad)?;
        return turan(num(l)?, num(n)?);
    }
    if let Some(rest) = s.strip_prefix('K') {
        let (body, minus) = match rest.strip_suffix('-') {
            Some(b) => (b, true),
            None => (rest, false),
        };
        if let Some((a, b)) = body.split_once(',') {
            let (a, b) = (num(a)?, num(b)?);
            return if minus {
                complete_bipartite_minus(a, b)
            } else {
                complete_bipartite(a, b)
            };
        }
        let k = num(body)?;
        return if minus {
            complete_minus(k)
        } else {
            complete(k)
        };
    }
    if let Some(rest) = s.strip_prefix('C') {
        return cycle(num(rest)?);
    }
    if let Some(rest) = s.strip_prefix('P') {
        return path(num(rest)?);
    }
    if let Some(rest) = s.strip_prefix('M') {
        return matching(num(rest)?);
    }
    if let Some(rest) = s.strip_prefix('Q') {
        return hypercube(num(rest)?);
    }
    Err(bad())
}

fn split_top_level(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0
                // `K2,3` contains a bare comma; only split where the left side
                // parses on its own.
                && parse_pattern(&s[..i]).is_ok() && parse_pattern(&s[i + 1..]).is_ok() =>
            {
                return Some(i);
            }
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            SimpleGraph::from_edges(3, [(0, 0)]),
            Err(Error::SelfLoop(0))
        );
        assert_eq!(
            SimpleGraph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            SimpleGraph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn zoo_sizes() {
        let k4m = parse_pattern("K4-").unwrap();
        assert_eq!((k4m.n(), k4m.edge_count()), (4, 5));
        let t = parse_pattern("T2(5)").unwrap();
        assert_eq!((t.n(), t.edge_count()), (5, 6));
        assert!(contains_subgraph(&t, &complete_bipartite(2, 3).unwrap()));
        let q3 = parse_pattern("Q3").unwrap();
        assert_eq!((q3.n(), q3.edge_count(), q3.min_degree()), (8, 12, 3));
        let k23m = parse_pattern("K2,3-").unwrap();
        assert_eq!((k23m.n(), k23m.edge_count()), (5, 5));
        assert_eq!(parse_pattern("P3").unwrap().edge_count(), 3);
        assert_eq!(parse_pattern("star3").unwrap().max_degree(), 3);
        assert_eq!(parse_pattern("M2").unwrap().edge_count(), 2);
        assert!(parse_pattern("X9").is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn join_of_p1_and_p2_is_k5_minus() {
        let j = parse_pattern("join(P1,P2)").unwrap();
        let k5m = complete_minus(5).unwrap();
        assert_eq!(j.edge_count(), k5m.edge_count());
        assert!(contains_subgraph(&j, &k5m));
        let nested = parse_pattern("join(K2,3,P1)").unwrap();
        assert_eq!(nested.n(), 7);
    }

    #[test]
    fn forest_and_bipartite_checks() {
        assert!(path(4).unwrap().is_tree());
        assert!(!cycle(4).unwrap().is_forest());
        assert!(cycle(6).unwrap().is_bipartite());
        assert!(!cycle(5).unwrap().is_bipartite());
    }

    #[test]
    fn subgraph_search_respects_structure() {
        let c5 = cycle(5).unwrap();
        assert!(!contains_subgraph(&c5, &cycle(3).unwrap()));
        assert!(contains_subgraph(&complete(5).unwrap(), &c5));
        assert!(contains_subgraph(&c5, &path(4).unwrap()));
        assert!(!contains_subgraph(&c5, &path(5).unwrap()));
        assert!(contains_subgraph(&cycle(6).unwrap(), &matching(3).unwrap()));
    }
}
