//! Generators for the standard star-colourings: lexical, orientable, rainbow
//! blow-ups, star- and graph-modified colourings, and the extremal families
//! for cycles, `K_4`, `K_4^-` and larger cliques.
//!
//! Vertex `v_i` of the usual `v_1, .., v_n` notation is vertex `i - 1` here.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{balanced_sizes, binom, turan_edges, Bits32};
use crate::colouring::StarColouring;
use crate::error::{check_cap, invalid, precondition, Result};
use crate::graph::{complete_edges, Edge, SimpleGraph};
use crate::tournament::Tournament;
use crate::MAX_VERTICES;

/// Class `i` is the star from `i` to every later vertex.
pub fn lexical(n: usize) -> Result<StarColouring> {
    if n == 0 {
        return Err(invalid("lexical colouring needs n >= 1"));
    }
    check_cap("colouring vertices", n, MAX_VERTICES)?;
    let classes = (0..n.saturating_sub(1))
        .map(|i| (i + 1..n).map(|j| Edge::new(i, j)).collect())
        .collect();
    Ok(StarColouring::build_unchecked(n, classes))
}

/// One class per vertex of positive out-degree: its out-star.
pub fn orientable(t: &Tournament) -> Result<StarColouring> {
    check_cap("colouring vertices", t.n(), MAX_VERTICES)?;
    let classes = (0..t.n())
        .filter(|&v| t.out_mask(v) != 0)
        .map(|v| Bits32(t.out_mask(v)).map(|u| Edge::new(v, u)).collect())
        .collect();
    Ok(StarColouring::build_unchecked(t.n(), classes))
}

/// Colouring used inside one part of a rainbow blow-up.
#[derive(Debug, Clone)]
pub enum PartColouring {
    Lexical,
    Explicit(StarColouring),
    Blowup(Box<BlowupSpec>),
}

/// Parts `0..sizes[0]`, then the next `sizes[1]` vertices, and so on.
#[derive(Debug, Clone)]
pub struct BlowupSpec {
    pub sizes: Vec<usize>,
    pub inner: Vec<PartColouring>,
}

impl BlowupSpec {
    /// `parts` balanced parts (largest first), each lexical.
    pub fn balanced_lexical(n: usize, parts: usize) -> Result<Self> {
        if parts == 0 || parts > n {
            return Err(invalid(format!(
                "cannot split {n} vertices into {parts} parts"
            )));
        }
        Ok(BlowupSpec {
            sizes: balanced_sizes(n, parts),
            inner: vec![PartColouring::Lexical; parts],
        })
    }

    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }
}

/// Inner colourings on each part, and a fresh colour on every cross edge.
pub fn rainbow_blowup(spec: &BlowupSpec) -> Result<StarColouring> {
    let n = spec.n();
    check_cap("colouring vertices", n, MAX_VERTICES)?;
    if spec.sizes.len() != spec.inner.len() || spec.sizes.is_empty() {
        return Err(invalid("one inner colouring per part is required"));
    }
    let (lo, hi) = (
        *spec.sizes.iter().min().expect("non-empty"),
        *spec.sizes.iter().max().expect("non-empty"),
    );
    if hi - lo > 1 || lo == 0 {
        return Err(invalid(format!(
            "part sizes {:?} are not balanced",
            spec.sizes
        )));
    }
    let mut part_of = Vec::with_capacity(n);
    let mut classes: Vec<Vec<Edge>> = Vec::new();
    let mut offset = 0;
    for (p, (&size, inner)) in spec.sizes.iter().zip(&spec.inner).enumerate() {
        let c = match inner {
            PartColouring::Lexical => lexical(size)?,
            PartColouring::Explicit(c) => c.clone(),
            PartColouring::Blowup(b) => rainbow_blowup(b)?,
        };
        if c.n() != size {
            return Err(invalid(format!(
                "part {p} has {size} vertices but its colouring has {}",
                c.n()
            )));
        }
        for class in c.classes() {
            classes.push(
                class
                    .iter()
                    .map(|e| Edge::new(e.u + offset, e.v + offset))
                    .collect(),
            );
        }
        part_of.extend(core::iter::repeat_n(p, size));
        offset += size;
    }
    for e in complete_edges(n) {
        if part_of[e.u] != part_of[e.v] {
            classes.push(vec![e]);
        }
    }
    Ok(StarColouring::build_unchecked(n, classes))
}

/// Expected colour count of a blow-up of lexical parts.
pub fn lexical_blowup_count(n: usize, parts: usize) -> usize {
    turan_edges(n, parts) + n - parts
}

/// What to recolour in [`modified`].
#[derive(Debug, Clone)]
pub enum ModificationSpec {
    /// Edge-disjoint stars, one fresh colour each.
    Stars(Vec<Vec<Edge>>),
    /// A fresh colour on every edge of the graph.
    Graph(SimpleGraph),
}

/// Moves each star (or each edge of `L`) into its own fresh class. Old classes
/// keep their remaining edges; emptied classes disappear.
pub fn modified(c: &StarColouring, m: &ModificationSpec) -> Result<StarColouring> {
    let n = c.n();
    let stars: Vec<Vec<Edge>> = match m {
        ModificationSpec::Stars(s) => s.clone(),
        ModificationSpec::Graph(l) => {
            if l.n() != n {
                return Err(invalid(format!(
                    "modification graph has {} vertices, colouring {n}",
                    l.n()
                )));
            }
            l.edges().into_iter().map(|e| vec![e]).collect()
        }
    };
    let mut taken = vec![false; n * n];
    for (i, s) in stars.iter().enumerate() {
        if s.is_empty() {
            return Err(invalid(format!("star {i} is empty")));
        }
        for e in s {
            if e.v >= n {
                return Err(crate::Error::VertexOutOfRange { vertex: e.v, n });
            }
            if taken[e.u * n + e.v] {
                return Err(invalid(format!(
                    "stars are not edge-disjoint at {}-{}",
                    e.u, e.v
                )));
            }
            taken[e.u * n + e.v] = true;
        }
        let (a, b) = (s[0].u, s[0].v);
        if !(s.iter().all(|e| e.contains(a)) || s.iter().all(|e| e.contains(b))) {
            return Err(invalid(format!("modification {i} is not a star")));
        }
    }
    let mut classes: Vec<Vec<Edge>> = c
        .classes()
        .iter()
        .map(|k| {
            k.iter()
                .copied()
                .filter(|e| !taken[e.u * n + e.v])
                .collect::<Vec<_>>()
        })
        .filter(|k| !k.is_empty())
        .collect();
    for mut s in stars {
        s.sort();
        classes.push(s);
    }
    Ok(StarColouring::build_unchecked(n, classes))
}

/// Lexical colouring of `K_n` modified by the graph `l`.
pub fn l_modified_lexical(l: &SimpleGraph) -> Result<StarColouring> {
    modified(&lexical(l.n().max(1))?, &ModificationSpec::Graph(l.clone()))
}

/// Extremal rainbow-`C_k`-free colouring: `A = 0..n-k+1` carries a
/// `C_k`-free tournament (transitive by default), every `x` in `A` has one
/// star over its out-neighbours and all of `B`, and `B` is rainbow.
pub fn cycle_extremal(
    n: usize,
    k: usize,
    a_tournament: Option<&Tournament>,
) -> Result<StarColouring> {
    if k < 3 || n < k {
        return Err(invalid(format!("need n >= k >= 3, got n = {n}, k = {k}")));
    }
    check_cap("colouring vertices", n, MAX_VERTICES)?;
    let a = n - k + 1;
    let default;
    let t = match a_tournament {
        Some(t) => {
            if t.n() != a {
                return Err(invalid(format!(
                    "tournament on A needs {a} vertices, got {}",
                    t.n()
                )));
            }
            if let Some(w) = t.ck_witness(k)? {
                return Err(precondition(format!(
                    "tournament contains the directed cycle {w:?}"
                )));
            }
            t
        }
        None => {
            default = Tournament::transitive(a)?;
            &default
        }
    };
    let b_mask = crate::bits::low_mask(n) & !crate::bits::low_mask(a);
    let mut classes: Vec<Vec<Edge>> = Vec::new();
    for x in 0..a {
        classes.push(
            Bits32(t.out_mask(x) | b_mask)
                .map(|y| Edge::new(x, y))
                .collect(),
        );
    }
    for e in complete_edges(n) {
        if e.u >= a {
            classes.push(vec![e]);
        }
    }
    Ok(StarColouring::build_unchecked(n, classes))
}

pub fn cycle_extremal_count(n: usize, k: usize) -> usize {
    n + binom(k - 2, 2) - 1
}

/// First `K_4` family: `V_1 = 0..s` with `v* = 0`, `V_2 = s..n`. Lexical inside
/// both parts, one bundled colour from each `v` in `V_1 - v*` to `V_2`, and
/// fresh colours from `v*` to `V_2`.
pub fn k4_extremal_two_part(n: usize, s: usize) -> Result<StarColouring> {
    if n < 4 || s < 2 || s >= n {
        return Err(invalid(format!(
            "need n >= 4 and 2 <= |V_1| <= n - 1, got n = {n}, |V_1| = {s}"
        )));
    }
    check_cap("colouring vertices", n, MAX_VERTICES)?;
    let mut classes: Vec<Vec<Edge>> = Vec::new();
    push_lexical(&mut classes, &(0..s).collect::<Vec<_>>());
    push_lexical(&mut classes, &(s..n).collect::<Vec<_>>());
    for v in 1..s {
        classes.push((s..n).map(|u| Edge::new(v, u)).collect());
    }
    for u in s..n {
        classes.push(vec![Edge::new(0, u)]);
    }
    Ok(StarColouring::build_unchecked(n, classes))
}

/// Second `K_4` family: three consecutive parts, lexical inside each, and
/// every vertex of `V_i` sends one colour to `V_{i+1}` (indices mod 3).
pub fn k4_extremal_three_part(n: usize, sizes: [usize; 3]) -> Result<StarColouring> {
    if n < 4 || sizes.iter().sum::<usize>() != n || sizes.contains(&0) {
        return Err(invalid(format!(
            "need three non-empty parts summing to n >= 4, got {sizes:?} for n = {n}"
        )));
    }
    check_cap("colouring vertices", n, MAX_VERTICES)?;
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut offset = 0;
    for &s in &sizes {
        parts.push((offset..offset + s).collect());
        offset += s;
    }
    let mut classes: Vec<Vec<Edge>> = Vec::new();
    for p in &parts {
        push_lexical(&mut classes, p);
    }
    for i in 0..3 {
        for &v in &parts[i] {
            classes.push(
                parts[(i + 1) % 3]
                    .iter()
                    .map(|&u| Edge::new(v, u))
                    .collect(),
            );
        }
    }
    Ok(StarColouring::build_unchecked(n, classes))
}

fn push_lexical(classes: &mut Vec<Vec<Edge>>, order: &[usize]) {
    for (i, &v) in order.iter().enumerate() {
        if i + 1 < order.len() {
            let mut class: Vec<Edge> = order[i + 1..].iter().map(|&u| Edge::new(v, u)).collect();
            class.sort();
            classes.push(class);
        }
    }
}

/// Shape of the even case of the `K_4^-` family: the graph `S` on
/// `{v_{2a-1}, v_{2a}, v_{2a+1}}` (vertices `2a-2, 2a-1, 2a`), with one or two
/// edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenShape {
    pub a: usize,
    pub s_edges: Vec<Edge>,
}

impl EvenShape {
    /// `a = 1` and `S = {v_1 v_2}`.
    pub fn simple() -> Self {
        EvenShape {
            a: 1,
            s_edges: vec![Edge::new(0, 1)],
        }
    }
}

/// Edges of the auxiliary graph `J`, grouped by component.
pub fn k4minus_components(n: usize, shape: Option<&EvenShape>) -> Result<Vec<Vec<Edge>>> {
    let mut comps: Vec<Vec<Edge>> = Vec::new();
    if n % 2 == 1 {
        if shape.is_some() {
            return Err(invalid("odd n takes no even-case shape"));
        }
        let m = n / 2;
        for i in 0..m {
            comps.push(vec![Edge::new(2 * i, 2 * i + 1)]);
        }
        return Ok(comps);
    }
    if n <= 2 {
        if shape.is_some() {
            return Err(invalid("n = 2 has no room for S"));
        }
        return Ok(comps);
    }
    let default = EvenShape::simple();
    let shape = shape.unwrap_or(&default);
    let a = shape.a;
    if a == 0 || 2 * a + 1 > n - 1 {
        return Err(invalid(format!(
            "need 1 <= a and 2a + 1 <= n - 1, got a = {a}"
        )));
    }
    let trio = [2 * a - 2, 2 * a - 1, 2 * a];
    let mut s = shape.s_edges.clone();
    s.sort();
    s.dedup();
    if s.len() != shape.s_edges.len()
        || !(1..=2).contains(&s.len())
        || s.iter()
            .any(|e| !trio.contains(&e.u) || !trio.contains(&e.v))
    {
        return Err(invalid(format!("S must have one or two edges on {trio:?}")));
    }
    for i in 0..a - 1 {
        comps.push(vec![Edge::new(2 * i, 2 * i + 1)]);
    }
    comps.push(s);
    let mut j = 2 * a + 1;
    while j < n - 2 {
        comps.push(vec![Edge::new(j, j + 1)]);
        j += 2;
    }
    Ok(comps)
}

/// Extremal rainbow-`K_4^-`-free colouring: lexical base, then one fresh
/// colour per component of `J`.
pub fn k4minus_extremal(n: usize, shape: Option<&EvenShape>) -> Result<StarColouring> {
    if n < 2 {
        return Err(invalid("need n >= 2"));
    }
    let comps = k4minus_components(n, shape)?;
    modified(&lexical(n)?, &ModificationSpec::Stars(comps))
}

pub fn k4minus_count(n: usize) -> usize {
    3 * (n - 1) / 2
}

/// Adds vertex `n` joined to everything by fresh colours.
pub fn apex_extension(c: &StarColouring) -> Result<StarColouring> {
    let n = c.n() + 1;
    check_cap("colouring vertices", n, MAX_VERTICES)?;
    let mut classes = c.classes().to_vec();
    for i in 0..n - 1 {
        classes.push(vec![Edge::new(i, n - 1)]);
    }
    Ok(StarColouring::build_unchecked(n, classes))
}

/// Rainbow `K_{v(H)-1}`, then each further vertex gets `δ(H) - 1` stars
/// splitting the earlier vertices round-robin.
pub fn min_degree_construction(n: usize, h: &SimpleGraph) -> Result<StarColouring> {
    let v = h.n();
    let delta = if v == 0 { 0 } else { h.min_degree() };
    if delta < 2 {
        return Err(precondition(format!("minimum degree {delta} < 2")));
    }
    if n < v {
        return Err(invalid(format!("need n >= v(H) = {v}")));
    }
    check_cap("colouring vertices", n, MAX_VERTICES)?;
    let mut classes: Vec<Vec<Edge>> = complete_edges(v - 1).into_iter().map(|e| vec![e]).collect();
    for x in v - 1..n {
        let mut parts: Vec<Vec<Edge>> = vec![Vec::new(); delta - 1];
        for i in 0..x {
            parts[i % (delta - 1)].push(Edge::new(i, x));
        }
        classes.extend(parts);
    }
    Ok(StarColouring::build_unchecked(n, classes))
}

pub fn min_degree_count(n: usize, h: &SimpleGraph) -> usize {
    binom(h.n() - 1, 2) + (h.min_degree() - 1) * (n - h.n() + 1)
}

/// Rainbow blow-up lower bound for `K_m`, `m >= 5`. Odd `m = 2k + 1` uses `k`
/// lexical parts; even `m = 2k` uses `k - 1` parts with the largest one
/// carrying a rainbow-`K_4`-free colouring with `2 n_1 - 3` colours.
pub fn clique_blowup_lower(n: usize, m: usize) -> Result<StarColouring> {
    if m < 5 {
        return Err(invalid(format!("clique order {m} < 5")));
    }
    if n < m {
        return Err(invalid(format!("need n >= m, got n = {n}, m = {m}")));
    }
    let k = m / 2;
    if m % 2 == 1 {
        return rainbow_blowup(&BlowupSpec::balanced_lexical(n, k)?);
    }
    let mut spec = BlowupSpec::balanced_lexical(n, k - 1)?;
    let n1 = spec.sizes[0];
    spec.inner[0] = PartColouring::Explicit(match n1 {
        3 => StarColouring::rainbow(3)?,
        _ => k4_extremal_two_part(n1, 2)?,
    });
    rainbow_blowup(&spec)
}

pub fn clique_blowup_count(n: usize, m: usize) -> usize {
    let k = m / 2;
    if m % 2 == 1 {
        turan_edges(n, k) + n - k
    } else {
        turan_edges(n, k - 1) + n + n.div_ceil(k - 1) - k - 1
    }
}

/// `L`-modified lexical colouring where `L` is an extremal graph with no cycle
/// of length at most the circumference of `H`. Since `ea(H) >= 3`, removing
/// any forest from `H` leaves a cycle, and that cycle has length at most the
/// circumference, so no rainbow `H` survives.
pub fn girth_modified_lower(n: usize, h: &SimpleGraph) -> Result<StarColouring> {
    let inv = crate::invariants::graph_invariants(h)?;
    if inv.ea < 3 {
        return Err(precondition(format!("edge arboricity {} < 3", inv.ea)));
    }
    let longest = crate::invariants::circumference(h).expect("ea >= 3 forces a cycle");
    let family: Vec<SimpleGraph> = (3..=longest)
        .map(|l| crate::graph::cycle(l).expect("l >= 3"))
        .collect();
    let ex = crate::oracle::ex_small(n, &family)?;
    l_modified_lexical(&ex.witness)
}
