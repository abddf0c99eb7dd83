//! Rainbow subgraph detection, rainbow Hamilton cycles and the
//! rainbow-join procedure.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::bits::{low_mask, subsets_of_size, Bits32, Bits64};
use crate::canon::CanonTarget;
use crate::colouring::{Centre, StarColouring};
use crate::error::{invalid, precondition, Result};
use crate::graph::{cycle, search_order, Edge, SimpleGraph};
use crate::tournament::{Digraph, Tournament};

/// A rainbow copy of `pattern`: pattern vertex `p` sits at `map[p]`, and
/// `colours[i]` is the colour of the `i`-th edge of `pattern.edges()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowCertificate {
    pub pattern: SimpleGraph,
    pub map: Vec<usize>,
    pub colours: Vec<usize>,
}

impl RainbowCertificate {
    pub fn from_map(c: &StarColouring, pattern: &SimpleGraph, map: Vec<usize>) -> Self {
        let colours = pattern
            .edges()
            .iter()
            .map(|e| c.colour(map[e.u], map[e.v]))
            .collect();
        RainbowCertificate {
            pattern: pattern.clone(),
            map,
            colours,
        }
    }

    /// Re-checks the certificate against `c` from scratch.
    pub fn verify(&self, c: &StarColouring) -> bool {
        let n = c.n();
        if self.map.len() != self.pattern.n() || self.map.iter().any(|&v| v >= n) {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in &self.map {
            if core::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        let edges = self.pattern.edges();
        if edges.len() != self.colours.len() {
            return false;
        }
        let mut used = vec![false; c.colour_count()];
        for (e, &col) in edges.iter().zip(&self.colours) {
            if c.colour(self.map[e.u], self.map[e.v]) != col
                || core::mem::replace(&mut used[col], true)
            {
                return false;
            }
        }
        true
    }
}

/// Restrictions for [`find_rainbow_with`].
#[derive(Debug, Clone, Copy)]
pub struct RainbowQuery {
    /// Host vertices the copy may use.
    pub allowed: u32,
    /// Colours the copy may not use.
    pub forbidden: u128,
    /// A host vertex the copy must use.
    pub required: Option<usize>,
    /// Try only one root per twin class of the colouring.
    pub twin_roots: bool,
}

impl RainbowQuery {
    pub fn anywhere(n: usize) -> Self {
        RainbowQuery {
            allowed: low_mask(n),
            forbidden: 0,
            required: None,
            twin_roots: true,
        }
    }
}

/// Exhaustive search for a rainbow copy of `h`.
pub fn find_rainbow(c: &StarColouring, h: &SimpleGraph) -> Option<RainbowCertificate> {
    find_rainbow_with(c, h, &RainbowQuery::anywhere(c.n()))
}

pub fn has_rainbow(c: &StarColouring, h: &SimpleGraph) -> bool {
    find_rainbow(c, h).is_some()
}

pub fn find_rainbow_with(
    c: &StarColouring,
    h: &SimpleGraph,
    q: &RainbowQuery,
) -> Option<RainbowCertificate> {
    let map = rainbow_map(c, h, q)?;
    Some(RainbowCertificate::from_map(c, h, map))
}

struct Search<'a> {
    c: &'a StarColouring,
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
    image: Vec<usize>,
    allowed: u32,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, used_v: u32, used_c: u128, roots: u32) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let cands = if depth == 0 {
            roots
        } else {
            self.allowed & !used_v
        };
        for x in Bits32(cands) {
            let mut cols = used_c;
            let mut ok = true;
            for &j in &self.back[depth] {
                let bit = 1u128 << self.c.colour(self.image[j], x);
                if cols & bit != 0 {
                    ok = false;
                    break;
                }
                cols |= bit;
            }
            if !ok {
                continue;
            }
            self.image[depth] = x;
            if self.run(depth + 1, used_v | 1 << x, cols, 0) {
                return true;
            }
        }
        false
    }
}

fn rainbow_map(c: &StarColouring, h: &SimpleGraph, q: &RainbowQuery) -> Option<Vec<usize>> {
    let hn = h.n();
    if hn > q.allowed.count_ones() as usize {
        return None;
    }
    if hn == 0 {
        return Some(Vec::new());
    }
    let starts: Vec<usize> = match q.required {
        // The required host vertex may carry any pattern vertex.
        Some(_) => (0..hn).collect(),
        None => vec![usize::MAX],
    };
    for p in starts {
        let order = if p == usize::MAX {
            search_order(h, &[])
        } else {
            search_order(h, &[p])
        };
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (0..i).filter(|&j| h.has_edge(v, order[j])).collect())
            .collect();
        let roots = match q.required {
            Some(w) => {
                if q.allowed >> w & 1 == 1 {
                    1u32 << w
                } else {
                    0
                }
            }
            None if q.twin_roots => twin_free_roots(c, q.allowed),
            None => q.allowed,
        };
        let mut s = Search {
            c,
            order,
            back,
            image: vec![usize::MAX; hn],
            allowed: q.allowed,
        };
        if s.run(0, 0, q.forbidden, roots) {
            let mut map = vec![0; hn];
            for (i, &v) in s.order.iter().enumerate() {
                map[v] = s.image[i];
            }
            return Some(map);
        }
    }
    None
}

/// Allowed vertices that are not preceded by an allowed twin.
fn twin_free_roots(c: &StarColouring, allowed: u32) -> u32 {
    if allowed != low_mask(c.n()) {
        return allowed;
    }
    let mut roots = 0u32;
    for x in Bits32(allowed) {
        if !(0..x).any(|y| roots >> y & 1 == 1 && c.twins(y, x)) {
            roots |= 1 << x;
        }
    }
    roots
}

/// Every `l` in `3..=n` with a rainbow `C_l`, with a certificate each.
pub fn rainbow_cycle_spectrum(c: &StarColouring) -> Vec<(usize, RainbowCertificate)> {
    (3..=c.n())
        .filter_map(|l| find_rainbow(c, &cycle(l).expect("l >= 3")).map(|cert| (l, cert)))
        .collect()
}

/// Vertex sequence of a rainbow cycle certificate on `C_l`.
pub fn cycle_vertices(cert: &RainbowCertificate) -> Vec<usize> {
    cert.map.clone()
}

fn cycle_certificate(c: &StarColouring, verts: &[usize]) -> Option<RainbowCertificate> {
    if verts.len() < 3 {
        return None;
    }
    let cert = RainbowCertificate::from_map(c, &cycle(verts.len()).ok()?, verts.to_vec());
    cert.verify(c).then_some(cert)
}

/// Whether `verts` (cyclically) is a rainbow cycle of `c`.
pub fn is_rainbow_cycle(c: &StarColouring, verts: &[usize]) -> bool {
    cycle_certificate(c, verts).is_some()
}

/// Builds a rainbow Hamilton cycle of `c` from a rainbow cycle through every
/// vertex except `v`, given that `v` centres at least two classes. When
/// `around` is `None` such a cycle is searched for first.
pub fn extend_rainbow_cycle(
    c: &StarColouring,
    v: usize,
    around: Option<&[usize]>,
) -> Result<RainbowCertificate> {
    let n = c.n();
    if v >= n {
        return Err(crate::Error::VertexOutOfRange { vertex: v, n });
    }
    if n < 3 {
        return Err(precondition("need n >= 3"));
    }
    let at_v = c.classes_centred_at(v);
    if at_v.len() < 2 {
        return Err(precondition(format!(
            "vertex {v} centres {} class(es), need 2",
            at_v.len()
        )));
    }
    let ring: Vec<usize> = match around {
        Some(r) => r.to_vec(),
        None => {
            if n == 3 {
                return Err(precondition("K_2 has no cycle to extend"));
            }
            let rest: Vec<usize> = (0..n).filter(|&x| x != v).collect();
            let sub = c.restrict(&rest);
            let cert = find_rainbow(&sub, &cycle(n - 1)?).ok_or_else(|| {
                precondition(format!("no rainbow C_{} avoiding vertex {v}", n - 1))
            })?;
            cert.map.iter().map(|&i| rest[i]).collect()
        }
    };
    if ring.len() + 1 != n || ring.contains(&v) || !is_rainbow_cycle(c, &ring) {
        return Err(precondition(
            "supplied cycle is not a rainbow cycle on the other vertices",
        ));
    }
    let t = extension_orientation(c, v, &ring);
    let cycles = t
        .moon_cycles()
        .map_err(|_| precondition("star orientation is not strongly connected"))?;
    let ham = cycles.last().expect("n >= 3");
    cycle_certificate(c, ham).ok_or_else(|| precondition("directed Hamilton cycle is not rainbow"))
}

/// Orientation in which every class points uniformly into or out of its
/// centre: classes meeting the ring follow the ring's direction, the lowest
/// class centred at `v` points into `v`, and all others point away from
/// their centre (the lower endpoint for single edges away from `v`).
fn extension_orientation(c: &StarColouring, v: usize, ring: &[usize]) -> Tournament {
    let n = c.n();
    let mut t = Tournament::empty_unchecked(n);
    let mut ring_arc: Vec<Option<(usize, usize)>> = vec![None; c.colour_count()];
    for i in 0..ring.len() {
        let (a, b) = (ring[i], ring[(i + 1) % ring.len()]);
        ring_arc[c.colour(a, b)] = Some((a, b));
    }
    let toward_v = c.classes_centred_at(v)[0];
    for (id, class) in c.classes().iter().enumerate() {
        // `into` means every edge points at `centre`.
        let (centre, into) = match (c.centre(id), ring_arc[id]) {
            (Centre::Unique(z), Some((a, _))) => (z, a != z),
            (Centre::Pair(..), Some((_, b))) => (b, true),
            _ if id == toward_v => (v, true),
            (Centre::Unique(z), None) => (z, false),
            (Centre::Pair(a, b), None) => (if b == v { b } else { a }, false),
        };
        for e in class {
            let leaf = e.other(centre);
            if into {
                t.set_arc(leaf, centre);
            } else {
                t.set_arc(centre, leaf);
            }
        }
    }
    t
}

/// A rainbow Hamilton cycle. When every vertex centres at least two classes
/// one always exists and is built by the vertex-deletion recursion; the
/// exhaustive search covers everything else and any recursion gap.
pub fn rainbow_hamilton_cycle(c: &StarColouring) -> Option<RainbowCertificate> {
    let n = c.n();
    if n < 3 {
        return None;
    }
    if c.min_star_count() >= 2 {
        if let Some(ring) = hamilton_rec(c) {
            if let Some(cert) = cycle_certificate(c, &ring) {
                return Some(cert);
            }
        }
    }
    find_rainbow(c, &cycle(n).expect("n >= 3"))
}

/// The recursion behind [`rainbow_hamilton_cycle`]; assumes `min ⊛ >= 2`.
pub fn hamilton_rec(c: &StarColouring) -> Option<Vec<usize>> {
    let n = c.n();
    if n == 3 {
        return is_rainbow_cycle(c, &[0, 1, 2]).then(|| vec![0, 1, 2]);
    }
    // A vertex whose removal keeps every star count at least two.
    for x in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&y| y != x).collect();
        let sub = c.restrict(&rest);
        if sub.min_star_count() >= 2 {
            let inner = hamilton_rec(&sub)?;
            let ring: Vec<usize> = inner.iter().map(|&i| rest[i]).collect();
            return extend_rainbow_cycle(c, x, Some(&ring))
                .ok()
                .map(|cert| cert.map);
        }
    }
    // Otherwise delete a vertex `v` of in-degree one in the auxiliary digraph
    // and give `uz` a fresh colour.
    let counts: Vec<_> = (0..n).map(|x| c.star_count_unchecked(x)).collect();
    let in_a: Vec<bool> = counts
        .iter()
        .map(|s| s.total == 2 && s.single_edge >= 1)
        .collect();
    let single = |a: usize, b: usize| c.class(c.colour(a, b)).len() == 1;
    let mut in_deg = vec![0usize; n];
    let mut in_nb = vec![usize::MAX; n];
    for u in (0..n).filter(|&u| in_a[u]) {
        for w in (0..n).filter(|&w| w != u && single(u, w)) {
            in_deg[w] += 1;
            in_nb[w] = u;
        }
    }
    let bad = bad_triangle(c, &in_a);
    for v in 0..n {
        if in_deg[v] != 1 || bad.contains(&v) {
            continue;
        }
        let u = in_nb[v];
        let uv_class = c.colour(u, v);
        let z = c
            .classes_centred_at(v)
            .into_iter()
            .filter(|&id| id != uv_class)
            .flat_map(|id| c.class(id).iter().map(|e| e.other(v)).collect::<Vec<_>>())
            .filter(|&z| z != u && !single(u, z))
            .min();
        let Some(z) = z else { continue };
        let rest: Vec<usize> = (0..n).filter(|&y| y != v).collect();
        let reduced = c.recolour_fresh(u, z).restrict(&rest);
        if reduced.min_star_count() < 2 {
            continue;
        }
        let inner = hamilton_rec(&reduced)?;
        let ring: Vec<usize> = inner.iter().map(|&i| rest[i]).collect();
        let l = ring.len();
        if let Some(i) = (0..l).find(|&i| {
            let (a, b) = (ring[i], ring[(i + 1) % l]);
            (a, b) == (u, z) || (a, b) == (z, u)
        }) {
            let mut out = ring.clone();
            out.insert(i + 1, v);
            return Some(out);
        }
        return extend_rainbow_cycle(c, v, Some(&ring))
            .ok()
            .map(|cert| cert.map);
    }
    None
}

/// The unique triangle of single-edge classes with two vertices in `A`, if any.
fn bad_triangle(c: &StarColouring, in_a: &[bool]) -> Vec<usize> {
    let n = c.n();
    let single = |a: usize, b: usize| c.class(c.colour(a, b)).len() == 1;
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                let tri = [a, b, d];
                if single(a, b)
                    && single(a, d)
                    && single(b, d)
                    && tri.iter().filter(|&&x| in_a[x]).count() >= 2
                {
                    return tri.to_vec();
                }
            }
        }
    }
    Vec::new()
}

/// Dependent random choice: a set of `a` vertices whose `s`-subsets each
/// have at least `b` common out-neighbours. The result is verified by
/// enumeration; `None` after `retries` failed attempts.
pub fn dependent_random_choice<R: Rng + ?Sized>(
    d: &Digraph,
    s: usize,
    a: usize,
    b: usize,
    retries: usize,
    rng: &mut R,
) -> Result<Option<Vec<usize>>> {
    let n = d.n();
    if s == 0 || a == 0 {
        return Err(invalid("s and a must be positive"));
    }
    if n == 0 || a > n {
        return Ok(None);
    }
    let ins: Vec<u64> = (0..n).map(|v| d.in_mask(v)).collect();
    for _ in 0..retries {
        let mut pool = u64::MAX >> (64 - n);
        for _ in 0..s {
            pool &= ins[rng.gen_range(0..n)];
        }
        // Drop one vertex from each poor s-subset until none is left.
        loop {
            let members: Vec<usize> = Bits64(pool).collect();
            if members.len() < s {
                break;
            }
            let poor = first_poor_subset(d, &members, s, b);
            match poor {
                Some(sub) => pool &= !(1u64 << sub[s - 1]),
                None => break,
            }
        }
        if (pool.count_ones() as usize) < a {
            continue;
        }
        let chosen: Vec<usize> = Bits64(pool).take(a).collect();
        if first_poor_subset(d, &chosen, s, b).is_none() {
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}

fn first_poor_subset(d: &Digraph, members: &[usize], s: usize, b: usize) -> Option<Vec<usize>> {
    if members.len() < s {
        return None;
    }
    for mask in subsets_of_size(members.len(), s) {
        let sub: Vec<usize> = Bits32(mask).map(|i| members[i]).collect();
        let set = sub.iter().fold(0u64, |m, &v| m | 1 << v);
        if (d.common_out(set).count_ones() as usize) < b {
            return Some(sub);
        }
    }
    None
}

/// Orients every class away from a centre (a random endpoint for single
/// edges) and keeps one random arc per colour.
pub fn one_arc_per_colour<R: Rng + ?Sized>(
    c: &StarColouring,
    rng: &mut R,
) -> Result<(Digraph, Vec<(usize, usize)>)> {
    let mut d = Digraph::empty(c.n())?;
    let mut arcs = Vec::with_capacity(c.colour_count());
    for (id, class) in c.classes().iter().enumerate() {
        let centre = match c.centre(id) {
            Centre::Unique(z) => z,
            Centre::Pair(a, b) => {
                if rng.gen::<bool>() {
                    a
                } else {
                    b
                }
            }
        };
        let e: Edge = class[rng.gen_range(0..class.len())];
        let leaf = e.other(centre);
        d.add_arc(centre, leaf);
        arcs.push((centre, leaf));
    }
    Ok((d, arcs))
}

/// Default retry budget for the randomised procedures.
pub const JOIN_RETRIES: usize = 64;

/// Randomised search for a rainbow `t1 + t2` following the one-arc-per-colour
/// orientation. Any certificate returned is verified; `None` proves nothing.
pub fn find_rainbow_join<R: Rng + ?Sized>(
    c: &StarColouring,
    t1: &SimpleGraph,
    t2: &SimpleGraph,
    retries: usize,
    rng: &mut R,
) -> Result<Option<RainbowCertificate>> {
    let (s, t) = (t1.n(), t2.n());
    if s == 0 || s > t {
        return Err(invalid(format!("need 1 <= v(T1) <= v(T2), got {s}, {t}")));
    }
    if !t1.is_tree() || !t2.is_tree() {
        return Err(invalid("both join factors must be trees"));
    }
    let n = c.n();
    let h = t1.join(t2)?;
    if h.n() > n {
        return Ok(None);
    }
    for _ in 0..retries {
        let (d, _) = one_arc_per_colour(c, rng)?;
        let found = if s == 2 {
            join_bipartition_attempt(c, &d, t2, rng)
        } else {
            join_drc_attempt(c, &d, t1, t2, rng)?
        };
        if let Some(map) = found {
            let cert = RainbowCertificate::from_map(c, &h, map);
            if cert.verify(c) {
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

/// `K_2` case: random bipartition, an arc pair `x1, x2` in `A` with many
/// common out-neighbours in `B`, then a rainbow `t2` among them.
fn join_bipartition_attempt<R: Rng + ?Sized>(
    c: &StarColouring,
    d: &Digraph,
    t2: &SimpleGraph,
    rng: &mut R,
) -> Option<Vec<usize>> {
    let n = c.n();
    let side_a: u64 = (0..n)
        .filter(|_| rng.gen::<bool>())
        .fold(0, |m, v| m | 1 << v);
    let side_b = (u64::MAX >> (64 - n)) & !side_a;
    for x1 in Bits64(side_a) {
        for x2 in Bits64(side_a).filter(|&x| x > x1) {
            let bridge = c.colour(x1, x2);
            let mut ys = d.out_mask(x1) & d.out_mask(x2) & side_b;
            for y in Bits64(ys) {
                if c.colour(x1, y) == bridge || c.colour(x2, y) == bridge {
                    ys &= !(1 << y);
                }
            }
            if let Some(map) = tree_in(
                c,
                t2,
                ys as u32,
                cross_colours(c, &[x1, x2], ys) | 1 << bridge,
            ) {
                let mut full = vec![x1, x2];
                full.extend(map);
                return Some(full);
            }
        }
    }
    None
}

/// General case: dependent random choice for a set `A`, a rainbow `t1`
/// inside it, and a rainbow `t2` in the common out-neighbourhood.
fn join_drc_attempt<R: Rng + ?Sized>(
    c: &StarColouring,
    d: &Digraph,
    t1: &SimpleGraph,
    t2: &SimpleGraph,
    rng: &mut R,
) -> Result<Option<Vec<usize>>> {
    let (s, t) = (t1.n(), t2.n());
    let a = (s + 2).min(c.n());
    let b = t + s - 1;
    let Some(set_a) = dependent_random_choice(d, s, a, b, 1, rng)? else {
        return Ok(None);
    };
    let allowed = set_a.iter().fold(0u32, |m, &v| m | 1 << v);
    let Some(x_map) = tree_in(c, t1, allowed, 0) else {
        return Ok(None);
    };
    let x_set = x_map.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut ys = d.common_out(x_set) & !x_set;
    let t1_colours: u128 = t1
        .edges()
        .iter()
        .fold(0, |m, e| m | 1 << c.colour(x_map[e.u], x_map[e.v]));
    for y in Bits64(ys) {
        if x_map.iter().any(|&x| t1_colours >> c.colour(x, y) & 1 == 1) {
            ys &= !(1 << y);
        }
    }
    let forbidden = t1_colours | cross_colours(c, &x_map, ys);
    Ok(tree_in(c, t2, ys as u32, forbidden).map(|y_map| {
        let mut full = x_map;
        full.extend(y_map);
        full
    }))
}

fn cross_colours(c: &StarColouring, xs: &[usize], ys: u64) -> u128 {
    let mut set = 0u128;
    for &x in xs {
        for y in Bits64(ys) {
            set |= 1 << c.colour(x, y);
        }
    }
    set
}

fn tree_in(
    c: &StarColouring,
    t: &SimpleGraph,
    allowed: u32,
    forbidden: u128,
) -> Option<Vec<usize>> {
    rainbow_map(
        c,
        t,
        &RainbowQuery {
            allowed,
            forbidden,
            required: None,
            twin_roots: false,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle_extremal, lexical};
    use crate::graph::{complete, parse_pattern, path};
    use crate::rng::{random_star_colouring, stream};

    #[test]
    fn lexical_has_no_rainbow_cycle_but_every_tree() {
        let lex = lexical(6).unwrap();
        assert!(find_rainbow(&lex, &cycle(4).unwrap()).is_none());
        assert!(rainbow_cycle_spectrum(&lexical(5).unwrap()).is_empty());
        for name in ["P5", "star5", "P3", "M2"] {
            let cert = find_rainbow(&lex, &parse_pattern(name).unwrap()).expect(name);
            assert!(cert.verify(&lex));
        }
    }

    #[test]
    fn rainbow_colouring_contains_everything() {
        let r = StarColouring::rainbow(5).unwrap();
        assert!(find_rainbow(&r, &complete(4).unwrap()).unwrap().verify(&r));
        let spec: Vec<usize> = rainbow_cycle_spectrum(&r)
            .into_iter()
            .map(|(l, _)| l)
            .collect();
        assert_eq!(spec, vec![3, 4, 5]);
    }

    #[test]
    fn cycle_extremal_spectrum_stops_below_k() {
        let c = cycle_extremal(7, 5, None).unwrap();
        let spec: Vec<usize> = rainbow_cycle_spectrum(&c)
            .into_iter()
            .map(|(l, _)| l)
            .collect();
        assert!(!spec.contains(&5));
        assert!(spec.iter().all(|&l| l < 5));
    }

    fn naive_has_rainbow(c: &StarColouring, h: &SimpleGraph) -> bool {
        fn rec(c: &StarColouring, h: &SimpleGraph, map: &mut Vec<usize>) -> bool {
            if map.len() == h.n() {
                let mut cols: Vec<usize> = h
                    .edges()
                    .iter()
                    .map(|e| c.colour(map[e.u], map[e.v]))
                    .collect();
                let k = cols.len();
                cols.sort_unstable();
                cols.dedup();
                return cols.len() == k;
            }
            for x in 0..c.n() {
                if !map.contains(&x) {
                    map.push(x);
                    if rec(c, h, map) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        rec(c, h, &mut Vec::new())
    }

    #[test]
    fn agrees_with_naive_injections() {
        let mut rng = stream(9, 0);
        let patterns: Vec<SimpleGraph> = ["K3", "C4", "K4-", "P3", "star3", "M2", "K4"]
            .iter()
            .map(|p| parse_pattern(p).unwrap())
            .collect();
        for _ in 0..60 {
            let n = rng.gen_range(3..=6);
            let c = random_star_colouring(n, 0.4, &mut rng).unwrap();
            for h in &patterns {
                let fast = find_rainbow(&c, h);
                assert_eq!(fast.is_some(), naive_has_rainbow(&c, h));
                if let Some(cert) = fast {
                    assert!(cert.verify(&c));
                }
            }
        }
    }

    #[test]
    fn required_vertex_is_used() {
        let r = StarColouring::rainbow(5).unwrap();
        let mut q = RainbowQuery::anywhere(5);
        q.required = Some(4);
        let cert = find_rainbow_with(&r, &path(2).unwrap(), &q).unwrap();
        assert!(cert.map.contains(&4));
    }

    #[test]
    fn hamilton_cycles_when_every_star_count_is_two() {
        assert!(rainbow_hamilton_cycle(&StarColouring::rainbow(4).unwrap()).is_some());
        assert!(rainbow_hamilton_cycle(&lexical(5).unwrap()).is_none());
        let mut rng = stream(2, 0);
        let mut seen = 0;
        while seen < 40 {
            let n = rng.gen_range(4..=7);
            let c = random_star_colouring(n, 0.3, &mut rng).unwrap();
            if c.min_star_count() < 2 {
                continue;
            }
            seen += 1;
            let ring = hamilton_rec(&c).expect("recursion succeeds");
            assert!(is_rainbow_cycle(&c, &ring));
            assert_eq!(ring.len(), n);
        }
    }

    #[test]
    fn extension_needs_preconditions() {
        let lex = lexical(5).unwrap();
        assert!(extend_rainbow_cycle(&lex, 0, None).is_err());
        let r = StarColouring::rainbow(4).unwrap();
        let cert = extend_rainbow_cycle(&r, 3, Some(&[0, 1, 2])).unwrap();
        assert_eq!(cert.map.len(), 4);
        assert!(cert.verify(&r));
    }

    #[test]
    fn drc_basic_cases() {
        let mut rng = stream(1, 0);
        let full = Digraph::complete(20).unwrap();
        let a = dependent_random_choice(&full, 2, 3, 5, 8, &mut rng)
            .unwrap()
            .unwrap();
        assert_eq!(a.len(), 3);
        let empty = Digraph::empty(10).unwrap();
        assert!(dependent_random_choice(&empty, 1, 1, 1, 8, &mut rng)
            .unwrap()
            .is_none());
    }

    #[test]
    fn join_on_rainbow_and_lexical() {
        let mut rng = stream(3, 0);
        let r = StarColouring::rainbow(7).unwrap();
        let cert = find_rainbow_join(
            &r,
            &path(1).unwrap(),
            &path(2).unwrap(),
            JOIN_RETRIES,
            &mut rng,
        )
        .unwrap()
        .expect("rainbow K_7 contains everything");
        assert!(cert.verify(&r));
        let lex = lexical(12).unwrap();
        let p2 = path(2).unwrap();
        assert!(find_rainbow_join(&lex, &p2, &p2, 8, &mut rng)
            .unwrap()
            .is_none());
        assert!(find_rainbow(&lex, &p2.join(&p2).unwrap()).is_none());
    }
}
