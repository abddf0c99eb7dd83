//! Tournaments and small digraphs: strong components, Rédei paths, Moon
//! cycles and directed `C_k` search.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::bits::{low_mask, Bits32, Bits64};
use crate::error::{check_cap, invalid, precondition, Error, Result};
use crate::MAX_VERTICES;

/// Largest tournament handled (arc rows are `u32`).
pub const MAX_TOURNAMENT: usize = 32;

/// Orientation of `K_n`; `out[u]` has bit `v` iff `u -> v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    out: Vec<u32>,
}

impl Tournament {
    pub(crate) fn empty_unchecked(n: usize) -> Self {
        Tournament { n, out: vec![0; n] }
    }

    /// `i -> j` for every `i < j`.
    pub fn transitive(n: usize) -> Result<Self> {
        check_cap("tournament vertices", n, MAX_TOURNAMENT)?;
        let out = (0..n).map(|i| low_mask(n) & !low_mask(i + 1)).collect();
        Ok(Tournament { n, out })
    }

    /// Builds from arcs, requiring exactly one arc per pair.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        check_cap("tournament vertices", n, MAX_TOURNAMENT)?;
        let mut t = Tournament::empty_unchecked(n);
        for &(a, b) in arcs {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if t.has_arc(a, b) || t.has_arc(b, a) {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            t.set_arc(a, b);
        }
        if !t.is_complete() {
            return Err(invalid("arc list does not orient every pair"));
        }
        Ok(t)
    }

    /// Upper-triangular bit string, row-major: bit for pair `(i, j)`, `i < j`,
    /// is 1 iff `i -> j`.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_cap("tournament vertices (bit form)", n, 11)?;
        let mut t = Tournament::empty_unchecked(n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits >> k & 1 == 1 {
                    t.set_arc(i, j);
                } else {
                    t.set_arc(j, i);
                }
                k += 1;
            }
        }
        Ok(t)
    }

    pub fn to_bits(&self) -> u64 {
        let mut bits = 0u64;
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_arc(i, j) {
                    bits |= 1 << k;
                }
                k += 1;
            }
        }
        bits
    }

    /// Bit-string form as `'0'`/`'1'` characters.
    pub fn to_bit_string(&self) -> String {
        let mut s = String::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                s.push(if self.has_arc(i, j) { '1' } else { '0' });
            }
        }
        s
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        check_cap("tournament vertices", n, MAX_TOURNAMENT)?;
        let mut t = Tournament::empty_unchecked(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen::<bool>() {
                    t.set_arc(i, j);
                } else {
                    t.set_arc(j, i);
                }
            }
        }
        Ok(t)
    }

    /// The directed triangle `0 -> 1 -> 2 -> 0`.
    pub fn directed_triangle() -> Self {
        Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).expect("valid")
    }

    pub(crate) fn set_arc(&mut self, a: usize, b: usize) {
        self.out[a] |= 1 << b;
        self.out[b] &= !(1 << a);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.out[a] >> b & 1 == 1
    }

    pub fn out_mask(&self, v: usize) -> u32 {
        self.out[v]
    }

    pub fn in_mask(&self, v: usize) -> u32 {
        low_mask(self.n) & !self.out[v] & !(1 << v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in Bits32(self.out[a]) {
                out.push((a, b));
            }
        }
        out
    }

    fn is_complete(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.has_arc(a, b) ^ self.has_arc(b, a)))
    }

    /// Sub-tournament on `vertices`, relabelled `0..k` in the given order.
    pub fn restrict(&self, vertices: &[usize]) -> Tournament {
        let mut t = Tournament::empty_unchecked(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                if i != j && self.has_arc(a, b) {
                    t.out[i] |= 1 << j;
                }
            }
        }
        t
    }

    pub fn is_transitive(&self) -> bool {
        // Acyclic iff the out-degrees are 0..n-1.
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.out_degree(v)).collect();
        degs.sort_unstable();
        degs.iter().enumerate().all(|(i, &d)| i == d)
    }

    /// Vertices reachable from `v` (including `v`).
    pub fn reachable_from(&self, v: usize) -> u32 {
        let mut seen = 1u32 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for x in Bits32(frontier) {
                next |= self.out[x];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Strong components in condensation order: every arc between two
    /// components points from the earlier one to the later one.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        let reach: Vec<u32> = (0..self.n).map(|v| self.reachable_from(v)).collect();
        let mut assigned = 0u32;
        let mut comps: Vec<(u32, Vec<usize>)> = Vec::new();
        for v in 0..self.n {
            if assigned >> v & 1 == 1 {
                continue;
            }
            let members: Vec<usize> = (0..self.n)
                .filter(|&w| reach[v] >> w & 1 == 1 && reach[w] >> v & 1 == 1)
                .collect();
            for &w in &members {
                assigned |= 1 << w;
            }
            comps.push((reach[v], members));
        }
        // Earlier components reach strictly more vertices.
        comps.sort_by_key(|(r, _)| core::cmp::Reverse(r.count_ones()));
        comps.into_iter().map(|(_, m)| m).collect()
    }

    pub fn is_strong(&self) -> bool {
        (0..self.n).all(|v| self.reachable_from(v) == low_mask(self.n))
    }

    /// Hamilton path built by insertion.
    pub fn redei_hamilton_path(&self) -> Vec<usize> {
        let mut path: Vec<usize> = Vec::with_capacity(self.n);
        for v in 0..self.n {
            if path.is_empty() || self.has_arc(v, path[0]) {
                path.insert(0, v);
            } else if self.has_arc(path[path.len() - 1], v) {
                path.push(v);
            } else {
                // path[0] -> v and v -> last, so some consecutive pair switches.
                let i = (0..path.len() - 1)
                    .find(|&i| self.has_arc(path[i], v) && self.has_arc(v, path[i + 1]))
                    .expect("insertion point exists in a tournament");
                path.insert(i + 1, v);
            }
        }
        path
    }

    /// Some directed triangle, lowest vertices first.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for a in 0..self.n {
            for b in Bits32(self.out[a]) {
                let closing = self.out[b] & self.in_mask(a);
                if closing != 0 {
                    return Some([a, b, closing.trailing_zeros() as usize]);
                }
            }
        }
        None
    }

    /// One directed cycle of every length `3..=n` (index `l - 3`), by
    /// extending a triangle one vertex at a time.
    pub fn moon_cycles(&self) -> Result<Vec<Vec<usize>>> {
        if self.n < 3 {
            return Err(precondition("Moon cycles need n >= 3"));
        }
        if !self.is_strong() {
            return Err(precondition("tournament is not strongly connected"));
        }
        let mut cycle: Vec<usize> = self.find_triangle().expect("strong tournament").to_vec();
        let mut out = vec![cycle.clone()];
        while cycle.len() < self.n {
            cycle = self.extend_cycle(&cycle);
            debug_assert!(self.is_directed_cycle(&cycle));
            out.push(cycle.clone());
        }
        Ok(out)
    }

    /// Given a directed cycle in a strong tournament with a vertex outside it,
    /// returns a directed cycle one longer.
    fn extend_cycle(&self, cycle: &[usize]) -> Vec<usize> {
        let l = cycle.len();
        let on: u32 = cycle.iter().fold(0, |m, &v| m | 1 << v);
        let outside = low_mask(self.n) & !on;
        // A vertex with both an in- and an out-neighbour on the cycle can be
        // inserted between some consecutive pair.
        for v in Bits32(outside) {
            for i in 0..l {
                let (a, b) = (cycle[i], cycle[(i + 1) % l]);
                if self.has_arc(a, v) && self.has_arc(v, b) {
                    let mut c = cycle.to_vec();
                    c.insert(i + 1, v);
                    return c;
                }
            }
        }
        // Otherwise every outside vertex dominates the cycle (D) or is
        // dominated by it (E); strong connectivity gives an arc E -> D.
        let dominated: u32 = Bits32(outside)
            .filter(|&v| self.in_mask(v) & on == on)
            .fold(0, |m, v| m | 1 << v);
        let dominating = outside & !dominated;
        for e in Bits32(dominated) {
            let target = self.out[e] & dominating;
            if target != 0 {
                let d = target.trailing_zeros() as usize;
                // c0 -> e -> d -> c2 -> ... -> c_{l-1} -> c0 drops c1.
                let mut c = vec![cycle[0], e, d];
                c.extend_from_slice(&cycle[2..]);
                return c;
            }
        }
        unreachable!("strong tournament always admits an extension")
    }

    pub fn is_directed_cycle(&self, cycle: &[usize]) -> bool {
        let l = cycle.len();
        if l < 3 {
            return false;
        }
        let distinct = cycle.iter().fold(0u32, |m, &v| m | 1 << v).count_ones() as usize == l;
        distinct && (0..l).all(|i| self.has_arc(cycle[i], cycle[(i + 1) % l]))
    }

    /// A directed cycle of length exactly `k`, if one exists.
    pub fn find_directed_cycle(&self, k: usize) -> Option<Vec<usize>> {
        if k < 3 || k > self.n {
            return None;
        }
        let mut path = Vec::with_capacity(k);
        for s in 0..self.n {
            // Cycles whose minimum vertex is `s`.
            let allowed = low_mask(self.n) & !low_mask(s + 1);
            path.clear();
            path.push(s);
            if self.cycle_dfs(s, k, allowed, 1 << s, &mut path) {
                return Some(path);
            }
        }
        None
    }

    fn cycle_dfs(
        &self,
        start: usize,
        k: usize,
        allowed: u32,
        used: u32,
        path: &mut Vec<usize>,
    ) -> bool {
        let at = *path.last().expect("non-empty");
        if path.len() == k {
            return self.has_arc(at, start);
        }
        for y in Bits32(self.out[at] & allowed & !used) {
            path.push(y);
            if self.cycle_dfs(start, k, allowed, used | 1 << y, path) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// `Ok(None)` when free of directed `C_k`, otherwise a witness cycle.
    pub fn ck_witness(&self, k: usize) -> Result<Option<Vec<usize>>> {
        if k < 3 {
            return Err(invalid(format!("cycle length {k} < 3")));
        }
        Ok(self.find_directed_cycle(k))
    }

    pub fn is_ck_free(&self, k: usize) -> Result<bool> {
        Ok(self.ck_witness(k)?.is_none())
    }
}

/// A `C_k`-free tournament on `n` vertices. With `nontrivial`, the result
/// contains a directed triangle: a triangle on `{0,1,2}` dominating a
/// transitive remainder, so its only cycles are triangles.
pub fn find_ck_free_tournament(n: usize, k: usize, nontrivial: bool) -> Result<Tournament> {
    if k < 3 {
        return Err(invalid(format!("cycle length {k} < 3")));
    }
    if !nontrivial {
        return Tournament::transitive(n);
    }
    if k == 3 {
        return Err(precondition(
            "every non-transitive tournament contains a directed triangle",
        ));
    }
    if n < 3 {
        return Err(precondition("a directed cycle needs at least 3 vertices"));
    }
    let mut t = Tournament::transitive(n)?;
    t.set_arc(2, 0);
    Ok(t)
}

/// Random `C_k`-free tournament: a random ordered partition into blocks of
/// size 1 or `3..k`, each block a random strong tournament, blocks joined
/// transitively. A tournament is `C_k`-free exactly when all its strong
/// components have fewer than `k` vertices.
pub fn random_ck_free_tournament<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    rng: &mut R,
) -> Result<Tournament> {
    if k < 3 {
        return Err(invalid(format!("cycle length {k} < 3")));
    }
    check_cap("tournament vertices", n, MAX_VERTICES)?;
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    let mut t = Tournament::empty_unchecked(n);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < n {
        let left = n - i;
        let mut sizes: Vec<usize> = vec![1];
        for s in 3..k.min(left + 1) {
            sizes.push(s);
        }
        let size = sizes[rng.gen_range(0..sizes.len())];
        blocks.push(order[i..i + size].to_vec());
        i += size;
    }
    for (bi, block) in blocks.iter().enumerate() {
        loop {
            let inner = Tournament::random(block.len(), rng)?;
            if inner.is_strong() {
                for a in 0..block.len() {
                    for b in Bits32(inner.out[a]) {
                        t.set_arc(block[a], block[b]);
                    }
                }
                break;
            }
        }
        for later in &blocks[bi + 1..] {
            for &a in block {
                for &b in later {
                    t.set_arc(a, b);
                }
            }
        }
    }
    Ok(t)
}

/// Simple digraph on up to 64 vertices; antiparallel arcs allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

impl Digraph {
    pub fn empty(n: usize) -> Result<Self> {
        check_cap("digraph vertices", n, 64)?;
        Ok(Digraph { n, out: vec![0; n] })
    }

    /// Every ordered pair of distinct vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut d = Digraph::empty(n)?;
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    d.add_arc(a, b);
                }
            }
        }
        Ok(d)
    }

    /// Each ordered pair independently with probability `p`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Self> {
        let mut d = Digraph::empty(n)?;
        for a in 0..n {
            for b in 0..n {
                if a != b && rng.gen_bool(p) {
                    d.add_arc(a, b);
                }
            }
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.n && b < self.n);
        self.out[a] |= 1 << b;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.out[a] >> b & 1 == 1
    }

    pub fn out_mask(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Vertices with an arc into `v`.
    pub fn in_mask(&self, v: usize) -> u64 {
        (0..self.n)
            .filter(|&u| self.has_arc(u, v))
            .fold(0, |m, u| m | 1 << u)
    }

    /// Common out-neighbours of every vertex in `set`.
    pub fn common_out(&self, set: u64) -> u64 {
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        Bits64(set).fold(full, |m, v| m & self.out[v])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn all_tournaments(n: usize) -> impl Iterator<Item = Tournament> {
        let pairs = n * (n - 1) / 2;
        (0u64..1 << pairs).map(move |b| Tournament::from_bits(n, b).unwrap())
    }

    fn reach_oracle(t: &Tournament) -> Vec<Vec<bool>> {
        // Floyd–Warshall transitive closure.
        let n = t.n();
        let mut r = vec![vec![false; n]; n];
        for (a, row) in r.iter_mut().enumerate() {
            row[a] = true;
            for (b, cell) in row.iter_mut().enumerate() {
                if t.has_arc(a, b) {
                    *cell = true;
                }
            }
        }
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if r[a][k] && r[k][b] {
                        r[a][b] = true;
                    }
                }
            }
        }
        r
    }

    #[test]
    fn components_of_basic_tournaments() {
        let t = Tournament::transitive(5).unwrap();
        let comps = t.strong_components();
        assert_eq!(comps, (0..5).map(|v| vec![v]).collect::<Vec<_>>());
        assert_eq!(Tournament::directed_triangle().strong_components().len(), 1);
    }

    #[test]
    fn components_match_reachability_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let t = Tournament::random(7, &mut rng).unwrap();
            let r = reach_oracle(&t);
            let comps = t.strong_components();
            let mut index = [0; 7];
            for (ci, c) in comps.iter().enumerate() {
                for &v in c {
                    index[v] = ci;
                }
            }
            for a in 0..7 {
                for b in 0..7 {
                    assert_eq!(index[a] == index[b], r[a][b] && r[b][a]);
                    if index[a] < index[b] {
                        assert!(t.has_arc(a, b), "cross arcs point forward");
                    }
                }
            }
        }
    }

    #[test]
    fn redei_paths_exhaustive_n5() {
        for t in all_tournaments(5) {
            let p = t.redei_hamilton_path();
            assert_eq!(p.len(), 5);
            assert!(p.windows(2).all(|w| t.has_arc(w[0], w[1])));
        }
        assert_eq!(
            Tournament::transitive(1).unwrap().redei_hamilton_path(),
            vec![0]
        );
        assert_eq!(
            Tournament::transitive(6).unwrap().redei_hamilton_path(),
            vec![0, 1, 2, 3, 4, 5]
        );
    }

    #[test]
    fn moon_cycles_on_strong_tournaments() {
        let tri = Tournament::directed_triangle().moon_cycles().unwrap();
        assert_eq!(tri.len(), 1);
        for n in 3..=6 {
            for t in all_tournaments(n).filter(|t| t.is_strong()) {
                let cycles = t.moon_cycles().unwrap();
                assert_eq!(cycles.len(), n - 2);
                for (i, c) in cycles.iter().enumerate() {
                    assert_eq!(c.len(), i + 3);
                    assert!(t.is_directed_cycle(c));
                }
            }
        }
        assert!(Tournament::transitive(4).unwrap().moon_cycles().is_err());
    }

    fn brute_has_cycle(t: &Tournament, k: usize) -> bool {
        // All k-permutations starting at their minimum vertex.
        fn rec(t: &Tournament, k: usize, path: &mut Vec<usize>) -> bool {
            if path.len() == k {
                return t.has_arc(path[k - 1], path[0]);
            }
            for v in 0..t.n() {
                if v > path[0] && !path.contains(&v) && t.has_arc(*path.last().unwrap(), v) {
                    path.push(v);
                    if rec(t, k, path) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
        (0..t.n()).any(|s| rec(t, k, &mut vec![s]))
    }

    #[test]
    fn ck_free_agrees_with_brute_force() {
        for n in 3..=6 {
            let all: Vec<Tournament> = all_tournaments(n).collect();
            let step = if n == 6 { 7 } else { 1 };
            for t in all.iter().step_by(step) {
                for k in 3..=n {
                    assert_eq!(t.is_ck_free(k).unwrap(), !brute_has_cycle(t, k));
                    if let Some(w) = t.ck_witness(k).unwrap() {
                        assert_eq!(w.len(), k);
                        assert!(t.is_directed_cycle(&w));
                    }
                }
            }
        }
    }

    #[test]
    fn ck_free_tournament_search() {
        let t = find_ck_free_tournament(5, 4, true).unwrap();
        assert!(t.is_ck_free(4).unwrap());
        assert!(!t.is_ck_free(3).unwrap());
        assert!(find_ck_free_tournament(3, 3, true).is_err());
        assert!(find_ck_free_tournament(6, 3, false)
            .unwrap()
            .is_transitive());
        let strong6 = Tournament::from_bits(6, 0b010_1101_0011_0101).unwrap();
        if strong6.is_strong() {
            assert!(!strong6.is_ck_free(6).unwrap());
        }
    }

    #[test]
    fn random_ck_free_tournaments_are_ck_free() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=8 {
            for k in 3..=6 {
                for _ in 0..10 {
                    let t = random_ck_free_tournament(n, k, &mut rng).unwrap();
                    assert!(t.is_ck_free(k).unwrap());
                    assert!(t.strong_components().iter().all(|c| c.len() < k));
                }
            }
        }
    }

    #[test]
    fn bit_string_roundtrip() {
        let t = Tournament::from_bits(5, 0b1011001110).unwrap();
        assert_eq!(t.to_bits(), 0b1011001110);
        assert_eq!(t.to_bit_string().len(), 10);
    }
}
