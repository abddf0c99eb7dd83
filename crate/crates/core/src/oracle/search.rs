use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{OracleOptions, OracleResult, OracleValue, SearchStats, Witness};
use crate::canon::{canonical_colouring, CanonKey};
use crate::colouring::StarColouring;
use crate::constructions::{
    clique_blowup_lower, cycle_extremal, k4_extremal_two_part, k4minus_extremal, lexical,
    min_degree_construction,
};
use crate::detect::{find_rainbow, find_rainbow_with, RainbowQuery};
use crate::error::{check_cap, invalid, Result};
use crate::graph::{Edge, SimpleGraph};

/// Work for one level: extend a parent by a new vertex, keep children with
/// no rainbow member of `patterns` and at least `min_colours` colours.
#[derive(Debug, Clone, Copy)]
pub struct LevelJob<'a> {
    pub patterns: &'a [SimpleGraph],
    pub min_colours: usize,
}

/// Children of one parent, keyed canonically.
#[derive(Debug, Clone, Default)]
pub struct Expansion {
    pub children: Vec<(CanonKey, StarColouring)>,
    pub stats: SearchStats,
}

/// Runs a level's expansions, possibly in parallel. Results must come back in
/// parent order.
pub trait Executor {
    fn expand_all(
        &self,
        parents: &[StarColouring],
        job: &(dyn Fn(&StarColouring) -> Result<Expansion> + Sync),
    ) -> Vec<Result<Expansion>>;
}

pub struct Sequential;

impl Executor for Sequential {
    fn expand_all(
        &self,
        parents: &[StarColouring],
        job: &(dyn Fn(&StarColouring) -> Result<Expansion> + Sync),
    ) -> Vec<Result<Expansion>> {
        parents.iter().map(job).collect()
    }
}

/// Whether `c` has no rainbow copy of any member of `patterns`.
pub fn admissible(c: &StarColouring, patterns: &[SimpleGraph]) -> bool {
    patterns.iter().all(|h| find_rainbow(c, h).is_none())
}

/// All one-vertex extensions of `parent` admitted by `job`, deduplicated.
pub fn expand_parent(parent: &StarColouring, job: &LevelJob<'_>) -> Result<Expansion> {
    let k = parent.n();
    check_cap("colouring vertices", k + 1, crate::MAX_VERTICES)?;
    let joinable: Vec<Vec<usize>> = (0..k).map(|i| parent.classes_centred_at(i)).collect();
    let mut gen = Extender {
        parent,
        job,
        joinable,
        choice: vec![usize::MAX; k],
        fresh: Vec::with_capacity(k),
        block: vec![0; k],
        out: BTreeMap::new(),
        stats: SearchStats::default(),
    };
    gen.assign(0, 0)?;
    Ok(Expansion {
        children: gen.out.into_iter().collect(),
        stats: gen.stats,
    })
}

struct Extender<'a, 'b> {
    parent: &'a StarColouring,
    job: &'a LevelJob<'b>,
    joinable: Vec<Vec<usize>>,
    /// Class joined by edge `(i, w)`, or `usize::MAX` for a fresh class.
    choice: Vec<usize>,
    fresh: Vec<usize>,
    block: Vec<usize>,
    out: BTreeMap<CanonKey, StarColouring>,
    stats: SearchStats,
}

impl Extender<'_, '_> {
    fn k(&self) -> usize {
        self.parent.n()
    }

    /// Chooses, edge by edge, an existing class to join or a fresh one.
    fn assign(&mut self, i: usize, used: u128) -> Result<()> {
        let k = self.k();
        // Every still-undecided edge could open its own class.
        let best_case = self.parent.colour_count() + self.fresh.len() + (k - i);
        if best_case < self.job.min_colours {
            self.stats.pruned += 1;
            return Ok(());
        }
        if i == k {
            return self.partition_fresh(0, 0);
        }
        for j in 0..self.joinable[i].len() {
            let id = self.joinable[i][j];
            if used >> id & 1 == 1 {
                continue;
            }
            self.choice[i] = id;
            self.assign(i + 1, used | 1 << id)?;
        }
        self.choice[i] = usize::MAX;
        self.fresh.push(i);
        self.assign(i + 1, used)?;
        self.fresh.pop();
        Ok(())
    }

    /// Restricted-growth strings over the fresh edges; each block is a star
    /// centred at the new vertex.
    fn partition_fresh(&mut self, pos: usize, blocks: usize) -> Result<()> {
        let left = self.fresh.len() - pos;
        if self.parent.colour_count() + blocks + left < self.job.min_colours {
            self.stats.pruned += 1;
            return Ok(());
        }
        if pos == self.fresh.len() {
            return self.emit(blocks);
        }
        for b in 0..=blocks {
            self.block[pos] = b;
            self.partition_fresh(pos + 1, blocks.max(b + 1))?;
        }
        Ok(())
    }

    fn emit(&mut self, blocks: usize) -> Result<()> {
        let k = self.k();
        let base = self.parent.colour_count();
        let mut classes: Vec<Vec<Edge>> = self.parent.classes().to_vec();
        classes.resize(base + blocks, Vec::new());
        for i in 0..k {
            if self.choice[i] != usize::MAX {
                classes[self.choice[i]].push(Edge::new(i, k));
            }
        }
        for (pos, &i) in self.fresh.iter().enumerate() {
            classes[base + self.block[pos]].push(Edge::new(i, k));
        }
        let child = StarColouring::build_unchecked(k + 1, classes);
        self.stats.nodes_explored += 1;
        // Old edges keep their classes, so only copies through the new vertex
        // can be new.
        let mut q = RainbowQuery::anywhere(k + 1);
        q.required = Some(k);
        if self
            .job
            .patterns
            .iter()
            .any(|h| find_rainbow_with(&child, h, &q).is_some())
        {
            return Ok(());
        }
        let (key, rep) = canonical_colouring(&child)?;
        self.out.entry(key).or_insert(rep);
        Ok(())
    }
}

/// Upper bound on colours gained going from `K_k` to `K_n`.
fn remaining_edges(k: usize, n: usize) -> usize {
    (k..n).sum()
}

struct LevelRun {
    levels: Vec<Vec<(CanonKey, StarColouring)>>,
    stats: SearchStats,
}

/// Builds the levels `1..=n`, stopping early if a level is empty.
/// `lower` is a colour count that the final level must reach.
fn run_levels(
    n: usize,
    patterns: &[SimpleGraph],
    lower: usize,
    opts: &OracleOptions,
    exec: &dyn Executor,
) -> Result<LevelRun> {
    check_cap("oracle vertices", n, opts.cap)?;
    let start = StarColouring::trivial(1);
    let mut current = vec![(crate::canon::canonical_key(&start)?, start)];
    let mut stats = SearchStats::default();
    let mut levels = vec![current.clone()];
    for k in 1..n {
        let min_colours = lower.saturating_sub(remaining_edges(k + 1, n));
        let job = LevelJob {
            patterns,
            min_colours,
        };
        let parents: Vec<StarColouring> = current.iter().map(|(_, c)| c.clone()).collect();
        let f = |p: &StarColouring| expand_parent(p, &job);
        let mut merged: BTreeMap<CanonKey, StarColouring> = BTreeMap::new();
        for exp in exec.expand_all(&parents, &f) {
            let exp = exp?;
            stats.absorb(exp.stats);
            for (key, c) in exp.children {
                merged.entry(key).or_insert(c);
            }
        }
        if let Some(cap) = opts.max_nodes {
            if stats.nodes_explored > cap {
                return Err(crate::Error::CapExceeded {
                    what: "search nodes",
                    got: stats.nodes_explored as usize,
                    cap: cap as usize,
                });
            }
        }
        current = merged.into_iter().collect();
        levels.push(current.clone());
        if current.is_empty() {
            break;
        }
    }
    Ok(LevelRun { levels, stats })
}

/// Every star-colouring of `K_n` up to isomorphism, as canonical
/// representatives in key order. For labelled enumeration see
/// [`super::for_each_labelled_colouring`].
pub fn enumerate_star_colourings(
    n: usize,
    opts: &OracleOptions,
    exec: &dyn Executor,
) -> Result<Vec<StarColouring>> {
    if n == 0 {
        return Ok(vec![StarColouring::trivial(0)]);
    }
    let run = run_levels(n, &[], 0, opts, exec)?;
    Ok(run
        .levels
        .into_iter()
        .last()
        .unwrap_or_default()
        .into_iter()
        .map(|(_, c)| c)
        .collect())
}

/// Largest colour count among admissible colourings produced by the
/// construction families, with the colouring achieving it.
pub fn seed_lower_bound(n: usize, patterns: &[SimpleGraph]) -> Option<(usize, StarColouring)> {
    let mut candidates: Vec<StarColouring> = Vec::new();
    if let Ok(c) = StarColouring::rainbow(n) {
        candidates.push(c);
    }
    if n >= 1 {
        candidates.extend(lexical(n).ok());
    }
    for k in 3..=n {
        candidates.extend(cycle_extremal(n, k, None).ok());
    }
    for s in 2..n {
        candidates.extend(k4_extremal_two_part(n, s).ok());
    }
    candidates.extend(k4minus_extremal(n, None).ok());
    for m in 5..=n {
        candidates.extend(clique_blowup_lower(n, m).ok());
    }
    for h in patterns {
        candidates.extend(min_degree_construction(n, h).ok());
    }
    candidates
        .into_iter()
        .filter(|c| admissible(c, patterns))
        .map(|c| (c.colour_count(), c))
        .max_by_key(|(k, _)| *k)
}

/// `ar*(n, h)`.
pub fn star_anti_ramsey(n: usize, h: &SimpleGraph) -> Result<OracleResult> {
    star_anti_ramsey_with(
        n,
        core::slice::from_ref(h),
        &OracleOptions::default(),
        &Sequential,
    )
}

/// `ar*(n, hs)`: colourings must avoid rainbow copies of every member.
pub fn star_anti_ramsey_family(n: usize, hs: &[SimpleGraph]) -> Result<OracleResult> {
    star_anti_ramsey_with(n, hs, &OracleOptions::default(), &Sequential)
}

/// General entry point; the result is independent of the executor.
pub fn star_anti_ramsey_with(
    n: usize,
    hs: &[SimpleGraph],
    opts: &OracleOptions,
    exec: &dyn Executor,
) -> Result<OracleResult> {
    if n == 0 {
        return Err(invalid("need n >= 1"));
    }
    if hs.is_empty() {
        return Err(invalid("empty pattern family"));
    }
    let lower = if opts.prune {
        seed_lower_bound(n, hs).map_or(0, |(k, _)| k)
    } else {
        0
    };
    let run = run_levels(n, hs, lower, opts, exec)?;
    let finals = run.levels.last().expect("level 1 always exists");
    if run.levels.len() < n || finals.is_empty() {
        return Ok(OracleResult {
            value: OracleValue::Nonexistent,
            witnesses: Vec::new(),
            stats: run.stats,
        });
    }
    let best = finals
        .iter()
        .map(|(_, c)| c.colour_count())
        .max()
        .unwrap_or(0);
    let witnesses = finals
        .iter()
        .filter(|(_, c)| c.colour_count() == best)
        .map(|(key, c)| Witness {
            key: key.clone(),
            colouring: c.clone(),
        })
        .collect();
    Ok(OracleResult {
        value: OracleValue::Exact(best),
        witnesses,
        stats: run.stats,
    })
}

/// All isomorphism classes of rainbow-`h`-free colourings of `K_n` with
/// `ar*(n, h)` colours.
pub fn extremal_colourings(n: usize, h: &SimpleGraph) -> Result<Vec<StarColouring>> {
    Ok(star_anti_ramsey(n, h)?
        .witnesses
        .into_iter()
        .map(|w| w.colouring)
        .collect())
}

/// `nsar(h)` with the default cap.
pub fn nsar(h: &SimpleGraph) -> Result<OracleResult> {
    nsar_with(h, &OracleOptions::default(), &Sequential)
}

/// Smallest `n` such that every star-colouring of `K_n` has a rainbow `h`.
/// Admissibility is hereditary, so the levels shrink monotonically and the
/// first empty level is the answer. The witness is one rainbow-`h`-free
/// colouring on one vertex fewer.
pub fn nsar_with(
    h: &SimpleGraph,
    opts: &OracleOptions,
    exec: &dyn Executor,
) -> Result<OracleResult> {
    if !h.is_forest() {
        return Err(invalid("nsar exists only for forests"));
    }
    let pats = core::slice::from_ref(h);
    let run = run_levels(opts.cap, pats, 0, opts, exec)?;
    let empty_at = run.levels.iter().position(|l| l.is_empty()).map(|i| i + 1);
    let (value, witness_level) = match empty_at {
        Some(n) => (OracleValue::Exact(n), n - 2),
        None => (OracleValue::AtLeast(opts.cap + 1), run.levels.len() - 1),
    };
    let witnesses = run.levels[witness_level]
        .first()
        .map(|(key, c)| Witness {
            key: key.clone(),
            colouring: c.clone(),
        })
        .into_iter()
        .collect();
    Ok(OracleResult {
        value,
        witnesses,
        stats: run.stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn small_canonical_counts() {
        let opts = OracleOptions::default();
        assert_eq!(
            enumerate_star_colourings(2, &opts, &Sequential)
                .unwrap()
                .len(),
            1
        );
        // Lexical and rainbow.
        assert_eq!(
            enumerate_star_colourings(3, &opts, &Sequential)
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn triangle_values() {
        for n in 3..=5 {
            let r = star_anti_ramsey(n, &cycle(3).unwrap()).unwrap();
            assert_eq!(r.value, OracleValue::Exact(n - 1));
            assert_eq!(r.witnesses.len(), 1);
        }
    }

    #[test]
    fn k4_at_five() {
        let r = star_anti_ramsey(5, &complete(4).unwrap()).unwrap();
        assert_eq!(r.value, OracleValue::Exact(7));
        for w in &r.witnesses {
            assert!(find_rainbow(&w.colouring, &complete(4).unwrap()).is_none());
        }
    }

    #[test]
    fn pruning_does_not_change_values() {
        let pats = [
            cycle(3).unwrap(),
            cycle(4).unwrap(),
            complete(4).unwrap(),
            path(2).unwrap(),
        ];
        for h in &pats {
            for n in 2..=4 {
                let on = star_anti_ramsey(n, h).unwrap();
                let off_opts = OracleOptions {
                    prune: false,
                    ..OracleOptions::default()
                };
                let off =
                    star_anti_ramsey_with(n, core::slice::from_ref(h), &off_opts, &Sequential)
                        .unwrap();
                assert_eq!(on.value, off.value);
                let keys_on: Vec<_> = on.witnesses.iter().map(|w| &w.key).collect();
                let keys_off: Vec<_> = off.witnesses.iter().map(|w| &w.key).collect();
                assert_eq!(keys_on, keys_off);
            }
        }
    }

    #[test]
    fn path_nsar() {
        for t in 1..=3 {
            assert_eq!(
                nsar(&path(t).unwrap()).unwrap().value,
                OracleValue::Exact(t + 1)
            );
        }
        assert!(nsar(&cycle(3).unwrap()).is_err());
    }

    #[test]
    fn single_edge_family_is_nonexistent() {
        let r = star_anti_ramsey_family(3, &[path(1).unwrap()]).unwrap();
        assert_eq!(r.value, OracleValue::Nonexistent);
    }
}
