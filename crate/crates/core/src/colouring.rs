//! Star-colourings of `K_n`: storage, validation and basic queries.
//!
//! Colour classes are stored as edge sets and identified by position. Centres
//! are derived from the edges, so a single-edge class simply has two centres.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits32;
use crate::error::{Error, Result};
use crate::graph::{complete_edges, Edge};
use crate::tournament::Tournament;
use crate::MAX_VERTICES;

pub(crate) const NO_CLASS: u8 = u8::MAX;

/// Why a proposed colouring is not a star-colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Class contains two disjoint edges.
    MonochromaticMatching {
        class: usize,
    },
    /// Class is exactly a triangle.
    TriangleClass {
        class: usize,
    },
    EmptyClass {
        class: usize,
    },
    /// Edge lies in more than one class.
    EdgeRepeated {
        edge: Edge,
        classes: (usize, usize),
    },
    EdgeMissing {
        edge: Edge,
    },
    BadEdge {
        class: usize,
        reason: String,
    },
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Violation::MonochromaticMatching { class } => {
                write!(f, "class {class}: monochromatic matching")
            }
            Violation::TriangleClass { class } => write!(f, "class {class}: triangle class"),
            Violation::EmptyClass { class } => write!(f, "class {class}: empty"),
            Violation::EdgeRepeated { edge, classes } => write!(
                f,
                "edge {}-{} in classes {} and {} (not a partition)",
                edge.u, edge.v, classes.0, classes.1
            ),
            Violation::EdgeMissing { edge } => {
                write!(f, "edge {}-{} uncoloured (not a partition)", edge.u, edge.v)
            }
            Violation::BadEdge { class, reason } => write!(f, "class {class}: {reason}"),
        }
    }
}

/// Outcome of [`validate_classes`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Star test for one class: all edges share a vertex and the class is not a triangle.
fn class_shape(edges: &[Edge]) -> Option<Violation> {
    if edges.len() <= 1 {
        return None;
    }
    let (a, b) = (edges[0].u, edges[0].v);
    let common_a = edges.iter().all(|e| e.contains(a));
    let common_b = edges.iter().all(|e| e.contains(b));
    if common_a || common_b {
        return None;
    }
    let mut verts = BTreeSet::new();
    for e in edges {
        verts.insert(e.u);
        verts.insert(e.v);
    }
    if edges.len() == 3 && verts.len() == 3 {
        Some(Violation::TriangleClass { class: 0 })
    } else {
        Some(Violation::MonochromaticMatching { class: 0 })
    }
}

/// Checks that `classes` partition `E(K_n)` into stars. Report-valued:
/// every violated class is listed.
pub fn validate_classes(n: usize, classes: &[Vec<Edge>]) -> ValidationReport {
    let mut violations = Vec::new();
    let mut owner: Vec<Option<usize>> = vec![None; n * n];
    for (ci, class) in classes.iter().enumerate() {
        if class.is_empty() {
            violations.push(Violation::EmptyClass { class: ci });
            continue;
        }
        let mut ok_edges = true;
        for e in class {
            if e.u >= n || e.v >= n || e.u >= e.v {
                violations.push(Violation::BadEdge {
                    class: ci,
                    reason: format!("edge {}-{} invalid for n = {n}", e.u, e.v),
                });
                ok_edges = false;
                continue;
            }
            let slot = &mut owner[e.u * n + e.v];
            match *slot {
                Some(prev) => violations.push(Violation::EdgeRepeated {
                    edge: *e,
                    classes: (prev, ci),
                }),
                None => *slot = Some(ci),
            }
        }
        if ok_edges {
            match class_shape(class) {
                Some(Violation::TriangleClass { .. }) => {
                    violations.push(Violation::TriangleClass { class: ci })
                }
                Some(_) => violations.push(Violation::MonochromaticMatching { class: ci }),
                None => {}
            }
        }
    }
    for e in complete_edges(n) {
        if owner[e.u * n + e.v].is_none() {
            violations.push(Violation::EdgeMissing { edge: e });
        }
    }
    ValidationReport { violations }
}

/// Centre structure of a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Centre {
    Unique(usize),
    /// Single-edge class; both endpoints are centres.
    Pair(usize, usize),
}

impl Centre {
    pub fn is_centre(&self, v: usize) -> bool {
        match *self {
            Centre::Unique(c) => c == v,
            Centre::Pair(a, b) => a == v || b == v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourClassInfo {
    pub id: usize,
    pub centres: Vec<usize>,
    pub leaves: Vec<usize>,
}

/// Per-vertex star counts `⊛(v)` and `⊛₁(v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StarCount {
    pub total: usize,
    pub single_edge: usize,
}

/// How to orient a single-edge class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LowerEndpoint,
    HigherEndpoint,
}

/// A star-colouring of `K_n`.
#[derive(Debug, Clone)]
pub struct StarColouring {
    n: usize,
    classes: Vec<Vec<Edge>>,
    colour: Vec<u8>,
    centres: Vec<Centre>,
}

impl PartialEq for StarColouring {
    /// Positional equality: same classes in the same order.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.classes == other.classes
    }
}

impl Eq for StarColouring {}

impl StarColouring {
    /// Builds a colouring from classes, validating the star-partition
    /// invariants. Edges inside each class are sorted; class order is kept.
    pub fn from_classes(n: usize, mut classes: Vec<Vec<Edge>>) -> Result<Self> {
        crate::error::check_cap("colouring vertices", n, MAX_VERTICES)?;
        let report = validate_classes(n, &classes);
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidColouring(format!("{v}")));
        }
        for c in &mut classes {
            c.sort();
        }
        Ok(Self::build_unchecked(n, classes))
    }

    /// Builds from a per-edge class id table over colex edges, renumbering
    /// class ids in order of first appearance.
    pub fn from_colex_ids(n: usize, ids: &[usize]) -> Result<Self> {
        let edges = complete_edges(n);
        if ids.len() != edges.len() {
            return Err(crate::error::invalid("colex id table has the wrong length"));
        }
        let mut lookup = alloc::collections::BTreeMap::new();
        let mut classes: Vec<Vec<Edge>> = Vec::new();
        for (e, &id) in edges.iter().zip(ids) {
            let idx = *lookup.entry(id).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[idx].push(*e);
        }
        Self::from_classes(n, classes)
    }

    pub(crate) fn build_unchecked(n: usize, classes: Vec<Vec<Edge>>) -> Self {
        debug_assert!(classes.len() < NO_CLASS as usize);
        let mut colour = vec![NO_CLASS; n * n];
        let mut centres = Vec::with_capacity(classes.len());
        for (ci, class) in classes.iter().enumerate() {
            for e in class {
                colour[e.u * n + e.v] = ci as u8;
                colour[e.v * n + e.u] = ci as u8;
            }
            centres.push(centre_of(class));
        }
        StarColouring {
            n,
            classes,
            colour,
            centres,
        }
    }

    /// Single-vertex or empty colouring.
    pub fn trivial(n: usize) -> Self {
        assert!(n <= 1);
        Self::build_unchecked(n, Vec::new())
    }

    pub fn rainbow(n: usize) -> Result<Self> {
        crate::error::check_cap("colouring vertices", n, MAX_VERTICES)?;
        Ok(Self::build_unchecked(
            n,
            complete_edges(n).into_iter().map(|e| vec![e]).collect(),
        ))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colour_count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<Edge>] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &[Edge] {
        &self.classes[id]
    }

    /// Class id of edge `{a, b}`.
    #[inline]
    pub fn colour(&self, a: usize, b: usize) -> usize {
        self.colour[a * self.n + b] as usize
    }

    #[inline]
    pub fn centre(&self, id: usize) -> Centre {
        self.centres[id]
    }

    pub fn class_info(&self, id: usize) -> ColourClassInfo {
        let class = &self.classes[id];
        match self.centres[id] {
            Centre::Pair(a, b) => ColourClassInfo {
                id,
                centres: vec![a, b],
                leaves: vec![a, b],
            },
            Centre::Unique(c) => ColourClassInfo {
                id,
                centres: vec![c],
                leaves: class.iter().map(|e| e.other(c)).collect(),
            },
        }
    }

    /// `⊛(v)` and `⊛₁(v)`; a single-edge class counts at both endpoints.
    pub fn star_count_at(&self, v: usize) -> Result<StarCount> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(self.star_count_unchecked(v))
    }

    pub(crate) fn star_count_unchecked(&self, v: usize) -> StarCount {
        let mut sc = StarCount::default();
        for c in &self.centres {
            match *c {
                Centre::Unique(x) if x == v => sc.total += 1,
                Centre::Pair(a, b) if a == v || b == v => {
                    sc.total += 1;
                    sc.single_edge += 1;
                }
                _ => {}
            }
        }
        sc
    }

    pub fn min_star_count(&self) -> usize {
        (0..self.n)
            .map(|v| self.star_count_unchecked(v).total)
            .min()
            .unwrap_or(0)
    }

    /// Classes having `v` as a centre, in class order.
    pub fn classes_centred_at(&self, v: usize) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.centres[i].is_centre(v))
            .collect()
    }

    /// Orients every edge from its class centre to the leaf.
    pub fn induced_orientation(&self, tie: TieBreak) -> Tournament {
        let mut t = Tournament::empty_unchecked(self.n);
        for (ci, class) in self.classes.iter().enumerate() {
            let centre = match (self.centres[ci], tie) {
                (Centre::Unique(c), _) => c,
                (Centre::Pair(a, _), TieBreak::LowerEndpoint) => a,
                (Centre::Pair(_, b), TieBreak::HigherEndpoint) => b,
            };
            for e in class {
                t.set_arc(centre, e.other(centre));
            }
        }
        t
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`. Class
    /// order is preserved.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let classes = self
            .classes
            .iter()
            .map(|c| {
                let mut c: Vec<Edge> = c.iter().map(|e| Edge::new(perm[e.u], perm[e.v])).collect();
                c.sort();
                c
            })
            .collect();
        Self::build_unchecked(self.n, classes)
    }

    /// Colouring induced on `vertices`, relabelled to `0..k` in the given
    /// order. Classes that lose all edges disappear; the rest keep their
    /// relative order.
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        let k = vertices.len();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let classes: Vec<Vec<Edge>> = self
            .classes
            .iter()
            .filter_map(|c| {
                let mut kept: Vec<Edge> = c
                    .iter()
                    .filter(|e| pos[e.u] != usize::MAX && pos[e.v] != usize::MAX)
                    .map(|e| Edge::new(pos[e.u], pos[e.v]))
                    .collect();
                kept.sort();
                (!kept.is_empty()).then_some(kept)
            })
            .collect();
        Self::build_unchecked(k, classes)
    }

    /// Colouring of `K_n - v`, relabelled to `0..n-1` keeping vertex order.
    pub fn delete_vertex(&self, v: usize) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        self.restrict(&keep)
    }

    /// Moves edge `{a, b}` into a fresh class (appended last).
    pub fn recolour_fresh(&self, a: usize, b: usize) -> Self {
        let target = Edge::new(a, b);
        let mut classes: Vec<Vec<Edge>> = self
            .classes
            .iter()
            .map(|c| {
                c.iter()
                    .copied()
                    .filter(|e| *e != target)
                    .collect::<Vec<_>>()
            })
            .filter(|c| !c.is_empty())
            .collect();
        classes.push(vec![target]);
        Self::build_unchecked(self.n, classes)
    }

    /// Whether the two colourings induce the same partition of `E(K_n)`,
    /// ignoring class order.
    pub fn same_partition(&self, other: &Self) -> bool {
        if self.n != other.n || self.classes.len() != other.classes.len() {
            return false;
        }
        let a: BTreeSet<&Vec<Edge>> = self.classes.iter().collect();
        let b: BTreeSet<&Vec<Edge>> = other.classes.iter().collect();
        a == b
    }

    /// Class ids over colex edges.
    pub fn colex_ids(&self) -> Vec<usize> {
        complete_edges(self.n)
            .iter()
            .map(|e| self.colour(e.u, e.v))
            .collect()
    }

    /// Set of colours on edges inside `mask`.
    pub fn colours_within(&self, mask: u32) -> u128 {
        let mut set = 0u128;
        for a in Bits32(mask) {
            for b in Bits32(mask >> (a + 1)) {
                set |= 1u128 << self.colour(a, a + 1 + b);
            }
        }
        set
    }

    /// Set of colours on edges between disjoint `x` and `y`.
    pub fn colours_between(&self, x: u32, y: u32) -> u128 {
        let mut set = 0u128;
        for a in Bits32(x) {
            for b in Bits32(y) {
                if a != b {
                    set |= 1u128 << self.colour(a, b);
                }
            }
        }
        set
    }

    pub fn all_colours(&self) -> u128 {
        if self.classes.len() >= 128 {
            u128::MAX
        } else {
            (1u128 << self.classes.len()) - 1
        }
    }
}

fn centre_of(class: &[Edge]) -> Centre {
    if class.len() == 1 {
        return Centre::Pair(class[0].u, class[0].v);
    }
    let (a, b) = (class[0].u, class[0].v);
    if class.iter().all(|e| e.contains(a)) {
        Centre::Unique(a)
    } else {
        Centre::Unique(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lexical;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b)
    }

    #[test]
    fn lexical_four_validates() {
        let c = lexical(4).unwrap();
        assert!(validate_classes(4, c.classes()).is_ok());
    }

    #[test]
    fn matching_class_is_rejected() {
        let classes = vec![
            vec![e(0, 1), e(2, 3)],
            vec![e(0, 2)],
            vec![e(0, 3)],
            vec![e(1, 2)],
            vec![e(1, 3)],
        ];
        let r = validate_classes(4, &classes);
        assert_eq!(
            r.violations,
            vec![Violation::MonochromaticMatching { class: 0 }]
        );
        assert!(format!("{}", r.violations[0]).contains("monochromatic matching"));
    }

    #[test]
    fn triangle_class_is_rejected() {
        let r = validate_classes(3, &[vec![e(0, 1), e(0, 2), e(1, 2)]]);
        assert_eq!(r.violations, vec![Violation::TriangleClass { class: 0 }]);
        assert!(StarColouring::from_classes(3, vec![vec![e(0, 1), e(0, 2), e(1, 2)]]).is_err());
    }

    #[test]
    fn partition_violations_are_listed() {
        let r = validate_classes(3, &[vec![e(0, 1)], vec![e(0, 1), e(0, 2)]]);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::EdgeRepeated { .. })));
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::EdgeMissing { edge } if *edge == e(1, 2))));
    }

    #[test]
    fn colour_counts() {
        assert_eq!(lexical(5).unwrap().colour_count(), 4);
        assert_eq!(StarColouring::rainbow(3).unwrap().colour_count(), 3);
    }

    #[test]
    fn star_counts_on_small_examples() {
        let lex = lexical(4).unwrap();
        assert_eq!(lex.star_count_at(0).unwrap().total, 1);
        // The last vertex centres only the single-edge class {v_3 v_4}.
        assert_eq!(
            lex.star_count_at(3).unwrap(),
            StarCount {
                total: 1,
                single_edge: 1
            }
        );
        let rb = StarColouring::rainbow(3).unwrap();
        for v in 0..3 {
            assert_eq!(
                rb.star_count_at(v).unwrap(),
                StarCount {
                    total: 2,
                    single_edge: 2
                }
            );
        }
        assert!(rb.star_count_at(3).is_err());
    }

    #[test]
    fn induced_orientations() {
        let t = lexical(6)
            .unwrap()
            .induced_orientation(TieBreak::LowerEndpoint);
        assert!(t.is_transitive());
        let rb = StarColouring::rainbow(3)
            .unwrap()
            .induced_orientation(TieBreak::LowerEndpoint);
        assert!(rb.has_arc(0, 1) && rb.has_arc(0, 2) && rb.has_arc(1, 2));
        let k2 = StarColouring::rainbow(2)
            .unwrap()
            .induced_orientation(TieBreak::LowerEndpoint);
        assert!(k2.has_arc(0, 1));
    }

    #[test]
    fn restriction_drops_empty_classes() {
        let lex = lexical(5).unwrap();
        let r = lex.restrict(&[1, 2, 3, 4]);
        assert_eq!(r.colour_count(), 3);
        assert!(r.same_partition(&lexical(4).unwrap()));
    }

    #[test]
    fn colex_roundtrip() {
        let lex = lexical(5).unwrap();
        let back = StarColouring::from_colex_ids(5, &lex.colex_ids()).unwrap();
        assert!(back.same_partition(&lex));
    }
}
