//! Canonical forms for colourings and graphs.
//!
//! A vertex ordering turns a colouring into the sequence of class labels on
//! colex-ordered edges, with labels renamed in order of first appearance. The
//! canonical key is the least such sequence over all orderings that sort the
//! vertices by a refined invariant. Placing vertex `w` appends exactly the
//! labels of the edges `(v_0 w), .., (v_{w-1} w)`, so the search proceeds one
//! position at a time and keeps only orderings whose prefix is minimal.
//! Transposition automorphisms (twins) are collapsed as they are found.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::fnv;
use crate::colouring::{Centre, StarColouring};
use crate::error::{check_cap, Result};
use crate::graph::{complete_edges, Edge, SimpleGraph};

/// Default exact-canonicalisation cap.
pub const CANON_CAP: usize = 9;

/// Hard limit for [`canonical_key_capped`].
pub const CANON_HARD_CAP: usize = 16;

/// Canonical key; equal iff the objects are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey(pub Vec<u8>);

impl CanonKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hex rendering.
    pub fn to_hex(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            let _ = write!(s, "{b:02x}");
        }
        s
    }
}

/// Object that can be canonicalised by vertex ordering.
pub trait CanonTarget {
    type State: Clone;

    fn n(&self) -> usize;
    /// Isomorphism-invariant label of a vertex.
    fn vertex_signature(&self, v: usize) -> u64;
    /// Isomorphism-invariant label of the ordered pair `(v, u)`.
    fn pair_signature(&self, v: usize, u: usize) -> u64;
    /// Whether swapping `u` and `w` is an automorphism.
    fn twins(&self, u: usize, w: usize) -> bool;
    fn init(&self) -> Self::State;
    /// Appends the labels of the pairs `(placed[i], x)` in order.
    fn extend(&self, state: &mut Self::State, placed: &[usize], x: usize, out: &mut Vec<u16>);
}

/// Refined vertex invariants: two rounds of neighbourhood hashing.
pub fn refined_invariants<T: CanonTarget>(t: &T) -> Vec<u64> {
    let n = t.n();
    let mut inv: Vec<u64> = (0..n).map(|v| t.vertex_signature(v)).collect();
    for _ in 0..2 {
        let next = (0..n)
            .map(|v| {
                let mut around: Vec<u64> = (0..n)
                    .filter(|&u| u != v)
                    .map(|u| fnv([t.pair_signature(v, u), inv[u]]))
                    .collect();
                around.sort_unstable();
                fnv(core::iter::once(inv[v]).chain(around))
            })
            .collect();
        inv = next;
    }
    inv
}

struct Node<S> {
    order: Vec<usize>,
    used: u32,
    state: S,
}

/// Minimal label sequence and one ordering achieving it.
pub fn canonical_search<T: CanonTarget>(t: &T) -> (Vec<u16>, Vec<usize>) {
    let n = t.n();
    let inv = refined_invariants(t);
    let mut slots = inv.clone();
    slots.sort_unstable();
    // Lowest member of each vertex's twin class.
    let mut twin_rep: Vec<usize> = (0..n).collect();
    for w in 0..n {
        for u in 0..w {
            if twin_rep[u] == u && inv[u] == inv[w] && t.twins(u, w) {
                twin_rep[w] = u;
                break;
            }
        }
    }
    let mut nodes = vec![Node {
        order: Vec::new(),
        used: 0u32,
        state: t.init(),
    }];
    let mut key: Vec<u16> = Vec::new();
    let mut block: Vec<u16> = Vec::new();
    for &slot in &slots {
        let mut best: Option<Vec<u16>> = None;
        let mut next: Vec<Node<T::State>> = Vec::new();
        for node in &nodes {
            for x in 0..n {
                if node.used >> x & 1 == 1 || inv[x] != slot {
                    continue;
                }
                // Among unplaced twins only the lowest is tried.
                let r = twin_rep[x];
                if r != x && (r..x).any(|y| twin_rep[y] == r && node.used >> y & 1 == 0) {
                    continue;
                }
                let mut state = node.state.clone();
                block.clear();
                t.extend(&mut state, &node.order, x, &mut block);
                let ord = match &best {
                    None => core::cmp::Ordering::Less,
                    Some(b) => block.as_slice().cmp(b.as_slice()),
                };
                if ord == core::cmp::Ordering::Greater {
                    continue;
                }
                if ord == core::cmp::Ordering::Less {
                    best = Some(block.clone());
                    next.clear();
                }
                let mut order = node.order.clone();
                order.push(x);
                next.push(Node {
                    order,
                    used: node.used | 1 << x,
                    state,
                });
            }
        }
        key.extend_from_slice(best.as_deref().unwrap_or(&[]));
        nodes = next;
    }
    let order = nodes.swap_remove(0).order;
    (key, order)
}

// ---------------------------------------------------------------------------
// Colourings
// ---------------------------------------------------------------------------

#[derive(Clone)]
pub struct ColouringState {
    label: Vec<u16>,
    next: u16,
}

impl CanonTarget for StarColouring {
    type State = ColouringState;

    fn n(&self) -> usize {
        StarColouring::n(self)
    }

    fn vertex_signature(&self, v: usize) -> u64 {
        let mut roles: Vec<u64> = Vec::new();
        for u in 0..StarColouring::n(self) {
            if u != v {
                roles.push(self.pair_signature(v, u));
            }
        }
        roles.sort_unstable();
        fnv(roles)
    }

    fn pair_signature(&self, v: usize, u: usize) -> u64 {
        let c = self.colour(v, u);
        let role = match self.centre(c) {
            Centre::Unique(x) if x == v => 0,
            Centre::Unique(_) => 1,
            Centre::Pair(..) => 2,
        };
        (self.class(c).len() as u64) << 2 | role
    }

    fn twins(&self, u: usize, w: usize) -> bool {
        let n = StarColouring::n(self);
        let swap = |x: usize| {
            if x == u {
                w
            } else if x == w {
                u
            } else {
                x
            }
        };
        let mut image = vec![u16::MAX; self.colour_count()];
        for a in 0..n {
            for b in a + 1..n {
                let from = self.colour(a, b);
                let to = self.colour(swap(a), swap(b)) as u16;
                if image[from] == u16::MAX {
                    image[from] = to;
                } else if image[from] != to {
                    return false;
                }
            }
        }
        // The swap is an involution, so a well-defined class map is a bijection.
        true
    }

    fn init(&self) -> ColouringState {
        ColouringState {
            label: vec![u16::MAX; self.colour_count()],
            next: 0,
        }
    }

    fn extend(&self, s: &mut ColouringState, placed: &[usize], x: usize, out: &mut Vec<u16>) {
        for &p in placed {
            let c = self.colour(p, x);
            if s.label[c] == u16::MAX {
                s.label[c] = s.next;
                s.next += 1;
            }
            out.push(s.label[c]);
        }
    }
}

/// Exact canonical key for `n <= CANON_CAP`.
pub fn canonical_key(c: &StarColouring) -> Result<CanonKey> {
    canonical_key_capped(c, CANON_CAP)
}

/// Exact canonical key with a caller-chosen cap (at most 16).
pub fn canonical_key_capped(c: &StarColouring, cap: usize) -> Result<CanonKey> {
    check_cap("canonicalisation vertices", c.n(), cap.min(CANON_HARD_CAP))?;
    Ok(colouring_key(c, &canonical_search(c).0))
}

fn colouring_key(c: &StarColouring, labels: &[u16]) -> CanonKey {
    let mut bytes = Vec::with_capacity(labels.len() + 1);
    bytes.push(c.n() as u8);
    bytes.extend(labels.iter().map(|&l| l as u8));
    CanonKey(bytes)
}

/// Canonical key together with the canonical representative: the colouring
/// relabelled by the minimising ordering, classes numbered by first
/// appearance along colex edges.
pub fn canonical_colouring(c: &StarColouring) -> Result<(CanonKey, StarColouring)> {
    check_cap("canonicalisation vertices", c.n(), CANON_HARD_CAP)?;
    let (labels, order) = canonical_search(c);
    let n = c.n();
    let mut classes: Vec<Vec<Edge>> = vec![Vec::new(); c.colour_count()];
    for (e, &l) in complete_edges(n).iter().zip(&labels) {
        classes[l as usize].push(*e);
    }
    debug_assert!({
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        c.permuted(&pos)
            .same_partition(&StarColouring::build_unchecked(n, classes.clone()))
    });
    Ok((
        colouring_key(c, &labels),
        StarColouring::build_unchecked(n, classes),
    ))
}

/// Non-exact isomorphism filter for colourings beyond the exact cap: equal
/// for isomorphic colourings, but may collide.
pub fn invariant_hash(c: &StarColouring) -> u64 {
    let mut inv = refined_invariants(c);
    inv.sort_unstable();
    let mut sizes: Vec<u64> = c.classes().iter().map(|k| k.len() as u64).collect();
    sizes.sort_unstable();
    fnv([c.n() as u64].into_iter().chain(sizes).chain(inv))
}

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

impl CanonTarget for SimpleGraph {
    type State = ();

    fn n(&self) -> usize {
        SimpleGraph::n(self)
    }

    fn vertex_signature(&self, v: usize) -> u64 {
        self.degree(v) as u64
    }

    fn pair_signature(&self, v: usize, u: usize) -> u64 {
        u64::from(self.has_edge(v, u))
    }

    fn twins(&self, u: usize, w: usize) -> bool {
        let mask = !(1u32 << u | 1u32 << w);
        self.neighbours(u) & mask == self.neighbours(w) & mask
    }

    fn init(&self) {}

    fn extend(&self, _: &mut (), placed: &[usize], x: usize, out: &mut Vec<u16>) {
        // Edges first, so the canonical form front-loads adjacency.
        out.extend(placed.iter().map(|&p| u16::from(!self.has_edge(p, x))));
    }
}

/// Exact canonical key of a graph (`n <= 16`).
pub fn graph_key(g: &SimpleGraph) -> Result<CanonKey> {
    check_cap("canonicalisation vertices", g.n(), CANON_HARD_CAP)?;
    let (bits, _) = canonical_search(g);
    let mut bytes = vec![g.n() as u8];
    for chunk in bits.chunks(8) {
        bytes.push(
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |b, (i, &x)| b | (x as u8) << i),
        );
    }
    Ok(CanonKey(bytes))
}

/// Canonical key and the canonically relabelled graph.
pub fn canonical_graph(g: &SimpleGraph) -> Result<(CanonKey, SimpleGraph)> {
    let key = graph_key(g)?;
    let (_, order) = canonical_search(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    Ok((key, g.permuted(&pos)))
}
