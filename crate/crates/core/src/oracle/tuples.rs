use alloc::format;

use crate::bits::{low_mask, Bits32};
use crate::colouring::StarColouring;
use crate::detect::find_rainbow;
use crate::error::{precondition, Result};
use crate::graph::complete;

/// A tuple `(W, Y, Z, x, v*, c_Z)`; vertex sets are bitmasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleP {
    pub w: u32,
    pub y: u32,
    pub z: u32,
    pub x: usize,
    pub v_star: usize,
    pub c_z: usize,
}

/// Predicate values for a tuple. `p[i]` holds `P(i+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TupleReport {
    pub p: [bool; 7],
    pub good: bool,
    pub great: bool,
    pub restricted: bool,
    /// Every colour lies in `C(W) ∪ C(Y) ∪ C(Z) ∪ {c_Z}`.
    pub covers: bool,
}

impl TupleP {
    /// `C(Y) ∪ C(Z) ∪ {c_Z}`.
    pub fn b_set(&self, c: &StarColouring) -> u128 {
        c.colours_within(self.y) | c.colours_within(self.z) | 1 << self.c_z
    }

    /// `C(W) ∪ B`.
    pub fn c_set(&self, c: &StarColouring) -> u128 {
        c.colours_within(self.w) | self.b_set(c)
    }
}

/// Evaluates every predicate literally. Malformed tuples (P1 false) report
/// false throughout.
pub fn check_tuple(c: &StarColouring, t: &TupleP) -> TupleReport {
    let n = c.n();
    let all = low_mask(n);
    let mut r = TupleReport::default();
    r.p[0] = t.w & !all == 0
        && t.y & !all == 0
        && t.z & !all == 0
        && t.x < n
        && t.v_star < n
        && t.c_z < c.colour_count();
    if !r.p[0] {
        return r;
    }
    let (w, y, z) = (t.w.count_ones(), t.y.count_ones(), t.z.count_ones());
    r.p[1] = t.w | t.y | t.z == all && w >= 1 && y >= 2 && z >= 2 && (w + y + z) as usize == n + 2;
    let b = t.b_set(c);
    r.p[2] = c.colours_within(t.y | t.z) == b;
    r.p[3] = p4(c, t);
    r.p[4] = p5(t, n);
    r.p[5] = Bits32(t.z & !(1 << t.v_star) | 1 << t.x)
        .all(|u| u != t.v_star && c.centre(c.colour(t.v_star, u)).is_centre(u));
    r.p[6] = Bits32(t.z & !(1 << t.v_star))
        .all(|zz| zz != t.x && c.colour(t.x, zz) == t.c_z && c.centre(t.c_z).is_centre(t.x));
    r.good = r.p[..4].iter().all(|&p| p);
    r.great = r.good && r.p[4..].iter().all(|&p| p);
    r.restricted = r.great
        && Bits32(t.w & !(1 << t.x)).all(|wv| {
            let allowed = b | 1 << c.colour(wv, t.x);
            Bits32(t.y & !(1 << wv)).all(|yv| allowed >> c.colour(wv, yv) & 1 == 1)
        });
    r.covers = c.all_colours() == t.c_set(c);
    r
}

/// Edges from `x` to `{y, z} ∪ W` carry distinct colours for every choice of
/// `y` in `Y - x` and `z` in `Z - v*`.
fn p4(c: &StarColouring, t: &TupleP) -> bool {
    for yv in Bits32(t.y & !(1 << t.x)) {
        for zv in Bits32(t.z & !(1 << t.v_star)) {
            let targets = (t.w | 1 << yv | 1 << zv) & !(1 << t.x);
            let mut seen = 0u128;
            for u in Bits32(targets) {
                let bit = 1u128 << c.colour(t.x, u);
                if seen & bit != 0 {
                    return false;
                }
                seen |= bit;
            }
        }
    }
    true
}

fn p5(t: &TupleP, n: usize) -> bool {
    let inside = |m: u32, v: usize| m >> v & 1 == 1;
    inside(t.w, t.x)
        && inside(t.y, t.x)
        && !inside(t.z, t.x)
        && inside(t.y, t.v_star)
        && inside(t.z, t.v_star)
        && !inside(t.w, t.v_star)
        && (0..n)
            .filter(|&u| u != t.x && u != t.v_star)
            .all(|u| [t.w, t.y, t.z].iter().filter(|&&m| inside(m, u)).count() == 1)
}

fn require_k4_free_with_centre(c: &StarColouring, x: usize) -> Result<()> {
    if find_rainbow(c, &complete(4)?).is_some() {
        return Err(precondition("colouring contains a rainbow K_4"));
    }
    let sc = c.star_count_at(x)?;
    if sc.total < 3 {
        return Err(precondition(format!(
            "vertex {x} centres only {} classes",
            sc.total
        )));
    }
    Ok(())
}

/// Calls `f` on every `(W, Y, Z)` covering the vertices with
/// `|W| + |Y| + |Z| = n + 2`, `|W| >= 1` and `|Y|, |Z| >= 2`, in a fixed
/// order, until `f` returns `Some`.
fn each_cover<T>(n: usize, mut f: impl FnMut(u32, u32, u32) -> Option<T>) -> Option<T> {
    // Each vertex joins a non-empty subset of {W, Y, Z}; exactly two extra
    // memberships in total.
    fn rec<T>(
        v: usize,
        n: usize,
        extra: usize,
        sets: [u32; 3],
        f: &mut dyn FnMut(u32, u32, u32) -> Option<T>,
    ) -> Option<T> {
        if v == n {
            if extra != 2 {
                return None;
            }
            let [w, y, z] = sets;
            if w.count_ones() < 1 || y.count_ones() < 2 || z.count_ones() < 2 {
                return None;
            }
            return f(w, y, z);
        }
        for mask in 1u32..8 {
            let e = mask.count_ones() as usize - 1;
            if extra + e > 2 {
                continue;
            }
            let mut s = sets;
            for (i, set) in s.iter_mut().enumerate() {
                if mask >> i & 1 == 1 {
                    *set |= 1 << v;
                }
            }
            if let Some(r) = rec(v + 1, n, extra + e, s, f) {
                return Some(r);
            }
        }
        None
    }
    rec(0, n, 0, [0; 3], &mut f)
}

/// Exhaustive search for a good tuple with the given `x` whose colour set is
/// everything. Errors unless the colouring is rainbow-`K_4`-free and `x`
/// centres at least three classes.
pub fn find_covering_tuple(c: &StarColouring, x: usize) -> Result<Option<TupleP>> {
    require_k4_free_with_centre(c, x)?;
    let n = c.n();
    let all = c.all_colours();
    Ok(each_cover(n, |w, y, z| {
        let parts = c.colours_within(w) | c.colours_within(y) | c.colours_within(z);
        let extra = (c.colours_within(y | z) & !(c.colours_within(y) | c.colours_within(z)))
            | (all & !parts);
        // `c_Z` must be the only colour outside the three parts.
        let c_z = match extra.count_ones() {
            0 => 0,
            1 => extra.trailing_zeros() as usize,
            _ => return None,
        };
        (0..n).find_map(|v_star| {
            let t = TupleP {
                w,
                y,
                z,
                x,
                v_star,
                c_z,
            };
            let r = check_tuple(c, &t);
            (r.good && r.covers).then_some(t)
        })
    }))
}

/// Exhaustive search for a great tuple at `x` in which every `xy`, `y` in
/// `Y - x`, lies in a class centred at `x`.
pub fn find_initial_great_tuple(c: &StarColouring, x: usize) -> Result<Option<TupleP>> {
    require_k4_free_with_centre(c, x)?;
    let n = c.n();
    Ok(each_cover(n, |w, y, z| {
        if Bits32(y & !(1 << x)).any(|yv| !c.centre(c.colour(x, yv)).is_centre(x)) {
            return None;
        }
        (0..n).find_map(|v_star| {
            (0..c.colour_count()).find_map(|c_z| {
                let t = TupleP {
                    w,
                    y,
                    z,
                    x,
                    v_star,
                    c_z,
                };
                check_tuple(c, &t).great.then_some(t)
            })
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::k4_extremal_two_part;

    #[test]
    fn malformed_is_all_false() {
        let c = k4_extremal_two_part(6, 3).unwrap();
        let r = check_tuple(
            &c,
            &TupleP {
                w: 0,
                y: 0,
                z: 0,
                x: 9,
                v_star: 0,
                c_z: 0,
            },
        );
        assert_eq!(r, TupleReport::default());
    }

    #[test]
    fn two_part_family_has_tuples() {
        let c = k4_extremal_two_part(6, 3).unwrap();
        let x = (0..6)
            .find(|&v| c.star_count_at(v).unwrap().total >= 3)
            .unwrap();
        let t = find_covering_tuple(&c, x).unwrap().unwrap();
        let r = check_tuple(&c, &t);
        assert!(r.good && r.covers);
        let g = find_initial_great_tuple(&c, x).unwrap().unwrap();
        assert!(check_tuple(&c, &g).great);
    }

    #[test]
    fn rainbow_k4_is_rejected() {
        let r = StarColouring::rainbow(5).unwrap();
        assert!(find_covering_tuple(&r, 0).is_err());
    }
}
