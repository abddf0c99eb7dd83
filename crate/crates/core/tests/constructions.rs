//! Every generator: validity, colour count and the rainbow copy it avoids.

use arstar_core::constructions::{
    apex_extension, clique_blowup_lower, cycle_extremal, girth_modified_lower,
    k4_extremal_three_part, k4_extremal_two_part, k4minus_extremal, lexical,
    min_degree_construction, modified, orientable, rainbow_blowup, BlowupSpec, EvenShape,
    ModificationSpec,
};
use arstar_core::detect::has_rainbow;
use arstar_core::graph::{complete, complete_minus, cycle, parse_pattern, Edge};
use arstar_core::invariants::circumference;
use arstar_core::oracle::ex_small;
use arstar_core::rng::stream;
use arstar_core::tournament::random_ck_free_tournament;
use arstar_core::{SimpleGraph, StarColouring, Tournament};

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Edges of the balanced complete `parts`-partite graph.
fn turan(n: usize, parts: usize) -> usize {
    let sizes: Vec<usize> = (0..parts)
        .map(|i| n / parts + usize::from(i < n % parts))
        .collect();
    (n * n - sizes.iter().map(|s| s * s).sum::<usize>()) / 2
}

fn valid(c: &StarColouring) -> &StarColouring {
    assert!(StarColouring::from_classes(c.n(), c.classes().to_vec()).is_ok());
    c
}

#[test]
fn lexical_family() {
    let c3 = cycle(3).unwrap();
    for n in 1..=10 {
        let c = lexical(n).unwrap();
        assert_eq!(valid(&c).colour_count(), n - 1);
        if n >= 3 {
            assert!(!has_rainbow(&c, &c3));
        }
    }
}

#[test]
fn orientable_family() {
    for seed in 0..50u64 {
        let n = 2 + (seed % 9) as usize;
        let t = Tournament::random(n, &mut stream(seed, 20)).unwrap();
        let sinks = (0..n).filter(|&v| t.out_degree(v) == 0).count();
        let c = orientable(&t).unwrap();
        assert_eq!(valid(&c).colour_count(), n - sinks);
        assert!((n - 1..=n).contains(&c.colour_count()));
    }
    let lex = orientable(&Tournament::transitive(6).unwrap()).unwrap();
    assert!(lex.same_partition(&lexical(6).unwrap()));
}

#[test]
fn blowup_family() {
    for n in 2..=10 {
        for parts in 1..=n.min(4) {
            let c = rainbow_blowup(&BlowupSpec::balanced_lexical(n, parts).unwrap()).unwrap();
            assert_eq!(
                valid(&c).colour_count(),
                turan(n, parts) + n - parts,
                "n = {n}, parts = {parts}"
            );
        }
    }
    assert_eq!(
        rainbow_blowup(&BlowupSpec::balanced_lexical(6, 2).unwrap())
            .unwrap()
            .colour_count(),
        13
    );
}

#[test]
fn modified_family() {
    for n in 2..=10 {
        let lex = lexical(n).unwrap();
        // Every other edge of the path 0, 1, ..., n - 1.
        let l = SimpleGraph::from_edges(n, (0..n - 1).step_by(2).map(|i| (i, i + 1))).unwrap();
        let c = modified(&lex, &ModificationSpec::Graph(l.clone())).unwrap();
        let survivors = lex
            .classes()
            .iter()
            .filter(|class| class.iter().any(|e| !l.has_edge(e.u, e.v)))
            .count();
        assert_eq!(valid(&c).colour_count(), l.edge_count() + survivors);
        // A matching of size floor(n/2) gives the odd K_4^- count.
        if n % 2 == 1 {
            assert_eq!(c.colour_count(), 3 * (n - 1) / 2);
        }
    }
    let stars = vec![
        vec![Edge::new(0, 1), Edge::new(0, 2)],
        vec![Edge::new(3, 4), Edge::new(3, 5)],
    ];
    // The class {34, 35} is absorbed by the second star and disappears.
    let c = modified(&lexical(6).unwrap(), &ModificationSpec::Stars(stars)).unwrap();
    assert_eq!(valid(&c).colour_count(), 6);
}

#[test]
fn cycle_family() {
    for k in 3..=6 {
        let h = cycle(k).unwrap();
        for n in k..=10 {
            let c = cycle_extremal(n, k, None).unwrap();
            assert_eq!(valid(&c).colour_count(), n + binom2(k - 2) - 1);
            if n <= 9 {
                assert!(!has_rainbow(&c, &h), "n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn cycle_family_over_random_ck_free_tournaments() {
    for seed in 0..40u64 {
        let k = 4 + (seed % 3) as usize;
        let n = k + (seed % (9 - k as u64)) as usize;
        let t = random_ck_free_tournament(n - k + 1, k, &mut stream(seed, 21)).unwrap();
        let c = cycle_extremal(n, k, Some(&t)).unwrap();
        assert_eq!(valid(&c).colour_count(), n + binom2(k - 2) - 1);
        assert!(!has_rainbow(&c, &cycle(k).unwrap()), "seed {seed}");
    }
}

#[test]
fn k4_families() {
    let h = complete(4).unwrap();
    for n in 4..=10 {
        for s in 2..n {
            let c = k4_extremal_two_part(n, s).unwrap();
            assert_eq!(valid(&c).colour_count(), 2 * n - 3);
            assert!(!has_rainbow(&c, &h));
        }
        for a in 1..n {
            for b in 1..n - a {
                let c = k4_extremal_three_part(n, [a, b, n - a - b]).unwrap();
                assert_eq!(valid(&c).colour_count(), 2 * n - 3);
                assert!(!has_rainbow(&c, &h));
            }
        }
    }
}

#[test]
fn k4_minus_family() {
    let h = complete_minus(4).unwrap();
    for n in 2..=10 {
        let mut shapes = vec![None];
        if n % 2 == 0 && n >= 4 {
            for a in 1..=(n - 2) / 2 {
                let (x, y, z) = (2 * a - 2, 2 * a - 1, 2 * a);
                for s_edges in [
                    vec![Edge::new(x, y)],
                    vec![Edge::new(y, z)],
                    vec![Edge::new(x, y), Edge::new(y, z)],
                    vec![Edge::new(x, z), Edge::new(y, z)],
                ] {
                    shapes.push(Some(EvenShape { a, s_edges }));
                }
            }
        }
        for shape in shapes {
            let c = k4minus_extremal(n, shape.as_ref()).unwrap();
            assert_eq!(
                valid(&c).colour_count(),
                3 * (n - 1) / 2,
                "n = {n}, {shape:?}"
            );
            if n >= 4 {
                assert!(!has_rainbow(&c, &h), "n = {n}, {shape:?}");
            }
        }
    }
}

#[test]
fn apex_family() {
    for n in 2..=9 {
        let base = lexical(n).unwrap();
        let c = apex_extension(&base).unwrap();
        assert_eq!(valid(&c).colour_count(), base.colour_count() + n);
        if n >= 3 {
            assert!(!has_rainbow(&c, &complete(4).unwrap()));
        }
    }
    let r = apex_extension(&StarColouring::rainbow(3).unwrap()).unwrap();
    assert!(r.same_partition(&StarColouring::rainbow(4).unwrap()));
}

#[test]
fn min_degree_family() {
    for name in ["K4", "K5", "C4", "K2,3", "K4-", "Q3"] {
        let h = parse_pattern(name).unwrap();
        let (v, delta) = (h.n(), h.min_degree());
        for n in v..=10 {
            let c = min_degree_construction(n, &h).unwrap();
            assert_eq!(
                valid(&c).colour_count(),
                binom2(v - 1) + (delta - 1) * (n - v + 1)
            );
            assert!(!has_rainbow(&c, &h), "{name}, n = {n}");
        }
    }
    // Q_3 is 3-regular: 21 + 2.
    let q3 = parse_pattern("Q3").unwrap();
    assert_eq!(min_degree_construction(8, &q3).unwrap().colour_count(), 23);
    assert!(min_degree_construction(6, &parse_pattern("P3").unwrap()).is_err());
}

#[test]
fn clique_blowup_family() {
    for m in 5..=8 {
        let h = complete(m).unwrap();
        let k = m / 2;
        for n in m..=10 {
            let c = clique_blowup_lower(n, m).unwrap();
            let want = if m % 2 == 1 {
                turan(n, k) + n - k
            } else {
                turan(n, k - 1) + n + n.div_ceil(k - 1) - k - 1
            };
            assert_eq!(valid(&c).colour_count(), want, "m = {m}, n = {n}");
            assert!(!has_rainbow(&c, &h), "m = {m}, n = {n}");
        }
    }
}

#[test]
fn girth_modified_family() {
    for name in ["K5-", "K5"] {
        let h = parse_pattern(name).unwrap();
        let family: Vec<SimpleGraph> = (3..=circumference(&h).unwrap())
            .map(|l| cycle(l).unwrap())
            .collect();
        for n in 5..=10 {
            let l = ex_small(n, &family).unwrap().witness;
            let c = girth_modified_lower(n, &h).unwrap();
            // Edges of L plus the lexical stars that keep an edge outside L.
            let survivors = (0..n - 1)
                .filter(|&i| (i + 1..n).any(|j| !l.has_edge(i, j)))
                .count();
            assert_eq!(
                valid(&c).colour_count(),
                l.edge_count() + survivors,
                "{name}, n = {n}"
            );
            assert!(!has_rainbow(&c, &h), "{name}, n = {n}");
        }
    }
    assert!(girth_modified_lower(6, &complete(4).unwrap()).is_err());
}
