//! Detector exactness, the cycle machinery and the randomised join finder.

use proptest::prelude::*;

use arstar_core::constructions::{cycle_extremal, lexical};
use arstar_core::detect::{
    cycle_vertices, dependent_random_choice, extend_rainbow_cycle, find_rainbow, find_rainbow_join,
    has_rainbow, is_rainbow_cycle, rainbow_cycle_spectrum, rainbow_hamilton_cycle, JOIN_RETRIES,
};
use arstar_core::graph::{cycle, parse_pattern, path, star};
use arstar_core::oracle::{
    check_tuple, enumerate_star_colourings, find_covering_tuple, for_each_labelled_colouring,
    OracleOptions, Sequential,
};
use arstar_core::rng::{random_star_colouring, stream};
use arstar_core::tournament::Digraph;
use arstar_core::{SimpleGraph, StarColouring};

/// Every injection of `h` into the host, checked directly.
fn naive_rainbow(c: &StarColouring, h: &SimpleGraph) -> bool {
    fn rec(c: &StarColouring, h: &SimpleGraph, map: &mut Vec<usize>) -> bool {
        if map.len() == h.n() {
            let mut cols: Vec<usize> = h
                .edges()
                .iter()
                .map(|e| c.colour(map[e.u], map[e.v]))
                .collect();
            cols.sort_unstable();
            return cols.windows(2).all(|w| w[0] != w[1]);
        }
        for v in 0..c.n() {
            if !map.contains(&v) {
                map.push(v);
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

const SMALL_PATTERNS: [&str; 8] = ["C3", "C4", "C5", "K4", "K4-", "P3", "star3", "K2,3"];

#[test]
fn find_rainbow_agrees_with_all_injections() {
    let patterns: Vec<SimpleGraph> = SMALL_PATTERNS
        .iter()
        .map(|p| parse_pattern(p).unwrap())
        .collect();
    for seed in 0..200u64 {
        let n = 3 + (seed % 4) as usize;
        let merge = (seed % 7) as f64 / 7.0;
        let c = random_star_colouring(n, merge, &mut stream(seed, 10)).unwrap();
        for h in patterns.iter().filter(|h| h.n() <= n) {
            let fast = find_rainbow(&c, h);
            assert_eq!(fast.is_some(), naive_rainbow(&c, h), "seed {seed}");
            if let Some(cert) = fast {
                assert!(cert.verify(&c));
            }
        }
    }
}

#[test]
fn spectrum_is_an_interval() {
    for seed in 0..500u64 {
        let n = 3 + (seed % 6) as usize;
        let merge = (seed % 5) as f64 / 5.0;
        let c = random_star_colouring(n, merge, &mut stream(seed, 11)).unwrap();
        let spec = rainbow_cycle_spectrum(&c);
        let lengths: Vec<usize> = spec.iter().map(|(l, _)| *l).collect();
        let expected: Vec<usize> = (3..3 + lengths.len()).collect();
        assert_eq!(lengths, expected, "seed {seed}");
        for (l, cert) in &spec {
            assert!(cert.verify(&c));
            assert_eq!(cycle_vertices(cert).len(), *l);
        }
    }
}

#[test]
fn spectrum_examples() {
    assert!(rainbow_cycle_spectrum(&lexical(5).unwrap()).is_empty());
    let all: Vec<usize> = rainbow_cycle_spectrum(&StarColouring::rainbow(5).unwrap())
        .iter()
        .map(|(l, _)| *l)
        .collect();
    assert_eq!(all, vec![3, 4, 5]);
    let spec = rainbow_cycle_spectrum(&cycle_extremal(7, 5, None).unwrap());
    assert!(spec.iter().all(|(l, _)| *l < 5));
}

fn assert_hamilton(c: &StarColouring) {
    let cert = rainbow_hamilton_cycle(c).expect("rainbow Hamilton cycle");
    assert!(cert.verify(c));
    let verts = cycle_vertices(&cert);
    assert_eq!(verts.len(), c.n());
    assert!(is_rainbow_cycle(c, &verts));
}

#[test]
fn hamilton_cycles_on_every_small_colouring() {
    for n in 5..=6 {
        let reps = enumerate_star_colourings(n, &OracleOptions::default(), &Sequential).unwrap();
        let mut checked = 0;
        for c in reps.iter().filter(|c| c.min_star_count() >= 2) {
            assert_hamilton(c);
            checked += 1;
        }
        assert!(checked > 0);
    }
    for_each_labelled_colouring(5, 5, |c| {
        if c.min_star_count() >= 2 {
            assert_hamilton(c);
        }
    })
    .unwrap();
}

#[test]
fn cycle_extension_on_random_instances() {
    let mut extended = 0;
    for seed in 0..300u64 {
        let n = 4 + (seed % 4) as usize;
        let c = random_star_colouring(n, 0.3, &mut stream(seed, 12)).unwrap();
        for v in 0..n {
            if c.star_count_at(v).unwrap().total < 2 {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            if !has_rainbow(&c.restrict(&rest), &cycle(n - 1).unwrap()) {
                assert!(extend_rainbow_cycle(&c, v, None).is_err());
                continue;
            }
            let cert = extend_rainbow_cycle(&c, v, None).unwrap();
            assert!(cert.verify(&c));
            assert_eq!(cycle_vertices(&cert).len(), n);
            extended += 1;
        }
    }
    assert!(extended > 100);
}

#[test]
fn covering_tuples_exist_on_every_k4_free_colouring_of_k5() {
    let k4 = parse_pattern("K4").unwrap();
    let mut checked = 0;
    for_each_labelled_colouring(5, 5, |c| {
        if has_rainbow(c, &k4) {
            return;
        }
        for x in 0..5 {
            if c.star_count_at(x).unwrap().total < 3 {
                continue;
            }
            let t = find_covering_tuple(c, x).unwrap().expect("covering tuple");
            let r = check_tuple(c, &t);
            assert!(r.good && r.covers);
            checked += 1;
        }
    })
    .unwrap();
    assert!(checked > 0);
}

#[test]
fn drc_examples() {
    let mut rng = stream(0, 13);
    let full = Digraph::complete(20).unwrap();
    let a = dependent_random_choice(&full, 2, 3, 5, 16, &mut rng)
        .unwrap()
        .unwrap();
    assert_eq!(a.len(), 3);
    let empty = Digraph::empty(10).unwrap();
    assert!(dependent_random_choice(&empty, 1, 1, 1, 16, &mut rng)
        .unwrap()
        .is_none());
    let mut rng = stream(1, 13);
    let dense = Digraph::random(60, 0.7, &mut rng).unwrap();
    let a = dependent_random_choice(&dense, 2, 4, 4, 64, &mut rng)
        .unwrap()
        .expect("dense digraph");
    for (i, &x) in a.iter().enumerate() {
        for &y in &a[i + 1..] {
            assert!(dense.common_out(1 << x | 1 << y).count_ones() >= 4);
        }
    }
}

#[test]
fn join_certificates_agree_with_exhaustive_search() {
    let pairs = [
        (path(1).unwrap(), path(2).unwrap()),
        (path(1).unwrap(), star(3).unwrap()),
        (path(2).unwrap(), path(2).unwrap()),
    ];
    let mut found = 0;
    for seed in 0..60u64 {
        let n = 5 + (seed % 6) as usize;
        let merge = (seed % 4) as f64 / 8.0;
        let c = random_star_colouring(n, merge, &mut stream(seed, 14)).unwrap();
        for (t1, t2) in &pairs {
            let h = t1.join(t2).unwrap();
            let got = find_rainbow_join(&c, t1, t2, JOIN_RETRIES, &mut stream(seed, 15)).unwrap();
            if let Some(cert) = got {
                assert!(cert.verify(&c));
                assert!(has_rainbow(&c, &h));
                found += 1;
            }
        }
    }
    assert!(found > 0);
    let lex = lexical(10).unwrap();
    for (t1, t2) in &pairs {
        assert!(
            find_rainbow_join(&lex, t1, t2, JOIN_RETRIES, &mut stream(0, 16))
                .unwrap()
                .is_none()
        );
        assert!(!has_rainbow(&lex, &t1.join(t2).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn certificates_always_verify(n in 3usize..=8, merge in 0.0f64..1.0, seed: u64) {
        let c = random_star_colouring(n, merge, &mut stream(seed, 17)).unwrap();
        for name in SMALL_PATTERNS {
            let h = parse_pattern(name).unwrap();
            if let Some(cert) = find_rainbow(&c, &h) {
                prop_assert!(cert.verify(&c));
            }
        }
        if c.min_star_count() >= 2 {
            let cert = rainbow_hamilton_cycle(&c);
            prop_assert!(cert.is_some_and(|cert| cert.verify(&c)));
        }
    }

    #[test]
    fn drc_sets_are_verified(n in 4usize..=24, p in 0.2f64..1.0, s in 1usize..=3, seed: u64) {
        let mut rng = stream(seed, 18);
        let d = Digraph::random(n, p, &mut rng).unwrap();
        if let Some(a) = dependent_random_choice(&d, s, s + 1, 2, 8, &mut rng).unwrap() {
            prop_assert_eq!(a.len(), s + 1);
            for mask in arstar_core::bits::subsets_of_size(a.len(), s) {
                let set = arstar_core::bits::Bits32(mask).fold(0u64, |m, i| m | 1 << a[i]);
                prop_assert!(d.common_out(set).count_ones() >= 2);
            }
        }
    }
}
