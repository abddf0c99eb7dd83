use arstar_core::rng::stream;
use arstar_core::tournament::find_ck_free_tournament;
use arstar_core::Tournament;

fn all_tournaments(n: usize) -> impl Iterator<Item = Tournament> {
    let m = n * n.saturating_sub(1) / 2;
    (0u64..1 << m).map(move |bits| Tournament::from_bits(n, bits).unwrap())
}

fn assert_hamilton_path(t: &Tournament) {
    let p = t.redei_hamilton_path();
    let mut seen = vec![false; t.n()];
    for &v in &p {
        assert!(!std::mem::replace(&mut seen[v], true));
    }
    assert_eq!(p.len(), t.n());
    assert!(p.windows(2).all(|w| t.has_arc(w[0], w[1])));
}

#[test]
fn redei_on_every_small_tournament() {
    let mut count = 0;
    for n in 1..=5 {
        for t in all_tournaments(n) {
            assert_hamilton_path(&t);
            count += 1;
        }
    }
    assert_eq!(count, 1 + 2 + 8 + 64 + 1024);
}

#[test]
fn redei_on_random_tournaments() {
    for seed in 0..1000u64 {
        let n = 1 + (seed % 10) as usize;
        assert_hamilton_path(&Tournament::random(n, &mut stream(seed, 30)).unwrap());
    }
}

#[test]
fn moon_on_every_strong_tournament() {
    let mut strong = 0;
    for n in 3..=6 {
        for t in all_tournaments(n) {
            if !t.is_strong() {
                assert!(t.moon_cycles().is_err());
                continue;
            }
            strong += 1;
            let cycles = t.moon_cycles().unwrap();
            let lengths: Vec<usize> = cycles.iter().map(Vec::len).collect();
            assert_eq!(lengths, (3..=n).collect::<Vec<_>>());
            assert!(cycles.iter().all(|c| t.is_directed_cycle(c)));
        }
    }
    // Labelled strong tournaments on 3..6 vertices.
    assert_eq!(strong, 2 + 24 + 544 + 22320);
}

#[test]
fn ck_free_examples() {
    let t = find_ck_free_tournament(5, 4, true).unwrap();
    assert!(t.is_ck_free(4).unwrap());
    assert!(!t.is_transitive());
    assert!(t.find_directed_cycle(3).is_some());
    assert!(find_ck_free_tournament(3, 3, true).is_err());
    for n in 1..=8 {
        assert!(find_ck_free_tournament(n, 3, false)
            .unwrap()
            .is_transitive());
    }
}
