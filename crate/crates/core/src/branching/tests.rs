use super::*;
use crate::chords::{quartile_partition, CircArc};
use crate::color::Color;
use crate::instance::validate_coloring;
use crate::testkit::{arb_instance, enumerate_solve, inst};
use alloc::vec::Vec;
use proptest::prelude::*;

fn contains(outer: CircArc, inner: CircArc, u: u32) -> bool {
    outer.contains_arc(inner, u)
}

fn assert_sound(input: &Instance, item: &SeparatedInstance) {
    assert!(item.inst.is_subinstance_of(input));
    if let Some(mut col) = enumerate_solve(&item.inst) {
        col.merge(&item.partial);
        assert!(validate_coloring(input, &col), "partial + sub-coloring must color the input");
    }
}

#[test]
fn semi_without_cross_chords_is_single() {
    let i = inst(8, &[(0, 1, "RGB"), (2, 3, "RGB"), (4, 5, "RG"), (6, 7, "B")]);
    let p = quartile_partition(i.diagram()).unwrap();
    assert_eq!(p.lengths(), [2, 2, 2, 2]);
    let family: Vec<_> = semi_separate(&i).unwrap().collect();
    assert_eq!(family.len(), 1);
    let (reduced, partial) = i.reduce().into_option().unwrap();
    assert_eq!(family[0].inst, reduced);
    assert_eq!(family[0].partial, partial);
    assert_eq!(family[0].partition, p);
}

#[test]
fn semi_colors_lr_chords_red_first() {
    // L = {0,1}, T = {2,3}, R = {4,5}, B = {6,7}: two nested L-R chords and
    // two nested T-B chords.
    let i = inst(8, &[(0, 5, "RGB"), (1, 4, "RGB"), (2, 7, "RGB"), (3, 6, "RGB")]);
    let p = quartile_partition(i.diagram()).unwrap();
    let mut family = semi_separate(&i).unwrap();
    let first = family.next().unwrap();
    assert_eq!(first.partition, p);
    assert_eq!(first.partial.get(0), Some(Color::Red));
    assert_eq!(first.partial.get(1), Some(Color::Red));
    assert!(!first.inst.contains(0) && !first.inst.contains(1));
    let rest: Vec<_> = family.collect();
    assert_eq!(rest.len(), 5);
    // The T-B branches are tagged with the rotation.
    assert!(rest[2..].iter().all(|s| s.partition == p.rotate()));
}

#[test]
fn full_from_empty_thin_arcs_merges() {
    let i = inst(8, &[(0, 3, "RGB"), (1, 2, "RGB"), (4, 6, "RG"), (5, 7, "RGB")]);
    let p = CirclePartition::from_lengths(8, 0, [4, 0, 4, 0]);
    let semi = SeparatedInstance { inst: i.clone(), partition: p, kind: Separation::Semi, partial: PartialColoring::new() };
    let out: Vec<_> = full_separate(semi).unwrap().collect();
    assert_eq!(out.len(), 1);
    assert_eq!(out[0].inst, i);
    assert_eq!(out[0].kind, Separation::Full);
    assert_eq!(out[0].partition.lengths(), [4, 0, 4, 0]);

    let p = CirclePartition::from_lengths(12, 0, [4, 2, 4, 2]);
    let i = inst(12, &[(0, 3, "RGB"), (6, 9, "RGB")]);
    let semi = SeparatedInstance { inst: i, partition: p, kind: Separation::Semi, partial: PartialColoring::new() };
    let out: Vec<_> = full_separate(semi).unwrap().collect();
    assert_eq!(out.len(), 1);
    assert_eq!(out[0].partition.lengths(), [6, 0, 6, 0]);
}

#[test]
fn full_grows_right_over_t_right() {
    // L = [0,4), T = [4,8), R = [8,12), B = [12,16).
    // T holds endpoints 4,5,6,7: T_L = {4,5}, T_R = {6,7}.
    // Chord 0 is L-T_R, chord 1 is T_L-R; they cross. Chord 2 is T_L-T_R.
    let i = inst(16, &[(1, 6, "G"), (5, 9, "RGB"), (4, 7, "RGB")]);
    let p = CirclePartition::from_lengths(16, 0, [4, 4, 4, 4]);
    let semi = SeparatedInstance { inst: i.clone(), partition: p, kind: Separation::Semi, partial: PartialColoring::new() };
    let mut stream = full_separate(semi).unwrap();
    let first = stream.next().unwrap();
    // L-T_R side fixed to its only color: chord 0 gone, R grew over T_R.
    assert_eq!(first.partial.get(0), Some(Color::Green));
    assert!(first.partition.arc(Side::R).contains_arc(CircArc::new(6, 2), 16));
    assert!(first.partition.arc(Side::R).contains_arc(p.arc(Side::R), 16));
    assert!(first.partition.arc(Side::L).contains_arc(p.arc(Side::L), 16));
    for rest in stream {
        assert_sound(&i, &rest);
    }
}

#[test]
fn rejects_unseparated_input() {
    let i = inst(8, &[(0, 4, "RGB")]);
    let p = CirclePartition::from_lengths(8, 0, [2, 2, 2, 2]);
    let semi = SeparatedInstance { inst: i, partition: p, kind: Separation::Semi, partial: PartialColoring::new() };
    assert_eq!(full_separate(semi.clone()).err(), Some(BranchError::NotSemiSeparated { id: 0 }));
    let full = SeparatedInstance { kind: Separation::Full, ..semi.clone() };
    assert_eq!(split_full(&full), Err(BranchError::NotSemiSeparated { id: 0 }));
    let on_top = SeparatedInstance { inst: inst(8, &[(0, 2, "RGB")]), ..full };
    assert_eq!(split_full(&on_top), Err(BranchError::NotFullySeparated));
    assert_eq!(split_full(&semi), Err(BranchError::NotFullySeparated));
    assert_eq!(semi_separate(&Instance::empty(4)).err(), Some(BranchError::EmptyInstance));
}

#[test]
fn family_examples() {
    let pair = inst(4, &[(0, 2, "RGB"), (1, 3, "RGB")]);
    let family: Vec<_> = separated_family(&pair).unwrap().collect();
    assert!(!family.is_empty());
    assert!(family.iter().any(|f| enumerate_solve(&f.inst).is_some()));

    let k4 = inst(8, &[(0, 4, "RGB"), (1, 5, "RGB"), (2, 6, "RGB"), (3, 7, "RGB")]);
    assert!(separated_family(&k4).unwrap().all(|f| enumerate_solve(&f.inst).is_none()));
}

#[test]
fn split_full_examples() {
    let empty = SeparatedInstance {
        inst: Instance::empty(8),
        partition: CirclePartition::from_lengths(8, 0, [4, 0, 4, 0]),
        kind: Separation::Full,
        partial: PartialColoring::new(),
    };
    let (l, r) = split_full(&empty).unwrap();
    assert!(l.is_empty() && r.is_empty());

    let i = inst(8, &[(0, 3, "RGB"), (1, 2, "RGB"), (4, 6, "RG"), (5, 7, "RGB")]);
    let full = SeparatedInstance { inst: i, ..empty };
    let (l, r) = split_full(&full).unwrap();
    assert_eq!(l.ids().collect::<Vec<_>>(), [0, 1]);
    assert_eq!(r.ids().collect::<Vec<_>>(), [2, 3]);
}

// Deterministic random matching for the larger structural checks.
fn matching(n: u32, seed: u64) -> Instance {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut pos: Vec<u32> = (0..2 * n).collect();
    pos.shuffle(&mut rng);
    let entries = pos
        .chunks(2)
        .enumerate()
        .map(|(k, w)| (crate::Chord::new(k as u32, w[0], w[1]).unwrap(), crate::ColorSet::FULL))
        .collect();
    Instance::from_chords(2 * n, entries).unwrap()
}

#[test]
fn sixteen_chords_split_into_at_most_twelve() {
    for seed in 0..20 {
        let i = matching(16, seed);
        for full in separated_family(&i).unwrap().take(300) {
            let (l, r) = split_full(&full).unwrap();
            assert!(l.len() <= 12 && r.len() <= 12, "seed {seed}: {} / {}", l.len(), r.len());
        }
    }
}

#[test]
fn family_size_stays_polynomial() {
    let mut worst = 0.0f64;
    for n in 2..=10u32 {
        for seed in 0..10 {
            let i = matching(n, seed);
            let len = separated_family(&i).unwrap().count() as f64;
            let bound = (n as f64).powi(7);
            assert!(len <= bound, "n={n} seed={seed}: {len} members");
            worst = worst.max(len.ln() / (n as f64).ln());
        }
    }
    std::println!("largest family exponent log(len)/log(n): {worst:.2}");
}

fn floor_half(n: usize) -> u32 {
    (n / 2) as u32
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn semi_stream_properties(i in arb_instance(10)) {
        let stream = semi_separate(&i).unwrap();
        let mut any = false;
        let mut len = 0;
        for s in stream {
            len += 1;
            prop_assert_eq!(s.kind, Separation::Semi);
            prop_assert_eq!(s.first_lr_chord(), None);
            let d = i.diagram();
            prop_assert!(d.endpoint_count(s.partition.arc(Side::L)) >= floor_half(i.len()));
            prop_assert!(d.endpoint_count(s.partition.arc(Side::R)) >= floor_half(i.len()));
            assert_sound(&i, &s);
            any |= enumerate_solve(&s.inst).is_some();
        }
        prop_assert!(len <= SEMI_BOUND);
        prop_assert_eq!(any, enumerate_solve(&i).is_some());
    }

    #[test]
    fn full_stream_properties(i in arb_instance(10)) {
        let n = i.len();
        for semi in semi_separate(&i).unwrap() {
            let before = semi.partition;
            let semi_yes = enumerate_solve(&semi.inst).is_some();
            let mut stream = full_separate(semi.clone()).unwrap().with_trace();
            let mut any = false;
            for full in stream.by_ref() {
                prop_assert_eq!(full.kind, Separation::Full);
                prop_assert_eq!(full.thin_endpoints(), 0);
                prop_assert_eq!(full.first_lr_chord(), None);
                let u = i.universe();
                prop_assert!(contains(full.partition.arc(Side::L), before.arc(Side::L), u));
                prop_assert!(contains(full.partition.arc(Side::R), before.arc(Side::R), u));
                assert_sound(&i, &full);
                any |= enumerate_solve(&full.inst).is_some();
            }
            prop_assert_eq!(any, semi_yes);

            let stats = stream.stats();
            prop_assert_eq!(stats.measure_violations, 0);
            prop_assert!(stats.eliminate_max_len <= ELIMINATE_BOUND);
            let depth_bound = (2.0 * n as f64).ln() / (4.0f64 / 3.0).ln() + 4.0;
            prop_assert!(f64::from(stats.full_max_depth) <= depth_bound);

            // Along every path the measure is dominated by c, ceil(3c/4), ...
            let trace = stream.trace().unwrap();
            let c0 = trace[0].c;
            for step in trace {
                let mut cap = c0;
                for _ in 0..step.depth {
                    cap = (3 * cap).div_ceil(4);
                }
                prop_assert!(step.c <= cap, "depth {} measure {} above {}", step.depth, step.c, cap);
            }
        }
    }

    #[test]
    fn family_properties(i in arb_instance(10)) {
        let n = i.len();
        let ceil = (3 * n).div_ceil(4);
        let mut family = separated_family(&i).unwrap();
        let mut any = false;
        for full in family.by_ref() {
            let d = i.diagram();
            prop_assert!(d.endpoint_count(full.partition.arc(Side::L)) >= floor_half(n));
            prop_assert!(d.endpoint_count(full.partition.arc(Side::R)) >= floor_half(n));
            let (l, r) = split_full(&full).unwrap();
            prop_assert!(l.len() <= ceil && r.len() <= ceil);
            assert_sound(&i, &full);
            any |= enumerate_solve(&full.inst).is_some();
        }
        prop_assert_eq!(any, enumerate_solve(&i).is_some());
        let stats = family.stats();
        prop_assert_eq!(stats.eliminate_over_bound, 0);
        prop_assert_eq!(stats.semi_over_bound, 0);
        prop_assert_eq!(stats.measure_violations, 0);
        prop_assert_eq!(stats.semi_calls, 1);
    }
}

#[test]
fn eliminate_bound_is_six() {
    assert_eq!(ELIMINATE_BOUND, 6);
    assert_eq!(SEMI_BOUND, 6);
    assert_eq!(measure_bound(8), 7);
    assert_eq!(measure_bound(20), 19);
    assert_eq!(measure_bound(1), 1);
}
