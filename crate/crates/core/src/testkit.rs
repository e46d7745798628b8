//! Shared helpers for unit tests.

use alloc::vec::Vec;

use crate::chords::Chord;
use crate::color::{Color, ColorSet};
use crate::instance::{Instance, PartialColoring};
use proptest::prelude::*;

/// Instance from `(p, q, letters)` triples; ids follow the slice order.
pub fn inst(universe: u32, chords: &[(u32, u32, &str)]) -> Instance {
    let entries = chords
        .iter()
        .enumerate()
        .map(|(i, &(p, q, l))| {
            let list: ColorSet = l.chars().map(|ch| Color::from_letter(ch).unwrap()).collect();
            (Chord::new(i as u32, p, q).unwrap(), list)
        })
        .collect();
    Instance::from_chords(universe, entries).unwrap()
}

/// Random perfect matching on `2n` positions with random non-empty lists,
/// biased toward full lists so that yes and no answers both show up.
pub fn arb_instance(max_n: usize) -> impl Strategy<Value = Instance> {
    (1..=max_n).prop_flat_map(|n| {
        let perm = Just((0..2 * n as u32).collect::<Vec<_>>()).prop_shuffle();
        let lists = proptest::collection::vec(
            prop_oneof![3 => Just(7u8), 2 => 1u8..=7],
            n,
        );
        (perm, lists).prop_map(move |(perm, lists)| {
            let entries = perm
                .chunks(2)
                .zip(lists)
                .enumerate()
                .map(|(i, (w, bits))| {
                    (Chord::new(i as u32, w[0], w[1]).unwrap(), ColorSet::from_bits(bits).unwrap())
                })
                .collect();
            Instance::from_chords(2 * n as u32, entries).unwrap()
        })
    })
}

/// Plain enumeration over the product of the lists in id order, pruning a
/// prefix as soon as two crossing chords share a color.
pub fn enumerate_solve(i: &Instance) -> Option<PartialColoring> {
    fn go(i: &Instance, k: usize, colors: &mut Vec<Color>) -> bool {
        if k == i.len() {
            return true;
        }
        let chords = i.chords();
        for c in i.lists()[k].iter() {
            if (0..k).any(|j| colors[j] == c && chords[j].crosses(&chords[k])) {
                continue;
            }
            colors.push(c);
            if go(i, k + 1, colors) {
                return true;
            }
            colors.pop();
        }
        false
    }
    let mut colors = Vec::new();
    go(i, 0, &mut colors).then(|| i.ids().zip(colors).collect())
}
