//! Seeded random instances.

use std::fmt;
use std::str::FromStr;

use chordcolor_core::chords::Chord;
use chordcolor_core::{Color, ColorSet, Instance};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// How color lists are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Density {
    /// Every list is `{R, G, B}`.
    Full,
    /// Each list starts full and, with probability 1/2, loses one color
    /// chosen uniformly.
    DropOneP,
    /// Each list is a uniform non-empty subset of `{R, G, B}`.
    Mixed,
}

impl Density {
    pub const ALL: [Density; 3] = [Density::Full, Density::DropOneP, Density::Mixed];

    pub fn name(self) -> &'static str {
        match self {
            Density::Full => "full",
            Density::DropOneP => "drop-one-p",
            Density::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Density {
    type Err = String;

    fn from_str(s: &str) -> Result<Density, String> {
        Density::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| format!("unknown density `{s}` (expected full, drop-one-p or mixed)"))
    }
}

/// A uniform random perfect matching on `2n` positions; chord `i` is the
/// `i`-th pair of a shuffled position list. The same `(n, seed, density)`
/// always gives the same instance.
pub fn gen_random(n: usize, seed: u64, density: Density) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let universe = 2 * n as u32;
    let mut positions: Vec<u32> = (0..universe).collect();
    positions.shuffle(&mut rng);
    let entries = positions
        .chunks_exact(2)
        .enumerate()
        .map(|(i, pair)| {
            let chord = Chord::new(i as u32, pair[0], pair[1]).expect("shuffled positions are distinct");
            (chord, draw_list(&mut rng, density))
        })
        .collect();
    Instance::from_chords(universe, entries).expect("a perfect matching is a valid diagram")
}

fn draw_list(rng: &mut ChaCha8Rng, density: Density) -> ColorSet {
    match density {
        Density::Full => ColorSet::FULL,
        Density::DropOneP => {
            let mut list = ColorSet::FULL;
            if rng.gen_bool(0.5) {
                list.remove(Color::ALL[rng.gen_range(0..3)]);
            }
            list
        }
        Density::Mixed => ColorSet::from_bits(rng.gen_range(1..=7)).expect("bits within range"),
    }
}

/// Random ordered graph on `1..=n` with each edge present independently
/// with probability `p`, keeping at most `max_edges` of them.
pub fn gen_ordered_graph(
    n: u32,
    p: f64,
    max_edges: usize,
    seed: u64,
) -> chordcolor_core::bookembed::OrderedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(u32, u32)> =
        (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).filter(|_| rng.gen_bool(p)).collect();
    if edges.len() > max_edges {
        edges.shuffle(&mut rng);
        edges.truncate(max_edges);
        edges.sort_unstable();
    }
    chordcolor_core::bookembed::OrderedGraph::new(n, edges).expect("generated edges are simple")
}
