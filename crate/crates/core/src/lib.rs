//! List 3-coloring of circle graphs, decided on the chord diagram.
//!
//! An [`Instance`] is a set of chords over a fixed ring of endpoint positions
//! together with a color list per chord. Two vertices are adjacent exactly
//! when their chords cross. [`solve`] decides whether every chord can take a
//! color from its list so that crossing chords differ, and returns such a
//! coloring when one exists.
//!
//! The solver recurses on balanced circle partitions: each level enumerates
//! a polynomial family of *fully separated* subinstances (no chords between
//! the left and right arcs, nothing on the top and bottom arcs), splits each
//! of them into two independent halves of at most `ceil(3n/4)` chords, and
//! recurses. This yields `n^O(log n)` time overall; the families are produced
//! lazily so memory stays polynomial.
//!
//! The crate is `no_std` and only needs `alloc`. Parsing, generators and the
//! command-line front-end live in the `chordcolor` crate.
//!
//! [`oracle`] is an independent backtracking solver used as ground truth in
//! tests, and [`bookembed`] decides 3-page book embeddings of graphs with a
//! fixed vertex order by reduction to this problem.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bookembed;
pub mod branching;
pub mod chords;
mod color;
pub mod instance;
pub mod oracle;
pub mod solver;
#[cfg(test)]
mod testkit;

pub use color::{Color, ColorSet};
pub use chords::{Chord, ChordDiagram, CircArc, CirclePartition, Side, VertexId};
pub use instance::{Instance, PartialColoring, Reduced};
pub use solver::{solve, solve_with, SolveConfig, SolveError, SolveResult, SolveStats, Verdict};

