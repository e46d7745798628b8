//! Families of separated subinstances.
//!
//! [`separated_family`] turns an instance into a lazy stream of fully
//! separated instances: the input is colorable iff some member is, and every
//! member splits ([`split_full`]) into two independent halves of at most
//! `ceil(3n/4)` chords each. It chains two stages:
//!
//! 1. [`semi_separate`] fixes a balanced partition and removes either all
//!    `L-R` chords or all `T-B` chords with [`eliminate`], rotating the
//!    partition in the second case.
//! 2. [`full_separate`] repeatedly halves the heavier of `T` and `B`, removes
//!    one of the two families of chords that would straddle the halves, and
//!    hands the freed half to `L` or `R`, until `T` and `B` are empty.
//!
//! All stages are iterators and keep at most one pending branch per level,
//! so memory stays polynomial even though the families are large.

mod eliminate;
mod full;
mod semi;

use core::fmt;

pub use eliminate::{eliminate, Eliminate};
pub use full::{full_separate, FullSeparate, MeasureStep};
pub use semi::{semi_separate, SemiSeparate};

use crate::chords::{CirclePartition, GeometryError, Side, VertexId};
use crate::instance::{Instance, PartialColoring};

/// Largest family [`eliminate`] can produce: three colors on each side.
pub const ELIMINATE_BOUND: u32 = 6;
/// Largest family [`semi_separate`] can produce.
pub const SEMI_BOUND: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchError {
    Geometry(GeometryError),
    UnknownChord { id: VertexId },
    SharedChord { id: VertexId },
    NotCrossing { x: VertexId, y: VertexId },
    NotSemiSeparated { id: VertexId },
    NotFullySeparated,
    EmptyInstance,
}

impl fmt::Display for BranchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchError::Geometry(e) => e.fmt(f),
            BranchError::UnknownChord { id } => write!(f, "chord {id} is not in the instance"),
            BranchError::SharedChord { id } => write!(f, "chord {id} is on both sides"),
            BranchError::NotCrossing { x, y } => write!(f, "chords {x} and {y} do not cross"),
            BranchError::NotSemiSeparated { id } => write!(f, "chord {id} runs between L and R"),
            BranchError::NotFullySeparated => f.write_str("T or B still holds endpoints"),
            BranchError::EmptyInstance => f.write_str("instance has no chords"),
        }
    }
}

impl From<GeometryError> for BranchError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::EmptyDiagram => BranchError::EmptyInstance,
            e => BranchError::Geometry(e),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separation {
    /// No `L-R` chords.
    Semi,
    /// No `L-R` chords and no endpoints on `T` or `B`.
    Full,
}

/// A subinstance paired with a circle partition, plus the colors fixed on
/// the way from the family's input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatedInstance {
    pub inst: Instance,
    pub partition: CirclePartition,
    pub kind: Separation,
    pub partial: PartialColoring,
}

impl SeparatedInstance {
    /// Live endpoints on `T ∪ B`; drives the [`full_separate`] recursion.
    pub fn thin_endpoints(&self) -> u32 {
        let d = self.inst.diagram();
        d.endpoint_count(self.partition.arc(Side::T)) + d.endpoint_count(self.partition.arc(Side::B))
    }

    /// First `L-R` chord, if any.
    pub fn first_lr_chord(&self) -> Option<VertexId> {
        self.inst
            .chords()
            .iter()
            .find(|c| self.partition.classify(c) == (Side::L, Side::R))
            .map(|c| c.id)
    }
}

/// Counters accumulated by the branching streams.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BranchStats {
    pub eliminate_calls: u64,
    pub eliminate_max_len: u32,
    pub eliminate_over_bound: u64,
    pub semi_calls: u64,
    pub semi_max_len: u32,
    pub semi_over_bound: u64,
    /// Branches dropped because reduction emptied a list.
    pub pruned: u64,
    /// Parent-to-child steps of the separation recursion.
    pub measure_steps: u64,
    /// Steps where the measure failed `c' <= max(c - 1, ceil(3c/4))`.
    pub measure_violations: u64,
    pub full_max_depth: u32,
    pub full_yielded: u64,
}

impl BranchStats {
    pub fn absorb(&mut self, other: &BranchStats) {
        self.eliminate_calls += other.eliminate_calls;
        self.eliminate_max_len = self.eliminate_max_len.max(other.eliminate_max_len);
        self.eliminate_over_bound += other.eliminate_over_bound;
        self.semi_calls += other.semi_calls;
        self.semi_max_len = self.semi_max_len.max(other.semi_max_len);
        self.semi_over_bound += other.semi_over_bound;
        self.pruned += other.pruned;
        self.measure_steps += other.measure_steps;
        self.measure_violations += other.measure_violations;
        self.full_max_depth = self.full_max_depth.max(other.full_max_depth);
        self.full_yielded += other.full_yielded;
    }
}

/// Allowed measure after one separation step from measure `c`.
#[inline]
pub fn measure_bound(c: u32) -> u32 {
    c.saturating_sub(1).max((3 * c).div_ceil(4))
}

/// Fully separated instances for `inst`, lazily. Every member's `L` and `R`
/// arcs hold at least `floor(n/2)` endpoints of the input's chords.
pub struct SeparatedFamily {
    semi: SemiSeparate,
    current: Option<FullSeparate>,
    finished: BranchStats,
}

pub fn separated_family(inst: &Instance) -> Result<SeparatedFamily, BranchError> {
    Ok(SeparatedFamily { semi: semi_separate(inst)?, current: None, finished: BranchStats::default() })
}

impl SeparatedFamily {
    pub fn stats(&self) -> BranchStats {
        let mut s = self.finished;
        s.absorb(&self.semi.stats());
        if let Some(cur) = &self.current {
            s.absorb(&cur.stats());
        }
        s
    }
}

impl Iterator for SeparatedFamily {
    type Item = SeparatedInstance;

    fn next(&mut self) -> Option<SeparatedInstance> {
        loop {
            if let Some(cur) = &mut self.current {
                if let Some(full) = cur.next() {
                    return Some(full);
                }
                self.finished.absorb(&cur.stats());
                self.current = None;
            }
            let semi = self.semi.next()?;
            self.current = Some(full_separate(semi).expect("semi_separate yields semi-separated instances"));
        }
    }
}

/// The `L-L` and `R-R` halves of a fully separated instance.
pub fn split_full(full: &SeparatedInstance) -> Result<(Instance, Instance), BranchError> {
    if full.kind != Separation::Full || full.thin_endpoints() != 0 {
        return Err(BranchError::NotFullySeparated);
    }
    if let Some(id) = full.first_lr_chord() {
        return Err(BranchError::NotSemiSeparated { id });
    }
    let p = &full.partition;
    let left = full.inst.restrict(|c| p.classify(c) == (Side::L, Side::L));
    let right = full.inst.restrict(|c| p.classify(c) == (Side::R, Side::R));
    debug_assert_eq!(left.len() + right.len(), full.inst.len());
    Ok((left, right))
}

#[cfg(test)]
mod tests;
