use alloc::vec::Vec;

use super::{eliminate, BranchError, BranchStats, Eliminate, SeparatedInstance, Separation, SEMI_BOUND};
use crate::chords::{quartile_partition, CirclePartition, Side, VertexId};
use crate::instance::Instance;

/// Lazy family of at most six semi-separated instances.
///
/// Builds the quartile partition `P` and its rotation, eliminates either the
/// `L-R` or the `T-B` chords of `P`, and tags each survivor with `P` if its
/// `L-R` chords are gone and with the rotation otherwise (where the old
/// `T-B` chords are the new `L-R` chords).
pub struct SemiSeparate {
    partition: CirclePartition,
    rotated: CirclePartition,
    lr: Vec<VertexId>,
    inner: Eliminate,
    yielded: u32,
}

pub fn semi_separate(inst: &Instance) -> Result<SemiSeparate, BranchError> {
    let partition = quartile_partition(inst.diagram())?;
    let rotated = partition.rotate();
    let d = inst.diagram();
    let lr = d.chords_between(partition.arc(Side::L), partition.arc(Side::R))?;
    let tb = d.chords_between(partition.arc(Side::T), partition.arc(Side::B))?;
    let inner = eliminate(inst.clone(), lr.clone(), tb)?;
    Ok(SemiSeparate { partition, rotated, lr, inner, yielded: 0 })
}

impl SemiSeparate {
    pub fn partition(&self) -> CirclePartition {
        self.partition
    }

    pub fn stats(&self) -> BranchStats {
        let mut s = BranchStats {
            semi_calls: 1,
            semi_max_len: self.yielded,
            semi_over_bound: u64::from(self.yielded > SEMI_BOUND),
            ..BranchStats::default()
        };
        s.absorb(&self.inner.stats());
        s
    }
}

impl Iterator for SemiSeparate {
    type Item = SeparatedInstance;

    fn next(&mut self) -> Option<SeparatedInstance> {
        let (inst, partial) = self.inner.next()?;
        self.yielded += 1;
        let lost_lr = self.lr.iter().all(|&id| !inst.contains(id));
        let partition = if lost_lr { self.partition } else { self.rotated };
        let out = SeparatedInstance { inst, partition, kind: Separation::Semi, partial };
        debug_assert_eq!(out.first_lr_chord(), None);
        Some(out)
    }
}
