use alloc::boxed::Box;
use alloc::vec::Vec;

use super::{eliminate, measure_bound, BranchError, BranchStats, Eliminate, SeparatedInstance, Separation};
use crate::chords::{split_arc, ArcEnd, CircArc, CirclePartition, Side, VertexId};
use crate::instance::PartialColoring;

/// Measure `c` (endpoints on `T ∪ B`) of a node of the separation recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeasureStep {
    pub depth: u32,
    pub c: u32,
}

/// Lazy family of fully separated instances grown from one semi-separated
/// instance. `L` and `R` only ever grow, so every member's `L` and `R`
/// contain the input's.
///
/// Each node looks at the heavier thin arc `X` (ties go to `T`) holding `x`
/// endpoints:
/// - `x = 0`: `T` joins `L` and `B` joins `R`; the node is fully separated.
/// - `x = 1`: the lone endpoint's chord cannot reach both `L` and `R`, so
///   `X` joins `R` when there are no `L-X` chords and `L` otherwise.
/// - `x > 1`: `X` is cut into `X_L` (next to `L`) and `X_R` (next to `R`)
///   with `ceil(x/2)` endpoints on the clockwise-first piece. The `L-X_R` and
///   `X_L-R` chords cross pairwise, so [`eliminate`] removes one family;
///   `X_R` then joins `R` or `X_L` joins `L` accordingly.
///
/// The recursion runs depth first with an explicit stack.
pub struct FullSeparate {
    stack: Vec<Work>,
    finished: BranchStats,
    trace: Option<Vec<MeasureStep>>,
}

enum Work {
    Node { item: SeparatedInstance, depth: u32 },
    Split(Box<SplitFrame>),
}

struct SplitFrame {
    elim: Eliminate,
    partial: PartialColoring,
    partition: CirclePartition,
    thin: Side,
    x_left: CircArc,
    x_right: CircArc,
    // L-X_R chords
    left_family: Vec<VertexId>,
    c: u32,
    depth: u32,
}

pub fn full_separate(semi: SeparatedInstance) -> Result<FullSeparate, BranchError> {
    if semi.kind != Separation::Semi {
        return Err(BranchError::NotFullySeparated);
    }
    if let Some(id) = semi.first_lr_chord() {
        return Err(BranchError::NotSemiSeparated { id });
    }
    Ok(FullSeparate {
        stack: alloc::vec![Work::Node { item: semi, depth: 0 }],
        finished: BranchStats::default(),
        trace: None,
    })
}

impl FullSeparate {
    /// Records the measure of every node in visiting order.
    pub fn with_trace(mut self) -> Self {
        self.trace = Some(Vec::new());
        self
    }

    pub fn trace(&self) -> Option<&[MeasureStep]> {
        self.trace.as_deref()
    }

    pub fn stats(&self) -> BranchStats {
        let mut s = self.finished;
        for w in &self.stack {
            if let Work::Split(frame) = w {
                s.absorb(&frame.elim.stats());
            }
        }
        s
    }

    fn push_child(&mut self, item: SeparatedInstance, parent_c: u32, depth: u32) {
        let c = item.thin_endpoints();
        self.finished.measure_steps += 1;
        if c > measure_bound(parent_c) {
            self.finished.measure_violations += 1;
        }
        if let Some(t) = &mut self.trace {
            t.push(MeasureStep { depth, c });
        }
        debug_assert_eq!(item.first_lr_chord(), None);
        self.stack.push(Work::Node { item, depth });
    }
}

impl Iterator for FullSeparate {
    type Item = SeparatedInstance;

    fn next(&mut self) -> Option<SeparatedInstance> {
        while let Some(work) = self.stack.pop() {
            match work {
                Work::Node { item, depth } => {
                    self.finished.full_max_depth = self.finished.full_max_depth.max(depth);
                    if depth == 0 {
                        if let Some(t) = &mut self.trace {
                            t.push(MeasureStep { depth, c: item.thin_endpoints() });
                        }
                    }
                    let p = item.partition;
                    let d = item.inst.diagram();
                    let t = d.endpoint_count(p.arc(Side::T));
                    let b = d.endpoint_count(p.arc(Side::B));
                    let (thin, x) = if t >= b { (Side::T, t) } else { (Side::B, b) };
                    let c = t + b;
                    let arc = p.arc(thin);

                    if x == 0 {
                        self.finished.full_yielded += 1;
                        return Some(SeparatedInstance {
                            partition: p.merge_thin(),
                            kind: Separation::Full,
                            ..item
                        });
                    }

                    if x == 1 {
                        let touches_left = !d
                            .chords_between(p.arc(Side::L), arc)
                            .expect("partition arcs are disjoint")
                            .is_empty();
                        let partition = if touches_left {
                            p.grow_left_from(thin, arc.len)
                        } else {
                            p.grow_right_from(thin, arc.len)
                        };
                        self.push_child(SeparatedInstance { partition, ..item }, c, depth + 1);
                        continue;
                    }

                    let (first, second) = split_arc(d, arc, ArcEnd::Start).expect("x >= 2");
                    // T runs from L to R clockwise, B from R to L.
                    let (x_left, x_right) = match thin {
                        Side::T => (first, second),
                        _ => (second, first),
                    };
                    let left_family = d.chords_between(p.arc(Side::L), x_right).expect("disjoint arcs");
                    let right_family = d.chords_between(x_left, p.arc(Side::R)).expect("disjoint arcs");
                    let elim = eliminate(item.inst, left_family.clone(), right_family)
                        .expect("L-X_R chords cross X_L-R chords");
                    self.stack.push(Work::Split(Box::new(SplitFrame {
                        elim,
                        partial: item.partial,
                        partition: p,
                        thin,
                        x_left,
                        x_right,
                        left_family,
                        c,
                        depth,
                    })));
                }
                Work::Split(mut frame) => {
                    let Some((inst, fixed)) = frame.elim.next() else {
                        self.finished.absorb(&frame.elim.stats());
                        continue;
                    };
                    let no_left_family = frame.left_family.iter().all(|&id| !inst.contains(id));
                    let partition = if no_left_family {
                        frame.partition.grow_right_from(frame.thin, frame.x_right.len)
                    } else {
                        frame.partition.grow_left_from(frame.thin, frame.x_left.len)
                    };
                    let mut partial = frame.partial.clone();
                    partial.merge(&fixed);
                    let (c, depth) = (frame.c, frame.depth + 1);
                    self.stack.push(Work::Split(frame));
                    let child = SeparatedInstance { inst, partition, kind: Separation::Semi, partial };
                    self.push_child(child, c, depth);
                }
            }
        }
        None
    }
}
