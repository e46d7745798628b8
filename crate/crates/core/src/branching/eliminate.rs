use alloc::vec::Vec;

use super::{BranchError, BranchStats, ELIMINATE_BOUND};
use crate::chords::VertexId;
use crate::color::Color;
use crate::instance::{Instance, PartialColoring, Reduced};

/// Lazy family of subinstances, each missing every chord of `x` or every
/// chord of `y`, such that the input is colorable iff some member is.
///
/// Every chord of `x` crosses every chord of `y`, so in any valid coloring
/// one of the two sides is monochromatic. For each side without an internal
/// crossing and each color allowed on the whole side, the side is fixed to
/// that color and the result reduced. Branches that reduce to an empty list
/// are dropped. If either side is empty the family is just the reduced
/// input.
#[derive(Debug)]
pub struct Eliminate {
    inst: Instance,
    sides: [Vec<VertexId>; 2],
    independent: [bool; 2],
    cursor: Cursor,
    yielded: u32,
    pruned: u32,
}

#[derive(Debug, Clone, Copy)]
enum Cursor {
    Vacuous,
    Colors { side: usize, color: usize },
    Done,
}

pub fn eliminate(inst: Instance, x: Vec<VertexId>, y: Vec<VertexId>) -> Result<Eliminate, BranchError> {
    let d = inst.diagram();
    let lookup = |id: VertexId| d.chord(id).copied().ok_or(BranchError::UnknownChord { id });
    let xs = x.iter().map(|&id| lookup(id)).collect::<Result<Vec<_>, _>>()?;
    let ys = y.iter().map(|&id| lookup(id)).collect::<Result<Vec<_>, _>>()?;
    for a in &xs {
        for b in &ys {
            if a.id == b.id {
                return Err(BranchError::SharedChord { id: a.id });
            }
            if !a.crosses(b) {
                return Err(BranchError::NotCrossing { x: a.id, y: b.id });
            }
        }
    }
    let pairwise_disjoint = |cs: &[crate::chords::Chord]| {
        cs.iter().enumerate().all(|(i, a)| cs[i + 1..].iter().all(|b| !a.crosses(b)))
    };
    let independent = [pairwise_disjoint(&xs), pairwise_disjoint(&ys)];
    let cursor = if x.is_empty() || y.is_empty() {
        Cursor::Vacuous
    } else {
        Cursor::Colors { side: 0, color: 0 }
    };
    Ok(Eliminate { inst, sides: [x, y], independent, cursor, yielded: 0, pruned: 0 })
}

impl Eliminate {
    pub fn stats(&self) -> BranchStats {
        BranchStats {
            eliminate_calls: 1,
            eliminate_max_len: self.yielded,
            eliminate_over_bound: u64::from(self.yielded > ELIMINATE_BOUND),
            pruned: u64::from(self.pruned),
            ..BranchStats::default()
        }
    }

    fn keep(&mut self, r: Reduced) -> Option<(Instance, PartialColoring)> {
        match r {
            Reduced::Feasible(inst, partial) => {
                debug_assert!(
                    self.sides.iter().any(|s| s.iter().all(|&id| !inst.contains(id))),
                    "branch kept chords from both sides"
                );
                self.yielded += 1;
                Some((inst, partial))
            }
            Reduced::Infeasible => {
                self.pruned += 1;
                None
            }
        }
    }
}

impl Iterator for Eliminate {
    type Item = (Instance, PartialColoring);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            match self.cursor {
                Cursor::Done => return None,
                Cursor::Vacuous => {
                    self.cursor = Cursor::Done;
                    let r = self.inst.reduce();
                    return self.keep(r);
                }
                Cursor::Colors { side, color } => {
                    self.cursor = match (side, color) {
                        (1, 2) => Cursor::Done,
                        (_, 2) => Cursor::Colors { side: side + 1, color: 0 },
                        _ => Cursor::Colors { side, color: color + 1 },
                    };
                    if !self.independent[side] {
                        continue;
                    }
                    let c = Color::ALL[color];
                    let ids = &self.sides[side];
                    if !ids.iter().all(|&id| self.inst.list(id).is_some_and(|l| l.contains(c))) {
                        continue;
                    }
                    let fixed = self.inst.assign(ids, c).expect("color checked against every list");
                    let r = fixed.reduce();
                    if let Some(out) = self.keep(r) {
                        return Some(out);
                    }
                }
            }
        }
    }
}
