//! Chord diagrams over a ring of integer endpoint positions.
//!
//! Positions `0..universe` are laid out clockwise. Deleting chords frees
//! their positions but never renumbers the rest, so every subinstance lives
//! in the coordinate system of the instance it came from.

use alloc::vec::Vec;
use core::fmt;

pub type VertexId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryError {
    DegenerateChord { id: VertexId },
    PositionOutOfRange { id: VertexId, pos: u32 },
    SharedEndpoint { pos: u32 },
    DuplicateId { id: VertexId },
    OverlappingArcs,
    TooFewEndpoints { found: u32, needed: u32 },
    EmptyDiagram,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::DegenerateChord { id } => write!(f, "chord {id} has equal endpoints"),
            GeometryError::PositionOutOfRange { id, pos } => {
                write!(f, "chord {id} uses position {pos} outside the universe")
            }
            GeometryError::SharedEndpoint { pos } => write!(f, "position {pos} is used twice"),
            GeometryError::DuplicateId { id } => write!(f, "vertex id {id} is used twice"),
            GeometryError::OverlappingArcs => f.write_str("arcs overlap"),
            GeometryError::TooFewEndpoints { found, needed } => {
                write!(f, "arc holds {found} live endpoints, need at least {needed}")
            }
            GeometryError::EmptyDiagram => f.write_str("diagram has no chords"),
        }
    }
}

/// A chord with its vertex id. Endpoints are stored with `p < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Chord {
    pub id: VertexId,
    pub p: u32,
    pub q: u32,
}

impl Chord {
    pub fn new(id: VertexId, a: u32, b: u32) -> Result<Chord, GeometryError> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Ok(Chord { id, p: a, q: b }),
            core::cmp::Ordering::Greater => Ok(Chord { id, p: b, q: a }),
            core::cmp::Ordering::Equal => Err(GeometryError::DegenerateChord { id }),
        }
    }

    #[inline]
    pub fn endpoints(&self) -> [u32; 2] {
        [self.p, self.q]
    }

    #[inline]
    fn strictly_inside(&self, pos: u32) -> bool {
        self.p < pos && pos < self.q
    }

    /// Crossing test for chords with four distinct endpoints: exactly one
    /// endpoint of `other` lies strictly between the endpoints of `self`.
    #[inline]
    pub fn crosses(&self, other: &Chord) -> bool {
        debug_assert!(
            self.p != other.p && self.p != other.q && self.q != other.p && self.q != other.q,
            "chords {} and {} share an endpoint",
            self.id,
            other.id
        );
        self.strictly_inside(other.p) != self.strictly_inside(other.q)
    }

    /// [`Chord::crosses`] with the shared-endpoint precondition checked.
    pub fn checked_crosses(&self, other: &Chord) -> Result<bool, GeometryError> {
        for a in self.endpoints() {
            if other.endpoints().contains(&a) {
                return Err(GeometryError::SharedEndpoint { pos: a });
            }
        }
        Ok(self.crosses(other))
    }
}

/// Live chords over a fixed universe of positions, sorted by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordDiagram {
    universe: u32,
    chords: Vec<Chord>,
}

impl ChordDiagram {
    pub fn new(universe: u32, mut chords: Vec<Chord>) -> Result<ChordDiagram, GeometryError> {
        chords.sort_unstable_by_key(|c| c.id);
        for pair in chords.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(GeometryError::DuplicateId { id: pair[0].id });
            }
        }
        let mut used = alloc::vec![false; universe as usize];
        for c in &chords {
            if c.p == c.q {
                return Err(GeometryError::DegenerateChord { id: c.id });
            }
            for pos in c.endpoints() {
                if pos >= universe {
                    return Err(GeometryError::PositionOutOfRange { id: c.id, pos });
                }
                if core::mem::replace(&mut used[pos as usize], true) {
                    return Err(GeometryError::SharedEndpoint { pos });
                }
            }
        }
        Ok(ChordDiagram { universe, chords })
    }

    pub fn empty(universe: u32) -> ChordDiagram {
        ChordDiagram { universe, chords: Vec::new() }
    }

    /// Keeps the chords for which `keep` holds. The sorted-by-id order is
    /// preserved, so no revalidation is needed.
    pub(crate) fn filtered(&self, mut keep: impl FnMut(usize, &Chord) -> bool) -> ChordDiagram {
        let chords = self
            .chords
            .iter()
            .enumerate()
            .filter(|(i, c)| keep(*i, c))
            .map(|(_, c)| *c)
            .collect();
        ChordDiagram { universe: self.universe, chords }
    }

    #[inline]
    pub fn universe(&self) -> u32 {
        self.universe
    }

    #[inline]
    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.chords.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    pub fn index_of(&self, id: VertexId) -> Option<usize> {
        self.chords.binary_search_by_key(&id, |c| c.id).ok()
    }

    pub fn chord(&self, id: VertexId) -> Option<&Chord> {
        self.index_of(id).map(|i| &self.chords[i])
    }

    pub fn contains_id(&self, id: VertexId) -> bool {
        self.index_of(id).is_some()
    }

    /// Live endpoint positions in ascending order.
    pub fn live_positions(&self) -> Vec<u32> {
        let mut pos: Vec<u32> = self.chords.iter().flat_map(|c| c.endpoints()).collect();
        pos.sort_unstable();
        pos
    }

    /// Number of live endpoints inside `arc`.
    pub fn endpoint_count(&self, arc: CircArc) -> u32 {
        self.chords
            .iter()
            .flat_map(|c| c.endpoints())
            .filter(|&pos| arc.contains(pos, self.universe))
            .count() as u32
    }

    /// Ids of chords with one endpoint in `a` and the other in `b`, ascending.
    pub fn chords_between(&self, a: CircArc, b: CircArc) -> Result<Vec<VertexId>, GeometryError> {
        if a.overlaps(b, self.universe) {
            return Err(GeometryError::OverlappingArcs);
        }
        let u = self.universe;
        Ok(self
            .chords
            .iter()
            .filter(|c| {
                (a.contains(c.p, u) && b.contains(c.q, u)) || (a.contains(c.q, u) && b.contains(c.p, u))
            })
            .map(|c| c.id)
            .collect())
    }
}

/// Positions `start, start+1, …, start+len-1` modulo the universe. A zero
/// length arc is empty but keeps its anchor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircArc {
    pub start: u32,
    pub len: u32,
}

impl CircArc {
    pub fn new(start: u32, len: u32) -> CircArc {
        CircArc { start, len }
    }

    #[inline]
    fn offset(self, pos: u32, universe: u32) -> u32 {
        (pos + universe - self.start) % universe
    }

    #[inline]
    pub fn contains(self, pos: u32, universe: u32) -> bool {
        self.len > 0 && self.offset(pos, universe) < self.len
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn overlaps(self, other: CircArc, universe: u32) -> bool {
        if self.is_empty() || other.is_empty() {
            return false;
        }
        self.contains(other.start, universe) || other.contains(self.start, universe)
    }

    /// Every position of `other` is a position of `self`.
    pub fn contains_arc(self, other: CircArc, universe: u32) -> bool {
        if other.is_empty() {
            return true;
        }
        if self.len >= universe {
            return true;
        }
        self.contains(other.start, universe) && self.offset(other.start, universe) + other.len <= self.len
    }

    pub fn positions(self, universe: u32) -> impl Iterator<Item = u32> {
        (0..self.len).map(move |k| (self.start + k) % universe)
    }

    pub fn end(self, universe: u32) -> u32 {
        (self.start + self.len) % universe
    }
}

/// Which end of an arc a split should favour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcEnd {
    /// The clockwise-first piece.
    Start,
    /// The clockwise-last piece.
    End,
}

/// Splits `arc` into its clockwise-first and clockwise-second pieces. The
/// piece adjacent to `anchor` receives `ceil(x/2)` of the `x` live endpoints,
/// the other `floor(x/2)`; the cut is the first boundary after the last
/// endpoint of the first piece.
pub fn split_arc(
    diagram: &ChordDiagram,
    arc: CircArc,
    anchor: ArcEnd,
) -> Result<(CircArc, CircArc), GeometryError> {
    let u = diagram.universe();
    let mut offsets: Vec<u32> = diagram
        .chords()
        .iter()
        .flat_map(|c| c.endpoints())
        .filter(|&pos| arc.contains(pos, u))
        .map(|pos| arc.offset(pos, u))
        .collect();
    let x = offsets.len() as u32;
    if x < 2 {
        return Err(GeometryError::TooFewEndpoints { found: x, needed: 2 });
    }
    offsets.sort_unstable();
    let first_count = match anchor {
        ArcEnd::Start => x.div_ceil(2),
        ArcEnd::End => x / 2,
    };
    let first_len = offsets[first_count as usize - 1] + 1;
    Ok((
        CircArc::new(arc.start, first_len),
        CircArc::new((arc.start + first_len) % u, arc.len - first_len),
    ))
}

/// The four arcs of a circle partition, in clockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    L,
    T,
    R,
    B,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::L, Side::T, Side::R, Side::B];

    #[inline]
    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Side::L => "L",
            Side::T => "T",
            Side::R => "R",
            Side::B => "B",
        };
        f.write_str(s)
    }
}

/// Four cyclically consecutive, possibly empty arcs `L, T, R, B` covering
/// the universe. Stored as the start of `L` plus the four lengths, which
/// keeps empty arcs anchored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CirclePartition {
    universe: u32,
    start: u32,
    lens: [u32; 4],
}

impl CirclePartition {
    pub fn from_lengths(universe: u32, start: u32, lens: [u32; 4]) -> CirclePartition {
        assert_eq!(lens.iter().sum::<u32>(), universe, "arc lengths must cover the universe");
        CirclePartition { universe, start: start % universe.max(1), lens }
    }

    /// Cuts `c0 <= c1 <= c2 <= c3` give `L = [c0,c1)`, `T = [c1,c2)`,
    /// `R = [c2,c3)` and `B = [c3, c0)` wrapping through the end of the ring.
    pub fn from_cuts(universe: u32, cuts: [u32; 4]) -> CirclePartition {
        assert!(cuts.windows(2).all(|w| w[0] <= w[1]) && cuts[3] <= universe);
        let lens = [
            cuts[1] - cuts[0],
            cuts[2] - cuts[1],
            cuts[3] - cuts[2],
            universe - (cuts[3] - cuts[0]),
        ];
        CirclePartition::from_lengths(universe, cuts[0], lens)
    }

    #[inline]
    pub fn universe(&self) -> u32 {
        self.universe
    }

    /// Boundary positions where `L`, `T`, `R` and `B` start.
    pub fn cuts(&self) -> [u32; 4] {
        let mut out = [0; 4];
        let mut at = self.start;
        for (i, len) in self.lens.iter().enumerate() {
            out[i] = at % self.universe.max(1);
            at += len;
        }
        out
    }

    pub fn lengths(&self) -> [u32; 4] {
        self.lens
    }

    pub fn arc(&self, side: Side) -> CircArc {
        let cuts = self.cuts();
        CircArc::new(cuts[side.index()], self.lens[side.index()])
    }

    pub fn side_of(&self, pos: u32) -> Side {
        debug_assert!(pos < self.universe);
        let mut off = (pos + self.universe - self.start) % self.universe;
        for side in Side::ALL {
            if off < self.lens[side.index()] {
                return side;
            }
            off -= self.lens[side.index()];
        }
        unreachable!("partition covers the universe")
    }

    /// Arcs holding the two endpoints, in `L < T < R < B` order.
    pub fn classify(&self, chord: &Chord) -> (Side, Side) {
        let a = self.side_of(chord.p);
        let b = self.side_of(chord.q);
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Relabels one step counterclockwise: the new `L` is the old `T`, and
    /// so on around the ring.
    pub fn rotate(&self) -> CirclePartition {
        let l = self.lens;
        CirclePartition {
            universe: self.universe,
            start: (self.start + l[0]) % self.universe.max(1),
            lens: [l[1], l[2], l[3], l[0]],
        }
    }

    /// Moves the `take` positions of the thin arc `thin` (T or B) that sit
    /// next to `R` into `R`.
    pub fn grow_right_from(&self, thin: Side, take: u32) -> CirclePartition {
        let t = thin.index();
        assert!(matches!(thin, Side::T | Side::B) && take <= self.lens[t]);
        let mut next = *self;
        next.lens[t] -= take;
        next.lens[Side::R.index()] += take;
        next
    }

    /// Moves the `take` positions of the thin arc `thin` (T or B) that sit
    /// next to `L` into `L`.
    pub fn grow_left_from(&self, thin: Side, take: u32) -> CirclePartition {
        let t = thin.index();
        assert!(matches!(thin, Side::T | Side::B) && take <= self.lens[t]);
        let mut next = *self;
        next.lens[t] -= take;
        next.lens[Side::L.index()] += take;
        if thin == Side::B {
            next.start = (self.start + self.universe - take) % self.universe;
        }
        next
    }

    /// `L ∪ T` and `R ∪ B`, leaving `T` and `B` empty.
    pub fn merge_thin(&self) -> CirclePartition {
        self.grow_left_from(Side::T, self.lens[Side::T.index()])
            .grow_right_from(Side::B, self.lens[Side::B.index()])
    }
}

/// Partition whose `L`, `T` and `R` each hold `floor(n/2)` live endpoints
/// counted clockwise from position 0; `B` holds the rest.
pub fn quartile_partition(diagram: &ChordDiagram) -> Result<CirclePartition, GeometryError> {
    if diagram.is_empty() {
        return Err(GeometryError::EmptyDiagram);
    }
    let pos = diagram.live_positions();
    let h = diagram.len() / 2;
    let cut_after = |k: usize| if k == 0 { 0 } else { pos[k - 1] + 1 };
    Ok(CirclePartition::from_cuts(
        diagram.universe(),
        [0, cut_after(h), cut_after(2 * h), cut_after(3 * h)],
    ))
}
