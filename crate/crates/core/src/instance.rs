//! List-coloring instances on a chord diagram and the singleton reduction.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chords::{Chord, ChordDiagram, GeometryError, VertexId};
use crate::color::{Color, ColorSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceError {
    Geometry(GeometryError),
    EmptyList { id: VertexId },
    ListCountMismatch { chords: usize, lists: usize },
    UnknownVertex { id: VertexId },
    ColorNotInList { id: VertexId, color: Color },
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceError::Geometry(e) => e.fmt(f),
            InstanceError::EmptyList { id } => write!(f, "vertex {id} has an empty color list"),
            InstanceError::ListCountMismatch { chords, lists } => {
                write!(f, "{chords} chords but {lists} color lists")
            }
            InstanceError::UnknownVertex { id } => write!(f, "vertex {id} is not in the instance"),
            InstanceError::ColorNotInList { id, color } => {
                write!(f, "{color} is not in the list of vertex {id}")
            }
        }
    }
}

impl From<GeometryError> for InstanceError {
    fn from(e: GeometryError) -> Self {
        InstanceError::Geometry(e)
    }
}

/// Colors fixed for vertices that are no longer part of an instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialColoring(BTreeMap<VertexId, Color>);

impl PartialColoring {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `id ↦ color`. Re-recording a vertex must agree with the
    /// existing color.
    pub fn set(&mut self, id: VertexId, color: Color) {
        if let Some(prev) = self.0.insert(id, color) {
            assert_eq!(prev, color, "conflicting colors for vertex {id}");
        }
    }

    pub fn get(&self, id: VertexId) -> Option<Color> {
        self.0.get(&id).copied()
    }

    pub fn contains(&self, id: VertexId) -> bool {
        self.0.contains_key(&id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entries in ascending vertex id order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, Color)> + '_ {
        self.0.iter().map(|(&id, &c)| (id, c))
    }

    /// Union of two colorings. Domains are disjoint by construction
    /// throughout the solver; an overlap with a different color panics.
    pub fn merge(&mut self, other: &PartialColoring) {
        for (id, c) in other.iter() {
            self.set(id, c);
        }
    }
}

impl FromIterator<(VertexId, Color)> for PartialColoring {
    fn from_iter<I: IntoIterator<Item = (VertexId, Color)>>(iter: I) -> Self {
        let mut out = PartialColoring::new();
        for (id, c) in iter {
            out.set(id, c);
        }
        out
    }
}

/// Outcome of exhaustive singleton reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduced {
    /// No singleton lists remain; `partial` holds the forced colors of the
    /// deleted vertices.
    Feasible(Instance, PartialColoring),
    /// Some list ran empty.
    Infeasible,
}

impl Reduced {
    pub fn into_option(self) -> Option<(Instance, PartialColoring)> {
        match self {
            Reduced::Feasible(i, p) => Some((i, p)),
            Reduced::Infeasible => None,
        }
    }
}

/// A chord diagram plus a non-empty color list per chord. Adjacency is
/// crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    diagram: ChordDiagram,
    // aligned with diagram.chords()
    lists: Vec<ColorSet>,
}

impl Instance {
    pub fn new(diagram: ChordDiagram, lists: Vec<ColorSet>) -> Result<Instance, InstanceError> {
        if diagram.len() != lists.len() {
            return Err(InstanceError::ListCountMismatch { chords: diagram.len(), lists: lists.len() });
        }
        if let Some((c, _)) = diagram.chords().iter().zip(&lists).find(|(_, l)| l.is_empty()) {
            return Err(InstanceError::EmptyList { id: c.id });
        }
        Ok(Instance { diagram, lists })
    }

    /// Builds an instance from `(chord, list)` pairs in any order.
    pub fn from_chords(
        universe: u32,
        mut entries: Vec<(Chord, ColorSet)>,
    ) -> Result<Instance, InstanceError> {
        entries.sort_unstable_by_key(|(c, _)| c.id);
        let lists = entries.iter().map(|(_, l)| *l).collect();
        let diagram = ChordDiagram::new(universe, entries.into_iter().map(|(c, _)| c).collect())?;
        Instance::new(diagram, lists)
    }

    pub fn empty(universe: u32) -> Instance {
        Instance { diagram: ChordDiagram::empty(universe), lists: Vec::new() }
    }

    #[inline]
    pub fn diagram(&self) -> &ChordDiagram {
        &self.diagram
    }

    #[inline]
    pub fn universe(&self) -> u32 {
        self.diagram.universe()
    }

    /// Number of vertices.
    #[inline]
    pub fn len(&self) -> usize {
        self.lists.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    #[inline]
    pub fn chords(&self) -> &[Chord] {
        self.diagram.chords()
    }

    #[inline]
    pub fn lists(&self) -> &[ColorSet] {
        &self.lists
    }

    pub fn list(&self, id: VertexId) -> Option<ColorSet> {
        self.diagram.index_of(id).map(|i| self.lists[i])
    }

    pub fn contains(&self, id: VertexId) -> bool {
        self.diagram.contains_id(id)
    }

    /// `(chord, list)` pairs in ascending vertex id order.
    pub fn entries(&self) -> impl Iterator<Item = (&Chord, ColorSet)> + '_ {
        self.diagram.chords().iter().zip(self.lists.iter().copied())
    }

    pub fn ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.diagram.chords().iter().map(|c| c.id)
    }

    /// Applies the singleton rule until no list has exactly one color:
    /// a vertex with list `{c}` is deleted, colored `c`, and `c` is removed
    /// from every vertex whose chord crosses it. Singletons are processed
    /// first-in first-out, seeded in ascending id order.
    pub fn reduce(&self) -> Reduced {
        let n = self.len();
        let chords = self.diagram.chords();
        let mut lists = self.lists.clone();
        let mut alive = vec![true; n];
        let mut queued = vec![false; n];
        let mut queue = VecDeque::new();
        let mut partial = PartialColoring::new();

        for (i, l) in lists.iter().enumerate() {
            if l.is_empty() {
                return Reduced::Infeasible;
            }
            if l.len() == 1 {
                queued[i] = true;
                queue.push_back(i);
            }
        }
        if queue.is_empty() {
            return Reduced::Feasible(self.clone(), partial);
        }

        while let Some(v) = queue.pop_front() {
            let color = lists[v].as_single().expect("queued vertices are singletons");
            alive[v] = false;
            partial.set(chords[v].id, color);
            for w in 0..n {
                if !alive[w] || !chords[v].crosses(&chords[w]) {
                    continue;
                }
                if lists[w].remove(color) {
                    match lists[w].len() {
                        0 => return Reduced::Infeasible,
                        1 if !queued[w] => {
                            queued[w] = true;
                            queue.push_back(w);
                        }
                        _ => {}
                    }
                }
            }
        }

        let diagram = self.diagram.filtered(|i, _| alive[i]);
        let lists = lists.into_iter().zip(&alive).filter(|(_, &a)| a).map(|(l, _)| l).collect();
        Reduced::Feasible(Instance { diagram, lists }, partial)
    }

    /// Replaces the lists of `ids` by `{color}`.
    pub fn assign(&self, ids: &[VertexId], color: Color) -> Result<Instance, InstanceError> {
        let mut next = self.clone();
        for &id in ids {
            let i = self.diagram.index_of(id).ok_or(InstanceError::UnknownVertex { id })?;
            if !next.lists[i].contains(color) {
                return Err(InstanceError::ColorNotInList { id, color });
            }
            next.lists[i] = ColorSet::single(color);
        }
        Ok(next)
    }

    /// Subinstance on the chords satisfying `keep`, in the same coordinates.
    pub fn restrict(&self, mut keep: impl FnMut(&Chord) -> bool) -> Instance {
        let mut kept = Vec::with_capacity(self.len());
        let diagram = self.diagram.filtered(|i, c| {
            let k = keep(c);
            if k {
                kept.push(self.lists[i]);
            }
            k
        });
        Instance { diagram, lists: kept }
    }

    /// Whether `self` is obtained from `parent` by deleting vertices and
    /// shrinking lists, in the same coordinate system.
    pub fn is_subinstance_of(&self, parent: &Instance) -> bool {
        self.universe() == parent.universe()
            && self.entries().all(|(c, l)| {
                parent
                    .diagram
                    .index_of(c.id)
                    .is_some_and(|i| parent.chords()[i] == *c && l.intersect(parent.lists[i]) == l)
            })
    }
}

/// Why a coloring is not a valid list coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringViolation {
    Missing { id: VertexId },
    NotInList { id: VertexId, color: Color },
    Conflict { a: VertexId, b: VertexId, color: Color },
}

impl fmt::Display for ColoringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringViolation::Missing { id } => write!(f, "vertex {id} is not colored"),
            ColoringViolation::NotInList { id, color } => {
                write!(f, "vertex {id} colored {color}, which is not in its list")
            }
            ColoringViolation::Conflict { a, b, color } => {
                write!(f, "crossing vertices {a} and {b} are both {color}")
            }
        }
    }
}

/// Full pairwise check of `coloring` against `original`.
pub fn check_coloring(original: &Instance, coloring: &PartialColoring) -> Result<(), ColoringViolation> {
    let mut colors = Vec::with_capacity(original.len());
    for (c, list) in original.entries() {
        let color = coloring.get(c.id).ok_or(ColoringViolation::Missing { id: c.id })?;
        if !list.contains(color) {
            return Err(ColoringViolation::NotInList { id: c.id, color });
        }
        colors.push(color);
    }
    let chords = original.chords();
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            if colors[i] == colors[j] && chords[i].crosses(&chords[j]) {
                return Err(ColoringViolation::Conflict { a: chords[i].id, b: chords[j].id, color: colors[i] });
            }
        }
    }
    Ok(())
}

pub fn validate_coloring(original: &Instance, coloring: &PartialColoring) -> bool {
    check_coloring(original, coloring).is_ok()
}
