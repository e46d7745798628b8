//! Three-page book embeddings of graphs with a fixed vertex order.
//!
//! With the order fixed, two edges `ab` and `cd` conflict when they
//! interleave (`a < c < b < d`). Placing every edge as a chord on a circle
//! whose boundary lists the vertices in order turns conflicts into
//! crossings, so a 3-page embedding is exactly a 3-coloring of the chords
//! with full lists.

use alloc::vec::Vec;
use core::fmt;

use crate::chords::{Chord, VertexId};
use crate::color::{Color, ColorSet};
use crate::instance::Instance;
use crate::solver::{solve_with, SolveConfig, SolveError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { vertex: u32 },
    VertexOutOfRange { vertex: u32 },
    DuplicateEdge { u: u32, v: u32 },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} is out of range"),
            GraphError::DuplicateEdge { u, v } => write!(f, "edge {u}-{v} appears twice"),
        }
    }
}

/// Vertices `1..=vertex_count` in their natural order, plus a simple edge
/// list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGraph {
    vertex_count: u32,
    edges: Vec<(u32, u32)>,
}

impl OrderedGraph {
    pub fn new(vertex_count: u32, edges: Vec<(u32, u32)>) -> Result<OrderedGraph, GraphError> {
        let mut seen: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            for x in [u, v] {
                if x == 0 || x > vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: x });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            seen.push((u.min(v), u.max(v)));
        }
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        Ok(OrderedGraph { vertex_count, edges })
    }

    /// `K_n` on `1..=n`, edges in lexicographic order.
    pub fn complete(n: u32) -> OrderedGraph {
        let edges = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        OrderedGraph { vertex_count: n, edges }
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }
}

/// Edges `ab` and `cd` interleave as `a < c < b < d` (in either role).
pub fn interleave(e: (u32, u32), f: (u32, u32)) -> bool {
    let (a, b) = (e.0.min(e.1), e.0.max(e.1));
    let (c, d) = (f.0.min(f.1), f.0.max(f.1));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Page (1, 2 or 3) per edge index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PageAssignment(pub Vec<u8>);

impl PageAssignment {
    pub fn pages(&self) -> &[u8] {
        &self.0
    }
}

/// One chord per edge, chord id = edge index, over `2m` positions.
///
/// Each vertex owns a block of consecutive positions, blocks in vertex
/// order. Inside a block the edges to earlier vertices come first, then the
/// edges to later vertices, each group sorted by the other endpoint in
/// descending order. That nesting keeps edges at a common vertex from
/// crossing, while edges on four distinct vertices cross exactly when they
/// interleave. The returned vector maps edge index to chord.
pub fn to_circle_instance(g: &OrderedGraph) -> (Instance, Vec<Chord>) {
    let m = g.edges.len();
    let mut slots: Vec<Vec<(bool, u32, usize)>> = alloc::vec![Vec::new(); g.vertex_count as usize + 1];
    for (k, &(u, v)) in g.edges.iter().enumerate() {
        // (is_forward, other endpoint, edge)
        slots[u as usize].push((v > u, v, k));
        slots[v as usize].push((u > v, u, k));
    }
    let mut ends: Vec<[u32; 2]> = alloc::vec![[0, 0]; m];
    let mut filled = alloc::vec![0usize; m];
    let mut pos = 0u32;
    for block in slots.iter_mut().skip(1) {
        block.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        for &(_, _, k) in block.iter() {
            ends[k][filled[k]] = pos;
            filled[k] += 1;
            pos += 1;
        }
    }
    let chords: Vec<Chord> = ends
        .iter()
        .enumerate()
        .map(|(k, e)| Chord::new(k as VertexId, e[0], e[1]).expect("distinct slots"))
        .collect();
    let entries = chords.iter().map(|&c| (c, ColorSet::FULL)).collect();
    let inst = Instance::from_chords(2 * m as u32, entries).expect("slots are distinct");
    debug_assert!(chords.iter().enumerate().all(|(i, a)| {
        chords[i + 1..].iter().all(|b| a.crosses(b) == interleave(g.edges[a.id as usize], g.edges[b.id as usize]))
    }));
    (inst, chords)
}

/// A 3-page embedding under the given order, if one exists.
pub fn embed3(g: &OrderedGraph) -> Option<PageAssignment> {
    embed3_with(g, &SolveConfig::default()).expect("no budget configured")
}

pub fn embed3_with(g: &OrderedGraph, config: &SolveConfig) -> Result<Option<PageAssignment>, SolveError> {
    let (inst, _) = to_circle_instance(g);
    let result = solve_with(&inst, config)?;
    Ok(result.coloring.map(|col| {
        let pages = (0..g.edges.len() as VertexId)
            .map(|k| col.get(k).map_or(Color::Red, |c| c).page())
            .collect();
        PageAssignment(pages)
    }))
}

/// Direct check that no two edges on the same page interleave.
pub fn validate_pages(g: &OrderedGraph, pages: &PageAssignment) -> bool {
    let p = pages.pages();
    if p.len() != g.edges.len() || p.iter().any(|&x| !(1..=3).contains(&x)) {
        return false;
    }
    for i in 0..g.edges.len() {
        for j in i + 1..g.edges.len() {
            if p[i] == p[j] && interleave(g.edges[i], g.edges[j]) {
                return false;
            }
        }
    }
    true
}
