//! Independent exact solver used as ground truth.
//!
//! Plain backtracking with unit propagation. It shares nothing with the
//! branching machinery except the crossing test and the coloring check.

use alloc::vec::Vec;
use core::fmt;

use crate::color::{Color, ColorSet};
use crate::instance::{Instance, PartialColoring};
use crate::solver::{SolveResult, SolveStats};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OracleConfig {
    pub node_budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    BudgetExceeded { nodes: u64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::BudgetExceeded { nodes } => write!(f, "oracle budget exhausted after {nodes} nodes"),
        }
    }
}

pub fn oracle_solve(inst: &Instance) -> SolveResult {
    oracle_solve_with(inst, &OracleConfig::default()).expect("no budget configured")
}

/// Backtracks over vertices in descending degree order (ties by id),
/// propagating singleton lists after every choice.
pub fn oracle_solve_with(inst: &Instance, config: &OracleConfig) -> Result<SolveResult, OracleError> {
    let chords = inst.chords();
    let n = chords.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| u != v && chords[u].crosses(&chords[v])).collect())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(adj[v].len()), chords[v].id));

    let mut search = Search { adj: &adj, order: &order, budget: config.node_budget, nodes: 0 };
    let state = State { lists: inst.lists().to_vec(), colors: alloc::vec![None; n] };
    let found = search.run(state)?;
    let coloring = found.map(|colors| {
        inst.ids()
            .zip(colors)
            .map(|(id, c)| (id, c.expect("complete assignment")))
            .collect::<PartialColoring>()
    });
    let stats = SolveStats { nodes: search.nodes, ..SolveStats::default() };
    Ok(SolveResult::from_coloring(coloring, stats))
}

#[derive(Clone)]
struct State {
    lists: Vec<ColorSet>,
    colors: Vec<Option<Color>>,
}

impl State {
    /// Colors `v` and strikes `c` from its uncolored neighbors. False if a
    /// neighbor runs out of colors.
    fn fix(&mut self, adj: &[Vec<usize>], v: usize, c: Color) -> bool {
        self.colors[v] = Some(c);
        self.lists[v] = ColorSet::single(c);
        for &w in &adj[v] {
            if self.colors[w].is_none() {
                self.lists[w].remove(c);
                if self.lists[w].is_empty() {
                    return false;
                }
            }
        }
        true
    }

    fn propagate(&mut self, adj: &[Vec<usize>]) -> bool {
        loop {
            let mut changed = false;
            for v in 0..self.lists.len() {
                if self.colors[v].is_some() {
                    continue;
                }
                if self.lists[v].is_empty() {
                    return false;
                }
                if let Some(c) = self.lists[v].as_single() {
                    if !self.fix(adj, v, c) {
                        return false;
                    }
                    changed = true;
                }
            }
            if !changed {
                return true;
            }
        }
    }
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    order: &'a [usize],
    budget: Option<u64>,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, mut state: State) -> Result<Option<Vec<Option<Color>>>, OracleError> {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return Err(OracleError::BudgetExceeded { nodes: self.nodes });
        }
        if !state.propagate(self.adj) {
            return Ok(None);
        }
        let Some(&v) = self.order.iter().find(|&&v| state.colors[v].is_none()) else {
            return Ok(Some(state.colors));
        };
        for c in state.lists[v].iter() {
            let mut child = state.clone();
            if child.fix(self.adj, v, c) {
                if let Some(done) = self.run(child)? {
                    return Ok(Some(done));
                }
            }
        }
        Ok(None)
    }
}
