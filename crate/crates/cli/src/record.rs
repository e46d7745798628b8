//! Newline-delimited JSON records.

use std::collections::BTreeMap;

use chordcolor_core::{PartialColoring, SolveResult};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveRecord {
    pub solver: &'static str,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub density: Option<String>,
    pub verdict: String,
    pub coloring: Option<BTreeMap<u32, char>>,
    pub nodes: u64,
    pub brute_force_calls: u64,
    pub max_depth: u32,
    pub families: u64,
    pub family_members: u64,
    pub max_family_members: u64,
    pub split_violations: u64,
    pub eliminate_max_len: u32,
    pub semi_max_len: u32,
    pub measure_violations: u64,
    pub wall_ms: f64,
}

pub fn coloring_map(col: &PartialColoring) -> BTreeMap<u32, char> {
    col.iter().map(|(id, c)| (id, c.letter())).collect()
}

impl SolveRecord {
    pub fn new(solver: &'static str, n: usize, result: &SolveResult, wall_ms: f64) -> SolveRecord {
        let s = &result.stats;
        SolveRecord {
            solver,
            n,
            seed: None,
            density: None,
            verdict: result.verdict.to_string(),
            coloring: result.coloring.as_ref().map(coloring_map),
            nodes: s.nodes,
            brute_force_calls: s.brute_force_calls,
            max_depth: s.max_depth,
            families: s.families,
            family_members: s.family_members,
            max_family_members: s.max_family_members,
            split_violations: s.split_violations,
            eliminate_max_len: s.branch.eliminate_max_len,
            semi_max_len: s.branch.semi_max_len,
            measure_violations: s.branch.measure_violations,
            wall_ms,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}
