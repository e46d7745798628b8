//! The recursive solver and its small-instance base case.

use alloc::vec::Vec;
use core::fmt;

use crate::branching::{separated_family, split_full, BranchStats};
use crate::color::Color;
use crate::instance::{Instance, PartialColoring};

/// Below four chords `ceil(3n/4)` no longer shrinks `n`, so the recursion
/// needs a base case at least this large.
pub const MIN_BASE_THRESHOLD: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveConfig {
    /// Instances with at most this many chords are solved by enumeration.
    pub base_threshold: usize,
    /// Maximum number of recursive calls before giving up.
    pub node_budget: Option<u64>,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig { base_threshold: 8, node_budget: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveError {
    BudgetExceeded { nodes: u64 },
    BaseThresholdTooSmall { given: usize },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::BudgetExceeded { nodes } => write!(f, "node budget exhausted after {nodes} nodes"),
            SolveError::BaseThresholdTooSmall { given } => {
                write!(f, "base threshold {given} is below the minimum of {MIN_BASE_THRESHOLD}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Calls of the recursive solver (or search nodes, for the oracle).
    pub nodes: u64,
    pub brute_force_calls: u64,
    /// Deepest recursion level reached; the top-level call is depth 1.
    pub max_depth: u32,
    /// Separated families opened.
    pub families: u64,
    /// Family members consumed across all families.
    pub family_members: u64,
    pub max_family_members: u64,
    /// Splits checked against the `ceil(3n/4)` size bound.
    pub split_checks: u64,
    pub split_violations: u64,
    pub branch: BranchStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub verdict: Verdict,
    /// A coloring of every vertex, present iff the verdict is yes.
    pub coloring: Option<PartialColoring>,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }

    pub(crate) fn from_coloring(coloring: Option<PartialColoring>, stats: SolveStats) -> SolveResult {
        let verdict = if coloring.is_some() { Verdict::Yes } else { Verdict::No };
        SolveResult { verdict, coloring, stats }
    }
}

/// Solves with the default configuration.
pub fn solve(inst: &Instance) -> SolveResult {
    solve_with(inst, &SolveConfig::default()).expect("no budget configured")
}

/// Decides `inst` and returns a coloring when one exists.
///
/// Small instances go to [`brute_force_small`]. Larger ones walk the
/// separated family; for each member both halves are solved recursively
/// (left first, right only if left succeeds) and the first member with two
/// colorable halves gives the answer, merged with the colors the family
/// fixed on the way.
pub fn solve_with(inst: &Instance, config: &SolveConfig) -> Result<SolveResult, SolveError> {
    if config.base_threshold < MIN_BASE_THRESHOLD {
        return Err(SolveError::BaseThresholdTooSmall { given: config.base_threshold });
    }
    let mut run = Run { config, stats: SolveStats::default() };
    let coloring = run.solve(inst, 1)?;
    Ok(SolveResult::from_coloring(coloring, run.stats))
}

struct Run<'a> {
    config: &'a SolveConfig,
    stats: SolveStats,
}

impl Run<'_> {
    fn solve(&mut self, inst: &Instance, depth: u32) -> Result<Option<PartialColoring>, SolveError> {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if let Some(budget) = self.config.node_budget {
            if self.stats.nodes > budget {
                return Err(SolveError::BudgetExceeded { nodes: self.stats.nodes });
            }
        }

        let n = inst.len();
        if n <= self.config.base_threshold {
            self.stats.brute_force_calls += 1;
            return Ok(first_coloring(inst));
        }

        let cap = (3 * n).div_ceil(4);
        let mut family = separated_family(inst).expect("n is above the base threshold");
        self.stats.families += 1;
        let mut members = 0u64;
        let mut answer = None;
        let mut failure = None;
        for full in family.by_ref() {
            members += 1;
            let (left, right) = split_full(&full).expect("family members are fully separated");
            self.stats.split_checks += 1;
            if left.len() > cap || right.len() > cap {
                self.stats.split_violations += 1;
                debug_assert!(false, "split of {n} chords into {} + {}", left.len(), right.len());
            }
            let left_col = match self.solve(&left, depth + 1) {
                Ok(Some(c)) => c,
                Ok(None) => continue,
                Err(e) => {
                    failure = Some(e);
                    break;
                }
            };
            let right_col = match self.solve(&right, depth + 1) {
                Ok(Some(c)) => c,
                Ok(None) => continue,
                Err(e) => {
                    failure = Some(e);
                    break;
                }
            };
            let mut coloring = full.partial;
            coloring.merge(&left_col);
            coloring.merge(&right_col);
            answer = Some(coloring);
            break;
        }
        self.stats.family_members += members;
        self.stats.max_family_members = self.stats.max_family_members.max(members);
        self.stats.branch.absorb(&family.stats());
        match failure {
            Some(e) => Err(e),
            None => Ok(answer),
        }
    }
}

/// Exhaustive search over the product of the lists, returning the first
/// valid coloring in lexicographic order (vertices by id, red < green <
/// blue). Partial assignments with a conflict are cut off early, which
/// does not change which coloring comes first.
pub fn brute_force_small(inst: &Instance) -> SolveResult {
    let coloring = first_coloring(inst);
    let stats = SolveStats { nodes: 1, brute_force_calls: 1, max_depth: 1, ..SolveStats::default() };
    SolveResult::from_coloring(coloring, stats)
}

fn first_coloring(inst: &Instance) -> Option<PartialColoring> {
    let chords = inst.chords();
    let n = chords.len();
    // earlier[v]: neighbors of v that come before it in id order
    let earlier: Vec<Vec<usize>> =
        (0..n).map(|v| (0..v).filter(|&u| chords[u].crosses(&chords[v])).collect()).collect();
    let lists = inst.lists();
    let mut colors: Vec<Color> = Vec::with_capacity(n);
    let mut next_choice: Vec<usize> = Vec::with_capacity(n);
    next_choice.push(0);

    // Iterative depth-first search; next_choice[k] indexes into lists[k].
    while let Some(choice) = next_choice.last_mut() {
        let k = colors.len();
        if k == n {
            return Some(inst.ids().zip(colors).collect());
        }
        let options: Vec<Color> = lists[k].iter().collect();
        let mut placed = false;
        while *choice < options.len() {
            let c = options[*choice];
            *choice += 1;
            if earlier[k].iter().all(|&u| colors[u] != c) {
                colors.push(c);
                placed = true;
                break;
            }
        }
        if placed {
            next_choice.push(0);
        } else {
            next_choice.pop();
            colors.pop();
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::validate_coloring;
    use crate::testkit::{arb_instance, enumerate_solve, inst};
    use proptest::prelude::*;

    // Chord i runs from 2i to 2i+3 (mod 10); consecutive chords cross and
    // the crossing graph is the 5-cycle.
    fn c5() -> Instance {
        inst(10, &[(0, 3, "RGB"), (2, 5, "RGB"), (4, 7, "RGB"), (6, 9, "RGB"), (8, 1, "RGB")])
    }

    fn k4() -> Instance {
        inst(8, &[(0, 4, "RGB"), (1, 5, "RGB"), (2, 6, "RGB"), (3, 7, "RGB")])
    }

    #[test]
    fn c5_is_a_five_cycle() {
        let i = c5();
        let chords = i.chords();
        for a in 0..5 {
            for b in a + 1..5 {
                let adjacent = b - a == 1 || b - a == 4;
                assert_eq!(chords[a].crosses(&chords[b]), adjacent, "{a} {b}");
            }
        }
    }

    #[test]
    fn solve_examples() {
        let pair = inst(4, &[(0, 2, "RGB"), (1, 3, "RGB")]);
        let r = solve(&pair);
        let col = r.coloring.unwrap();
        assert_ne!(col.get(0), col.get(1));

        let r = solve(&c5());
        assert_eq!(r.verdict, Verdict::Yes);
        let col = r.coloring.unwrap();
        assert!(validate_coloring(&c5(), &col));
        let used: crate::ColorSet = col.iter().map(|(_, c)| c).collect();
        assert_eq!(used.len(), 3);

        assert_eq!(solve(&k4()).verdict, Verdict::No);
        assert!(enumerate_solve(&k4()).is_none());
    }

    #[test]
    fn recursion_is_exercised_with_small_threshold() {
        let cfg = SolveConfig { base_threshold: 3, node_budget: None };
        let r = solve_with(&c5(), &cfg).unwrap();
        assert!(r.is_yes());
        assert!(r.stats.families >= 1);
        assert!(validate_coloring(&c5(), r.coloring.as_ref().unwrap()));
        assert_eq!(solve_with(&k4(), &cfg).unwrap().verdict, Verdict::No);
    }

    #[test]
    fn brute_force_examples() {
        let r = brute_force_small(&Instance::empty(0));
        assert!(r.is_yes());
        assert!(r.coloring.unwrap().is_empty());

        let single = inst(2, &[(0, 1, "B")]);
        let r = brute_force_small(&single);
        assert_eq!(r.coloring.unwrap().get(0), Some(Color::Blue));

        assert_eq!(brute_force_small(&k4()).verdict, Verdict::No);
    }

    #[test]
    fn brute_force_is_lexicographically_first() {
        let i = inst(4, &[(0, 2, "GB"), (1, 3, "RG")]);
        let col = brute_force_small(&i).coloring.unwrap();
        assert_eq!(col.get(0), Some(Color::Green));
        assert_eq!(col.get(1), Some(Color::Red));
    }

    #[test]
    fn config_errors() {
        let cfg = SolveConfig { base_threshold: 2, node_budget: None };
        assert_eq!(solve_with(&k4(), &cfg), Err(SolveError::BaseThresholdTooSmall { given: 2 }));
        let cfg = SolveConfig { base_threshold: 3, node_budget: Some(1) };
        assert!(matches!(solve_with(&c5(), &cfg), Err(SolveError::BudgetExceeded { .. })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn agrees_with_enumeration(i in arb_instance(11), base in 3usize..=8) {
            let cfg = SolveConfig { base_threshold: base, node_budget: None };
            let r = solve_with(&i, &cfg).unwrap();
            prop_assert_eq!(r.is_yes(), enumerate_solve(&i).is_some());
            if let Some(col) = &r.coloring {
                prop_assert!(validate_coloring(&i, col));
            }
            prop_assert_eq!(r.stats.split_violations, 0);
            prop_assert_eq!(solve_with(&i, &cfg).unwrap(), r);
        }

        #[test]
        fn brute_force_matches_enumeration(i in arb_instance(8)) {
            prop_assert_eq!(brute_force_small(&i).coloring, enumerate_solve(&i));
        }
    }
}
