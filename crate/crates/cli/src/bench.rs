//! Timing runs over generated instances.

use std::time::Instant;

use chordcolor_core::{solve_with, SolveConfig, SolveError};

use crate::gen::{gen_random, Density};
use crate::record::SolveRecord;

/// Trial `t` at size `n` uses seed `seed + t`, so a size sweep reuses the
/// same seeds at every size.
pub fn run_bench(
    sizes: &[usize],
    trials: u64,
    seed: u64,
    density: Density,
    config: &SolveConfig,
) -> Result<Vec<SolveRecord>, SolveError> {
    let mut records = Vec::new();
    for &n in sizes {
        for t in 0..trials {
            let s = seed.wrapping_add(t);
            let inst = gen_random(n, s, density);
            let start = Instant::now();
            let result = solve_with(&inst, config)?;
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            let mut rec = SolveRecord::new("solve", n, &result, wall_ms);
            rec.seed = Some(s);
            rec.density = Some(density.to_string());
            records.push(rec);
        }
    }
    Ok(records)
}

/// Median of the wall times, upper middle for even counts.
pub fn median_ms(records: &[SolveRecord]) -> Option<f64> {
    let mut t: Vec<f64> = records.iter().map(|r| r.wall_ms).collect();
    t.sort_by(f64::total_cmp);
    t.get(t.len() / 2).copied()
}
