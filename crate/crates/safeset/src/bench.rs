//! DP scaling harness: chains of random strong semicomplete parts of a fixed
//! size, solved by the dynamic program. Growth is judged on the exact subset
//! counts; wall time is only reported.

use std::time::Instant;

use safeset_core::generators::{chain_components, random_strong_semicomplete};
use safeset_core::rng::{Ratio, SplitMix64};
use safeset_core::solvers::dp_tables;
use safeset_core::{Digraph, Result};

use crate::report::{BenchRow, Size};

/// Largest part size the harness accepts.
pub const MAX_BENCH_LSC: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BenchError {
    #[error("lsc {0} exceeds the harness limit of {MAX_BENCH_LSC}")]
    LscTooLarge(usize),
    #[error("lsc must be at least 1")]
    LscZero,
    #[error("n = {n} is smaller than lsc = {lsc}")]
    TooFewVertices { n: usize, lsc: usize },
    #[error(transparent)]
    Core(#[from] safeset_core::Error),
}

/// `ceil(n / lsc)` parts of size `lsc`, the last one truncated to fit.
pub fn bench_chain(lsc: usize, n: usize, rng: &mut SplitMix64) -> Result<Digraph> {
    let mut parts = Vec::new();
    let mut left = n;
    while left > 0 {
        let size = left.min(lsc);
        parts.push(random_strong_semicomplete(size, Ratio::QUARTER, rng)?);
        left -= size;
    }
    chain_components(&parts)
}

pub fn bench_dp(lsc_values: &[usize], n: usize, seed: u64) -> std::result::Result<Vec<BenchRow>, BenchError> {
    for &lsc in lsc_values {
        if lsc == 0 {
            return Err(BenchError::LscZero);
        }
        if lsc > MAX_BENCH_LSC {
            return Err(BenchError::LscTooLarge(lsc));
        }
        if n < lsc {
            return Err(BenchError::TooFewVertices { n, lsc });
        }
    }
    let mut rng = SplitMix64::new(seed);
    let mut rows = Vec::with_capacity(lsc_values.len());
    for &lsc in lsc_values {
        let d = bench_chain(lsc, n, &mut rng)?;
        let started = Instant::now();
        let table = dp_tables(&d)?;
        let best = table.best();
        let micros = started.elapsed().as_micros() as u64;
        let sizes = table.condensation().sizes();
        rows.push(BenchRow {
            lsc,
            n,
            components: sizes.len(),
            subsets_examined: table.subsets_examined(),
            expected_subsets: sizes.iter().map(|&s| 1u64 << s).sum(),
            size: Size(best.size),
            micros,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use safeset_core::SetSize;

    #[test]
    fn unit_parts_form_a_transitive_chain() {
        let rows = bench_dp(&[1], 100, 3).unwrap();
        assert_eq!(rows[0].components, 100);
        assert_eq!(rows[0].size, Size(SetSize::Finite(1)));
        assert_eq!(rows[0].subsets_examined, 200);
    }

    #[test]
    fn truncated_last_part() {
        let rows = bench_dp(&[4], 10, 1).unwrap();
        assert_eq!(rows[0].components, 3);
        assert_eq!(rows[0].expected_subsets, 16 + 16 + 4);
        assert_eq!(rows[0].subsets_examined, rows[0].expected_subsets);
    }

    #[test]
    fn refusals() {
        assert_eq!(bench_dp(&[21], 100, 0), Err(BenchError::LscTooLarge(21)));
        assert!(bench_dp(&[5], 4, 0).is_err());
    }
}
