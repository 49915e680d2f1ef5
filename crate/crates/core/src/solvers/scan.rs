//! Exhaustive scan over all labeled tournaments on `n <= 7` vertices with a
//! given strong connectivity, recording the extreme safe and strong safe
//! numbers.
//!
//! Tournament number `t` orients the `i`-th pair `(u, v)`, `u < v`, in
//! lexicographic pair order as `u -> v` when bit `i` of `t` is set and
//! `v -> u` otherwise. Ties between witnesses go to the smaller index, so
//! splitting the index range and merging the parts with [`ScanResult::merge`]
//! gives exactly the sequential answer.

use core::ops::Range;

use super::SetSize;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::mask::{subsets_of_size, MaskGraph};

pub const MAX_SCAN_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extreme {
    pub value: SetSize,
    /// Index of the first tournament attaining the value.
    pub witness: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    pub n: usize,
    pub k: usize,
    /// Tournaments enumerated.
    pub examined: u64,
    /// Tournaments with connectivity exactly `k`.
    pub matching: u64,
    pub s_min: Option<Extreme>,
    pub s_max: Option<Extreme>,
    pub ss_min: Option<Extreme>,
    pub ss_max: Option<Extreme>,
}

impl ScanResult {
    fn empty(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            examined: 0,
            matching: 0,
            s_min: None,
            s_max: None,
            ss_min: None,
            ss_max: None,
        }
    }

    /// Combines the scans of two disjoint index ranges.
    pub fn merge(mut self, other: ScanResult) -> ScanResult {
        debug_assert_eq!((self.n, self.k), (other.n, other.k));
        self.examined += other.examined;
        self.matching += other.matching;
        self.s_min = pick(self.s_min, other.s_min, false);
        self.s_max = pick(self.s_max, other.s_max, true);
        self.ss_min = pick(self.ss_min, other.ss_min, false);
        self.ss_max = pick(self.ss_max, other.ss_max, true);
        self
    }

    fn record(&mut self, index: u64, s: SetSize, ss: SetSize) {
        self.matching += 1;
        let s = Some(Extreme { value: s, witness: index });
        let ss = Some(Extreme { value: ss, witness: index });
        self.s_min = pick(self.s_min, s, false);
        self.s_max = pick(self.s_max, s, true);
        self.ss_min = pick(self.ss_min, ss, false);
        self.ss_max = pick(self.ss_max, ss, true);
    }

    /// Extreme value, `Infeasible` when no tournament has connectivity `k`.
    pub fn value(e: Option<Extreme>) -> SetSize {
        e.map_or(SetSize::Infeasible, |e| e.value)
    }

    pub fn witness(&self, e: Option<Extreme>) -> Option<Digraph> {
        e.map(|e| tournament_from_index(self.n, e.witness))
    }
}

fn pick(a: Option<Extreme>, b: Option<Extreme>, maximise: bool) -> Option<Extreme> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => {
            let b_better = if maximise { b.value > a.value } else { b.value < a.value };
            if b_better || (b.value == a.value && b.witness < a.witness) {
                Some(b)
            } else {
                Some(a)
            }
        }
    }
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of labeled tournaments on `n` vertices.
pub fn tournament_count(n: usize) -> u64 {
    1u64 << pair_count(n)
}

fn out_masks(n: usize, index: u64) -> alloc::vec::Vec<u64> {
    let mut out = alloc::vec![0u64; n];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if index >> bit & 1 == 1 {
                out[u] |= 1 << v;
            } else {
                out[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    out
}

pub fn tournament_from_index(n: usize, index: u64) -> Digraph {
    let out = &out_masks(n, index);
    Digraph::from_arcs(
        n,
        (0..n).flat_map(|u| (0..n).filter(move |&v| out[u] >> v & 1 == 1).map(move |v| (u, v))),
    )
    .expect("valid tournament")
}

fn check_n(n: usize, allow_n7: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::ScanRefused {
            n,
            reason: "need at least one vertex",
        });
    }
    if n > MAX_SCAN_N {
        return Err(Error::ScanRefused {
            n,
            reason: "2^C(n,2) labeled tournaments is beyond exhaustive reach; the scan supports n <= 7",
        });
    }
    if n == MAX_SCAN_N && !allow_n7 {
        return Err(Error::ScanRefused {
            n,
            reason: "n = 7 enumerates 2^21 tournaments and must be requested explicitly",
        });
    }
    Ok(())
}

/// Scans tournament indices in `range` (clamped to the valid range).
pub fn scan_range(n: usize, k: usize, range: Range<u64>) -> Result<ScanResult> {
    check_n(n, true)?;
    let end = range.end.min(tournament_count(n));
    let mut result = ScanResult::empty(n, k);
    for index in range.start..end {
        result.examined += 1;
        let g = MaskGraph::from_out_masks(out_masks(n, index));
        if g.connectivity_by_deletion() != k {
            continue;
        }
        let (s, ss) = safe_numbers(&g);
        result.record(index, s, ss);
    }
    Ok(result)
}

/// Safe number and strong safe number in one pass over the subsets.
fn safe_numbers(g: &MaskGraph) -> (SetSize, SetSize) {
    let n = g.n();
    let mut s = SetSize::Infeasible;
    for size in 1..=n {
        for set in subsets_of_size(n, size) {
            if !g.is_safe(set) {
                continue;
            }
            if !s.is_feasible() {
                s = SetSize::Finite(size);
            }
            if g.is_strong(set) {
                return (s, SetSize::Finite(size));
            }
        }
    }
    (s, SetSize::Infeasible)
}

/// Full scan of all tournaments on `n` vertices with connectivity `k`.
/// `n = 7` must be asked for explicitly.
pub fn extremal_scan(n: usize, k: usize, allow_n7: bool) -> Result<ScanResult> {
    check_n(n, allow_n7)?;
    scan_range(n, k, 0..tournament_count(n))
}
