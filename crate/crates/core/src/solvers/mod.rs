//! Exact solvers.
//!
//! Brute force enumerates vertex subsets by increasing cardinality and, within
//! one cardinality, by increasing bitmask value; the first hit is returned.
//! The dynamic program in [`dp`] handles semicomplete digraphs of any order as
//! long as their strong components are small.

use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::structure::is_semicomplete;

pub mod brute;
pub mod dp;
pub mod scan;

pub use brute::{min_feedback_vertex_set, min_indominating, min_strong_safe_set};
pub use dp::{dp_tables, DpTable};
pub use scan::{extremal_scan, ScanResult};

/// Optimum of a minimisation problem. `Infeasible` orders above every finite
/// value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SetSize {
    Finite(usize),
    Infeasible,
}

impl SetSize {
    pub fn finite(self) -> Option<usize> {
        match self {
            SetSize::Finite(k) => Some(k),
            SetSize::Infeasible => None,
        }
    }

    pub fn is_feasible(self) -> bool {
        matches!(self, SetSize::Finite(_))
    }
}

impl fmt::Display for SetSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetSize::Finite(k) => write!(f, "{k}"),
            SetSize::Infeasible => f.write_str("INFEASIBLE"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    Dp,
    /// Dynamic program for semicomplete inputs, brute force otherwise.
    Auto,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Dp => "dp",
            Method::Auto => "auto",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveStats {
    pub subsets_examined: u64,
    /// Filled in by callers that have a clock.
    pub elapsed: Option<Duration>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub size: SetSize,
    /// Sorted vertex ids; empty when infeasible.
    pub set: Vec<usize>,
    /// The method that actually ran (never `Auto`).
    pub method: Method,
    pub stats: SolveStats,
}

impl SolveResult {
    fn found(set: Vec<usize>, method: Method, subsets_examined: u64) -> Self {
        Self {
            size: SetSize::Finite(set.len()),
            set,
            method,
            stats: SolveStats {
                subsets_examined,
                elapsed: None,
            },
        }
    }

    fn infeasible(method: Method, subsets_examined: u64) -> Self {
        Self {
            size: SetSize::Infeasible,
            set: Vec::new(),
            method,
            stats: SolveStats {
                subsets_examined,
                elapsed: None,
            },
        }
    }
}

/// Minimum safe set. `Auto` runs the dynamic program on semicomplete inputs
/// and brute force otherwise.
pub fn min_safe_set(d: &Digraph, method: Method) -> Result<SolveResult> {
    if d.is_empty() {
        return Err(Error::EmptyDigraph);
    }
    let use_dp = match method {
        Method::Brute => false,
        Method::Dp => {
            if !is_semicomplete(d) {
                return Err(Error::NotSemicomplete);
            }
            true
        }
        Method::Auto => is_semicomplete(d),
    };
    let result = if use_dp {
        let table = dp_tables(d)?;
        table.best()
    } else {
        brute::min_safe_set_brute(d)?
    };
    if !crate::verify::is_safe_set(d, &result.set)?.verdict() {
        return Err(Error::SelfCheck("minimum safe set failed verification"));
    }
    Ok(result)
}
