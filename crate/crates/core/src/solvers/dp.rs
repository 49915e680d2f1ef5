//! Minimum safe sets of semicomplete digraphs by dynamic programming over
//! the chain of strong components.
//!
//! Let `C_1, ..., C_p` be the strong components in their (unique) order, so
//! every arc between `C_i` and `C_j` with `i < j` goes forward, and let
//! `V_a` be the union of `C_a, ..., C_p`. Cell `(a, b)` holds a smallest safe
//! set of `D[V_a]` whose smallest strong component has exactly `b` vertices.
//!
//! Row `p` enumerates the safe sets `W` of `D[C_p]`. Row `a < p` combines a
//! subset `W` of `C_a` with cell `(a + 1, j)`. `W` is admissible when no
//! strong component of `C_a - W` has an arc into a smaller strong component
//! of `D[W]`; then with `s_W` the smallest component of `D[W]` and `t_W` the
//! largest component of `C_a - W`, every `j >= t_W` gives the candidate
//! `|W| + s*(a + 1, j)` for cell `(a, min(j, s_W))`. An empty `W` has
//! `s_W = infinity` and `t_W = |C_a|`; `W = C_a` has `t_W = 0`.
//!
//! Work is `sum over components of 2^|C_i|` subset evaluations.

use alloc::vec::Vec;

use super::{Method, SetSize, SolveResult};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::mask::{subsets_of_size, Bits, MaskGraph};
use crate::scc::{scc_decompose, Condensation};
use crate::structure::is_semicomplete;

/// Largest strong component the dynamic program accepts.
pub const MAX_COMPONENT: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Choice {
    /// Chosen subset of the row's component, as a local mask.
    local: u64,
    /// Column taken in the next row; `None` in the last row.
    next: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Cell {
    size: SetSize,
    choice: Option<Choice>,
}

const EMPTY_CELL: Cell = Cell {
    size: SetSize::Infeasible,
    choice: None,
};

/// The `s*(a, b)` / `S*(a, b)` table. Rows `a` and columns `b` are 1-based
/// like the component indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpTable {
    condensation: Condensation,
    lsc: usize,
    rows: Vec<Vec<Cell>>,
    subsets_examined: u64,
}

impl DpTable {
    /// Number of strong components.
    pub fn p(&self) -> usize {
        self.rows.len()
    }

    pub fn lsc(&self) -> usize {
        self.lsc
    }

    pub fn condensation(&self) -> &Condensation {
        &self.condensation
    }

    pub fn subsets_examined(&self) -> u64 {
        self.subsets_examined
    }

    pub fn size(&self, a: usize, b: usize) -> SetSize {
        self.rows[a - 1][b - 1].size
    }

    /// `s*(a, 1..=lsc)`.
    pub fn row(&self, a: usize) -> Vec<SetSize> {
        self.rows[a - 1].iter().map(|c| c.size).collect()
    }

    /// `S*(a, b)` as sorted vertex ids, or `None` when the cell is infeasible.
    pub fn set(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let (mut row, mut col) = (a - 1, b - 1);
        let mut set = Vec::new();
        loop {
            let choice = self.rows[row][col].choice?;
            let comp = &self.condensation.components[row];
            set.extend(Bits(choice.local).map(|i| comp[i]));
            match choice.next {
                Some(j) => {
                    row += 1;
                    col = j - 1;
                }
                None => break,
            }
        }
        set.sort_unstable();
        Some(set)
    }

    /// Best cell of the first row; ties go to the smaller `b`.
    pub fn best(&self) -> SolveResult {
        let (b, cell) = self.rows[0]
            .iter()
            .enumerate()
            .min_by_key(|(_, c)| c.size)
            .expect("at least one column");
        let set = self.set(1, b + 1).expect("V(D) is always safe, so row 1 has a feasible cell");
        debug_assert_eq!(cell.size, SetSize::Finite(set.len()));
        SolveResult::found(set, Method::Dp, self.subsets_examined)
    }
}

/// Fills the whole table. The input must be semicomplete and non-empty.
pub fn dp_tables(d: &Digraph) -> Result<DpTable> {
    if d.is_empty() {
        return Err(Error::EmptyDigraph);
    }
    if !is_semicomplete(d) {
        return Err(Error::NotSemicomplete);
    }
    let condensation = scc_decompose(d);
    let lsc = condensation.largest();
    if lsc > MAX_COMPONENT {
        return Err(Error::TooLarge {
            what: "strong component for the dynamic program",
            n: lsc,
            limit: MAX_COMPONENT,
        });
    }
    let p = condensation.len();
    let mut rows = alloc::vec![alloc::vec![EMPTY_CELL; lsc]; p];
    let mut examined = 0u64;

    for a in (0..p).rev() {
        let comp = &condensation.components[a];
        let g = MaskGraph::induced(d, comp)?;
        let all = g.all();
        let size = comp.len();
        let (done, todo) = rows.split_at_mut(a + 1);
        let row = &mut done[a];
        let next_row = todo.first();

        // increasing cardinality, then increasing mask: first candidate wins ties
        for k in 0..=size {
            for w in subsets_of_size(size, k) {
                examined += 1;
                let Some(profile) = g.split_profile(w, all) else {
                    continue;
                };
                match next_row {
                    None => {
                        if w == 0 || !profile.all_reach_inside {
                            continue;
                        }
                        let q = profile.smallest_inside.expect("non-empty W");
                        let cell = &mut row[q - 1];
                        if SetSize::Finite(k) < cell.size {
                            *cell = Cell {
                                size: SetSize::Finite(k),
                                choice: Some(Choice { local: w, next: None }),
                            };
                        }
                    }
                    Some(next_row) => {
                        let s_w = profile.smallest_inside.unwrap_or(usize::MAX);
                        let t_w = if w == 0 { size } else { profile.largest_outside };
                        for j in t_w.max(1)..=lsc {
                            let SetSize::Finite(rest) = next_row[j - 1].size else {
                                continue;
                            };
                            let b = j.min(s_w);
                            let candidate = SetSize::Finite(k + rest);
                            let cell = &mut row[b - 1];
                            if candidate < cell.size {
                                *cell = Cell {
                                    size: candidate,
                                    choice: Some(Choice { local: w, next: Some(j) }),
                                };
                            }
                        }
                    }
                }
            }
        }
    }

    Ok(DpTable {
        condensation,
        lsc,
        rows,
        subsets_examined: examined,
    })
}
