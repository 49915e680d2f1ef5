//! Set cover (hitting-set form) to minimum in-dominating set in a DAG.
//!
//! Each set `S_i` becomes a source `s_i` with arcs to the element vertices
//! `v_j`, `x_j in S_i`, and every element vertex points at a common sink `z`.
//! The sink must be chosen, it dominates every element vertex, and `s_i` is
//! dominated exactly when some chosen element lies in `S_i`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::ReductionMap;
use crate::error::{Error, Result};
use crate::graph::Digraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub ground_size: usize,
    /// Elements are 1-based.
    pub sets: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn new(ground_size: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        for (index, set) in sets.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::EmptyCoverSet { index: index + 1 });
            }
            if let Some(&element) = set.iter().find(|&&e| e == 0 || e > ground_size) {
                return Err(Error::ElementOutOfRange {
                    index: index + 1,
                    element,
                    ground: ground_size,
                });
            }
        }
        Ok(Self { ground_size, sets })
    }

    /// Every set contains a chosen element.
    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        self.sets.iter().all(|s| s.iter().any(|e| chosen.contains(e)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverGadget {
    pub digraph: Digraph,
    pub map: ReductionMap,
    instance: SetCoverInstance,
}

impl SetCoverGadget {
    pub fn set_vertex(&self, i: usize) -> usize {
        i
    }

    /// Vertex of element `x_j` (1-based `j`).
    pub fn element_vertex(&self, j: usize) -> usize {
        self.instance.sets.len() + j - 1
    }

    pub fn sink(&self) -> usize {
        self.instance.sets.len() + self.instance.ground_size
    }

    /// Cover `Z` (1-based elements) to the in-dominating set `{v_j : x_j in Z} + z`.
    pub fn forward(&self, cover: &[usize]) -> Vec<usize> {
        let mut x: Vec<usize> = cover.iter().map(|&j| self.element_vertex(j)).collect();
        x.push(self.sink());
        x.sort_unstable();
        x.dedup();
        x
    }

    /// In-dominating set to a cover; a chosen `s_i` is replaced by the first
    /// element of `S_i`.
    pub fn backward(&self, set: &[usize]) -> Vec<usize> {
        let m = self.instance.sets.len();
        let mut cover: Vec<usize> = set
            .iter()
            .filter(|&&v| v != self.sink())
            .map(|&v| if v < m { self.instance.sets[v][0] } else { v - m + 1 })
            .collect();
        cover.sort_unstable();
        cover.dedup();
        cover
    }
}

pub fn setcover_to_indominating(instance: &SetCoverInstance) -> Result<SetCoverGadget> {
    let instance = SetCoverInstance::new(instance.ground_size, instance.sets.clone())?;
    let m = instance.sets.len();
    let n = instance.ground_size;
    let z = m + n;
    let mut d = Digraph::new(m + n + 1);
    for (i, set) in instance.sets.iter().enumerate() {
        for &j in set {
            d.add_arc(i, m + j - 1)?;
        }
    }
    for j in 0..n {
        d.add_arc(m + j, z)?;
    }
    let mut forward: Vec<(String, String)> = Vec::new();
    for i in 0..m {
        d.set_label(i, format!("s{}", i + 1))?;
    }
    for j in 0..n {
        d.set_label(m + j, format!("v{}", j + 1))?;
        forward.push((format!("x{}", j + 1), format!("v{}", j + 1)));
    }
    d.set_label(z, "z")?;
    forward.push((String::from("(always)"), String::from("z")));
    let map = ReductionMap {
        gadget: "setcover-indominating",
        size_offset: Some(1),
        threshold: None,
        forward,
        backward: String::from("drop z; v_j gives x_j; a chosen s_i gives the first element of S_i"),
    };
    Ok(SetCoverGadget {
        digraph: d,
        map,
        instance,
    })
}
