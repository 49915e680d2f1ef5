//! Feedback vertex sets of a tournament `T` versus safe sets of `T'`, the
//! tournament obtained by adding a sink `x` dominated by every vertex of `T`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::ReductionMap;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::structure::is_tournament;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FvsGadget {
    pub digraph: Digraph,
    pub map: ReductionMap,
    /// The added sink.
    pub x: usize,
}

impl FvsGadget {
    pub fn forward(&self, fvs: &[usize]) -> Vec<usize> {
        let mut s = fvs.to_vec();
        s.push(self.x);
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn backward(&self, safe: &[usize]) -> Vec<usize> {
        safe.iter().copied().filter(|&v| v != self.x).collect()
    }
}

pub fn fvs_to_safeset(t: &Digraph) -> Result<FvsGadget> {
    if !is_tournament(t) {
        return Err(Error::NotTournament);
    }
    let mut d = t.clone();
    let x = d.add_vertex();
    for v in 0..x {
        d.add_arc(v, x)?;
    }
    let mut name = String::from("x");
    while d.vertex_by_label(&name).is_some() {
        name.push('\'');
    }
    d.set_label(x, name.clone())?;
    let mut forward: Vec<(String, String)> = (0..x).map(|v| (t.display_name(v), d.display_name(v))).collect();
    forward.push((String::from("(always)"), name.clone()));
    let map = ReductionMap {
        gadget: "fvs-safeset",
        size_offset: Some(1),
        threshold: None,
        forward,
        backward: format!("drop {name}"),
    };
    Ok(FvsGadget { digraph: d, map, x })
}
