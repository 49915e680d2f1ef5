//! Hardness gadgets. Every builder returns the target instance together with
//! a [`ReductionMap`] describing how solutions correspond, and a gadget value
//! with `forward` / `backward` methods that carry solutions across.

use alloc::string::String;
use alloc::vec::Vec;

pub mod cnf;
pub mod fvs;
pub mod matching;
pub mod sat;
pub mod setcover;

pub use cnf::{CnfFormula, IncidenceStructures, Node};
pub use fvs::{fvs_to_safeset, FvsGadget};
pub use sat::{
    make_irreducible, sat3_to_traceable_sat4, traceable_sat4_to_dag, Irreducible, SatChain, TraceableDag,
    TraceableSat4,
};
pub use setcover::{setcover_to_indominating, SetCoverGadget, SetCoverInstance};

/// Correspondence between a source problem and the gadget built from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionMap {
    pub gadget: &'static str,
    /// Target optimum minus source optimum, for optimisation gadgets.
    pub size_offset: Option<i64>,
    /// Decision threshold on the target side, for the satisfiability gadgets.
    pub threshold: Option<usize>,
    /// Source item name to target item name.
    pub forward: Vec<(String, String)>,
    /// How a target solution is turned back into a source solution.
    pub backward: String,
}

impl ReductionMap {
    /// Line-oriented `key value` rendering.
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(s, "gadget {}", self.gadget);
        if let Some(o) = self.size_offset {
            let _ = writeln!(s, "size_offset {o:+}");
        }
        if let Some(k) = self.threshold {
            let _ = writeln!(s, "threshold {k}");
        }
        let _ = writeln!(s, "backward {}", self.backward);
        for (a, b) in &self.forward {
            let _ = writeln!(s, "map {a} {b}");
        }
        s
    }
}
