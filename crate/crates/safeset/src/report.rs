//! The JSON record every command prints.
//!
//! Schema, one object per run:
//!
//! ```text
//! {
//!   "command": "solve",
//!   "input": { "n": 15, "m": 83, "tournament": false, "semicomplete": true,
//!              "acyclic": false, "strong": false, "oriented": false },   // optional
//!   "result": { "kind": "solve", ... },                                 // per command
//!   "timing": [ { "phase": "parse", "micros": 41 }, ... ],
//!   "seed": 7                                                           // optional
//! }
//! ```
//!
//! Sizes are integers, or the string `"INFEASIBLE"` when no set exists.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use safeset_core::{Classification, Digraph, SetSize};

/// A set size on the wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Size(pub SetSize);

pub const INFEASIBLE: &str = "INFEASIBLE";

impl Serialize for Size {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            SetSize::Finite(k) => s.serialize_u64(k as u64),
            SetSize::Infeasible => s.serialize_str(INFEASIBLE),
        }
    }
}

impl<'de> Deserialize<'de> for Size {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Token(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(k) => Ok(Size(SetSize::Finite(k as usize))),
            Raw::Token(t) if t == INFEASIBLE => Ok(Size(SetSize::Infeasible)),
            Raw::Token(t) => Err(serde::de::Error::custom(format!("expected a size or {INFEASIBLE}, got `{t}`"))),
        }
    }
}

impl fmt::Display for Size {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<SetSize> for Size {
    fn from(s: SetSize) -> Self {
        Size(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub n: usize,
    pub m: usize,
    pub tournament: bool,
    pub semicomplete: bool,
    pub acyclic: bool,
    pub strong: bool,
    pub oriented: bool,
}

impl InputSummary {
    pub fn of(d: &Digraph, c: &Classification) -> Self {
        Self {
            n: d.n(),
            m: d.arc_count(),
            tournament: c.is_tournament,
            semicomplete: c.is_semicomplete,
            acyclic: c.is_acyclic,
            strong: c.is_strong,
            oriented: c.is_oriented,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Phase {
    pub phase: String,
    pub micros: u64,
}

/// A vertex set with display names alongside the ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSet {
    pub ids: Vec<usize>,
    pub names: Vec<String>,
}

impl VertexSet {
    pub fn of(d: &Digraph, ids: &[usize]) -> Self {
        Self {
            ids: ids.to_vec(),
            names: ids.iter().map(|&v| d.display_name(v)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub b: usize,
    pub size: Size,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub a: usize,
    pub component: VertexSet,
    pub cells: Vec<TableCell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extreme {
    pub value: Size,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_index: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_arcs: Option<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub lsc: usize,
    pub n: usize,
    pub components: usize,
    pub subsets_examined: u64,
    /// Sum of `2^|C_i|` over the components.
    pub expected_subsets: u64,
    pub size: Size,
    pub micros: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportResult {
    Scc {
        components: Vec<VertexSet>,
    },
    Classify {
        lsc: usize,
        components: usize,
        vertex_connectivity: usize,
    },
    Check {
        problem: String,
        set: VertexSet,
        verdict: bool,
        violations: Vec<String>,
    },
    Solve {
        problem: String,
        method: String,
        size: Size,
        set: VertexSet,
        subsets_examined: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tables: Option<Vec<TableRow>>,
    },
    Fvs {
        size: Size,
        set: VertexSet,
    },
    Scan {
        n: usize,
        k: usize,
        threads: usize,
        examined: u64,
        matching: u64,
        s_min: Extreme,
        s_max: Extreme,
        ss_min: Extreme,
        ss_max: Extreme,
    },
    Gen {
        family: String,
        n: usize,
        m: usize,
        output: String,
    },
    Reduce {
        gadget: String,
        n: usize,
        m: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        size_offset: Option<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        threshold: Option<usize>,
        output: String,
    },
    Bench {
        rows: Vec<BenchRow>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputSummary>,
    pub result: ReportResult,
    pub timing: Vec<Phase>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Collects named wall-clock phases.
#[derive(Debug)]
pub struct Timer {
    phases: Vec<Phase>,
    started: Instant,
}

impl Default for Timer {
    fn default() -> Self {
        Self::new()
    }
}

impl Timer {
    pub fn new() -> Self {
        Self {
            phases: Vec::new(),
            started: Instant::now(),
        }
    }

    /// Closes the current phase under `name` and starts the next one.
    pub fn lap(&mut self, name: &str) {
        let now = Instant::now();
        self.phases.push(Phase {
            phase: name.to_string(),
            micros: now.duration_since(self.started).as_micros() as u64,
        });
        self.started = now;
    }

    pub fn finish(self) -> Vec<Phase> {
        self.phases
    }
}
