use alloc::format;
use alloc::vec::Vec;

use super::matching::BipartiteMatching;
use crate::error::{Error, Result};

/// A CNF formula over variables `x1..=x{num_vars}`. Literals are signed
/// 1-based variable indices, negative meaning negated (DIMACS style).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
    max_width: usize,
}

/// Brute-force satisfiability is refused beyond this many variables.
pub const BRUTE_SAT_LIMIT: usize = 24;

pub fn var_of(lit: i32) -> usize {
    lit.unsigned_abs() as usize
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>, max_width: usize) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::InvalidFormula(format!("clause {} is empty", j + 1)));
            }
            if clause.len() > max_width {
                return Err(Error::InvalidFormula(format!(
                    "clause {} has {} literals, more than the declared width {max_width}",
                    j + 1,
                    clause.len()
                )));
            }
            if let Some(&lit) = clause.iter().find(|&&l| l == 0 || var_of(l) > num_vars) {
                return Err(Error::InvalidFormula(format!(
                    "literal {lit} in clause {} is outside x1..x{num_vars}",
                    j + 1
                )));
            }
        }
        Ok(Self {
            num_vars,
            clauses,
            max_width,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn max_width(&self) -> usize {
        self.max_width
    }

    /// Distinct variables of clause `j` (1-based ids, sorted).
    pub fn clause_vars(&self, j: usize) -> Vec<usize> {
        let mut vars: Vec<usize> = self.clauses[j].iter().map(|&l| var_of(l)).collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// `assignment[i]` is the value of `x{i+1}`.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self
                .clauses
                .iter()
                .all(|c| c.iter().any(|&l| assignment[var_of(l) - 1] == (l > 0)))
    }

    /// Exhaustive search; the first satisfying assignment in binary counting
    /// order (`x1` is the lowest bit).
    pub fn solve_brute(&self) -> Result<Option<Vec<bool>>> {
        let n = self.num_vars;
        if n > BRUTE_SAT_LIMIT {
            return Err(Error::TooLarge {
                what: "brute-force satisfiability",
                n,
                limit: BRUTE_SAT_LIMIT,
            });
        }
        for bits in 0u64..1 << n {
            let assignment: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
            if self.is_satisfied_by(&assignment) {
                return Ok(Some(assignment));
            }
        }
        Ok(None)
    }

    /// Maximum matching of the variable/clause incidence graph `B(F)`.
    pub fn incidence_matching(&self) -> BipartiteMatching {
        let mut var_clauses = alloc::vec![Vec::new(); self.num_vars];
        for j in 0..self.clauses.len() {
            for v in self.clause_vars(j) {
                var_clauses[v - 1].push(j);
            }
        }
        BipartiteMatching::maximum(&var_clauses, self.clauses.len())
    }
}

/// A vertex of the clause/variable graph `G(F)`. Indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Clause(usize),
    Var(usize),
}

/// The graphs attached to a formula: `G(F)`, where clauses are adjacent when
/// they share a literal and a variable is adjacent to the clauses it occurs
/// in, and the bipartite incidence graph `B(F)` (the variable/clause edges of
/// `G(F)`), together with a matching of `B(F)` covering every variable when
/// one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructures {
    pub clause_count: usize,
    pub var_count: usize,
    /// `G(F)` adjacency; clause `j` is node `j`, variable `i` is node
    /// `clause_count + i`.
    pub g: Vec<Vec<usize>>,
    /// `B(F)` edges as (clause, variable) pairs.
    pub b: Vec<(usize, usize)>,
    /// Variable `i` is matched to clause `matching[i]`.
    pub matching: Option<Vec<usize>>,
}

impl IncidenceStructures {
    pub fn new(f: &CnfFormula) -> Self {
        let m = f.num_clauses();
        let n = f.num_vars();
        let mut g = alloc::vec![Vec::new(); m + n];
        let mut b = Vec::new();
        for j in 0..m {
            for v in f.clause_vars(j) {
                b.push((j, v - 1));
                g[j].push(m + v - 1);
                g[m + v - 1].push(j);
            }
            for j2 in j + 1..m {
                if f.clauses[j].iter().any(|l| f.clauses[j2].contains(l)) {
                    g[j].push(j2);
                    g[j2].push(j);
                }
            }
        }
        for adj in g.iter_mut() {
            adj.sort_unstable();
        }
        let mm = f.incidence_matching();
        let matching = mm.left_mate.iter().copied().collect::<Option<Vec<usize>>>();
        Self {
            clause_count: m,
            var_count: n,
            g,
            b,
            matching,
        }
    }

    pub fn node_id(&self, node: Node) -> usize {
        match node {
            Node::Clause(j) => j,
            Node::Var(i) => self.clause_count + i,
        }
    }

    pub fn adjacent(&self, a: Node, b: Node) -> bool {
        self.g[self.node_id(a)].binary_search(&self.node_id(b)).is_ok()
    }

    /// `path` visits every node of `G(F)` exactly once along edges of `G(F)`.
    pub fn check_hamiltonian_path(&self, path: &[Node]) -> Result<()> {
        let total = self.clause_count + self.var_count;
        if path.len() != total {
            return Err(Error::InvalidPath(format!("path has {} nodes, G(F) has {total}", path.len())));
        }
        let mut seen = alloc::vec![false; total];
        for &node in path {
            let valid = match node {
                Node::Clause(j) => j < self.clause_count,
                Node::Var(i) => i < self.var_count,
            };
            if !valid {
                return Err(Error::InvalidPath(format!("{node:?} is not a node of G(F)")));
            }
            let id = self.node_id(node);
            if seen[id] {
                return Err(Error::InvalidPath(format!("{node:?} visited twice")));
            }
            seen[id] = true;
        }
        if let Some(w) = path.windows(2).find(|w| !self.adjacent(w[0], w[1])) {
            return Err(Error::InvalidPath(format!("{:?} and {:?} are not adjacent in G(F)", w[0], w[1])));
        }
        Ok(())
    }
}
