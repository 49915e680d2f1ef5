//! 3-SAT to in-dominating sets in traceable DAGs, in three steps:
//!
//! 1. [`make_irreducible`] deletes clauses and variables until the
//!    variable/clause incidence graph has a matching covering every variable.
//! 2. [`sat3_to_traceable_sat4`] doubles every clause with a new variable `w`
//!    (once positively, once negatively) so that the clause/variable graph of
//!    the result has an explicit hamiltonian path.
//! 3. [`traceable_sat4_to_dag`] turns a formula with such a path into a DAG
//!    with a hamiltonian path whose in-domination number is `n + 1` exactly
//!    when the formula is satisfiable, and at least `n + 1` always.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::cnf::{var_of, CnfFormula, IncidenceStructures, Node};
use super::ReductionMap;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::structure::classify;

fn check_width(f: &CnfFormula, width: usize) -> Result<()> {
    match f.clauses().iter().position(|c| c.len() > width) {
        Some(j) => Err(Error::InvalidFormula(format!(
            "clause {} has {} literals, expected at most {width}",
            j + 1,
            f.clauses()[j].len()
        ))),
        None => Ok(()),
    }
}

/// Result of [`make_irreducible`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Irreducible {
    pub formula: CnfFormula,
    /// Variable `i + 1` of the output is variable `kept_vars[i]` of the input.
    pub kept_vars: Vec<usize>,
    /// Output clause `j` is input clause `kept_clauses[j]` (0-based).
    pub kept_clauses: Vec<usize>,
    /// Deleted clauses (0-based) with the literal, on a deleted variable, that
    /// satisfies each of them. Distinct clauses use distinct variables.
    pub deleted: Vec<(usize, i32)>,
    original_vars: usize,
}

impl Irreducible {
    /// Input assignment restricted to the kept variables.
    pub fn restrict(&self, assignment: &[bool]) -> Vec<bool> {
        self.kept_vars.iter().map(|&v| assignment[v - 1]).collect()
    }

    /// Extends an assignment of the output to the input; satisfying stays
    /// satisfying.
    pub fn lift(&self, assignment: &[bool]) -> Vec<bool> {
        let mut full = vec![false; self.original_vars];
        for (i, &v) in self.kept_vars.iter().enumerate() {
            full[v - 1] = assignment[i];
        }
        for &(_, lit) in &self.deleted {
            full[var_of(lit) - 1] = lit > 0;
        }
        full
    }
}

/// Repeatedly takes a maximum matching of `B(F)`; while some variable is
/// unmatched, deletes the variables `U` reachable from unmatched variables
/// along alternating paths together with their clauses `N(U)`. Every clause
/// of `N(U)` is matched into `U`, so the deleted part can always be satisfied
/// on its own and the result is equisatisfiable with `F`.
pub fn make_irreducible(f: &CnfFormula) -> Result<Irreducible> {
    check_width(f, 3)?;
    let mut kept_vars: Vec<usize> = (1..=f.num_vars()).collect();
    let mut kept_clauses: Vec<usize> = (0..f.num_clauses()).collect();
    let mut deleted = Vec::new();
    loop {
        let current = restrict_formula(f, &kept_vars, &kept_clauses);
        let matching = current.incidence_matching();
        if matching.covers_left() {
            return Ok(Irreducible {
                formula: current,
                kept_vars,
                kept_clauses,
                deleted,
                original_vars: f.num_vars(),
            });
        }
        let (u, nu) = matching.deficiency_witness();
        for &c in &nu {
            let mate = matching.right_mate[c].expect("clauses of N(U) are matched");
            let original_var = kept_vars[mate];
            let clause = &f.clauses()[kept_clauses[c]];
            let lit = *clause.iter().find(|&&l| var_of(l) == original_var).expect("matched variable occurs");
            deleted.push((kept_clauses[c], lit));
        }
        kept_vars = (0..kept_vars.len()).filter(|i| u.binary_search(i).is_err()).map(|i| kept_vars[i]).collect();
        kept_clauses = (0..kept_clauses.len())
            .filter(|j| nu.binary_search(j).is_err())
            .map(|j| kept_clauses[j])
            .collect();
    }
}

fn restrict_formula(f: &CnfFormula, vars: &[usize], clauses: &[usize]) -> CnfFormula {
    let mut rename = vec![0i32; f.num_vars() + 1];
    for (i, &v) in vars.iter().enumerate() {
        rename[v] = i as i32 + 1;
    }
    let cs = clauses
        .iter()
        .map(|&j| f.clauses()[j].iter().map(|&l| rename[var_of(l)] * l.signum()).collect())
        .collect();
    CnfFormula::new(vars.len(), cs, f.max_width()).expect("restriction keeps every clause on kept variables")
}

/// Result of [`sat3_to_traceable_sat4`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceableSat4 {
    /// Variable `x1` is the doubling variable `w`; input variable `i` is `x{i+1}`.
    pub formula: CnfFormula,
    /// Hamiltonian path of `G(formula)`, from the first clause to the last.
    pub path: Vec<Node>,
    pub map: ReductionMap,
    /// Variables of the input, before normalisation added fresh ones.
    pub source_vars: usize,
    /// Fresh variables added by the normalisation (each with a unit clause).
    pub fresh_vars: usize,
}

impl TraceableSat4 {
    /// Output assignment back to the input variables.
    pub fn project(&self, assignment: &[bool]) -> Vec<bool> {
        assignment[1..=self.source_vars].to_vec()
    }

    /// Input assignment to the output; `w` and the fresh variables are true.
    pub fn extend(&self, assignment: &[bool]) -> Vec<bool> {
        let mut out = Vec::with_capacity(self.formula.num_vars());
        out.push(true);
        out.extend_from_slice(assignment);
        out.resize(self.formula.num_vars(), true);
        out
    }
}

/// Builds a width-4 formula whose clause/variable graph has a hamiltonian
/// path.
///
/// The input `F` must be irreducible. It is first normalised: an odd number
/// of variables gets a fresh variable `y` with the unit clause `(y)`, an odd
/// number of clauses gets its last clause duplicated, and the last clause is
/// duplicated in pairs until there are more than `n' + 1` clauses. Clauses are
/// ordered so that clause `j` is the one matched to variable `j`, then every
/// clause `C_j` becomes `C_j + w` and `C_j - w`. The path is
/// `c(1,1) v1 c(1,2) c(2,2) v2 c(2,1) c(3,1) v3 c(3,2) ...`, where the
/// variable vertex is present for `j <= n' + 1` and `v(n'+1)` is `w`.
/// Output clauses are numbered in path order.
pub fn sat3_to_traceable_sat4(f: &CnfFormula) -> Result<TraceableSat4> {
    check_width(f, 3)?;
    let matching = f.incidence_matching();
    if let Some(v) = matching.left_mate.iter().position(Option::is_none) {
        return Err(Error::NotIrreducible(v + 1));
    }
    let mut mate: Vec<usize> = matching.left_mate.iter().map(|m| m.unwrap()).collect();
    let mut clauses: Vec<Vec<i32>> = f.clauses().to_vec();
    let mut n = f.num_vars();
    let mut fresh = 0;
    let mut add_fresh = |clauses: &mut Vec<Vec<i32>>, n: &mut usize, mate: &mut Vec<usize>| {
        *n += 1;
        clauses.push(vec![*n as i32]);
        mate.push(clauses.len() - 1);
        fresh += 1;
    };
    if clauses.is_empty() {
        add_fresh(&mut clauses, &mut n, &mut mate);
        add_fresh(&mut clauses, &mut n, &mut mate);
    }
    if n % 2 == 1 {
        add_fresh(&mut clauses, &mut n, &mut mate);
    }
    if clauses.len() % 2 == 1 {
        clauses.push(clauses.last().unwrap().clone());
    }
    while clauses.len() <= n + 1 {
        let last = clauses.last().unwrap().clone();
        clauses.push(last.clone());
        clauses.push(last);
    }
    let m = clauses.len();
    let mut order = mate.clone();
    let mut used = vec![false; m];
    for &c in &mate {
        used[c] = true;
    }
    order.extend((0..m).filter(|&c| !used[c]));

    let mut out: Vec<Vec<i32>> = Vec::with_capacity(2 * m);
    let mut path = Vec::with_capacity(2 * m + n + 1);
    let push_clause = |base: &[i32], w: i32, out: &mut Vec<Vec<i32>>, path: &mut Vec<Node>| {
        let mut c = base.to_vec();
        c.push(w);
        path.push(Node::Clause(out.len()));
        out.push(c);
    };
    for j in 1..=m {
        let base: Vec<i32> = clauses[order[j - 1]].iter().map(|&l| l.signum() * (l.abs() + 1)).collect();
        let (first, second) = if j % 2 == 1 { (1, -1) } else { (-1, 1) };
        push_clause(&base, first, &mut out, &mut path);
        if j <= n {
            path.push(Node::Var(j));
        } else if j == n + 1 {
            path.push(Node::Var(0));
        }
        push_clause(&base, second, &mut out, &mut path);
    }
    let formula = CnfFormula::new(n + 1, out, 4)?;
    IncidenceStructures::new(&formula)
        .check_hamiltonian_path(&path)
        .map_err(|e| Error::ConstructionCheck(format!("emitted path: {e}")))?;

    let source_vars = f.num_vars();
    let mut forward: Vec<(String, String)> = vec![(String::from("(new)"), String::from("x1"))];
    forward.extend((1..=n).map(|i| {
        let src = if i <= source_vars { format!("x{i}") } else { String::from("(fresh)") };
        (src, format!("x{}", i + 1))
    }));
    let map = ReductionMap {
        gadget: "sat3-traceable-sat4",
        size_offset: None,
        threshold: None,
        forward,
        backward: String::from("x{i+1} gives x{i}; x1 and fresh variables are dropped"),
    };
    Ok(TraceableSat4 {
        formula,
        path,
        map,
        source_vars,
        fresh_vars: fresh,
    })
}

/// Result of [`traceable_sat4_to_dag`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceableDag {
    pub digraph: Digraph,
    /// The formula is satisfiable iff the DAG has an in-dominating set of this
    /// size; none is smaller.
    pub k: usize,
    /// Hamiltonian path `Q Q' u` of the DAG.
    pub hamiltonian_path: Vec<usize>,
    pub map: ReductionMap,
    n: usize,
    m: usize,
    /// Input variable `i` is gadget variable `perm[i - 1]`.
    perm: Vec<usize>,
    /// Whether gadget variable 1 has its polarity flipped.
    flip: bool,
    /// Path predecessor of every path vertex (`v_i`, `c_j`).
    pred: Vec<Option<usize>>,
}

impl TraceableDag {
    pub fn var_vertex(&self, i: usize) -> usize {
        i - 1
    }

    pub fn clause_vertex(&self, j: usize) -> usize {
        self.n + j - 1
    }

    pub fn literal_vertex(&self, i: usize, positive: bool) -> usize {
        self.n + self.m + 2 * (i - 1) + usize::from(!positive)
    }

    pub fn sink(&self) -> usize {
        self.n + self.m + 2 * self.n
    }

    fn gadget_value(&self, i: usize, value: bool) -> (usize, bool) {
        let g = self.perm[i - 1];
        (g, value ^ (self.flip && g == 1))
    }

    /// Satisfying assignment of the input formula to an in-dominating set of
    /// size `k`.
    pub fn forward(&self, assignment: &[bool]) -> Vec<usize> {
        let mut z: Vec<usize> = (1..=self.n)
            .map(|i| {
                let (g, val) = self.gadget_value(i, assignment[i - 1]);
                self.literal_vertex(g, val)
            })
            .collect();
        z.push(self.sink());
        z.sort_unstable();
        z
    }

    /// Pushes every path vertex of an in-dominating set onto a literal vertex
    /// it shares with its path predecessor (any literal out-neighbour for the
    /// first vertex of the path). The result is still in-dominating, no
    /// larger, and avoids all `v` and `c` vertices.
    pub fn exchange(&self, set: &[usize]) -> Vec<usize> {
        let lit_lo = self.n + self.m;
        let lit_hi = lit_lo + 2 * self.n;
        let mut member = vec![false; self.digraph.n()];
        for &v in set {
            member[v] = true;
        }
        while let Some(y) = (0..lit_lo).find(|&v| member[v]) {
            let candidates = self.digraph.out_neighbors(y).iter().copied().filter(|&t| (lit_lo..lit_hi).contains(&t));
            let replacement = match self.pred[y] {
                Some(q) => candidates.filter(|&t| self.digraph.has_arc(q, t)).min(),
                None => candidates.min(),
            }
            .expect("path neighbours share a literal vertex");
            member[y] = false;
            member[replacement] = true;
        }
        (0..member.len()).filter(|&v| member[v]).collect()
    }

    /// In-dominating set to an assignment of the input formula, read off the
    /// exchanged set; satisfying whenever the set has size `k`.
    pub fn backward(&self, set: &[usize]) -> Vec<bool> {
        let z = self.exchange(set);
        (1..=self.n)
            .map(|i| {
                let g = self.perm[i - 1];
                let chosen = z.binary_search(&self.literal_vertex(g, true)).is_ok();
                chosen ^ (self.flip && g == 1)
            })
            .collect()
    }
}

/// The DAG gadget for a width-4 formula and a hamiltonian path of its
/// clause/variable graph that starts and ends at clauses.
///
/// Clauses are renumbered `c1..cm` along the path. If the last clause does
/// not contain the literal `x1`, one of its variables is swapped with `x1`
/// and, if that literal is negative, `x1` is negated throughout; both are
/// undone by the solution maps. Vertices: `v_i`, `c_j`, `w_i`, `wbar_i`, `u`,
/// arcs `v_i -> w_i, wbar_i -> u`, `c_j` to the vertices of its literals, the
/// path `Q` oriented from `c1` to `cm`, and `Q' = w1 wbar1 ... wn wbarn`.
pub fn traceable_sat4_to_dag(f: &CnfFormula, path: &[Node]) -> Result<TraceableDag> {
    check_width(f, 4)?;
    IncidenceStructures::new(f).check_hamiltonian_path(path)?;
    match (path.first(), path.last()) {
        (None, _) | (_, None) => return Err(Error::InvalidPath(String::from("path is empty"))),
        (Some(Node::Var(_)), _) | (_, Some(Node::Var(_))) => {
            return Err(Error::InvalidPath(String::from("path must start and end at clauses")))
        }
        _ => {}
    }
    let n = f.num_vars();
    let clause_order: Vec<usize> = path
        .iter()
        .filter_map(|node| match node {
            Node::Clause(j) => Some(*j),
            Node::Var(_) => None,
        })
        .collect();
    let m = clause_order.len();
    let mut position = vec![0; m];
    for (p, &j) in clause_order.iter().enumerate() {
        position[j] = p;
    }

    let last = &f.clauses()[clause_order[m - 1]];
    let (swap, flip) = if last.contains(&1) { (1, false) } else { (var_of(last[0]), last[0] < 0) };
    let perm: Vec<usize> = (1..=n)
        .map(|i| match i {
            1 => swap,
            i if i == swap => 1,
            i => i,
        })
        .collect();
    let transform = |l: i32| -> (usize, bool) {
        let g = perm[var_of(l) - 1];
        (g, (l > 0) ^ (flip && g == 1))
    };

    let lit_vertex = |i: usize, positive: bool| n + m + 2 * (i - 1) + usize::from(!positive);
    let u = n + m + 2 * n;
    let mut d = Digraph::new(u + 1);
    for i in 1..=n {
        d.add_arc(i - 1, lit_vertex(i, true))?;
        d.add_arc(i - 1, lit_vertex(i, false))?;
        d.add_arc(lit_vertex(i, true), u)?;
        d.add_arc(lit_vertex(i, false), u)?;
    }
    for (j, clause) in f.clauses().iter().enumerate() {
        for &l in clause {
            let (g, positive) = transform(l);
            d.add_arc(n + position[j], lit_vertex(g, positive))?;
        }
    }
    let path_vertex = |node: &Node| match *node {
        Node::Clause(j) => n + position[j],
        Node::Var(i) => perm[i] - 1,
    };
    let q: Vec<usize> = path.iter().map(path_vertex).collect();
    let mut pred = vec![None; n + m];
    for w in q.windows(2) {
        d.add_arc(w[0], w[1])?;
        pred[w[1]] = Some(w[0]);
    }
    for t in n + m..u - 1 {
        d.add_arc(t, t + 1)?;
    }
    for i in 1..=n {
        d.set_label(i - 1, format!("v{i}"))?;
        d.set_label(lit_vertex(i, true), format!("w{i}"))?;
        d.set_label(lit_vertex(i, false), format!("wbar{i}"))?;
    }
    for j in 1..=m {
        d.set_label(n + j - 1, format!("c{j}"))?;
    }
    d.set_label(u, "u")?;

    let mut hamiltonian_path = q;
    hamiltonian_path.extend(n + m..=u);
    if !classify(&d).is_acyclic || hamiltonian_path.windows(2).any(|w| !d.has_arc(w[0], w[1])) {
        return Err(Error::ConstructionCheck(String::from("gadget is not a traceable DAG")));
    }

    let mut forward = Vec::new();
    for i in 1..=n {
        let g = perm[i - 1];
        let neg = flip && g == 1;
        let (t, f_) = if neg { ("wbar", "w") } else { ("w", "wbar") };
        forward.push((format!("x{i}=1"), format!("{t}{g}")));
        forward.push((format!("x{i}=0"), format!("{f_}{g}")));
    }
    forward.push((String::from("(always)"), String::from("u")));
    let map = ReductionMap {
        gadget: "traceable-sat4-dag",
        size_offset: None,
        threshold: Some(n + 1),
        forward,
        backward: String::from("move v and c vertices onto literal vertices along the path, then x_i is true iff w_i is chosen"),
    };
    Ok(TraceableDag {
        digraph: d,
        k: n + 1,
        hamiltonian_path,
        map,
        n,
        m,
        perm,
        flip,
        pred,
    })
}

/// The whole chain from a width-3 formula to the DAG gadget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatChain {
    pub irreducible: Irreducible,
    pub traceable: TraceableSat4,
    pub dag: TraceableDag,
}

impl SatChain {
    pub fn new(f: &CnfFormula) -> Result<Self> {
        let irreducible = make_irreducible(f)?;
        let traceable = sat3_to_traceable_sat4(&irreducible.formula)?;
        let dag = traceable_sat4_to_dag(&traceable.formula, &traceable.path)?;
        Ok(Self {
            irreducible,
            traceable,
            dag,
        })
    }

    /// Satisfying assignment of the input to an in-dominating set of size `k`.
    pub fn forward(&self, assignment: &[bool]) -> Vec<usize> {
        let a = self.traceable.extend(&self.irreducible.restrict(assignment));
        self.dag.forward(&a)
    }

    /// In-dominating set of size `k` to a satisfying assignment of the input.
    pub fn backward(&self, set: &[usize]) -> Vec<bool> {
        let a = self.dag.backward(set);
        self.irreducible.lift(&self.traceable.project(&a))
    }
}
