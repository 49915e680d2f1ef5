use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite simple digraph on the vertices `0..n`.
///
/// Self-loops are rejected and parallel arcs collapse to one. Digons (both
/// `u -> v` and `v -> u`) are allowed, which is what makes semicomplete
/// digraphs representable. Labels are decorative and never affect any
/// computation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    arcs: usize,
    labels: BTreeMap<usize, String>,
}

impl Digraph {
    /// Edgeless digraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            out: alloc::vec![Vec::new(); n],
            inn: alloc::vec![Vec::new(); n],
            arcs: 0,
            labels: BTreeMap::new(),
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Self::new(n);
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn is_empty(&self) -> bool {
        self.out.is_empty()
    }

    /// Adds `u -> v`. Returns `Ok(false)` when the arc was already present.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.out[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.out[u].insert(pos, v);
                let pos = self.inn[v].binary_search(&u).unwrap_err();
                self.inn[v].insert(pos, u);
                self.arcs += 1;
                Ok(true)
            }
        }
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.out.push(Vec::new());
        self.inn.push(Vec::new());
        self.out.len() - 1
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.out[u].binary_search(&v).is_ok()
    }

    /// True when at least one of `u -> v`, `v -> u` is present.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        self.labels.insert(v, label.into());
        Ok(())
    }

    /// Label of `v`, falling back to its numeric id.
    pub fn display_name(&self, v: usize) -> String {
        match self.label(v) {
            Some(l) => String::from(l),
            None => alloc::format!("{v}"),
        }
    }

    /// Looks a vertex up by label.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels
            .iter()
            .find(|(_, l)| l.as_str() == label)
            .map(|(&v, _)| v)
    }

    /// Checks that every id in `set` is a vertex.
    pub fn check_vertices(&self, set: &[usize]) -> Result<()> {
        match set.iter().find(|&&v| v >= self.n()) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n: self.n() }),
            None => Ok(()),
        }
    }

    /// Membership vector for `set`.
    pub fn indicator(&self, set: &[usize]) -> Result<Vec<bool>> {
        self.check_vertices(set)?;
        let mut member = alloc::vec![false; self.n()];
        for &v in set {
            member[v] = true;
        }
        Ok(member)
    }

    /// Subdigraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`. Labels are carried over.
    pub fn induced(&self, vertices: &[usize]) -> Result<Digraph> {
        self.check_vertices(vertices)?;
        let mut local = alloc::vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut d = Digraph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.out[v] {
                if local[w] != usize::MAX {
                    d.add_arc(i, local[w])?;
                }
            }
            if let Some(l) = self.label(v) {
                d.labels.insert(i, String::from(l));
            }
        }
        Ok(d)
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        let n = self.n();
        let mut seen = alloc::vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidParameter {
                family: "relabel",
                constraint: alloc::format!("permutation has length {} but n = {n}", perm.len()),
            });
        }
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidParameter {
                    family: "relabel",
                    constraint: String::from("not a permutation"),
                });
            }
            seen[p] = true;
        }
        let mut d = Digraph::new(n);
        for (u, v) in self.arcs() {
            d.add_arc(perm[u], perm[v])?;
        }
        for (&v, l) in &self.labels {
            d.labels.insert(perm[v], l.clone());
        }
        Ok(d)
    }

    /// Out-neighbourhoods as bitmasks, for digraphs on at most 64 vertices.
    pub fn out_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.out
                .iter()
                .map(|outs| outs.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect(),
        )
    }
}
