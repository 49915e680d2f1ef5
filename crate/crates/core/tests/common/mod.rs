//! Reference implementations used as test oracles. Everything here works
//! from the arc list alone, through reachability masks, and shares no code
//! with the library's own checkers.

#![allow(dead_code)]

use safeset_core::rng::SplitMix64;
use safeset_core::Digraph;

pub struct Oracle {
    pub n: usize,
    out: Vec<u64>,
}

pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

pub fn mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

/// Masks with `k` bits among the low `n`, in increasing numeric order.
pub fn combinations(n: usize, k: usize) -> Vec<u64> {
    let mut all = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: u64, all: &mut Vec<u64>) {
        if k == 0 {
            all.push(cur);
            return;
        }
        for v in start..=n - k {
            rec(v + 1, n, k - 1, cur | 1 << v, all);
        }
    }
    if k <= n {
        rec(0, n, k, 0, &mut all);
    }
    all.sort_unstable();
    all
}

impl Oracle {
    pub fn new(d: &Digraph) -> Self {
        assert!(d.n() <= 64);
        let mut out = vec![0u64; d.n()];
        for (u, v) in d.arcs() {
            out[u] |= 1 << v;
        }
        Self { n: d.n(), out }
    }

    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1 << self.n) - 1
        }
    }

    fn reach(&self, v: usize, within: u64) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.out[u] & within;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Strong components of the subdigraph induced by `within`.
    pub fn sccs(&self, within: u64) -> Vec<u64> {
        let reach: Vec<u64> = (0..self.n).map(|v| if within >> v & 1 == 1 { self.reach(v, within) } else { 0 }).collect();
        let mut done = 0u64;
        let mut comps = Vec::new();
        for v in bits(within) {
            if done >> v & 1 == 1 {
                continue;
            }
            let comp = bits(reach[v]).filter(|&u| reach[u] >> v & 1 == 1).fold(0u64, |m, u| m | 1 << u);
            done |= comp;
            comps.push(comp);
        }
        comps
    }

    fn out_of(&self, set: u64) -> u64 {
        bits(set).fold(0, |m, v| m | self.out[v])
    }

    pub fn is_safe(&self, s: u64) -> bool {
        if s == 0 {
            return false;
        }
        let inside = self.sccs(s);
        self.sccs(self.all() & !s).into_iter().all(|m| {
            let targets: Vec<u64> = inside.iter().copied().filter(|&c| self.out_of(m) & c != 0).collect();
            !targets.is_empty() && targets.iter().all(|c| m.count_ones() <= c.count_ones())
        })
    }

    pub fn is_strong(&self, s: u64) -> bool {
        s != 0 && self.sccs(s).len() == 1
    }

    pub fn smallest_scc(&self, s: u64) -> usize {
        self.sccs(s).iter().map(|c| c.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn is_in_dominating(&self, x: u64) -> bool {
        bits(self.all() & !x).all(|v| self.out[v] & x != 0)
    }

    pub fn is_acyclic(&self, within: u64) -> bool {
        self.sccs(within).iter().all(|c| c.count_ones() == 1) && bits(within).all(|v| self.out[v] >> v & 1 == 0)
    }

    /// First set (by size, then mask value) of size `min..=max` satisfying `pred`.
    pub fn first(&self, min: usize, max: usize, mut pred: impl FnMut(u64) -> bool) -> Option<u64> {
        (min..=max.min(self.n)).find_map(|k| combinations(self.n, k).into_iter().find(|&s| pred(s)))
    }

    pub fn min_safe(&self) -> usize {
        self.first(1, self.n, |s| self.is_safe(s)).unwrap().count_ones() as usize
    }

    pub fn min_strong_safe(&self) -> Option<usize> {
        self.first(1, self.n, |s| self.is_strong(s) && self.is_safe(s)).map(|s| s.count_ones() as usize)
    }

    pub fn gamma(&self) -> usize {
        self.first(0, self.n, |s| self.is_in_dominating(s)).unwrap().count_ones() as usize
    }

    pub fn min_fvs(&self) -> usize {
        self.first(0, self.n, |x| self.is_acyclic(self.all() & !x)).unwrap().count_ones() as usize
    }

    /// Smallest safe set whose smallest strong component has exactly `b` vertices.
    pub fn min_safe_with_smallest(&self, b: usize) -> Option<usize> {
        self.first(1, self.n, |s| self.is_safe(s) && self.smallest_scc(s) == b).map(|s| s.count_ones() as usize)
    }

    /// Largest independent set of the underlying graph.
    pub fn alpha(&self) -> usize {
        let adj: Vec<u64> = (0..self.n)
            .map(|v| self.out[v] | (0..self.n).filter(|&u| self.out[u] >> v & 1 == 1).fold(0, |m, u| m | 1 << u))
            .collect();
        (0..=self.n)
            .rev()
            .find(|&k| combinations(self.n, k).into_iter().any(|s| bits(s).all(|v| adj[v] & s == 0)))
            .unwrap()
    }
}

/// Every pair joined by at least one arc, orientation and digons random.
pub fn random_semicomplete(n: usize, digon_percent: u64, rng: &mut SplitMix64) -> Digraph {
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            match rng.below(100) {
                x if x < digon_percent => {
                    d.add_arc(u, v).unwrap();
                    d.add_arc(v, u).unwrap();
                }
                x if x % 2 == 0 => {
                    d.add_arc(u, v).unwrap();
                }
                _ => {
                    d.add_arc(v, u).unwrap();
                }
            }
        }
    }
    d
}

/// Random DAG: arcs follow a random vertex order, each present with the given percentage.
pub fn random_dag(n: usize, percent: u64, rng: &mut SplitMix64) -> Digraph {
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    let mut d = Digraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.below(100) < percent {
                d.add_arc(order[i], order[j]).unwrap();
            }
        }
    }
    d
}

/// Arbitrary digraph with each ordered pair present with the given percentage.
pub fn random_digraph(n: usize, percent: u64, rng: &mut SplitMix64) -> Digraph {
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.below(100) < percent {
                d.add_arc(u, v).unwrap();
            }
        }
    }
    d
}

pub const WORKED_EXAMPLE_NAMES: [&str; 15] =
    ["a1", "a2", "a3", "b1", "b2", "b3", "b4", "b5", "c1", "c2", "c3", "d1", "d2", "d3", "d4"];

/// The worked example: four strong components in chain order with all
/// arcs between them going forward.
pub fn worked_example() -> Digraph {
    let id = |name: &str| WORKED_EXAMPLE_NAMES.iter().position(|&x| x == name).unwrap();
    let inner = [
        ("a1", "a2"), ("a2", "a3"), ("a3", "a1"),
        ("b2", "b3"), ("b3", "b4"), ("b4", "b5"), ("b2", "b4"), ("b3", "b5"), ("b2", "b5"),
        ("b5", "b1"), ("b4", "b1"), ("b1", "b2"), ("b1", "b3"),
        ("c1", "c2"), ("c3", "c1"), ("c2", "c3"), ("c3", "c2"),
        ("d1", "d2"), ("d2", "d3"), ("d3", "d4"), ("d4", "d1"), ("d1", "d3"), ("d2", "d4"),
    ];
    let group = |v: usize| WORKED_EXAMPLE_NAMES[v].as_bytes()[0];
    let mut d = Digraph::new(15);
    for (a, b) in inner {
        d.add_arc(id(a), id(b)).unwrap();
    }
    for u in 0..15 {
        for v in 0..15 {
            if group(u) < group(v) {
                d.add_arc(u, v).unwrap();
            }
        }
    }
    for (v, name) in WORKED_EXAMPLE_NAMES.iter().enumerate() {
        d.set_label(v, *name).unwrap();
    }
    d
}
