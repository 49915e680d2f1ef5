//! Unit-capacity max flow on the vertex-split network of a digraph.
//!
//! Vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1` joined by a
//! capacity-1 edge, and each arc `u -> v` becomes `u_out -> v_in`. A flow from
//! `s_out` to `t_in` then counts internally vertex-disjoint `s -> t` paths.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::graph::Digraph;

#[derive(Clone, Copy)]
struct Edge {
    to: usize,
    cap: u32,
}

pub struct SplitNetwork {
    edges: Vec<Edge>,
    initial: Vec<u32>,
    adj: Vec<Vec<usize>>,
    parent: Vec<usize>,
}

impl SplitNetwork {
    pub fn new(d: &Digraph) -> Self {
        let n = d.n();
        let mut net = Self {
            edges: Vec::new(),
            initial: Vec::new(),
            adj: alloc::vec![Vec::new(); 2 * n],
            parent: alloc::vec![usize::MAX; 2 * n],
        };
        for v in 0..n {
            net.add_edge(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in d.arcs() {
            net.add_edge(2 * u + 1, 2 * v, 1);
        }
        net.initial = net.edges.iter().map(|e| e.cap).collect();
        net
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.edges.len());
        self.edges.push(Edge { to, cap });
        self.adj[to].push(self.edges.len());
        self.edges.push(Edge { to: from, cap: 0 });
    }

    /// Number of internally vertex-disjoint `s -> t` paths, stopping early
    /// once `limit` paths are found.
    pub fn disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        for (e, &c) in self.edges.iter_mut().zip(&self.initial) {
            e.cap = c;
        }
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut queue = VecDeque::new();
        while flow < limit {
            self.parent.iter_mut().for_each(|p| *p = usize::MAX);
            self.parent[source] = usize::MAX - 1;
            queue.clear();
            queue.push_back(source);
            'bfs: while let Some(x) = queue.pop_front() {
                for &e in &self.adj[x] {
                    let Edge { to, cap } = self.edges[e];
                    if cap > 0 && self.parent[to] == usize::MAX {
                        self.parent[to] = e;
                        if to == sink {
                            break 'bfs;
                        }
                        queue.push_back(to);
                    }
                }
            }
            if self.parent[sink] == usize::MAX {
                break;
            }
            let mut x = sink;
            while x != source {
                let e = self.parent[x];
                self.edges[e].cap -= 1;
                self.edges[e ^ 1].cap += 1;
                x = self.edges[e ^ 1].to;
            }
            flow += 1;
        }
        flow
    }
}
