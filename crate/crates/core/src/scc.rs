//! Strong components and the condensation order.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::graph::Digraph;

/// Strong components of a digraph in a topological order of the component
/// DAG: every arc between distinct components goes from a lower index to a
/// higher one. Each component lists its vertices in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condensation {
    pub components: Vec<Vec<usize>>,
    pub comp_of: Vec<usize>,
}

impl Condensation {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    pub fn largest(&self) -> usize {
        self.components.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Strong components of the subdigraph induced by `{v : active[v]}`, in the
/// order Tarjan's algorithm completes them (reverse topological). Vertices
/// inside a component are sorted.
pub fn strong_components_within(d: &Digraph, active: &[bool]) -> Vec<Vec<usize>> {
    const UNVISITED: usize = usize::MAX;
    let n = d.n();
    let mut index = alloc::vec![UNVISITED; n];
    let mut low = alloc::vec![0usize; n];
    let mut on_stack = alloc::vec![false; n];
    let mut stack = Vec::new();
    // (vertex, position in its out-list)
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    let mut comps = Vec::new();

    for root in 0..n {
        if !active[root] || index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let outs = d.out_neighbors(v);
            if let Some(&w) = outs.get(*pos) {
                *pos += 1;
                if !active[w] {
                    continue;
                }
                if index[w] == UNVISITED {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
    }
    comps
}

/// Strong components of `d` in topological order. Among components that are
/// simultaneously available the one with the smallest vertex comes first, so
/// the output is deterministic (for semicomplete digraphs the order is
/// unique anyway).
pub fn scc_decompose(d: &Digraph) -> Condensation {
    let n = d.n();
    let raw = strong_components_within(d, &alloc::vec![true; n]);
    let mut raw_of = alloc::vec![0usize; n];
    for (c, comp) in raw.iter().enumerate() {
        for &v in comp {
            raw_of[v] = c;
        }
    }

    let p = raw.len();
    let mut succ: Vec<Vec<usize>> = alloc::vec![Vec::new(); p];
    let mut indeg = alloc::vec![0usize; p];
    for (u, v) in d.arcs() {
        let (cu, cv) = (raw_of[u], raw_of[v]);
        if cu != cv {
            succ[cu].push(cv);
        }
    }
    for s in succ.iter_mut() {
        s.sort_unstable();
        s.dedup();
        for &c in s.iter() {
            indeg[c] += 1;
        }
    }

    // components are sorted, so comp[0] is the smallest vertex
    let mut ready: BinaryHeap<Reverse<(usize, usize)>> = raw
        .iter()
        .enumerate()
        .filter(|(c, _)| indeg[*c] == 0)
        .map(|(c, comp)| Reverse((comp[0], c)))
        .collect();
    let mut order = Vec::with_capacity(p);
    while let Some(Reverse((_, c))) = ready.pop() {
        order.push(c);
        for &s in &succ[c] {
            indeg[s] -= 1;
            if indeg[s] == 0 {
                ready.push(Reverse((raw[s][0], s)));
            }
        }
    }

    let mut comp_of = alloc::vec![0usize; n];
    let mut slots: Vec<Option<Vec<usize>>> = raw.into_iter().map(Some).collect();
    let components: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let comp = slots[c].take().expect("component emitted twice");
            for &v in &comp {
                comp_of[v] = i;
            }
            comp
        })
        .collect();
    Condensation { components, comp_of }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn empty_digraph() {
        let c = scc_decompose(&Digraph::new(0));
        assert!(c.is_empty());
    }

    #[test]
    fn single_vertex() {
        let c = scc_decompose(&Digraph::new(1));
        assert_eq!(c.components, [[0]]);
    }

    #[test]
    fn transitive_order() {
        // 0 -> everything, ..., listed in a scrambled insertion order
        let d = Digraph::from_arcs(4, [(2, 3), (0, 3), (1, 2), (0, 1), (1, 3), (0, 2)]).unwrap();
        let c = scc_decompose(&d);
        assert_eq!(c.components, [[0], [1], [2], [3]]);
        let reversed = Digraph::from_arcs(4, d.arcs().map(|(u, v)| (v, u))).unwrap();
        assert_eq!(scc_decompose(&reversed).components, [[3], [2], [1], [0]]);
    }

    #[test]
    fn ties_broken_by_smallest_vertex() {
        // two independent cycles {3,4} and {0,5}, both before 1
        let d = Digraph::from_arcs(6, [(3, 4), (4, 3), (0, 5), (5, 0), (3, 1), (5, 1)]).unwrap();
        let c = scc_decompose(&d);
        let expected: Vec<Vec<usize>> = vec![vec![0, 5], vec![2], vec![3, 4], vec![1]];
        assert_eq!(c.components, expected);
    }

    #[test]
    fn deep_path_is_iterative() {
        let n = 20_000;
        let d = Digraph::from_arcs(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
        let c = scc_decompose(&d);
        assert_eq!(c.len(), n);
        assert_eq!(c.components[0], [0]);
    }
}
