//! Structural parameters: classification flags, strong connectivity,
//! independence number and the size of a largest strong component.

use alloc::vec::Vec;

use crate::flow::SplitNetwork;
use crate::graph::Digraph;
use crate::scc::scc_decompose;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    pub is_tournament: bool,
    pub is_semicomplete: bool,
    pub is_acyclic: bool,
    pub is_strong: bool,
    pub is_oriented: bool,
}

pub fn is_semicomplete(d: &Digraph) -> bool {
    let n = d.n();
    (0..n).all(|u| d.out_degree(u) + d.in_degree(u) >= n - 1 && (u + 1..n).all(|v| d.adjacent(u, v)))
}

pub fn is_oriented(d: &Digraph) -> bool {
    d.arcs().all(|(u, v)| !d.has_arc(v, u))
}

pub fn is_tournament(d: &Digraph) -> bool {
    is_oriented(d) && is_semicomplete(d)
}

pub fn classify(d: &Digraph) -> Classification {
    let semi = is_semicomplete(d);
    let oriented = is_oriented(d);
    let cond = scc_decompose(d);
    Classification {
        is_tournament: semi && oriented,
        is_semicomplete: semi,
        is_acyclic: cond.components.iter().all(|c| c.len() == 1),
        is_strong: cond.len() == 1,
        is_oriented: oriented,
    }
}

/// Strong connectivity: the largest `k` such that deleting any fewer than
/// `k` vertices leaves a strong digraph.
///
/// Computed as the minimum, over ordered pairs `(u, v)` with no arc
/// `u -> v`, of the number of internally disjoint `u -> v` paths; `n - 1` when
/// every ordered pair is an arc. The one-vertex digraph has connectivity 0.
pub fn vertex_connectivity(d: &Digraph) -> usize {
    let n = d.n();
    if n <= 1 {
        return 0;
    }
    let mut net = SplitNetwork::new(d);
    let mut best = n - 1;
    for u in 0..n {
        for v in 0..n {
            if u == v || d.has_arc(u, v) {
                continue;
            }
            best = best.min(net.disjoint_paths(u, v, best));
            if best == 0 {
                return 0;
            }
        }
    }
    best
}

/// Largest set of pairwise non-adjacent vertices (branch and bound).
pub fn independence_number(d: &Digraph) -> usize {
    let n = d.n();
    let neighbours: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| u != v && d.adjacent(u, v)).collect())
        .collect();
    let mut best = 0;
    let candidates: Vec<usize> = (0..n).collect();
    grow_independent(&neighbours, 0, candidates, &mut best);
    best
}

fn grow_independent(nb: &[Vec<bool>], size: usize, candidates: Vec<usize>, best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.len() <= *best {
        return;
    }
    // branch on the candidate with most neighbours among the candidates
    let (pos, &v) = candidates
        .iter()
        .enumerate()
        .max_by_key(|(_, &v)| candidates.iter().filter(|&&w| nb[v][w]).count())
        .expect("non-empty");
    let with_v: Vec<usize> = candidates.iter().copied().filter(|&w| w != v && !nb[v][w]).collect();
    grow_independent(nb, size + 1, with_v, best);
    let mut without_v = candidates;
    without_v.remove(pos);
    grow_independent(nb, size, without_v, best);
}

/// Size of a largest strong component (0 for the empty digraph).
pub fn lsc(d: &Digraph) -> usize {
    scc_decompose(d).largest()
}
