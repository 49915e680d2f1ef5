use alloc::vec::Vec;

use super::{Method, SolveResult};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::mask::{subsets_of_size, vertices_of, MaskGraph};
use crate::structure::{classify, independence_number, is_tournament};
use crate::verify;

/// First mask (by cardinality, then numeric value) with `|mask|` in
/// `min_size..=max_size` satisfying `accept`, plus the number of masks tried.
pub fn first_by_cardinality<F>(n: usize, min_size: usize, max_size: usize, mut accept: F) -> (Option<u64>, u64)
where
    F: FnMut(u64) -> bool,
{
    let mut examined = 0u64;
    for k in min_size..=max_size.min(n) {
        for mask in subsets_of_size(n, k) {
            examined += 1;
            if accept(mask) {
                return (Some(mask), examined);
            }
        }
    }
    (None, examined)
}

fn mask_graph(d: &Digraph) -> Result<MaskGraph> {
    if d.is_empty() {
        return Err(Error::EmptyDigraph);
    }
    MaskGraph::new(d)
}

pub(crate) fn min_safe_set_brute(d: &Digraph) -> Result<SolveResult> {
    let g = mask_graph(d)?;
    let (hit, examined) = first_by_cardinality(g.n(), 1, g.n(), |s| g.is_safe(s));
    // V(D) is always safe
    let set = hit.expect("the whole vertex set is safe");
    Ok(SolveResult::found(vertices_of(set), Method::Brute, examined))
}

/// Minimum strong safe set by brute force; infeasible when none exists.
pub fn min_strong_safe_set(d: &Digraph) -> Result<SolveResult> {
    let g = mask_graph(d)?;
    let (hit, examined) = first_by_cardinality(g.n(), 1, g.n(), |s| g.is_strong(s) && g.is_safe(s));
    let Some(set) = hit else {
        return Ok(SolveResult::infeasible(Method::Brute, examined));
    };
    let set = vertices_of(set);
    if !verify::is_strong_safe_set(d, &set)?.verdict() {
        return Err(Error::SelfCheck("minimum strong safe set failed verification"));
    }
    Ok(SolveResult::found(set, Method::Brute, examined))
}

/// Minimum in-dominating set.
///
/// For acyclic inputs without an explicit cap the search is limited to sets
/// of size at most the independence number, which always contains an
/// in-dominating set. If an explicit cap turns out to be too small the search
/// continues past it, so the result is always a minimum.
pub fn min_indominating(d: &Digraph, alpha_cap: Option<usize>) -> Result<SolveResult> {
    let g = mask_graph(d)?;
    let n = g.n();
    let cap = match alpha_cap {
        Some(c) => c.max(1),
        None if classify(d).is_acyclic => independence_number(d),
        None => n,
    };
    let all = g.all();
    let (mut hit, mut examined) = first_by_cardinality(n, 1, cap, |x| g.is_in_dominating(x, all));
    if hit.is_none() && cap < n {
        let (rest, more) = first_by_cardinality(n, cap + 1, n, |x| g.is_in_dominating(x, all));
        hit = rest;
        examined += more;
    }
    let set = vertices_of(hit.expect("the whole vertex set is in-dominating"));
    if !verify::is_in_dominating(d, &set)?.verdict() {
        return Err(Error::SelfCheck("minimum in-dominating set failed verification"));
    }
    Ok(SolveResult::found(set, Method::Brute, examined))
}

/// Minimum feedback vertex set by brute force (size 0 for acyclic inputs).
pub fn min_feedback_vertex_set(d: &Digraph) -> Result<SolveResult> {
    let g = MaskGraph::new(d)?;
    let all = g.all();
    let (hit, examined) = first_by_cardinality(g.n(), 0, g.n(), |x| g.is_acyclic(all & !x));
    let set: Vec<usize> = vertices_of(hit.expect("deleting everything leaves an acyclic digraph"));
    let mut keep = alloc::vec![true; d.n()];
    for &v in &set {
        keep[v] = false;
    }
    let rest: Vec<usize> = (0..d.n()).filter(|&v| keep[v]).collect();
    if !classify(&d.induced(&rest)?).is_acyclic {
        return Err(Error::SelfCheck("feedback vertex set leaves a cycle"));
    }
    Ok(SolveResult::found(set, Method::Brute, examined))
}

/// Same as [`min_feedback_vertex_set`] but insists on a tournament.
pub fn min_feedback_vertex_set_tournament(d: &Digraph) -> Result<SolveResult> {
    if !is_tournament(d) {
        return Err(Error::NotTournament);
    }
    min_feedback_vertex_set(d)
}
