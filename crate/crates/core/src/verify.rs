//! Certificate-producing checkers for safe sets, strong safe sets and
//! in-dominating sets.
//!
//! These work on arbitrary digraphs through Tarjan's algorithm and are kept
//! independent of the bitmask kernels the solvers search with, so every
//! solver answer is re-checked by a second route.

use alloc::vec::Vec;

use crate::error::Result;
use crate::graph::Digraph;
use crate::scc::strong_components_within;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Safe,
    StrongSafe,
    InDominating,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Safe sets are non-empty by definition.
    EmptySet,
    /// Condition (i): the outside component has no arc into the set.
    NoArcIntoSet { component: Vec<usize> },
    /// Condition (ii): the outside component has an arc into a strictly
    /// smaller component of `D[S]`.
    ArcIntoSmaller {
        component: Vec<usize>,
        target: Vec<usize>,
        arc: (usize, usize),
    },
    /// `D[S]` is not strong; lists its strong components.
    NotStrong { components: Vec<Vec<usize>> },
    /// A vertex outside `X` with no out-neighbour in `X`.
    Undominated { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CheckKind,
    pub violations: Vec<Violation>,
}

impl Certificate {
    /// True exactly when no violation was found.
    pub fn verdict(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks conditions (i) and (ii) for `set`, listing every violation.
pub fn is_safe_set(d: &Digraph, set: &[usize]) -> Result<Certificate> {
    let member = d.indicator(set)?;
    Ok(Certificate {
        kind: CheckKind::Safe,
        violations: safe_violations(d, &member),
    })
}

pub fn is_strong_safe_set(d: &Digraph, set: &[usize]) -> Result<Certificate> {
    let member = d.indicator(set)?;
    let mut violations = safe_violations(d, &member);
    if !violations.contains(&Violation::EmptySet) {
        let inside = strong_components_within(d, &member);
        if inside.len() > 1 {
            violations.push(Violation::NotStrong { components: inside });
        }
    }
    Ok(Certificate {
        kind: CheckKind::StrongSafe,
        violations,
    })
}

/// Every vertex outside `set` must have an out-neighbour in `set`. The empty
/// set is rejected unless the digraph itself is empty.
pub fn is_in_dominating(d: &Digraph, set: &[usize]) -> Result<Certificate> {
    let member = d.indicator(set)?;
    let mut violations = Vec::new();
    if set.is_empty() && d.n() > 0 {
        violations.push(Violation::EmptySet);
    }
    for v in 0..d.n() {
        if !member[v] && !d.out_neighbors(v).iter().any(|&w| member[w]) {
            violations.push(Violation::Undominated { vertex: v });
        }
    }
    Ok(Certificate {
        kind: CheckKind::InDominating,
        violations,
    })
}

fn safe_violations(d: &Digraph, member: &[bool]) -> Vec<Violation> {
    if !member.iter().any(|&m| m) {
        return alloc::vec![Violation::EmptySet];
    }
    let n = d.n();
    let inside = strong_components_within(d, member);
    let outside_mask: Vec<bool> = member.iter().map(|m| !m).collect();
    let outside = strong_components_within(d, &outside_mask);

    let mut inside_of = alloc::vec![usize::MAX; n];
    for (c, comp) in inside.iter().enumerate() {
        for &v in comp {
            inside_of[v] = c;
        }
    }

    let mut violations = Vec::new();
    for comp in outside {
        let mut reaches = false;
        // first witnessing arc per target component
        let mut reported = alloc::vec![false; inside.len()];
        for &u in &comp {
            for &w in d.out_neighbors(u) {
                if !member[w] {
                    continue;
                }
                reaches = true;
                let c = inside_of[w];
                if !reported[c] && inside[c].len() < comp.len() {
                    reported[c] = true;
                    violations.push(Violation::ArcIntoSmaller {
                        component: comp.clone(),
                        target: inside[c].clone(),
                        arc: (u, w),
                    });
                }
            }
        }
        if !reaches {
            violations.push(Violation::NoArcIntoSet { component: comp });
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn three_cycle() -> Digraph {
        Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn path3() -> Digraph {
        Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn empty_set_has_dedicated_violation() {
        let c = is_safe_set(&three_cycle(), &[]).unwrap();
        assert_eq!(c.violations, [Violation::EmptySet]);
        let c = is_strong_safe_set(&three_cycle(), &[]).unwrap();
        assert_eq!(c.violations, [Violation::EmptySet]);
    }

    #[test]
    fn whole_vertex_set_is_safe() {
        assert!(is_safe_set(&path3(), &[0, 1, 2]).unwrap().verdict());
        assert!(is_strong_safe_set(&three_cycle(), &[0, 1, 2]).unwrap().verdict());
        assert!(is_in_dominating(&path3(), &[0, 1, 2]).unwrap().verdict());
    }

    #[test]
    fn single_vertex_of_three_cycle() {
        // D - {0} is the path 1 -> 2; {1} only reaches 2, which is outside
        let c = is_safe_set(&three_cycle(), &[0]).unwrap();
        assert!(!c.verdict());
        assert_eq!(c.violations, [Violation::NoArcIntoSet { component: vec![1] }]);
    }

    #[test]
    fn strong_check_on_two_of_three_cycle() {
        let d = three_cycle();
        assert!(is_safe_set(&d, &[0, 1]).unwrap().verdict());
        let c = is_strong_safe_set(&d, &[0, 1]).unwrap();
        assert!(!c.verdict());
        assert!(matches!(c.violations[0], Violation::NotStrong { .. }));
    }

    #[test]
    fn transitive_sink_is_safe() {
        let d = Digraph::from_arcs(4, (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j)))).unwrap();
        assert!(is_safe_set(&d, &[3]).unwrap().verdict());
        assert!(is_strong_safe_set(&d, &[3]).unwrap().verdict());
    }

    #[test]
    fn arc_into_smaller_is_reported() {
        // 3-cycle {0,1,2} with every vertex pointing at 3
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]).unwrap();
        let c = is_safe_set(&d, &[3]).unwrap();
        assert_eq!(
            c.violations,
            [Violation::ArcIntoSmaller {
                component: vec![0, 1, 2],
                target: vec![3],
                arc: (0, 3)
            }]
        );
    }

    #[test]
    fn in_dominating_on_path() {
        let d = path3();
        let c = is_in_dominating(&d, &[2]).unwrap();
        assert_eq!(c.violations, [Violation::Undominated { vertex: 0 }]);
        assert!(is_in_dominating(&d, &[0, 2]).unwrap().verdict());
        assert!(!is_in_dominating(&d, &[]).unwrap().verdict());
        assert!(is_in_dominating(&Digraph::new(0), &[]).unwrap().verdict());
    }

    #[test]
    fn out_of_range_vertex() {
        assert!(is_safe_set(&path3(), &[5]).is_err());
        assert!(is_in_dominating(&path3(), &[3]).is_err());
    }
}
