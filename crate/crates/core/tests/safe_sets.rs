mod common;

use common::{worked_example, mask, random_digraph, random_semicomplete, Oracle};
use proptest::prelude::*;
use safeset_core::generators::{chain_components, circulant_tk, transitive};
use safeset_core::rng::SplitMix64;
use safeset_core::solvers::{dp_tables, min_safe_set, min_strong_safe_set, Method};
use safeset_core::verify::is_safe_set;
use safeset_core::{Digraph, SetSize};

const INF: SetSize = SetSize::Infeasible;

fn row(values: [Option<usize>; 5]) -> Vec<SetSize> {
    values.iter().map(|v| v.map_or(INF, SetSize::Finite)).collect()
}

#[test]
fn worked_example_tables() {
    let d = worked_example();
    let t = dp_tables(&d).unwrap();
    assert_eq!(t.p(), 4);
    assert_eq!(t.lsc(), 5);
    assert_eq!(t.row(4), row([Some(2), None, Some(3), Some(4), None]));
    assert_eq!(t.row(3), row([Some(3), Some(5), Some(3), Some(4), None]));
    assert_eq!(t.row(2), row([Some(4), Some(8), Some(6), Some(8), None]));
    assert_eq!(t.row(1), row([Some(5), Some(11), Some(6), Some(8), None]));
    assert_eq!(t.best().size, SetSize::Finite(5));
    // 2^3 + 2^5 + 2^3 + 2^4
    assert_eq!(t.subsets_examined(), 64);
}

#[test]
fn worked_example_cells_are_certified() {
    let d = worked_example();
    let t = dp_tables(&d).unwrap();
    let comps = t.condensation().components.clone();
    for a in 1..=t.p() {
        let va: Vec<usize> = comps[a - 1..].iter().flatten().copied().collect();
        let sub = d.induced(&va).unwrap();
        let o = Oracle::new(&sub);
        for b in 1..=t.lsc() {
            let Some(set) = t.set(a, b) else {
                assert_eq!(t.size(a, b), INF);
                continue;
            };
            assert_eq!(SetSize::Finite(set.len()), t.size(a, b));
            let local: Vec<usize> = set.iter().map(|v| va.iter().position(|x| x == v).unwrap()).collect();
            assert!(o.is_safe(mask(&local)), "S*({a},{b}) not safe");
            assert_eq!(o.smallest_scc(mask(&local)), b);
            assert_eq!(o.min_safe_with_smallest(b), Some(set.len()), "S*({a},{b}) not minimum");
        }
    }
}

#[test]
fn small_examples() {
    for n in 1..=6 {
        assert_eq!(min_safe_set(&transitive(n), Method::Auto).unwrap().size, SetSize::Finite(1));
    }
    let c3 = circulant_tk(1);
    assert_eq!(min_safe_set(&c3, Method::Brute).unwrap().size, SetSize::Finite(2));
    let two = chain_components(&[c3.clone(), c3]).unwrap();
    assert_eq!(min_safe_set(&two, Method::Dp).unwrap().size, SetSize::Finite(3));
    assert_eq!(Oracle::new(&two).min_safe(), 3);
    let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(min_strong_safe_set(&path).unwrap().size, INF);
}

#[test]
fn dp_matches_oracle_on_random_semicomplete() {
    let mut rng = SplitMix64::new(20240601);
    for i in 0..150 {
        let n = 1 + rng.below(11) as usize;
        let d = random_semicomplete(n, if i % 2 == 0 { 0 } else { 25 }, &mut rng);
        let dp = min_safe_set(&d, Method::Dp).unwrap();
        assert_eq!(dp.size, SetSize::Finite(Oracle::new(&d).min_safe()), "instance {i}");
        assert!(is_safe_set(&d, &dp.set).unwrap().verdict());
    }
}

#[test]
fn strong_rows_match_oracle_per_column() {
    let mut rng = SplitMix64::new(77);
    let mut checked = 0;
    while checked < 40 {
        let n = 2 + rng.below(7) as usize;
        let d = random_semicomplete(n, 20, &mut rng);
        let t = dp_tables(&d).unwrap();
        if t.p() != 1 {
            continue;
        }
        checked += 1;
        let o = Oracle::new(&d);
        for b in 1..=n {
            let expected = o.min_safe_with_smallest(b).map_or(INF, SetSize::Finite);
            assert_eq!(t.size(1, b), expected, "n={n} b={b}");
        }
    }
}

#[test]
fn dp_rows_are_certified_on_random_chains() {
    let mut rng = SplitMix64::new(5);
    for _ in 0..60 {
        let d = random_semicomplete(3 + rng.below(8) as usize, 10, &mut rng);
        let t = dp_tables(&d).unwrap();
        let comps = t.condensation().components.clone();
        for a in 1..=t.p() {
            let va: Vec<usize> = comps[a - 1..].iter().flatten().copied().collect();
            let o = Oracle::new(&d.induced(&va).unwrap());
            for b in 1..=t.lsc() {
                if let Some(set) = t.set(a, b) {
                    let local: Vec<usize> = set.iter().map(|v| va.iter().position(|x| x == v).unwrap()).collect();
                    assert!(o.is_safe(mask(&local)));
                    assert_eq!(o.smallest_scc(mask(&local)), b);
                }
                assert_eq!(t.size(a, b), o.min_safe_with_smallest(b).map_or(INF, SetSize::Finite));
            }
        }
    }
}

#[test]
fn safe_number_at_most_strong_safe_number() {
    let mut rng = SplitMix64::new(99);
    for _ in 0..200 {
        let n = 1 + rng.below(9) as usize;
        let d = random_digraph(n, 20 + rng.below(50), &mut rng);
        let s = min_safe_set(&d, Method::Brute).unwrap();
        let ss = min_strong_safe_set(&d).unwrap();
        let o = Oracle::new(&d);
        assert_eq!(s.size, SetSize::Finite(o.min_safe()));
        assert_eq!(ss.size, o.min_strong_safe().map_or(INF, SetSize::Finite));
        assert!(s.size <= ss.size);
    }
}

fn arb_semicomplete() -> impl Strategy<Value = (Digraph, Vec<usize>)> {
    (1usize..9, any::<u64>()).prop_flat_map(|(n, seed)| {
        let d = random_semicomplete(n, 25, &mut SplitMix64::new(seed));
        (Just(d), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn safe_number_is_invariant_under_relabeling((d, perm) in arb_semicomplete()) {
        let moved = d.relabel(&perm).unwrap();
        let a = min_safe_set(&d, Method::Dp).unwrap().size;
        let b = min_safe_set(&moved, Method::Dp).unwrap().size;
        prop_assert_eq!(a, b);
        prop_assert_eq!(b, min_safe_set(&moved, Method::Brute).unwrap().size);
    }
}
