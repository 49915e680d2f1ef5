mod common;

use common::{bits, mask, Oracle};
use safeset_core::generators::{circulant_tk, random_tournament, transitive};
use safeset_core::reductions::*;
use safeset_core::rng::SplitMix64;
use safeset_core::solvers::{min_feedback_vertex_set, min_safe_set, Method};
use safeset_core::verify::{is_in_dominating, is_safe_set};
use safeset_core::{Error, SetSize};

fn min_cover(inst: &SetCoverInstance) -> usize {
    (0..=inst.ground_size)
        .find(|&k| {
            common::combinations(inst.ground_size, k)
                .into_iter()
                .any(|z| inst.sets.iter().all(|s| s.iter().any(|&e| z >> (e - 1) & 1 == 1)))
        })
        .unwrap()
}

fn random_cover(rng: &mut SplitMix64) -> SetCoverInstance {
    let ground = 1 + rng.below(6) as usize;
    let sets = (0..1 + rng.below(5))
        .map(|_| {
            let mut s: Vec<usize> = (1..=ground).filter(|_| rng.coin()).collect();
            if s.is_empty() {
                s.push(1 + rng.below(ground as u64) as usize);
            }
            s
        })
        .collect();
    SetCoverInstance::new(ground, sets).unwrap()
}

#[test]
fn set_cover_equivalence() {
    let mut rng = SplitMix64::new(11);
    for _ in 0..100 {
        let inst = random_cover(&mut rng);
        let g = setcover_to_indominating(&inst).unwrap();
        assert_eq!(g.digraph.n(), inst.sets.len() + inst.ground_size + 1);
        let o = Oracle::new(&g.digraph);
        let gamma = o.gamma();
        assert_eq!(gamma, min_cover(&inst) + 1);
        let best = o.first(gamma, gamma, |x| o.is_in_dominating(x)).unwrap();
        let cover = g.backward(&bits(best).collect::<Vec<_>>());
        assert!(inst.is_cover(&cover));
        assert!(cover.len() < gamma);
        let back = g.forward(&cover);
        assert!(is_in_dominating(&g.digraph, &back).unwrap().verdict());
    }
}

#[test]
fn set_cover_examples() {
    let inst = SetCoverInstance::new(1, vec![vec![1]]).unwrap();
    let g = setcover_to_indominating(&inst).unwrap();
    assert_eq!(Oracle::new(&g.digraph).gamma(), 2);
    assert_eq!(g.forward(&[1]), [g.element_vertex(1), g.sink()]);
    assert_eq!(g.map.size_offset, Some(1));
}

#[test]
fn fvs_equivalence() {
    for seed in 0..60 {
        let n = 1 + (seed as usize % 8);
        let t = random_tournament(n, seed);
        let g = fvs_to_safeset(&t).unwrap();
        let fvs = Oracle::new(&t).min_fvs();
        assert_eq!(Oracle::new(&g.digraph).min_safe(), fvs + 1);
        let f = min_feedback_vertex_set(&t).unwrap();
        assert_eq!(f.size, SetSize::Finite(fvs));
        assert!(is_safe_set(&g.digraph, &g.forward(&f.set)).unwrap().verdict());
        let s = min_safe_set(&g.digraph, Method::Dp).unwrap();
        let back = g.backward(&s.set);
        let ot = Oracle::new(&t);
        assert!(ot.is_acyclic(ot.all() & !mask(&back)));
    }
    let g = fvs_to_safeset(&circulant_tk(3)).unwrap();
    let f = min_feedback_vertex_set(&circulant_tk(3)).unwrap();
    assert_eq!(min_safe_set(&g.digraph, Method::Dp).unwrap().size, SetSize::Finite(f.size.finite().unwrap() + 1));
    let g = fvs_to_safeset(&transitive(5)).unwrap();
    assert!(Oracle::new(&g.digraph).is_safe(mask(&[g.x])));
}

fn random_cnf(rng: &mut SplitMix64) -> CnfFormula {
    let n = 1 + rng.below(4) as usize;
    let clauses = (0..1 + rng.below(6))
        .map(|_| {
            let width = 1 + rng.below(3.min(n as u64)) as usize;
            let mut vars: Vec<usize> = (1..=n).collect();
            rng.shuffle(&mut vars);
            vars[..width].iter().map(|&v| if rng.coin() { v as i32 } else { -(v as i32) }).collect()
        })
        .collect();
    CnfFormula::new(n, clauses, 3).unwrap()
}

#[test]
fn irreducible_examples() {
    let one = CnfFormula::new(3, vec![vec![1, 2, 3]], 3).unwrap();
    let r = make_irreducible(&one).unwrap();
    assert_eq!((r.formula.num_vars(), r.formula.num_clauses()), (0, 0));
    let empty = CnfFormula::new(0, vec![], 3).unwrap();
    assert_eq!(make_irreducible(&empty).unwrap().formula, empty);
    assert!(matches!(sat3_to_traceable_sat4(&one), Err(Error::NotIrreducible(_))));
}

#[test]
fn irreducible_output_is_matched_and_equisatisfiable() {
    let mut rng = SplitMix64::new(8);
    for _ in 0..300 {
        let f = random_cnf(&mut rng);
        let r = make_irreducible(&f).unwrap();
        let inc = IncidenceStructures::new(&r.formula);
        assert!(inc.matching.is_some());
        let sat = f.solve_brute().unwrap();
        let sat_r = r.formula.solve_brute().unwrap();
        assert_eq!(sat.is_some(), sat_r.is_some());
        if let Some(a) = sat_r {
            assert!(f.is_satisfied_by(&r.lift(&a)));
        }
    }
}

#[test]
fn traceable_sat4_preserves_satisfiability() {
    let mut rng = SplitMix64::new(21);
    for _ in 0..300 {
        let f = make_irreducible(&random_cnf(&mut rng)).unwrap().formula;
        let t = sat3_to_traceable_sat4(&f).unwrap();
        let out = &t.formula;
        assert_eq!(out.num_clauses() % 4, 0);
        assert!(out.num_clauses() / 2 > out.num_vars());
        assert!(out.clauses().iter().all(|c| c.len() <= 4));
        IncidenceStructures::new(out).check_hamiltonian_path(&t.path).unwrap();
        let sat = f.solve_brute().unwrap();
        let sat4 = out.solve_brute().unwrap();
        assert_eq!(sat.is_some(), sat4.is_some());
        if let Some(a) = sat4 {
            assert!(f.is_satisfied_by(&t.project(&a)));
        }
        if let Some(a) = sat {
            assert!(out.is_satisfied_by(&t.extend(&a)));
        }
    }
}

#[test]
fn sat_chain_equivalence() {
    let mut rng = SplitMix64::new(3);
    for _ in 0..25 {
        let f = random_cnf(&mut rng);
        let chain = SatChain::new(&f).unwrap();
        let dag = &chain.dag;
        let tf = &chain.traceable.formula;
        assert_eq!(dag.digraph.n(), tf.num_clauses() + 3 * tf.num_vars() + 1);
        let p = &dag.hamiltonian_path;
        assert_eq!(p.len(), dag.digraph.n());
        assert!(p.windows(2).all(|w| dag.digraph.has_arc(w[0], w[1])));
        let o = Oracle::new(&dag.digraph);
        assert!(o.is_acyclic(o.all()));
        assert!(o.first(0, dag.k - 1, |x| o.is_in_dominating(x)).is_none());
        let hit = o.first(dag.k, dag.k, |x| o.is_in_dominating(x));
        let sat = f.solve_brute().unwrap();
        assert_eq!(hit.is_some(), sat.is_some());
        if let Some(x) = hit {
            assert!(f.is_satisfied_by(&chain.backward(&bits(x).collect::<Vec<_>>())));
        }
        if let Some(a) = sat {
            let z = chain.forward(&a);
            assert_eq!(z.len(), dag.k);
            assert!(is_in_dominating(&dag.digraph, &z).unwrap().verdict());
        }
    }
}
