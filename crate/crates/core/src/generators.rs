//! Tournament families, seeded random instances and composition helpers.
//!
//! Vertex naming: the circulant families (`circulant_Tk`, `extended_Tk`,
//! `Tdag`, `Tstar`, `Tstarstar`) use 0-indexed `v0, v1, ...` so vertex id `i`
//! is `v{i}`. `Tprime` and `Ttripleprime` use 1-indexed `v1..vn` mapped to
//! ids `0..n`. The mapping is recorded in the vertex labels.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::rng::{Ratio, SplitMix64};
use crate::structure::{classify, is_tournament, vertex_connectivity};

/// Largest order at which `extended_Tk` re-checks its connectivity.
pub const EXTENDED_CHECK_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `i -> j` for all `i < j`.
    Transitive { n: usize },
    /// `T^k_{2k+1}`: `v_i -> v_{i+d}` for `d in {1..k-1} u {k+1}` mod `2k+1`.
    CirculantTk { k: usize },
    /// `T^k_n`: `T^k_{2k+1}` plus a transitive tournament on `n - 2k - 1`
    /// vertices dominating `{v0} u S` and dominated by `S'`.
    ExtendedTk { k: usize, n: usize },
    /// `T'`: transitive `v1 -> ... -> vn` with the single arc `vn -> v1`
    /// reversed.
    TPrime { n: usize },
    /// `T'''`: 2-strong with the strong safe set `{v1, v2, v3}`.
    TTriplePrime { n: usize },
    /// `T^dag`: the `k'`-regular rotational tournament on `2k' + 1` vertices.
    TDagger { kprime: usize },
    /// `T*`: `T^dag` with `k' = (n - 2) / 2` plus `v*` dominating
    /// `v0..v_{k-1}` and dominated by the rest.
    TStar { k: usize, n: usize },
    /// `T**`: `T*` on `n - 1` vertices plus `v**` attached like `v*`.
    TStarStar { k: usize, n: usize },
    RandomTournament { n: usize, seed: u64 },
    /// Random tournament, then each reverse arc added with `digon_prob`.
    RandomSemicomplete { n: usize, seed: u64, digon_prob: Ratio },
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Transitive { .. } => "transitive",
            FamilySpec::CirculantTk { .. } => "circulant_Tk",
            FamilySpec::ExtendedTk { .. } => "extended_Tk",
            FamilySpec::TPrime { .. } => "Tprime",
            FamilySpec::TTriplePrime { .. } => "Ttripleprime",
            FamilySpec::TDagger { .. } => "Tdag",
            FamilySpec::TStar { .. } => "Tstar",
            FamilySpec::TStarStar { .. } => "Tstarstar",
            FamilySpec::RandomTournament { .. } => "random_tournament",
            FamilySpec::RandomSemicomplete { .. } => "random_semicomplete",
        }
    }
}

fn invalid(family: &'static str, constraint: impl Into<String>) -> Error {
    Error::InvalidParameter {
        family,
        constraint: constraint.into(),
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Digraph> {
    let name = spec.family_name();
    match *spec {
        FamilySpec::Transitive { n } => {
            if n == 0 {
                return Err(invalid(name, "n >= 1"));
            }
            Ok(transitive(n))
        }
        FamilySpec::CirculantTk { k } => {
            if k == 0 {
                return Err(invalid(name, "k >= 1"));
            }
            Ok(circulant_tk(k))
        }
        FamilySpec::ExtendedTk { k, n } => {
            if k < 3 {
                return Err(invalid(name, "k >= 3"));
            }
            if n < 2 * k + 2 {
                return Err(invalid(name, format!("n >= 2k + 2 = {}", 2 * k + 2)));
            }
            let d = extended_tk(k, n);
            if n <= EXTENDED_CHECK_LIMIT {
                let kappa = vertex_connectivity(&d);
                if kappa != k {
                    return Err(Error::ConstructionCheck(format!(
                        "T^{k}_{n} has connectivity {kappa}, expected {k}"
                    )));
                }
            }
            Ok(d)
        }
        FamilySpec::TPrime { n } => {
            if n < 3 {
                return Err(invalid(name, "n >= 3"));
            }
            Ok(t_prime(n))
        }
        FamilySpec::TTriplePrime { n } => {
            if n < 5 {
                return Err(invalid(name, "n >= 5 (a 2-strong tournament has at least 5 vertices)"));
            }
            Ok(t_triple_prime(n))
        }
        FamilySpec::TDagger { kprime } => {
            if kprime == 0 {
                return Err(invalid(name, "k' >= 1"));
            }
            Ok(t_dagger(kprime))
        }
        FamilySpec::TStar { k, n } => {
            check_star(name, k, n, 0)?;
            Ok(t_star(k, n))
        }
        FamilySpec::TStarStar { k, n } => {
            check_star(name, k, n, 1)?;
            Ok(t_star_star(k, n))
        }
        FamilySpec::RandomTournament { n, seed } => Ok(random_tournament(n, seed)),
        FamilySpec::RandomSemicomplete { n, seed, digon_prob } => Ok(random_semicomplete(n, seed, digon_prob)),
    }
}

fn check_star(name: &'static str, k: usize, n: usize, parity: usize) -> Result<()> {
    if k < 3 {
        return Err(invalid(name, "k >= 3"));
    }
    if n % 2 != parity {
        return Err(invalid(name, if parity == 0 { "n must be even" } else { "n must be odd" }));
    }
    let least = 2 * k + 2 + parity;
    if n < least {
        return Err(invalid(name, format!("n >= {least}")));
    }
    Ok(())
}

fn label_all(d: &mut Digraph, name: impl Fn(usize) -> String) {
    for v in 0..d.n() {
        d.set_label(v, name(v)).expect("vertex in range");
    }
}

fn add(d: &mut Digraph, u: usize, v: usize) {
    d.add_arc(u, v).expect("generator arcs are in range and loop-free");
}

pub fn transitive(n: usize) -> Digraph {
    let mut d = Digraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            add(&mut d, i, j);
        }
    }
    d
}

fn rotational(m: usize, offsets: impl Iterator<Item = usize> + Clone) -> Digraph {
    let mut d = Digraph::new(m);
    for i in 0..m {
        for o in offsets.clone() {
            add(&mut d, i, (i + o) % m);
        }
    }
    label_all(&mut d, |v| format!("v{v}"));
    d
}

pub fn circulant_tk(k: usize) -> Digraph {
    rotational(2 * k + 1, (1..k).chain(core::iter::once(k + 1)))
}

/// The safe set `S = {v1, ..., v_{k-1}, v_{k+1}}` of `T^k_{2k+1}`.
pub fn circulant_safe_set(k: usize) -> Vec<usize> {
    (1..k).chain(core::iter::once(k + 1)).collect()
}

pub fn extended_tk(k: usize, n: usize) -> Digraph {
    let mut d = circulant_tk(k);
    let core_n = 2 * k + 1;
    let extra = n - core_n;
    for _ in 0..extra {
        d.add_vertex();
    }
    let s_plus_v0: Vec<usize> = core::iter::once(0).chain(circulant_safe_set(k)).collect();
    let s_prime: Vec<usize> = core::iter::once(k).chain(k + 2..=2 * k).collect();
    for i in 0..extra {
        let u = core_n + i;
        d.set_label(u, format!("u{}", i + 1)).expect("in range");
        for j in i + 1..extra {
            add(&mut d, u, core_n + j);
        }
        for &v in &s_plus_v0 {
            add(&mut d, u, v);
        }
        for &w in &s_prime {
            add(&mut d, w, u);
        }
    }
    d
}

pub fn t_prime(n: usize) -> Digraph {
    let mut d = Digraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if (i, j) == (0, n - 1) {
                add(&mut d, j, i);
            } else {
                add(&mut d, i, j);
            }
        }
    }
    label_all(&mut d, |v| format!("v{}", v + 1));
    d
}

pub fn t_triple_prime(n: usize) -> Digraph {
    // 1-indexed in the arc list, shifted on insertion
    let mut d = Digraph::new(n);
    let mut arc = |u: usize, v: usize| add(&mut d, u - 1, v - 1);
    arc(1, 2);
    arc(2, 3);
    arc(3, 1);
    for i in 4..=n {
        for j in 4..i {
            arc(i, j);
        }
    }
    arc(3, 4);
    arc(4, 1);
    arc(4, 2);
    for i in 5..=n {
        arc(i, 3);
        arc(1, i);
        arc(2, i);
    }
    label_all(&mut d, |v| format!("v{}", v + 1));
    d
}

pub fn t_dagger(kprime: usize) -> Digraph {
    rotational(2 * kprime + 1, 1..=kprime)
}

pub fn t_star(k: usize, n: usize) -> Digraph {
    let kprime = (n - 2) / 2;
    let mut d = t_dagger(kprime);
    attach_apex(&mut d, k, "v*");
    d
}

pub fn t_star_star(k: usize, n: usize) -> Digraph {
    let mut d = t_star(k, n - 1);
    attach_apex(&mut d, k, "v**");
    d
}

/// New vertex dominating `v0..v_{k-1}` and dominated by every other vertex.
fn attach_apex(d: &mut Digraph, k: usize, label: &str) {
    let x = d.add_vertex();
    d.set_label(x, label).expect("in range");
    for v in 0..x {
        if v < k {
            add(d, x, v);
        } else {
            add(d, v, x);
        }
    }
}

/// Each pair `u < v` in lexicographic order gets `u -> v` when the coin
/// shows heads.
pub fn random_tournament(n: usize, seed: u64) -> Digraph {
    let mut rng = SplitMix64::new(seed);
    random_tournament_with(n, &mut rng)
}

pub fn random_tournament_with(n: usize, rng: &mut SplitMix64) -> Digraph {
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.coin() {
                add(&mut d, u, v);
            } else {
                add(&mut d, v, u);
            }
        }
    }
    d
}

/// A random tournament, followed by one more pass over the pairs in the same
/// order adding the missing direction with probability `digon_prob`.
pub fn random_semicomplete(n: usize, seed: u64, digon_prob: Ratio) -> Digraph {
    let mut rng = SplitMix64::new(seed);
    random_semicomplete_with(n, digon_prob, &mut rng)
}

pub fn random_semicomplete_with(n: usize, digon_prob: Ratio, rng: &mut SplitMix64) -> Digraph {
    let mut d = random_tournament_with(n, rng);
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(digon_prob) {
                add(&mut d, u, v);
                add(&mut d, v, u);
            }
        }
    }
    d
}

/// Disjoint union of strong semicomplete parts with every arc from part `i`
/// to part `j` for `i < j`. The strong components of the result are exactly
/// the parts, in order.
pub fn chain_components(parts: &[Digraph]) -> Result<Digraph> {
    for (index, part) in parts.iter().enumerate() {
        let c = classify(part);
        if !c.is_semicomplete {
            return Err(Error::InvalidPart { index, what: "semicomplete" });
        }
        if !c.is_strong {
            return Err(Error::InvalidPart { index, what: "strong" });
        }
    }
    let total = parts.iter().map(Digraph::n).sum();
    let mut d = Digraph::new(total);
    let mut offset = 0;
    for part in parts {
        for (u, v) in part.arcs() {
            add(&mut d, offset + u, offset + v);
        }
        for (&v, l) in part.labels() {
            d.set_label(offset + v, l.clone())?;
        }
        for u in offset..offset + part.n() {
            for v in offset + part.n()..total {
                add(&mut d, u, v);
            }
        }
        offset += part.n();
    }
    Ok(d)
}

/// Appends a transitive tournament on `target - |T|` vertices dominated by
/// all of `T`. The strong components of `T` are unchanged.
pub fn pad_with_transitive(t: &Digraph, target: usize) -> Result<Digraph> {
    if !is_tournament(t) {
        return Err(Error::NotTournament);
    }
    let n = t.n();
    if target < n {
        return Err(invalid("pad_with_transitive", format!("target order {target} is below |T| = {n}")));
    }
    let mut d = t.clone();
    for _ in n..target {
        d.add_vertex();
    }
    for i in n..target {
        for u in 0..i {
            add(&mut d, u, i);
        }
        d.set_label(i, format!("p{}", i - n + 1))?;
    }
    Ok(d)
}

/// Strong random semicomplete digraph on `n >= 1` vertices, redrawing until
/// the draw is strong. Needs `digon_prob > 0` when `n == 2`.
pub fn random_strong_semicomplete(n: usize, digon_prob: Ratio, rng: &mut SplitMix64) -> Result<Digraph> {
    if n == 0 || (n == 2 && digon_prob.num == 0) {
        return Err(invalid("random_strong_semicomplete", "no strong semicomplete digraph can be drawn"));
    }
    loop {
        let d = random_semicomplete_with(n, digon_prob, rng);
        if classify(&d).is_strong {
            return Ok(d);
        }
    }
}

pub fn describe(spec: &FamilySpec) -> String {
    match spec {
        FamilySpec::Transitive { n } => format!("transitive n={n}"),
        FamilySpec::CirculantTk { k } => format!("circulant_Tk k={k}"),
        FamilySpec::ExtendedTk { k, n } => format!("extended_Tk k={k} n={n}"),
        FamilySpec::TPrime { n } => format!("Tprime n={n}"),
        FamilySpec::TTriplePrime { n } => format!("Ttripleprime n={n}"),
        FamilySpec::TDagger { kprime } => format!("Tdag kprime={kprime}"),
        FamilySpec::TStar { k, n } => format!("Tstar k={k} n={n}"),
        FamilySpec::TStarStar { k, n } => format!("Tstarstar k={k} n={n}"),
        FamilySpec::RandomTournament { n, seed } => format!("random_tournament n={n} seed={seed}"),
        FamilySpec::RandomSemicomplete { n, seed, digon_prob } => format!(
            "random_semicomplete n={n} seed={seed} digon_prob={}/{}",
            digon_prob.num, digon_prob.den
        ),
    }
    .to_string()
}
