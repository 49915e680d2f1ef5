//! Bitmask kernels for digraphs on at most 64 vertices.
//!
//! Vertex sets are `u64` masks. Everything here works on the subdigraph
//! induced by a mask and allocates nothing, which is what makes exhaustive
//! subset searches and the tournament scan affordable.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Digraph;

pub const MAX_VERTICES: usize = 64;

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &v| m | (1u64 << v))
}

pub fn vertices_of(mask: u64) -> Vec<usize> {
    Bits(mask).collect()
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All `k`-subsets of `0..n` as masks in increasing numeric order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit: u128 = 1u128 << n;
    let mut cur: Option<u128> = if k > n {
        None
    } else {
        Some((1u128 << k) - 1)
    };
    core::iter::from_fn(move || {
        let x = cur?;
        if x >= limit {
            cur = None;
            return None;
        }
        cur = if x == 0 {
            None
        } else {
            // Gosper's hack
            let c = x & x.wrapping_neg();
            let r = x + c;
            Some((((r ^ x) >> 2) / c) | r)
        };
        Some(x as u64)
    })
}

/// Strong components of one induced subdigraph, stored inline.
#[derive(Clone, Copy)]
pub struct Components {
    masks: [u64; MAX_VERTICES],
    len: usize,
}

impl Components {
    pub fn as_slice(&self) -> &[u64] {
        &self.masks[..self.len]
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Size of the smallest component, `None` for the empty vertex set.
    pub fn smallest(&self) -> Option<usize> {
        self.as_slice().iter().map(|m| m.count_ones() as usize).min()
    }

    pub fn largest(&self) -> usize {
        self.as_slice()
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
}

/// How a vertex set sits against the rest of the (induced) digraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitProfile {
    /// Smallest strong component inside the set; `None` when the set is empty.
    pub smallest_inside: Option<usize>,
    /// Largest strong component outside; 0 when nothing is outside.
    pub largest_outside: usize,
    /// Every outside component has at least one arc into the set.
    pub all_reach_inside: bool,
}

/// Adjacency of a small digraph as out- and in-masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskGraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl MaskGraph {
    pub fn new(d: &Digraph) -> Result<Self> {
        let out = d.out_masks().ok_or(Error::TooLarge {
            what: "bitmask search",
            n: d.n(),
            limit: MAX_VERTICES,
        })?;
        Ok(Self::from_out_masks(out))
    }

    pub fn from_out_masks(out: Vec<u64>) -> Self {
        let n = out.len();
        assert!(n <= MAX_VERTICES);
        let mut inn = alloc::vec![0u64; n];
        for (u, &m) in out.iter().enumerate() {
            for v in Bits(m) {
                inn[v] |= 1 << u;
            }
        }
        Self { n, out, inn }
    }

    /// Subdigraph of `d` induced by `vertices` (local vertex `i` is
    /// `vertices[i]`).
    pub fn induced(d: &Digraph, vertices: &[usize]) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "bitmask search",
                n: vertices.len(),
                limit: MAX_VERTICES,
            });
        }
        let mut local = alloc::collections::BTreeMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            local.insert(v, i);
        }
        let out = vertices
            .iter()
            .map(|&v| {
                d.out_neighbors(v)
                    .iter()
                    .filter_map(|w| local.get(w))
                    .fold(0u64, |m, &i| m | (1 << i))
            })
            .collect();
        Ok(Self::from_out_masks(out))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn all(&self) -> u64 {
        full(self.n)
    }

    pub fn out_mask(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub fn in_mask(&self, v: usize) -> u64 {
        self.inn[v]
    }

    #[inline]
    fn closure(adj: &[u64], start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Vertices of `within` reachable from `start` inside `D[within]`.
    pub fn reachable(&self, start: usize, within: u64) -> u64 {
        Self::closure(&self.out, start, within)
    }

    /// Strong components of `D[within]`, ordered by their smallest vertex.
    pub fn components(&self, within: u64) -> Components {
        let mut comps = Components {
            masks: [0; MAX_VERTICES],
            len: 0,
        };
        let mut rest = within;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let fwd = Self::closure(&self.out, v, rest);
            let bwd = Self::closure(&self.inn, v, fwd);
            comps.masks[comps.len] = bwd;
            comps.len += 1;
            rest &= !bwd;
        }
        comps
    }

    /// `D[within]` is strong (the empty set is not).
    pub fn is_strong(&self, within: u64) -> bool {
        if within == 0 {
            return false;
        }
        let v = within.trailing_zeros() as usize;
        Self::closure(&self.out, v, within) == within && Self::closure(&self.inn, v, within) == within
    }

    pub fn is_acyclic(&self, within: u64) -> bool {
        let mut rest = within;
        loop {
            let sources = Bits(rest)
                .filter(|&v| self.inn[v] & rest == 0)
                .fold(0u64, |m, v| m | (1 << v));
            if sources == 0 {
                return rest == 0;
            }
            rest &= !sources;
        }
    }

    /// Every vertex of `universe \ x` has an out-neighbour in `x`.
    #[inline]
    pub fn is_in_dominating(&self, x: u64, universe: u64) -> bool {
        Bits(universe & !x).all(|v| self.out[v] & x != 0)
    }

    /// Profile of `set` inside `D[universe]`, or `None` when some outside
    /// component has an arc into a smaller component of `D[set]`.
    pub fn split_profile(&self, set: u64, universe: u64) -> Option<SplitProfile> {
        let inside = self.components(set);
        let outside = self.components(universe & !set);
        let mut all_reach_inside = true;
        for &m in outside.as_slice() {
            let size = m.count_ones();
            let reach = Bits(m).fold(0u64, |acc, v| acc | self.out[v]) & set;
            if reach == 0 {
                all_reach_inside = false;
                continue;
            }
            for &c in inside.as_slice() {
                if c & reach != 0 && c.count_ones() < size {
                    return None;
                }
            }
        }
        Some(SplitProfile {
            smallest_inside: inside.smallest(),
            largest_outside: outside.largest(),
            all_reach_inside,
        })
    }

    /// `set` is a safe set of `D[universe]`.
    pub fn is_safe_within(&self, set: u64, universe: u64) -> bool {
        set != 0
            && self
                .split_profile(set, universe)
                .is_some_and(|p| p.all_reach_inside)
    }

    pub fn is_safe(&self, set: u64) -> bool {
        self.is_safe_within(set, self.all())
    }

    /// Connectivity by exhaustive deletion: the size of the smallest `X`
    /// with `D - X` on at least two vertices and not strong, capped at
    /// `n - 1`.
    pub fn connectivity_by_deletion(&self) -> usize {
        let n = self.n;
        if n <= 1 {
            return 0;
        }
        let all = self.all();
        for k in 0..n - 1 {
            if subsets_of_size(n, k).any(|x| !self.is_strong(all & !x)) {
                return k;
            }
        }
        n - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cycle(n: usize) -> MaskGraph {
        MaskGraph::from_out_masks((0..n).map(|i| 1u64 << ((i + 1) % n)).collect())
    }

    #[test]
    fn gosper_order() {
        let v: Vec<u64> = subsets_of_size(4, 2).collect();
        assert_eq!(v, [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(subsets_of_size(3, 0).collect::<Vec<_>>(), [0]);
        assert_eq!(subsets_of_size(64, 64).collect::<Vec<_>>(), [u64::MAX]);
        assert_eq!(subsets_of_size(2, 3).count(), 0);
        assert_eq!(subsets_of_size(10, 4).count(), 210);
    }

    #[test]
    fn components_of_cycle_minus_vertex() {
        let g = cycle(4);
        assert!(g.is_strong(g.all()));
        let comps = g.components(0b1110);
        assert_eq!(comps.as_slice(), &[0b0010, 0b0100, 0b1000]);
        assert!(!g.is_acyclic(g.all()));
        assert!(g.is_acyclic(0b1110));
    }

    #[test]
    fn safe_sets_of_three_cycle() {
        let g = cycle(3);
        assert!(!g.is_safe(0));
        assert!(!g.is_safe(0b001));
        assert!(g.is_safe(0b011));
        assert!(g.is_safe(0b111));
    }

    #[test]
    fn deletion_connectivity_small_cases() {
        assert_eq!(cycle(1).connectivity_by_deletion(), 0);
        assert_eq!(cycle(5).connectivity_by_deletion(), 1);
        let complete = MaskGraph::from_out_masks(vec![0b110, 0b101, 0b011]);
        assert_eq!(complete.connectivity_by_deletion(), 2);
    }
}
