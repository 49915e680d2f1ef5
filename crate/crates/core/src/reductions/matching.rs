//! Maximum bipartite matching by augmenting paths, and the Hall deficiency
//! witness read off a maximum matching.

use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteMatching {
    pub left_mate: Vec<Option<usize>>,
    pub right_mate: Vec<Option<usize>>,
    adj: Vec<Vec<usize>>,
}

impl BipartiteMatching {
    /// `adj[l]` lists the right vertices adjacent to left vertex `l`.
    pub fn maximum(adj: &[Vec<usize>], right_count: usize) -> Self {
        let mut m = Self {
            left_mate: alloc::vec![None; adj.len()],
            right_mate: alloc::vec![None; right_count],
            adj: adj.to_vec(),
        };
        for l in 0..adj.len() {
            let mut visited = alloc::vec![false; right_count];
            m.augment(l, &mut visited);
        }
        m
    }

    fn augment(&mut self, l: usize, visited: &mut [bool]) -> bool {
        for i in 0..self.adj[l].len() {
            let r = self.adj[l][i];
            if visited[r] {
                continue;
            }
            visited[r] = true;
            let free = match self.right_mate[r] {
                None => true,
                Some(other) => self.augment(other, visited),
            };
            if free {
                self.left_mate[l] = Some(r);
                self.right_mate[r] = Some(l);
                return true;
            }
        }
        false
    }

    pub fn size(&self) -> usize {
        self.left_mate.iter().flatten().count()
    }

    pub fn covers_left(&self) -> bool {
        self.left_mate.iter().all(Option::is_some)
    }

    /// Left vertices reachable from unmatched left vertices by alternating
    /// paths, and their neighbourhood. With a maximum matching the
    /// neighbourhood is smaller than the set by the number of unmatched left
    /// vertices, and every right vertex in it is matched into the set.
    pub fn deficiency_witness(&self) -> (Vec<usize>, Vec<usize>) {
        let mut left_seen = alloc::vec![false; self.left_mate.len()];
        let mut right_seen = alloc::vec![false; self.right_mate.len()];
        let mut stack: Vec<usize> = (0..self.left_mate.len())
            .filter(|&l| self.left_mate[l].is_none())
            .collect();
        for &l in &stack {
            left_seen[l] = true;
        }
        while let Some(l) = stack.pop() {
            for &r in &self.adj[l] {
                if right_seen[r] {
                    continue;
                }
                right_seen[r] = true;
                let mate = self.right_mate[r].expect("maximum matching: reachable right vertices are matched");
                if !left_seen[mate] {
                    left_seen[mate] = true;
                    stack.push(mate);
                }
            }
        }
        let pick = |seen: &[bool]| (0..seen.len()).filter(|&i| seen[i]).collect();
        (pick(&left_seen), pick(&right_seen))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn perfect_matching_needs_augmentation() {
        // greedy would match 0-0 and strand 1
        let adj = vec![vec![0, 1], vec![0]];
        let m = BipartiteMatching::maximum(&adj, 2);
        assert_eq!(m.size(), 2);
        assert_eq!(m.left_mate, [Some(1), Some(0)]);
    }

    #[test]
    fn hall_witness() {
        // three left vertices all adjacent only to right 0
        let adj = vec![vec![0], vec![0], vec![0]];
        let m = BipartiteMatching::maximum(&adj, 1);
        assert!(!m.covers_left());
        let (u, nu) = m.deficiency_witness();
        assert_eq!(u, [0, 1, 2]);
        assert_eq!(nu, [0]);
    }
}
