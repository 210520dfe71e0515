use itertools::Itertools;

use super::{free_neighbours, SearchError};
use crate::map::CombinatorialMap;

/// A rotation system with `H` as a face, given by the order of the
/// non-`H` neighbours at each vertex. The full rotation at `v` is
/// `(v−1, v+1, free[v]…)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HamConstrainedRotation {
    n: usize,
    free: Vec<Vec<usize>>,
}

impl HamConstrainedRotation {
    pub fn new(n: usize, free: Vec<Vec<usize>>) -> Result<Self, SearchError> {
        if n < 2 {
            return Err(SearchError::InvalidN(n));
        }
        if free.len() != 2 * n {
            return Err(SearchError::InvalidCandidate(free.len().min(2 * n)));
        }
        for (v, order) in free.iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != free_neighbours(n, v) {
                return Err(SearchError::InvalidCandidate(v));
            }
        }
        Ok(Self { n, free })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn free(&self, v: usize) -> &[usize] {
        &self.free[v]
    }

    pub fn rotation(&self, v: usize) -> Vec<usize> {
        let big = 2 * self.n;
        let mut r = Vec::with_capacity(self.n);
        r.push((v + big - 1) % big);
        r.push((v + 1) % big);
        r.extend_from_slice(&self.free[v]);
        r
    }

    pub fn rotations(&self) -> Vec<Vec<usize>> {
        (0..2 * self.n).map(|v| self.rotation(v)).collect()
    }

    pub fn to_map(&self) -> CombinatorialMap {
        CombinatorialMap::from_rotations(&self.rotations()).expect("candidate is a rotation system of K_{n,n}")
    }
}

/// `((n−2)!)^{2n}`, or `None` on overflow.
pub fn candidate_count(n: usize) -> Option<u128> {
    if n < 2 {
        return None;
    }
    let fact = (1..=(n as u128 - 2)).try_fold(1u128, |acc, k| acc.checked_mul(k))?;
    fact.checked_pow(u32::try_from(2 * n).ok()?)
}

/// Per-vertex free orderings in lexicographic order.
pub(super) fn permutation_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    (0..2 * n)
        .map(|v| {
            let others = free_neighbours(n, v);
            let k = others.len();
            others.into_iter().permutations(k).collect()
        })
        .collect()
}

/// Iterator over every Hamiltonian-face candidate, lexicographic in
/// `(free[0], free[1], …, free[2n−1])`.
pub struct Candidates {
    n: usize,
    tables: Vec<Vec<Vec<usize>>>,
    index: Vec<usize>,
    done: bool,
}

impl Iterator for Candidates {
    type Item = HamConstrainedRotation;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let free = self.index.iter().zip(&self.tables).map(|(&i, t)| t[i].clone()).collect();
        let item = HamConstrainedRotation { n: self.n, free };
        // odometer, last vertex fastest
        let mut p = self.index.len();
        loop {
            if p == 0 {
                self.done = true;
                break;
            }
            p -= 1;
            self.index[p] += 1;
            if self.index[p] < self.tables[p].len() {
                break;
            }
            self.index[p] = 0;
        }
        Some(item)
    }
}

/// Fails with `SpaceTooLarge` when the space exceeds `max_candidates`.
pub fn enumerate_candidates(n: usize, max_candidates: u128) -> Result<Candidates, SearchError> {
    if n < 2 {
        return Err(SearchError::InvalidN(n));
    }
    match candidate_count(n) {
        Some(c) if c <= max_candidates => {}
        c => {
            let size = c.map_or_else(|| "more than 2^128".to_string(), |c| c.to_string());
            return Err(SearchError::SpaceTooLarge { n, size });
        }
    }
    Ok(Candidates { n, tables: permutation_tables(n), index: vec![0; 2 * n], done: false })
}
