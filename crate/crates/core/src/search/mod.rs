//! Search over rotation systems of `K_{n,n}` in which `H = (0, 1, …, 2n−1)`
//! bounds a face.
//!
//! Under the face-tracing rule, `H` is a face exactly when every rotation
//! has `v+1` immediately after `v−1`. What remains free is the order of the
//! other `n−2` neighbours at each vertex, so the space has `((n−2)!)^{2n}`
//! members.

mod candidates;
mod canonical;
mod counter;
mod exhaustive;
mod randomized;

use std::time::Duration;

use thiserror::Error;

pub use candidates::{candidate_count, enumerate_candidates, Candidates, HamConstrainedRotation};
pub use canonical::{apply_symmetry, canonical_form, relabel, symmetry_group, Symmetry};
pub use exhaustive::exhaustive_search;
pub use randomized::randomized_search;

use crate::construct::l_of_n;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("n must be at least 2, got {0}")]
    InvalidN(usize),
    #[error("search space for n = {n} has {size} candidates, over the configured limit")]
    SpaceTooLarge { n: usize, size: String },
    #[error("map has no face bounded by (0, 1, …, 2n−1)")]
    NoHamiltonianFace,
    #[error("free ordering at vertex {0} is not a permutation of its non-H neighbours")]
    InvalidCandidate(usize),
    #[error("randomized search needs a positive budget")]
    InvalidBudget,
    #[error("candidate with {faces} faces beats the Euler bound for n = {n}")]
    BoundViolation { n: usize, faces: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Randomized,
}

impl SearchMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::Randomized => "random",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; does not change the report.
    pub jobs: usize,
    /// Largest `n` accepted by exhaustive search.
    pub max_n: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { jobs: 1, max_n: 5 }
    }
}

/// An embedding in canonical position together with its canonical key.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Representative {
    pub key: Vec<u8>,
    pub rotations: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub n: usize,
    pub mode: SearchMode,
    pub min_genus: usize,
    pub lower_bound: usize,
    pub candidates_examined: u64,
    /// Labelled candidates attaining the minimum (exhaustive only).
    pub optimal_candidates: Option<u64>,
    /// Sorted by key.
    pub representatives: Vec<Representative>,
    pub iso_class_count: Option<usize>,
    pub seed: Option<u64>,
    pub budget: Option<u64>,
    pub workers: usize,
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn reached_lower_bound(&self) -> bool {
        self.min_genus == self.lower_bound
    }
}

fn genus_for_faces(n: usize, faces: usize) -> usize {
    // v = 2n, e = n²
    (2 + n * n - 2 * n - faces) / 2
}

/// Most faces any candidate may have without beating `L(n)`.
fn max_faces(n: usize) -> usize {
    2 + n * n - 2 * n - 2 * l_of_n(n)
}

/// Neighbours of `v` other than `v ± 1`, ascending.
fn free_neighbours(n: usize, v: usize) -> Vec<usize> {
    let big = 2 * n;
    let (p, q) = ((v + big - 1) % big, (v + 1) % big);
    (0..big).filter(|&w| w % 2 != v % 2 && w != p && w != q).collect()
}
