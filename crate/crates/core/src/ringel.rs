//! Ringel's quadrangular embedding of `K_{n,m}` for even `n` and `m`.
//!
//! With parts `u_0..u_{m-1}` and `v_0..v_{n-1}` the rotations are
//!
//! ```text
//! u_even: v_{n-1} … v_0      u_odd: v_0 … v_{n-1}
//! v_even: u_0 … u_{m-1}      v_odd: u_{m-1} … u_0
//! ```
//!
//! and every face is a quadrilateral.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::map::{canonical_cycle, CombinatorialMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingelError {
    #[error("part sizes must be even and positive, got |u| = {u}, |v| = {v}")]
    OddPartSize { u: usize, v: usize },
    #[error("label {0} is used more than once")]
    DuplicateLabel(usize),
    #[error("special face families need equal parts, got |u| = {u}, |v| = {v}")]
    PartsNotEqual { u: usize, v: usize },
}

/// `⌈(n−2)(m−2)/4⌉`, the genus of `K_{n,m}`. Stars and `K_{2,m}` are planar.
pub fn lower_bound(n: usize, m: usize) -> usize {
    if n <= 2 || m <= 2 {
        return 0;
    }
    ((n - 2) * (m - 2)).div_ceil(4)
}

/// Vertex names for the two parts of `K_{n,m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteLabeling {
    u: Vec<usize>,
    v: Vec<usize>,
}

impl BipartiteLabeling {
    pub fn new(u: Vec<usize>, v: Vec<usize>) -> Result<Self, RingelError> {
        if u.is_empty() || v.is_empty() || u.len() % 2 != 0 || v.len() % 2 != 0 {
            return Err(RingelError::OddPartSize { u: u.len(), v: v.len() });
        }
        let mut seen = BTreeSet::new();
        for &x in u.iter().chain(&v) {
            if !seen.insert(x) {
                return Err(RingelError::DuplicateLabel(x));
            }
        }
        Ok(Self { u, v })
    }

    /// `v_t = t` for `t < n`, `u_s = n + s`.
    pub fn standard(n: usize, m: usize) -> Result<Self, RingelError> {
        Self::new((n..n + m).collect(), (0..n).collect())
    }

    pub fn u(&self, s: usize) -> usize {
        self.u[s % self.u.len()]
    }

    pub fn v(&self, t: usize) -> usize {
        self.v[t % self.v.len()]
    }

    pub fn u_labels(&self) -> &[usize] {
        &self.u
    }

    pub fn v_labels(&self) -> &[usize] {
        &self.v
    }

    /// `m`, the size of the `u` part.
    pub fn m(&self) -> usize {
        self.u.len()
    }

    /// `n`, the size of the `v` part.
    pub fn n(&self) -> usize {
        self.v.len()
    }
}

/// The rotation system keyed by label.
pub fn ringel_rotations(labeling: &BipartiteLabeling) -> BTreeMap<usize, Vec<usize>> {
    let mut rot = BTreeMap::new();
    for (s, &u) in labeling.u.iter().enumerate() {
        let row: Vec<usize> = if s % 2 == 0 { labeling.v.iter().rev().copied().collect() } else { labeling.v.clone() };
        rot.insert(u, row);
    }
    for (t, &v) in labeling.v.iter().enumerate() {
        let row: Vec<usize> = if t % 2 == 0 { labeling.u.clone() } else { labeling.u.iter().rev().copied().collect() };
        rot.insert(v, row);
    }
    rot
}

pub fn build_ringel_embedding(labeling: &BipartiteLabeling) -> CombinatorialMap {
    CombinatorialMap::from_labeled_rotations(&ringel_rotations(labeling))
        .expect("Ringel rotations describe a connected simple K_{n,m}")
}

/// The faces the rotation system is known to produce:
/// `v_t u_{s+1} v_{t+1} u_s` for even `s, t` and `u_s v_{t+1} u_{s+1} v_t`
/// for odd `s, t`.
pub fn ringel_faces(labeling: &BipartiteLabeling) -> Vec<[usize; 4]> {
    let (n, m) = (labeling.n(), labeling.m());
    let mut faces = Vec::with_capacity(n * m / 2);
    for s in (0..m).step_by(2) {
        for t in (0..n).step_by(2) {
            faces.push([labeling.v(t), labeling.u(s + 1), labeling.v(t + 1), labeling.u(s)]);
        }
    }
    for s in (1..m).step_by(2) {
        for t in (1..n).step_by(2) {
            faces.push([labeling.u(s), labeling.v(t + 1), labeling.u(s + 1), labeling.v(t)]);
        }
    }
    faces
}

/// Which band of quadrilaterals to select in `K_{n,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `v_s u_{s+1} v_{s+1} u_s` for even `s`; these are the special faces.
    Even,
    /// `u_s v_{s+1} u_{s+1} v_s` for odd `s`.
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialFaceFamily {
    pub kind: FamilyKind,
    /// Each face rotated to start at its smallest label.
    pub faces: Vec<Vec<usize>>,
}

pub fn special_faces(labeling: &BipartiteLabeling, kind: FamilyKind) -> Result<SpecialFaceFamily, RingelError> {
    let n = labeling.n();
    if labeling.m() != n {
        return Err(RingelError::PartsNotEqual { u: labeling.m(), v: n });
    }
    let l = labeling;
    let faces = match kind {
        FamilyKind::Even => {
            (0..n).step_by(2).map(|s| canonical_cycle(&[l.v(s), l.u(s + 1), l.v(s + 1), l.u(s)])).collect()
        }
        FamilyKind::Odd => {
            (1..n).step_by(2).map(|s| canonical_cycle(&[l.u(s), l.v(s + 1), l.u(s + 1), l.v(s)])).collect()
        }
    };
    Ok(SpecialFaceFamily { kind, faces })
}
