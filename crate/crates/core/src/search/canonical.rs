//! Canonical keys for Hamiltonian-face embeddings.
//!
//! Two embeddings are identified when a symmetry of the labelled cycle `H`
//! carries one onto the other: shifts `v ↦ v + s`, and reflections
//! `v ↦ s − v` combined with orientation reversal (a reflection alone would
//! turn `H` around). The key is the smallest encoding over the resulting
//! dihedral group of order `4n`.

use super::{Representative, SearchError};
use crate::map::CombinatorialMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// `v ↦ v + s`.
    Shift(usize),
    /// `v ↦ s − v`, orientation reversed.
    Reflect(usize),
}

impl Symmetry {
    #[inline]
    pub fn apply(self, v: usize, modulus: usize) -> usize {
        match self {
            Symmetry::Shift(s) => (v + s) % modulus,
            Symmetry::Reflect(s) => (s + modulus - v % modulus) % modulus,
        }
    }

    pub fn reverses(self) -> bool {
        matches!(self, Symmetry::Reflect(_))
    }
}

pub fn symmetry_group(n: usize) -> Vec<Symmetry> {
    let big = 2 * n;
    (0..big).map(Symmetry::Shift).chain((0..big).map(Symmetry::Reflect)).collect()
}

/// Relabels a rotation table on `ℤ_{len}`.
pub fn apply_symmetry(rotations: &[Vec<usize>], sym: Symmetry) -> Vec<Vec<usize>> {
    let big = rotations.len();
    let mut out = vec![Vec::new(); big];
    for (v, rot) in rotations.iter().enumerate() {
        let mut row: Vec<usize> = rot.iter().map(|&w| sym.apply(w, big)).collect();
        if sym.reverses() {
            row.reverse();
        }
        out[sym.apply(v, big)] = row;
    }
    out
}

pub fn relabel(map: &CombinatorialMap, sym: Symmetry) -> CombinatorialMap {
    CombinatorialMap::from_rotations(&apply_symmetry(&map.rotations(), sym)).expect("relabelling preserves validity")
}

/// Each rotation started at its smallest neighbour, as big-endian `u16`
/// values with a degree prefix per vertex.
fn encode(rotations: &[Vec<usize>]) -> Vec<u8> {
    let mut out = Vec::with_capacity(rotations.iter().map(|r| 2 * r.len() + 2).sum());
    for rot in rotations {
        out.extend_from_slice(&(rot.len() as u16).to_be_bytes());
        let start = rot.iter().enumerate().min_by_key(|&(_, &w)| w).map_or(0, |(i, _)| i);
        for j in 0..rot.len() {
            out.extend_from_slice(&(rot[(start + j) % rot.len()] as u16).to_be_bytes());
        }
    }
    out
}

/// Normalises each rotation to start at its smallest neighbour.
fn normalise(rotations: &mut [Vec<usize>]) {
    for rot in rotations {
        if let Some(i) = rot.iter().enumerate().min_by_key(|&(_, &w)| w).map(|(i, _)| i) {
            rot.rotate_left(i);
        }
    }
}

pub(super) fn canonical_representative(rotations: &[Vec<usize>]) -> Representative {
    let n = rotations.len() / 2;
    let mut best: Option<(Vec<u8>, Symmetry)> = None;
    for sym in symmetry_group(n) {
        let key = encode(&apply_symmetry(rotations, sym));
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, sym));
        }
    }
    let (key, sym) = best.expect("group is non-empty");
    let mut rot = apply_symmetry(rotations, sym);
    normalise(&mut rot);
    Representative { key, rotations: rot }
}

/// Canonical key of a simple map on `ℤ_{2n}` whose traced faces include
/// `(0, 1, …, 2n−1)`.
pub fn canonical_form(map: &CombinatorialMap) -> Result<Vec<u8>, SearchError> {
    let big = map.vertex_count();
    let h: Vec<usize> = (0..big).collect();
    if big % 2 != 0 || map.labels() != h.as_slice() || !map.is_simple() || !map.trace_faces().contains_cycle(map, &h) {
        return Err(SearchError::NoHamiltonianFace);
    }
    Ok(canonical_representative(&map.rotations()).key)
}
