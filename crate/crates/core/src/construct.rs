//! Embeddings of `K_{n,n}` (even `n`) of genus `⌈(n−1)(n−2)/4⌉` with the
//! Hamiltonian face `H = (0, 1, …, 2n−1)`.
//!
//! Vertices are `ℤ_{2n}`, even and odd labels forming the two parts. The
//! edges of `H` are split into four parts `P_0..P_3`; each part spans a
//! `K_{n_i,n_i}` which receives a Ringel embedding whose special faces pair
//! up the arcs of `P_i`. Cutting each vertex rotation at its special face
//! and concatenating the two pieces it takes part in yields a rotation of
//! the shape `(…, v−1, v+1, …)`, which makes `H` a face. For `n ≡ 2 (mod 4)`
//! the embeddings of parts 1 and 3 share four vertices and are first glued
//! along a pair of oppositely oriented quadrilaterals.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::map::{canonical_cycle, CombinatorialMap, FaceCensus};
use crate::ringel::{build_ringel_embedding, BipartiteLabeling, RingelError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("n = {0} is odd; a Hamiltonian-face embedding of genus L(n) for odd n is only conjectured")]
    OddN(usize),
    #[error("n = {n} is too small (need n >= {min})")]
    NTooSmall { n: usize, min: usize },
    #[error("n = {n} has the wrong residue mod 4 for this construction")]
    WrongResidue { n: usize },
    #[error("traced census of the n = {n} construction does not match the prediction: {detail}")]
    CensusMismatch { n: usize, detail: String },
    #[error("the two embeddings must share exactly the vertices of the glued face")]
    SharedVertexMismatch,
    #[error("glue faces must be faces of their embeddings and traverse the same vertices in opposite directions")]
    FacesNotOpposite,
    #[error(transparent)]
    Ringel(#[from] RingelError),
}

/// `⌈(n−1)(n−2)/4⌉`.
pub fn l_of_n(n: usize) -> usize {
    if n < 2 {
        return 0;
    }
    ((n - 1) * (n - 2)).div_ceil(4)
}

fn check_even(n: usize, min: usize) -> Result<(), ConstructError> {
    if n % 2 != 0 {
        return Err(ConstructError::OddN(n));
    }
    if n < min {
        return Err(ConstructError::NTooSmall { n, min });
    }
    Ok(())
}

/// An arc `(t−1, t)` of `H`, identified by its head `t`.
pub type Arc = (usize, usize);

/// The split of the arcs of `H` into four parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcPartition {
    pub n: usize,
    pub parts: [Vec<Arc>; 4],
}

impl ArcPartition {
    /// Endpoints of part `i`, split by parity: `(U_i, V_i)`, where `U_i` has
    /// the parity of `i − 1`.
    pub fn vertices(&self, i: usize) -> (Vec<usize>, Vec<usize>) {
        let all: BTreeSet<usize> = self.parts[i].iter().flat_map(|&(a, b)| [a, b]).collect();
        let upar = (i + 1) % 2;
        all.into_iter().partition(|&x| x % 2 == upar)
    }

    pub fn part_of(&self, arc: Arc) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&arc))
    }
}

pub fn build_arc_partition(n: usize) -> Result<ArcPartition, ConstructError> {
    check_even(n, 4)?;
    let big = 2 * n;
    let arc = |t: usize| ((t + big - 1) % big, t);
    let mut parts: [Vec<Arc>; 4] = Default::default();
    if n % 4 == 0 {
        for t in 0..big {
            parts[t % 4].push(arc(t));
        }
    } else {
        check_even(n, 6)?;
        for t in 0..big {
            let i = if t < n { t % 4 } else { (t - n) % 4 };
            parts[i].push(arc(t));
        }
        let moved = [arc(0), arc(n)];
        parts[0].retain(|a| !moved.contains(a));
        parts[3].extend(moved);
        parts[3].sort_unstable_by_key(|&(_, t)| t);
    }
    Ok(ArcPartition { n, parts })
}

/// For each part `i` its special faces `C_{i,k}` in `k` order. A face
/// `(a, b, c, d)` fixes the Ringel labels `v_{2k} = a`, `u_{2k+1} = b`,
/// `v_{2k+1} = c`, `u_{2k} = d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialFaceTable {
    pub n: usize,
    pub rows: [Vec<[usize; 4]>; 4],
}

impl SpecialFaceTable {
    pub fn face(&self, i: usize, k: usize) -> [usize; 4] {
        self.rows[i][k]
    }

    /// Ringel labelling of the sub-embedding for part `i`.
    pub fn labeling(&self, i: usize) -> Result<BipartiteLabeling, RingelError> {
        let row = &self.rows[i];
        let mut u = vec![0; 2 * row.len()];
        let mut v = vec![0; 2 * row.len()];
        for (k, &[a, b, c, d]) in row.iter().enumerate() {
            v[2 * k] = a;
            u[2 * k + 1] = b;
            v[2 * k + 1] = c;
            u[2 * k] = d;
        }
        BipartiteLabeling::new(u, v)
    }

    /// The Ringel embedding `R_i` of part `i`.
    pub fn sub_embedding(&self, i: usize) -> Result<CombinatorialMap, ConstructError> {
        Ok(build_ringel_embedding(&self.labeling(i)?))
    }
}

pub fn special_face_table(n: usize) -> Result<SpecialFaceTable, ConstructError> {
    check_even(n, 4)?;
    let big = 2 * n;
    // arithmetic mod 2n on possibly negative offsets
    let m = |x: isize| x.rem_euclid(big as isize) as usize;
    let (ni, bi) = (n as isize, big as isize);
    let mut rows: [Vec<[usize; 4]>; 4] = Default::default();
    if n % 4 == 0 {
        for (i, row) in rows.iter_mut().enumerate() {
            let ii = i as isize;
            for k in 0..(n / 4) as isize {
                let face = if k == 0 {
                    if i < 3 {
                        [ii - 1, ii, ni + ii - 1, ni + ii]
                    } else {
                        [2, 3, bi - 2, bi - 1]
                    }
                } else {
                    let q = 4 * k;
                    match i {
                        0 => [q - 1, q, bi - q - 1, bi - q],
                        1 => [q, q + 1, bi - q, bi - q + 1],
                        2 => [q + 1, q + 2, bi - q + 1, bi - q + 2],
                        _ => [q + 2, q + 3, bi - q - 2, bi - q - 1],
                    }
                };
                row.push(face.map(m));
            }
        }
    } else {
        check_even(n, 6)?;
        let kmax = ((n - 2) / 4) as isize;
        for (i, row) in rows.iter_mut().enumerate() {
            let range = if i == 1 { 0..=kmax } else { 0..=kmax - 1 };
            for k in range {
                let q = 4 * k;
                let face = match i {
                    0 => [q + 3, q + 4, bi - q - 3, bi - q - 2],
                    1 => [q, q + 1, bi - q - 2, bi - q - 1],
                    2 => [q + 1, q + 2, bi - q - 5, bi - q - 4],
                    _ => [q + 2, q + 3, bi - q - 4, bi - q - 3],
                };
                row.push(face.map(m));
            }
        }
        rows[3].push([n, big - 1, 0, n - 1]);
    }
    Ok(SpecialFaceTable { n, rows })
}

/// Faces of a construction that have names.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NamedFaces {
    pub hamiltonian: Vec<usize>,
    /// The octagon, present only for `n ≡ 0 (mod 4)`.
    pub octagon: Option<Vec<usize>>,
    /// `(k, F_{1,k})`.
    pub f1: Vec<(usize, [usize; 4])>,
    /// `(k, F_{2,k})`.
    pub f2: Vec<(usize, [usize; 4])>,
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub n: usize,
    pub map: CombinatorialMap,
    pub census: FaceCensus,
    pub genus: usize,
    pub named: NamedFaces,
}

impl ConstructionResult {
    pub fn hamiltonian_face(&self) -> &[usize] {
        &self.named.hamiltonian
    }
}

/// Rotation at `v` read as a linear sequence starting right after `incoming`.
fn cut_after(rotation: &[usize], incoming: usize) -> Vec<usize> {
    let i = rotation.iter().position(|&x| x == incoming).expect("cut point is a neighbour");
    let n = rotation.len();
    (1..=n).map(|j| rotation[(i + j) % n]).collect()
}

/// Rotation at `v` cut at the face `face` through `v`: the first entry is the
/// face's successor of `v`, the last its predecessor.
fn cut_at_face(map: &CombinatorialMap, v: usize, face: &[usize]) -> Vec<usize> {
    let pos = face.iter().position(|&x| x == v).expect("vertex lies on face");
    let incoming = face[(pos + face.len() - 1) % face.len()];
    let rot = &map.labeled_rotations()[&v];
    cut_after(rot, incoming)
}

fn hamiltonian(n: usize) -> Vec<usize> {
    (0..2 * n).collect()
}

fn finish(n: usize, rotations: Vec<Vec<usize>>, named: NamedFaces) -> Result<ConstructionResult, ConstructError> {
    let mismatch = |detail: String| ConstructError::CensusMismatch { n, detail };
    let map = CombinatorialMap::from_rotations(&rotations).map_err(|e| mismatch(e.to_string()))?;
    let census = map.trace_faces();
    let genus = census.genus();
    if genus != l_of_n(n) {
        return Err(mismatch(format!("genus {genus}, expected {}", l_of_n(n))));
    }
    let mut expected: Vec<&[usize]> = vec![&named.hamiltonian];
    if let Some(c8) = &named.octagon {
        expected.push(c8);
    }
    expected.extend(named.f1.iter().chain(&named.f2).map(|(_, f)| &f[..]));
    for f in expected {
        if !census.contains_cycle(&map, f) {
            return Err(mismatch(format!("face {f:?} missing")));
        }
    }
    let mut want = BTreeMap::new();
    want.insert(2 * n, 1);
    let quads = if named.octagon.is_some() {
        *want.entry(8).or_insert(0) += 1;
        n * (n - 1) / 2 - 2
    } else {
        (n * n - n) / 2
    };
    *want.entry(4).or_insert(0) += quads;
    if census.length_multiset() != want {
        return Err(mismatch(format!("face lengths {:?}, expected {want:?}", census.length_multiset())));
    }
    Ok(ConstructionResult { n, map, census, genus, named })
}

pub fn construct_mod0(n: usize) -> Result<ConstructionResult, ConstructError> {
    if n % 4 != 0 {
        return Err(ConstructError::WrongResidue { n });
    }
    check_even(n, 4)?;
    let big = 2 * n;
    let table = special_face_table(n)?;
    let subs: Vec<BTreeMap<usize, Vec<usize>>> =
        (0..4).map(|i| table.sub_embedding(i).map(|m| m.labeled_rotations())).collect::<Result<_, _>>()?;

    let rotations = (0..big)
        .map(|v| {
            let (prev, next) = ((v + big - 1) % big, (v + 1) % big);
            let y = &subs[v % 4][&v];
            let z = &subs[(v + 1) % 4][&v];
            // y ends at v−1, z starts at v+1
            let mut rot = cut_after(y, prev);
            let zi = z.iter().position(|&x| x == next).expect("v+1 is a neighbour");
            rot.extend(z[zi..].iter().chain(&z[..zi]));
            rot
        })
        .collect();

    let octagon = vec![0, n - 1, n + 2, 1, n, big - 1, 2, n + 1];
    let mut named = NamedFaces { hamiltonian: hamiltonian(n), octagon: Some(octagon), ..Default::default() };
    for k in 1..n / 4 {
        let q = 4 * k;
        named.f1.push((k, [q - 1, big - q + 2, q + 1, big - q]));
        named.f2.push((k, [q, big - q - 1, q + 2, big - q + 1]));
    }
    finish(n, rotations, named)
}

/// Glues `r1` and `r3` along `f_prime` (a face of `r1`) and `face` (a face of
/// `r3`), which must run over the same four vertices in opposite directions.
/// The vertex sets of the two embeddings may share only those four vertices;
/// the result carries the union of the labels.
pub fn glue_embeddings(
    r1: &CombinatorialMap,
    r3: &CombinatorialMap,
    face: &[usize],
    f_prime: &[usize],
) -> Result<CombinatorialMap, ConstructError> {
    let l1: BTreeSet<usize> = r1.labels().iter().copied().collect();
    let l3: BTreeSet<usize> = r3.labels().iter().copied().collect();
    let shared: BTreeSet<usize> = l1.intersection(&l3).copied().collect();
    let on_face: BTreeSet<usize> = face.iter().copied().collect();
    if shared != on_face || face.len() != on_face.len() {
        return Err(ConstructError::SharedVertexMismatch);
    }
    let reversed: Vec<usize> = face.iter().rev().copied().collect();
    if canonical_cycle(&reversed) != canonical_cycle(f_prime)
        || !r3.trace_faces().contains_cycle(r3, face)
        || !r1.trace_faces().contains_cycle(r1, f_prime)
    {
        return Err(ConstructError::FacesNotOpposite);
    }

    let mut rot = r1.labeled_rotations();
    for (v, row) in r3.labeled_rotations() {
        if !shared.contains(&v) {
            rot.insert(v, row);
            continue;
        }
        let q = cut_at_face(r1, v, f_prime);
        let p = cut_at_face(r3, v, face);
        debug_assert_eq!(q.first(), p.last());
        debug_assert_eq!(q.last(), p.first());
        let mut joined = q;
        joined.extend_from_slice(&p[1..p.len() - 1]);
        rot.insert(v, joined);
    }
    CombinatorialMap::from_labeled_rotations(&rot).map_err(|_| ConstructError::SharedVertexMismatch)
}

pub fn construct_mod2(n: usize) -> Result<ConstructionResult, ConstructError> {
    if n % 4 != 2 {
        return Err(ConstructError::WrongResidue { n });
    }
    check_even(n, 6)?;
    let big = 2 * n;
    let table = special_face_table(n)?;
    let subs: Vec<CombinatorialMap> = (0..4).map(|i| table.sub_embedding(i)).collect::<Result<_, _>>()?;

    let f_prime = [n - 1, 0, big - 1, n];
    let face = [n, big - 1, 0, n - 1];
    let r13 = glue_embeddings(&subs[1], &subs[3], &face, &f_prime)?;
    let glued_special: Vec<[usize; 4]> =
        table.rows[1].iter().chain(table.rows[3].iter().filter(|&&f| f != face)).copied().collect();
    let special_of = |faces: &[[usize; 4]], v: usize| -> [usize; 4] {
        *faces.iter().find(|f| f.contains(&v)).expect("special faces cover the part")
    };

    let shared = [0, n - 1, n, big - 1];
    let r13_rot = r13.labeled_rotations();
    let rotations = (0..big)
        .map(|v| {
            if shared.contains(&v) {
                return r13_rot[&v].clone();
            }
            let t = if subs[0].vertex_of_label(v).is_some() { 0 } else { 2 };
            let mut rot = cut_at_face(&subs[t], v, &special_of(&table.rows[t], v));
            rot.extend(cut_at_face(&r13, v, &special_of(&glued_special, v)));
            rot
        })
        .collect();

    let mut named = NamedFaces { hamiltonian: hamiltonian(n), ..Default::default() };
    for k in 0..(n - 2) / 4 {
        let q = 4 * k;
        named.f1.push((k, [q + 1, big - q - 2, q + 3, big - q - 4]));
        named.f2.push((k, [q + 2, big - q - 5, q + 4, big - q - 3]));
    }
    finish(n, rotations, named)
}

/// Planar `K_{2,2}`: the 4-cycle, both faces Hamiltonian.
fn construct_two() -> Result<ConstructionResult, ConstructError> {
    let rotations: Vec<Vec<usize>> = (0..4).map(|v| vec![(v + 3) % 4, (v + 1) % 4]).collect();
    let map = CombinatorialMap::from_rotations(&rotations).expect("4-cycle");
    let census = map.trace_faces();
    let genus = census.genus();
    Ok(ConstructionResult {
        n: 2,
        map,
        census,
        genus,
        named: NamedFaces { hamiltonian: hamiltonian(2), ..Default::default() },
    })
}

pub fn construct(n: usize) -> Result<ConstructionResult, ConstructError> {
    if n % 2 != 0 {
        return Err(ConstructError::OddN(n));
    }
    match n {
        0 => Err(ConstructError::NTooSmall { n, min: 2 }),
        2 => construct_two(),
        _ if n % 4 == 0 => construct_mod0(n),
        _ => construct_mod2(n),
    }
}

/// The arcs of `H` paired by the special faces, drawn as chords of a circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordDiagram {
    pub n: usize,
    /// `partner[t]` is the head of the arc matched with the arc `(t−1, t)`.
    pub partner: Vec<usize>,
    /// `part[t]` is the part index of the arc `(t−1, t)`.
    pub part: Vec<usize>,
    /// For `n ≡ 2 (mod 4)`, the face traced in the diagram that the glued
    /// embedding does not contain.
    pub lost_face: Option<Vec<usize>>,
}

impl ChordDiagram {
    pub fn arc(&self, head: usize) -> Arc {
        ((head + 2 * self.n - 1) % (2 * self.n), head)
    }

    pub fn partner_of(&self, arc: Arc) -> Option<(Arc, usize)> {
        let big = 2 * self.n;
        let (a, t) = arc;
        if t >= big || (a + 1) % big != t {
            return None;
        }
        Some((self.arc(self.partner[t]), self.part[t]))
    }

    /// Chords `(head, head, part)` with the smaller head first, sorted.
    pub fn chords(&self) -> Vec<(usize, usize, usize)> {
        (0..2 * self.n).filter(|&t| t < self.partner[t]).map(|t| (t, self.partner[t], self.part[t])).collect()
    }

    /// Faces of the diagram other than the circle itself: from an arc's head
    /// cross its chord to the tail of the partner, then continue with the arc
    /// ending there.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let big = 2 * self.n;
        let step = |h: usize| (self.partner[h] + big - 1) % big;
        let mut seen = vec![false; big];
        let mut faces = Vec::new();
        for start in 0..big {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                face.push(h);
                h = step(h);
            }
            faces.push(face);
        }
        faces
    }
}

pub fn chord_diagram(n: usize) -> Result<ChordDiagram, ConstructError> {
    let table = special_face_table(n)?;
    let big = 2 * n;
    let mut partner = vec![usize::MAX; big];
    let mut part = vec![usize::MAX; big];
    for (i, row) in table.rows.iter().enumerate() {
        for f in row {
            // the two arcs of H sit on opposite sides of the quadrilateral
            let is_arc = |j: usize| (f[j] + 1) % big == f[(j + 1) % 4];
            let (a, b) = if is_arc(0) && is_arc(2) {
                (f[1], f[3])
            } else {
                debug_assert!(is_arc(1) && is_arc(3), "special face {f:?} carries two arcs of H");
                (f[2], f[0])
            };
            partner[a] = b;
            partner[b] = a;
            part[a] = i;
            part[b] = i;
        }
    }
    debug_assert!(partner.iter().all(|&p| p != usize::MAX));
    let lost_face = (n % 4 == 2).then(|| vec![0, n - 1, n, big - 1]);
    Ok(ChordDiagram { n, partner, part, lost_face })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l_values() {
        assert_eq!(l_of_n(2), 0);
        assert_eq!(l_of_n(3), 1);
        assert_eq!(l_of_n(4), 2);
        assert_eq!(l_of_n(5), 3);
        assert_eq!(l_of_n(7), 8);
        assert_eq!(l_of_n(10), 18);
    }

    #[test]
    fn partition_n8() {
        let p = build_arc_partition(8).unwrap();
        assert_eq!(p.parts[0], vec![(15, 0), (3, 4), (7, 8), (11, 12)]);
        for i in 0..4 {
            let (u, v) = p.vertices(i);
            assert_eq!((u.len(), v.len()), (4, 4));
        }
    }

    #[test]
    fn partition_n6_moves_two_arcs() {
        let p = build_arc_partition(6).unwrap();
        assert!(p.parts[3].contains(&(11, 0)));
        assert!(p.parts[3].contains(&(5, 6)));
        assert!(!p.parts[0].contains(&(11, 0)));
        let sizes: Vec<usize> = (0..4).map(|i| p.vertices(i).0.len()).collect();
        assert_eq!(sizes, vec![2, 4, 2, 4]);
        for i in 0..4 {
            let (u, v) = p.vertices(i);
            assert_eq!(u.len(), v.len());
        }
    }

    #[test]
    fn partition_errors() {
        assert_eq!(build_arc_partition(7), Err(ConstructError::OddN(7)));
        assert_eq!(build_arc_partition(2), Err(ConstructError::NTooSmall { n: 2, min: 4 }));
        assert_eq!(special_face_table(9), Err(ConstructError::OddN(9)));
    }

    #[test]
    fn table_entries() {
        let t = special_face_table(8).unwrap();
        assert_eq!(t.face(1, 1), [4, 5, 12, 13]);
        assert_eq!(t.face(0, 0), [15, 0, 7, 8]);
        let t = special_face_table(10).unwrap();
        assert_eq!(t.face(3, 2), [10, 19, 0, 9]);
        assert_eq!(t.rows[1].len(), 3);
    }

    #[test]
    fn table_faces_are_faces_of_sub_embeddings() {
        for n in [4, 6, 8, 10, 12, 14] {
            let t = special_face_table(n).unwrap();
            for i in 0..4 {
                let r = t.sub_embedding(i).unwrap();
                let c = r.trace_faces();
                for f in &t.rows[i] {
                    assert!(c.contains_cycle(&r, f), "n={n} i={i} face {f:?}");
                }
            }
        }
    }

    #[test]
    fn mod0_small() {
        let r = construct_mod0(4).unwrap();
        assert_eq!(r.genus, 2);
        assert_eq!(r.census.lengths(), vec![8, 8, 4, 4, 4, 4]);
        assert!(r.census.contains_cycle(&r.map, &[0, 3, 6, 1, 4, 7, 2, 5]));
        assert_eq!(construct_mod0(6).unwrap_err(), ConstructError::WrongResidue { n: 6 });
    }

    #[test]
    fn mod0_n8_named_faces() {
        let r = construct(8).unwrap();
        assert_eq!(r.genus, 11);
        assert_eq!(r.census.face_count(), 28);
        assert!(r.census.contains_cycle(&r.map, &[3, 14, 5, 12]));
        assert!(r.census.contains_cycle(&r.map, &[0, 7, 10, 1, 8, 15, 2, 9]));
    }

    #[test]
    fn mod2_n6() {
        let r = construct(6).unwrap();
        assert_eq!(r.genus, 5);
        assert_eq!(r.named.f1, vec![(0, [1, 10, 3, 8])]);
        assert_eq!(r.named.f2, vec![(0, [2, 7, 4, 9])]);
        assert!(r.census.contains_cycle(&r.map, &[1, 10, 3, 8]));
        assert!(r.census.contains_cycle(&r.map, &[2, 7, 4, 9]));
        assert_eq!(construct_mod2(8).unwrap_err(), ConstructError::WrongResidue { n: 8 });
    }

    #[test]
    fn mod2_n10() {
        let r = construct(10).unwrap();
        assert_eq!(r.genus, 18);
        assert_eq!(r.census.face_count(), 46);
        assert!(r.census.contains_cycle(&r.map, &[1, 18, 3, 16]));
    }

    #[test]
    fn gluing_n10() {
        let n = 10;
        let t = special_face_table(n).unwrap();
        let r1 = t.sub_embedding(1).unwrap();
        let r3 = t.sub_embedding(3).unwrap();
        let f_prime = [9, 0, 19, 10];
        let face = [10, 19, 0, 9];
        let g = glue_embeddings(&r1, &r3, &face, &f_prime).unwrap();
        let c = g.trace_faces();
        let (c1, c3) = (r1.trace_faces(), r3.trace_faces());
        assert_eq!(c.face_count(), c1.face_count() + c3.face_count() - 2);
        assert!(c.lengths().iter().all(|&l| l == 4));
        let mut want: Vec<Vec<usize>> = c1
            .vertex_cycles(&r1)
            .into_iter()
            .chain(c3.vertex_cycles(&r3))
            .filter(|f| *f != canonical_cycle(&face) && *f != canonical_cycle(&f_prime))
            .collect();
        want.sort();
        let mut got = c.vertex_cycles(&g);
        got.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn gluing_errors() {
        let t = special_face_table(10).unwrap();
        let r1 = t.sub_embedding(1).unwrap();
        let r3 = t.sub_embedding(3).unwrap();
        // same direction twice
        assert_eq!(glue_embeddings(&r1, &r3, &[10, 19, 0, 9], &[10, 19, 0, 9]), Err(ConstructError::FacesNotOpposite));
        assert_eq!(
            glue_embeddings(&r1, &r1, &[9, 0, 19, 10], &[10, 19, 0, 9]),
            Err(ConstructError::SharedVertexMismatch)
        );
    }

    #[test]
    fn construct_dispatch() {
        let r = construct(2).unwrap();
        assert_eq!(r.genus, 0);
        assert_eq!(r.census.face_count(), 2);
        for f in r.census.vertex_cycles(&r.map) {
            let mut s = f.clone();
            s.sort();
            assert_eq!(s, vec![0, 1, 2, 3]);
        }
        assert_eq!(construct(7).unwrap_err(), ConstructError::OddN(7));
        assert!(matches!(construct(0), Err(ConstructError::NTooSmall { .. })));
        assert_eq!(construct(12).unwrap().genus, 28);
    }

    #[test]
    fn chords_n8() {
        let d = chord_diagram(8).unwrap();
        assert_eq!(d.partner_of((3, 4)), Some(((11, 12), 0)));
        assert_eq!(d.chords().len(), 8);
        for i in 0..4 {
            assert_eq!(d.chords().iter().filter(|c| c.2 == i).count(), 2);
        }
        let mut faces: Vec<Vec<usize>> = d.faces().iter().map(|f| canonical_cycle(f)).collect();
        faces.sort();
        let mut want = vec![
            canonical_cycle(&[0, 7, 10, 1, 8, 15, 2, 9]),
            canonical_cycle(&[3, 14, 5, 12]),
            canonical_cycle(&[4, 11, 6, 13]),
        ];
        want.sort();
        assert_eq!(faces, want);
    }

    #[test]
    fn chords_n10() {
        let d = chord_diagram(10).unwrap();
        assert_eq!(d.partner_of((19, 0)), Some(((9, 10), 3)));
        let faces: Vec<Vec<usize>> = d.faces().iter().map(|f| canonical_cycle(f)).collect();
        assert!(faces.contains(&canonical_cycle(&[1, 18, 3, 16])));
        assert!(faces.contains(&canonical_cycle(d.lost_face.as_ref().unwrap())));
        assert_eq!(faces.len(), 5);
    }
}
