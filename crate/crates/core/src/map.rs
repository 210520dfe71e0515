//! Dart-based combinatorial maps.
//!
//! An oriented 2-cell embedding is stored as two permutations on darts
//! (directed edge-ends): the rotation `σ`, which moves to the next dart
//! clockwise around the dart's origin, and the twin involution `α`, which
//! flips a dart to the other end of its edge. Faces are the orbits of
//! `d ↦ σ(α(d))`: arriving at a vertex along `d`, leave along the clockwise
//! successor of the arrival direction.
//!
//! Vertices have dense ids `0..v`. Each vertex also carries an external
//! label (ascending, identity unless built from labelled rotations) so that
//! sub-embeddings living on a subset of a larger vertex set keep their names.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// A directed edge-end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Dart {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.0)
    }
}

/// An undirected edge, numbered in order of its smaller dart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("vertex {0} lists {1} but {1} does not list {0}")]
    AsymmetricAdjacency(usize, usize),
    #[error("vertex {0} lists neighbour {1} more than once")]
    DuplicateNeighbor(usize, usize),
    #[error("vertex {0} is adjacent to itself")]
    SelfLoop(usize),
    #[error("vertex {vertex} lists unknown neighbour {neighbor}")]
    UnknownVertex { vertex: usize, neighbor: usize },
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("dart arrays have inconsistent lengths")]
    LengthMismatch,
    #[error("twin is not a fixed-point-free involution at dart {0}")]
    NotInvolution(usize),
    #[error("rotation is not a permutation of the darts")]
    NotPermutation,
    #[error("rotation orbit through dart {0} does not match the darts at its origin")]
    OrbitOriginMismatch(usize),
    #[error("Euler characteristic {0} does not give a non-negative integral genus")]
    NegativeGenus(i64),
}

/// An oriented combinatorial map. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialMap {
    labels: Vec<usize>,
    origin: Vec<usize>,
    twin: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    edge: Vec<usize>,
    edge_dart: Vec<usize>,
    vertex_dart: Vec<usize>,
}

impl CombinatorialMap {
    /// Builds a simple map from clockwise neighbour lists, one per vertex
    /// `0..rotations.len()`.
    pub fn from_rotations(rotations: &[Vec<usize>]) -> Result<Self, MapError> {
        let labels = (0..rotations.len()).collect();
        Self::build_simple(labels, rotations)
    }

    /// Like [`from_rotations`](Self::from_rotations), but vertices are named
    /// by arbitrary labels; dense ids follow ascending label order.
    pub fn from_labeled_rotations(rotations: &BTreeMap<usize, Vec<usize>>) -> Result<Self, MapError> {
        let labels: Vec<usize> = rotations.keys().copied().collect();
        let index: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut dense = Vec::with_capacity(labels.len());
        for (&v, rot) in rotations {
            let mut row = Vec::with_capacity(rot.len());
            for &w in rot {
                match index.get(&w) {
                    Some(&i) => row.push(i),
                    None => return Err(MapError::UnknownVertex { vertex: v, neighbor: w }),
                }
            }
            dense.push(row);
        }
        Self::build_simple(labels, &dense)
    }

    fn build_simple(labels: Vec<usize>, rotations: &[Vec<usize>]) -> Result<Self, MapError> {
        let vcount = rotations.len();
        let mut slot: HashMap<(usize, usize), usize> = HashMap::new();
        let mut origin = Vec::new();
        let mut next = Vec::new();
        for (v, rot) in rotations.iter().enumerate() {
            let base = origin.len();
            for (j, &w) in rot.iter().enumerate() {
                if w >= vcount {
                    return Err(MapError::UnknownVertex { vertex: labels[v], neighbor: w });
                }
                if w == v {
                    return Err(MapError::SelfLoop(labels[v]));
                }
                if slot.insert((v, w), base + j).is_some() {
                    return Err(MapError::DuplicateNeighbor(labels[v], labels[w]));
                }
                origin.push(v);
                next.push(base + (j + 1) % rot.len());
            }
        }
        let mut twin = vec![0; origin.len()];
        for (&(v, w), &d) in &slot {
            match slot.get(&(w, v)) {
                Some(&t) => twin[d] = t,
                None => return Err(MapError::AsymmetricAdjacency(labels[v], labels[w])),
            }
        }
        Self::assemble(labels, origin, twin, next)
    }

    /// Builds a map directly from dart permutations. Parallel edges are
    /// allowed; loops are not.
    pub fn from_darts(
        vertex_count: usize,
        origin: Vec<usize>,
        twin: Vec<usize>,
        rotation: Vec<usize>,
    ) -> Result<Self, MapError> {
        Self::from_labeled_darts((0..vertex_count).collect(), origin, twin, rotation)
    }

    /// [`from_darts`](Self::from_darts) with an ascending label per vertex.
    pub fn from_labeled_darts(
        labels: Vec<usize>,
        origin: Vec<usize>,
        twin: Vec<usize>,
        rotation: Vec<usize>,
    ) -> Result<Self, MapError> {
        let vertex_count = labels.len();
        let n = origin.len();
        if twin.len() != n || rotation.len() != n {
            return Err(MapError::LengthMismatch);
        }
        for (d, &o) in origin.iter().enumerate() {
            if o >= vertex_count {
                return Err(MapError::UnknownVertex { vertex: o, neighbor: d });
            }
        }
        for d in 0..n {
            let t = twin[d];
            if t >= n || t == d || twin[t] != d {
                return Err(MapError::NotInvolution(d));
            }
            if origin[t] == origin[d] {
                return Err(MapError::SelfLoop(origin[d]));
            }
        }
        let mut hit = vec![false; n];
        for &s in &rotation {
            if s >= n || std::mem::replace(&mut hit[s], true) {
                return Err(MapError::NotPermutation);
            }
        }
        for d in 0..n {
            if origin[rotation[d]] != origin[d] {
                return Err(MapError::OrbitOriginMismatch(d));
            }
        }
        Self::assemble(labels, origin, twin, rotation)
    }

    fn assemble(labels: Vec<usize>, origin: Vec<usize>, twin: Vec<usize>, next: Vec<usize>) -> Result<Self, MapError> {
        let vcount = labels.len();
        for w in labels.windows(2) {
            if w[0] >= w[1] {
                return Err(MapError::DuplicateLabel(w[1]));
            }
        }
        let ndarts = origin.len();
        if ndarts == 0 {
            return Err(MapError::NoEdges);
        }
        let mut prev = vec![0; ndarts];
        for (d, &s) in next.iter().enumerate() {
            prev[s] = d;
        }

        // each vertex must own exactly one σ-orbit
        let mut vertex_dart = vec![usize::MAX; vcount];
        let mut seen = vec![false; ndarts];
        for d in 0..ndarts {
            if seen[d] {
                continue;
            }
            let v = origin[d];
            if vertex_dart[v] != usize::MAX {
                return Err(MapError::OrbitOriginMismatch(d));
            }
            vertex_dart[v] = d;
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                x = next[x];
            }
        }
        if vertex_dart.contains(&usize::MAX) {
            return Err(MapError::Disconnected);
        }

        let mut edge = vec![usize::MAX; ndarts];
        let mut edge_dart = Vec::with_capacity(ndarts / 2);
        for d in 0..ndarts {
            if edge[d] == usize::MAX {
                edge[d] = edge_dart.len();
                edge[twin[d]] = edge_dart.len();
                edge_dart.push(d);
            }
        }

        let map = CombinatorialMap { labels, origin, twin, next, prev, edge, edge_dart, vertex_dart };
        if !map.is_connected() {
            return Err(MapError::Disconnected);
        }
        Ok(map)
    }

    fn is_connected(&self) -> bool {
        let mut reached = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([0]);
        reached[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for d in self.darts_at(v) {
                let w = self.head(d);
                if !reached[w] {
                    reached[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.vertex_count()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_dart.len()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        (0..self.dart_count()).map(Dart)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edge_count()).map(EdgeId)
    }

    #[inline]
    pub fn origin(&self, d: Dart) -> usize {
        self.origin[d.0]
    }

    #[inline]
    pub fn head(&self, d: Dart) -> usize {
        self.origin[self.twin[d.0]]
    }

    #[inline]
    pub fn twin(&self, d: Dart) -> Dart {
        Dart(self.twin[d.0])
    }

    /// `σ(d)`: next dart clockwise around `origin(d)`.
    #[inline]
    pub fn next(&self, d: Dart) -> Dart {
        Dart(self.next[d.0])
    }

    /// `σ⁻¹(d)`.
    #[inline]
    pub fn prev(&self, d: Dart) -> Dart {
        Dart(self.prev[d.0])
    }

    /// Next dart along the face to the left of `d`: `σ(α(d))`.
    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        Dart(self.next[self.twin[d.0]])
    }

    #[inline]
    pub fn edge(&self, d: Dart) -> EdgeId {
        EdgeId(self.edge[d.0])
    }

    pub fn edge_darts(&self, e: EdgeId) -> (Dart, Dart) {
        let d = self.edge_dart[e.0];
        (Dart(d), Dart(self.twin[d]))
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn vertex_of_label(&self, label: usize) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// Raw dart arrays `(origin, twin, rotation)` in the layout accepted by
    /// [`from_darts`](Self::from_darts).
    pub fn dart_arrays(&self) -> (&[usize], &[usize], &[usize]) {
        (&self.origin, &self.twin, &self.next)
    }

    /// Darts leaving `v` in clockwise order.
    pub fn darts_at(&self, v: usize) -> impl Iterator<Item = Dart> + '_ {
        let start = self.vertex_dart[v];
        let mut cur = Some(start);
        std::iter::from_fn(move || {
            let d = cur?;
            let n = self.next[d];
            cur = (n != start).then_some(n);
            Some(Dart(d))
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.darts_at(v).count()
    }

    /// Neighbour ids of `v` in clockwise order (with multiplicity).
    pub fn rotation(&self, v: usize) -> Vec<usize> {
        self.darts_at(v).map(|d| self.head(d)).collect()
    }

    /// All rotations by dense id.
    pub fn rotations(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count()).map(|v| self.rotation(v)).collect()
    }

    /// All rotations keyed and valued by label.
    pub fn labeled_rotations(&self) -> BTreeMap<usize, Vec<usize>> {
        (0..self.vertex_count())
            .map(|v| (self.labels[v], self.darts_at(v).map(|d| self.labels[self.head(d)]).collect()))
            .collect()
    }

    /// First dart from `u` to `v` in `u`'s rotation.
    pub fn dart_between(&self, u: usize, v: usize) -> Option<Dart> {
        self.darts_at(u).find(|&d| self.head(d) == v)
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.darts_at(u).filter(|&d| self.head(d) == v).count()
    }

    /// Edges sharing both endpoints with `e`, excluding `e` itself.
    pub fn parallel_edges(&self, e: EdgeId) -> Vec<EdgeId> {
        let (d, _) = self.edge_darts(e);
        let (u, v) = (self.origin(d), self.head(d));
        self.darts_at(u).filter(|&x| self.head(x) == v && self.edge(x) != e).map(|x| self.edge(x)).collect()
    }

    pub fn is_simple(&self) -> bool {
        (0..self.vertex_count()).all(|v| {
            let mut nb = self.rotation(v);
            nb.sort_unstable();
            nb.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// Orbit decomposition of the face permutation. Faces are listed in
    /// order of their smallest dart, each starting at that dart.
    pub fn trace_faces(&self) -> FaceCensus {
        let n = self.dart_count();
        let mut face_of = vec![usize::MAX; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut face = Vec::new();
            let mut d = start;
            while face_of[d] == usize::MAX {
                face_of[d] = id;
                face.push(Dart(d));
                d = self.next[self.twin[d]];
            }
            debug_assert_eq!(d, start);
            faces.push(face);
        }
        let genus = euler_genus(self.vertex_count(), self.edge_count(), faces.len())
            .expect("a connected rotation system always has even Euler characteristic ≤ 2");
        FaceCensus { faces, face_of, vertex_count: self.vertex_count(), edge_count: self.edge_count(), genus }
    }

    pub fn genus(&self) -> Result<usize, MapError> {
        let faces = self.trace_faces().face_count();
        euler_genus(self.vertex_count(), self.edge_count(), faces)
    }

    /// The mirror embedding: `σ` replaced by `σ⁻¹`.
    pub fn reversed(&self) -> CombinatorialMap {
        let mut m = self.clone();
        std::mem::swap(&mut m.next, &mut m.prev);
        m
    }

    /// Vertex labels visited by a dart cycle.
    pub fn walk_labels(&self, darts: &[Dart]) -> Vec<usize> {
        darts.iter().map(|&d| self.labels[self.origin(d)]).collect()
    }
}

/// Genus from Euler's formula `2 − 2g = v + f − e`.
pub fn euler_genus(v: usize, e: usize, f: usize) -> Result<usize, MapError> {
    let chi = v as i64 + f as i64 - e as i64;
    if chi > 2 || chi % 2 != 0 {
        return Err(MapError::NegativeGenus(chi));
    }
    Ok(((2 - chi) / 2) as usize)
}

/// Lexicographically smallest cyclic rotation of `cycle`.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    (0..n).map(|s| cycle[s..].iter().chain(&cycle[..s]).copied().collect::<Vec<_>>()).min().unwrap_or_default()
}

/// Faces of a traced map together with the counts that feed Euler's formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCensus {
    faces: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
    vertex_count: usize,
    edge_count: usize,
    genus: usize,
}

impl FaceCensus {
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Index of the face containing `d`.
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d.0]
    }

    /// Face lengths, largest first.
    pub fn lengths(&self) -> Vec<usize> {
        let mut l: Vec<usize> = self.faces.iter().map(Vec::len).collect();
        l.sort_unstable_by(|a, b| b.cmp(a));
        l
    }

    /// Face length → number of faces with that length.
    pub fn length_multiset(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for f in &self.faces {
            *m.entry(f.len()).or_insert(0) += 1;
        }
        m
    }

    /// Every face as a label cycle in its canonical rotation.
    pub fn vertex_cycles(&self, map: &CombinatorialMap) -> Vec<Vec<usize>> {
        self.faces.iter().map(|f| canonical_cycle(&map.walk_labels(f))).collect()
    }

    /// Index of a face whose label cycle equals `cycle` up to cyclic rotation
    /// (direction matters).
    pub fn find_cycle(&self, map: &CombinatorialMap, cycle: &[usize]) -> Option<usize> {
        let target = canonical_cycle(cycle);
        self.faces.iter().position(|f| f.len() == target.len() && canonical_cycle(&map.walk_labels(f)) == target)
    }

    pub fn contains_cycle(&self, map: &CombinatorialMap, cycle: &[usize]) -> bool {
        self.find_cycle(map, cycle).is_some()
    }
}
