//! Weaving-free road interchanges as embeddings.
//!
//! An `n`-way interchange is a bipartite multigraph with `n` white
//! (incoming) and `n` black (outgoing) vertices, a directed Hamiltonian
//! cycle `H` alternating in colour, and an embedding in which `H` bounds a
//! face. Its bridge count is the genus of the surface.

use thiserror::Error;

use crate::construct::{l_of_n, ConstructionResult};
use crate::map::{CombinatorialMap, Dart, EdgeId, MapError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    White,
    Black,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InterchangeError {
    #[error("{0} colours given for {1} vertices")]
    ColorCount(usize, usize),
    #[error("edge {u}-{v} joins two vertices of the same colour, or the colour classes differ in size")]
    NotBipartite { u: usize, v: usize },
    #[error("H is not a closed walk of the map")]
    NotAWalk,
    #[error("H does not visit every vertex exactly once")]
    HNotHamiltonian,
    #[error("colours do not alternate along H")]
    ColorsDontAlternate,
    #[error("H does not bound a face")]
    HNotAFace,
    #[error("no white vertex {u} adjacent to black vertex {v}")]
    NotAdjacent { u: usize, v: usize },
    #[error("edge {0} lies on H")]
    EdgeOnH(usize),
    #[error("edge {0} has no parallel partner")]
    NoParallelPartner(usize),
    #[error("both sides of edge {0} lie on the same face")]
    SameFaceBothSides(usize),
    #[error("{0} parallel edges remain and none can be removed without changing the surface")]
    Stuck(usize),
    #[error("interchange is not complete")]
    NotComplete,
    #[error("interchange is not a simple complete bipartite graph")]
    NotCompleteSimple,
    #[error(transparent)]
    Map(#[from] MapError),
}

/// A validated interchange. Edits return new values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interchange {
    map: CombinatorialMap,
    n: usize,
    h: Vec<Dart>,
    colors: Vec<Color>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptimalityStatus {
    Optimal,
    Suboptimal,
    /// Odd `n ≥ 7`: no verified minimum to compare against.
    Unknown,
}

impl OptimalityStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            OptimalityStatus::Optimal => "optimal",
            OptimalityStatus::Suboptimal => "suboptimal",
            OptimalityStatus::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OptimalityVerdict {
    pub bridges: usize,
    pub lower_bound: usize,
    pub status: OptimalityStatus,
}

/// Verified minima for small odd `n`.
const ODD_MINIMA: [(usize, usize); 3] = [(1, 0), (3, 1), (5, 3)];

impl Interchange {
    pub fn from_embedding(map: CombinatorialMap, h: Vec<Dart>, colors: Vec<Color>) -> Result<Self, InterchangeError> {
        let vc = map.vertex_count();
        if colors.len() != vc {
            return Err(InterchangeError::ColorCount(colors.len(), vc));
        }
        for e in map.edges() {
            let (d, _) = map.edge_darts(e);
            let (u, v) = (map.origin(d), map.head(d));
            if colors[u] == colors[v] {
                return Err(InterchangeError::NotBipartite { u, v });
            }
        }
        let white = colors.iter().filter(|&&c| c == Color::White).count();
        if 2 * white != vc {
            return Err(InterchangeError::NotBipartite { u: 0, v: 0 });
        }
        if h.is_empty() || h.iter().any(|d| d.index() >= map.dart_count()) {
            return Err(InterchangeError::NotAWalk);
        }
        let len = h.len();
        if (0..len).any(|i| map.head(h[i]) != map.origin(h[(i + 1) % len])) {
            return Err(InterchangeError::NotAWalk);
        }
        let mut seen = vec![false; vc];
        for &d in &h {
            if std::mem::replace(&mut seen[map.origin(d)], true) {
                return Err(InterchangeError::HNotHamiltonian);
            }
        }
        if len != vc {
            return Err(InterchangeError::HNotHamiltonian);
        }
        if h.iter().any(|&d| colors[map.origin(d)] == colors[map.head(d)]) {
            return Err(InterchangeError::ColorsDontAlternate);
        }
        if (0..len).any(|i| map.face_next(h[i]) != h[(i + 1) % len]) {
            return Err(InterchangeError::HNotAFace);
        }
        Ok(Self { map, n: vc / 2, h, colors })
    }

    /// Locates `cycle` (vertex ids) as a face and validates.
    pub fn from_cycle(map: CombinatorialMap, cycle: &[usize], colors: Vec<Color>) -> Result<Self, InterchangeError> {
        let h = face_darts(&map, cycle).ok_or(InterchangeError::HNotAFace)?;
        Self::from_embedding(map, h, colors)
    }

    /// A map on `0..2n` with `H = (0, 1, …, 2n−1)` and even vertices white.
    pub fn standard(map: CombinatorialMap) -> Result<Self, InterchangeError> {
        let vc = map.vertex_count();
        let colors = (0..vc).map(|v| if v % 2 == 0 { Color::White } else { Color::Black }).collect();
        let cycle: Vec<usize> = (0..vc).collect();
        Self::from_cycle(map, &cycle, colors)
    }

    pub fn from_construction(result: &ConstructionResult) -> Result<Self, InterchangeError> {
        Self::standard(result.map.clone())
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> &[Dart] {
        &self.h
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn bridges(&self) -> usize {
        self.map.trace_faces().genus()
    }

    /// Every white vertex adjacent to every black one.
    pub fn is_complete(&self) -> bool {
        (0..self.map.vertex_count()).filter(|&v| self.colors[v] == Color::White).all(|u| {
            let mut nb = self.map.rotation(u);
            nb.sort_unstable();
            nb.dedup();
            nb.len() == self.n
        })
    }

    fn on_h(&self, e: EdgeId) -> bool {
        self.h.iter().any(|&d| self.map.edge(d) == e)
    }

    /// Duplicates the first `u`–`v` edge in `u`'s rotation. The copy sits
    /// clockwise after it at `u` and before it at `v`, so the two bound a
    /// digon and no other face changes length.
    pub fn add_lane(&self, u: usize, v: usize) -> Result<Self, InterchangeError> {
        let vc = self.map.vertex_count();
        if u >= vc || v >= vc || self.colors[u] != Color::White || self.colors[v] != Color::Black {
            return Err(InterchangeError::NotAdjacent { u, v });
        }
        let d = self.map.dart_between(u, v).ok_or(InterchangeError::NotAdjacent { u, v })?;
        let e = self.map.twin(d);
        let (origin, twin, next) = self.map.dart_arrays();
        let (mut origin, mut twin, mut next) = (origin.to_vec(), twin.to_vec(), next.to_vec());
        let (d2, e2) = (origin.len(), origin.len() + 1);
        origin.extend([u, v]);
        twin.extend([e2, d2]);
        next.extend([next[d.index()], e.index()]);
        next[d.index()] = d2;
        let before_e = self.map.prev(e).index();
        next[before_e] = e2;
        // e no longer continues the face it was on; its copy does
        let h = self.h.iter().map(|&x| if x == e { Dart(e2) } else { x }).collect();
        self.rebuilt(origin, twin, next, h)
    }

    /// Deletes a parallel edge off `H`, merging its two faces.
    pub fn remove_parallel_edge(&self, edge: EdgeId) -> Result<Self, InterchangeError> {
        if edge.0 >= self.map.edge_count() {
            return Err(InterchangeError::NoParallelPartner(edge.0));
        }
        if self.on_h(edge) {
            return Err(InterchangeError::EdgeOnH(edge.0));
        }
        if self.map.parallel_edges(edge).is_empty() {
            return Err(InterchangeError::NoParallelPartner(edge.0));
        }
        let (d, e) = self.map.edge_darts(edge);
        let census = self.map.trace_faces();
        if census.face_of(d) == census.face_of(e) {
            return Err(InterchangeError::SameFaceBothSides(edge.0));
        }
        let (origin, twin, next) = self.map.dart_arrays();
        let mut next = next.to_vec();
        for x in [d, e] {
            let p = self.map.prev(x).index();
            next[p] = next[x.index()];
        }
        let gone = |x: usize| x == d.index() || x == e.index();
        let mut new_id = vec![usize::MAX; origin.len()];
        let mut k = 0;
        for (x, slot) in new_id.iter_mut().enumerate() {
            if !gone(x) {
                *slot = k;
                k += 1;
            }
        }
        let keep = |x: &usize| !gone(*x);
        let origin2 = (0..origin.len()).filter(keep).map(|x| origin[x]).collect();
        let twin2 = (0..origin.len()).filter(keep).map(|x| new_id[twin[x]]).collect();
        let next2 = (0..origin.len()).filter(keep).map(|x| new_id[next[x]]).collect();
        let h = self.h.iter().map(|x| Dart(new_id[x.index()])).collect();
        self.rebuilt(origin2, twin2, next2, h)
    }

    /// Removes parallel edges, lowest edge id first, until the graph is simple.
    pub fn simplify_to_complete(&self) -> Result<Self, InterchangeError> {
        if !self.is_complete() {
            return Err(InterchangeError::NotComplete);
        }
        let mut cur = self.clone();
        while !cur.map.is_simple() {
            let census = cur.map.trace_faces();
            let candidate = cur.map.edges().find(|&e| {
                let (d, t) = cur.map.edge_darts(e);
                !cur.on_h(e) && !cur.map.parallel_edges(e).is_empty() && census.face_of(d) != census.face_of(t)
            });
            match candidate {
                Some(e) => cur = cur.remove_parallel_edge(e)?,
                None => {
                    let extra = cur.map.edge_count() - cur.n * cur.n;
                    return Err(InterchangeError::Stuck(extra));
                }
            }
        }
        Ok(cur)
    }

    pub fn optimality_check(&self) -> Result<OptimalityVerdict, InterchangeError> {
        if !self.is_complete() || !self.map.is_simple() {
            return Err(InterchangeError::NotCompleteSimple);
        }
        let bridges = self.bridges();
        let lower_bound = l_of_n(self.n);
        let target = if self.n % 2 == 0 {
            Some(lower_bound)
        } else {
            ODD_MINIMA.iter().find(|&&(k, _)| k == self.n).map(|&(_, g)| g)
        };
        let status = match target {
            Some(g) if bridges == g => OptimalityStatus::Optimal,
            Some(_) => OptimalityStatus::Suboptimal,
            None => OptimalityStatus::Unknown,
        };
        Ok(OptimalityVerdict { bridges, lower_bound, status })
    }

    fn rebuilt(
        &self,
        origin: Vec<usize>,
        twin: Vec<usize>,
        next: Vec<usize>,
        h: Vec<Dart>,
    ) -> Result<Self, InterchangeError> {
        let map = CombinatorialMap::from_labeled_darts(self.map.labels().to_vec(), origin, twin, next)?;
        Self::from_embedding(map, h, self.colors.clone())
    }
}

/// Darts of a face whose vertex sequence is `cycle`, if there is one.
fn face_darts(map: &CombinatorialMap, cycle: &[usize]) -> Option<Vec<Dart>> {
    let (&first, &second) = (cycle.first()?, cycle.get(1 % cycle.len())?);
    if first >= map.vertex_count() {
        return None;
    }
    map.darts_at(first).filter(|&d| map.head(d) == second).find_map(|start| {
        let mut walk = Vec::with_capacity(cycle.len());
        let mut d = start;
        loop {
            walk.push(d);
            d = map.face_next(d);
            if d == start || walk.len() > cycle.len() {
                break;
            }
        }
        let labels: Vec<usize> = walk.iter().map(|&x| map.origin(x)).collect();
        (labels == cycle).then_some(walk)
    })
}

/// The three-way trumpet: `K_{3,3}` with rotations `(v−1, v+1, v+3)` on a
/// torus, every white-to-black edge of `H` doubled.
pub fn trumpet() -> Interchange {
    let rotations: Vec<Vec<usize>> = (0..6).map(|v| vec![(v + 5) % 6, (v + 1) % 6, (v + 3) % 6]).collect();
    let map = CombinatorialMap::from_rotations(&rotations).expect("valid K_{3,3} rotation system");
    let mut i = Interchange::standard(map).expect("(0..6) bounds a face");
    for u in [0, 2, 4] {
        i = i.add_lane(u, u + 1).expect("H edge exists");
    }
    i
}
