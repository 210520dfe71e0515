//! JSON documents printed by the commands. Every document carries
//! `"schema": 1`. Timings go to stderr so reports stay byte-stable.

use genusforge::interchange::{Interchange, OptimalityVerdict};
use genusforge::search::{SearchMode, SearchReport};
use genusforge::{construct, CombinatorialMap, ConstructionResult};
use serde::Serialize;

use crate::rotfile::serialize;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Serialize)]
pub struct CensusReport {
    pub schema: u32,
    /// Set when the map is `K_{n,n}` split by parity.
    pub n: Option<usize>,
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub genus: usize,
    pub hamiltonian_face: bool,
    /// Traced faces in order, each started at its smallest vertex.
    pub faces: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub named_faces: Option<NamedFacesReport>,
}

#[derive(Debug, Serialize)]
pub struct NamedFacesReport {
    #[serde(rename = "H")]
    pub h: Vec<usize>,
    #[serde(rename = "C8", skip_serializing_if = "Option::is_none")]
    pub c8: Option<Vec<usize>>,
    #[serde(rename = "F1")]
    pub f1: Vec<IndexedFace>,
    #[serde(rename = "F2")]
    pub f2: Vec<IndexedFace>,
}

#[derive(Debug, Serialize)]
pub struct IndexedFace {
    pub k: usize,
    pub face: Vec<usize>,
}

/// `Some(n)` if the map is the complete bipartite graph on evens and odds.
pub fn kn_n(map: &CombinatorialMap) -> Option<usize> {
    let v = map.vertex_count();
    if v % 2 != 0 || !map.is_simple() {
        return None;
    }
    let n = v / 2;
    let ok = (0..v).all(|x| {
        let r = map.rotation(x);
        r.len() == n && r.iter().all(|&w| (w + x) % 2 == 1)
    });
    ok.then_some(n)
}

/// The construction this map coincides with, if any.
pub fn matching_construction(map: &CombinatorialMap) -> Option<ConstructionResult> {
    let n = kn_n(map)?;
    let c = construct(n).ok()?;
    (serialize(&c.map) == serialize(map)).then_some(c)
}

pub fn census_report(map: &CombinatorialMap) -> CensusReport {
    let census = map.trace_faces();
    let h: Vec<usize> = (0..map.vertex_count()).collect();
    let named_faces = matching_construction(map).map(|c| NamedFacesReport {
        h: c.named.hamiltonian.clone(),
        c8: c.named.octagon.clone(),
        f1: c.named.f1.iter().map(|&(k, f)| IndexedFace { k, face: f.to_vec() }).collect(),
        f2: c.named.f2.iter().map(|&(k, f)| IndexedFace { k, face: f.to_vec() }).collect(),
    });
    CensusReport {
        schema: SCHEMA,
        n: kn_n(map),
        v: census.vertex_count(),
        e: census.edge_count(),
        f: census.face_count(),
        genus: census.genus(),
        hamiltonian_face: census.contains_cycle(map, &h),
        faces: census.vertex_cycles(map),
        named_faces,
    }
}

#[derive(Debug, Serialize)]
pub struct SearchReportJson {
    pub schema: u32,
    pub n: usize,
    pub mode: &'static str,
    pub min_genus: usize,
    pub lower_bound: usize,
    pub reached_lower_bound: bool,
    pub candidates_examined: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimal_candidates: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso_class_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
    /// Randomized runs only; exhaustive results do not depend on it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub workers: Option<usize>,
    pub representatives: Vec<RepresentativeJson>,
}

#[derive(Debug, Serialize)]
pub struct RepresentativeJson {
    pub key: String,
    pub rotations: Vec<Vec<usize>>,
}

pub fn search_report(r: &SearchReport) -> SearchReportJson {
    SearchReportJson {
        schema: SCHEMA,
        n: r.n,
        mode: r.mode.as_str(),
        min_genus: r.min_genus,
        lower_bound: r.lower_bound,
        reached_lower_bound: r.reached_lower_bound(),
        candidates_examined: r.candidates_examined,
        optimal_candidates: r.optimal_candidates,
        iso_class_count: r.iso_class_count,
        seed: r.seed,
        budget: r.budget,
        workers: (r.mode == SearchMode::Randomized).then_some(r.workers),
        representatives: r
            .representatives
            .iter()
            .map(|rep| RepresentativeJson {
                key: rep.key.iter().map(|b| format!("{b:02x}")).collect(),
                rotations: rep.rotations.clone(),
            })
            .collect(),
    }
}

#[derive(Debug, Serialize)]
pub struct InterchangeReport {
    pub schema: u32,
    pub n: usize,
    pub bridges: usize,
    pub complete: bool,
    pub simple: bool,
    pub edges: usize,
    pub faces: usize,
    pub lanes_added: usize,
    pub simplified: bool,
    pub verdict: Option<VerdictJson>,
}

#[derive(Debug, Serialize)]
pub struct VerdictJson {
    pub bridges: usize,
    pub lower_bound: usize,
    pub status: &'static str,
}

pub fn interchange_report(i: &Interchange, lanes_added: usize, simplified: bool) -> InterchangeReport {
    let census = i.map().trace_faces();
    let verdict = i.optimality_check().ok().map(|v: OptimalityVerdict| VerdictJson {
        bridges: v.bridges,
        lower_bound: v.lower_bound,
        status: v.status.as_str(),
    });
    InterchangeReport {
        schema: SCHEMA,
        n: i.n(),
        bridges: census.genus(),
        complete: i.is_complete(),
        simple: i.map().is_simple(),
        edges: census.edge_count(),
        faces: census.face_count(),
        lanes_added,
        simplified,
        verdict,
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
    s.push('\n');
    s
}
