use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use super::candidates::{candidate_count, permutation_tables};
use super::canonical::canonical_representative;
use super::counter::FaceCounter;
use super::{genus_for_faces, max_faces, Representative, SearchError, SearchMode, SearchOptions, SearchReport};
use crate::construct::l_of_n;

/// What one shard (a fixed free ordering at vertex 0) found.
struct ShardResult {
    examined: u64,
    best_faces: usize,
    optimal: u64,
    classes: BTreeMap<Vec<u8>, Vec<Vec<usize>>>,
    violation: Option<usize>,
}

fn run_shard(n: usize, tables: &[Vec<Vec<usize>>], first: usize) -> ShardResult {
    let big = 2 * n;
    let limit = max_faces(n);
    let mut counter = FaceCounter::new(n);
    let mut index = vec![0usize; big];
    index[0] = first;
    for v in 0..big {
        counter.set_free(v, &tables[v][index[v]]);
    }
    let mut examined = 0u64;
    let mut best_faces = 0;
    let mut violation = None;
    // odometer states attaining best_faces; canonicalised once the shard is done
    let mut ties: Vec<Vec<u8>> = Vec::new();
    'walk: loop {
        let faces = counter.face_count();
        examined += 1;
        if faces > limit && violation.is_none() {
            violation = Some(faces);
        }
        if faces >= best_faces {
            if faces > best_faces {
                best_faces = faces;
                ties.clear();
            }
            ties.push(index.iter().map(|&i| i as u8).collect());
        }

        // advance over vertices 1..2n, last fastest
        let mut p = big;
        loop {
            p -= 1;
            if p == 0 {
                break 'walk;
            }
            index[p] += 1;
            if index[p] < tables[p].len() {
                counter.set_free(p, &tables[p][index[p]]);
                break;
            }
            index[p] = 0;
            counter.set_free(p, &tables[p][0]);
        }
    }

    let mut classes = BTreeMap::new();
    for state in &ties {
        let rotations: Vec<Vec<usize>> = (0..big)
            .map(|v| {
                let mut r = vec![(v + big - 1) % big, (v + 1) % big];
                r.extend_from_slice(&tables[v][state[v] as usize]);
                r
            })
            .collect();
        let Representative { key, rotations } = canonical_representative(&rotations);
        classes.entry(key).or_insert(rotations);
    }
    ShardResult { examined, best_faces, optimal: ties.len() as u64, classes, violation }
}

/// Visits every candidate, returning the minimum genus and one canonical
/// representative per isomorphism class attaining it. Work is split by the
/// free ordering at vertex 0; the merge is independent of `options.jobs`.
pub fn exhaustive_search(n: usize, options: &SearchOptions) -> Result<SearchReport, SearchError> {
    if n < 2 {
        return Err(SearchError::InvalidN(n));
    }
    if n > options.max_n {
        let size = candidate_count(n).map_or_else(|| "more than 2^128".to_string(), |c| c.to_string());
        return Err(SearchError::SpaceTooLarge { n, size });
    }
    let started = Instant::now();
    let tables = permutation_tables(n);
    let shards: Vec<usize> = (0..tables[0].len()).collect();

    let pool = rayon::ThreadPoolBuilder::new().num_threads(options.jobs.max(1)).build().expect("thread pool");
    let results: Vec<ShardResult> =
        pool.install(|| shards.par_iter().map(|&first| run_shard(n, &tables, first)).collect());

    if let Some(faces) = results.iter().find_map(|r| r.violation) {
        return Err(SearchError::BoundViolation { n, faces });
    }
    let best = results.iter().map(|r| r.best_faces).max().unwrap_or(0);
    let mut classes = BTreeMap::new();
    let mut optimal = 0;
    let mut examined = 0;
    for r in results {
        examined += r.examined;
        if r.best_faces == best {
            optimal += r.optimal;
            for (k, rot) in r.classes {
                classes.entry(k).or_insert(rot);
            }
        }
    }
    let representatives: Vec<Representative> =
        classes.into_iter().map(|(key, rotations)| Representative { key, rotations }).collect();

    Ok(SearchReport {
        n,
        mode: SearchMode::Exhaustive,
        min_genus: genus_for_faces(n, best),
        lower_bound: l_of_n(n),
        candidates_examined: examined,
        optimal_candidates: Some(optimal),
        iso_class_count: Some(representatives.len()),
        representatives,
        seed: None,
        budget: None,
        workers: options.jobs.max(1),
        elapsed: started.elapsed(),
    })
}
