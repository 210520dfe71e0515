use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::canonical::canonical_representative;
use super::counter::FaceCounter;
use super::{free_neighbours, genus_for_faces, max_faces, SearchError, SearchMode, SearchReport};
use crate::construct::l_of_n;

struct WorkerResult {
    examined: u64,
    best_faces: usize,
    best: Vec<Vec<usize>>,
    violation: Option<usize>,
}

/// Budget for worker `w` of `workers`: an even split, remainder to the first few.
fn share(budget: u64, workers: usize, w: usize) -> u64 {
    let k = workers as u64;
    budget / k + u64::from((w as u64) < budget % k)
}

struct Climber {
    n: usize,
    limit: usize,
    budget: u64,
    examined: u64,
    counter: FaceCounter,
    best_faces: usize,
    best: Vec<Vec<usize>>,
    violation: Option<usize>,
}

impl Climber {
    fn exhausted(&self) -> bool {
        self.examined >= self.budget || self.best_faces == self.limit || self.violation.is_some()
    }

    /// Counts faces of the currently installed rotations and charges one unit.
    fn evaluate(&mut self, state: &[Vec<usize>]) -> usize {
        let faces = self.counter.face_count();
        self.examined += 1;
        if faces > self.limit {
            self.violation.get_or_insert(faces);
        }
        if faces > self.best_faces || self.best.is_empty() {
            self.best_faces = faces;
            self.best = state.to_vec();
        }
        faces
    }

    fn climb(&mut self, rng: &mut ChaCha8Rng) {
        let big = 2 * self.n;
        let mut state: Vec<Vec<usize>> = (0..big).map(|v| free_neighbours(self.n, v)).collect();
        while !self.exhausted() {
            for (v, order) in state.iter_mut().enumerate() {
                order.shuffle(rng);
                self.counter.set_free(v, order);
            }
            let mut current = self.evaluate(&state);
            loop {
                // steepest step over adjacent transpositions
                let mut step: Option<(usize, usize, usize)> = None;
                'scan: for v in 0..big {
                    for i in 0..state[v].len().saturating_sub(1) {
                        if self.exhausted() {
                            break 'scan;
                        }
                        state[v].swap(i, i + 1);
                        self.counter.set_free(v, &state[v]);
                        let faces = self.evaluate(&state);
                        state[v].swap(i, i + 1);
                        self.counter.set_free(v, &state[v]);
                        if faces > step.map_or(current, |s| s.2) {
                            step = Some((v, i, faces));
                        }
                    }
                }
                match step {
                    Some((v, i, faces)) if !self.exhausted() => {
                        state[v].swap(i, i + 1);
                        self.counter.set_free(v, &state[v]);
                        current = faces;
                    }
                    _ => break,
                }
            }
        }
    }
}

fn run_worker(n: usize, seed: u64, budget: u64, worker: usize) -> WorkerResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(worker as u64);
    let mut climber = Climber {
        n,
        limit: max_faces(n),
        budget,
        examined: 0,
        counter: FaceCounter::new(n),
        best_faces: 0,
        best: Vec::new(),
        violation: None,
    };
    if budget > 0 {
        climber.climb(&mut rng);
    }
    WorkerResult {
        examined: climber.examined,
        best_faces: climber.best_faces,
        best: climber.best,
        violation: climber.violation,
    }
}

/// Random restarts with steepest-ascent hill climbing on the face count.
/// Every face count costs one unit of `budget`; the budget is split evenly
/// over `workers`, each with its own stream of a ChaCha8 generator seeded by
/// `seed`. Identical arguments give identical reports.
pub fn randomized_search(n: usize, seed: u64, budget: u64, workers: usize) -> Result<SearchReport, SearchError> {
    if n < 2 {
        return Err(SearchError::InvalidN(n));
    }
    if budget == 0 {
        return Err(SearchError::InvalidBudget);
    }
    let workers = workers.max(1);
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
    let results: Vec<WorkerResult> = pool
        .install(|| (0..workers).into_par_iter().map(|w| run_worker(n, seed, share(budget, workers, w), w)).collect());

    if let Some(faces) = results.iter().find_map(|r| r.violation) {
        return Err(SearchError::BoundViolation { n, faces });
    }
    let examined = results.iter().map(|r| r.examined).sum();
    // first worker wins ties
    let winner = results
        .iter()
        .filter(|r| !r.best.is_empty())
        .fold(None::<&WorkerResult>, |acc, r| match acc {
            Some(a) if a.best_faces >= r.best_faces => Some(a),
            _ => Some(r),
        })
        .expect("at least one worker has budget");
    let big = 2 * n;
    let rotations: Vec<Vec<usize>> = (0..big)
        .map(|v| {
            let mut r = vec![(v + big - 1) % big, (v + 1) % big];
            r.extend_from_slice(&winner.best[v]);
            r
        })
        .collect();

    Ok(SearchReport {
        n,
        mode: SearchMode::Randomized,
        min_genus: genus_for_faces(n, winner.best_faces),
        lower_bound: l_of_n(n),
        candidates_examined: examined,
        optimal_candidates: None,
        representatives: vec![canonical_representative(&rotations)],
        iso_class_count: None,
        seed: Some(seed),
        budget: Some(budget),
        workers,
        elapsed: started.elapsed(),
    })
}
