//! Long runs; `cargo test --release -- --ignored`.

use genusforge::search::{exhaustive_search, randomized_search, SearchOptions};

#[test]
#[ignore]
fn exhaustive_five() {
    let jobs = std::thread::available_parallelism().map_or(1, |p| p.get());
    let r = exhaustive_search(5, &SearchOptions { jobs, max_n: 5 }).unwrap();
    eprintln!(
        "n=5: examined {}, optima {:?}, classes {:?}, {:?}",
        r.candidates_examined, r.optimal_candidates, r.iso_class_count, r.elapsed
    );
    assert_eq!(r.candidates_examined, 60_466_176);
    assert_eq!(r.min_genus, 3);
    assert_eq!(r.iso_class_count, Some(1));
}

#[test]
#[ignore]
fn randomized_six() {
    let r = randomized_search(6, 1, 1_000_000, 1).unwrap();
    eprintln!("n=6: genus {} after {} evaluations, {:?}", r.min_genus, r.candidates_examined, r.elapsed);
    assert!(r.min_genus >= 5);
}
