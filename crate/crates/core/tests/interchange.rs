use genusforge::interchange::{trumpet, Interchange, OptimalityStatus};
use genusforge::{construct, l_of_n};

fn lanes(n: usize) -> Vec<(usize, usize)> {
    // an H edge, the closing H edge, and a chord
    vec![(0, 1), (0, 2 * n - 1), (2, 2 * n - 3)]
}

#[test]
fn simplify_after_lanes() {
    for n in [4, 6, 8] {
        let base = Interchange::from_construction(&construct(n).unwrap()).unwrap();
        let mut i = base.clone();
        for (u, v) in lanes(n) {
            i = i.add_lane(u, v).unwrap();
        }
        assert_eq!(i.map().edge_count(), n * n + 3);
        assert_eq!(i.bridges(), l_of_n(n));
        let s = i.simplify_to_complete().unwrap();
        assert!(s.map().is_simple() && s.is_complete());
        assert_eq!(s.map().edge_count(), n * n);
        assert_eq!(s.bridges(), base.bridges());
        assert_eq!(s.map().trace_faces().length_multiset(), base.map().trace_faces().length_multiset());
    }
}

#[test]
fn simple_input_is_unchanged() {
    let base = Interchange::from_construction(&construct(6).unwrap()).unwrap();
    assert_eq!(base.simplify_to_complete().unwrap(), base);
}

#[test]
fn constructions_are_optimal() {
    for n in (2..=40).step_by(2) {
        let i = Interchange::from_construction(&construct(n).unwrap()).unwrap();
        let v = i.optimality_check().unwrap();
        assert_eq!((v.bridges, v.lower_bound, v.status), (l_of_n(n), l_of_n(n), OptimalityStatus::Optimal), "n={n}");
    }
}

#[test]
fn trumpet_matches_its_reduction() {
    let t = trumpet();
    assert_eq!(t.map().edge_count(), 12);
    let reduced = t.simplify_to_complete().unwrap();
    assert_eq!(reduced.bridges(), 1);
    // three hexagons, H among them
    assert_eq!(reduced.map().trace_faces().lengths(), vec![6, 6, 6]);
}
