//! Random rotation systems for property tests.

use genusforge::CombinatorialMap;
use proptest::prelude::*;

/// A connected simple graph on `2..=max_v` vertices with arbitrary
/// rotations. A Hamiltonian path keeps it connected.
pub fn any_map(max_v: usize) -> impl Strategy<Value = CombinatorialMap> {
    (2..=max_v)
        .prop_flat_map(|v| {
            (Just(v), proptest::collection::vec(any::<bool>(), v * v), proptest::collection::vec(any::<u32>(), v * v))
        })
        .prop_map(|(v, bits, keys)| {
            let adjacent = |a: usize, b: usize| a != b && (a.abs_diff(b) == 1 || bits[a.min(b) * v + a.max(b)]);
            build(v, adjacent, &keys)
        })
}

/// A connected simple bipartite graph with parts of size `a, b ≥ 1`,
/// `a + b ≤ max_v` and at least two edges.
pub fn any_bipartite_map(max_v: usize) -> impl Strategy<Value = CombinatorialMap> {
    (1..max_v)
        .prop_flat_map(move |a| (Just(a), 1..=(max_v - a)))
        .prop_filter("needs two edges", |&(a, b)| a * b >= 2)
        .prop_flat_map(|(a, b)| {
            let v = a + b;
            (
                Just(a),
                Just(v),
                proptest::collection::vec(any::<bool>(), v * v),
                proptest::collection::vec(any::<u32>(), v * v),
            )
        })
        .prop_map(|(a, v, bits, keys)| {
            // star edges from vertex 0 and from vertex a keep it connected
            let adjacent = |x: usize, y: usize| {
                let (s, t) = (x.min(y), x.max(y));
                s < a && t >= a && (s == 0 || t == a || bits[s * v + t])
            };
            build(v, adjacent, &keys)
        })
}

fn build(v: usize, adjacent: impl Fn(usize, usize) -> bool, keys: &[u32]) -> CombinatorialMap {
    let rotations: Vec<Vec<usize>> = (0..v)
        .map(|x| {
            let mut nb: Vec<usize> = (0..v).filter(|&y| adjacent(x, y)).collect();
            nb.sort_by_key(|&y| (keys[x * v + y], y));
            nb
        })
        .collect();
    CombinatorialMap::from_rotations(&rotations).expect("generated rotation system is valid")
}

/// Face-tracing invariants; `Err` names the first one broken.
pub fn check_invariants(map: &CombinatorialMap, bipartite: bool) -> Result<(), String> {
    let census = map.trace_faces();
    let mut used = vec![0u32; map.dart_count()];
    for face in census.faces() {
        for d in face {
            used[d.index()] += 1;
        }
    }
    if used.iter().any(|&c| c != 1) {
        return Err("a dart is not used exactly once".into());
    }
    let total: usize = census.lengths().iter().sum();
    if total != 2 * map.edge_count() {
        return Err(format!("face lengths sum to {total}, expected {}", 2 * map.edge_count()));
    }
    let (v, e, f) = (map.vertex_count() as i64, map.edge_count() as i64, census.face_count() as i64);
    if (v + f - e) % 2 != 0 {
        return Err("v + f − e is odd".into());
    }
    let chi = v + f - e;
    if chi > 2 || census.genus() as i64 * 2 != 2 - chi {
        return Err(format!("genus {} disagrees with Euler characteristic {chi}", census.genus()));
    }
    if bipartite && census.lengths().iter().any(|&l| l % 2 != 0 || l < 4) {
        return Err(format!("bipartite map has face lengths {:?}", census.lengths()));
    }
    Ok(())
}
