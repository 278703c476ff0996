use fim_growth::counting::{count_munn_trees, fuss_catalan, idempotent_sphere_size, sphere_size};
use fim_growth::munn::MunnTree;
use fim_growth::oracle::{census, enumerate_tree_diagrams, DEFAULT_WORK_BUDGET};
use fim_growth::words::Letter;
use num_bigint::BigUint;
use std::collections::HashSet;

#[test]
fn munn_tree_counts_match_enumeration() {
    for rank in 1..=3u32 {
        let found = census(rank, 8, DEFAULT_WORK_BUDGET).unwrap();
        assert!(found.is_complete(), "rank {rank}");
        for (radius, level) in found.levels.iter().enumerate() {
            for k in 0..=radius / 2 {
                let t = radius - 2 * k;
                let oracle = level.get(&(t, k)).copied().unwrap_or(0);
                assert_eq!(
                    count_munn_trees(rank, t as u64, k as u64),
                    BigUint::from(oracle),
                    "rank {rank} t {t} k {k}"
                );
            }
            assert_eq!(sphere_size(rank, radius as u64), BigUint::from(found.sphere(radius).unwrap()));
            assert_eq!(
                idempotent_sphere_size(rank, radius as u64),
                BigUint::from(found.idempotents(radius).unwrap())
            );
        }
    }
}

#[test]
fn raw_word_dedup_reproduces_spheres() {
    // Evaluate every word of length <= 6 at rank 2 and bucket distinct
    // elements by their length.
    let alphabet: Vec<Letter> = Letter::alphabet(2).collect();
    let mut seen = HashSet::new();
    let mut counts = [0u64; 7];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for len in 0..=6 {
        for w in &layer {
            let m = MunnTree::eval(2, w).unwrap();
            if seen.insert(m.canonical_key()) {
                counts[m.length()] += 1;
            }
        }
        if len < 6 {
            layer = layer
                .iter()
                .flat_map(|w| alphabet.iter().map(move |&l| [w.as_slice(), &[l]].concat()))
                .collect();
        }
    }
    for (radius, &n) in counts.iter().enumerate() {
        assert_eq!(sphere_size(2, radius as u64), BigUint::from(n));
    }
}

#[test]
fn fuss_catalan_matches_diagrams() {
    for p in 1..=5u32 {
        for q in 1..=5u32 {
            for k in 0..=6u64 {
                assert_eq!(
                    enumerate_tree_diagrams(p, q, k, u64::MAX).unwrap(),
                    fuss_catalan(u64::from(p), u64::from(q), k),
                    "p {p} q {q} k {k}"
                );
            }
        }
    }
}

#[test]
fn census_partition_sums() {
    let found = census(3, 5, DEFAULT_WORK_BUDGET).unwrap();
    for radius in 0..=5 {
        let by_class: u64 = (0..=radius / 2).map(|k| found.munn_trees(radius - 2 * k, k).unwrap()).sum();
        assert_eq!(Some(by_class), found.sphere(radius));
    }
}
