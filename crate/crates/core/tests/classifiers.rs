use edgeideal::corpus::{all_weight_tuples, complete, cycle, path, random_suspension, weighted};
use edgeideal::{
    classify_auto, classify_cycle, classify_cycle_graph, classify_path, classify_path_weights,
    classify_tree, is_minimal_cover, is_unmixed, recognize_suspensions, Certificate, CmStatus,
    Family, Verdict, Weight, WeightedGraph,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn brute(graph: &WeightedGraph) -> bool {
    is_unmixed(graph).unwrap().unmixed
}

/// Checks internal consistency and any witnesses a verdict carries.
fn assert_consistent(graph: &WeightedGraph, verdict: &Verdict) {
    assert!(verdict.cohen_macaulay != CmStatus::Yes || verdict.unmixed);
    let pair = match &verdict.certificate {
        Certificate::Witnesses { smaller, larger } => Some((smaller, larger)),
        Certificate::SuspensionViolation {
            smaller, larger, ..
        } => Some((smaller, larger)),
        _ => None,
    };
    if let Some((lo, hi)) = pair {
        assert!(!verdict.unmixed);
        assert!(
            is_minimal_cover(graph, lo).unwrap(),
            "{}",
            lo.display(graph)
        );
        assert!(
            is_minimal_cover(graph, hi).unwrap(),
            "{}",
            hi.display(graph)
        );
        assert!(lo.cardinality() < hi.cardinality());
    }
}

#[test]
fn cycles_agree_with_enumeration() {
    for n in 3..=7 {
        for w in all_weight_tuples(n, 2) {
            let g = cycle(&w);
            let verdict = classify_cycle(n, &w).unwrap();
            assert_eq!(verdict.unmixed, brute(&g), "{n}-cycle {w:?}");
            assert_consistent(&g, &verdict);
        }
    }
}

#[test]
fn long_cycles_carry_lifted_witnesses() {
    for n in [6, 8, 9, 10, 11, 12] {
        for w in [vec![1; n], (0..n).map(|k| (k % 3 + 1) as Weight).collect()] {
            let g = cycle(&w);
            let verdict = classify_cycle(n, &w).unwrap();
            assert!(!verdict.unmixed);
            assert!(matches!(verdict.certificate, Certificate::Witnesses { .. }));
            assert_consistent(&g, &verdict);
        }
    }
}

#[test]
fn paths_agree_with_enumeration() {
    for len in 1..=5 {
        for w in all_weight_tuples(len, 3) {
            let g = path(&w);
            let verdict = classify_path(&g).unwrap();
            assert_eq!(verdict.unmixed, brute(&g), "path {w:?}");
            assert_eq!(verdict, classify_path_weights(&w).unwrap());
            assert_consistent(&g, &verdict);
            assert_eq!(classify_tree(&g).unwrap().unmixed, verdict.unmixed);
        }
    }
}

#[test]
fn suspensions_agree_with_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..100 {
        let g = random_suspension(&mut rng, 4, 3);
        let decompositions = recognize_suspensions(&g);
        assert!(!decompositions.is_empty());
        let verdict = classify_auto(&g).unwrap();
        assert_eq!(verdict.unmixed, brute(&g), "{}", g.to_json());
        assert_consistent(&g, &verdict);
        for d in &decompositions {
            let v = edgeideal::classify_suspension(&g, d).unwrap();
            assert_eq!(v.unmixed, verdict.unmixed, "decomposition {:?}", d.pairs());
            assert_consistent(&g, &v);
        }
    }
}

#[test]
fn complete_graph_covers_omit_one_vertex() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 2..=5 {
        for _ in 0..10 {
            let w: Vec<Weight> = (0..n * (n - 1) / 2)
                .map(|_| rand::Rng::gen_range(&mut rng, 1..=4))
                .collect();
            let g = complete(n, &w);
            let covers = edgeideal::enumerate_minimal_covers(&g).unwrap();
            assert!(covers.iter().all(|c| c.cardinality() == n - 1));
            let verdict = classify_auto(&g).unwrap();
            assert_eq!(verdict.family, Family::Complete);
            assert_eq!(verdict.cohen_macaulay, CmStatus::Yes);
        }
    }
}

#[test]
fn auto_dispatch_priority() {
    assert_eq!(
        classify_auto(&complete(3, &[1, 2, 3])).unwrap().family,
        Family::Complete
    );
    assert_eq!(
        classify_auto(&cycle(&[1, 1, 1, 1])).unwrap().family,
        Family::Cycle
    );
    assert_eq!(classify_auto(&path(&[1, 2])).unwrap().family, Family::Path);
    let star = weighted(4, &[(0, 1), (0, 2), (0, 3)], &[1, 1, 1]);
    assert_eq!(classify_auto(&star).unwrap().family, Family::Tree);
    // a 4-cycle with a whisker on each vertex
    let sun = weighted(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
        &[1; 8],
    );
    assert_eq!(classify_auto(&sun).unwrap().family, Family::Suspension);
    let paw = weighted(4, &[(0, 1), (1, 2), (0, 2), (2, 3)], &[1; 4]);
    let verdict = classify_auto(&paw).unwrap();
    assert_eq!(verdict.family, Family::General);
    assert_eq!(verdict.cohen_macaulay, CmStatus::Unknown);
}

#[test]
fn triangle_verdicts_coincide() {
    for w in all_weight_tuples(3, 3) {
        let g = cycle(&w);
        let as_complete = classify_auto(&g).unwrap();
        let as_cycle = classify_cycle_graph(&g).unwrap();
        assert_eq!(as_complete.unmixed, as_cycle.unmixed);
        assert_eq!(as_complete.cohen_macaulay, as_cycle.cohen_macaulay);
    }
}

fn all_small_graphs() -> impl Iterator<Item = WeightedGraph> {
    (1..=5).flat_map(|n| edgeideal::corpus::all_weighted_graphs(n, 1))
}

#[test]
fn auto_matches_enumeration_on_all_small_graphs() {
    for g in all_small_graphs() {
        let verdict = classify_auto(&g).unwrap();
        assert_eq!(
            verdict.unmixed,
            brute(&g),
            "{} as {}",
            g.to_json(),
            verdict.family
        );
        assert_consistent(&g, &verdict);
    }
}

proptest! {
    #[test]
    fn five_cycle_verdict_is_dihedral(w in prop::collection::vec(1u32..=4, 5), shift in 0usize..5) {
        let base = classify_cycle(5, &w).unwrap();
        let rotated: Vec<Weight> = (0..5).map(|k| w[(k + shift) % 5]).collect();
        let reflected: Vec<Weight> = (0..5).map(|k| w[(shift + 5 - k) % 5]).collect();
        for variant in [rotated, reflected] {
            let v = classify_cycle(5, &variant).unwrap();
            prop_assert_eq!(v.unmixed, base.unmixed);
            prop_assert_eq!(v.cohen_macaulay, base.cohen_macaulay);
        }
    }

    #[test]
    fn five_cycles_with_larger_weights(w in prop::collection::vec(1u32..=6, 5)) {
        prop_assert_eq!(classify_cycle(5, &w).unwrap().unmixed, brute(&cycle(&w)));
    }

    #[test]
    fn weighted_trees_on_seven_vertices(
        code in prop::collection::vec(0usize..7, 5),
        w in prop::collection::vec(1u32..=3, 6),
    ) {
        // decode a Prüfer sequence
        let n = 7;
        let mut degree = vec![1usize; n];
        for &c in &code {
            degree[c] += 1;
        }
        let mut edges = Vec::new();
        for &c in &code {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf.min(c), leaf.max(c)));
            degree[leaf] -= 1;
            degree[c] -= 1;
        }
        let rest: Vec<_> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        let g = weighted(n, &edges, &w);
        prop_assert_eq!(classify_tree(&g).unwrap().unmixed, brute(&g));
    }
}
