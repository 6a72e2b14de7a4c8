use edgeideal::corpus::{all_weight_tuples, all_weighted_graphs, weighted};
use edgeideal::{
    associated_primes, cover_ideal, enumerate_minimal_covers, is_minimal_cover, is_unmixed,
    is_weighted_cover, minimal_vertex_covers, minimize_cover, Weight, WeightedCover, WeightedGraph,
};
use proptest::prelude::*;

/// Every weighted cover with weights up to the largest edge weight.
///
/// Weights above that cover nothing, so dropping such vertices gives a
/// smaller cover; this family therefore contains every minimal cover and
/// a minimal-cover witness below any other cover.
fn bounded_covers(graph: &WeightedGraph) -> Vec<WeightedCover> {
    let top = graph.max_weight().unwrap_or(1);
    all_weight_tuples(graph.vertex_count(), top + 1)
        .into_iter()
        .map(|t| {
            WeightedCover::from_entries(
                t.iter()
                    .enumerate()
                    .filter(|&(_, &x)| x > 1)
                    .map(|(v, &x)| (v, x - 1)),
            )
            .unwrap()
        })
        .filter(|c| is_weighted_cover(graph, c).unwrap())
        .collect()
}

/// Minimal covers straight from the definition: covers with no strictly
/// smaller cover.
fn naive_minimal_covers(graph: &WeightedGraph) -> Vec<WeightedCover> {
    let covers = bounded_covers(graph);
    let mut minimal: Vec<WeightedCover> = covers
        .iter()
        .filter(|c| !covers.iter().any(|o| o != *c && o.is_below(c)))
        .cloned()
        .collect();
    minimal.sort();
    minimal
}

#[test]
fn enumeration_matches_definition_on_small_graphs() {
    for n in 1..=4 {
        for g in all_weighted_graphs(n, 2) {
            assert_eq!(
                enumerate_minimal_covers(&g).unwrap(),
                naive_minimal_covers(&g),
                "{}",
                g.to_json()
            );
        }
    }
    for w in all_weight_tuples(3, 3) {
        let g = weighted(4, &[(0, 1), (1, 2), (2, 3)], &w);
        assert_eq!(
            enumerate_minimal_covers(&g).unwrap(),
            naive_minimal_covers(&g)
        );
    }
}

#[test]
fn local_minimality_matches_definition() {
    for n in 1..=3 {
        for g in all_weighted_graphs(n, 2) {
            let naive = naive_minimal_covers(&g);
            for c in bounded_covers(&g) {
                assert_eq!(is_minimal_cover(&g, &c).unwrap(), naive.contains(&c));
            }
        }
    }
}

fn graph_strategy(max_vertices: usize, max_weight: Weight) -> impl Strategy<Value = WeightedGraph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        (
            prop::collection::vec(any::<bool>(), pairs),
            prop::collection::vec(1..=max_weight, pairs),
        )
            .prop_map(move |(keep, weights)| {
                let all: Vec<_> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                let (edges, ws): (Vec<_>, Vec<_>) = all
                    .into_iter()
                    .zip(weights)
                    .zip(keep)
                    .filter(|&(_, k)| k)
                    .map(|(p, _)| p)
                    .unzip();
                weighted(n, &edges, &ws)
            })
    })
}

fn cover_strategy(n: usize, top: Weight) -> impl Strategy<Value = WeightedCover> {
    prop::collection::vec(prop::option::of(1..=top), n).prop_map(|slots| {
        WeightedCover::from_entries(
            slots
                .iter()
                .enumerate()
                .filter_map(|(v, w)| w.map(|w| (v, w))),
        )
        .unwrap()
    })
}

fn graph_and_covers() -> impl Strategy<Value = (WeightedGraph, WeightedCover, WeightedCover)> {
    graph_strategy(5, 3).prop_flat_map(|g| {
        let n = g.vertex_count();
        let top = g.max_weight().unwrap_or(1) + 1;
        (Just(g), cover_strategy(n, top), cover_strategy(n, top))
    })
}

proptest! {
    #[test]
    fn cover_order_is_ideal_containment((g, c1, c2) in graph_and_covers()) {
        let ctx = g.context();
        let p1 = cover_ideal(&c1, &ctx).to_ideal();
        let p2 = cover_ideal(&c2, &ctx).to_ideal();
        prop_assert_eq!(c2.is_below(&c1), p2.is_subset_of(&p1).unwrap());
        prop_assert_eq!(c1.is_below(&c2), p1.is_subset_of(&p2).unwrap());
    }

    #[test]
    fn cover_predicate_is_ideal_containment((g, c, _) in graph_and_covers()) {
        let p = cover_ideal(&c, &g.context()).to_ideal();
        prop_assert_eq!(
            is_weighted_cover(&g, &c).unwrap(),
            g.weighted_edge_ideal().is_subset_of(&p).unwrap()
        );
    }

    #[test]
    fn minimization_is_sound((g, c, _) in graph_and_covers()) {
        // complete the sample to a cover by adding missing endpoints
        let mut c = c;
        for e in g.edges() {
            if !is_weighted_cover(&g, &c).unwrap() && c.weight(e.u).is_none() {
                c.insert(e.u, e.weight);
            }
        }
        if !is_weighted_cover(&g, &c).unwrap() {
            c = WeightedCover::from_entries((0..g.vertex_count()).map(|v| (v, 1))).unwrap();
        }
        let m = minimize_cover(&g, &c).unwrap();
        prop_assert!(is_weighted_cover(&g, &m).unwrap());
        prop_assert!(is_minimal_cover(&g, &m).unwrap());
        prop_assert!(m.is_below(&c));
        prop_assert!(enumerate_minimal_covers(&g).unwrap().contains(&m));
    }

    #[test]
    fn vertex_covers_lift_with_same_support(g in graph_strategy(6, 3)) {
        let minimal = enumerate_minimal_covers(&g).unwrap();
        for vc in minimal_vertex_covers(&g).unwrap() {
            let lifted = WeightedCover::from_entries(
                vc.iter().map(|&v| (v, g.incident_weights(v)[0])),
            )
            .unwrap();
            let m = minimize_cover(&g, &lifted).unwrap();
            prop_assert_eq!(m.vertices(), vc);
            prop_assert!(minimal.contains(&m));
        }
    }

    #[test]
    fn weights_cannot_repair_a_mixed_graph(g in graph_strategy(6, 3)) {
        let mut sizes: Vec<usize> =
            minimal_vertex_covers(&g).unwrap().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes.dedup();
        if sizes.len() > 1 {
            prop_assert!(!is_unmixed(&g).unwrap().unmixed);
        }
    }

    #[test]
    fn trivial_weights_follow_the_unweighted_graph(g in graph_strategy(6, 1), a in 1u32..=4) {
        let g = g.with_uniform_weight(a).unwrap();
        prop_assert_eq!(
            g.weighted_edge_ideal(),
            g.edge_ideal().bracket_power(a).unwrap()
        );
        let mut sizes: Vec<usize> =
            minimal_vertex_covers(&g).unwrap().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes.dedup();
        prop_assert_eq!(is_unmixed(&g).unwrap().unmixed, sizes.len() <= 1);
    }

    #[test]
    fn radical_forgets_weights(g in graph_strategy(6, 4)) {
        prop_assert_eq!(g.weighted_edge_ideal().monomial_radical(), g.edge_ideal());
    }

    #[test]
    fn minimal_primes_are_associated(g in graph_strategy(5, 3)) {
        let associated = associated_primes(&g).unwrap();
        for prime in minimal_vertex_covers(&g).unwrap() {
            prop_assert!(associated.contains(&prime));
        }
    }

    #[test]
    fn mixed_witnesses_are_minimal(g in graph_strategy(5, 3)) {
        let report = is_unmixed(&g).unwrap();
        if let Some((lo, hi)) = report.witness {
            prop_assert!(is_minimal_cover(&g, &lo).unwrap());
            prop_assert!(is_minimal_cover(&g, &hi).unwrap());
            prop_assert!(lo.cardinality() < hi.cardinality());
        }
    }
}
