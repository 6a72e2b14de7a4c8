//! Graph and ideal generators for exhaustive and randomized checks.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;

use crate::graph::{VertexId, Weight, WeightedGraph};
use crate::monomial::{Exponent, Monomial, MonomialIdeal, VariableContext};

pub type EdgeList = Vec<(VertexId, VertexId)>;

/// Every labeled simple graph on `n` vertices, as edge lists.
pub fn all_edge_sets(n: usize) -> Vec<EdgeList> {
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 32, "too many vertices for exhaustive graphs");
    (0u32..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect()
        })
        .collect()
}

/// Every weight tuple in `{1..=max_weight}^len`, in lexicographic order.
pub fn all_weight_tuples(len: usize, max_weight: Weight) -> Vec<Vec<Weight>> {
    let mut out = Vec::new();
    let mut tuple = vec![1; len];
    loop {
        out.push(tuple.clone());
        let Some(slot) = tuple.iter().rposition(|&w| w < max_weight) else {
            return out;
        };
        tuple[slot] += 1;
        tuple[slot + 1..].fill(1);
    }
}

/// `edges` weighted by `weights`, on vertices `v1..vn`.
pub fn weighted(n: usize, edges: &[(VertexId, VertexId)], weights: &[Weight]) -> WeightedGraph {
    WeightedGraph::with_vertices(n, edges.iter().zip(weights).map(|(&(u, v), &w)| (u, v, w)))
        .expect("generated graphs are valid")
}

/// Every weighting in `{1..=max_weight}` of every labeled graph on exactly
/// `n` vertices.
pub fn all_weighted_graphs(n: usize, max_weight: Weight) -> Vec<WeightedGraph> {
    all_edge_sets(n)
        .iter()
        .flat_map(|edges| {
            all_weight_tuples(edges.len(), max_weight)
                .into_iter()
                .map(move |w| weighted(n, edges, &w))
        })
        .collect()
}

pub fn cycle(weights: &[Weight]) -> WeightedGraph {
    let n = weights.len();
    let edges: Vec<_> = (0..n).map(|k| (k, (k + 1) % n)).collect();
    weighted(n, &edges, weights)
}

pub fn path(weights: &[Weight]) -> WeightedGraph {
    let n = weights.len() + 1;
    let edges: Vec<_> = (0..n - 1).map(|k| (k, k + 1)).collect();
    weighted(n, &edges, weights)
}

pub fn complete(n: usize, weights: &[Weight]) -> WeightedGraph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    weighted(n, &edges, weights)
}

/// A graph on `1..=max_vertices` vertices where each pair is joined with
/// probability one half, with weights uniform in `1..=max_weight`.
pub fn random_graph(rng: &mut impl Rng, max_vertices: usize, max_weight: Weight) -> WeightedGraph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    let weights = random_weights(rng, edges.len(), max_weight);
    weighted(n, &edges, &weights)
}

pub fn random_weights(rng: &mut impl Rng, len: usize, max_weight: Weight) -> Vec<Weight> {
    (0..len).map(|_| rng.gen_range(1..=max_weight)).collect()
}

/// One representative of every unlabeled tree on `n` vertices.
pub fn tree_shapes(n: usize) -> Vec<EdgeList> {
    match n {
        0 => Vec::new(),
        1 => vec![Vec::new()],
        2 => vec![vec![(0, 1)]],
        _ => {
            let mut seen = BTreeSet::new();
            let mut shapes = Vec::new();
            for code in all_weight_tuples(n - 2, n as Weight) {
                let code: Vec<usize> = code.iter().map(|&c| c as usize - 1).collect();
                let edges = prufer_tree(n, &code);
                if seen.insert(tree_canonical_form(n, &edges)) {
                    shapes.push(edges);
                }
            }
            shapes
        }
    }
}

fn prufer_tree(n: usize, code: &[usize]) -> EdgeList {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<_> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges.sort_unstable();
    edges
}

/// Smallest rooted encoding over all roots; equal exactly for isomorphic
/// trees.
fn tree_canonical_form(n: usize, edges: &[(VertexId, VertexId)]) -> String {
    let mut adjacency = vec![Vec::new(); n];
    for &(u, v) in edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    fn encode(adjacency: &[Vec<usize>], v: usize, parent: Option<usize>) -> String {
        let mut children: Vec<String> = adjacency[v]
            .iter()
            .filter(|&&x| Some(x) != parent)
            .map(|&x| encode(adjacency, x, Some(v)))
            .collect();
        children.sort();
        format!("({})", children.concat())
    }
    (0..n)
        .map(|root| encode(&adjacency, root, None))
        .min()
        .expect("at least one vertex")
}

/// A random graph on `1..=max_base` base vertices with a whisker hung on
/// each, randomly weighted. Base vertex `i` is vertex `i`, its whisker is
/// vertex `k + i`.
pub fn random_suspension(rng: &mut impl Rng, max_base: usize, max_weight: Weight) -> WeightedGraph {
    let k = rng.gen_range(1..=max_base.max(1));
    let mut edges: Vec<_> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(0.6))
        .collect();
    edges.extend((0..k).map(|i| (i, k + i)));
    let weights = random_weights(rng, edges.len(), max_weight);
    weighted(2 * k, &edges, &weights)
}

/// A random ideal with up to `max_generators` generators in `dimension`
/// variables and exponents at most `max_exponent`.
pub fn random_monomial_ideal(
    rng: &mut impl Rng,
    dimension: usize,
    max_generators: usize,
    max_exponent: Exponent,
) -> MonomialIdeal {
    let context = Arc::new(VariableContext::new(dimension).expect("positive dimension"));
    let count = rng.gen_range(0..=max_generators);
    let generators: Vec<Monomial> = (0..count)
        .map(|_| {
            Monomial::new(
                (0..dimension)
                    .map(|_| rng.gen_range(0..=max_exponent))
                    .collect(),
            )
        })
        .collect();
    MonomialIdeal::new(context, generators).expect("dimensions match")
}
