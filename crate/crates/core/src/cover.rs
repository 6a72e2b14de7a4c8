//! Weighted vertex covers and the cover-based decomposition of `I(G_ω)`.
//!
//! A weighted cover `(V', δ')` assigns a weight to each chosen vertex; an edge
//! `e` is covered by an endpoint `v ∈ V'` when `δ'(v) <= ω(e)`. Covers are
//! ordered so that fewer vertices and larger weights are *smaller*, and the
//! minimal ones correspond exactly to the components of the irredundant
//! m-irreducible decomposition of the weighted edge ideal.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::decomposition::{Decomposition, IrreducibleComponent};
use crate::graph::{GraphError, VertexId, Weight, WeightedGraph};
use crate::monomial::VariableContext;

/// Exhaustive enumeration is refused above this many vertices.
pub const ENUMERATION_VERTEX_LIMIT: usize = 24;

/// A sorted vertex subset.
pub type VertexSet = Vec<VertexId>;

/// `(V', δ')` as a map from vertex to weight.
///
/// `Ord` compares the sorted `(vertex, weight)` pairs lexicographically,
/// which is the canonical order used for all cover listings.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedCover {
    entries: BTreeMap<VertexId, Weight>,
}

impl WeightedCover {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(
        entries: impl IntoIterator<Item = (VertexId, Weight)>,
    ) -> Result<Self, GraphError> {
        let mut cover = Self::new();
        for (v, w) in entries {
            if w < 1 {
                return Err(GraphError::NonPositiveCoverWeight(format!("vertex {v}")));
            }
            if cover.entries.insert(v, w).is_some() {
                return Err(GraphError::CoverParse(format!("vertex {v} listed twice")));
            }
        }
        Ok(cover)
    }

    /// Parses `v1^2, v2^5` (braces optional, a bare name means weight 1)
    /// against the vertex names of `graph`.
    pub fn parse(text: &str, graph: &WeightedGraph) -> Result<Self, GraphError> {
        let body = text.trim();
        let body = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .unwrap_or(body);
        let mut cover = Self::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, weight) = match item.split_once('^') {
                Some((n, w)) => {
                    let w: i64 = w
                        .trim()
                        .parse()
                        .map_err(|_| GraphError::CoverParse(format!("bad weight in {item:?}")))?;
                    (n.trim(), w)
                }
                None => (item, 1),
            };
            let v = graph
                .vertex_index(name)
                .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))?;
            if weight < 1 {
                return Err(GraphError::NonPositiveCoverWeight(name.to_string()));
            }
            let weight = Weight::try_from(weight)
                .map_err(|_| GraphError::CoverParse(format!("weight too large in {item:?}")))?;
            if cover.entries.insert(v, weight).is_some() {
                return Err(GraphError::CoverParse(format!("{name} listed twice")));
            }
        }
        Ok(cover)
    }

    /// Inserts or overwrites the weight of `v`.
    ///
    /// # Panics
    /// If `weight` is zero.
    pub fn insert(&mut self, v: VertexId, weight: Weight) -> Option<Weight> {
        assert!(weight >= 1, "cover weights are positive");
        self.entries.insert(v, weight)
    }

    pub fn remove(&mut self, v: VertexId) -> Option<Weight> {
        self.entries.remove(&v)
    }

    pub fn weight(&self, v: VertexId) -> Option<Weight> {
        self.entries.get(&v).copied()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.entries.contains_key(&v)
    }

    pub fn entries(&self) -> impl Iterator<Item = (VertexId, Weight)> + '_ {
        self.entries.iter().map(|(&v, &w)| (v, w))
    }

    pub fn vertices(&self) -> VertexSet {
        self.entries.keys().copied().collect()
    }

    /// `|(V', δ')| = |V'|`.
    pub fn cardinality(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The cover order `self <= other`: `V_self ⊆ V_other` and
    /// `δ_other(v) <= δ_self(v)` on `V_self`.
    pub fn is_below(&self, other: &WeightedCover) -> bool {
        self.entries
            .iter()
            .all(|(v, w)| other.entries.get(v).is_some_and(|ow| ow <= w))
    }

    /// Renames vertices through `map` (old index to new index).
    pub fn relabel(&self, map: &[VertexId]) -> WeightedCover {
        WeightedCover {
            entries: self.entries.iter().map(|(&v, &w)| (map[v], w)).collect(),
        }
    }

    pub fn display<'a>(&'a self, graph: &'a WeightedGraph) -> CoverDisplay<'a> {
        CoverDisplay { cover: self, graph }
    }
}

pub struct CoverDisplay<'a> {
    cover: &'a WeightedCover,
    graph: &'a WeightedGraph,
}

impl fmt::Display for CoverDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .cover
            .entries()
            .map(|(v, w)| format!("{}^{}", self.graph.name(v), w))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Whether `smaller <= larger` in the cover order.
pub fn cover_leq(smaller: &WeightedCover, larger: &WeightedCover) -> bool {
    smaller.is_below(larger)
}

pub fn is_weighted_cover(graph: &WeightedGraph, cover: &WeightedCover) -> Result<bool, GraphError> {
    check_indices(graph, cover)?;
    Ok(covers_all(graph, cover))
}

/// `P(V', δ') = (X_i^{δ'(v_i)} : v_i ∈ V')`.
pub fn cover_ideal(cover: &WeightedCover, context: &Arc<VariableContext>) -> IrreducibleComponent {
    IrreducibleComponent::new(context.clone(), cover.entries())
        .expect("cover vertices lie in the context")
}

/// True iff `cover` is a weighted cover from which no vertex can be removed
/// and whose weights cannot be raised.
///
/// Checking single-step moves suffices: covers are closed upward in the
/// cover order, so any strictly smaller cover sits below one of them.
pub fn is_minimal_cover(graph: &WeightedGraph, cover: &WeightedCover) -> Result<bool, GraphError> {
    if !is_weighted_cover(graph, cover)? {
        return Ok(false);
    }
    Ok(cover.entries().all(|(v, w)| {
        edges_left_for(graph, cover, v, None) && edges_left_for(graph, cover, v, Some(w + 1))
    }))
}

/// Drops vertices in ascending index order while the rest still covers,
/// then raises each remaining weight (again ascending) to its largest
/// feasible value. The result is minimal and below `cover`.
pub fn minimize_cover(
    graph: &WeightedGraph,
    cover: &WeightedCover,
) -> Result<WeightedCover, GraphError> {
    if !is_weighted_cover(graph, cover)? {
        return Err(GraphError::NotACover);
    }
    let mut current = cover.clone();

    loop {
        let removable = current
            .vertices()
            .into_iter()
            .find(|&v| !edges_left_for(graph, &current, v, None));
        match removable {
            Some(v) => {
                current.remove(v);
            }
            None => break,
        }
    }

    for v in current.vertices() {
        let best = graph
            .neighbors(v)
            .iter()
            .filter(|&&(x, w)| !current.weight(x).is_some_and(|xw| xw <= w))
            .map(|&(_, w)| w)
            .min()
            .expect("every kept vertex is needed for some edge");
        current.insert(v, best);
    }
    Ok(current)
}

/// Every minimal weighted cover of `graph`, in canonical order.
///
/// In a minimal cover each weight `δ'(v)` equals the smallest weight among
/// the edges that only `v` covers, so it is one of the weights incident to
/// `v`. Candidates are therefore vertex covers `V'` with weights drawn from
/// the incident weights, kept when minimal.
pub fn enumerate_minimal_covers(graph: &WeightedGraph) -> Result<Vec<WeightedCover>, GraphError> {
    let n = check_enumerable(graph)?;
    let incident: Vec<Vec<Weight>> = (0..n).map(|v| graph.incident_weights(v)).collect();
    let mut found = Vec::new();

    for mask in 0u32..(1 << n) {
        let chosen: Vec<VertexId> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if chosen.iter().any(|&v| incident[v].is_empty()) || !is_vertex_cover_mask(graph, mask) {
            continue;
        }
        let mut odometer = vec![0usize; chosen.len()];
        loop {
            let cover = WeightedCover {
                entries: chosen
                    .iter()
                    .zip(&odometer)
                    .map(|(&v, &k)| (v, incident[v][k]))
                    .collect(),
            };
            if is_minimal_cover(graph, &cover)? {
                found.push(cover);
            }
            if !advance(&mut odometer, |slot| incident[chosen[slot]].len()) {
                break;
            }
        }
    }
    found.sort();
    Ok(found)
}

/// `I(G_ω) = ∩ P(V', δ')` over the minimal weighted covers; irredundant
/// without pruning.
pub fn cover_decomposition(graph: &WeightedGraph) -> Result<Decomposition, GraphError> {
    let context = graph.context();
    let components = enumerate_minimal_covers(graph)?
        .iter()
        .map(|c| cover_ideal(c, &context))
        .collect();
    Ok(Decomposition::irredundant_unchecked(context, components))
}

/// Outcome of the unmixedness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnmixedReport {
    pub unmixed: bool,
    /// Distinct cardinalities of the minimal weighted covers, ascending.
    pub cardinalities: Vec<usize>,
    /// A smallest and a largest minimal cover when the graph is mixed.
    pub witness: Option<(WeightedCover, WeightedCover)>,
}

pub fn is_unmixed(graph: &WeightedGraph) -> Result<UnmixedReport, GraphError> {
    Ok(unmixed_report(&enumerate_minimal_covers(graph)?))
}

pub(crate) fn unmixed_report(covers: &[WeightedCover]) -> UnmixedReport {
    let mut cardinalities: Vec<usize> = covers.iter().map(WeightedCover::cardinality).collect();
    cardinalities.sort_unstable();
    cardinalities.dedup();
    let unmixed = cardinalities.len() <= 1;
    let witness = (!unmixed).then(|| {
        let lo = cardinalities[0];
        let hi = *cardinalities.last().expect("nonempty");
        let pick = |k: usize| {
            covers
                .iter()
                .find(|c| c.cardinality() == k)
                .expect("cardinality occurs")
                .clone()
        };
        (pick(lo), pick(hi))
    });
    UnmixedReport {
        unmixed,
        cardinalities,
        witness,
    }
}

/// Inclusion-minimal (unweighted) vertex covers, lexicographically sorted.
pub fn minimal_vertex_covers(graph: &WeightedGraph) -> Result<Vec<VertexSet>, GraphError> {
    let n = check_enumerable(graph)?;
    let mut found: Vec<VertexSet> = (0u32..(1 << n))
        .filter(|&mask| {
            is_vertex_cover_mask(graph, mask)
                && (0..n)
                    .filter(|&v| mask >> v & 1 == 1)
                    .all(|v| !is_vertex_cover_mask(graph, mask & !(1 << v)))
        })
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
        .collect();
    found.sort();
    Ok(found)
}

/// Supports of the minimal primes `P(V')`: the minimal vertex covers of the
/// underlying graph.
pub fn minimal_primes(graph: &WeightedGraph) -> Result<Vec<VertexSet>, GraphError> {
    minimal_vertex_covers(graph)
}

/// Supports of the associated primes: the distinct supports of the minimal
/// weighted covers.
pub fn associated_primes(graph: &WeightedGraph) -> Result<Vec<VertexSet>, GraphError> {
    let mut supports: Vec<VertexSet> = enumerate_minimal_covers(graph)?
        .iter()
        .map(WeightedCover::vertices)
        .collect();
    supports.sort();
    supports.dedup();
    Ok(supports)
}

/// `(m-height, d - m-height)`. The second entry is the Krull dimension of
/// `R/I(G_ω)` when the coefficients form a field.
pub fn m_height_and_dimension(graph: &WeightedGraph) -> Result<(usize, usize), GraphError> {
    let height = enumerate_minimal_covers(graph)?
        .iter()
        .map(WeightedCover::cardinality)
        .min()
        .unwrap_or(0);
    Ok((height, graph.vertex_count() - height))
}

/// Whether some edge at `v` with weight below `threshold` (every edge at `v`
/// when `threshold` is `None`) is not covered by its other endpoint.
fn edges_left_for(
    graph: &WeightedGraph,
    cover: &WeightedCover,
    v: VertexId,
    threshold: Option<Weight>,
) -> bool {
    graph.neighbors(v).iter().any(|&(x, w)| {
        threshold.is_none_or(|t| w < t) && !cover.weight(x).is_some_and(|xw| xw <= w)
    })
}

fn covers_all(graph: &WeightedGraph, cover: &WeightedCover) -> bool {
    graph.edges().iter().all(|e| {
        cover.weight(e.u).is_some_and(|d| d <= e.weight)
            || cover.weight(e.v).is_some_and(|d| d <= e.weight)
    })
}

fn check_indices(graph: &WeightedGraph, cover: &WeightedCover) -> Result<(), GraphError> {
    let count = graph.vertex_count();
    match cover.entries.keys().find(|&&v| v >= count) {
        Some(&index) => Err(GraphError::VertexOutOfRange { index, count }),
        None => Ok(()),
    }
}

fn check_enumerable(graph: &WeightedGraph) -> Result<usize, GraphError> {
    let n = graph.vertex_count();
    if n > ENUMERATION_VERTEX_LIMIT {
        return Err(GraphError::TooManyVertices {
            count: n,
            limit: ENUMERATION_VERTEX_LIMIT,
        });
    }
    Ok(n)
}

fn is_vertex_cover_mask(graph: &WeightedGraph, mask: u32) -> bool {
    graph
        .edges()
        .iter()
        .all(|e| mask >> e.u & 1 == 1 || mask >> e.v & 1 == 1)
}

/// Mixed-radix increment; false once every digit has wrapped.
fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for (slot, digit) in digits.iter_mut().enumerate() {
        *digit += 1;
        if *digit < radix(slot) {
            return true;
        }
        *digit = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(weights: &[Weight]) -> WeightedGraph {
        let n = weights.len();
        WeightedGraph::with_vertices(n, (0..n).map(|i| (i, (i + 1) % n, weights[i]))).unwrap()
    }

    fn path(weights: &[Weight]) -> WeightedGraph {
        let n = weights.len() + 1;
        WeightedGraph::with_vertices(n, (0..n - 1).map(|i| (i, i + 1, weights[i]))).unwrap()
    }

    /// Vertices are 1-based here to match the usual `v1^2` notation.
    fn cover(pairs: &[(usize, Weight)]) -> WeightedCover {
        WeightedCover::from_entries(pairs.iter().map(|&(v, w)| (v - 1, w))).unwrap()
    }

    #[test]
    fn cover_predicate_on_five_cycle() {
        let g = cycle(&[2, 5, 3, 4, 2]);
        assert!(!is_weighted_cover(&g, &cover(&[(1, 3), (2, 6), (4, 3), (5, 2)])).unwrap());
        assert!(is_weighted_cover(&g, &cover(&[(1, 2), (2, 5), (4, 3), (5, 2)])).unwrap());
        let edgeless = WeightedGraph::with_vertices(2, []).unwrap();
        assert!(is_weighted_cover(&edgeless, &WeightedCover::new()).unwrap());
        assert!(matches!(
            is_weighted_cover(&edgeless, &cover(&[(3, 1)])),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn cover_order() {
        let minimal = cover(&[(1, 2), (2, 5), (4, 3)]);
        assert!(minimal.is_below(&cover(&[(1, 2), (2, 5), (4, 3), (5, 2)])));
        assert!(minimal.is_below(&cover(&[(1, 2), (2, 5), (4, 2)])));
        assert!(minimal.is_below(&minimal));
        assert!(!cover(&[(1, 2), (2, 5), (4, 2)]).is_below(&minimal));
    }

    #[test]
    fn cover_ideals() {
        let ctx = Arc::new(VariableContext::new(5).unwrap());
        assert_eq!(
            cover_ideal(&cover(&[(1, 2), (2, 5), (4, 3), (5, 2)]), &ctx).to_string(),
            "(X1^2, X2^5, X4^3, X5^2)"
        );
        assert_eq!(cover_ideal(&WeightedCover::new(), &ctx).m_height(), 0);
        assert_eq!(cover_ideal(&cover(&[(2, 2)]), &ctx).to_string(), "(X2^2)");
    }

    #[test]
    fn minimize_golden() {
        let g = cycle(&[2, 5, 3, 4, 2]);
        let target = cover(&[(1, 2), (2, 5), (4, 3)]);
        assert_eq!(
            minimize_cover(&g, &cover(&[(1, 2), (2, 5), (4, 3), (5, 2)])).unwrap(),
            target
        );
        assert_eq!(
            minimize_cover(&g, &cover(&[(1, 2), (2, 5), (4, 2)])).unwrap(),
            target
        );
        assert_eq!(minimize_cover(&g, &target).unwrap(), target);
        assert_eq!(
            minimize_cover(&g, &cover(&[(1, 3)])).unwrap_err(),
            GraphError::NotACover
        );
    }

    #[test]
    fn minimal_covers_of_two_path() {
        let g = path(&[2, 5]);
        assert_eq!(
            enumerate_minimal_covers(&g).unwrap(),
            vec![
                cover(&[(1, 2), (2, 5)]),
                cover(&[(1, 2), (3, 5)]),
                cover(&[(2, 2)])
            ]
        );
        let g = path(&[3, 3]);
        assert_eq!(
            enumerate_minimal_covers(&g).unwrap(),
            vec![cover(&[(1, 3), (3, 3)]), cover(&[(2, 3)])]
        );
    }

    #[test]
    fn single_edge_covers() {
        let g = path(&[4]);
        assert_eq!(
            enumerate_minimal_covers(&g).unwrap(),
            vec![cover(&[(1, 4)]), cover(&[(2, 4)])]
        );
    }

    #[test]
    fn edgeless_graph() {
        let g = WeightedGraph::with_vertices(3, []).unwrap();
        assert_eq!(
            enumerate_minimal_covers(&g).unwrap(),
            vec![WeightedCover::new()]
        );
        let d = cover_decomposition(&g).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.m_height().unwrap(), 0);
        assert!(d.intersection().is_zero());
        assert!(is_unmixed(&g).unwrap().unmixed);
        assert_eq!(minimal_primes(&g).unwrap(), vec![Vec::<usize>::new()]);
        assert_eq!(m_height_and_dimension(&g).unwrap(), (0, 3));
    }

    #[test]
    fn three_cycle_decomposition() {
        let g = cycle(&[1, 2, 3]);
        let d = cover_decomposition(&g).unwrap();
        let text: Vec<String> = d.components().iter().map(|c| c.to_string()).collect();
        assert_eq!(
            text,
            ["(X1, X2^2)", "(X1, X3^2)", "(X1^3, X2)", "(X2, X3^3)"]
        );
        assert_eq!(d.intersection(), g.weighted_edge_ideal());
    }

    #[test]
    fn unmixedness() {
        let report = is_unmixed(&path(&[2, 5])).unwrap();
        assert!(!report.unmixed);
        assert_eq!(report.cardinalities, vec![1, 2]);
        let (lo, hi) = report.witness.unwrap();
        assert_eq!((lo.cardinality(), hi.cardinality()), (1, 2));

        assert!(is_unmixed(&cycle(&[3, 1, 2])).unwrap().unmixed);
        assert!(!is_unmixed(&cycle(&[1, 1, 1, 2])).unwrap().unmixed);
    }

    #[test]
    fn vertex_covers_and_primes() {
        let p2 = path(&[1, 1]);
        assert_eq!(
            minimal_vertex_covers(&p2).unwrap(),
            vec![vec![0, 2], vec![1]]
        );
        let c5 = cycle(&[1; 5]);
        let covers = minimal_vertex_covers(&c5).unwrap();
        assert_eq!(covers.len(), 5);
        assert!(covers.iter().all(|c| c.len() == 3));

        let k4 = WeightedGraph::with_vertices(
            4,
            [
                (0, 1, 1),
                (0, 2, 1),
                (0, 3, 1),
                (1, 2, 1),
                (1, 3, 1),
                (2, 3, 1),
            ],
        )
        .unwrap();
        let covers = minimal_vertex_covers(&k4).unwrap();
        assert_eq!(covers.len(), 4);
        assert!(covers.iter().all(|c| c.len() == 3));

        let p2w = path(&[2, 5]);
        assert_eq!(minimal_primes(&p2w).unwrap(), vec![vec![0, 2], vec![1]]);
        assert_eq!(
            associated_primes(&p2w).unwrap(),
            vec![vec![0, 1], vec![0, 2], vec![1]]
        );
        assert_eq!(
            associated_primes(&path(&[2, 2])).unwrap(),
            vec![vec![0, 2], vec![1]]
        );
    }

    #[test]
    fn height_and_dimension() {
        assert_eq!(m_height_and_dimension(&cycle(&[1; 4])).unwrap(), (2, 2));
        assert_eq!(m_height_and_dimension(&path(&[1; 4])).unwrap().1, 3);
    }

    #[test]
    fn parse_and_display() {
        let g = cycle(&[2, 5, 3, 4, 2]);
        let c = WeightedCover::parse("{v1^2, v2^5, v4}", &g).unwrap();
        assert_eq!(c, cover(&[(1, 2), (2, 5), (4, 1)]));
        assert_eq!(c.display(&g).to_string(), "{v1^2, v2^5, v4^1}");
        assert!(WeightedCover::parse("v9^2", &g).is_err());
        assert!(WeightedCover::parse("v1^0", &g).is_err());
        assert!(WeightedCover::parse("v1^x", &g)
            .unwrap_err()
            .is_parse_error());
        assert!(WeightedCover::parse("v1^1, v1^2", &g).is_err());
    }

    #[test]
    fn too_large_for_enumeration() {
        let g = WeightedGraph::with_vertices(ENUMERATION_VERTEX_LIMIT + 1, []).unwrap();
        assert!(matches!(
            enumerate_minimal_covers(&g),
            Err(GraphError::TooManyVertices { .. })
        ));
    }
}
