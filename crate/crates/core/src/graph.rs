//! Finite simple graphs with a positive integer weight on every edge.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::monomial::{Exponent, Monomial, MonomialIdeal, VariableContext};

pub type VertexId = usize;
pub type Weight = Exponent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed graph description: {0}")]
    Parse(String),

    #[error("graph must have at least one vertex")]
    NoVertices,

    #[error("vertex names must be nonempty")]
    EmptyVertexName,

    #[error("duplicate vertex name {0:?}")]
    DuplicateVertexName(String),

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("vertex index {index} is out of range for {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("loop at vertex {0}")]
    Loop(String),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),

    #[error("weight must be >= 1 (edge {u}-{v} has weight {weight})")]
    NonPositiveWeight { u: String, v: String, weight: i64 },

    #[error("weight {weight} on edge {u}-{v} is too large")]
    WeightTooLarge { u: String, v: String, weight: i64 },

    #[error("malformed cover: {0}")]
    CoverParse(String),

    #[error("cover weight for {0} must be >= 1")]
    NonPositiveCoverWeight(String),

    #[error("not a weighted vertex cover of the graph")]
    NotACover,

    #[error("{count} vertices exceeds the enumeration limit of {limit}")]
    TooManyVertices { count: usize, limit: usize },
}

impl GraphError {
    /// Syntax-level failures, as opposed to well-formed but invalid input.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, GraphError::Parse(_) | GraphError::CoverParse(_))
    }
}

/// An edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Weight,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> Option<VertexId> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

/// The JSON shape accepted on input:
/// `{"vertices": ["v1", ...], "edges": [{"u": "v1", "v": "v2", "w": 2}, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub u: String,
    pub v: String,
    pub w: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    names: Vec<String>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(VertexId, Weight)>>,
}

impl WeightedGraph {
    /// Builds and validates a graph from vertex names and index triples
    /// `(u, v, weight)`.
    pub fn new(
        names: Vec<String>,
        edges: impl IntoIterator<Item = (VertexId, VertexId, Weight)>,
    ) -> Result<Self, GraphError> {
        if names.is_empty() {
            return Err(GraphError::NoVertices);
        }
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() {
                return Err(GraphError::EmptyVertexName);
            }
            if !seen.insert(name.as_str()) {
                return Err(GraphError::DuplicateVertexName(name.clone()));
            }
        }

        let count = names.len();
        let mut adjacency = vec![Vec::new(); count];
        let mut pairs = HashSet::new();
        let mut list = Vec::new();
        for (a, b, weight) in edges {
            for index in [a, b] {
                if index >= count {
                    return Err(GraphError::VertexOutOfRange { index, count });
                }
            }
            if a == b {
                return Err(GraphError::Loop(names[a].clone()));
            }
            if weight < 1 {
                return Err(GraphError::NonPositiveWeight {
                    u: names[a].clone(),
                    v: names[b].clone(),
                    weight: i64::from(weight),
                });
            }
            let (u, v) = (a.min(b), a.max(b));
            if !pairs.insert((u, v)) {
                return Err(GraphError::DuplicateEdge(
                    names[u].clone(),
                    names[v].clone(),
                ));
            }
            adjacency[u].push((v, weight));
            adjacency[v].push((u, weight));
            list.push(Edge { u, v, weight });
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }
        Ok(Self {
            names,
            edges: list,
            adjacency,
        })
    }

    /// Vertices named `v1`..`vn`.
    pub fn with_vertices(
        count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId, Weight)>,
    ) -> Result<Self, GraphError> {
        Self::new((1..=count).map(|i| format!("v{i}")).collect(), edges)
    }

    /// Resolves vertex names in a parsed JSON description and validates it.
    pub fn from_spec(spec: &GraphSpec) -> Result<Self, GraphError> {
        let index: HashMap<&str, usize> = spec
            .vertices
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut triples = Vec::with_capacity(spec.edges.len());
        for e in &spec.edges {
            let lookup = |name: &str| {
                index
                    .get(name)
                    .copied()
                    .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
            };
            let (u, v) = (lookup(&e.u)?, lookup(&e.v)?);
            if e.w < 1 {
                return Err(GraphError::NonPositiveWeight {
                    u: e.u.clone(),
                    v: e.v.clone(),
                    weight: e.w,
                });
            }
            let w = Weight::try_from(e.w).map_err(|_| GraphError::WeightTooLarge {
                u: e.u.clone(),
                v: e.v.clone(),
                weight: e.w,
            })?;
            triples.push((u, v, w));
        }
        Self::new(spec.vertices.clone(), triples)
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let spec: GraphSpec =
            serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
        Self::from_spec(&spec)
    }

    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self.names.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSpec {
                    u: self.names[e.u].clone(),
                    v: self.names[e.v].clone(),
                    w: i64::from(e.weight),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_spec()).expect("serializable")
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n == name)
    }

    /// Neighbors of `v` with the weight of the connecting edge, sorted by
    /// neighbor index.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, Weight)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn weight_between(&self, a: VertexId, b: VertexId) -> Option<Weight> {
        self.adjacency
            .get(a)?
            .iter()
            .find(|(x, _)| *x == b)
            .map(|&(_, w)| w)
    }

    /// Distinct weights of the edges at `v`, ascending.
    pub fn incident_weights(&self, v: VertexId) -> Vec<Weight> {
        let set: BTreeSet<Weight> = self.adjacency[v].iter().map(|&(_, w)| w).collect();
        set.into_iter().collect()
    }

    pub fn max_weight(&self) -> Option<Weight> {
        self.edges.iter().map(|e| e.weight).max()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == n
    }

    /// The same graph with every edge weight replaced by `weight`.
    pub fn with_uniform_weight(&self, weight: Weight) -> Result<Self, GraphError> {
        Self::new(
            self.names.clone(),
            self.edges.iter().map(|e| (e.u, e.v, weight)),
        )
    }

    /// `R = A[X1, ..., Xd]`, one variable per vertex in index order.
    pub fn context(&self) -> Arc<VariableContext> {
        Arc::new(VariableContext::new(self.vertex_count()).expect("at least one vertex"))
    }

    /// `I(G) = (X_i X_j : v_i v_j ∈ E)`.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        self.ideal_with(|_| 1)
    }

    /// `I(G_ω) = (X_i^{ω(e)} X_j^{ω(e)} : e = v_i v_j ∈ E)`.
    pub fn weighted_edge_ideal(&self) -> MonomialIdeal {
        self.ideal_with(|e| e.weight)
    }

    fn ideal_with(&self, exponent: impl Fn(&Edge) -> Exponent) -> MonomialIdeal {
        let d = self.vertex_count();
        let gens = self.edges.iter().map(|e| {
            let mut exps = vec![0; d];
            let w = exponent(e);
            exps[e.u] = w;
            exps[e.v] = w;
            Monomial::new(exps)
        });
        MonomialIdeal::new(self.context(), gens).expect("graph context")
    }
}
