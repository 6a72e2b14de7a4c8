//! Weighted edge ideals of graphs and their m-irreducible decompositions.
//!
//! The crate has two independent routes to the irredundant decomposition of
//! `I(G_ω)`: the ideal-level splitting algorithm in [`decomposition`] and the
//! enumeration of minimal weighted vertex covers in [`cover`]. On top of
//! these sit the family classifiers in [`classify`] and randomized
//! cross-validation in [`verify`].

pub mod classify;
pub mod corpus;
pub mod cover;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod monomial;
pub mod verify;

pub use classify::{
    classify_any_suspension, classify_as, classify_auto, classify_complete, classify_cycle,
    classify_cycle_graph, classify_path, classify_path_weights, classify_suspension, classify_tree,
    is_trivially_weighted, recognize_suspensions, Certificate, ClassifyError, CmStatus, Family,
    SuspensionDecomposition, Verdict,
};
pub use cover::{
    associated_primes, cover_decomposition, cover_ideal, cover_leq, enumerate_minimal_covers,
    is_minimal_cover, is_unmixed, is_weighted_cover, m_height_and_dimension, minimal_primes,
    minimal_vertex_covers, minimize_cover, UnmixedReport, VertexSet, WeightedCover,
};
pub use decomposition::{
    irredundantize, is_m_unmixed_ideal, m_height_of, split_decompose, Decomposition,
    IrreducibleComponent, SplitDecomposer,
};
pub use error::AlgebraError;
pub use graph::{Edge, EdgeSpec, GraphError, GraphSpec, VertexId, Weight, WeightedGraph};
pub use monomial::{Exponent, Monomial, MonomialIdeal, Polarization, VariableContext};
pub use verify::{verify_graph, verify_random, CheckTally, RandomCorpus, VerificationReport};
