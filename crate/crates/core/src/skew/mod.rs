//! Skew Schubert polynomials over the labeled Bruhat order.

mod arithmetization;
mod chains;

pub use arithmetization::{arithmetization_eval, ArithmetizationStats, MAX_CHAIN_LENGTH, MAX_DEGREE};
pub use chains::{
    increasing_chains, labeled_edges, skew_embedding_degree, skew_eval, skew_expand, ChainIter,
    ChainLabel, LabeledChain, LabeledEdge,
};
