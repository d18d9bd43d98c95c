//! Transformations that shift or preserve `m_{L(G)}(1)`, and a multiplicity
//! pipeline built from them.

mod ops;
mod pipeline;
mod trace;

pub use ops::{
    contract_line_p4, contract_tree_p5, delete_pendant_p3, edge_split, edge_split_sites,
    final_reduction_graph, first_pendant_p3, next_reduction_site, reduced_graph,
    reduction_operation, FinalReduction, ReducedGraph, ReductionError,
};
pub use pipeline::{multiplicity_fast, multiplicity_fast_with};
pub use trace::{ReductionStep, ReductionTrace, ReplayError, Rule};
