//! From an induced minor of a large complete binary tree to an induced
//! subdivision of T_k or the line graph of one.

mod fork;
mod mono;
mod pipeline;
mod wattle;

pub use fork::{clean_fork, CleanFork, ForkParts};
pub use mono::{
    induced_minor_to_induced_subgraph, minor_height, mono_height, monochromatic_cbt, wattle_to_subgraph, Colour, InducedTreeCert,
    TwoColoring, VerticalEmbedding,
};
pub use pipeline::{
    bounded_degree_pipeline, decide_bounded_pathwidth, degree_thresholds, minor_free_pipeline, threshold_step, Category, Decision,
    MinorFreeOutcome, Outcome, PipelineReport, StageReport, Thresholds,
};
pub use wattle::minor_to_wattle;
