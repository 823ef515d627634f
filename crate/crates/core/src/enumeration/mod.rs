//! Isomorph-free generation and the exhaustive verifiers built on it.

mod extremal;
mod generate;
mod sweeps;

pub use extremal::{
    compare_cone, cone_correspondence, verify_corollary12, verify_lemma5, verify_theorem8, ConeReport,
    ExtremalReport, EXTREMAL_DEFAULT_LIMIT, EXTREMAL_FORCED_LIMIT,
};
pub use generate::{
    count_graphs, for_each_graph, generate_all, GenFilter, RunOptions, MAX_GENERATION_ORDER, UNFILTERED_LIMIT,
};
pub use sweeps::{
    condition_soundness_sweep, size_bound_sweep, verify_lemma7, ConditionTally, DeletionCounterexample,
    DeletionReport, JoinTemplate, SizeBoundReport, SoundnessReport, SUBSET_LIMIT, SWEEP_DEFAULT_LIMIT,
    SWEEP_FORCED_LIMIT,
};
