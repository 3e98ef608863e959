mod flip;
mod gadgets;
mod grouping;
mod partition;
mod pipeline;

pub use flip::{flip_parities, incidence_graph, FlipParities};
pub use gadgets::{
    cvc_parity_recover, set_cover_to_cvc, set_cover_to_steiner, CvcReduction, SteinerReduction,
};
pub use grouping::{group_set_cover, GroupedCoverInstance};
pub use partition::{
    set_cover_to_set_partitioning, set_partitioning_to_subset_sum,
    set_partitioning_to_subset_sum_all,
};
pub use pipeline::{
    dj_coefficient, parity_cover_pipeline, pipeline_q, ParityLedger, PipelineReport,
};
