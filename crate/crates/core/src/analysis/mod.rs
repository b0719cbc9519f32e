//! Exact solvers for spanner and component problems, and the reduction
//! from clique to temporal components.

mod clique;
mod component;
mod reduction;
mod spanner;

pub use clique::{max_clique, CLIQUE_GUARD};
pub use component::{
    max_temporal_component, max_temporal_component_bounded, Component, ComponentGuards, ComponentMode,
    CLOSED_COMPONENT_GUARD, OPEN_COMPONENT_GUARD,
};
pub use reduction::{clique_to_component_instance, hamiltonian_path_decomposition, ReductionInstance};
pub use spanner::{edge_subgraph, is_spanner, min_spanner, min_spanner_bounded, Spanner, SpannerMode, SPANNER_GUARD};
