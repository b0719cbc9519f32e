//! Reachability in temporal graphs under strict, non-strict, proper,
//! simple and happy semantics.
//!
//! The crate computes reachability graphs, converts graphs between
//! settings (dilation, saturation, semaphore), solves small spanner and
//! component problems exactly, and searches for realizations of a target
//! reachability graph within a given setting.

pub mod analysis;
mod combinatorics;
pub mod error;
pub mod expressivity;
pub mod fixtures;
pub mod gen;
pub mod io;
pub mod model;
pub mod reachability;
pub mod transforms;

pub use error::{Error, Result};
pub use model::{
    Contact, EdgeSlot, InducedSubgraph, SettingClass, StaticGraph, Strictness, TemporalGraph, Time, Vertex, Violation,
    ViolationKind,
};
pub use analysis::{
    clique_to_component_instance, is_spanner, max_clique, max_temporal_component, min_spanner, ComponentMode,
    SpannerMode,
};
pub use expressivity::{
    digraph_isomorphic, enumerate_labelings, induced_reachability_equivalent, reachability_equivalent, realize,
    support_equivalent, verify_separation, SeparationCase, SeparationId, VertexMapping,
};
pub use fixtures::{get_fixture, list_fixtures, Fixture};
pub use reachability::{closure, is_temporally_connected, reaches, Journey, ReachabilityGraph};
pub use transforms::{dilate, lifetime_blowup_bound, saturate, semaphore, TransformKind, TransformReport};
