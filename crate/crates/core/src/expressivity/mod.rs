//! Comparing what different settings can express.

mod enumerate;
mod equivalence;
mod realize;
mod separation;

pub use enumerate::{enumerate_labelings, Labelings, OrderedPartitions, SEQUENCE_VERTEX_GUARD, SIMPLE_EDGE_GUARD};
pub use equivalence::{
    digraph_isomorphic, find_isomorphism, induced_reachability_equivalent, reachability_equivalent,
    support_equivalent, VertexMapping, ISOMORPHISM_GUARD,
};
pub use realize::{realize, realize_search, Realization, RealizeOptions, REALIZE_SCAN_LIMIT, REALIZE_VERTEX_GUARD};
pub use separation::{verify_separation, SeparationCase, SeparationCertificate, SeparationId};
