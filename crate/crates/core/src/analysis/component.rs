//! Maximum temporal components.
//!
//! An open component is a vertex set whose members reach each other by
//! journeys that may relay through any vertex of the graph; a closed one
//! must be temporally connected on its own, using only its induced
//! subgraph.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::clique::{adjacency, clique_number, find_clique, mask_vertices};
use crate::error::{guard, Error, Result};
use crate::model::{Contact, Strictness, TemporalGraph, Vertex};
use crate::reachability::{closure, Sweep};

pub const OPEN_COMPONENT_GUARD: usize = 20;
pub const CLOSED_COMPONENT_GUARD: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentMode {
    Open,
    Closed,
}

impl fmt::Display for ComponentMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentMode::Open => "open",
            ComponentMode::Closed => "closed",
        })
    }
}

impl FromStr for ComponentMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "open" => Ok(ComponentMode::Open),
            "closed" => Ok(ComponentMode::Closed),
            _ => Err(Error::InvalidInput(format!("unknown component mode `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub size: usize,
    /// Lexicographically smallest maximum component, ascending.
    pub vertices: Vec<Vertex>,
}

/// Vertex bounds for the two component searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentGuards {
    pub open: usize,
    pub closed: usize,
}

impl Default for ComponentGuards {
    fn default() -> Self {
        ComponentGuards {
            open: OPEN_COMPONENT_GUARD,
            closed: CLOSED_COMPONENT_GUARD,
        }
    }
}

pub fn max_temporal_component(g: &TemporalGraph, s: Strictness, mode: ComponentMode) -> Result<Component> {
    max_temporal_component_bounded(g, s, mode, ComponentGuards::default())
}

/// Both modes search cliques of the mutual-reachability graph, largest
/// first. Every closed component is such a clique, since induced journeys
/// are journeys of `g`; the closed search additionally checks each
/// candidate's induced subgraph.
pub fn max_temporal_component_bounded(
    g: &TemporalGraph,
    s: Strictness,
    mode: ComponentMode,
    guards: ComponentGuards,
) -> Result<Component> {
    let limit = match mode {
        ComponentMode::Open => guards.open,
        ComponentMode::Closed => guards.closed,
    };
    guard("vertex count", g.n(), limit.min(64))?;
    if g.n() == 0 {
        return Ok(Component {
            size: 0,
            vertices: Vec::new(),
        });
    }
    let adj = adjacency(&closure(g, s).symmetric_part());
    let omega = clique_number(&adj);
    let found = match mode {
        ComponentMode::Open => find_clique(&adj, omega, |_| true),
        ComponentMode::Closed => {
            let contacts: Vec<Contact> = g.contacts().collect();
            (1..=omega).rev().find_map(|k| {
                find_clique(&adj, k, |mask| k == 1 || induced_is_connected(g.n(), &contacts, mask, s))
            })
        }
    };
    let vertices = mask_vertices(found.expect("single vertices are components"));
    Ok(Component {
        size: vertices.len(),
        vertices,
    })
}

fn induced_is_connected(n: usize, contacts: &[Contact], mask: u64, s: Strictness) -> bool {
    let mut index = vec![usize::MAX; n];
    for (i, v) in mask_vertices(mask).into_iter().enumerate() {
        index[v] = i;
    }
    let inside = contacts
        .iter()
        .filter(|c| mask >> c.u & 1 == 1 && mask >> c.v & 1 == 1)
        .map(|c| Contact::new(index[c.u], index[c.v], c.time));
    Sweep::new(mask.count_ones() as usize, inside, s).is_temporally_connected()
}
