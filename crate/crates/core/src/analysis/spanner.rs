//! Minimum temporal spanners by exhaustive ascent.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{for_each_combination, UnionFind};
use crate::error::{guard, Error, Result};
use crate::model::{Contact, EdgeSlot, Strictness, TemporalGraph};
use crate::reachability::{is_temporally_connected, Sweep};

/// Default bound on the contact count of the input to [`min_spanner`].
pub const SPANNER_GUARD: usize = 24;

/// What a spanner is charged for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpannerMode {
    /// Number of contacts kept.
    Contacts,
    /// Number of edges kept, each with its full label list.
    Edges,
}

impl fmt::Display for SpannerMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpannerMode::Contacts => "contacts",
            SpannerMode::Edges => "edges",
        })
    }
}

impl FromStr for SpannerMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "contacts" | "labels" => Ok(SpannerMode::Contacts),
            "edges" => Ok(SpannerMode::Edges),
            _ => Err(Error::InvalidInput(format!("unknown spanner mode `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanner {
    /// Optimal number of contacts or edges.
    pub size: usize,
    /// A temporally connected spanning subgraph of that size. In edge mode
    /// its labels are pruned to an inclusion-minimal set, which never
    /// changes the edge count.
    pub witness: TemporalGraph,
    /// Candidate subsets examined.
    pub scanned: u64,
}

/// Whether `candidate` is a temporally connected spanning subgraph of `g`.
pub fn is_spanner(g: &TemporalGraph, candidate: &TemporalGraph, s: Strictness) -> Result<bool> {
    g.contains_subgraph(candidate).map_err(Error::NotSubgraph)?;
    Ok(is_temporally_connected(candidate, s))
}

pub fn min_spanner(g: &TemporalGraph, s: Strictness, mode: SpannerMode) -> Result<Spanner> {
    min_spanner_bounded(g, s, mode, SPANNER_GUARD)
}

/// Searches subsets by ascending size, in lexicographic order within a
/// size, and returns the first temporally connected one. The ascent starts
/// at `n - 1`, below which the footprint cannot be connected.
pub fn min_spanner_bounded(g: &TemporalGraph, s: Strictness, mode: SpannerMode, limit: usize) -> Result<Spanner> {
    guard("contact count", g.contacts_count(), limit)?;
    if !is_temporally_connected(g, s) {
        return Err(Error::NotTemporallyConnected(s));
    }
    let n = g.n();
    let groups: Vec<Vec<Contact>> = match mode {
        SpannerMode::Contacts => g.contacts().map(|c| vec![c]).collect(),
        SpannerMode::Edges => g
            .edges()
            .iter()
            .map(|e| e.labels.iter().map(|&t| Contact::new(e.u, e.v, t)).collect())
            .collect(),
    };
    let mut scanned = 0u64;
    for k in n.saturating_sub(1)..=groups.len() {
        let mut found = None;
        for_each_combination(groups.len(), k, |pick| {
            scanned += 1;
            let mut uf = UnionFind::new(n);
            for &i in pick {
                uf.union(groups[i][0].u, groups[i][0].v);
            }
            if uf.components() > 1 {
                return false;
            }
            let contacts = pick.iter().flat_map(|&i| groups[i].iter().copied());
            if Sweep::new(n, contacts, s).is_temporally_connected() {
                found = Some(pick.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(pick) = found {
            let contacts: Vec<Contact> = pick.iter().flat_map(|&i| groups[i].iter().copied()).collect();
            let contacts = match mode {
                SpannerMode::Contacts => contacts,
                SpannerMode::Edges => prune_labels(n, contacts, s),
            };
            let mut witness = TemporalGraph::from_contacts(n, contacts.iter().map(|c| (c.u, c.v, c.time)))?;
            if let Some(names) = g.names() {
                witness = witness.with_names(names.to_vec())?;
            }
            return Ok(Spanner {
                size: k,
                witness,
                scanned,
            });
        }
    }
    unreachable!("the full graph is temporally connected")
}

/// Drops contacts one at a time, in order, while the graph stays
/// temporally connected and every edge keeps a label.
fn prune_labels(n: usize, mut contacts: Vec<Contact>, s: Strictness) -> Vec<Contact> {
    let mut i = 0;
    while i < contacts.len() {
        let c = contacts[i];
        let shared = contacts.iter().filter(|d| (d.u, d.v) == (c.u, c.v)).count() > 1;
        if shared {
            let rest: Vec<Contact> = contacts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &d)| d).collect();
            if Sweep::new(n, rest.iter().copied(), s).is_temporally_connected() {
                contacts = rest;
                continue;
            }
        }
        i += 1;
    }
    contacts
}

/// Builds the subgraph of `g` keeping only the edges at `indices` (with all
/// their labels). Handy for hand-made spanner candidates.
pub fn edge_subgraph(g: &TemporalGraph, indices: &[usize]) -> Result<TemporalGraph> {
    let edges: Vec<EdgeSlot> = indices
        .iter()
        .map(|&i| {
            g.edges()
                .get(i)
                .cloned()
                .ok_or_else(|| Error::InvalidInput(format!("edge index {i} out of range")))
        })
        .collect::<Result<_>>()?;
    TemporalGraph::new(g.n(), edges)
}
