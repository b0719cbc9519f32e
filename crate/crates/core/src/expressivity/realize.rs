//! Search for a temporal graph with a prescribed reachability graph.

use serde::Serialize;

use super::enumerate::{labelings, SEQUENCE_VERTEX_GUARD, SIMPLE_EDGE_GUARD};
use super::equivalence::find_isomorphism;
use crate::combinatorics::UnionFind;
use crate::error::{guard, Error, Result};
use crate::model::{Contact, SettingClass, StaticGraph, TemporalGraph, Vertex};
use crate::reachability::{ReachabilityGraph, Sweep};

/// Vertex bound for realization searches.
pub const REALIZE_VERTEX_GUARD: usize = 6;
/// Default bound on the number of labelings a search may examine.
pub const REALIZE_SCAN_LIMIT: u64 = 500_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RealizeOptions {
    /// Bound on the number of labelings examined.
    pub scan_limit: u64,
    /// Skip footprints with an unrelated pair at distance two, in settings
    /// where such pairs always have an arc.
    pub prune_distance_two: bool,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions {
            scan_limit: REALIZE_SCAN_LIMIT,
            prune_distance_two: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realization {
    /// A graph of the setting whose closure equals the target.
    pub witness: Option<TemporalGraph>,
    /// Labelings whose closure was computed.
    pub scanned: u64,
    /// Footprints that survived pruning.
    pub footprints: u64,
}

/// First graph of `setting` whose closure is isomorphic to `target`,
/// relabeled so that its closure equals `target`.
pub fn realize(target: &ReachabilityGraph, setting: SettingClass) -> Result<Option<TemporalGraph>> {
    Ok(realize_search(target, setting, &RealizeOptions::default())?.witness)
}

/// Exhaustive search with its statistics.
///
/// A witness may be renamed so that its closure equals the target exactly;
/// then each of its footprint edges joins a mutually reachable pair, so
/// only footprints inside the symmetric part of the target are scanned.
/// Footprints are further skipped when some arc joins two of their
/// components, and optionally, in settings where journeys may share a time
/// or the graph is proper, when two vertices at footprint distance two are
/// unrelated in the target: such pairs always have an arc.
pub fn realize_search(target: &ReachabilityGraph, setting: SettingClass, options: &RealizeOptions) -> Result<Realization> {
    let scan_limit = options.scan_limit;
    let n = target.n();
    guard("vertex count", n, REALIZE_VERTEX_GUARD)?;
    let sym: Vec<(Vertex, Vertex)> = target.symmetric_part().edges().collect();
    if setting.requires_simple() {
        guard("symmetric edge count", sym.len(), SIMPLE_EDGE_GUARD)?;
    } else {
        guard("vertex count", n, SEQUENCE_VERTEX_GUARD)?;
    }
    let strictness = setting.strictness();
    let distance_two_has_arc = options.prune_distance_two
        && (setting.requires_proper() || strictness == crate::model::Strictness::NonStrict);
    let max_len = target.arc_count();
    let mut out = Realization {
        witness: None,
        scanned: 0,
        footprints: 0,
    };
    let mut contacts: Vec<Contact> = Vec::new();
    for mask in 0u64..1 << sym.len() {
        let chosen: Vec<(Vertex, Vertex)> = (0..sym.len()).filter(|&i| mask >> i & 1 == 1).map(|i| sym[i]).collect();
        let f = StaticGraph::undirected(n, chosen.iter().copied())?;
        if !arcs_within_components(&f, target) || (distance_two_has_arc && !distance_two_related(&f, target)) {
            continue;
        }
        out.footprints += 1;
        let mut stream = labelings(&f, setting, max_len)?;
        while stream.next_contacts(&mut contacts) {
            out.scanned += 1;
            if out.scanned > scan_limit {
                return Err(Error::GuardExceeded {
                    what: "labelings scanned",
                    actual: out.scanned as usize,
                    limit: scan_limit as usize,
                });
            }
            let c = Sweep::new(n, contacts.iter().copied(), strictness).closure();
            let perm = if &c == target { Some((0..n).collect()) } else { find_isomorphism(&c, target) };
            if let Some(p) = perm {
                let renamed = contacts.iter().map(|c| (p[c.u], p[c.v], c.time));
                out.witness = Some(TemporalGraph::from_contacts(n, renamed)?);
                return Ok(out);
            }
        }
    }
    Ok(out)
}

fn arcs_within_components(f: &StaticGraph, target: &ReachabilityGraph) -> bool {
    let mut uf = UnionFind::new(f.n());
    for (a, b) in f.edges() {
        uf.union(a, b);
    }
    target.arcs().all(|(u, v)| uf.find(u) == uf.find(v))
}

fn distance_two_related(f: &StaticGraph, target: &ReachabilityGraph) -> bool {
    let n = f.n();
    (0..n).all(|a| {
        (a + 1..n).all(|c| {
            f.has_edge(a, c)
                || !(0..n).any(|b| f.has_edge(a, b) && f.has_edge(b, c))
                || target.has_arc(a, c)
                || target.has_arc(c, a)
        })
    })
}
