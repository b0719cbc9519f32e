//! Clique instances as happy temporal-component instances.
//!
//! Every edge `{u, v}` of the input gets two auxiliary vertices `u_e` and
//! `v_e`. A forward gadget `u - u_e - v` and a backward gadget
//! `v - v_e - u` let `u` and `v` reach each other through the edge and
//! nothing further, because every gadget entry time lies below every
//! gadget exit time. Before and after the gadgets, two rounds of
//! hamiltonian paths on the auxiliaries make them pairwise reachable.
//! A maximum component then has size `2m + ω`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Contact, StaticGraph, TemporalGraph, Time, Vertex};
use crate::transforms::proper_edge_coloring;

/// Hamiltonian paths consumed, two per round.
const ROUNDS_PATHS: usize = 4;

/// Decomposes the complete graph on `two_m` vertices into `two_m / 2`
/// edge-disjoint hamiltonian paths (Walecki's zigzag): path `i` visits
/// `i, i+1, i-1, i+2, i-2, ..., i+m` modulo `2m`.
pub fn hamiltonian_path_decomposition(two_m: usize) -> Result<Vec<Vec<Vertex>>> {
    if two_m < 2 || two_m % 2 == 1 {
        return Err(Error::InvalidInput(format!("need an even vertex count >= 2, got {two_m}")));
    }
    let m = two_m / 2;
    Ok((0..m)
        .map(|i| {
            let mut path = vec![i];
            for j in 1..m {
                path.push((i + j) % two_m);
                path.push((i + two_m - j) % two_m);
            }
            path.push((i + m) % two_m);
            path
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionInstance {
    pub graph: TemporalGraph,
    /// The input vertices, unchanged.
    pub originals: Vec<Vertex>,
    /// `u_e` then `v_e` for every input edge, in edge order.
    pub auxiliaries: Vec<Vertex>,
    /// Edge count of the input.
    pub m: usize,
}

impl ReductionInstance {
    /// Component size matching a clique of size `k` in the input.
    pub fn target(&self, k: usize) -> usize {
        2 * self.m + k
    }

    /// The auxiliary every hamiltonian round routes through.
    pub fn pivot(&self) -> Vertex {
        self.auxiliaries[0]
    }
}

/// Builds the happy instance for the undirected graph `f`; needs at least
/// four edges so that four disjoint hamiltonian paths exist on the
/// auxiliaries.
///
/// Labels come in bands. Hamiltonian round one uses `1..=4m-2`; with `C`
/// edge colors and `B = 4m-2`, gadget entries of an edge colored `c` sit
/// at `B + c` and exits at `B + C + c`; round two starts above `B + 2C`.
pub fn clique_to_component_instance(f: &StaticGraph) -> Result<ReductionInstance> {
    if f.is_directed() {
        return Err(Error::InvalidInput("the clique instance must be undirected".into()));
    }
    let m = f.edge_count();
    if m < ROUNDS_PATHS {
        return Err(Error::InvalidInput(format!("need at least 4 edges, got {m}")));
    }
    let n0 = f.n();
    let coloring = proper_edge_coloring(f);
    let colors = coloring.color_count() as Time;
    let paths = hamiltonian_path_decomposition(2 * m)?;
    let aux = |i: usize| n0 + i;

    let mut contacts: Vec<Contact> = Vec::with_capacity(2 * (4 * m - 2) + 4 * m);
    let mut next: Time = 1;
    let round = |contacts: &mut Vec<Contact>, next: &mut Time, toward: &[Vertex], from: &[Vertex]| {
        label_toward_pivot(toward, 0, next, |a, b, t| contacts.push(Contact::new(aux(a), aux(b), t)));
        label_from_pivot(from, 0, next, |a, b, t| contacts.push(Contact::new(aux(a), aux(b), t)));
    };
    round(&mut contacts, &mut next, &paths[0], &paths[1]);

    let base = next - 1;
    for (i, (u, v)) in f.edges().enumerate() {
        let c = coloring.color(u, v).unwrap() as Time;
        let (ue, ve) = (aux(2 * i), aux(2 * i + 1));
        contacts.push(Contact::new(u, ue, base + c));
        contacts.push(Contact::new(ue, v, base + colors + c));
        contacts.push(Contact::new(v, ve, base + c));
        contacts.push(Contact::new(ve, u, base + colors + c));
    }
    next = base + 2 * colors + 1;
    round(&mut contacts, &mut next, &paths[2], &paths[3]);

    let graph = TemporalGraph::from_contacts(n0 + 2 * m, contacts.iter().map(|c| (c.u, c.v, c.time)))?;
    debug_assert!(graph.is_happy());
    Ok(ReductionInstance {
        graph,
        originals: (0..n0).collect(),
        auxiliaries: (0..2 * m).map(aux).collect(),
        m,
    })
}

/// Labels `path` so that both ends have journeys arriving at `pivot`,
/// drawing distinct increasing labels from `next`.
fn label_toward_pivot(path: &[Vertex], pivot: Vertex, next: &mut Time, mut emit: impl FnMut(Vertex, Vertex, Time)) {
    let z = path.iter().position(|&x| x == pivot).expect("hamiltonian paths visit the pivot");
    for w in path[..=z].windows(2) {
        emit(w[0], w[1], *next);
        *next += 1;
    }
    for w in path[z..].windows(2).rev() {
        emit(w[1], w[0], *next);
        *next += 1;
    }
}

/// Labels `path` so that `pivot` has journeys leaving toward both ends.
fn label_from_pivot(path: &[Vertex], pivot: Vertex, next: &mut Time, mut emit: impl FnMut(Vertex, Vertex, Time)) {
    let z = path.iter().position(|&x| x == pivot).expect("hamiltonian paths visit the pivot");
    for w in path[..=z].windows(2).rev() {
        emit(w[1], w[0], *next);
        *next += 1;
    }
    for w in path[z..].windows(2) {
        emit(w[0], w[1], *next);
        *next += 1;
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::analysis::{max_clique, max_temporal_component_bounded, ComponentGuards, ComponentMode};
    use crate::model::Strictness;

    fn check_decomposition(two_m: usize) {
        let paths = hamiltonian_path_decomposition(two_m).unwrap();
        assert_eq!(paths.len(), two_m / 2);
        let mut edges = BTreeSet::new();
        for p in &paths {
            let visited: BTreeSet<_> = p.iter().copied().collect();
            assert_eq!(visited.len(), two_m);
            for w in p.windows(2) {
                assert!(edges.insert((w[0].min(w[1]), w[0].max(w[1]))), "edge reused");
            }
        }
        assert_eq!(edges.len(), two_m * (two_m - 1) / 2);
    }

    #[test]
    fn walecki_decomposition() {
        for two_m in (2..=30).step_by(2) {
            check_decomposition(two_m);
        }
        assert_eq!(hamiltonian_path_decomposition(2).unwrap(), vec![vec![0, 1]]);
        assert!(hamiltonian_path_decomposition(5).is_err());
        assert!(hamiltonian_path_decomposition(0).is_err());
    }

    fn component_sizes(f: &StaticGraph) -> (usize, usize, ReductionInstance) {
        let inst = clique_to_component_instance(f).unwrap();
        let guards = ComponentGuards { open: 64, closed: 64 };
        let open = max_temporal_component_bounded(&inst.graph, Strictness::Strict, ComponentMode::Open, guards).unwrap();
        let closed =
            max_temporal_component_bounded(&inst.graph, Strictness::Strict, ComponentMode::Closed, guards).unwrap();
        (open.size, closed.size, inst)
    }

    #[test]
    fn four_cycle() {
        let f = StaticGraph::cycle(4);
        let (open, closed, inst) = component_sizes(&f);
        assert_eq!(inst.graph.n(), 12);
        assert!(inst.graph.is_happy());
        assert_eq!((open, closed), (10, 10));
        assert_eq!(inst.target(max_clique(&f).unwrap()), 10);
    }

    #[test]
    fn complete_and_near_complete() {
        let k4 = StaticGraph::complete(4);
        let (open, closed, inst) = component_sizes(&k4);
        assert_eq!(inst.graph.n(), 16);
        assert_eq!((open, closed), (16, 16));

        let diamond = StaticGraph::undirected(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (open, closed, _) = component_sizes(&diamond);
        assert_eq!((open, closed), (13, 13));
    }

    #[test]
    fn band_layout() {
        let f = StaticGraph::cycle(4);
        let inst = clique_to_component_instance(&f).unwrap();
        let m = 4;
        let aux: BTreeSet<_> = inst.auxiliaries.iter().copied().collect();
        let mut round_one = 0;
        let mut round_two = 0;
        let mut gadget_times = Vec::new();
        for c in inst.graph.contacts() {
            if aux.contains(&c.u) && aux.contains(&c.v) {
                if c.time <= (4 * m - 2) as Time {
                    round_one += 1;
                } else {
                    round_two += 1;
                }
            } else {
                gadget_times.push(c.time);
            }
        }
        assert_eq!((round_one, round_two), (4 * m - 2, 4 * m - 2));
        assert_eq!(gadget_times.len(), 4 * m);
        assert!(gadget_times.iter().all(|&t| t > (4 * m - 2) as Time));
        assert_eq!(inst.pivot(), 4);
        assert!(inst.graph.is_simple() && inst.graph.is_proper());
    }

    #[test]
    fn too_few_edges() {
        assert!(clique_to_component_instance(&StaticGraph::path(4)).is_err());
    }
}
