//! Random temporal graphs for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::model::{StaticGraph, TemporalGraph, Time, Vertex};

/// Shape of a random graph: at most `max_edges` edges among `n` vertices,
/// labels drawn from `1..=max_time`, at most `max_labels` per edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphShape {
    pub n: usize,
    pub max_edges: usize,
    pub max_time: Time,
    pub max_labels: usize,
}

impl GraphShape {
    pub fn new(n: usize, max_edges: usize, max_time: Time) -> Self {
        GraphShape {
            n,
            max_edges,
            max_time,
            max_labels: max_time as usize,
        }
    }

    pub fn simple(self) -> Self {
        GraphShape { max_labels: 1, ..self }
    }
}

fn random_pairs(rng: &mut impl Rng, n: usize, max_edges: usize) -> Vec<(Vertex, Vertex)> {
    let mut all: Vec<(Vertex, Vertex)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    all.shuffle(rng);
    let cap = max_edges.min(all.len());
    let m = if cap == 0 { 0 } else { rng.gen_range(1..=cap) };
    all.truncate(m);
    all.sort_unstable();
    all
}

/// Random static graph: each pair is an edge with probability `p`.
pub fn random_static(rng: &mut impl Rng, n: usize, p: f64) -> StaticGraph {
    let pairs: Vec<_> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    StaticGraph::undirected(n, pairs).unwrap()
}

/// Random graph with arbitrary label sets.
pub fn random_graph(rng: &mut impl Rng, shape: GraphShape) -> TemporalGraph {
    let pairs = random_pairs(rng, shape.n, shape.max_edges);
    let times: Vec<Time> = (1..=shape.max_time).collect();
    let mut contacts = Vec::new();
    for (a, b) in pairs {
        let k = rng.gen_range(1..=shape.max_labels.clamp(1, times.len()));
        for &t in times.choose_multiple(rng, k) {
            contacts.push((a, b, t));
        }
    }
    TemporalGraph::from_contacts(shape.n, contacts).unwrap()
}

/// Random proper graph: labels are drawn among the times still unused at
/// both endpoints; an edge with no such time left is dropped.
pub fn random_proper(rng: &mut impl Rng, shape: GraphShape) -> TemporalGraph {
    let pairs = random_pairs(rng, shape.n, shape.max_edges);
    let mut used: Vec<Vec<bool>> = vec![vec![false; shape.max_time as usize + 1]; shape.n];
    let mut contacts = Vec::new();
    for (a, b) in pairs {
        let free: Vec<Time> = (1..=shape.max_time).filter(|&t| !used[a][t as usize] && !used[b][t as usize]).collect();
        if free.is_empty() {
            continue;
        }
        let k = rng.gen_range(1..=shape.max_labels.clamp(1, free.len()));
        for &t in free.choose_multiple(rng, k) {
            used[a][t as usize] = true;
            used[b][t as usize] = true;
            contacts.push((a, b, t));
        }
    }
    TemporalGraph::from_contacts(shape.n, contacts).unwrap()
}

/// Random happy graph on the footprint `f`, with labels in `1..=max_time`;
/// edges that find no free label are dropped.
pub fn random_happy_on(rng: &mut impl Rng, f: &StaticGraph, max_time: Time) -> TemporalGraph {
    let mut edges: Vec<(Vertex, Vertex)> = f.edges().collect();
    edges.shuffle(rng);
    let mut used: Vec<Vec<bool>> = vec![vec![false; max_time as usize + 1]; f.n()];
    let mut contacts = Vec::new();
    for (a, b) in edges {
        let free: Vec<Time> = (1..=max_time).filter(|&t| !used[a][t as usize] && !used[b][t as usize]).collect();
        if let Some(&t) = free.choose(rng) {
            used[a][t as usize] = true;
            used[b][t as usize] = true;
            contacts.push((a, b, t));
        }
    }
    TemporalGraph::from_contacts(f.n(), contacts).unwrap()
}
