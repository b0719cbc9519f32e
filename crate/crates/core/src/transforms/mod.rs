//! Reachability-preserving transformations between settings.
//!
//! All fractional tilts are realized with integers: a nominal time `t` and
//! an edge color `c` in `1..=C` become `t * scale ± c`, with the scale chosen
//! so that tilted values of distinct nominal times never interleave.

mod coloring;

use std::fmt;

use serde::Serialize;

pub use coloring::{edge_coloring, proper_edge_coloring, ColoringAlgorithm, EdgeColoring};

use crate::model::{StaticGraph, TemporalGraph, Time, Vertex};

/// Snapshots with at most this many edges get an exact longest path;
/// larger ones fall back to `n - 1`.
pub const EXACT_LONGEST_PATH_EDGES: usize = 20;

/// A proper edge coloring of the footprint together with the integer
/// stretch applied to nominal times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltScheme {
    pub coloring: EdgeColoring,
    pub scale: u64,
}

impl TiltScheme {
    pub fn color_count(&self) -> u32 {
        self.coloring.color_count()
    }

    /// Dilation stride: nominal step `j` with color `c` maps to `j * (C + 1) + c`.
    pub fn for_dilation(g: &TemporalGraph, algorithm: ColoringAlgorithm) -> Self {
        let coloring = edge_coloring(&g.footprint(), algorithm);
        let scale = coloring.color_count() as u64 + 1;
        TiltScheme { coloring, scale }
    }

    /// Semaphore scale `2 (C + 1)`, so `t S + c < t' S - c'` whenever `t < t'`.
    pub fn for_semaphore(g: &TemporalGraph, algorithm: ColoringAlgorithm) -> Self {
        let coloring = edge_coloring(&g.footprint(), algorithm);
        let scale = 2 * (coloring.color_count() as u64 + 1);
        TiltScheme { coloring, scale }
    }

    fn color(&self, u: Vertex, v: Vertex) -> u64 {
        self.coloring.color(u, v).expect("footprint edge is colored") as u64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransformOptions {
    pub coloring: ColoringAlgorithm,
    pub exact_longest_path_edges: usize,
}

impl Default for TransformOptions {
    fn default() -> Self {
        Self::new()
    }
}

impl TransformOptions {
    pub fn new() -> Self {
        TransformOptions {
            coloring: ColoringAlgorithm::MisraGries,
            exact_longest_path_edges: EXACT_LONGEST_PATH_EDGES,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TransformKind {
    Dilate,
    Saturate,
    Semaphore,
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransformKind::Dilate => "dilate",
            TransformKind::Saturate => "saturate",
            TransformKind::Semaphore => "semaphore",
        })
    }
}

/// Sizes of the input and output graphs. Field order is alphabetical so the
/// JSON form has sorted keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformStats {
    pub colors: Option<u32>,
    pub input_contacts: usize,
    pub input_edges: usize,
    pub input_times: usize,
    pub input_vertices: usize,
    pub output_contacts: usize,
    pub output_edges: usize,
    pub output_times: usize,
    pub output_vertices: usize,
}

impl TransformStats {
    fn new(input: &TemporalGraph, output: &TemporalGraph, colors: Option<u32>) -> Self {
        TransformStats {
            colors,
            input_contacts: input.contacts_count(),
            input_edges: input.edge_count(),
            input_times: input.distinct_times().len(),
            input_vertices: input.n(),
            output_contacts: output.contacts_count(),
            output_edges: output.edge_count(),
            output_times: output.distinct_times().len(),
            output_vertices: output.n(),
        }
    }
}

/// Output of a transformation: the new graph and where each input vertex
/// went (`sigma[v]` is the image of `v`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformReport {
    pub transform: TransformKind,
    pub graph: TemporalGraph,
    pub sigma: Vec<Vertex>,
    pub stats: TransformStats,
}

impl TransformReport {
    fn new(transform: TransformKind, input: &TemporalGraph, graph: TemporalGraph, sigma: Vec<Vertex>, colors: Option<u32>) -> Self {
        let stats = TransformStats::new(input, &graph, colors);
        TransformReport {
            transform,
            graph,
            sigma,
            stats,
        }
    }
}

fn copy_names(g: &TemporalGraph, out: TemporalGraph) -> TemporalGraph {
    match g.names() {
        Some(names) => out.with_names(names.to_vec()).unwrap(),
        None => out,
    }
}

/// Number of nominal steps a snapshot is dilated to, or `None` when it
/// holds no path of length two.
fn dilation_steps(snapshot: &StaticGraph, n: usize, exact_limit: usize) -> Option<u64> {
    if snapshot.max_degree() < 2 {
        return None;
    }
    let k = if snapshot.edge_count() <= exact_limit {
        snapshot.longest_path_len()
    } else {
        n - 1
    };
    Some(k as u64)
}

/// Non-strict to proper, support-preserving.
///
/// Snapshots are laid out chronologically in disjoint time bands. A snapshot
/// that is a matching keeps a single time; any other snapshot with longest
/// path `k` gives each of its edges the nominal steps `1..=k`, tilted by the
/// edge color.
pub fn dilate(g: &TemporalGraph) -> TransformReport {
    dilate_with(g, &TransformOptions::new())
}

pub fn dilate_with(g: &TemporalGraph, options: &TransformOptions) -> TransformReport {
    let tilt = TiltScheme::for_dilation(g, options.coloring);
    let stride = tilt.scale;
    let mut contacts = Vec::new();
    let mut base: Time = 0;
    for t in g.distinct_times() {
        let snap = g.snapshot(t);
        match dilation_steps(&snap, g.n(), options.exact_longest_path_edges) {
            None => {
                contacts.extend(snap.edges().map(|(u, v)| (u, v, base + 1)));
                base += 1;
            }
            Some(k) => {
                for (u, v) in snap.edges() {
                    let c = tilt.color(u, v);
                    contacts.extend((1..=k).map(|j| (u, v, base + j * stride + c)));
                }
                base += (k + 1) * stride;
            }
        }
    }
    let out = TemporalGraph::from_contacts(g.n(), contacts).expect("dilation output is well-formed").compacted();
    let out = copy_names(g, out);
    TransformReport::new(TransformKind::Dilate, g, out, (0..g.n()).collect(), Some(tilt.color_count()))
}

/// Non-strict to strict, reachability-preserving with the same set of
/// times: every snapshot becomes a clique on each of its connected
/// components.
pub fn saturate(g: &TemporalGraph) -> TransformReport {
    let mut contacts = Vec::new();
    for t in g.distinct_times() {
        let snap = g.snapshot(t);
        for comp in components(&snap) {
            for (i, &a) in comp.iter().enumerate() {
                contacts.extend(comp[i + 1..].iter().map(|&b| (a, b, t)));
            }
        }
    }
    let out = copy_names(g, TemporalGraph::from_contacts(g.n(), contacts).expect("saturation output is well-formed"));
    TransformReport::new(TransformKind::Saturate, g, out, (0..g.n()).collect(), None)
}

/// Connected components with at least two vertices, each sorted.
fn components(f: &StaticGraph) -> Vec<Vec<Vertex>> {
    let mut comp = vec![usize::MAX; f.n()];
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    for s in 0..f.n() {
        if comp[s] != usize::MAX || f.degree(s) == 0 {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            for y in f.neighbors(members[i]) {
                if comp[y] == usize::MAX {
                    comp[y] = id;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Strict to happy, preserving reachability among the original vertices.
///
/// Each contact `({u, v}, t)` of color `c` becomes two auxiliary vertices
/// `u_x` and `v_x` with edges `u-u_x @ tS-c`, `u_x-v @ tS+c`,
/// `u-v_x @ tS+c` and `v_x-v @ tS-c`. Originals keep their indices; the
/// auxiliaries of the `i`-th contact (edge order, then time) are `n + 2i`
/// and `n + 2i + 1`.
pub fn semaphore(g: &TemporalGraph) -> TransformReport {
    semaphore_with(g, &TransformOptions::new())
}

pub fn semaphore_with(g: &TemporalGraph, options: &TransformOptions) -> TransformReport {
    let tilt = TiltScheme::for_semaphore(g, options.coloring);
    let s = tilt.scale;
    let n = g.n();
    let m = g.contacts_count();
    let mut contacts = Vec::with_capacity(4 * m);
    for (i, x) in g.contacts().enumerate() {
        let c = tilt.color(x.u, x.v);
        let (ux, vx) = (n + 2 * i, n + 2 * i + 1);
        contacts.push((x.u, ux, x.time * s - c));
        contacts.push((ux, x.v, x.time * s + c));
        contacts.push((x.u, vx, x.time * s + c));
        contacts.push((vx, x.v, x.time * s - c));
    }
    let mut out = TemporalGraph::from_contacts(n + 2 * m, contacts).expect("semaphore output is well-formed").compacted();
    if let Some(names) = g.names() {
        let mut all = names.to_vec();
        for x in g.contacts() {
            let (a, b) = (&names[x.u], &names[x.v]);
            all.push(format!("{a}>{b}@{}", x.time));
            all.push(format!("{b}>{a}@{}", x.time));
        }
        out = out.with_names(all).unwrap();
    }
    TransformReport::new(TransformKind::Semaphore, g, out, (0..n).collect(), Some(tilt.color_count()))
}

/// Upper bound `τ · C · (n - 1)` on the number of distinct times produced by
/// [`dilate`], with `C` the number of colors it uses.
pub fn lifetime_blowup_bound(g: &TemporalGraph) -> u64 {
    if g.edge_count() == 0 {
        return 0;
    }
    let colors = TiltScheme::for_dilation(g, ColoringAlgorithm::MisraGries).color_count() as u64;
    g.distinct_times().len() as u64 * colors * (g.n() as u64 - 1)
}
