//! Temporal graphs, their static projections and the structural predicates
//! (proper / simple / happy) that define the six settings.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Presence time of a contact. Always at least 1.
pub type Time = u64;

/// One undirected edge together with its presence times.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSlot {
    pub u: Vertex,
    pub v: Vertex,
    pub labels: Vec<Time>,
}

impl EdgeSlot {
    pub fn new(u: Vertex, v: Vertex, labels: impl Into<Vec<Time>>) -> Self {
        EdgeSlot {
            u,
            v,
            labels: labels.into(),
        }
    }

    /// The endpoint opposite to `x`, if `x` is an endpoint.
    pub fn other(&self, x: Vertex) -> Option<Vertex> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

/// An (edge, time) pair. Endpoints are stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Contact {
    pub u: Vertex,
    pub v: Vertex,
    pub time: Time,
}

impl Contact {
    pub fn new(a: Vertex, b: Vertex, time: Time) -> Self {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        Contact { u, v, time }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    EndpointOutOfRange,
    SelfLoop,
    EndpointsNotOrdered,
    DuplicateEdge,
    EmptyLabels,
    LabelsNotAscending,
    LabelBelowOne,
    NamesLengthMismatch,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::EndpointOutOfRange => "endpoint out of range",
            ViolationKind::SelfLoop => "self-loop",
            ViolationKind::EndpointsNotOrdered => "endpoints not ordered",
            ViolationKind::DuplicateEdge => "duplicate edge",
            ViolationKind::EmptyLabels => "empty label list",
            ViolationKind::LabelsNotAscending => "labels not ascending",
            ViolationKind::LabelBelowOne => "label below 1",
            ViolationKind::NamesLengthMismatch => "names length mismatch",
        })
    }
}

/// A broken invariant, optionally pointing at the offending edge slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub edge: Option<usize>,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.edge {
            Some(i) => write!(f, "edge #{i}: {}", self.kind),
            None => write!(f, "{}", self.kind),
        }
    }
}

/// Checks every structural invariant of a temporal graph given as raw parts.
/// Violations are returned in edge order; an empty list means the parts are
/// well-formed.
pub fn validate(n: usize, names: Option<&[String]>, edges: &[EdgeSlot]) -> Vec<Violation> {
    let mut out = Vec::new();
    if let Some(names) = names {
        if names.len() != n {
            out.push(Violation {
                edge: None,
                kind: ViolationKind::NamesLengthMismatch,
            });
        }
    }
    let mut seen = HashSet::new();
    for (i, e) in edges.iter().enumerate() {
        let mut push = |kind| out.push(Violation { edge: Some(i), kind });
        if e.u >= n || e.v >= n {
            push(ViolationKind::EndpointOutOfRange);
        }
        if e.u == e.v {
            push(ViolationKind::SelfLoop);
        } else if e.u > e.v {
            push(ViolationKind::EndpointsNotOrdered);
        }
        if !seen.insert((e.u.min(e.v), e.u.max(e.v))) {
            push(ViolationKind::DuplicateEdge);
        }
        if e.labels.is_empty() {
            push(ViolationKind::EmptyLabels);
        }
        if e.labels.windows(2).any(|w| w[0] >= w[1]) {
            push(ViolationKind::LabelsNotAscending);
        }
        if e.labels.iter().any(|&t| t < 1) {
            push(ViolationKind::LabelBelowOne);
        }
    }
    out
}

/// An undirected temporal graph `(V, E, λ)` on vertices `0..n`.
///
/// Edges are kept sorted by `(u, v)` with `u < v`; every label list is
/// non-empty, strictly ascending and made of times `>= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TemporalGraph {
    n: usize,
    names: Option<Vec<String>>,
    edges: Vec<EdgeSlot>,
}

impl TemporalGraph {
    /// Builds a graph from edge slots. The listing order of the slots is
    /// irrelevant; everything else must already satisfy the invariants.
    pub fn new(n: usize, mut edges: Vec<EdgeSlot>) -> Result<Self> {
        let violations = validate(n, None, &edges);
        if !violations.is_empty() {
            return Err(Error::InvalidGraph(violations));
        }
        edges.sort_by_key(|e| (e.u, e.v));
        Ok(TemporalGraph {
            n,
            names: None,
            edges,
        })
    }

    /// Builds a graph from a bag of contacts given in any order and
    /// orientation. Repeated contacts collapse into one.
    pub fn from_contacts(n: usize, contacts: impl IntoIterator<Item = (Vertex, Vertex, Time)>) -> Result<Self> {
        let mut by_pair: BTreeMap<(Vertex, Vertex), BTreeSet<Time>> = BTreeMap::new();
        for (a, b, t) in contacts {
            by_pair.entry((a.min(b), a.max(b))).or_default().insert(t);
        }
        let edges = by_pair
            .into_iter()
            .map(|((u, v), ts)| EdgeSlot::new(u, v, ts.into_iter().collect::<Vec<_>>()))
            .collect();
        Self::new(n, edges)
    }

    pub fn empty(n: usize) -> Self {
        TemporalGraph {
            n,
            names: None,
            edges: Vec::new(),
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::InvalidGraph(vec![Violation {
                edge: None,
                kind: ViolationKind::NamesLengthMismatch,
            }]));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of `v`: its name when present, its index otherwise.
    pub fn name(&self, v: Vertex) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn edges(&self) -> &[EdgeSlot] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self, a: Vertex, b: Vertex) -> Option<&[Time]> {
        let key = (a.min(b), a.max(b));
        self.edges
            .binary_search_by_key(&key, |e| (e.u, e.v))
            .ok()
            .map(|i| self.edges[i].labels.as_slice())
    }

    /// All contacts, ordered by edge then time.
    pub fn contacts(&self) -> impl Iterator<Item = Contact> + '_ {
        self.edges
            .iter()
            .flat_map(|e| e.labels.iter().map(move |&t| Contact { u: e.u, v: e.v, time: t }))
    }

    pub fn contacts_count(&self) -> usize {
        self.edges.iter().map(|e| e.labels.len()).sum()
    }

    /// Sorted set of times carrying at least one contact.
    pub fn distinct_times(&self) -> Vec<Time> {
        let set: BTreeSet<Time> = self.edges.iter().flat_map(|e| e.labels.iter().copied()).collect();
        set.into_iter().collect()
    }

    /// `(min label, max label)`.
    pub fn lifetime(&self) -> Result<(Time, Time)> {
        let lo = self.edges.iter().map(|e| e.labels[0]).min();
        let hi = self.edges.iter().map(|e| *e.labels.last().unwrap()).max();
        match (lo, hi) {
            (Some(lo), Some(hi)) => Ok((lo, hi)),
            _ => Err(Error::NoContacts),
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    /// Maximum degree of the footprint.
    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    pub fn footprint(&self) -> StaticGraph {
        StaticGraph {
            n: self.n,
            directed: false,
            edges: self.edges.iter().map(|e| (e.u, e.v)).collect(),
        }
    }

    /// Edges present at time `t`.
    pub fn snapshot(&self, t: Time) -> StaticGraph {
        StaticGraph {
            n: self.n,
            directed: false,
            edges: self
                .edges
                .iter()
                .filter(|e| e.labels.binary_search(&t).is_ok())
                .map(|e| (e.u, e.v))
                .collect(),
        }
    }

    /// No two edges sharing an endpoint share a label.
    pub fn is_proper(&self) -> bool {
        let mut seen: Vec<HashSet<Time>> = vec![HashSet::new(); self.n];
        for e in &self.edges {
            for &t in &e.labels {
                if !seen[e.u].insert(t) || !seen[e.v].insert(t) {
                    return false;
                }
            }
        }
        true
    }

    /// Every edge carries exactly one label.
    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|e| e.labels.len() == 1)
    }

    pub fn is_happy(&self) -> bool {
        self.is_proper() && self.is_simple()
    }

    /// Keeps the edges with both endpoints in `subset`, renumbering the
    /// kept vertices in the order they appear in `subset`.
    pub fn induced_subgraph(&self, subset: &[Vertex]) -> Result<InducedSubgraph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in subset.iter().enumerate() {
            if v >= self.n {
                return Err(Error::InvalidInput(format!("vertex {v} out of range")));
            }
            if index[v] != usize::MAX {
                return Err(Error::InvalidInput(format!("vertex {v} listed twice")));
            }
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| {
                let (a, b) = (index[e.u], index[e.v]);
                EdgeSlot::new(a.min(b), a.max(b), e.labels.clone())
            })
            .collect();
        let mut graph = TemporalGraph::new(subset.len(), edges)?;
        if let Some(names) = &self.names {
            graph.names = Some(subset.iter().map(|&v| names[v].clone()).collect());
        }
        Ok(InducedSubgraph {
            graph,
            original: subset.to_vec(),
        })
    }

    /// Replaces every label by its rank among the distinct times, so labels
    /// become `1..=τ` with the same relative order.
    pub fn compacted(&self) -> TemporalGraph {
        let times = self.distinct_times();
        let rank = |t: Time| times.binary_search(&t).unwrap() as Time + 1;
        TemporalGraph {
            n: self.n,
            names: self.names.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSlot::new(e.u, e.v, e.labels.iter().map(|&t| rank(t)).collect::<Vec<_>>()))
                .collect(),
        }
    }

    /// Whether `other` is a spanning subgraph: same vertex count, every edge
    /// of `other` present here with a subset of its labels.
    pub fn contains_subgraph(&self, other: &TemporalGraph) -> std::result::Result<(), String> {
        if other.n != self.n {
            return Err(format!("vertex count {} differs from {}", other.n, self.n));
        }
        for e in &other.edges {
            let Some(labels) = self.labels(e.u, e.v) else {
                return Err(format!("edge {{{},{}}} not in the input", e.u, e.v));
            };
            if let Some(t) = e.labels.iter().find(|t| labels.binary_search(t).is_err()) {
                return Err(format!("label {t} on edge {{{},{}}} not in the input", e.u, e.v));
            }
        }
        Ok(())
    }
}

/// Result of [`TemporalGraph::induced_subgraph`]: the subgraph and, for each
/// of its vertices, the index it had in the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: TemporalGraph,
    pub original: Vec<Vertex>,
}

/// A static graph: the footprint or a snapshot of a temporal graph, a
/// reachability support, or a clique-problem instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StaticGraph {
    n: usize,
    directed: bool,
    edges: BTreeSet<(Vertex, Vertex)>,
}

impl StaticGraph {
    pub fn undirected(n: usize, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        Self::build(n, false, pairs)
    }

    pub fn directed(n: usize, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        Self::build(n, true, arcs)
    }

    fn build(n: usize, directed: bool, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut edges = BTreeSet::new();
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!("edge ({a},{b}) out of range for n = {n}")));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("self-loop at {a}")));
            }
            edges.insert(if directed { (a, b) } else { (a.min(b), a.max(b)) });
        }
        Ok(StaticGraph { n, directed, edges })
    }

    pub fn complete(n: usize) -> Self {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::undirected(n, pairs).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        Self::undirected(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Self::undirected(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Edges (or arcs), sorted; undirected pairs have `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        if self.directed {
            self.edges.contains(&(a, b))
        } else {
            self.edges.contains(&(a.min(b), a.max(b)))
        }
    }

    /// Out-neighbours for directed graphs, neighbours otherwise.
    pub fn neighbors(&self, x: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == x {
                    Some(b)
                } else if b == x && !self.directed {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, x: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == x || b == x).count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// Induced subgraph on `subset`, renumbered in `subset` order.
    pub fn induced(&self, subset: &[Vertex]) -> StaticGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in subset.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| {
                let (x, y) = (index[a], index[b]);
                if self.directed {
                    (x, y)
                } else {
                    (x.min(y), x.max(y))
                }
            })
            .collect();
        StaticGraph {
            n: subset.len(),
            directed: self.directed,
            edges,
        }
    }

    /// Connectivity of the underlying undirected graph. The empty graph and
    /// the single vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == self.n
    }

    /// Length (in edges) of a longest simple path. Exponential; callers
    /// bound the edge count.
    pub fn longest_path_len(&self) -> usize {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            if !self.directed {
                adj[b].push(a);
            }
        }
        fn dfs(x: Vertex, adj: &[Vec<Vertex>], on_path: &mut [bool]) -> usize {
            on_path[x] = true;
            let mut best = 0;
            for &y in &adj[x] {
                if !on_path[y] {
                    best = best.max(1 + dfs(y, adj, on_path));
                }
            }
            on_path[x] = false;
            best
        }
        let mut on_path = vec![false; self.n];
        (0..self.n).map(|x| dfs(x, &adj, &mut on_path)).max().unwrap_or(0)
    }
}

/// Whether journey times must strictly increase.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strictness {
    Strict,
    NonStrict,
}

impl Strictness {
    pub const BOTH: [Strictness; 2] = [Strictness::Strict, Strictness::NonStrict];

    /// Whether a contact at `next` may follow one at `prev`.
    #[inline]
    pub fn allows(self, prev: Time, next: Time) -> bool {
        match self {
            Strictness::Strict => next > prev,
            Strictness::NonStrict => next >= prev,
        }
    }
}

impl fmt::Display for Strictness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strictness::Strict => "strict",
            Strictness::NonStrict => "nonstrict",
        })
    }
}

impl FromStr for Strictness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "strict" => Ok(Strictness::Strict),
            "nonstrict" | "non-strict" | "non_strict" => Ok(Strictness::NonStrict),
            _ => Err(Error::InvalidInput(format!("unknown strictness `{s}`"))),
        }
    }
}

/// One of the six meaningful combinations of strictness, properness and
/// simpleness. Properness makes strictness irrelevant, so the proper
/// settings carry no strictness of their own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SettingClass {
    Strict,
    NonStrict,
    SimpleStrict,
    SimpleNonStrict,
    Proper,
    Happy,
}

impl SettingClass {
    pub const ALL: [SettingClass; 6] = [
        SettingClass::Strict,
        SettingClass::NonStrict,
        SettingClass::Proper,
        SettingClass::SimpleStrict,
        SettingClass::SimpleNonStrict,
        SettingClass::Happy,
    ];

    /// Normalizing constructor: `strictness` is ignored when properness is
    /// required.
    pub fn from_flags(strictness: Strictness, require_proper: bool, require_simple: bool) -> Self {
        match (require_proper, require_simple, strictness) {
            (true, true, _) => SettingClass::Happy,
            (true, false, _) => SettingClass::Proper,
            (false, true, Strictness::Strict) => SettingClass::SimpleStrict,
            (false, true, Strictness::NonStrict) => SettingClass::SimpleNonStrict,
            (false, false, Strictness::Strict) => SettingClass::Strict,
            (false, false, Strictness::NonStrict) => SettingClass::NonStrict,
        }
    }

    /// Journey semantics used to evaluate closures in this setting. Proper
    /// settings report `Strict`, which coincides with non-strict there.
    pub fn strictness(self) -> Strictness {
        match self {
            SettingClass::NonStrict | SettingClass::SimpleNonStrict => Strictness::NonStrict,
            _ => Strictness::Strict,
        }
    }

    pub fn requires_proper(self) -> bool {
        matches!(self, SettingClass::Proper | SettingClass::Happy)
    }

    pub fn requires_simple(self) -> bool {
        matches!(
            self,
            SettingClass::SimpleStrict | SettingClass::SimpleNonStrict | SettingClass::Happy
        )
    }

    /// Whether `g` belongs to the graph class of this setting.
    pub fn admits(self, g: &TemporalGraph) -> bool {
        (!self.requires_proper() || g.is_proper()) && (!self.requires_simple() || g.is_simple())
    }

    pub fn name(self) -> &'static str {
        match self {
            SettingClass::Strict => "strict",
            SettingClass::NonStrict => "nonstrict",
            SettingClass::SimpleStrict => "simple-strict",
            SettingClass::SimpleNonStrict => "simple-nonstrict",
            SettingClass::Proper => "proper",
            SettingClass::Happy => "happy",
        }
    }
}

impl fmt::Display for SettingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SettingClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase().replace("non-strict", "nonstrict");
        let key = lower
            .split(|c: char| !c.is_ascii_alphanumeric())
            .filter(|w| !w.is_empty())
            .collect::<Vec<_>>()
            .join("-");
        SettingClass::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| Error::InvalidInput(format!("unknown setting `{s}`")))
    }
}
