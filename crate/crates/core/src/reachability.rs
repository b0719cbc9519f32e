//! Journeys and reachability graphs.
//!
//! The closure engine sweeps the distinct times of a graph in ascending
//! order once per source, tracking the set of vertices reached so far.
//! A strict sweep relaxes the contacts of time `t` from the vertices
//! reached strictly before `t`; a non-strict sweep floods every connected
//! component of the snapshot at `t` that touches a reached vertex.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{guard, Error, Result};
use crate::model::{Contact, StaticGraph, Strictness, TemporalGraph, Time, Vertex};

/// Default bound on the vertex count for support enumeration.
pub const SUPPORT_GUARD: usize = 10;

/// A directed, irreflexive relation over `0..n`, stored as a bit matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ReachabilityGraph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

#[inline]
fn words(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl ReachabilityGraph {
    pub fn empty(n: usize) -> Self {
        let stride = words(n);
        ReachabilityGraph {
            n,
            stride,
            bits: vec![0; stride * n],
        }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut r = Self::empty(n);
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!("arc ({u},{v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("reflexive arc at {u}")));
            }
            r.insert(u, v);
        }
        Ok(r)
    }

    /// The complete irreflexive relation.
    pub fn complete(n: usize) -> Self {
        let mut r = Self::empty(n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    r.insert(u, v);
                }
            }
        }
        r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.bits[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn insert(&mut self, u: Vertex, v: Vertex) {
        self.bits[u * self.stride + v / 64] |= 1 << (v % 64);
    }

    pub(crate) fn row(&self, u: Vertex) -> &[u64] {
        &self.bits[u * self.stride..(u + 1) * self.stride]
    }

    pub fn is_mutual(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| (0..self.n).filter(move |&v| self.has_arc(u, v)).map(move |v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn out_degree(&self, u: Vertex) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        (0..self.n).filter(|&u| self.has_arc(u, v)).count()
    }

    /// Every off-diagonal cell is set.
    pub fn is_complete(&self) -> bool {
        self.arc_count() == self.n * self.n.saturating_sub(1)
    }

    pub fn is_subset_of(&self, other: &ReachabilityGraph) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Undirected graph of the mutually reachable pairs.
    pub fn symmetric_part(&self) -> StaticGraph {
        let pairs = (0..self.n).flat_map(|u| (u + 1..self.n).map(move |v| (u, v)));
        StaticGraph::undirected(self.n, pairs.filter(|&(u, v)| self.is_mutual(u, v)).collect::<Vec<_>>()).unwrap()
    }

    /// Restriction to `vertices`, renumbered in list order.
    pub fn restrict(&self, vertices: &[Vertex]) -> ReachabilityGraph {
        let mut r = Self::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                if i != j && self.has_arc(a, b) {
                    r.insert(i, j);
                }
            }
        }
        r
    }

    /// Image under the vertex permutation `perm` (vertex `v` becomes `perm[v]`).
    pub fn permuted(&self, perm: &[Vertex]) -> ReachabilityGraph {
        let mut r = Self::empty(self.n);
        for (u, v) in self.arcs() {
            r.insert(perm[u], perm[v]);
        }
        r
    }
}

impl fmt::Debug for ReachabilityGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReachabilityGraph(n={}, ", self.n)?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}

/// Contacts grouped by time, with the per-time data each sweep needs.
pub(crate) struct Sweep {
    n: usize,
    stride: usize,
    strictness: Strictness,
    times: Vec<Time>,
    contacts: Vec<(u32, u32)>,
    group_ends: Vec<usize>,
    comps: Vec<u64>,
    comp_ends: Vec<usize>,
}

impl Sweep {
    /// `contacts` need not be sorted.
    pub(crate) fn new(n: usize, contacts: impl IntoIterator<Item = Contact>, strictness: Strictness) -> Self {
        let mut all: Vec<Contact> = contacts.into_iter().collect();
        all.sort_unstable_by_key(|c| (c.time, c.u, c.v));
        let stride = words(n);
        let mut sweep = Sweep {
            n,
            stride,
            strictness,
            times: Vec::new(),
            contacts: Vec::with_capacity(all.len()),
            group_ends: Vec::new(),
            comps: Vec::new(),
            comp_ends: Vec::new(),
        };
        let mut parent: Vec<usize> = (0..n).collect();
        let mut i = 0;
        while i < all.len() {
            let t = all[i].time;
            let start = i;
            while i < all.len() && all[i].time == t {
                sweep.contacts.push((all[i].u as u32, all[i].v as u32));
                i += 1;
            }
            sweep.times.push(t);
            sweep.group_ends.push(sweep.contacts.len());
            if strictness == Strictness::NonStrict {
                sweep.push_components(&all[start..i], &mut parent);
            }
        }
        sweep
    }

    fn push_components(&mut self, group: &[Contact], parent: &mut [usize]) {
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for c in group {
            let (a, b) = (find(parent, c.u), find(parent, c.v));
            if a != b {
                parent[a] = b;
            }
        }
        let mut touched: Vec<usize> = group.iter().flat_map(|c| [c.u, c.v]).collect();
        touched.sort_unstable();
        touched.dedup();
        let mut roots: Vec<(usize, usize)> = touched.iter().map(|&x| (find(parent, x), x)).collect();
        roots.sort_unstable();
        let mut k = 0;
        while k < roots.len() {
            let root = roots[k].0;
            let base = self.comps.len();
            self.comps.resize(base + self.stride, 0);
            while k < roots.len() && roots[k].0 == root {
                let x = roots[k].1;
                self.comps[base + x / 64] |= 1 << (x % 64);
                k += 1;
            }
        }
        for &x in &touched {
            parent[x] = x;
        }
        self.comp_ends.push(self.comps.len());
    }

    /// Runs the sweep from `src`, leaving the reached set (including `src`)
    /// in `reached`. `scratch` must have `stride` words.
    pub(crate) fn run(&self, src: Vertex, reached: &mut [u64], scratch: &mut [u64]) {
        reached.iter_mut().for_each(|w| *w = 0);
        reached[src / 64] |= 1 << (src % 64);
        self.run_from_state(0, self.times.len(), reached, scratch);
    }

    fn run_from_state(&self, from: usize, to: usize, reached: &mut [u64], scratch: &mut [u64]) {
        let stride = self.stride;
        for g in from..to {
            match self.strictness {
                Strictness::Strict => {
                    let start = if g == 0 { 0 } else { self.group_ends[g - 1] };
                    scratch.copy_from_slice(reached);
                    for &(a, b) in &self.contacts[start..self.group_ends[g]] {
                        let (a, b) = (a as usize, b as usize);
                        if scratch[a / 64] >> (a % 64) & 1 == 1 {
                            reached[b / 64] |= 1 << (b % 64);
                        }
                        if scratch[b / 64] >> (b % 64) & 1 == 1 {
                            reached[a / 64] |= 1 << (a % 64);
                        }
                    }
                }
                Strictness::NonStrict => {
                    let start = if g == 0 { 0 } else { self.comp_ends[g - 1] };
                    for comp in self.comps[start..self.comp_ends[g]].chunks_exact(stride) {
                        if comp.iter().zip(reached.iter()).any(|(c, r)| c & r != 0) {
                            reached.iter_mut().zip(comp).for_each(|(r, c)| *r |= c);
                        }
                    }
                }
            }
        }
    }

    pub(crate) fn closure(&self) -> ReachabilityGraph {
        let mut r = ReachabilityGraph::empty(self.n);
        let mut scratch = vec![0u64; self.stride];
        for src in 0..self.n {
            let row = &mut r.bits[src * self.stride..(src + 1) * self.stride];
            self.run(src, row, &mut scratch);
            row[src / 64] &= !(1 << (src % 64));
        }
        r
    }

    pub(crate) fn is_temporally_connected(&self) -> bool {
        let mut reached = vec![0u64; self.stride];
        let mut scratch = vec![0u64; self.stride];
        let full = self.n;
        (0..self.n).all(|src| {
            self.run(src, &mut reached, &mut scratch);
            reached.iter().map(|w| w.count_ones() as usize).sum::<usize>() == full
        })
    }
}

/// Reachability graph of `g` under the given journey semantics.
pub fn closure(g: &TemporalGraph, s: Strictness) -> ReachabilityGraph {
    Sweep::new(g.n(), g.contacts(), s).closure()
}

/// Closure of a bare multiset of contacts on `n` vertices.
pub fn closure_from_contacts(n: usize, contacts: impl IntoIterator<Item = Contact>, s: Strictness) -> ReachabilityGraph {
    Sweep::new(n, contacts, s).closure()
}

/// Whether `u` reaches `v`. Reflexive queries are rejected.
pub fn reaches(g: &TemporalGraph, u: Vertex, v: Vertex, s: Strictness) -> Result<bool> {
    if u >= g.n() || v >= g.n() {
        return Err(Error::InvalidInput(format!("vertex out of range for n = {}", g.n())));
    }
    if u == v {
        return Err(Error::InvalidInput("reflexive reachability query".into()));
    }
    let sweep = Sweep::new(g.n(), g.contacts(), s);
    let mut reached = vec![0u64; sweep.stride];
    let mut scratch = vec![0u64; sweep.stride];
    sweep.run(u, &mut reached, &mut scratch);
    Ok(reached[v / 64] >> (v % 64) & 1 == 1)
}

/// Every vertex reaches every other vertex.
pub fn is_temporally_connected(g: &TemporalGraph, s: Strictness) -> bool {
    Sweep::new(g.n(), g.contacts(), s).is_temporally_connected()
}

/// Temporal connectivity of a bare multiset of contacts on `n` vertices;
/// stops at the first source that misses a vertex.
pub fn contacts_temporally_connected(n: usize, contacts: impl IntoIterator<Item = Contact>, s: Strictness) -> bool {
    Sweep::new(n, contacts, s).is_temporally_connected()
}

/// State of all per-source sweeps after one distinct time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepStep {
    pub time: Time,
    /// `reached[src]` lists the vertices reached from `src` (itself included).
    pub reached: Vec<BTreeSet<Vertex>>,
}

/// Per-time trace of the reached sets of every source.
pub fn sweep_trace(g: &TemporalGraph, s: Strictness) -> Vec<SweepStep> {
    let sweep = Sweep::new(g.n(), g.contacts(), s);
    let n = g.n();
    let mut state: Vec<Vec<u64>> = (0..n)
        .map(|src| {
            let mut w = vec![0u64; sweep.stride];
            w[src / 64] |= 1 << (src % 64);
            w
        })
        .collect();
    let mut scratch = vec![0u64; sweep.stride];
    let mut out = Vec::with_capacity(sweep.times.len());
    for (gi, &time) in sweep.times.iter().enumerate() {
        for row in state.iter_mut() {
            sweep.run_from_state(gi, gi + 1, row, &mut scratch);
        }
        let reached = state
            .iter()
            .map(|row| (0..n).filter(|&v| row[v / 64] >> (v % 64) & 1 == 1).collect())
            .collect();
        out.push(SweepStep { time, reached });
    }
    out
}

/// A temporal path: `vertices[i]` to `vertices[i + 1]` at `times[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Journey {
    pub vertices: Vec<Vertex>,
    pub times: Vec<Time>,
    pub strictness: Strictness,
}

impl Journey {
    pub fn contacts(&self) -> impl Iterator<Item = Contact> + '_ {
        self.vertices
            .windows(2)
            .zip(&self.times)
            .map(|(w, &t)| Contact::new(w[0], w[1], t))
    }

    /// Whether this is a valid journey of `g`: at least one contact, a simple
    /// path in the footprint, every contact present, times ordered according
    /// to the strictness.
    pub fn is_valid_in(&self, g: &TemporalGraph) -> bool {
        if self.times.is_empty() || self.vertices.len() != self.times.len() + 1 {
            return false;
        }
        let mut seen = BTreeSet::new();
        if !self.vertices.iter().all(|&v| v < g.n() && seen.insert(v)) {
            return false;
        }
        let present = self
            .contacts()
            .all(|c| g.labels(c.u, c.v).is_some_and(|ls| ls.binary_search(&c.time).is_ok()));
        present && self.times.windows(2).all(|w| self.strictness.allows(w[0], w[1]))
    }
}

/// Earliest-time journey following exactly the vertex sequence `support`,
/// if one exists.
pub fn journey_along(g: &TemporalGraph, support: &[Vertex], s: Strictness) -> Option<Journey> {
    if support.len() < 2 {
        return None;
    }
    let mut times = Vec::with_capacity(support.len() - 1);
    let mut last: Option<Time> = None;
    for w in support.windows(2) {
        let labels = g.labels(w[0], w[1])?;
        let t = *labels.iter().find(|&&t| last.is_none_or(|p| s.allows(p, t)))?;
        times.push(t);
        last = Some(t);
    }
    let j = Journey {
        vertices: support.to_vec(),
        times,
        strictness: s,
    };
    j.is_valid_in(g).then_some(j)
}

/// Vertex sequences of all journeys of `g` under `s`.
///
/// Enumerates simple footprint paths depth-first, extending each prefix with
/// the earliest admissible label; a prefix that cannot be extended that way
/// cannot be extended by any later label either.
pub fn enumerate_supports(g: &TemporalGraph, s: Strictness, max_n: usize) -> Result<BTreeSet<Vec<Vertex>>> {
    guard("vertex count", g.n(), max_n)?;
    let mut adj: Vec<Vec<(Vertex, &[Time])>> = vec![Vec::new(); g.n()];
    for e in g.edges() {
        adj[e.u].push((e.v, &e.labels));
        adj[e.v].push((e.u, &e.labels));
    }
    fn dfs(
        path: &mut Vec<Vertex>,
        last: Option<Time>,
        adj: &[Vec<(Vertex, &[Time])>],
        s: Strictness,
        out: &mut BTreeSet<Vec<Vertex>>,
    ) {
        let x = *path.last().unwrap();
        for &(y, labels) in &adj[x] {
            if path.contains(&y) {
                continue;
            }
            if let Some(&t) = labels.iter().find(|&&t| last.is_none_or(|p| s.allows(p, t))) {
                path.push(y);
                out.insert(path.clone());
                dfs(path, Some(t), adj, s, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for src in 0..g.n() {
        dfs(&mut vec![src], None, &adj, s, &mut out);
    }
    Ok(out)
}

/// Hop distance in the footprint, `None` when disconnected.
pub fn footprint_distance(g: &TemporalGraph, u: Vertex, v: Vertex) -> Option<usize> {
    let mut adj = vec![Vec::new(); g.n()];
    for e in g.edges() {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut dist = vec![usize::MAX; g.n()];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            return Some(dist[x]);
        }
        for &y in &adj[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    None
}
