//! Canonical enumeration of the labelings of a footprint.
//!
//! In a simple setting only the relative order of the labels matters, so a
//! labeling is an ordered set partition of the edges: block `i` holds the
//! edges labeled `i + 1`. In the other settings a labeling is a sequence of
//! non-empty snapshots. Repeating a snapshot right after itself never
//! changes a non-strict or proper closure, and a snapshot that extends no
//! reached set can be dropped, so sequences stay shorter than the number
//! of reachable pairs.

use crate::error::{guard, Result};
use crate::model::{Contact, SettingClass, StaticGraph, TemporalGraph, Time, Vertex};

/// Edge bound for simple settings.
pub const SIMPLE_EDGE_GUARD: usize = 10;
/// Vertex bound for settings whose edges may carry several labels.
pub const SEQUENCE_VERTEX_GUARD: usize = 5;

/// Ordered set partitions of `0..len` in lexicographic order of the block
/// assignment vector, optionally keeping conflicting items apart.
#[derive(Clone, Debug)]
pub struct OrderedPartitions {
    len: usize,
    conflicts: Vec<u64>,
    assign: Vec<usize>,
    counts: Vec<usize>,
    distinct: usize,
    started: bool,
    done: bool,
}

impl OrderedPartitions {
    pub fn new(len: usize) -> Self {
        Self::with_conflicts(len, &[])
    }

    /// Items listed as a pair never share a block.
    pub fn with_conflicts(len: usize, pairs: &[(usize, usize)]) -> Self {
        assert!(len <= 64, "at most 64 items");
        let mut conflicts = vec![0u64; len];
        for &(a, b) in pairs {
            let (lo, hi) = (a.min(b), a.max(b));
            conflicts[hi] |= 1 << lo;
        }
        OrderedPartitions {
            len,
            conflicts,
            assign: vec![0; len],
            counts: vec![0; len],
            distinct: 0,
            started: false,
            done: false,
        }
    }

    fn feasible(&self, i: usize, v: usize) -> bool {
        let mut c = self.conflicts[i];
        while c != 0 {
            let j = c.trailing_zeros() as usize;
            if self.assign[j] == v {
                return false;
            }
            c &= c - 1;
        }
        let distinct = self.distinct + usize::from(self.counts[v] == 0);
        let top = (0..self.len).rev().find(|&b| self.counts[b] > 0).map_or(v, |b| b.max(v));
        top + 1 - distinct < self.len - i
    }

    fn place(&mut self, i: usize, v: usize) {
        self.assign[i] = v;
        if self.counts[v] == 0 {
            self.distinct += 1;
        }
        self.counts[v] += 1;
    }

    fn unplace(&mut self, i: usize) -> usize {
        let v = self.assign[i];
        self.counts[v] -= 1;
        if self.counts[v] == 0 {
            self.distinct -= 1;
        }
        v
    }

    /// Streaming form of `next`: the block of each item, blocks numbered
    /// from 0 with none empty.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        let (mut i, mut from) = if self.started {
            let last = self.len - 1;
            (last, self.unplace(last) + 1)
        } else {
            self.started = true;
            if self.len == 0 {
                self.done = true;
                return Some(&self.assign);
            }
            (0, 0)
        };
        loop {
            match (from..self.len).find(|&v| self.feasible(i, v)) {
                Some(v) => {
                    self.place(i, v);
                    if i + 1 == self.len {
                        return Some(&self.assign);
                    }
                    i += 1;
                    from = 0;
                }
                None => {
                    if i == 0 {
                        self.done = true;
                        return None;
                    }
                    i -= 1;
                    from = self.unplace(i) + 1;
                }
            }
        }
    }
}

impl Iterator for OrderedPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().map(<[usize]>::to_vec)
    }
}

/// Sequences of snapshots drawn from `masks`, by increasing length and
/// lexicographically within a length, whose union is `full`.
#[derive(Clone, Debug)]
struct SnapshotSequences {
    masks: Vec<u64>,
    full: u64,
    max_pop: usize,
    max_len: usize,
    suppress_repeats: bool,
    len: usize,
    seq: Vec<usize>,
    cover: Vec<u64>,
    started: bool,
    done: bool,
}

impl SnapshotSequences {
    fn new(masks: Vec<u64>, full: u64, max_len: usize, suppress_repeats: bool) -> Self {
        let max_pop = masks.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
        SnapshotSequences {
            masks,
            full,
            max_pop,
            max_len,
            suppress_repeats,
            len: 0,
            seq: Vec::new(),
            cover: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn feasible(&self, i: usize, k: usize) -> bool {
        if self.suppress_repeats && i > 0 && self.seq[i - 1] == k {
            return false;
        }
        let before = if i == 0 { 0 } else { self.cover[i - 1] };
        let missing = (self.full & !(before | self.masks[k])).count_ones() as usize;
        missing <= (self.len - i - 1) * self.max_pop
    }

    /// Fills positions `i..len` with the first feasible completion, starting
    /// position `i` at candidate `from`. Returns false when none exists.
    fn descend(&mut self, mut i: usize, mut from: usize) -> bool {
        loop {
            match (from..self.masks.len()).find(|&k| self.feasible(i, k)) {
                Some(k) => {
                    self.seq[i] = k;
                    self.cover[i] = self.masks[k] | if i == 0 { 0 } else { self.cover[i - 1] };
                    if i + 1 == self.len {
                        return true;
                    }
                    i += 1;
                    from = 0;
                }
                None => {
                    if i == 0 {
                        return false;
                    }
                    i -= 1;
                    from = self.seq[i] + 1;
                }
            }
        }
    }

    fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.full == 0 {
                self.done = true;
                return Some(&self.seq);
            }
        } else {
            let last = self.len - 1;
            if self.descend(last, self.seq[last] + 1) {
                return Some(&self.seq);
            }
        }
        loop {
            self.len += 1;
            if self.len > self.max_len {
                self.done = true;
                return None;
            }
            self.seq = vec![0; self.len];
            self.cover = vec![0; self.len];
            if self.descend(0, 0) {
                return Some(&self.seq);
            }
        }
    }
}

#[derive(Clone, Debug)]
enum Source {
    Partitions(OrderedPartitions),
    Sequences(SnapshotSequences),
}

/// Lazy stream of the canonical labelings of a footprint.
#[derive(Clone, Debug)]
pub struct Labelings {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    source: Source,
}

impl Labelings {
    /// Writes the next labeling as contacts into `out`; false when done.
    pub(crate) fn next_contacts(&mut self, out: &mut Vec<Contact>) -> bool {
        out.clear();
        match &mut self.source {
            Source::Partitions(p) => {
                let Some(blocks) = p.advance() else { return false };
                for (&(u, v), &b) in self.edges.iter().zip(blocks) {
                    out.push(Contact { u, v, time: b as Time + 1 });
                }
            }
            Source::Sequences(s) => {
                if s.advance().is_none() {
                    return false;
                }
                for (p, &k) in s.seq.iter().enumerate() {
                    let mut mask = s.masks[k];
                    while mask != 0 {
                        let (u, v) = self.edges[mask.trailing_zeros() as usize];
                        out.push(Contact { u, v, time: p as Time + 1 });
                        mask &= mask - 1;
                    }
                }
            }
        }
        true
    }
}

impl Iterator for Labelings {
    type Item = TemporalGraph;

    fn next(&mut self) -> Option<TemporalGraph> {
        let mut contacts = Vec::new();
        self.next_contacts(&mut contacts).then(|| {
            TemporalGraph::from_contacts(self.n, contacts.iter().map(|c| (c.u, c.v, c.time)))
                .expect("enumerated labelings are valid")
        })
    }
}

/// Every labeling of `f` admitted by `setting`, up to the canonical form
/// described in the module documentation, in a fixed order.
pub fn enumerate_labelings(f: &StaticGraph, setting: SettingClass) -> Result<Labelings> {
    let n = f.n();
    labelings(f, setting, n * n.saturating_sub(1))
}

pub(crate) fn labelings(f: &StaticGraph, setting: SettingClass, max_len: usize) -> Result<Labelings> {
    let n = f.n();
    let edges: Vec<(Vertex, Vertex)> = f.edges().collect();
    let incident = |i: usize, j: usize| {
        let (a, b) = (edges[i], edges[j]);
        a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
    };
    let source = if setting.requires_simple() {
        guard("edge count", edges.len(), SIMPLE_EDGE_GUARD)?;
        let conflicts: Vec<(usize, usize)> = if setting.requires_proper() {
            (0..edges.len())
                .flat_map(|i| (i + 1..edges.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| incident(i, j))
                .collect()
        } else {
            Vec::new()
        };
        Source::Partitions(OrderedPartitions::with_conflicts(edges.len(), &conflicts))
    } else {
        guard("vertex count", n, SEQUENCE_VERTEX_GUARD)?;
        let m = edges.len();
        let masks: Vec<u64> = (1u64..1 << m)
            .filter(|&mask| {
                !setting.requires_proper()
                    || (0..m).all(|i| {
                        (i + 1..m).all(|j| mask >> i & 1 == 0 || mask >> j & 1 == 0 || !incident(i, j))
                    })
            })
            .collect();
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let suppress = setting != SettingClass::Strict;
        Source::Sequences(SnapshotSequences::new(masks, full, max_len, suppress))
    };
    Ok(Labelings { n, edges, source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reachability::closure;

    const FUBINI: [usize; 7] = [1, 1, 3, 13, 75, 541, 4683];

    #[test]
    fn fubini_counts() {
        for (len, &expected) in FUBINI.iter().enumerate() {
            assert_eq!(OrderedPartitions::new(len).count(), expected);
        }
        let first: Vec<_> = OrderedPartitions::new(2).collect();
        assert_eq!(first, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn partitions_are_distinct_and_surjective() {
        let all: Vec<_> = OrderedPartitions::new(5).collect();
        let set: std::collections::BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for p in &all {
            let k = p.iter().max().unwrap() + 1;
            assert!((0..k).all(|b| p.contains(&b)));
        }
    }

    #[test]
    fn conflicting_items_never_share() {
        let all: Vec<_> = OrderedPartitions::with_conflicts(3, &[(0, 1), (1, 2)]).collect();
        assert!(all.iter().all(|p| p[0] != p[1] && p[1] != p[2]));
        let brute = OrderedPartitions::new(3).filter(|p| p[0] != p[1] && p[1] != p[2]).count();
        assert_eq!(all.len(), brute);
    }

    #[test]
    fn two_incident_edges() {
        let f = StaticGraph::path(3);
        assert_eq!(enumerate_labelings(&f, SettingClass::SimpleStrict).unwrap().count(), 3);
        assert_eq!(enumerate_labelings(&f, SettingClass::SimpleNonStrict).unwrap().count(), 3);
        assert_eq!(enumerate_labelings(&f, SettingClass::Happy).unwrap().count(), 2);
    }

    #[test]
    fn single_edge_sequences() {
        let f = StaticGraph::path(2);
        let non_strict: Vec<_> = enumerate_labelings(&f, SettingClass::NonStrict).unwrap().collect();
        assert_eq!(non_strict.len(), 1);
        assert_eq!(non_strict[0].labels(0, 1), Some(&[1][..]));
        let strict: Vec<_> = enumerate_labelings(&f, SettingClass::Strict).unwrap().collect();
        assert_eq!(strict.len(), 2);
        assert_eq!(strict[1].labels(0, 1), Some(&[1, 2][..]));
    }

    #[test]
    fn sequences_cover_the_footprint() {
        let f = StaticGraph::path(3);
        let all: Vec<_> = enumerate_labelings(&f, SettingClass::NonStrict).unwrap().collect();
        // Words of length 1..=6 over three snapshots with no immediate
        // repeat, minus the two single-edge words of length one.
        assert_eq!(all.len(), 3 * 63 - 2);
        assert!(all.iter().all(|g| g.footprint() == f));
        let proper: Vec<_> = enumerate_labelings(&f, SettingClass::Proper).unwrap().collect();
        assert!(proper.iter().all(|g| g.is_proper()));
    }

    #[test]
    fn edgeless_footprint() {
        let f = StaticGraph::undirected(3, []).unwrap();
        for s in SettingClass::ALL {
            let all: Vec<_> = enumerate_labelings(&f, s).unwrap().collect();
            assert_eq!(all.len(), 1);
            assert_eq!(all[0].edge_count(), 0);
        }
    }

    #[test]
    fn guards() {
        assert!(enumerate_labelings(&StaticGraph::complete(5), SettingClass::Happy).is_ok());
        assert!(enumerate_labelings(&StaticGraph::complete(6), SettingClass::SimpleStrict).is_err());
        assert!(enumerate_labelings(&StaticGraph::path(6), SettingClass::NonStrict).is_err());
    }

    #[test]
    fn strict_sequences_keep_repeats() {
        let f = StaticGraph::path(3);
        let reach_two_hops = enumerate_labelings(&f, SettingClass::Strict)
            .unwrap()
            .take(200)
            .any(|g| closure(&g, crate::model::Strictness::Strict).has_arc(0, 2));
        assert!(reach_two_hops);
    }
}
