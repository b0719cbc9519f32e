//! Exact maximum clique on bitmask adjacency.

use crate::error::{guard, Error, Result};
use crate::model::{StaticGraph, Vertex};

/// Default vertex bound for [`max_clique`].
pub const CLIQUE_GUARD: usize = 16;

/// Clique number of `f`. The empty graph on at least one vertex has
/// clique number 1; on zero vertices, 0.
pub fn max_clique(f: &StaticGraph) -> Result<usize> {
    guard("vertex count", f.n(), CLIQUE_GUARD)?;
    if f.is_directed() {
        return Err(Error::InvalidInput("clique search needs an undirected graph".into()));
    }
    Ok(clique_number(&adjacency(f)))
}

pub(crate) fn adjacency(f: &StaticGraph) -> Vec<u64> {
    assert!(f.n() <= 64, "bitmask adjacency holds at most 64 vertices");
    let mut adj = vec![0u64; f.n()];
    for (a, b) in f.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    adj
}

/// Branch and bound with a greedy-coloring bound.
pub(crate) fn clique_number(adj: &[u64]) -> usize {
    fn color_bound(adj: &[u64], mut cand: u64) -> usize {
        let mut colors = 0;
        while cand != 0 {
            colors += 1;
            let mut free = cand;
            while free != 0 {
                let v = free.trailing_zeros() as usize;
                free &= !(1 << v) & !adj[v];
                cand &= !(1 << v);
            }
        }
        colors
    }
    fn expand(adj: &[u64], size: usize, mut cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + color_bound(adj, cand) <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= !(1 << v);
            expand(adj, size + 1, cand & adj[v], best);
        }
    }
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    expand(adj, 0, all, &mut best);
    best
}

/// Visits the `k`-cliques in lexicographic order of their sorted vertex
/// lists until `accept` returns `true`; returns the accepted clique.
pub(crate) fn find_clique(adj: &[u64], k: usize, mut accept: impl FnMut(u64) -> bool) -> Option<u64> {
    fn walk(adj: &[u64], k: usize, chosen: u64, size: usize, cand: u64, accept: &mut dyn FnMut(u64) -> bool) -> Option<u64> {
        if size == k {
            return accept(chosen).then_some(chosen);
        }
        let mut rest = cand;
        while rest != 0 {
            if size + (rest.count_ones() as usize) < k {
                return None;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= !(1 << v);
            if let Some(found) = walk(adj, k, chosen | 1 << v, size + 1, rest & adj[v], accept) {
                return Some(found);
            }
        }
        None
    }
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    walk(adj, k, 0, 0, all, &mut accept)
}

pub(crate) fn mask_vertices(mask: u64) -> Vec<Vertex> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        assert_eq!(max_clique(&StaticGraph::complete(4)).unwrap(), 4);
        assert_eq!(max_clique(&StaticGraph::cycle(4)).unwrap(), 2);
        assert_eq!(max_clique(&StaticGraph::undirected(5, []).unwrap()).unwrap(), 1);
        assert_eq!(max_clique(&StaticGraph::undirected(0, []).unwrap()).unwrap(), 0);
        assert_eq!(max_clique(&StaticGraph::cycle(3)).unwrap(), 3);
        assert!(matches!(max_clique(&StaticGraph::complete(17)), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn matches_subset_enumeration() {
        let mut state = 0x2545f4914f6cdd1du64;
        for _ in 0..200 {
            let n = 1 + (state % 9) as usize;
            let mut pairs = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state.is_multiple_of(2) {
                        pairs.push((a, b));
                    }
                }
            }
            let f = StaticGraph::undirected(n, pairs).unwrap();
            let brute = (1u32..1 << n)
                .filter(|&m| {
                    let vs = mask_vertices(m as u64);
                    vs.iter().all(|&a| vs.iter().all(|&b| a == b || f.has_edge(a, b)))
                })
                .map(|m| m.count_ones() as usize)
                .max()
                .unwrap();
            assert_eq!(max_clique(&f).unwrap(), brute);
        }
    }

    #[test]
    fn lexicographic_clique_search() {
        let f = StaticGraph::undirected(5, [(0, 3), (0, 4), (3, 4), (1, 2), (2, 3), (1, 3)]).unwrap();
        let adj = adjacency(&f);
        let first = find_clique(&adj, 3, |_| true).unwrap();
        assert_eq!(mask_vertices(first), vec![0, 3, 4]);
        let second = find_clique(&adj, 3, |m| m != first).unwrap();
        assert_eq!(mask_vertices(second), vec![1, 2, 3]);
        assert!(find_clique(&adj, 4, |_| true).is_none());
    }
}
