//! Reachability, support and induced-reachability equivalence.

use crate::error::{guard, Error, Result};
use crate::model::{Strictness, TemporalGraph, Vertex};
use crate::reachability::{closure, enumerate_supports, ReachabilityGraph, SUPPORT_GUARD};

/// Vertex bound for isomorphism by permutation search.
pub const ISOMORPHISM_GUARD: usize = 8;

/// An injective map from `0..map.len()` into `0..codomain`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexMapping {
    map: Vec<Vertex>,
    codomain: usize,
}

impl VertexMapping {
    pub fn new(map: Vec<Vertex>, codomain: usize) -> Result<Self> {
        let mut seen = vec![false; codomain];
        for &v in &map {
            if v >= codomain {
                return Err(Error::InvalidInput(format!("image {v} out of range for {codomain} vertices")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidInput(format!("mapping is not injective: {v} is hit twice")));
            }
        }
        Ok(VertexMapping { map, codomain })
    }

    pub fn identity(n: usize) -> Self {
        VertexMapping {
            map: (0..n).collect(),
            codomain: n,
        }
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.map[v]
    }

    pub fn domain(&self) -> usize {
        self.map.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.map
    }

    fn is_bijection(&self) -> bool {
        self.map.len() == self.codomain
    }
}

/// Whether the closures of `g1` under `s1` and `g2` under `s2` are
/// isomorphic, through `mapping` when given.
pub fn reachability_equivalent(
    g1: &TemporalGraph,
    g2: &TemporalGraph,
    s1: Strictness,
    s2: Strictness,
    mapping: Option<&VertexMapping>,
) -> Result<bool> {
    if g1.n() != g2.n() {
        return Err(Error::InvalidInput(format!("vertex counts differ: {} and {}", g1.n(), g2.n())));
    }
    let (c1, c2) = (closure(g1, s1), closure(g2, s2));
    match mapping {
        Some(m) => {
            if m.domain() != g1.n() || !m.is_bijection() {
                return Err(Error::InvalidInput("mapping must be a bijection between the vertex sets".into()));
            }
            Ok(c1.permuted(m.as_slice()) == c2)
        }
        None => digraph_isomorphic(&c1, &c2),
    }
}

/// Whether both graphs have the same journey supports (vertex sequences).
pub fn support_equivalent(g1: &TemporalGraph, g2: &TemporalGraph, s1: Strictness, s2: Strictness) -> Result<bool> {
    if g1.n() != g2.n() {
        return Err(Error::InvalidInput(format!("vertex counts differ: {} and {}", g1.n(), g2.n())));
    }
    Ok(enumerate_supports(g1, s1, SUPPORT_GUARD)? == enumerate_supports(g2, s2, SUPPORT_GUARD)?)
}

/// Whether the closure of `big`, restricted to the image of `sigma`, is the
/// closure of `small` carried over by `sigma`.
pub fn induced_reachability_equivalent(
    small: &TemporalGraph,
    big: &TemporalGraph,
    s_small: Strictness,
    s_big: Strictness,
    sigma: &VertexMapping,
) -> Result<bool> {
    if sigma.domain() != small.n() || sigma.codomain() != big.n() {
        return Err(Error::InvalidInput(format!(
            "mapping goes from {} to {} vertices, graphs have {} and {}",
            sigma.domain(),
            sigma.codomain(),
            small.n(),
            big.n()
        )));
    }
    Ok(closure(big, s_big).restrict(sigma.as_slice()) == closure(small, s_small))
}

/// Digraph isomorphism by backtracking over vertex assignments, after
/// cheap degree checks.
pub fn digraph_isomorphic(d1: &ReachabilityGraph, d2: &ReachabilityGraph) -> Result<bool> {
    guard("vertex count", d1.n().max(d2.n()), ISOMORPHISM_GUARD)?;
    Ok(find_isomorphism(d1, d2).is_some())
}

/// A permutation `p` with `d1.permuted(p) == d2`, if any.
pub fn find_isomorphism(d1: &ReachabilityGraph, d2: &ReachabilityGraph) -> Option<Vec<Vertex>> {
    let n = d1.n();
    if n != d2.n() || d1.arc_count() != d2.arc_count() {
        return None;
    }
    let key = |d: &ReachabilityGraph, v: Vertex| (d.out_degree(v), d.in_degree(v));
    let k1: Vec<_> = (0..n).map(|v| key(d1, v)).collect();
    let k2: Vec<_> = (0..n).map(|v| key(d2, v)).collect();
    let (mut s1, mut s2) = (k1.clone(), k2.clone());
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return None;
    }
    fn extend(
        v: Vertex,
        d1: &ReachabilityGraph,
        d2: &ReachabilityGraph,
        k1: &[(usize, usize)],
        k2: &[(usize, usize)],
        image: &mut Vec<Vertex>,
        used: &mut [bool],
    ) -> bool {
        let n = d1.n();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || k1[v] != k2[w] {
                continue;
            }
            let consistent = (0..v).all(|x| {
                d1.has_arc(x, v) == d2.has_arc(image[x], w) && d1.has_arc(v, x) == d2.has_arc(w, image[x])
            });
            if consistent {
                used[w] = true;
                image.push(w);
                if extend(v + 1, d1, d2, k1, k2, image, used) {
                    return true;
                }
                image.pop();
                used[w] = false;
            }
        }
        false
    }
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(0, d1, d2, &k1, &k2, &mut image, &mut used).then_some(image)
}
