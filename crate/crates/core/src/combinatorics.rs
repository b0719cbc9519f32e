//! Small enumeration helpers shared by the exhaustive searches.

/// Visits the `k`-subsets of `0..len` in lexicographic order until `visit`
/// returns `true`. Returns whether a visit stopped the walk.
pub(crate) fn for_each_combination(len: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if k > len {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return true;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + len - k) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Disjoint-set forest over `0..n`.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            components: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a] = b;
            self.components -= 1;
        }
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }
}
