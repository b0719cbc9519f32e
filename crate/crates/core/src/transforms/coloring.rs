//! Proper edge colorings of static graphs.

use std::collections::BTreeMap;

use crate::model::{StaticGraph, Vertex};

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ColoringAlgorithm {
    /// Misra-Gries fan rotation, at most Δ+1 colors.
    #[default]
    MisraGries,
    /// First-fit in edge order, at most 2Δ-1 colors.
    Greedy,
}

/// Colors `1..=color_count` assigned to the edges of an undirected graph so
/// that incident edges get distinct colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: BTreeMap<(Vertex, Vertex), u32>,
    color_count: u32,
}

impl EdgeColoring {
    pub fn color(&self, a: Vertex, b: Vertex) -> Option<u32> {
        self.colors.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn color_count(&self) -> u32 {
        self.color_count
    }

    pub fn iter(&self) -> impl Iterator<Item = ((Vertex, Vertex), u32)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    /// Whether incident edges always differ and every color lies in range.
    pub fn is_proper_for(&self, f: &StaticGraph) -> bool {
        if f.edges().any(|(a, b)| self.color(a, b).is_none()) {
            return false;
        }
        let mut seen = vec![Vec::new(); f.n()];
        for ((a, b), c) in self.iter() {
            if c == 0 || c > self.color_count || seen[a].contains(&c) || seen[b].contains(&c) {
                return false;
            }
            seen[a].push(c);
            seen[b].push(c);
        }
        true
    }
}

pub fn proper_edge_coloring(f: &StaticGraph) -> EdgeColoring {
    edge_coloring(f, ColoringAlgorithm::MisraGries)
}

pub fn edge_coloring(f: &StaticGraph, algorithm: ColoringAlgorithm) -> EdgeColoring {
    let raw = match algorithm {
        ColoringAlgorithm::MisraGries => MisraGries::new(f).run(),
        ColoringAlgorithm::Greedy => greedy(f),
    };
    // renumber the colors actually used to 1..=C, in order of first use
    let mut remap = BTreeMap::new();
    let mut colors = BTreeMap::new();
    for (e, c) in raw {
        let next = remap.len() as u32 + 1;
        colors.insert(e, *remap.entry(c).or_insert(next));
    }
    EdgeColoring {
        color_count: remap.len() as u32,
        colors,
    }
}

fn greedy(f: &StaticGraph) -> Vec<((Vertex, Vertex), usize)> {
    let mut used: Vec<Vec<usize>> = vec![Vec::new(); f.n()];
    f.edges()
        .map(|(a, b)| {
            let c = (0..).find(|c| !used[a].contains(c) && !used[b].contains(c)).unwrap();
            used[a].push(c);
            used[b].push(c);
            ((a, b), c)
        })
        .collect()
}

struct MisraGries<'a> {
    f: &'a StaticGraph,
    palette: usize,
    /// `at[x][c]` is the neighbour joined to `x` by an edge of color `c`.
    at: Vec<Vec<usize>>,
    /// `col[x][y]` is the color of `{x, y}`.
    col: Vec<Vec<usize>>,
    adj: Vec<Vec<Vertex>>,
}

impl<'a> MisraGries<'a> {
    fn new(f: &'a StaticGraph) -> Self {
        let n = f.n();
        let palette = f.max_degree() + 1;
        MisraGries {
            f,
            palette,
            at: vec![vec![NONE; palette]; n],
            col: vec![vec![NONE; n]; n],
            adj: (0..n).map(|x| f.neighbors(x)).collect(),
        }
    }

    fn is_free(&self, x: Vertex, c: usize) -> bool {
        self.at[x][c] == NONE
    }

    fn free_color(&self, x: Vertex) -> usize {
        (0..self.palette).find(|&c| self.is_free(x, c)).expect("a vertex of degree <= Δ has a free color among Δ+1")
    }

    /// Applies a batch of recolorings atomically.
    fn recolor(&mut self, updates: &[(Vertex, Vertex, usize)]) {
        for &(x, y, _) in updates {
            let old = self.col[x][y];
            if old != NONE {
                self.at[x][old] = NONE;
                self.at[y][old] = NONE;
            }
        }
        for &(x, y, c) in updates {
            self.col[x][y] = c;
            self.col[y][x] = c;
            self.at[x][c] = y;
            self.at[y][c] = x;
        }
    }

    fn maximal_fan(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = self.adj[u].iter().copied().find(|&w| {
                let c = self.col[u][w];
                c != NONE && !fan.contains(&w) && self.is_free(last, c)
            });
            match next {
                Some(w) => fan.push(w),
                None => return fan,
            }
        }
    }

    fn run(mut self) -> Vec<((Vertex, Vertex), usize)> {
        let edges: Vec<_> = self.f.edges().collect();
        for &(u, v) in &edges {
            let fan = self.maximal_fan(u, v);
            let c = self.free_color(u);
            let d = self.free_color(*fan.last().unwrap());

            // invert the path from u alternating d, c, d, ...
            if c != d {
                let mut flips = Vec::new();
                let (mut x, mut want) = (u, d);
                while self.at[x][want] != NONE {
                    let y = self.at[x][want];
                    let other = if want == d { c } else { d };
                    flips.push((x, y, other));
                    x = y;
                    want = other;
                }
                self.recolor(&flips);
            }

            let w = fan.iter().position(|&x| self.is_free(x, d)).unwrap_or(fan.len() - 1);
            let mut rotation: Vec<(Vertex, Vertex, usize)> =
                (0..w).map(|i| (u, fan[i], self.col[u][fan[i + 1]])).collect();
            rotation.push((u, fan[w], d));
            self.recolor(&rotation);
        }
        edges.into_iter().map(|(a, b)| ((a, b), self.col[a][b])).collect()
    }
}
