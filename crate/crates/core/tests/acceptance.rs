//! End-to-end acceptance checks. Each criterion prints one PASS or FAIL
//! line; the process fails if any criterion fails.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempreach_core::analysis::{
    clique_to_component_instance, max_clique, max_temporal_component_bounded, min_spanner, ComponentGuards,
    ComponentMode, SpannerMode,
};
use tempreach_core::expressivity::{
    induced_reachability_equivalent, support_equivalent, verify_separation, OrderedPartitions, SeparationCase,
    VertexMapping,
};
use tempreach_core::fixtures::get_fixture;
use tempreach_core::gen::{random_graph, random_happy_on, random_proper, random_static, GraphShape};
use tempreach_core::reachability::{closure, contacts_temporally_connected, footprint_distance, is_temporally_connected};
use tempreach_core::transforms::{dilate, saturate, semaphore};
use tempreach_core::{Contact, StaticGraph, Strictness, TemporalGraph, Time, Vertex};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    if took < limit {
        Ok(took)
    } else {
        Err(format!("took {took:?}, limit {limit:?}"))
    }
}

fn arcs(list: &[(Vertex, Vertex)]) -> BTreeSet<(Vertex, Vertex)> {
    list.iter().copied().collect()
}

fn closure_golden() -> Outcome {
    let start = Instant::now();
    let cases: [(&str, Strictness, &[(Vertex, Vertex)]); 4] = [
        ("L2", Strictness::Strict, &[(0, 1), (0, 2), (1, 0), (1, 2), (1, 3), (2, 1), (2, 3), (3, 2)]),
        ("L3", Strictness::Strict, &[(0, 1), (1, 0), (1, 2), (2, 1)]),
        (
            "L5",
            Strictness::NonStrict,
            &[(0, 1), (0, 2), (1, 0), (1, 2), (1, 3), (2, 0), (2, 1), (2, 3), (3, 1), (3, 2)],
        ),
        (
            "L7",
            Strictness::NonStrict,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 0), (2, 1), (2, 3), (2, 4), (3, 0), (3, 1),
                (3, 2), (3, 4), (4, 2), (4, 3),
            ],
        ),
    ];
    for (name, s, expected) in cases {
        let f = get_fixture(name).map_err(|e| e.to_string())?;
        let got: BTreeSet<_> = closure(&f.graph, s).arcs().collect();
        ensure!(got == arcs(expected), "{name} {s}: got {got:?}");
        ensure!(f.expected(s).arcs().collect::<BTreeSet<_>>() == got, "{name}: stored closure differs");
    }
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!("4 closures exact in {took:?}"))
}

fn spanner_numbers() -> Outcome {
    let start = Instant::now();
    let g1 = get_fixture("G1").unwrap().graph;
    let g5 = get_fixture("G5").unwrap().graph;
    let run = |g: &TemporalGraph, s, mode| min_spanner(g, s, mode).map_err(|e| e.to_string());
    let a = run(&g1, Strictness::NonStrict, SpannerMode::Contacts)?;
    let b = run(&g1, Strictness::Strict, SpannerMode::Contacts)?;
    let c = run(&g1, Strictness::Strict, SpannerMode::Edges)?;
    let d = run(&g5, Strictness::Strict, SpannerMode::Edges)?;
    ensure!(a.size == 3, "G1 non-strict contacts = {}", a.size);
    ensure!(b.size == 4, "G1 strict contacts = {}", b.size);
    ensure!(c.size == 3, "G1 strict edges = {}", c.size);
    ensure!(c.witness.contacts_count() == 5, "G1 strict edge witness has {} labels", c.witness.contacts_count());
    ensure!(d.size == 6, "G5 strict edges = {}", d.size);
    let took = within(Duration::from_secs(5), start)?;
    Ok(format!("G1: 3/4/3 (5 labels), G5: 6 in {took:?}"))
}

fn separations() -> Outcome {
    let start = Instant::now();
    let mut summary = Vec::new();
    for case in SeparationCase::all() {
        let first = verify_separation(&case).map_err(|e| e.to_string())?;
        let again = verify_separation(&case).map_err(|e| e.to_string())?;
        ensure!(first.witness.is_none(), "{}: witness {:?}", case.id, first.witness);
        ensure!(first.scanned > 0, "{}: nothing scanned", case.id);
        ensure!(
            (first.scanned, first.footprints) == (again.scanned, again.footprints),
            "{}: scan counts differ between runs",
            case.id
        );
        summary.push(format!("{}={}", case.id, first.scanned));
    }
    let took = within(Duration::from_secs(60), start)?;
    Ok(format!("no witnesses, scanned {} in {took:?}", summary.join(" ")))
}

fn transformation_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e51);
    let count = 600;
    for i in 0..count {
        let shape = GraphShape::new(rng.gen_range(1..=7), 12, 5);
        let g = random_graph(&mut rng, shape);
        let n = g.n();
        let d = dilate(&g).graph;
        ensure!(d.is_proper(), "#{i}: dilation not proper for {g:?}");
        ensure!(
            support_equivalent(&g, &d, Strictness::NonStrict, Strictness::Strict).unwrap(),
            "#{i}: dilation changes supports of {g:?}"
        );

        let s = saturate(&g).graph;
        ensure!(
            closure(&s, Strictness::Strict) == closure(&g, Strictness::NonStrict),
            "#{i}: saturation closure differs for {g:?}"
        );
        ensure!(s.lifetime().ok() == g.lifetime().ok(), "#{i}: saturation changes the lifetime");
        let tau = g.distinct_times().len();
        ensure!(s.contacts_count() <= n * (n + 1) * tau / 2, "#{i}: saturation too large");

        let r = semaphore(&g);
        let m = g.contacts_count();
        ensure!(r.graph.is_happy(), "#{i}: semaphore output not happy");
        ensure!(r.graph.n() == n + 2 * m, "#{i}: semaphore has {} vertices", r.graph.n());
        ensure!(r.graph.edge_count() == 4 * m, "#{i}: semaphore has {} edges", r.graph.edge_count());
        let sigma = VertexMapping::new(r.sigma.clone(), r.graph.n()).unwrap();
        ensure!(
            induced_reachability_equivalent(&g, &r.graph, Strictness::Strict, Strictness::Strict, &sigma).unwrap(),
            "#{i}: semaphore changes the induced closure of {g:?}"
        );
    }
    Ok(format!("{count} graphs, 0 failures"))
}

fn properness_collapse() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9a0e);
    let count = 600;
    let mut with_edges = 0;
    for i in 0..count {
        let shape = GraphShape::new(rng.gen_range(2..=7), 12, 5);
        let g = random_proper(&mut rng, shape);
        ensure!(g.is_proper(), "#{i}: generator produced a non-proper graph");
        with_edges += usize::from(g.edge_count() > 1);
        ensure!(
            closure(&g, Strictness::Strict) == closure(&g, Strictness::NonStrict),
            "#{i}: closures differ for {g:?}"
        );
    }
    Ok(format!("{count} proper graphs ({with_edges} with several edges), 0 failures"))
}

/// Connected graphs on `n` vertices with an edge count in `edges`, one per
/// isomorphism class, as edge lists.
fn connected_graphs(n: usize, edges: std::ops::RangeInclusive<usize>) -> Vec<StaticGraph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let index: HashMap<(Vertex, Vertex), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut perms = Vec::new();
    permutations(n, &mut Vec::new(), &mut perms);
    let pair_maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            pairs
                .iter()
                .map(|&(a, b)| index[&(p[a].min(p[b]), p[a].max(p[b]))])
                .collect()
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        if !edges.contains(&(mask.count_ones() as usize)) {
            continue;
        }
        let chosen = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]);
        let f = StaticGraph::undirected(n, chosen).unwrap();
        if !f.is_connected() {
            continue;
        }
        let canon = pair_maps
            .iter()
            .map(|map| (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).fold(0u32, |acc, i| acc | 1 << map[i]))
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(f);
        }
    }
    out
}

fn permutations(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for v in 0..n {
        if !prefix.contains(&v) {
            prefix.push(v);
            permutations(n, prefix, out);
            prefix.pop();
        }
    }
}

fn reduction_soundness() -> Outcome {
    let start = Instant::now();
    let guards = ComponentGuards { open: 64, closed: 64 };
    let mut checked = 0;
    for n0 in 2..=6 {
        for f in connected_graphs(n0, 4..=9) {
            let m = f.edge_count();
            let omega = max_clique(&f).map_err(|e| e.to_string())?;
            let inst = clique_to_component_instance(&f).map_err(|e| e.to_string())?;
            ensure!(inst.graph.is_happy(), "{f:?}: instance not happy");
            ensure!(inst.graph.n() == n0 + 2 * m, "{f:?}: instance has {} vertices", inst.graph.n());
            let open = max_temporal_component_bounded(&inst.graph, Strictness::Strict, ComponentMode::Open, guards)
                .map_err(|e| e.to_string())?;
            let closed = max_temporal_component_bounded(&inst.graph, Strictness::Strict, ComponentMode::Closed, guards)
                .map_err(|e| e.to_string())?;
            ensure!(
                open.size == 2 * m + omega && closed.size == 2 * m + omega,
                "{f:?}: open {} closed {} expected {}",
                open.size,
                closed.size,
                2 * m + omega
            );
            checked += 1;
        }
    }
    let took = within(Duration::from_secs(600), start)?;
    Ok(format!("{checked} graphs up to isomorphism, 0 failures in {took:?}"))
}

fn distance_two_arcs() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e33a1);
    let count = 1000;
    let mut pairs = 0;
    for i in 0..count {
        let shape = GraphShape::new(rng.gen_range(3..=7), 12, 5);
        let g = random_graph(&mut rng, shape);
        let c = closure(&g, Strictness::NonStrict);
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                if footprint_distance(&g, a, b) == Some(2) {
                    pairs += 1;
                    ensure!(c.has_arc(a, b) || c.has_arc(b, a), "#{i}: {a},{b} unrelated in {g:?}");
                }
            }
        }
    }
    Ok(format!("{count} graphs, {pairs} distance-2 pairs, 0 failures"))
}

fn happy_spanner_bound(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let target = 250;
    let mut checked = 0;
    while checked < target {
        let n = rng.gen_range(3..=7);
        let density = rng.gen_range(0.5..1.0);
        let f = random_static(rng, n, density);
        let max_time = rng.gen_range(n as Time..=2 * n as Time + 2);
        let g = random_happy_on(rng, &f, max_time);
        if !is_temporally_connected(&g, Strictness::Strict) {
            continue;
        }
        let r = min_spanner(&g, Strictness::Strict, SpannerMode::Edges).map_err(|e| e.to_string())?;
        ensure!(r.size + 4 >= 2 * n, "happy {g:?} has a {}-edge spanner", r.size);
        checked += 1;
    }
    Ok(checked)
}

/// Whether `pairs` connect all of `0..n`.
fn spans(n: usize, pairs: impl Iterator<Item = (Vertex, Vertex)>) -> bool {
    let mut reach = [0u32; 8];
    for v in 0..n {
        reach[v] = 1 << v;
    }
    for (a, b) in pairs {
        let joined = reach[a] | reach[b];
        for v in 0..n {
            if joined >> v & 1 == 1 {
                reach[v] = joined;
            }
        }
    }
    reach[0].count_ones() as usize == n
}

/// Automorphisms of `f`, as permutations of its edge indices.
fn edge_automorphisms(f: &StaticGraph, edges: &[(Vertex, Vertex)]) -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    permutations(f.n(), &mut Vec::new(), &mut perms);
    perms
        .into_iter()
        .filter(|p| edges.iter().all(|&(a, b)| f.has_edge(p[a], p[b])))
        .map(|p| {
            edges
                .iter()
                .map(|&(a, b)| edges.iter().position(|&e| e == (p[a].min(p[b]), p[a].max(p[b]))).unwrap())
                .collect()
        })
        .collect()
}

fn spanning_trees(n: usize, edges: &[(Vertex, Vertex)]) -> Vec<Vec<usize>> {
    let mut trees = Vec::new();
    let k = n - 1;
    let mut pick = Vec::new();
    fn rec(start: usize, k: usize, n: usize, edges: &[(Vertex, Vertex)], pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pick.len() == k {
            let f = StaticGraph::undirected(n, pick.iter().map(|&i| edges[i])).unwrap();
            if f.is_connected() {
                out.push(pick.clone());
            }
            return;
        }
        for i in start..edges.len() {
            pick.push(i);
            rec(i + 1, k, n, edges, pick, out);
            pick.pop();
        }
    }
    rec(0, k, n, edges, &mut pick, &mut trees);
    trees
}

/// Simple TC graphs on at most five vertices, one labeling per orbit of
/// the first label class under the footprint's automorphisms.
fn spanning_tree_criterion() -> Result<(u64, u64), String> {
    let mut tc_graphs = 0u64;
    let mut without_connected_snapshot = 0u64;
    for n in 2..=5 {
        for f in connected_graphs(n, 1..=10) {
            let edges: Vec<(Vertex, Vertex)> = f.edges().collect();
            let m = edges.len();
            let autos = edge_automorphisms(&f, &edges);
            let trees = spanning_trees(n, &edges);
            // Tree verdicts depend only on the order pattern of the tree's
            // labels: ranks 1..=4 packed in three bits each.
            let mut memo: Vec<Vec<u8>> = vec![vec![0; 1 << (3 * (n - 1))]; trees.len()];
            let mut labels = vec![0 as Time; m];
            let mut contacts: Vec<Contact> = Vec::with_capacity(m);
            for first in 1u32..1 << m {
                let image = |map: &Vec<usize>| (0..m).filter(|&i| first >> i & 1 == 1).fold(0u32, |acc, i| acc | 1 << map[i]);
                if autos.iter().any(|map| image(map) < first) {
                    continue;
                }
                let rest: Vec<usize> = (0..m).filter(|&i| first >> i & 1 == 0).collect();
                let mut parts = OrderedPartitions::new(rest.len());
                while let Some(blocks) = parts.advance() {
                    for i in 0..m {
                        if first >> i & 1 == 1 {
                            labels[i] = 1;
                        }
                    }
                    for (&i, &b) in rest.iter().zip(blocks) {
                        labels[i] = b as Time + 2;
                    }
                    contacts.clear();
                    contacts.extend(edges.iter().zip(&labels).map(|(&(u, v), &t)| Contact { u, v, time: t }));
                    if !contacts_temporally_connected(n, contacts.iter().copied(), Strictness::NonStrict) {
                        continue;
                    }
                    tc_graphs += 1;
                    let classes = 1 + blocks.iter().max().map_or(0, |&b| b + 1);
                    let connected_snapshot = (1..=classes as Time).any(|t| {
                        spans(n, (0..m).filter(|&i| labels[i] == t).map(|i| edges[i]))
                    });
                    let tree_spanner = trees.iter().enumerate().any(|(ti, tree)| {
                        let k = tree.len();
                        let mut ts = [0 as Time; 4];
                        for (t, &i) in ts.iter_mut().zip(tree) {
                            *t = labels[i];
                        }
                        let mut sorted = ts;
                        sorted[..k].sort_unstable();
                        let key = ts[..k].iter().fold(0usize, |acc, &t| {
                            let below = sorted[..k].iter().enumerate().filter(|&(j, &x)| x < t && (j == 0 || sorted[j - 1] != x)).count();
                            acc << 3 | (below + 1)
                        });
                        if memo[ti][key] == 0 {
                            let c = tree.iter().zip(ts[..k].iter()).map(|(&i, &t)| Contact { u: edges[i].0, v: edges[i].1, time: t });
                            memo[ti][key] = 1 + u8::from(contacts_temporally_connected(n, c, Strictness::NonStrict));
                        }
                        memo[ti][key] == 2
                    });
                    ensure!(
                        tree_spanner == connected_snapshot,
                        "labels {labels:?} on {edges:?}: tree spanner {tree_spanner}, connected snapshot {connected_snapshot}"
                    );
                    without_connected_snapshot += u64::from(!connected_snapshot);
                }
            }
        }
    }
    Ok((tc_graphs, without_connected_snapshot))
}

fn structural_claims() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x55a2);
    let happy = happy_spanner_bound(&mut rng)?;
    let (tc, hard) = spanning_tree_criterion()?;
    Ok(format!(
        "{happy} happy TC graphs meet 2n-4; {tc} simple TC labelings ({hard} without a connected snapshot) obey the tree criterion, in {:?}",
        start.elapsed()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("closure golden tests", closure_golden),
        ("spanner numbers", spanner_numbers),
        ("separation suite", separations),
        ("transformation properties", transformation_properties),
        ("properness collapse", properness_collapse),
        ("reduction soundness", reduction_soundness),
        ("distance-two arcs", distance_two_arcs),
        ("spanner structure", structural_claims),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let label = format!("criterion {} ({name})", i + 1);
        if !filter.is_empty() && !filter.iter().any(|f| label.contains(f.as_str())) {
            continue;
        }
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {label}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {label}: {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
