//! JSON and DOT formats.
//!
//! Graphs use `{"n", "names"?, "edges": [{"u", "v", "labels"?}]}` with edges
//! sorted by `(u, v)`; static graphs omit `labels`. Closures use
//! `{"arcs": [[u, v], ...], "n"}`. All writers emit sorted keys and are
//! deterministic.

use std::fmt::Write as _;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::model::{validate, EdgeSlot, SettingClass, StaticGraph, TemporalGraph, Time, Vertex};
use crate::reachability::ReachabilityGraph;
use crate::transforms::TransformReport;

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<Time>>,
    u: Vertex,
    v: Vertex,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    #[serde(default, skip_serializing_if = "is_false")]
    directed: bool,
    edges: Vec<EdgeDoc>,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

impl Serialize for TemporalGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphDoc {
            directed: false,
            edges: self
                .edges()
                .iter()
                .map(|e| EdgeDoc {
                    labels: Some(e.labels.clone()),
                    u: e.u,
                    v: e.v,
                })
                .collect(),
            n: self.n(),
            names: self.names().map(<[String]>::to_vec),
        }
        .serialize(s)
    }
}

impl TryFrom<GraphDoc> for TemporalGraph {
    type Error = Error;

    fn try_from(doc: GraphDoc) -> Result<Self> {
        if doc.directed {
            return Err(Error::InvalidInput("temporal graphs are undirected".into()));
        }
        let mut edges = Vec::with_capacity(doc.edges.len());
        for e in doc.edges {
            let labels = e
                .labels
                .ok_or_else(|| Error::InvalidInput(format!("edge ({},{}) has no labels", e.u, e.v)))?;
            edges.push(EdgeSlot::new(e.u, e.v, labels));
        }
        let violations = validate(doc.n, doc.names.as_deref(), &edges);
        if !violations.is_empty() {
            return Err(Error::InvalidGraph(violations));
        }
        let g = TemporalGraph::new(doc.n, edges)?;
        match doc.names {
            Some(names) => g.with_names(names),
            None => Ok(g),
        }
    }
}

impl<'de> Deserialize<'de> for TemporalGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        TemporalGraph::try_from(GraphDoc::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for StaticGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphDoc {
            directed: self.is_directed(),
            edges: self.edges().map(|(u, v)| EdgeDoc { labels: None, u, v }).collect(),
            n: self.n(),
            names: None,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StaticGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = GraphDoc::deserialize(d)?;
        if doc.edges.iter().any(|e| e.labels.is_some()) {
            return Err(D::Error::custom("static graph edges carry no labels"));
        }
        let pairs = doc.edges.iter().map(|e| (e.u, e.v));
        let g = if doc.directed {
            StaticGraph::directed(doc.n, pairs)
        } else {
            StaticGraph::undirected(doc.n, pairs)
        };
        g.map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClosureDoc {
    arcs: Vec<[Vertex; 2]>,
    n: usize,
}

impl Serialize for ReachabilityGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClosureDoc {
            arcs: self.arcs().map(|(u, v)| [u, v]).collect(),
            n: self.n(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ReachabilityGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = ClosureDoc::deserialize(d)?;
        ReachabilityGraph::from_arcs(doc.n, doc.arcs.into_iter().map(|[u, v]| (u, v))).map_err(D::Error::custom)
    }
}

impl Serialize for TransformReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc<'a> {
            graph: &'a TemporalGraph,
            sigma: &'a [Vertex],
            stats: &'a crate::transforms::TransformStats,
            transform: crate::transforms::TransformKind,
        }
        Doc {
            graph: &self.graph,
            sigma: &self.sigma,
            stats: &self.stats,
            transform: self.transform,
        }
        .serialize(s)
    }
}

impl Serialize for SettingClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for SettingClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// Compact single-line JSON.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("in-memory serialization cannot fail")
}

/// Unwraps documents that embed a graph under a `"graph"` key (transform
/// reports, reduction instances).
fn unwrap_graph(mut value: Value) -> Value {
    match value.get_mut("graph") {
        Some(inner) => inner.take(),
        None => value,
    }
}

pub fn parse_temporal_graph(text: &str) -> Result<TemporalGraph> {
    let value = unwrap_graph(serde_json::from_str(text)?);
    let doc: GraphDoc = serde_json::from_value(value)?;
    TemporalGraph::try_from(doc)
}

pub fn parse_static_graph(text: &str) -> Result<StaticGraph> {
    let value = unwrap_graph(serde_json::from_str(text)?);
    Ok(serde_json::from_value(value)?)
}

pub fn parse_reachability_graph(text: &str) -> Result<ReachabilityGraph> {
    Ok(serde_json::from_str(text)?)
}

/// DOT rendering of a reachability graph. With `merge_mutual`, each
/// mutually reachable pair is drawn once with `dir=both`.
pub fn closure_to_dot(r: &ReachabilityGraph, names: Option<&[String]>, merge_mutual: bool) -> String {
    let label = |v: Vertex| match names {
        Some(ns) => format!("\"{}\"", ns[v].replace('"', "\\\"")),
        None => v.to_string(),
    };
    let mut out = String::from("digraph closure {\n");
    for v in 0..r.n() {
        writeln!(out, "  {};", label(v)).unwrap();
    }
    for (u, v) in r.arcs() {
        if merge_mutual && r.has_arc(v, u) {
            if u < v {
                writeln!(out, "  {} -> {} [dir=both];", label(u), label(v)).unwrap();
            }
        } else {
            writeln!(out, "  {} -> {};", label(u), label(v)).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_json_is_canonical() {
        let g = TemporalGraph::from_contacts(3, [(2, 1, 4), (0, 1, 3), (0, 1, 1)]).unwrap();
        assert_eq!(
            to_json(&g),
            r#"{"edges":[{"labels":[1,3],"u":0,"v":1},{"labels":[4],"u":1,"v":2}],"n":3}"#
        );
        assert_eq!(parse_temporal_graph(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn names_round_trip() {
        let g = TemporalGraph::from_contacts(2, [(0, 1, 1)])
            .unwrap()
            .with_names(vec!["a".into(), "b".into()])
            .unwrap();
        let text = to_json(&g);
        assert!(text.ends_with(r#""n":2,"names":["a","b"]}"#));
        assert_eq!(parse_temporal_graph(&text).unwrap(), g);
    }

    #[test]
    fn malformed_graphs_are_rejected() {
        let bad = r#"{"n":2,"edges":[{"u":0,"v":1,"labels":[3,1]}]}"#;
        match parse_temporal_graph(bad) {
            Err(Error::InvalidGraph(v)) => assert_eq!(v[0].kind.to_string(), "labels not ascending"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_temporal_graph(r#"{"n":2,"edges":[{"u":0,"v":1}]}"#).is_err());
        assert!(parse_temporal_graph("not json").is_err());
        assert!(parse_static_graph(r#"{"n":2,"edges":[{"u":0,"v":1,"labels":[1]}]}"#).is_err());
    }

    #[test]
    fn static_and_closure_formats() {
        let f = StaticGraph::cycle(4);
        let text = to_json(&f);
        assert_eq!(text, r#"{"edges":[{"u":0,"v":1},{"u":0,"v":3},{"u":1,"v":2},{"u":2,"v":3}],"n":4}"#);
        assert_eq!(parse_static_graph(&text).unwrap(), f);

        let r = ReachabilityGraph::from_arcs(3, [(2, 0), (0, 1), (1, 0)]).unwrap();
        assert_eq!(to_json(&r), r#"{"arcs":[[0,1],[1,0],[2,0]],"n":3}"#);
        assert_eq!(parse_reachability_graph(&to_json(&r)).unwrap(), r);
    }

    #[test]
    fn wrapped_graphs_are_unwrapped() {
        let g = TemporalGraph::from_contacts(2, [(0, 1, 1)]).unwrap();
        let report = crate::transforms::saturate(&g);
        let text = to_json(&report);
        assert!(text.starts_with(r#"{"graph":"#));
        assert!(text.contains(r#""transform":"saturate""#));
        assert_eq!(parse_temporal_graph(&text).unwrap(), g);
    }

    #[test]
    fn dot_output() {
        let r = ReachabilityGraph::from_arcs(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        let plain = closure_to_dot(&r, None, false);
        assert!(plain.contains("0 -> 1;") && plain.contains("1 -> 0;") && plain.contains("1 -> 2;"));
        let merged = closure_to_dot(&r, None, true);
        assert!(merged.contains("0 -> 1 [dir=both];"));
        assert!(!merged.contains("1 -> 0"));
        let names = ["a".to_string(), "b".to_string(), "c".to_string()];
        assert!(closure_to_dot(&r, Some(&names), true).contains("\"b\" -> \"c\";"));
    }
}
