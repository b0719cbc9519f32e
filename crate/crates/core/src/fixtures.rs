//! Reference graphs with their reachability graphs written out by hand.
//!
//! The expected closures are stored, not recomputed, so that a regression
//! in the closure engine shows up as a mismatch here.

use crate::error::{Error, Result};
use crate::model::{Strictness, TemporalGraph, Time, Vertex};
use crate::reachability::ReachabilityGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: TemporalGraph,
    pub strict: ReachabilityGraph,
    pub nonstrict: ReachabilityGraph,
    pub note: &'static str,
}

impl Fixture {
    pub fn expected(&self, s: Strictness) -> &ReachabilityGraph {
        match s {
            Strictness::Strict => &self.strict,
            Strictness::NonStrict => &self.nonstrict,
        }
    }
}

type Arcs = &'static [(Vertex, Vertex)];

enum Closure {
    Complete,
    Arcs(Arcs),
}
use Closure::{Arcs as Listed, Complete};

struct Entry {
    name: &'static str,
    names: &'static [&'static str],
    contacts: &'static [(Vertex, Vertex, Time)],
    strict: Closure,
    nonstrict: Closure,
    note: &'static str,
}

const ABCD: &[&str] = &["a", "b", "c", "d"];

const ENTRIES: &[Entry] = &[
    Entry {
        name: "G1",
        names: ABCD,
        contacts: &[(0, 1, 1), (0, 1, 3), (0, 3, 2), (0, 3, 3), (1, 2, 1), (1, 2, 2), (2, 3, 1), (2, 3, 3)],
        strict: Complete,
        nonstrict: Complete,
        note: "four-cycle with two labels per edge; the host graph of the spanner examples",
    },
    Entry {
        name: "G2",
        names: ABCD,
        contacts: &[(0, 1, 3), (0, 3, 3), (2, 3, 3)],
        strict: Listed(&[(0, 1), (0, 3), (1, 0), (2, 3), (3, 0), (3, 2)]),
        nonstrict: Complete,
        note: "single-snapshot path b-a-d-c; a non-strict spanner of G1 that is not a strict one",
    },
    Entry {
        name: "G3",
        names: ABCD,
        contacts: &[(0, 1, 1), (0, 3, 2), (1, 2, 2), (2, 3, 1)],
        strict: Complete,
        nonstrict: Complete,
        note: "happy four-cycle; a minimum-contact strict spanner of G1",
    },
    Entry {
        name: "G4",
        names: ABCD,
        contacts: &[(0, 1, 1), (0, 1, 3), (1, 2, 2), (2, 3, 1), (2, 3, 3)],
        strict: Complete,
        nonstrict: Complete,
        note: "path a-b-c-d with labels 1,3 / 2 / 1,3; a minimum-edge strict spanner of G1",
    },
    Entry {
        name: "G5",
        names: ABCD,
        contacts: &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)],
        strict: Complete,
        nonstrict: Complete,
        note: "K4 at a single time; under strict journeys no edge can be dropped",
    },
    Entry {
        name: "L2",
        names: ABCD,
        contacts: &[(0, 1, 1), (1, 2, 1), (1, 2, 2), (2, 3, 2)],
        strict: Listed(&[(0, 1), (0, 2), (1, 0), (1, 2), (1, 3), (2, 1), (2, 3), (3, 2)]),
        nonstrict: Listed(&[
            (0, 1), (0, 2), (0, 3), (1, 0), (1, 2), (1, 3), (2, 0), (2, 1), (2, 3), (3, 1), (3, 2),
        ]),
        note: "strict closure not realizable by any simple strict graph",
    },
    Entry {
        name: "L3",
        names: &["a", "b", "c"],
        contacts: &[(0, 1, 1), (1, 2, 1)],
        strict: Listed(&[(0, 1), (1, 0), (1, 2), (2, 1)]),
        nonstrict: Complete,
        note: "path at one time; its strict closure is not realizable under non-strict journeys",
    },
    Entry {
        name: "L5",
        names: ABCD,
        contacts: &[(0, 1, 2), (1, 2, 1), (1, 2, 3), (2, 3, 2)],
        strict: Listed(&[(0, 1), (0, 2), (1, 0), (1, 2), (1, 3), (2, 0), (2, 1), (2, 3), (3, 1), (3, 2)]),
        nonstrict: Listed(&[(0, 1), (0, 2), (1, 0), (1, 2), (1, 3), (2, 0), (2, 1), (2, 3), (3, 1), (3, 2)]),
        note: "diamond closure with a and d unrelated; not realizable by a simple non-strict graph",
    },
    Entry {
        name: "L7",
        names: &["a", "b", "c", "d", "e"],
        contacts: &[(0, 2, 1), (0, 3, 1), (1, 2, 2), (2, 3, 3), (3, 4, 2)],
        strict: Listed(&[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 0), (2, 1), (2, 3), (3, 0), (3, 2), (3, 4),
            (4, 2), (4, 3),
        ]),
        nonstrict: Listed(&[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 0), (2, 1), (2, 3), (2, 4), (3, 0), (3, 1),
            (3, 2), (3, 4), (4, 2), (4, 3),
        ]),
        note: "non-strict closure in which b reaches only c and d; not realizable by a happy graph",
    },
    Entry {
        name: "Fig3",
        names: &["a", "b", "c", "e", "f"],
        contacts: &[(0, 1, 1), (0, 1, 3), (1, 2, 1), (1, 2, 2), (2, 3, 1), (2, 4, 3), (2, 4, 4), (3, 4, 2)],
        strict: Listed(&[
            (0, 1), (0, 2), (0, 4), (1, 0), (1, 2), (1, 4), (2, 0), (2, 1), (2, 3), (2, 4), (3, 0), (3, 1),
            (3, 2), (3, 4), (4, 2), (4, 3),
        ]),
        nonstrict: Listed(&[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 0), (1, 2), (1, 3), (1, 4), (2, 0), (2, 1), (2, 3), (2, 4),
            (3, 0), (3, 1), (3, 2), (3, 4), (4, 2), (4, 3),
        ]),
        note: "five-vertex input used to illustrate dilation",
    },
    Entry {
        name: "Fig4",
        names: &["u", "v", "w"],
        contacts: &[(0, 1, 1), (0, 1, 2), (1, 2, 1)],
        strict: Listed(&[(0, 1), (1, 0), (1, 2), (2, 0), (2, 1)]),
        nonstrict: Complete,
        note: "three-vertex input used to illustrate the semaphore transformation",
    },
];

fn build(entry: &Entry) -> Fixture {
    let graph = TemporalGraph::from_contacts(entry.names.len(), entry.contacts.iter().copied())
        .and_then(|g| g.with_names(entry.names.iter().map(|s| s.to_string()).collect()))
        .expect("fixture payloads are valid");
    let closure = |c: &Closure| match c {
        Complete => ReachabilityGraph::complete(graph.n()),
        Listed(arcs) => ReachabilityGraph::from_arcs(graph.n(), arcs.iter().copied()).expect("fixture arcs are valid"),
    };
    Fixture {
        name: entry.name,
        strict: closure(&entry.strict),
        nonstrict: closure(&entry.nonstrict),
        graph,
        note: entry.note,
    }
}

pub fn get_fixture(name: &str) -> Result<Fixture> {
    ENTRIES
        .iter()
        .find(|s| s.name.eq_ignore_ascii_case(name))
        .map(build)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

pub fn list_fixtures() -> Vec<&'static str> {
    ENTRIES.iter().map(|s| s.name).collect()
}
