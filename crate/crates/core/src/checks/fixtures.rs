//! The fixture graphs and tie-break files, embedded at compile time.

use crate::graph_lattice::{Graph, TieBreaks};
use crate::io::{parse_graph, parse_tie_breaks};

/// `(file name, contents)` of every embedded fixture.
pub const FILES: [(&str, &str); 10] = [
    ("GA.graph", include_str!("../../../../fixtures/GA.graph")),
    ("GO.graph", include_str!("../../../../fixtures/GO.graph")),
    ("GO.tiebreak", include_str!("../../../../fixtures/GO.tiebreak")),
    ("GD.graph", include_str!("../../../../fixtures/GD.graph")),
    ("GD.json", include_str!("../../../../fixtures/GD.json")),
    (
        "GD_edge_point.graph",
        include_str!("../../../../fixtures/GD_edge_point.graph"),
    ),
    ("twins.graph", include_str!("../../../../fixtures/twins.graph")),
    ("P4.graph", include_str!("../../../../fixtures/P4.graph")),
    ("C5.graph", include_str!("../../../../fixtures/C5.graph")),
    ("empty.graph", include_str!("../../../../fixtures/empty.graph")),
];

/// Contents of an embedded fixture file.
pub fn text(name: &str) -> &'static str {
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .unwrap_or_else(|| panic!("no fixture `{name}`"))
}

/// Parses an embedded fixture graph.
pub fn graph(name: &str) -> Graph {
    parse_graph(text(name)).expect("embedded fixtures parse")
}

/// The tie-breaks recorded for `GO`.
pub fn go_tie_breaks() -> TieBreaks {
    parse_tie_breaks(&graph("GO.graph"), text("GO.tiebreak")).expect("embedded tie-breaks parse")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses() {
        for (name, _) in FILES {
            if name.ends_with(".graph") || name.ends_with(".json") {
                graph(name);
            }
        }
        assert_eq!(graph("GD.json"), graph("GD.graph"));
        go_tie_breaks();
    }
}
