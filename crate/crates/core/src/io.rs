//! Reading graphs and tie-break files, and DOT export.

use crate::error::{Error, Result};
use crate::graph_lattice::{CompressionGraph, Graph, TieBreaks, VertexSetLattice};
use serde::Deserialize;

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

#[derive(Deserialize)]
struct JsonGraph {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<(String, String)>,
}

/// Parses the line format: a `vertices: a b c` line and `edge: a b` lines.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_graph_text(s: &str) -> Result<Graph> {
    let mut vertices: Option<Vec<String>> = None;
    let mut edges: Vec<(String, String)> = Vec::new();
    for (i, raw) in s.lines().enumerate() {
        let line = raw.trim();
        let no = i + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| perr(no, format!("expected `key: value`, got `{line}`")))?;
        match key.trim() {
            "vertices" => {
                if vertices.is_some() {
                    return Err(perr(no, "duplicate `vertices:` line"));
                }
                vertices = Some(rest.split_whitespace().map(str::to_string).collect());
            }
            "edge" => {
                let ends: Vec<&str> = rest.split_whitespace().collect();
                let [a, b] = ends[..] else {
                    return Err(perr(
                        no,
                        format!("an edge needs exactly two endpoints, got {}", ends.len()),
                    ));
                };
                let known = vertices
                    .as_ref()
                    .ok_or_else(|| perr(no, "`edge:` before `vertices:`"))?;
                for e in [a, b] {
                    if !known.iter().any(|v| v == e) {
                        return Err(perr(no, format!("unknown vertex `{e}`")));
                    }
                }
                edges.push((a.to_string(), b.to_string()));
            }
            other => return Err(perr(no, format!("unknown key `{other}`"))),
        }
    }
    let vertices = vertices.unwrap_or_default();
    Graph::new(&vertices, &edges)
}

/// Parses the JSON form `{"vertices": [...], "edges": [[u, v], ...]}`.
pub fn parse_graph_json(s: &str) -> Result<Graph> {
    let j: JsonGraph = serde_json::from_str(s).map_err(|e| perr(e.line(), e.to_string()))?;
    Graph::new(&j.vertices, &j.edges)
}

/// Parses either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_graph(s: &str) -> Result<Graph> {
    if s.trim_start().starts_with('{') {
        parse_graph_json(s)
    } else {
        parse_graph_text(s)
    }
}

/// Serializes a graph in the line format.
pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("vertices: {}\n", g.names().join(" "));
    for (u, v) in g.edges() {
        out.push_str(&format!("edge: {} {}\n", g.name(u), g.name(v)));
    }
    out
}

/// Parses a tie-break file: an optional `b-order: x y ...` line giving the
/// priority of classes within a B-set, and `class: x y ...` lines giving
/// the ascending order inside a class.
pub fn parse_tie_breaks(g: &Graph, s: &str) -> Result<TieBreaks> {
    let mut tie = TieBreaks::default();
    for (i, raw) in s.lines().enumerate() {
        let line = raw.trim();
        let no = i + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| perr(no, format!("expected `key: value`, got `{line}`")))?;
        let vs = rest
            .split_whitespace()
            .map(|t| g.vertex(t).map_err(|_| perr(no, format!("unknown vertex `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        match key.trim() {
            "b-order" => tie.b_priority.extend(vs),
            "class" => tie.class_orders.push(vs),
            other => return Err(perr(no, format!("unknown key `{other}`"))),
        }
    }
    Ok(tie)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT description of `Γ`.
pub fn graph_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {};\n", quote(g.name(v))));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {} -- {};\n", quote(g.name(u)), quote(g.name(v))));
    }
    out.push_str("}\n");
    out
}

/// DOT description of the compression graph, labels as node attributes.
pub fn compression_dot(g: &Graph, c: &CompressionGraph) -> String {
    let mut out = String::from("graph Gcomp {\n");
    for (i, cls) in c.classes.iter().enumerate() {
        out.push_str(&format!(
            "  n{i} [label={}, class={}];\n",
            quote(&c.label_text(i)),
            quote(&g.fmt_set(*cls))
        ));
    }
    for &(i, j) in &c.edges {
        out.push_str(&format!("  n{i} -- n{j};\n"));
    }
    out.push_str("}\n");
    out
}

/// DOT description of a lattice's Hasse diagram, edges pointing upwards.
pub fn lattice_dot(g: &Graph, l: &VertexSetLattice) -> String {
    let mut out = String::from("digraph Lattice {\n  rankdir=BT;\n");
    for (i, e) in l.elements.iter().enumerate() {
        out.push_str(&format!("  n{i} [label={}];\n", quote(&g.fmt_set(*e))));
    }
    for &(i, j) in &l.hasse {
        out.push_str(&format!("  n{i} -> n{j};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_agree() {
        let t = parse_graph("# path\nvertices: a b c\nedge: a b\n\nedge: b c\n").unwrap();
        let j = parse_graph(r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}"#).unwrap();
        assert_eq!(t.edges(), j.edges());
        assert_eq!(parse_graph(&graph_to_text(&t)).unwrap().edges(), t.edges());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_graph("vertices: a b\nedge: a\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_graph("vertices: a b\n\nedge: a z\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse_graph("nodes: a\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn empty_file_is_the_empty_graph() {
        assert_eq!(parse_graph("").unwrap().n(), 0);
    }

    #[test]
    fn tie_breaks() {
        let g = parse_graph("vertices: a b c\n").unwrap();
        let t = parse_tie_breaks(&g, "b-order: c a\nclass: b a\n").unwrap();
        assert_eq!(t.b_priority, vec![2, 0]);
        assert_eq!(t.class_orders, vec![vec![1, 0]]);
        assert!(parse_tie_breaks(&g, "class: q\n").is_err());
    }
}
