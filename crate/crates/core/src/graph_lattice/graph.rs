//! Finite simple graphs with an ordered vertex set and bitset vertex subsets.

use crate::error::{Error, Result};
use std::fmt;

/// Index of a vertex in the graph's fixed input order.
pub type Vertex = usize;

/// Maximum number of vertices supported by [`VertexSet`].
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertex set, stored as a bitset indexed by input order.
///
/// Iteration always follows the input vertex order, so every set is
/// canonically sorted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Builds a set from its raw bitmask.
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// Raw bitmask.
    pub fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    /// The singleton `{v}`.
    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << v)
    }

    /// Builds a set from an iterator of vertices.
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(it: I) -> Self {
        it.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    /// Membership test.
    pub fn contains(self, v: Vertex) -> bool {
        self.0 >> v & 1 == 1
    }

    /// Copy of the set with `v` added.
    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    /// Copy of the set with `v` removed.
    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    /// Adds `v` in place.
    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << v;
    }

    /// Set union.
    pub fn union(self, o: Self) -> Self {
        VertexSet(self.0 | o.0)
    }

    /// Set intersection.
    pub fn intersection(self, o: Self) -> Self {
        VertexSet(self.0 & o.0)
    }

    /// Set difference `self \ o`.
    pub fn difference(self, o: Self) -> Self {
        VertexSet(self.0 & !o.0)
    }

    /// Subset test `self ⊆ o`.
    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    /// True when the two sets share a vertex.
    pub fn meets(self, o: Self) -> bool {
        self.0 & o.0 != 0
    }

    /// True for the empty set.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Cardinality.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest vertex in input order.
    pub fn first(self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Vertices in input order.
    pub fn iter(self) -> impl Iterator<Item = Vertex> + Clone {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Vertices collected into a vector.
    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut cur: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full {
                None
            } else {
                Some((c.wrapping_sub(full)) & full)
            };
            Some(VertexSet(c))
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// A finite simple graph whose vertex order is fixed at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({:?}; ", self.names)?;
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|&(u, v)| format!("{}-{}", self.names[u], self.names[v]))
            .collect();
        write!(f, "{})", edges.join(" "))
    }
}

impl Graph {
    /// Builds a graph from vertex names and edges given by name.
    ///
    /// Rejects duplicate names, loops, unknown endpoints and more than
    /// [`MAX_VERTICES`] vertices. Repeated edges are rejected as multi-edges.
    pub fn new<S: AsRef<str>>(names: &[S], edges: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut g = Graph::empty_on(names)?;
        for (a, b) in edges {
            let u = g.vertex(a.as_ref())?;
            let v = g.vertex(b.as_ref())?;
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph on the given names with no edges.
    pub fn empty_on(names: Vec<String>) -> Result<Self> {
        if names.len() > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{} vertices exceeds the limit of {MAX_VERTICES}",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains(char::is_whitespace) {
                return Err(Error::InvalidGraph(format!("bad vertex name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{n}`")));
            }
        }
        let n = names.len();
        Ok(Graph {
            names,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Graph on vertices named `0..n` (as strings) with edges given by index.
    pub fn from_indices(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let names = (0..n).map(|i| format!("v{i}")).collect();
        let mut g = Graph::empty_on(names)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph on `n` vertices whose edges are selected by `mask` over the
    /// lexicographic list of pairs `(i, j)`, `i < j`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::empty_on((0..n).map(|i| format!("v{i}")).collect()).expect("small graph");
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
                bit += 1;
            }
        }
        g
    }

    fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at `{}`", self.names[u])));
        }
        if self.adj[u].contains(v) {
            return Err(Error::InvalidGraph(format!(
                "repeated edge `{}`-`{}`",
                self.names[u], self.names[v]
            )));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.names.len()
    }

    /// The full vertex set X.
    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Vertex names in input order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Name of vertex `v`.
    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    /// Looks up a vertex by name.
    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Parses a whitespace or comma separated list of vertex names.
    pub fn set(&self, names: &str) -> Result<VertexSet> {
        names
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| self.vertex(s))
            .collect()
    }

    /// Neighbours of `v` (excluding `v`).
    pub fn neighbours(&self, v: Vertex) -> VertexSet {
        self.adj[v]
    }

    /// Star `v^⊥`: `v` together with its neighbours.
    pub fn star(&self, v: Vertex) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Adjacency test.
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    /// True when the generators `u` and `v` commute (equal or adjacent).
    pub fn commute(&self, u: Vertex, v: Vertex) -> bool {
        u == v || self.adj[u].contains(v)
    }

    /// Edge list with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Formats a vertex set as `{a,b,c}`.
    pub fn fmt_set(&self, s: VertexSet) -> String {
        let parts: Vec<&str> = s.iter().map(|v| self.name(v)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Connected components of the induced subgraph on `within`, each
    /// listed in input order and the list ordered by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(s) = rest.first() {
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.adj[v]);
                }
                next = next.intersection(within).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            out.push(comp);
            rest = rest.difference(comp);
        }
        out
    }

    /// Connected components of `Γ \ removed`.
    pub fn components(&self, removed: VertexSet) -> Vec<VertexSet> {
        self.components_within(self.all().difference(removed))
    }

    /// True when the graph is connected (the empty graph counts as connected).
    pub fn is_connected(&self) -> bool {
        self.components(VertexSet::EMPTY).len() <= 1
    }

    /// Induced subgraph on `s`, with vertices renumbered in input order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let vs = s.to_vec();
        let names = vs.iter().map(|&v| self.names[v].clone()).collect();
        let mut g = Graph::empty_on(names).expect("subgraph of a valid graph");
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate() {
                if self.adj[u].contains(v) {
                    g.adj[i].insert(j);
                }
            }
        }
        g
    }

    /// Disjoint union, with the vertices of `other` appended after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        let mut g = Graph::empty_on(names)?;
        let k = self.n();
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + k, v + k)?;
        }
        Ok(g)
    }

    /// Graph with the same vertices plus the given extra edges (by index);
    /// edges already present are ignored.
    pub fn with_extra_edges(&self, extra: &[(Vertex, Vertex)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in extra {
            if u != v {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_basics() {
        let s = VertexSet::from_vertices([0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.subsets().count(), 8);
        assert!(VertexSet::singleton(3).is_subset(s));
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(Graph::new(&["a", "a"], &[]).is_err());
        assert!(Graph::new(&["a"], &[("a", "a")]).is_err());
        assert!(Graph::new(&["a", "b"], &[("a", "b"), ("b", "a")]).is_err());
        assert!(matches!(
            Graph::new(&["a"], &[("a", "z")]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn components_of_path() {
        let g = Graph::new(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let comps = g.components(VertexSet::singleton(1));
        assert_eq!(comps, vec![VertexSet::singleton(0), VertexSet::from_vertices([2, 3])]);
        assert!(g.is_connected());
    }

    #[test]
    fn edge_mask_roundtrip() {
        let g = Graph::from_edge_mask(4, 0b101001);
        assert_eq!(g.edges().len(), 3);
    }
}
