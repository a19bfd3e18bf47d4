//! Orthogonal complements, closures, admissible sets and the lattices they form.

use super::graph::{Graph, Vertex, VertexSet};
use serde::Serialize;

/// `Y^⊥`: vertices adjacent or equal to every vertex of `Y`; `∅^⊥ = X`.
pub fn orthogonal_complement(g: &Graph, y: VertexSet) -> VertexSet {
    y.iter().fold(g.all(), |acc, v| acc.intersection(g.star(v)))
}

/// `cl(Y) = Y^⊥⊥`.
pub fn closure(g: &Graph, y: VertexSet) -> VertexSet {
    orthogonal_complement(g, orthogonal_complement(g, y))
}

/// `𝔞(Y) = ⋂_{y∈Y} (y^⊥ \ y)^⊥`, with `𝔞(∅) = X`.
pub fn admissible_set(g: &Graph, y: VertexSet) -> VertexSet {
    y.iter().fold(g.all(), |acc, v| {
        acc.intersection(orthogonal_complement(g, g.neighbours(v)))
    })
}

/// `𝔞(x)` for a single vertex.
pub fn admissible_of(g: &Graph, x: Vertex) -> VertexSet {
    orthogonal_complement(g, g.neighbours(x))
}

/// `cl_𝔞(Y)`: the smallest admissible set containing `Y`.
pub fn admissible_closure(g: &Graph, y: VertexSet) -> VertexSet {
    (0..g.n())
        .map(|x| admissible_of(g, x))
        .filter(|a| y.is_subset(*a))
        .fold(g.all(), |acc, a| acc.intersection(a))
}

/// Which of the two lattices to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LatticeKind {
    /// Closed sets `𝓛 = {U^⊥}`.
    Closed,
    /// Admissible sets `𝓚 = {𝔞(U)}`.
    Admissible,
}

/// An intersection-closed family of vertex sets with its Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSetLattice {
    /// Which lattice this is.
    pub kind: LatticeKind,
    /// Elements sorted by cardinality, then by bitmask.
    pub elements: Vec<VertexSet>,
    /// Covering pairs `(i, j)`: `elements[i] ⊂ elements[j]` with nothing between.
    pub hasse: Vec<(usize, usize)>,
}

impl VertexSetLattice {
    /// The top element `X`.
    pub fn top(&self) -> VertexSet {
        *self.elements.last().expect("lattice always contains X")
    }

    /// The bottom element (intersection of everything).
    pub fn bottom(&self) -> VertexSet {
        self.elements[0]
    }

    /// Membership test.
    pub fn contains(&self, s: VertexSet) -> bool {
        self.elements
            .binary_search_by(|e| sort_key(*e).cmp(&sort_key(s)))
            .is_ok()
    }
}

fn sort_key(s: VertexSet) -> (usize, u64) {
    (s.len(), s.bits())
}

/// Closes a family under pairwise intersection.
pub fn intersection_closure(generators: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = Vec::new();
    for &s in generators {
        if !out.contains(&s) {
            out.push(s);
        }
    }
    let mut i = 0;
    while i < out.len() {
        for j in 0..i {
            let t = out[i].intersection(out[j]);
            if !out.contains(&t) {
                out.push(t);
            }
        }
        i += 1;
    }
    out.sort_by_key(|s| sort_key(*s));
    out
}

/// Enumerates `𝓛` or `𝓚` as the intersection closure of the stars (resp.
/// the single-vertex admissible sets) together with `X`.
pub fn enumerate_lattice(g: &Graph, kind: LatticeKind) -> VertexSetLattice {
    let mut gens = vec![g.all()];
    for x in 0..g.n() {
        gens.push(match kind {
            LatticeKind::Closed => g.star(x),
            LatticeKind::Admissible => admissible_of(g, x),
        });
    }
    let elements = intersection_closure(&gens);
    let hasse = hasse_edges(&elements);
    VertexSetLattice { kind, elements, hasse }
}

/// Covering relation of a family ordered by containment.
pub fn hasse_edges(elements: &[VertexSet]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &a) in elements.iter().enumerate() {
        for (j, &b) in elements.iter().enumerate() {
            if i != j && a.is_subset(b) && a != b {
                let between = elements
                    .iter()
                    .any(|&c| c != a && c != b && a.is_subset(c) && c.is_subset(b));
                if !between {
                    out.push((i, j));
                }
            }
        }
    }
    out
}

/// `𝓚_X`: the distinct sets `𝔞(x)`, in order of first occurrence.
pub fn admissible_singletons(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for x in 0..g.n() {
        let a = admissible_of(g, x);
        if !out.contains(&a) {
            out.push(a);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::new(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap()
    }

    #[test]
    fn path_values() {
        let g = p4();
        assert_eq!(closure(&g, g.set("a").unwrap()), g.set("a b").unwrap());
        assert_eq!(admissible_set(&g, g.set("a").unwrap()), g.set("a b c").unwrap());
        assert_eq!(admissible_set(&g, g.set("b").unwrap()), g.set("b").unwrap());
        assert_eq!(admissible_set(&g, g.set("a d").unwrap()), g.set("b c").unwrap());
        assert_eq!(admissible_closure(&g, g.set("a d").unwrap()), g.all());
    }

    #[test]
    fn empty_conventions() {
        let g = p4();
        assert_eq!(orthogonal_complement(&g, VertexSet::EMPTY), g.all());
        assert_eq!(admissible_set(&g, VertexSet::EMPTY), g.all());
        let iso = Graph::new(&["x", "y"], &[]).unwrap();
        assert_eq!(admissible_of(&iso, 0), iso.all());
    }

    #[test]
    fn lattice_of_complete_graph() {
        let g = Graph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let k = enumerate_lattice(&g, LatticeKind::Admissible);
        let mut brute: Vec<VertexSet> = g.all().subsets().map(|y| admissible_set(&g, y)).collect();
        brute.sort_by_key(|s| (s.len(), s.bits()));
        brute.dedup();
        assert_eq!(k.elements, brute);
        assert_eq!(k.top(), g.all());
    }

    #[test]
    fn hasse_of_chain() {
        let sets = [
            VertexSet::from_bits(1),
            VertexSet::from_bits(3),
            VertexSet::from_bits(7),
        ];
        assert_eq!(hasse_edges(&sets), vec![(0, 1), (1, 2)]);
    }
}
