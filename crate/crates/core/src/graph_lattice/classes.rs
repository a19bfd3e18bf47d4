//! Vertex classes, heights, the total order, compression, domination,
//! balancedness and the normal closure operators.

use super::graph::{Graph, Vertex, VertexSet};
use super::lattice::{admissible_of, closure};
use serde::Serialize;

/// Type of a vertex class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassTag {
    /// A class with one element.
    Singleton,
    /// Members share the star `x^⊥`.
    Perp,
    /// Members share the punctured star `x^⊥ \ x`.
    Diamond,
}

/// Partition of the vertices into classes `[x]` with tags and heights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClassification {
    /// Classes ordered by least member.
    pub classes: Vec<VertexSet>,
    /// Tag of each class.
    pub tags: Vec<ClassTag>,
    /// Height `h` of each class (index of the B-set containing `𝔞(x)`).
    pub heights: Vec<usize>,
    /// `B_0, B_1, …`: each a list of admissible sets `𝔞(x)`, ordered by least member.
    pub b_sets: Vec<Vec<VertexSet>>,
    class_of: Vec<usize>,
}

impl VertexClassification {
    /// Index of the class containing `v`.
    pub fn class_index(&self, v: Vertex) -> usize {
        self.class_of[v]
    }

    /// The class `[v]`.
    pub fn class_of(&self, v: Vertex) -> VertexSet {
        self.classes[self.class_of[v]]
    }

    /// Height of `v`.
    pub fn height(&self, v: Vertex) -> usize {
        self.heights[self.class_of[v]]
    }
}

/// `[x]_⊥`: vertices with the same star as `x`.
pub fn perp_class(g: &Graph, x: Vertex) -> VertexSet {
    (0..g.n()).filter(|&y| g.star(y) == g.star(x)).collect()
}

/// `[x]_◊`: vertices with the same punctured star as `x`.
pub fn diamond_class(g: &Graph, x: Vertex) -> VertexSet {
    (0..g.n()).filter(|&y| g.neighbours(y) == g.neighbours(x)).collect()
}

/// `x <_𝓚 y`: `𝔞(x) ⊊ 𝔞(y)`.
pub fn k_less(g: &Graph, x: Vertex, y: Vertex) -> bool {
    let (a, b) = (admissible_of(g, x), admissible_of(g, y));
    a.is_subset(b) && a != b
}

/// True when `x` is `𝓚`-minimal.
pub fn is_k_minimal(g: &Graph, x: Vertex) -> bool {
    (0..g.n()).all(|y| !k_less(g, y, x))
}

/// True when `x` is `𝓚`-maximal.
pub fn is_k_maximal(g: &Graph, x: Vertex) -> bool {
    (0..g.n()).all(|y| !k_less(g, x, y))
}

/// True when `x` is `𝓛`-minimal (`cl(x)` minimal among the `cl(y)`).
pub fn is_l_minimal(g: &Graph, x: Vertex) -> bool {
    let cx = closure(g, VertexSet::singleton(x));
    (0..g.n()).all(|y| {
        let cy = closure(g, VertexSet::singleton(y));
        !(cy.is_subset(cx) && cy != cx)
    })
}

/// Classes, tags and heights.
pub fn vertex_classification(g: &Graph) -> VertexClassification {
    let n = g.n();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = perp_class(g, x).union(diamond_class(g, x));
        for v in c.iter() {
            class_of[v] = classes.len();
        }
        classes.push(c);
    }
    let tags = classes
        .iter()
        .map(|c| {
            let x = c.first().expect("classes are non-empty");
            if c.len() == 1 {
                ClassTag::Singleton
            } else if admissible_of(g, x) == closure(g, VertexSet::singleton(x)) {
                ClassTag::Perp
            } else {
                ClassTag::Diamond
            }
        })
        .collect();

    let k_x: Vec<VertexSet> = (0..n).map(|x| admissible_of(g, x)).collect();
    let mut b_sets: Vec<Vec<VertexSet>> = Vec::new();
    let mut placed: Vec<VertexSet> = Vec::new();
    let mut heights = vec![0; classes.len()];
    let mut remaining: Vec<VertexSet> = Vec::new();
    for &a in &k_x {
        if !remaining.contains(&a) {
            remaining.push(a);
        }
    }
    while !remaining.is_empty() {
        let level: Vec<VertexSet> = remaining
            .iter()
            .copied()
            .filter(|&y| {
                let x = (0..n).find(|&x| k_x[x] == y).expect("set comes from a vertex");
                (0..n).filter(|&z| k_less(g, z, x)).all(|z| placed.contains(&k_x[z]))
            })
            .collect();
        let h = b_sets.len();
        for &y in &level {
            for x in 0..n {
                if k_x[x] == y {
                    heights[class_of[x]] = h;
                }
            }
        }
        placed.extend(level.iter().copied());
        remaining.retain(|y| !level.contains(y));
        b_sets.push(level);
    }
    VertexClassification {
        classes,
        tags,
        heights,
        b_sets,
        class_of,
    }
}

/// Choices left open by the construction of the total order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TieBreaks {
    /// Priority list of vertices; a B-set's classes are processed in the
    /// order of their earliest-listed member, unlisted classes last in input order.
    pub b_priority: Vec<Vertex>,
    /// Explicit ascending orders for classes; unlisted classes use input order.
    pub class_orders: Vec<Vec<Vertex>>,
}

/// The total order `≺` on `X`, returned in ascending order.
///
/// B-sets are processed by height; each newly placed class goes below every
/// vertex already ordered.
pub fn total_order(g: &Graph, tie: &TieBreaks) -> Vec<Vertex> {
    let cls = vertex_classification(g);
    let rank = |c: VertexSet| -> (usize, usize) {
        let p = tie.b_priority.iter().position(|v| c.contains(*v)).unwrap_or(usize::MAX);
        (p, c.first().unwrap_or(0))
    };
    let mut placed: Vec<Vertex> = Vec::new();
    let mut done = VertexSet::EMPTY;
    for level in &cls.b_sets {
        let mut level_classes: Vec<VertexSet> = level
            .iter()
            .map(|&y| {
                let x = (0..g.n()).find(|&x| admissible_of(g, x) == y).expect("vertex of set");
                cls.class_of(x)
            })
            .filter(|c| !c.is_subset(done))
            .collect();
        level_classes.sort_by_key(|c| rank(*c));
        for c in level_classes {
            let inner: Vec<Vertex> = tie
                .class_orders
                .iter()
                .find(|o| VertexSet::from_vertices(o.iter().copied()) == c)
                .cloned()
                .unwrap_or_else(|| c.to_vec());
            let mut next = inner;
            next.extend(placed);
            placed = next;
            done = done.union(c);
        }
    }
    placed
}

/// Edge set and labels of the compression graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressionGraph {
    /// Vertices: the classes, ordered by least member.
    pub classes: Vec<VertexSet>,
    /// Edges `(i, j)` with `i <= j`; `i == j` marks a loop.
    pub edges: Vec<(usize, usize)>,
    /// Labels `(tag, d)` with `d = |[v]|`.
    pub labels: Vec<(ClassTag, usize)>,
}

impl CompressionGraph {
    /// Label text: `(1,1)`, `(⊥,d)` or `(◊,d)`.
    pub fn label_text(&self, i: usize) -> String {
        match self.labels[i] {
            (ClassTag::Singleton, _) => "(1,1)".to_string(),
            (ClassTag::Perp, d) => format!("(⊥,{d})"),
            (ClassTag::Diamond, d) => format!("(◊,{d})"),
        }
    }
}

/// The compression graph `Γ^comp`.
pub fn compression_graph(g: &Graph) -> CompressionGraph {
    let cls = vertex_classification(g);
    let k = cls.classes.len();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i..k {
            let joined = cls.classes[i]
                .iter()
                .any(|u| cls.classes[j].iter().any(|v| g.adjacent(u, v)));
            if joined {
                edges.push((i, j));
            }
        }
    }
    let labels = cls.classes.iter().zip(&cls.tags).map(|(c, t)| (*t, c.len())).collect();
    CompressionGraph {
        classes: cls.classes,
        edges,
        labels,
    }
}

/// `x` dominates `y`: `x^⊥ ∩ y^⊥ = y^⊥ \ y`.
pub fn dominates(g: &Graph, x: Vertex, y: Vertex) -> bool {
    g.star(x).intersection(g.star(y)) == g.neighbours(y)
}

/// `Dom(x)`: vertices dominated by `x`.
pub fn dom_set(g: &Graph, x: Vertex) -> VertexSet {
    (0..g.n()).filter(|&y| dominates(g, x, y)).collect()
}

/// `Dom(Γ)`: all dominated vertices.
pub fn dom_graph(g: &Graph) -> VertexSet {
    (0..g.n()).fold(VertexSet::EMPTY, |acc, x| acc.union(dom_set(g, x)))
}

/// `out(y) = {x ∈ 𝔞(y) : x ∉ [y] ∪ y^⊥}`.
pub fn out_set(g: &Graph, y: Vertex) -> VertexSet {
    let class = perp_class(g, y).union(diamond_class(g, y));
    admissible_of(g, y).difference(class).difference(g.star(y))
}

/// Failure witness for balancedness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnbalancedWitness {
    /// The dominated vertex `v`.
    pub vertex: Vertex,
    /// Two vertices of `out(v)` in different components.
    pub pair: (Vertex, Vertex),
    /// The components of `Γ_{v^⊥}` containing them.
    pub components: (VertexSet, VertexSet),
}

/// Balancedness test: every dominated `v` has `out(v)` empty or inside one
/// component of `Γ_{v^⊥}`.
pub fn is_balanced(g: &Graph) -> Result<(), UnbalancedWitness> {
    for v in dom_graph(g).iter() {
        let out = out_set(g, v);
        let comps = g.components(g.star(v));
        let touched: Vec<VertexSet> = comps.into_iter().filter(|c| c.meets(out)).collect();
        if touched.len() > 1 {
            let a = touched[0].intersection(out).first().expect("meets");
            let b = touched[1].intersection(out).first().expect("meets");
            return Err(UnbalancedWitness {
                vertex: v,
                pair: (a, b),
                components: (touched[0], touched[1]),
            });
        }
    }
    Ok(())
}

/// `𝓙ₓ(Y)`: `Y` plus the components of `Γ_{x^⊥}` meeting `Y`.
pub fn j_step(g: &Graph, x: Vertex, y: VertexSet) -> VertexSet {
    g.components(g.star(x))
        .into_iter()
        .filter(|c| c.meets(y))
        .fold(y, |acc, c| acc.union(c))
}

/// `𝓚ₓ(Y)`: `Y` plus every `𝔞(v)` meeting `Y \ x^⊥`.
pub fn k_step(g: &Graph, x: Vertex, y: VertexSet) -> VertexSet {
    let outside = y.difference(g.star(x));
    (0..g.n())
        .map(|v| admissible_of(g, v))
        .filter(|a| a.meets(outside))
        .fold(y, |acc, a| acc.union(a))
}

/// `𝓗ₓ(Y)`: fixed point of `H ↦ 𝓚ₓ(𝓙ₓ(H))`.
pub fn h_closure(g: &Graph, x: Vertex, y: VertexSet) -> VertexSet {
    let mut h = y;
    loop {
        let next = k_step(g, x, j_step(g, x, h));
        if next == h {
            return h;
        }
        h = next;
    }
}

/// `(Sol₀(x), Sol(x))`.
pub fn sol_sets(g: &Graph, x: Vertex) -> (VertexSet, VertexSet) {
    let allowed = dom_set(g, x).union(g.star(x));
    let sol0: VertexSet = (0..g.n())
        .filter(|&u| h_closure(g, x, VertexSet::singleton(u)).is_subset(allowed))
        .collect();
    let sol = sol0
        .iter()
        .filter(|&u| is_k_maximal(g, u) && !g.star(x).contains(u))
        .collect();
    (sol0, sol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gd() -> Graph {
        Graph::new(
            &["v", "c", "a", "b", "r", "s", "t"],
            &[("v", "c"), ("c", "a"), ("c", "b"), ("a", "r"), ("r", "s"), ("b", "t")],
        )
        .unwrap()
    }

    #[test]
    fn gd_domination_and_balance() {
        let g = gd();
        let (v, a, b) = (0, 2, 3);
        assert!(dominates(&g, a, v));
        assert_eq!(out_set(&g, v), VertexSet::from_vertices([a, b]));
        let w = is_balanced(&g).unwrap_err();
        assert_eq!(w.vertex, v);
        assert_eq!(w.pair, (a, b));
    }

    #[test]
    fn cycle_is_balanced_without_domination() {
        let g = Graph::from_indices(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(dom_graph(&g).is_empty());
        assert!(is_balanced(&g).is_ok());
    }

    #[test]
    fn discrete_graph_single_class() {
        let g = Graph::from_indices(3, &[]).unwrap();
        let c = vertex_classification(&g);
        assert_eq!(c.classes, vec![g.all()]);
        let cg = compression_graph(&g);
        assert_eq!(cg.label_text(0), "(◊,3)");
        assert!(cg.edges.is_empty());
    }

    #[test]
    fn h_closure_of_star_vertex() {
        let g = gd();
        for x in 0..g.n() {
            for y in g.star(x).iter() {
                assert_eq!(h_closure(&g, x, VertexSet::singleton(y)), VertexSet::singleton(y));
            }
        }
    }

    #[test]
    fn star_centre_solvable_everywhere() {
        let g = Graph::from_indices(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(sol_sets(&g, 0).0, g.all());
    }

    #[test]
    fn vertex_never_dominates_itself() {
        let g = gd();
        assert!((0..g.n()).all(|x| !dominates(&g, x, x)));
    }
}
