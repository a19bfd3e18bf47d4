//! Connected components, isomorphism types and graph automorphisms.

use super::classes::{compression_graph, vertex_classification};
use super::graph::{Graph, Vertex, VertexSet};
use crate::error::{Error, Result};

/// Largest component size accepted by the isomorphism test.
pub const MAX_ISO_COMPONENT: usize = 12;

/// A permutation of the vertices that preserves adjacency.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphAutomorphism {
    /// `perm[v]` is the image of `v`.
    pub perm: Vec<Vertex>,
}

impl GraphAutomorphism {
    /// The identity on `n` vertices.
    pub fn identity(n: usize) -> Self {
        GraphAutomorphism { perm: (0..n).collect() }
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (v, &w) in self.perm.iter().enumerate() {
            inv[w] = v;
        }
        GraphAutomorphism { perm: inv }
    }

    /// Apply `self` then `other`.
    pub fn then(&self, other: &Self) -> Self {
        GraphAutomorphism {
            perm: self.perm.iter().map(|&v| other.perm[v]).collect(),
        }
    }

    /// True for the identity.
    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Image of a vertex set.
    pub fn image(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.perm[v]).collect()
    }

    /// Checks that the permutation preserves adjacency in both directions.
    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.perm.len() != n {
            return false;
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &self.perm {
            if v >= n || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        (0..n).all(|u| (0..n).all(|v| g.adjacent(u, v) == g.adjacent(self.perm[u], self.perm[v])))
    }
}

/// All bijections `from → to` between vertex subsets of two graphs that
/// preserve adjacency, found by backtracking with degree pruning.
/// Returns at most `limit` maps (each as pairs in the order of `from`).
pub fn isomorphisms(g: &Graph, from: VertexSet, h: &Graph, to: VertexSet, limit: usize) -> Vec<Vec<(Vertex, Vertex)>> {
    let mut out = Vec::new();
    if from.len() != to.len() {
        return out;
    }
    let src = bfs_order(g, from);
    let deg_g = |v: Vertex| g.neighbours(v).intersection(from).len();
    let deg_h = |v: Vertex| h.neighbours(v).intersection(to).len();
    let mut assign: Vec<(Vertex, Vertex)> = Vec::new();
    let mut used = VertexSet::EMPTY;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Graph,
        h: &Graph,
        src: &[Vertex],
        to: VertexSet,
        deg_g: &dyn Fn(Vertex) -> usize,
        deg_h: &dyn Fn(Vertex) -> usize,
        assign: &mut Vec<(Vertex, Vertex)>,
        used: &mut VertexSet,
        out: &mut Vec<Vec<(Vertex, Vertex)>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if assign.len() == src.len() {
            out.push(assign.clone());
            return;
        }
        let u = src[assign.len()];
        for w in to.difference(*used).iter() {
            if deg_g(u) != deg_h(w) {
                continue;
            }
            if assign.iter().all(|&(a, b)| g.adjacent(a, u) == h.adjacent(b, w)) {
                assign.push((u, w));
                used.insert(w);
                rec(g, h, src, to, deg_g, deg_h, assign, used, out, limit);
                assign.pop();
                *used = used.without(w);
            }
        }
    }
    rec(g, h, &src, to, &deg_g, &deg_h, &mut assign, &mut used, &mut out, limit);
    out
}

fn bfs_order(g: &Graph, s: VertexSet) -> Vec<Vertex> {
    let mut order = Vec::new();
    let mut seen = VertexSet::EMPTY;
    for start in s.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([start]);
        seen.insert(start);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in g.neighbours(v).intersection(s).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// All automorphisms of `g`, in lexicographic order of permutations.
pub fn graph_automorphisms(g: &Graph) -> Vec<GraphAutomorphism> {
    let maps = isomorphisms(g, g.all(), g, g.all(), usize::MAX);
    let mut out: Vec<GraphAutomorphism> = maps
        .into_iter()
        .map(|m| {
            let mut perm = vec![0; g.n()];
            for (u, w) in m {
                perm[u] = w;
            }
            GraphAutomorphism { perm }
        })
        .collect();
    out.sort();
    out
}

/// Compressed automorphisms: lifts of label-preserving automorphisms of the
/// compression graph, mapping the k-th member (input order) of a class to
/// the k-th member of its image class.
pub fn compressed_automorphisms(g: &Graph) -> Vec<GraphAutomorphism> {
    let cg = compression_graph(g);
    let k = cg.classes.len();
    let has_edge = |i: usize, j: usize| cg.edges.contains(&(i.min(j), i.max(j)));
    let mut out = Vec::new();
    let mut assign: Vec<usize> = Vec::new();
    let mut used = vec![false; k];
    fn rec(
        k: usize,
        labels: &[(super::classes::ClassTag, usize)],
        has_edge: &dyn Fn(usize, usize) -> bool,
        assign: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = assign.len();
        if i == k {
            out.push(assign.clone());
            return;
        }
        for j in 0..k {
            if used[j] || labels[i] != labels[j] {
                continue;
            }
            if has_edge(i, i) != has_edge(j, j) {
                continue;
            }
            if (0..i).all(|p| has_edge(p, i) == has_edge(assign[p], j)) {
                assign.push(j);
                used[j] = true;
                rec(k, labels, has_edge, assign, used, out);
                used[j] = false;
                assign.pop();
            }
        }
    }
    let mut perms = Vec::new();
    rec(k, &cg.labels, &has_edge, &mut assign, &mut used, &mut perms);
    for p in perms {
        let mut perm = vec![0; g.n()];
        for (i, &j) in p.iter().enumerate() {
            for (u, w) in cg.classes[i].iter().zip(cg.classes[j].iter()) {
                perm[u] = w;
            }
        }
        out.push(GraphAutomorphism { perm });
    }
    out.sort();
    out
}

/// The permutation of classes induced by a graph automorphism.
pub fn class_permutation(g: &Graph, a: &GraphAutomorphism) -> Vec<usize> {
    let cls = vertex_classification(g);
    cls.classes
        .iter()
        .map(|c| cls.class_index(a.perm[c.first().expect("non-empty class")]))
        .collect()
}

/// One isomorphism class of non-trivial components, with its copies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGroup {
    /// Copies `X_{j,1}, …, X_{j,m_j}` ordered by least vertex.
    pub copies: Vec<VertexSet>,
    /// For each copy, the fixed isomorphism onto the first copy as
    /// `(vertex, image)` pairs; the first copy maps identically.
    pub to_rep: Vec<Vec<(Vertex, Vertex)>>,
}

impl ComponentGroup {
    /// Multiplicity `m_j`.
    pub fn multiplicity(&self) -> usize {
        self.copies.len()
    }
}

/// Decomposition `Γ ≅ Ω₀^{m₀} ∪ Ω₁^{m₁} ∪ ⋯ ∪ Ω_d^{m_d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismType {
    /// Isolated vertices `X_{0,1}, …, X_{0,m₀}` in input order.
    pub isolated: Vec<Vertex>,
    /// Groups of pairwise isomorphic components with at least two vertices.
    pub groups: Vec<ComponentGroup>,
    /// All components (isolated ones included) ordered by least vertex.
    pub components: Vec<VertexSet>,
}

impl IsomorphismType {
    /// Index in `components` of the component containing `v`.
    pub fn component_index(&self, v: Vertex) -> usize {
        self.components
            .iter()
            .position(|c| c.contains(v))
            .expect("every vertex lies in a component")
    }

    /// Position `(j, k)` of a non-trivial component: group `j` (0-based) and copy `k` (0-based).
    pub fn locate(&self, comp: VertexSet) -> Option<(usize, usize)> {
        self.groups
            .iter()
            .enumerate()
            .find_map(|(j, grp)| grp.copies.iter().position(|&c| c == comp).map(|k| (j, k)))
    }

    /// The swap `ω^j_{a,b}` as a vertex permutation (copies 0-based). For
    /// `j = None` the isolated vertices `a` and `b` are exchanged.
    pub fn omega(&self, n: usize, j: Option<usize>, a: usize, b: usize) -> GraphAutomorphism {
        let mut perm: Vec<Vertex> = (0..n).collect();
        match j {
            None => {
                perm.swap(self.isolated[a], self.isolated[b]);
            }
            Some(j) => {
                let grp = &self.groups[j];
                let rep_of = |k: usize, v: Vertex| grp.to_rep[k].iter().find(|p| p.0 == v).expect("in copy").1;
                let from_rep = |k: usize, r: Vertex| grp.to_rep[k].iter().find(|p| p.1 == r).expect("in rep").0;
                for v in grp.copies[a].iter() {
                    perm[v] = from_rep(b, rep_of(a, v));
                }
                for v in grp.copies[b].iter() {
                    perm[v] = from_rep(a, rep_of(b, v));
                }
            }
        }
        GraphAutomorphism { perm }
    }
}

/// Computes the isomorphism type with fixed component isomorphisms.
pub fn isomorphism_type(g: &Graph) -> Result<IsomorphismType> {
    let components = g.components(VertexSet::EMPTY);
    let mut isolated = Vec::new();
    let mut groups: Vec<ComponentGroup> = Vec::new();
    for &c in &components {
        if c.len() == 1 {
            isolated.push(c.first().expect("non-empty"));
            continue;
        }
        let mut placed = false;
        for grp in groups.iter_mut() {
            let rep = grp.copies[0];
            if rep.len() != c.len() {
                continue;
            }
            if c.len() > MAX_ISO_COMPONENT {
                return Err(Error::InvalidGraph(format!(
                    "component of {} vertices exceeds the isomorphism limit {MAX_ISO_COMPONENT}",
                    c.len()
                )));
            }
            if let Some(m) = isomorphisms(g, c, g, rep, 1).into_iter().next() {
                let mut m = m;
                m.sort();
                grp.copies.push(c);
                grp.to_rep.push(m);
                placed = true;
                break;
            }
        }
        if !placed {
            groups.push(ComponentGroup {
                copies: vec![c],
                to_rep: vec![c.iter().map(|v| (v, v)).collect()],
            });
        }
    }
    Ok(IsomorphismType {
        isolated,
        groups,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_has_eight_automorphisms() {
        let g = Graph::from_indices(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let auts = graph_automorphisms(&g);
        assert_eq!(auts.len(), 8);
        assert!(auts.iter().all(|a| a.is_automorphism_of(&g)));
    }

    #[test]
    fn two_edges_and_a_point() {
        let g = Graph::from_indices(5, &[(0, 1), (2, 3)]).unwrap();
        let t = isomorphism_type(&g).unwrap();
        assert_eq!(t.isolated, vec![4]);
        assert_eq!(t.groups.len(), 1);
        assert_eq!(t.groups[0].multiplicity(), 2);
        let w = t.omega(5, Some(0), 0, 1);
        assert!(w.is_automorphism_of(&g));
        assert_eq!(w.then(&w), GraphAutomorphism::identity(5));
    }

    #[test]
    fn compressed_lifts_are_automorphisms() {
        let g = Graph::from_indices(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        for a in compressed_automorphisms(&g) {
            assert!(a.is_automorphism_of(&g));
        }
    }
}
