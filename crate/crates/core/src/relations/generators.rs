//! The generating set `𝓟 = 𝓟_comp ∪ 𝓟_int ∪ 𝓟_ext` and the
//! Fouxe-Rabinovitch generators.

use crate::automorphisms::{Automorphism, Raag, Symbol};
use crate::error::{Error, Result};
use crate::graph_lattice::{compressed_automorphisms, GraphAutomorphism, VertexSet};
use crate::words::{Letter, NormalForm};

/// A factor `Ω_i^{m_i}` of the isomorphism type: the isolated vertices or a
/// group of pairwise isomorphic non-trivial components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    /// The isolated vertices.
    Isolated,
    /// Group `j` (0-based) of non-trivial components.
    Group(usize),
}

impl Factor {
    /// All factors, the isolated one first when present.
    pub fn all(ctx: &Raag) -> Vec<Factor> {
        let mut out = Vec::new();
        if !ctx.iso().isolated.is_empty() {
            out.push(Factor::Isolated);
        }
        out.extend((0..ctx.iso().groups.len()).map(Factor::Group));
        out
    }

    /// Multiplicity `m_i`.
    pub fn multiplicity(self, ctx: &Raag) -> usize {
        match self {
            Factor::Isolated => ctx.iso().isolated.len(),
            Factor::Group(j) => ctx.iso().groups[j].multiplicity(),
        }
    }

    /// Vertex set of copy `k` (0-based).
    pub fn copy(self, ctx: &Raag, k: usize) -> VertexSet {
        match self {
            Factor::Isolated => VertexSet::singleton(ctx.iso().isolated[k]),
            Factor::Group(j) => ctx.iso().groups[j].copies[k],
        }
    }

    /// The first copy `X_{i,1}`.
    pub fn first_copy(self, ctx: &Raag) -> VertexSet {
        self.copy(ctx, 0)
    }

    /// Group index used by the `ω` symbols.
    pub fn omega_index(self) -> Option<usize> {
        match self {
            Factor::Isolated => None,
            Factor::Group(j) => Some(j),
        }
    }

    /// The swap `ω^i_{a,b}`, indices stored in increasing order.
    pub fn omega(self, a: usize, b: usize) -> Symbol {
        Symbol::omega(self.omega_index(), a.min(b), a.max(b))
    }
}

fn letters_of(s: VertexSet) -> Vec<Letter> {
    s.iter().flat_map(|v| [Letter::pos(v), Letter::neg(v)]).collect()
}

/// Swaps `ω^i_{a,b}`, `a < b`, generating the symmetric group on the copies.
pub fn symm_generators(ctx: &Raag, f: Factor) -> Vec<Symbol> {
    let m = f.multiplicity(ctx);
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            out.push(f.omega(a, b));
        }
    }
    out
}

/// Compressed graph automorphisms of the first copy, lifted to `Γ`.
fn lifted_compressed(ctx: &Raag, f: Factor) -> Vec<Symbol> {
    let Factor::Group(_) = f else { return Vec::new() };
    let g = ctx.graph();
    let x = f.first_copy(ctx);
    let vs = x.to_vec();
    compressed_automorphisms(&g.induced(x))
        .into_iter()
        .filter(|p| !p.is_identity())
        .map(|p| {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            for (i, &v) in vs.iter().enumerate() {
                perm[v] = vs[p.perm[i]];
            }
            Symbol::graph_aut(GraphAutomorphism { perm })
        })
        .collect()
}

/// Inversions, transvections and partial conjugations supported in the
/// first copy of a factor (`ι_z` alone for the isolated factor).
fn internal(ctx: &Raag, f: Factor) -> Vec<Symbol> {
    let g = ctx.graph();
    let x = f.first_copy(ctx);
    let mut out: Vec<Symbol> = x.iter().map(Symbol::inv).collect();
    if let Factor::Isolated = f {
        return out;
    }
    for a in letters_of(x) {
        for b in letters_of(x) {
            let t = Symbol::tr(a, b);
            if a.vertex() != b.vertex() && t.images(ctx).is_ok() {
                out.push(t);
            }
        }
    }
    for a in letters_of(x) {
        for c in g.components(g.star(a.vertex())) {
            if c.is_subset(x) {
                out.push(Symbol::lc(c, a));
            }
        }
    }
    out
}

/// Generators `𝓟_i` of the automorphism group of the first copy of a factor.
pub fn factor_generators(ctx: &Raag, f: Factor) -> Vec<Symbol> {
    let mut out = internal(ctx, f);
    out.extend(lifted_compressed(ctx, f));
    out
}

/// `𝓟_comp`: the copy swaps of every factor and the lifted compressed
/// graph automorphisms of the first copies.
pub fn comp_generators(ctx: &Raag) -> Vec<Symbol> {
    let mut out = Vec::new();
    for f in Factor::all(ctx) {
        out.extend(symm_generators(ctx, f));
        out.extend(lifted_compressed(ctx, f));
    }
    out
}

/// `𝓟_int`: inversions, transvections and partial conjugations inside the
/// first copy of each factor.
pub fn int_generators(ctx: &Raag) -> Vec<Symbol> {
    Factor::all(ctx).into_iter().flat_map(|f| internal(ctx, f)).collect()
}

/// `Tr_ext`: `τ_{x,y}` with `x` an isolated letter and `y` any letter on
/// another vertex.
pub fn tr_ext_generators(ctx: &Raag) -> Vec<Symbol> {
    let mut out = Vec::new();
    for &v in &ctx.iso().isolated {
        for x in [Letter::pos(v), Letter::neg(v)] {
            for y in letters_of(ctx.graph().all()) {
                if y.vertex() != v {
                    out.push(Symbol::tr(x, y));
                }
            }
        }
    }
    out
}

/// Indices of the non-trivial components.
pub fn nontrivial_components(ctx: &Raag) -> Vec<usize> {
    (0..ctx.component_count())
        .filter(|&j| !ctx.is_isolated_component(j))
        .collect()
}

/// `LInn_ext`: `α_{X_j,y}` with `X_j` a non-trivial component and `y` a
/// letter outside it.
pub fn lext_generators(ctx: &Raag) -> Vec<Symbol> {
    let mut out = Vec::new();
    for j in nontrivial_components(ctx) {
        let xj = ctx.component(j);
        for y in letters_of(ctx.graph().all()) {
            if !xj.contains(y.vertex()) {
                out.push(Symbol::lc(xj, y));
            }
        }
    }
    out
}

/// Generators of the Fouxe-Rabinovitch kernel; requires a graph without
/// isolated vertices.
pub fn fr_generators(ctx: &Raag) -> Result<Vec<Symbol>> {
    if let Some(&v) = ctx.iso().isolated.first() {
        return Err(Error::Precondition(format!(
            "the Fouxe-Rabinovitch generators need a graph without isolated vertices, but {} is isolated",
            ctx.graph().name(v)
        )));
    }
    Ok(lext_generators(ctx))
}

/// True when `φ` acts trivially on `∏_j G(X_j)`: deleting the letters
/// outside `X_j` from the image of each `x ∈ X_j` leaves `x`.
pub fn projects_trivially(ctx: &Raag, phi: &Automorphism) -> bool {
    let g = ctx.graph();
    (0..ctx.n()).all(|v| {
        let comp = ctx.component(ctx.component_of(v));
        let kept: Vec<Letter> = phi
            .image(v)
            .letters()
            .iter()
            .copied()
            .filter(|l| comp.contains(l.vertex()))
            .collect();
        NormalForm::of(g, &kept) == NormalForm::letter(Letter::pos(v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_lattice::Graph;

    fn ctx(names: &[&str], edges: &[(&str, &str)]) -> Raag {
        Raag::new(Graph::new(names, edges).unwrap()).unwrap()
    }

    #[test]
    fn fr_generators_of_two_edges() {
        let c = ctx(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]);
        let gens = fr_generators(&c).unwrap();
        assert_eq!(gens.len(), 8);
        for s in &gens {
            assert!(projects_trivially(&c, &Automorphism::from_symbol(&c, s).unwrap()));
        }
        assert!(!projects_trivially(
            &c,
            &Automorphism::from_symbol(&c, &Symbol::inv(0)).unwrap()
        ));
    }

    #[test]
    fn fr_generators_need_no_isolated_vertex() {
        assert!(fr_generators(&ctx(&["a", "b", "p"], &[("a", "b")])).is_err());
        assert!(fr_generators(&ctx(&["a", "b", "c"], &[("a", "b"), ("b", "c")]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn tr_ext_is_empty_without_isolated_vertices() {
        let c = ctx(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]);
        assert!(tr_ext_generators(&c).is_empty());
        let c = ctx(&["a", "b", "p"], &[("a", "b")]);
        assert_eq!(tr_ext_generators(&c).len(), 2 * 4);
    }
}
