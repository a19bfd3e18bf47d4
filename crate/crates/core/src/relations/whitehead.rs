//! Whitehead automorphisms `(A,a)` of the free product of the components
//! and their images as words in the generators of `Aut(G(Γ))`.

use super::generators::nontrivial_components;
use crate::automorphisms::symbol::whitehead_hat;
use crate::automorphisms::{Raag, Symbol, WhiteheadElement, WhiteheadSet};
use crate::error::Result;
use crate::graph_lattice::VertexSet;
use crate::words::{Letter, NormalForm};
use std::collections::BTreeSet;

/// Non-trivial elements of `G(within)` of length at most `max_len`, by
/// length and then lexicographically by letters.
pub(crate) fn elements_up_to(ctx: &Raag, within: VertexSet, max_len: usize) -> Vec<NormalForm> {
    let g = ctx.graph();
    let letters: Vec<Letter> = within.iter().flat_map(|v| [Letter::pos(v), Letter::neg(v)]).collect();
    let mut out = Vec::new();
    let mut level = vec![NormalForm::identity()];
    for len in 1..=max_len {
        let mut next = BTreeSet::new();
        for w in &level {
            for &l in &letters {
                let u = w.mul(g, &NormalForm::letter(l));
                if u.len() == len {
                    next.insert(u.letters().to_vec());
                }
            }
        }
        level = next.into_iter().map(|ls| NormalForm::of(g, &ls)).collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// `∏_{j∈A_J} α̃_{X_j,a} ∏_{y∈A_S} τ̃_{y,a}`, with `X_â` and `â` left out.
pub fn whitehead_image(ctx: &Raag, set: &WhiteheadSet, a: &NormalForm) -> Result<Vec<Symbol>> {
    let hat = whitehead_hat(ctx, a)?;
    let rev: Vec<Letter> = a.letters().iter().rev().copied().collect();
    let mut out = Vec::new();
    for &j in &set.comps {
        if WhiteheadElement::Comp(j) != hat {
            out.extend(rev.iter().map(|&l| Symbol::lc(ctx.component(j), l)));
        }
    }
    for &y in &set.letters {
        if WhiteheadElement::Letter(y) != hat {
            out.extend(rev.iter().map(|&l| Symbol::tr(y, l)));
        }
    }
    Ok(out)
}

/// Universe `J ∪ X_S ∪ X_S⁻¹` of Whitehead sets.
pub(crate) fn universe(ctx: &Raag) -> Vec<WhiteheadElement> {
    let mut out: Vec<WhiteheadElement> = nontrivial_components(ctx)
        .into_iter()
        .map(WhiteheadElement::Comp)
        .collect();
    for &v in &ctx.iso().isolated {
        out.push(WhiteheadElement::Letter(Letter::pos(v)));
        out.push(WhiteheadElement::Letter(Letter::neg(v)));
    }
    out
}

/// Multipliers `a`: non-trivial elements of length at most `max_len` of
/// each non-trivial component, and the isolated letters.
pub(crate) fn multipliers(ctx: &Raag, max_len: usize) -> Vec<NormalForm> {
    let mut out = Vec::new();
    for j in nontrivial_components(ctx) {
        out.extend(elements_up_to(ctx, ctx.component(j), max_len));
    }
    for &v in &ctx.iso().isolated {
        out.push(NormalForm::letter(Letter::pos(v)));
        out.push(NormalForm::letter(Letter::neg(v)));
    }
    out
}

/// Every valid Whitehead pair `(A,a)` with `a` of length at most `max_len`.
pub fn whitehead_automorphisms(ctx: &Raag, max_len: usize) -> Vec<(WhiteheadSet, NormalForm)> {
    let uni = universe(ctx);
    let mut out = Vec::new();
    for a in multipliers(ctx, max_len) {
        let hat = whitehead_hat(ctx, &a).expect("multipliers lie in one component");
        let forbidden = match hat {
            WhiteheadElement::Letter(l) => Some(WhiteheadElement::Letter(l.inverse())),
            WhiteheadElement::Comp(_) => None,
        };
        let free: Vec<WhiteheadElement> = uni
            .iter()
            .copied()
            .filter(|e| *e != hat && Some(*e) != forbidden)
            .collect();
        for mask in 0u64..(1u64 << free.len()) {
            let mut set = WhiteheadSet::of_elem(&hat);
            for (i, e) in free.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    set = set.plus_elem(e);
                }
            }
            out.push((set, a.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphisms::Automorphism;
    use crate::graph_lattice::Graph;

    #[test]
    fn image_matches_direct_evaluation() {
        let ctx = Raag::new(Graph::new(&["a", "b", "c", "d", "p"], &[("a", "b"), ("c", "d")]).unwrap()).unwrap();
        let whs = whitehead_automorphisms(&ctx, 2);
        assert!(whs.len() > 100);
        for (set, a) in whs {
            let direct = Automorphism::from_symbol(&ctx, &Symbol::whitehead(set.clone(), a.clone())).unwrap();
            let image = Automorphism::from_word(&ctx, &whitehead_image(&ctx, &set, &a).unwrap()).unwrap();
            assert_eq!(direct, image);
        }
    }

    #[test]
    fn elements_of_an_edge() {
        let ctx = Raag::new(Graph::new(&["a", "b"], &[("a", "b")]).unwrap()).unwrap();
        assert_eq!(elements_up_to(&ctx, ctx.graph().all(), 2).len(), 4 + 8);
    }
}
