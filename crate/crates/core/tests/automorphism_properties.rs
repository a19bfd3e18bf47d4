//! Property tests of automorphism evaluation, inversion and classification
//! on the fixture graphs.

use proptest::prelude::*;
use raag_core::automorphisms::factor::{generator_family, ConjTarget};
use raag_core::automorphisms::{classify, Automorphism, Raag, Symbol};
use raag_core::io::parse_graph;
use raag_core::relations::{whitehead_automorphisms, whitehead_image};
use raag_core::words::{normalize, Letter, NormalForm};

fn fixture(name: &str) -> Raag {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    Raag::new(parse_graph(&std::fs::read_to_string(path).unwrap()).unwrap()).unwrap()
}

const FIXTURES: [&str; 4] = ["GA.graph", "GD.graph", "twins.graph", "GD_edge_point.graph"];

/// Inversions, valid transvections and elementary conjugating generators.
fn generators(ctx: &Raag) -> Vec<Symbol> {
    let n = ctx.n();
    let letters: Vec<Letter> = (0..n).flat_map(|v| [Letter::pos(v), Letter::neg(v)]).collect();
    let mut out: Vec<Symbol> = (0..n).map(Symbol::inv).collect();
    for &v in &letters {
        for &x in &letters {
            let t = Symbol::tr(v, x);
            if v.vertex() != x.vertex() && Automorphism::from_symbol(ctx, &t).is_ok() {
                out.push(t);
            }
        }
    }
    out.extend(generator_family(ctx, ConjTarget::LInn));
    out
}

fn pick(gens: &[Symbol], choice: &[(usize, bool)]) -> Vec<Symbol> {
    choice
        .iter()
        .map(|&(i, inv)| {
            let s = gens[i % gens.len()].clone();
            if inv {
                s.inverse()
            } else {
                s
            }
        })
        .collect()
}

type Choice = Vec<(usize, bool)>;

fn choices() -> impl Strategy<Value = (usize, Choice, Choice, Choice)> {
    let word = || prop::collection::vec((any::<usize>(), any::<bool>()), 0..6);
    (0..FIXTURES.len(), word(), word(), word())
}

fn element(ctx: &Raag, choice: &[(usize, bool)]) -> NormalForm {
    let letters: Vec<Letter> = choice.iter().map(|&(i, p)| Letter::new(i % ctx.n(), p)).collect();
    normalize(ctx.graph(), &letters)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn evaluation_is_a_homomorphism((f, a, b, c) in choices()) {
        let ctx = fixture(FIXTURES[f]);
        let g = ctx.graph();
        let gens = generators(&ctx);
        let phi = Automorphism::from_word(&ctx, &pick(&gens, &a)).unwrap();
        let psi = Automorphism::from_word(&ctx, &pick(&gens, &b)).unwrap();
        let (u, v) = (element(&ctx, &b), element(&ctx, &c));
        prop_assert_eq!(phi.apply_nf(g, &u.mul(g, &v)), phi.apply_nf(g, &u).mul(g, &phi.apply_nf(g, &v)));
        let both = phi.compose(g, &psi).unwrap();
        prop_assert_eq!(both.apply_nf(g, &u), psi.apply_nf(g, &phi.apply_nf(g, &u)));
        let inv = phi.invert(&ctx).unwrap();
        prop_assert!(phi.compose(g, &inv).unwrap().is_identity());
        prop_assert!(inv.compose(g, &phi).unwrap().is_identity());
        let word: Vec<Symbol> = pick(&gens, &a).iter().rev().map(Symbol::inverse).collect();
        prop_assert!(Automorphism::from_word(&ctx, &word).unwrap().equal(&inv));
    }

    #[test]
    fn inner_automorphisms_are_classified_inner((f, a, _b, _c) in choices()) {
        let ctx = fixture(FIXTURES[f]);
        let w = element(&ctx, &a);
        let phi = Automorphism::from_symbol(&ctx, &Symbol::inner(w)).unwrap();
        let r = classify(&ctx, &phi).unwrap();
        prop_assert!(r.conjugating.is_yes());
        prop_assert!(r.inner.is_yes());
        prop_assert!(!r.conj_v.is_no());
    }

    #[test]
    fn transvection_words_with_nontrivial_abelianization_are_not_conjugating((f, a, _b, _c) in choices()) {
        let ctx = fixture(FIXTURES[f]);
        let gens: Vec<Symbol> = generators(&ctx).into_iter().filter(|s| matches!(s.kind, raag_core::SymbolKind::Tr(..))).collect();
        let phi = Automorphism::from_word(&ctx, &pick(&gens, &a)).unwrap();
        let g = ctx.graph();
        let exponent_sums_fixed = (0..g.n()).all(|x| {
            (0..g.n()).all(|y| {
                let s: i32 = phi.image(x).letters().iter().filter(|l| l.vertex() == y).map(|l| l.sign()).sum();
                s == i32::from(x == y)
            })
        });
        let r = classify(&ctx, &phi).unwrap();
        if !exponent_sums_fixed {
            prop_assert!(r.conjugating.is_no());
        }
    }
}

#[test]
fn whitehead_automorphisms_match_their_expansions() {
    for name in FIXTURES {
        let ctx = fixture(name);
        let pairs = whitehead_automorphisms(&ctx, 1);
        assert!(!pairs.is_empty(), "{name}");
        for (set, a) in pairs {
            let direct = Automorphism::from_symbol(&ctx, &Symbol::whitehead(set.clone(), a.clone())).unwrap();
            let expanded = Automorphism::from_word(&ctx, &whitehead_image(&ctx, &set, &a).unwrap()).unwrap();
            assert!(direct.equal(&expanded), "{name}: {}", a.display(ctx.graph()));
        }
    }
}
