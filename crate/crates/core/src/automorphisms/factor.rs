//! Factorization of conjugating automorphisms by length descent, and the
//! (St(𝓚), Conj) factorization over balanced graphs.

use super::classify::{common_conjugator, conj_length, conjugation_data};
use super::rewrite::{is_tame, push_word};
use super::symbol::{Symbol, SymbolKind};
use super::{Automorphism, Raag};
use crate::error::{Error, Result};
use crate::graph_lattice::{dominates, is_balanced, sol_sets, Vertex, VertexSet};
use crate::words::Letter;

/// Generator family used by [`factor_conjugating`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConjTarget {
    /// Elementary conjugating automorphisms `α_{C,x}`.
    LInn,
    /// Regular elementary and basic collected generators.
    LInnV,
    /// Basic normal generators `α̃_{y,x}`.
    LInnN,
    /// Singular generators `α_{{y},x}`.
    LInnS,
    /// Basic collected generators `α_{[u],x}`.
    LInnC,
    /// Normal generators `α̃_{y,x}` with `y ∈ Sol(x)`.
    LInnI,
    /// Tame extended generators.
    Tame,
    /// Aggregate generators `β_{D,x}`.
    Agg,
}

impl ConjTarget {
    /// Parses `LInn`, `LInn_V`, `LInn_N`, `LInn_S`, `LInn_C`, `LInn_I`,
    /// `tame` or `agg` (case-insensitive, underscores optional).
    pub fn parse(s: &str) -> Result<Self> {
        let k = s.to_ascii_lowercase().replace('_', "");
        Ok(match k.as_str() {
            "linn" => ConjTarget::LInn,
            "linnv" | "v" => ConjTarget::LInnV,
            "linnn" | "n" => ConjTarget::LInnN,
            "linns" | "s" => ConjTarget::LInnS,
            "linnc" | "c" => ConjTarget::LInnC,
            "linni" | "i" => ConjTarget::LInnI,
            "tame" | "linnt" => ConjTarget::Tame,
            "agg" | "a" => ConjTarget::Agg,
            _ => {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("unknown factorization target `{s}`"),
                })
            }
        })
    }
}

fn letters_of(x: Vertex) -> [Letter; 2] {
    [Letter::pos(x), Letter::neg(x)]
}

fn is_vertex_conjugating(ctx: &Raag, phi: &Automorphism) -> bool {
    conjugation_data(ctx, phi).is_some_and(|d| {
        ctx.classes()
            .classes
            .iter()
            .all(|c| common_conjugator(ctx, &d, *c).is_some())
    })
}

/// The finite generator family of a target whose members are single
/// symbols (the tame family is handled separately).
pub fn generator_family(ctx: &Raag, target: ConjTarget) -> Vec<Symbol> {
    let g = ctx.graph();
    let n = g.n();
    let mut out: Vec<Symbol> = Vec::new();
    let mut seen: Vec<(VertexSet, Letter)> = Vec::new();
    let mut push = |supp: VertexSet, l: Letter, s: Symbol, out: &mut Vec<Symbol>| {
        if !supp.is_empty() && !seen.contains(&(supp, l)) {
            seen.push((supp, l));
            out.push(s);
        }
    };
    for x in 0..n {
        let star = g.star(x);
        match target {
            ConjTarget::LInn | ConjTarget::LInnS | ConjTarget::LInnV => {
                for c in g.components(star) {
                    for l in letters_of(x) {
                        let s = Symbol::lc(c, l);
                        let keep = match target {
                            ConjTarget::LInn => true,
                            ConjTarget::LInnS => c.len() == 1,
                            _ => {
                                c.len() > 1
                                    && Automorphism::from_symbol(ctx, &s).is_ok_and(|a| is_vertex_conjugating(ctx, &a))
                            }
                        };
                        if keep {
                            push(c, l, s, &mut out);
                        }
                    }
                }
                if target == ConjTarget::LInnV {
                    for u in 0..n {
                        if dominates(g, x, u) {
                            for l in letters_of(x) {
                                let supp = ctx.classes().class_of(u).without(x);
                                push(supp, l, Symbol::coll(u, l), &mut out);
                            }
                        }
                    }
                }
            }
            ConjTarget::LInnC => {
                for u in 0..n {
                    if dominates(g, x, u) {
                        for l in letters_of(x) {
                            let supp = ctx.classes().class_of(u).without(x);
                            push(supp, l, Symbol::coll(u, l), &mut out);
                        }
                    }
                }
            }
            ConjTarget::LInnN | ConjTarget::LInnI => {
                let allowed = if target == ConjTarget::LInnI {
                    sol_sets(g, x).1
                } else {
                    g.all().difference(star)
                };
                for y in allowed.iter() {
                    for l in letters_of(x) {
                        let supp = super::symbol::normal_support(ctx, y, x);
                        push(supp, l, Symbol::norm(y, l), &mut out);
                    }
                }
            }
            ConjTarget::Agg => {
                for d in g.components(VertexSet::singleton(x)) {
                    for l in letters_of(x) {
                        push(d, l, Symbol::agg(d, l), &mut out);
                    }
                }
            }
            ConjTarget::Tame => {
                for c in g.components(star) {
                    if is_tame(ctx, c, Letter::pos(x)) {
                        for l in letters_of(x) {
                            push(c, l, Symbol::ext(c, l), &mut out);
                        }
                    }
                }
            }
        }
    }
    out
}

fn strip(phi: &Automorphism) -> Automorphism {
    Automorphism::from_parts(Vec::new(), phi.images().to_vec())
}

/// Best move of the family: the generator `α` minimizing `|α·cur|`, if it
/// is shorter than `cur`. For the tame family, components sharing a
/// conjugating letter are merged into one extended generator.
fn best_move(
    ctx: &Raag,
    family: &[(Symbol, Automorphism)],
    cur: &Automorphism,
    len: usize,
    target: ConjTarget,
) -> Option<(Symbol, Automorphism, usize)> {
    let g = ctx.graph();
    let mut best: Option<(Symbol, Automorphism, usize)> = None;
    if target == ConjTarget::Tame {
        let mut merged: Vec<(Letter, VertexSet)> = Vec::new();
        for (s, a) in family {
            let SymbolKind::Ext(c, l) = &s.kind else { continue };
            let next = a.compose(g, cur).ok()?;
            if conj_length(ctx, &next).is_some_and(|m| m < len) {
                match merged.iter_mut().find(|(k, _)| k == l) {
                    Some((_, set)) => *set = set.union(*c),
                    None => merged.push((*l, *c)),
                }
            }
        }
        for (l, set) in merged {
            let s = Symbol::ext(set, l);
            let a = strip(&Automorphism::from_symbol(ctx, &s).ok()?);
            let next = a.compose(g, cur).ok()?;
            if let Some(m) = conj_length(ctx, &next) {
                if m < len && best.as_ref().is_none_or(|b| m < b.2) {
                    best = Some((s, next, m));
                }
            }
        }
        return best;
    }
    for (s, a) in family {
        let next = a.compose(g, cur).ok()?;
        if let Some(m) = conj_length(ctx, &next) {
            if m < len && best.as_ref().is_none_or(|b| m < b.2) {
                best = Some((s.clone(), next, m));
            }
        }
    }
    best
}

/// Factors a conjugating automorphism over a generator family by length
/// descent: each step precomposes with a generator that strictly shortens
/// the conjugation length. The returned word evaluates to `φ`.
pub fn factor_conjugating(ctx: &Raag, phi: &Automorphism, target: ConjTarget) -> Result<Vec<Symbol>> {
    let g = ctx.graph();
    let Some(data) = conjugation_data(ctx, phi) else {
        return Err(Error::Membership("automorphism is not basis-conjugating".into()));
    };
    let admissible = |y: VertexSet| common_conjugator(ctx, &data, y).is_some();
    let vertex = || ctx.classes().classes.iter().all(|c| admissible(*c));
    let normal = || (0..g.n()).all(|x| admissible(ctx.adm(x)));
    let singular = || (0..g.n()).all(|x| data.g(x).support().is_subset(ctx.adm(x)));
    let member = match target {
        ConjTarget::LInn | ConjTarget::Tame | ConjTarget::Agg => true,
        ConjTarget::LInnV => vertex(),
        ConjTarget::LInnN => normal(),
        ConjTarget::LInnS => singular(),
        ConjTarget::LInnC => vertex() && singular(),
        ConjTarget::LInnI => normal() && singular(),
    };
    if !member {
        return Err(Error::Membership(format!(
            "automorphism is not in the subgroup generated by {target:?}"
        )));
    }
    let family: Vec<(Symbol, Automorphism)> = generator_family(ctx, target)
        .into_iter()
        .filter_map(|s| Automorphism::from_symbol(ctx, &s).ok().map(|a| (s, strip(&a))))
        .collect();
    let mut cur = strip(phi);
    let mut len = data.length();
    let mut word: Vec<Symbol> = Vec::new();
    while len > 0 {
        let Some((s, next, m)) = best_move(ctx, &family, &cur, len, target) else {
            return Err(Error::Descent(format!(
                "no {target:?} generator shortens the conjugation length {len}; images: {}",
                cur.images_display(g).join(", ")
            )));
        };
        word.push(s.inverse());
        cur = next;
        len = m;
    }
    Ok(word)
}

/// The two factors of a (St(𝓚), Conj) factorization.
#[derive(Clone, Debug)]
pub struct BalancedFactorization {
    /// A word in inversions and transvections, lying in `St(𝓚)`.
    pub st_part: Vec<Symbol>,
    /// A word in inner and tame extended generators, lying in `Conj(G)`.
    pub conj_part: Vec<Symbol>,
}

/// Expands a symbol into inversions, transvections and elementary
/// conjugating automorphisms.
fn expand(ctx: &Raag, s: &Symbol) -> Result<Vec<Symbol>> {
    let g = ctx.graph();
    let comps_inside = |supp: VertexSet, x: Vertex| -> Vec<VertexSet> {
        g.components(g.star(x))
            .into_iter()
            .filter(|c| c.is_subset(supp))
            .collect()
    };
    Ok(match s.effective_kind(ctx)? {
        SymbolKind::Inv(x) => vec![Symbol::inv(x)],
        SymbolKind::Tr(x, y) => vec![Symbol::tr(x, y)],
        SymbolKind::CompTr(x, w) => w.letters().iter().map(|&y| Symbol::tr(x, y)).collect(),
        SymbolKind::LInn(c, x) => vec![Symbol::lc(c, x)],
        SymbolKind::Inner(w) => vec![Symbol::inner(w)],
        SymbolKind::Ext(l, x) | SymbolKind::Agg(l, x) => comps_inside(l.difference(g.star(x.vertex())), x.vertex())
            .into_iter()
            .map(|c| Symbol::lc(c, x))
            .collect(),
        SymbolKind::Coll(u, x) => {
            let supp = super::symbol::collected_support(ctx, u, x.vertex());
            comps_inside(supp, x.vertex())
                .into_iter()
                .map(|c| Symbol::lc(c, x))
                .collect()
        }
        SymbolKind::Norm(y, x) => {
            let supp = super::symbol::normal_support(ctx, y, x.vertex());
            comps_inside(supp, x.vertex())
                .into_iter()
                .map(|c| Symbol::lc(c, x))
                .collect()
        }
        _ => {
            return Err(Error::Precondition(format!(
                "`{}` is not in Inv, Tr or the conjugating generators",
                s.display(ctx)
            )))
        }
    })
}

/// Rewrites `α_{C,ℓ}` as a word in transvections, inner and tame extended
/// generators, assuming the graph is balanced.
fn split_elementary(ctx: &Raag, c: VertexSet, ell: Letter) -> Result<Vec<Symbol>> {
    let g = ctx.graph();
    let y = ell.vertex();
    if is_tame(ctx, c, ell) {
        return Ok(vec![Symbol::ext(c, ell)]);
    }
    let class_rest = ctx.classes().class_of(y).difference(g.star(y));
    let singular_pair = |v: Vertex| [Symbol::tr(Letter::pos(v), ell), Symbol::tr(Letter::neg(v), ell)];
    if c.len() == 1 && c.is_subset(class_rest) {
        return Ok(singular_pair(c.first().expect("non-empty")).to_vec());
    }
    let comps = g.components(g.star(y));
    let cy = comps
        .iter()
        .copied()
        .find(|d| d.meets(ctx.adm(y)) && !d.is_subset(class_rest));
    if cy != Some(c) {
        return Err(Error::Descent(format!(
            "{} is neither tame, singular nor the outer component for {}",
            g.fmt_set(c),
            ell.display(g)
        )));
    }
    let l = g.all().difference(c).difference(g.star(y)).difference(class_rest);
    let mut out = vec![Symbol::inner(crate::words::NormalForm::letter(ell))];
    if !l.is_empty() {
        out.push(Symbol::ext(l, ell.inverse()));
    }
    for v in class_rest.iter() {
        out.extend(singular_pair(v).iter().rev().map(Symbol::inverse));
    }
    Ok(out)
}

/// Factors a word over `Inv ∪ Tr ∪ LInn` as `st_part · conj_part` with
/// `st_part ∈ St(𝓚)` and `conj_part ∈ Conj(G)`. Requires `Γ` connected and
/// balanced; an unbalanced graph yields [`Error::Unbalanced`] with its
/// witness.
pub fn balanced_factorization(ctx: &Raag, word: &[Symbol]) -> Result<BalancedFactorization> {
    let g = ctx.graph();
    if let Err(w) = is_balanced(g) {
        return Err(Error::Unbalanced {
            vertex: g.name(w.vertex).to_string(),
            left: g.name(w.pair.0).to_string(),
            right: g.name(w.pair.1).to_string(),
        });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut st: Vec<Symbol> = Vec::new();
    let mut conj: Vec<Symbol> = Vec::new();
    for s in word {
        for e in expand(ctx, s)? {
            let pieces = match e.kind {
                SymbolKind::LInn(c, x) => split_elementary(ctx, c, x)?,
                _ => vec![e],
            };
            for p in pieces {
                match p.kind {
                    SymbolKind::Inner(_) | SymbolKind::Ext(..) => conj.push(p),
                    _ => {
                        let (t, c) = push_word(ctx, &conj, &[p])?;
                        st.extend(t);
                        conj = c;
                    }
                }
            }
        }
    }
    let mut all = st.clone();
    all.extend(conj.iter().cloned());
    if Automorphism::from_word(ctx, &all)? != Automorphism::from_word(ctx, word)? {
        return Err(Error::Descent("factorization does not evaluate to the input".into()));
    }
    Ok(BalancedFactorization {
        st_part: st,
        conj_part: conj,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_lattice::Graph;

    fn gd() -> Raag {
        Raag::new(
            Graph::new(
                &["v", "c", "a", "b", "r", "s", "t"],
                &[("v", "c"), ("c", "a"), ("c", "b"), ("a", "r"), ("r", "s"), ("b", "t")],
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn identity_factors_to_empty_word() {
        let ctx = gd();
        let id = Automorphism::identity(ctx.n());
        assert!(factor_conjugating(&ctx, &id, ConjTarget::LInn).unwrap().is_empty());
    }

    #[test]
    fn single_generator_round_trips() {
        let ctx = gd();
        let a = Automorphism::parse(&ctx, "lc({a,r,s},v)").unwrap();
        let w = factor_conjugating(&ctx, &a, ConjTarget::LInn).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(Automorphism::from_word(&ctx, &w).unwrap(), a);
    }

    #[test]
    fn gd_is_unbalanced() {
        let ctx = gd();
        let w = super::super::symbol::parse_symbols(&ctx, "lc({a,r,s},v)").unwrap();
        match balanced_factorization(&ctx, &w) {
            Err(Error::Unbalanced { vertex, left, right }) => {
                assert_eq!((vertex.as_str(), left.as_str(), right.as_str()), ("v", "a", "b"))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn star_graph_factorization() {
        let g = Graph::new(&["h", "p", "q", "w"], &[("h", "p"), ("h", "q"), ("h", "w")]).unwrap();
        let ctx = Raag::new(g).unwrap();
        let w = super::super::symbol::parse_symbols(&ctx, "tr(p,q) lc({w},p) tr(q,w^-1) lc({q},w)^-1").unwrap();
        let f = balanced_factorization(&ctx, &w).unwrap();
        let mut all = f.st_part.clone();
        all.extend(f.conj_part.clone());
        assert_eq!(
            Automorphism::from_word(&ctx, &all).unwrap(),
            Automorphism::from_word(&ctx, &w).unwrap()
        );
    }
}
