//! Moving transvections and inversions to the left of tame and inner
//! conjugating automorphisms.

use super::symbol::{Symbol, SymbolKind};
use super::{Automorphism, Raag};
use crate::error::{Error, Result};
use crate::graph_lattice::VertexSet;
use crate::words::Letter;

/// True when `α_{L,ℓ}` is a tame extended conjugating automorphism.
pub fn is_tame(ctx: &Raag, l: VertexSet, ell: Letter) -> bool {
    !l.meets(ctx.adm(ell.vertex()))
}

/// Expands a symbol over `Tr ∪ CompTr` into transvections.
fn transvections(ctx: &Raag, s: &Symbol) -> Result<Vec<Symbol>> {
    Ok(match s.effective_kind(ctx)? {
        SymbolKind::Tr(v, x) => vec![Symbol::tr(v, x)],
        SymbolKind::Inv(z) => vec![Symbol::inv(z)],
        SymbolKind::CompTr(v, w) => w.letters().iter().map(|&x| Symbol::tr(v, x)).collect(),
        _ => {
            return Err(Error::Precondition(format!(
                "`{}` is not a transvection or inversion",
                s.display(ctx)
            )))
        }
    })
}

fn flip_on(y: usize, l: Letter) -> Letter {
    if l.vertex() == y {
        l.inverse()
    } else {
        l
    }
}

/// `α_{L,y}·t = T·C` for a positive tame `α_{L,y}` and a single transvection
/// or inversion `t`; returns `(T, C)`.
fn ext_pos_step(ctx: &Raag, l: VertexSet, y: usize, t: &SymbolKind) -> Result<(Vec<Symbol>, Vec<Symbol>)> {
    let g = ctx.graph();
    let yl = Letter::pos(y);
    let alpha = Symbol::ext(l, yl);
    match *t {
        SymbolKind::Inv(z) => {
            if z == y {
                Ok((vec![Symbol::inv(z)], vec![Symbol::ext(l, yl.inverse())]))
            } else {
                Ok((vec![Symbol::inv(z)], vec![alpha]))
            }
        }
        SymbolKind::Tr(v, x) => {
            let (vv, xv) = (v.vertex(), x.vertex());
            let tau = Symbol::tr(v, x);
            let in_l = |u| l.contains(u);
            let in_star = |u| g.star(y).contains(u);
            if (in_l(vv) && (in_l(xv) || in_star(xv))) || (!in_l(vv) && vv != y && !in_l(xv)) {
                Ok((vec![tau], vec![alpha]))
            } else if in_l(vv) {
                let tvy = Symbol::tr(v, yl);
                Ok((vec![tvy.clone(), tau, tvy.inverse()], vec![alpha]))
            } else if vv != y {
                let tvy = Symbol::tr(v, yl);
                Ok((vec![tvy.inverse(), tau, tvy], vec![alpha]))
            } else {
                let lb = if in_star(xv) { l.difference(g.star(xv)) } else { l };
                let beta = (!lb.is_empty()).then(|| Symbol::ext(lb, x));
                if v.is_positive() {
                    let mut c: Vec<Symbol> = beta.into_iter().collect();
                    c.push(alpha);
                    Ok((vec![tau], c))
                } else {
                    let mut c = vec![alpha];
                    c.extend(beta.map(|b| b.inverse()));
                    Ok((vec![tau], c))
                }
            }
        }
        _ => Err(Error::Precondition("expected a transvection or inversion".into())),
    }
}

/// `c·t = T·C` for a conjugating letter `c` (inner or tame extended) and a
/// transvection or inversion `t`.
fn step(ctx: &Raag, c: &Symbol, t: &Symbol) -> Result<(Vec<Symbol>, Vec<Symbol>)> {
    let g = ctx.graph();
    let tk = t.effective_kind(ctx)?;
    match c.effective_kind(ctx)? {
        SymbolKind::Inner(w) => {
            let ta = Automorphism::from_symbol(ctx, t)?;
            Ok((vec![t.clone()], vec![Symbol::inner(ta.apply_nf(g, &w))]))
        }
        SymbolKind::Ext(l, ell) => {
            if !is_tame(ctx, l, ell) {
                return Err(Error::Precondition(format!("`{}` is not tame", c.display(ctx))));
            }
            let y = ell.vertex();
            if ell.is_positive() {
                return ext_pos_step(ctx, l, y, &tk);
            }
            if let SymbolKind::Inv(z) = tk {
                let out = if z == y {
                    Symbol::ext(l, ell.inverse())
                } else {
                    c.clone()
                };
                return Ok((vec![Symbol::inv(z)], vec![out]));
            }
            let SymbolKind::Tr(v, x) = tk else {
                return Err(Error::Precondition("expected a transvection or inversion".into()));
            };
            let flipped = SymbolKind::Tr(flip_on(y, v), flip_on(y, x));
            let (t1, c1) = ext_pos_step(ctx, l, y, &flipped)?;
            let (t2, c2) = push_word(ctx, &c1, &[Symbol::inv(y)])?;
            let mut tw = vec![Symbol::inv(y)];
            tw.extend(t1);
            tw.extend(t2);
            Ok((tw, c2))
        }
        _ => Err(Error::Precondition(format!(
            "`{}` is not an inner or tame extended generator",
            c.display(ctx)
        ))),
    }
}

/// Rewrites `C·T` as `T'·C'` where `C` is a word of inner and tame extended
/// generators and `T` a word of transvections and inversions.
pub fn push_word(ctx: &Raag, c: &[Symbol], t: &[Symbol]) -> Result<(Vec<Symbol>, Vec<Symbol>)> {
    let Some((last, c0)) = c.split_last() else {
        return Ok((t.to_vec(), Vec::new()));
    };
    let Some((first, t_rest)) = t.split_first() else {
        return Ok((Vec::new(), c.to_vec()));
    };
    let (t1, c1) = step(ctx, last, first)?;
    let (t2, c2) = push_word(ctx, &c1, t_rest)?;
    let mut mid = t1;
    mid.extend(t2);
    let (t3, mut c3) = push_word(ctx, c0, &mid)?;
    c3.extend(c2);
    Ok((t3, c3))
}

/// Rewrites `α·τ`, with `α` tame extended and `τ` a transvection, composite
/// transvection or inversion, as a word whose transvection part precedes a
/// word in tame generators; the result evaluates to `α·τ`.
pub fn rewrite_tame(ctx: &Raag, alpha: &Symbol, tau: &Symbol) -> Result<Vec<Symbol>> {
    let a = match alpha.effective_kind(ctx)? {
        SymbolKind::Ext(l, x) | SymbolKind::LInn(l, x) if is_tame(ctx, l, x) => Symbol::ext(l, x),
        _ => {
            return Err(Error::Precondition(format!(
                "`{}` is not a tame conjugating generator",
                alpha.display(ctx)
            )))
        }
    };
    let ts = transvections(ctx, tau)?;
    let (mut tw, cw) = push_word(ctx, &[a], &ts)?;
    tw.extend(cw);
    Ok(tw)
}

/// All tame extended generators `α_{C,x^±}` with `C` a single component.
pub fn tame_components(ctx: &Raag) -> Vec<Symbol> {
    let g = ctx.graph();
    let mut out = Vec::new();
    for y in 0..g.n() {
        for c in g.components(g.star(y)) {
            if !c.meets(ctx.adm(y)) {
                out.push(Symbol::ext(c, Letter::pos(y)));
                out.push(Symbol::ext(c, Letter::neg(y)));
            }
        }
    }
    out
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

    fn valid_transvections(ctx: &Raag) -> Vec<Symbol> {
        let n = ctx.n();
        let mut out = Vec::new();
        for v in 0..n {
            for x in 0..n {
                for (sv, sx) in [(true, true), (true, false), (false, true), (false, false)] {
                    let s = Symbol::tr(Letter::new(v, sv), Letter::new(x, sx));
                    if s.images(ctx).is_ok() {
                        out.push(s);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn every_tame_rewrite_on_gd_is_an_identity() {
        let ctx = gd();
        let taus = valid_transvections(&ctx);
        let mut checked = 0;
        for a in tame_components(&ctx) {
            for t in &taus {
                let w = rewrite_tame(&ctx, &a, t).unwrap();
                let lhs = Automorphism::from_word(&ctx, &[a.clone(), t.clone()]).unwrap();
                assert_eq!(
                    lhs,
                    Automorphism::from_word(&ctx, &w).unwrap(),
                    "{} {}",
                    a.display(&ctx),
                    t.display(&ctx)
                );
                checked += 1;
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn inner_pushes_through() {
        let ctx = gd();
        let c = vec![Symbol::inner(ctx.word("a r").unwrap())];
        let t = vec![Symbol::tr(Letter::pos(0), Letter::pos(2)), Symbol::inv(4)];
        let (t2, c2) = push_word(&ctx, &c, &t).unwrap();
        let mut lhs = c.clone();
        lhs.extend(t);
        let mut rhs = t2;
        rhs.extend(c2);
        assert_eq!(
            Automorphism::from_word(&ctx, &lhs).unwrap(),
            Automorphism::from_word(&ctx, &rhs).unwrap()
        );
    }
}
