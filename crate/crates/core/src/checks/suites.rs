//! Sampled and swept suites over the fixture graphs: relators, the
//! commutation rules between transvections and extended conjugating
//! automorphisms, factorization round trips and classification coherence.

use super::{ensure, fixtures, CheckOptions, Outcome};
use crate::automorphisms::classify::classify;
use crate::automorphisms::factor::{factor_conjugating, generator_family, ConjTarget};
use crate::automorphisms::rewrite::{is_tame, rewrite_tame};
use crate::automorphisms::{Automorphism, Raag, Symbol};
use crate::graph_lattice::{dominates, VertexSet};
use crate::relations::{instantiate_relators, verify_relator, Bounds, Family};
use crate::words::{Letter, NormalForm};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Graphs of the relator suite.
pub const RELATOR_GRAPHS: [&str; 4] = ["GD.graph", "GA.graph", "GD_edge_point.graph", "twins.graph"];
/// Round trips per target and graph.
pub const ROUND_TRIPS: usize = 250;
/// Sampled conjugating automorphisms per graph in the coherence suite.
pub const COHERENCE_SAMPLES: usize = 250;
/// Largest tolerated share of undecided coherence samples.
pub const MAX_UNKNOWN_RATE: f64 = 0.05;

fn context(name: &str) -> Raag {
    Raag::new(fixtures::graph(name)).expect("fixture graphs are valid")
}

pub(super) fn relators() -> Outcome {
    let mut total = 0;
    for name in RELATOR_GRAPHS {
        let ctx = context(name);
        let insts = instantiate_relators(&ctx, &Family::ALL, &Bounds::default()).map_err(|e| e.to_string())?;
        for i in &insts {
            let v = verify_relator(&ctx, i);
            ensure(v.holds, || {
                format!(
                    "{name}: {} {} fails {}",
                    i.family,
                    i.bindings,
                    v.error.clone().unwrap_or_default()
                )
            })?;
        }
        total += insts.len();
    }
    ensure(total >= 1000, || format!("only {total} instances"))?;
    Ok(format!(
        "{total} instances on {} graphs, all hold",
        RELATOR_GRAPHS.len()
    ))
}

fn eval(ctx: &Raag, word: &[Symbol]) -> Result<Automorphism, String> {
    Automorphism::from_word(ctx, word).map_err(|e| e.to_string())
}

fn same(ctx: &Raag, lhs: &[Symbol], rhs: &[Symbol]) -> Result<bool, String> {
    Ok(eval(ctx, lhs)?.equal(&eval(ctx, rhs)?))
}

/// `τ̃_{v,w} = τ_{v,w_n}⋯τ_{v,w_1}` as a word of transvections.
fn composite(v: Letter, w: &NormalForm) -> Vec<Symbol> {
    w.letters().iter().rev().map(|&l| Symbol::tr(v, l)).collect()
}

/// Every element of `G(within)` of length at most `max_len`.
fn elements(ctx: &Raag, within: VertexSet, max_len: usize) -> Vec<NormalForm> {
    let g = ctx.graph();
    let letters: Vec<Letter> = within.iter().flat_map(|v| [Letter::pos(v), Letter::neg(v)]).collect();
    let mut out = vec![NormalForm::identity()];
    let mut level = out.clone();
    for len in 1..=max_len {
        let next: BTreeSet<Vec<Letter>> = level
            .iter()
            .flat_map(|w| letters.iter().map(move |&l| w.mul(g, &NormalForm::letter(l))))
            .filter(|u| u.len() == len)
            .map(|u| u.letters().to_vec())
            .collect();
        level = next.iter().map(|w| NormalForm::of(g, w)).collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// Unions of components of `Γ_{y^⊥}`, excluding the empty union.
fn component_unions(ctx: &Raag, y: usize) -> Vec<VertexSet> {
    let comps = ctx.graph().components(ctx.graph().star(y));
    (1u64..1 << comps.len())
        .map(|m| {
            comps
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .fold(VertexSet::EMPTY, |a, (_, c)| a.union(*c))
        })
        .collect()
}

fn letters(n: usize) -> Vec<Letter> {
    (0..n).flat_map(|v| [Letter::pos(v), Letter::neg(v)]).collect()
}

#[derive(Default)]
struct RuleCounts {
    cases: [usize; 4],
    adjacent: usize,
    uncovered: usize,
    rewrites: usize,
    atta: usize,
    attab: usize,
}

/// Which lemma case applies to `α_{L,y}` and `τ_{v,x}`, with `ε` of the
/// composite-transvection corollary.
fn case_of(ctx: &Raag, l: VertexSet, y: usize, v: Letter, x: Letter) -> Option<(usize, i32)> {
    let star = ctx.graph().star(y);
    let (vv, xv) = (v.vertex(), x.vertex());
    if (l.contains(vv) && (l.contains(xv) || star.contains(xv))) || (!l.contains(vv) && vv != y && !l.contains(xv)) {
        Some((1, 0))
    } else if l.contains(vv) {
        Some((2, -1))
    } else if vv != y {
        Some((3, 1))
    } else if !l.contains(xv) {
        Some((4, 0))
    } else {
        None
    }
}

fn lemma_instance(
    ctx: &Raag,
    l: VertexSet,
    y: usize,
    v: Letter,
    x: Letter,
    counts: &mut RuleCounts,
) -> Result<(), String> {
    let g = ctx.graph();
    let yl = Letter::pos(y);
    let alpha = Symbol::ext(l, yl);
    let tau = Symbol::tr(v, x);
    let lhs = [alpha.clone(), tau.clone()];
    let name = || {
        format!(
            "α_({},{}) τ_({},{})",
            g.fmt_set(l),
            g.name(y),
            v.display(g),
            x.display(g)
        )
    };
    let Some((case, _)) = case_of(ctx, l, y, v, x) else {
        counts.uncovered += 1;
        return Ok(());
    };
    let rhs: Vec<Symbol> = match case {
        1 => vec![tau.clone(), alpha.clone()],
        2 | 3 => {
            ensure(dominates(g, y, v.vertex()), || {
                format!("{}: {} is not dominated by {}", name(), v.display(g), g.name(y))
            })?;
            let t = Symbol::tr(v, yl);
            let (pre, post) = if case == 2 {
                (t.clone(), t.inverse())
            } else {
                (t.inverse(), t)
            };
            vec![pre, tau.clone(), post, alpha.clone()]
        }
        _ => {
            let lb = if g.star(y).contains(x.vertex()) {
                counts.adjacent += 1;
                l.difference(g.star(x.vertex()))
            } else {
                l
            };
            let beta: Vec<Symbol> = (!lb.is_empty()).then(|| Symbol::ext(lb, x)).into_iter().collect();
            if v.is_positive() {
                [vec![tau.clone()], beta, vec![alpha.clone()]].concat()
            } else {
                [
                    vec![tau.clone(), alpha.clone()],
                    beta.iter().map(Symbol::inverse).collect(),
                ]
                .concat()
            }
        }
    };
    let holds = same(ctx, &lhs, &rhs).map_err(|e| format!("{}: {e}", name()))?;
    ensure(holds, || {
        format!("case ({}) fails for {}", ["i", "ii", "iii", "iv"][case - 1], name())
    })?;
    counts.cases[case - 1] += 1;
    if is_tame(ctx, l, yl) {
        let w = rewrite_tame(ctx, &alpha, &tau).map_err(|e| format!("{}: {e}", name()))?;
        ensure(same(ctx, &lhs, &w)?, || {
            format!("tame rewrite of {} does not evaluate back", name())
        })?;
        counts.rewrites += 1;
    }
    Ok(())
}

fn corollary_instances(ctx: &Raag, l: VertexSet, y: usize, counts: &mut RuleCounts) -> Result<(), String> {
    let g = ctx.graph();
    let alpha = Symbol::ext(l, Letter::pos(y));
    for v in letters(g.n()) {
        let vv = v.vertex();
        let multipliers = elements(ctx, ctx.adm(vv).without(vv), 2);
        for a in multipliers.iter().filter(|a| !a.is_identity()) {
            let tau = composite(v, a);
            if vv != y {
                let mut b = NormalForm::identity();
                for &ai in a.letters() {
                    let (_, eps) = case_of(ctx, l, y, v, ai).ok_or("uncovered letter in a composite transvection")?;
                    let yp = NormalForm::letter(Letter::pos(y)).pow(g, eps as i64);
                    b = b.mul(g, &yp).mul(g, &NormalForm::letter(ai)).mul(g, &yp.inverse(g));
                }
                let lhs = [vec![alpha.clone()], tau.clone()].concat();
                let rhs = [composite(v, &b), vec![alpha.clone()]].concat();
                ensure(same(ctx, &lhs, &rhs)?, || {
                    format!(
                        "α_({},{}) τ̃_({},{}) ≠ τ̃_({},{}) α",
                        g.fmt_set(l),
                        g.name(y),
                        v.display(g),
                        a.display(g),
                        v.display(g),
                        b.display(g)
                    )
                })?;
                counts.atta += 1;
            } else if v.is_positive() {
                let lhs = [vec![alpha.clone()], tau.clone()].concat();
                let betas = a.letters().iter().rev().filter_map(|&ai| {
                    let lb = l.difference(g.star(ai.vertex()));
                    (!lb.is_empty()).then(|| Symbol::ext(lb, ai))
                });
                let rhs: Vec<Symbol> = tau.iter().cloned().chain(betas).chain([alpha.clone()]).collect();
                ensure(same(ctx, &lhs, &rhs)?, || {
                    format!(
                        "α_({},{}) τ̃_({},{}) does not factor through tame generators",
                        g.fmt_set(l),
                        g.name(y),
                        v.display(g),
                        a.display(g)
                    )
                })?;
                counts.attab += 1;
            }
        }
    }
    Ok(())
}

pub(super) fn commutation_rules() -> Outcome {
    let mut counts = RuleCounts::default();
    let mut transvections = 0;
    for name in ["GA.graph", "GD.graph"] {
        let ctx = context(name);
        let g = ctx.graph();
        let valid: Vec<(Letter, Letter)> = letters(g.n())
            .into_iter()
            .flat_map(|v| letters(g.n()).into_iter().map(move |x| (v, x)))
            .filter(|&(v, x)| v.vertex() != x.vertex() && Automorphism::from_symbol(&ctx, &Symbol::tr(v, x)).is_ok())
            .collect();
        transvections += valid.len();
        for y in 0..g.n() {
            for l in component_unions(&ctx, y) {
                for &(v, x) in &valid {
                    lemma_instance(&ctx, l, y, v, x, &mut counts).map_err(|e| format!("{name}: {e}"))?;
                }
                if is_tame(&ctx, l, Letter::pos(y)) {
                    corollary_instances(&ctx, l, y, &mut counts).map_err(|e| format!("{name}: {e}"))?;
                }
            }
        }
    }
    let [c1, c2, c3, c4] = counts.cases;
    ensure(
        c1 > 0 && c2 > 0 && c3 > 0 && c4 > 0 && counts.atta > 0 && counts.attab > 0,
        || {
            format!(
                "a case is never exercised: {:?}, {} and {}",
                counts.cases, counts.atta, counts.attab
            )
        },
    )?;
    Ok(format!(
        "{transvections} transvections; cases (i) {c1}, (ii) {c2}, (iii) {c3}, (iv) {c4} ({} with x adjacent to y), {} uncovered pairs skipped; {} tame rewrites; composite corollaries {} and {}",
        counts.adjacent, counts.uncovered, counts.rewrites, counts.atta, counts.attab
    ))
}

fn random_word(rng: &mut ChaCha8Rng, family: &[Symbol], max_len: usize) -> Vec<Symbol> {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| {
            let s = family.choose(rng).expect("non-empty family").clone();
            if rng.gen_bool(0.5) {
                s.inverse()
            } else {
                s
            }
        })
        .collect()
}

pub(super) fn round_trips(opts: &CheckOptions) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut total = 0;
    let mut longest = 0;
    for name in ["GD.graph", "GA.graph"] {
        let ctx = context(name);
        for target in [ConjTarget::LInn, ConjTarget::LInnV, ConjTarget::LInnN] {
            let family = generator_family(&ctx, target);
            ensure(!family.is_empty(), || format!("{name}: empty {target:?} family"))?;
            for _ in 0..ROUND_TRIPS {
                let word = random_word(&mut rng, &family, 6);
                let phi = eval(&ctx, &word)?;
                let shown = || {
                    Automorphism::from_word(&ctx, &word)
                        .map(|a| a.word_display(&ctx))
                        .unwrap_or_default()
                };
                let factors = factor_conjugating(&ctx, &phi, target)
                    .map_err(|e| format!("{name} {target:?} {}: {e}", shown()))?;
                ensure(
                    factors
                        .iter()
                        .all(|s| family.contains(s) || family.contains(&s.inverse())),
                    || format!("{name} {target:?} {}: factor outside the family", shown()),
                )?;
                ensure(eval(&ctx, &factors)?.equal(&phi), || {
                    format!("{name} {target:?} {}: factorization does not evaluate back", shown())
                })?;
                longest = longest.max(factors.len());
                total += 1;
            }
        }
    }
    Ok(format!(
        "{total} round trips over three targets on GD and GA; longest factorization {longest}"
    ))
}

pub(super) fn coherence(opts: &CheckOptions) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x11);
    let (mut total, mut unknown, mut s_yes, mut c_yes) = (0usize, 0usize, 0usize, 0usize);
    for name in ["GD.graph", "GA.graph"] {
        let ctx = context(name);
        let family = generator_family(&ctx, ConjTarget::LInn);
        for _ in 0..COHERENCE_SAMPLES {
            let word = random_word(&mut rng, &family, 6);
            let phi = eval(&ctx, &word)?;
            let r = classify(&ctx, &phi).map_err(|e| e.to_string())?;
            total += 1;
            ensure(r.conjugating.is_yes(), || {
                format!(
                    "{name} {}: a conjugating word is not classified conjugating",
                    phi.word_display(&ctx)
                )
            })?;
            let decided = [&r.conj_s, &r.st_k, &r.conj_c, &r.conj_v].map(|v| v.decided());
            let [Some(s), Some(k), Some(c), Some(v)] = decided else {
                unknown += 1;
                continue;
            };
            ensure(s == k, || {
                format!(
                    "{name} {}: Conj_S {} but St(K) {}",
                    phi.word_display(&ctx),
                    r.conj_s.label(),
                    r.st_k.label()
                )
            })?;
            ensure(c == (v && k), || {
                format!(
                    "{name} {}: Conj_C {} but Conj_V {} and St(K) {}",
                    phi.word_display(&ctx),
                    r.conj_c.label(),
                    r.conj_v.label(),
                    r.st_k.label()
                )
            })?;
            s_yes += s as usize;
            c_yes += c as usize;
        }
    }
    let rate = unknown as f64 / total as f64;
    ensure(rate <= MAX_UNKNOWN_RATE, || {
        format!("{unknown} of {total} samples undecided")
    })?;
    Ok(format!(
        "{total} samples, {s_yes} in Conj_S, {c_yes} in Conj_C, {unknown} undecided ({:.1}%)",
        100.0 * rate
    ))
}
