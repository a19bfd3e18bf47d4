//! Conjugation data, exact common-conjugator decisions and the subgroup
//! classifier.

use super::factor::{factor_conjugating, ConjTarget};
use super::symbol::{Symbol, SymbolKind};
use super::{Automorphism, Raag};
use crate::graph_lattice::{Vertex, VertexSet};
use crate::words::{conjugate_generator_form, is_right_divisor, right_lcm_all, Letter, NormalForm};
use std::collections::HashSet;
use std::fmt;

/// Per-vertex conjugators `g_x` with `xφ = g_x⁻¹∘x∘g_x`, each free of left
/// divisors in `C(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationData {
    /// `g_x`, indexed by vertex.
    pub conjugators: Vec<NormalForm>,
    /// `ε_x`; always `+1` for basis-conjugating automorphisms.
    pub exponents: Vec<i32>,
}

impl ConjugationData {
    /// Conjugation length `|φ| = Σ lg(g_x)`.
    pub fn length(&self) -> usize {
        self.conjugators.iter().map(NormalForm::len).sum()
    }

    /// `g_x`.
    pub fn g(&self, x: Vertex) -> &NormalForm {
        &self.conjugators[x]
    }
}

/// Conjugation data of a basis-conjugating automorphism, `None` otherwise.
pub fn conjugation_data(ctx: &Raag, phi: &Automorphism) -> Option<ConjugationData> {
    let g = ctx.graph();
    let mut conjugators = Vec::with_capacity(g.n());
    for x in 0..g.n() {
        let (f, e) = conjugate_generator_form(g, phi.image(x), x)?;
        if e != 1 {
            return None;
        }
        conjugators.push(f);
    }
    Some(ConjugationData {
        exponents: vec![1; g.n()],
        conjugators,
    })
}

/// `|φ|`, or `None` when `φ` is not basis-conjugating.
pub fn conj_length(ctx: &Raag, phi: &Automorphism) -> Option<usize> {
    conjugation_data(ctx, phi).map(|d| d.length())
}

/// Exact decision of a common conjugator: returns `f` with `yφ = y^f` for
/// all `y ∈ Y`, or `None` when no such `f` exists.
///
/// Every such `f` has each `g_y` as a right divisor, so `f` exists if and
/// only if the least common right multiple `m` of the `g_y` exists and each
/// `m·g_y⁻¹` lies in `C(y)`; `m` is then a witness.
pub fn common_conjugator(ctx: &Raag, data: &ConjugationData, y: VertexSet) -> Option<NormalForm> {
    let g = ctx.graph();
    let m = right_lcm_all(g, y.iter().map(|v| data.g(v)))?;
    y.iter()
        .all(|v| m.mul(g, &data.g(v).inverse(g)).support().is_subset(g.star(v)))
        .then_some(m)
}

/// Bounded search for a common conjugator of length at most `bound`:
/// candidates are `c∘g_y` for `c` ranging over words in `y^⊥` (for the
/// `y ∈ Y` with the smallest star). Sound but incomplete; used as a
/// cross-check of [`common_conjugator`].
pub fn bounded_common_conjugator(
    ctx: &Raag,
    data: &ConjugationData,
    y: VertexSet,
    bound: usize,
    max_candidates: usize,
) -> Option<NormalForm> {
    let g = ctx.graph();
    let Some(pivot) = y.iter().min_by_key(|&v| (g.star(v).len(), v)) else {
        return Some(NormalForm::identity());
    };
    let base = data.g(pivot).clone();
    if base.len() > bound {
        return None;
    }
    let letters: Vec<Letter> = g
        .star(pivot)
        .iter()
        .flat_map(|v| [Letter::neg(v), Letter::pos(v)])
        .collect();
    let check = |f: &NormalForm| {
        y.iter()
            .all(|v| f.mul(g, &data.g(v).inverse(g)).support().is_subset(g.star(v)))
    };
    let mut seen: HashSet<NormalForm> = HashSet::from([NormalForm::identity()]);
    let mut frontier = vec![NormalForm::identity()];
    let mut tried = 0usize;
    for depth in 0..=bound - base.len() {
        let mut next = Vec::new();
        for c in &frontier {
            let f = c.mul(g, &base);
            tried += 1;
            if check(&f) {
                return Some(f);
            }
            if tried >= max_candidates {
                return None;
            }
            if depth < bound - base.len() {
                for &l in &letters {
                    let d = NormalForm::letter(l).mul(g, c);
                    if d.len() == c.len() + 1 && seen.insert(d.clone()) {
                        next.push(d);
                    }
                }
            }
        }
        frontier = next;
    }
    None
}

/// Default radius `2·|φ| + 2` of the bounded conjugator search.
pub fn default_bound(data: &ConjugationData) -> usize {
    2 * data.length() + 2
}

/// A three-valued verdict with a human-readable certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Membership, with a certificate.
    Yes(String),
    /// Non-membership, with the violated constraint.
    No(String),
    /// Undecided; the string names the exhausted bound or stuck search.
    Unknown(String),
}

impl Verdict {
    /// True for `Yes`.
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }
    /// True for `No`.
    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }
    /// True for `Unknown`.
    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }
    /// `Some(true)` for yes, `Some(false)` for no.
    pub fn decided(&self) -> Option<bool> {
        match self {
            Verdict::Yes(_) => Some(true),
            Verdict::No(_) => Some(false),
            Verdict::Unknown(_) => None,
        }
    }
    /// Short label `yes`, `no` or `unknown`.
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "yes",
            Verdict::No(_) => "no",
            Verdict::Unknown(_) => "unknown",
        }
    }
    /// The certificate text.
    pub fn detail(&self) -> &str {
        match self {
            Verdict::Yes(s) | Verdict::No(s) | Verdict::Unknown(s) => s,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.label(), self.detail())
    }
}

/// Verdicts for the standard subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    /// `φ ∈ Conj(G)`.
    pub conjugating: Verdict,
    /// `φ ∈ Inn(G)`.
    pub inner: Verdict,
    /// `φ ∈ Conj_S(G)`.
    pub conj_s: Verdict,
    /// `φ ∈ Conj_V(G)`.
    pub conj_v: Verdict,
    /// `φ ∈ Conj_C(G)`.
    pub conj_c: Verdict,
    /// `φ ∈ Conj_N(G)`.
    pub conj_n: Verdict,
    /// `φ ∈ Conj_I(G)`.
    pub conj_i: Verdict,
    /// `φ ∈ Conj_A(G)`.
    pub conj_a: Verdict,
    /// `φ ∈ St(𝓚)`.
    pub st_k: Verdict,
    /// `φ ∈ St(𝓛)`.
    pub st_l: Verdict,
    /// `φ ∈ St^conj(𝓚)`.
    pub st_conj_k: Verdict,
    /// `φ ∈ ⟨LInn_T⟩`.
    pub tame: Verdict,
}

impl ClassificationReport {
    /// `(name, verdict)` pairs in a fixed order.
    pub fn entries(&self) -> Vec<(&'static str, &Verdict)> {
        vec![
            ("Conj", &self.conjugating),
            ("Inn", &self.inner),
            ("Conj_S", &self.conj_s),
            ("Conj_V", &self.conj_v),
            ("Conj_C", &self.conj_c),
            ("Conj_N", &self.conj_n),
            ("Conj_I", &self.conj_i),
            ("Conj_A", &self.conj_a),
            ("St(K)", &self.st_k),
            ("St(L)", &self.st_l),
            ("St^conj(K)", &self.st_conj_k),
            ("tame", &self.tame),
        ]
    }
}

fn fmt_conjugators(ctx: &Raag, data: &ConjugationData) -> String {
    let g = ctx.graph();
    (0..g.n())
        .filter(|&x| !data.g(x).is_identity())
        .map(|x| format!("g_{}={}", g.name(x), data.g(x).display(g)))
        .collect::<Vec<_>>()
        .join(", ")
}

/// True when `G(Y)φ = G(Y)`, given `φ` and `φ⁻¹`.
pub fn preserves_parabolic(phi: &Automorphism, phi_inv: &Automorphism, y: VertexSet) -> bool {
    parabolic_violation(phi, phi_inv, y).is_none()
}

fn parabolic_violation(phi: &Automorphism, phi_inv: &Automorphism, y: VertexSet) -> Option<Vertex> {
    y.iter()
        .find(|&v| !phi.image(v).support().is_subset(y) || !phi_inv.image(v).support().is_subset(y))
}

/// First set `Y` in `family` with `G(Y)φ ≠ G(Y)`.
fn stabilizer_violation(
    phi: &Automorphism,
    phi_inv: &Automorphism,
    family: &[VertexSet],
) -> Option<(VertexSet, Vertex)> {
    family
        .iter()
        .find_map(|&y| parabolic_violation(phi, phi_inv, y).map(|v| (y, v)))
}

fn admissible_family(ctx: &Raag) -> Vec<VertexSet> {
    let mut f: Vec<VertexSet> = (0..ctx.n()).map(|x| ctx.adm(x)).collect();
    f.sort_by_key(|s| (s.len(), s.bits()));
    f.dedup();
    f
}

fn star_family(ctx: &Raag) -> Vec<VertexSet> {
    let mut f: Vec<VertexSet> = (0..ctx.n()).map(|x| ctx.graph().star(x)).collect();
    f.sort_by_key(|s| (s.len(), s.bits()));
    f.dedup();
    f
}

/// `St(𝓚)` membership, exact: checking the sets `𝔞(x)` suffices since
/// parabolic subgroups intersect in parabolic subgroups.
pub fn in_st_k(ctx: &Raag, phi: &Automorphism) -> crate::Result<Verdict> {
    let inv = phi.invert(ctx)?;
    Ok(match stabilizer_violation(phi, &inv, &admissible_family(ctx)) {
        None => Verdict::Yes("G(a(x)) preserved for every x".into()),
        Some((y, v)) => Verdict::No(format!(
            "G({}) not preserved: image of {} leaves it",
            ctx.graph().fmt_set(y),
            ctx.graph().name(v)
        )),
    })
}

/// `St(𝓛)` membership, exact.
pub fn in_st_l(ctx: &Raag, phi: &Automorphism) -> crate::Result<Verdict> {
    let inv = phi.invert(ctx)?;
    Ok(match stabilizer_violation(phi, &inv, &star_family(ctx)) {
        None => Verdict::Yes("G(x^⊥) preserved for every x".into()),
        Some((y, v)) => Verdict::No(format!(
            "G({}) not preserved: image of {} leaves it",
            ctx.graph().fmt_set(y),
            ctx.graph().name(v)
        )),
    })
}

/// Composite class permutation of the graph-automorphism symbols in a word.
/// Every other generator lies in `St^conj(𝓚)` and projects trivially.
pub fn class_projection(ctx: &Raag, word: &[Symbol]) -> crate::Result<Vec<usize>> {
    let cls = ctx.classes();
    let k = cls.classes.len();
    let mut acc: Vec<usize> = (0..k).collect();
    for s in word {
        let perm = match s.effective_kind(ctx)? {
            SymbolKind::GraphAut(p) => p,
            SymbolKind::Omega(j, a, b) => ctx.iso().omega(ctx.n(), j, a, b),
            _ => continue,
        };
        let step: Vec<usize> = cls
            .classes
            .iter()
            .map(|c| cls.class_index(perm.perm[c.first().expect("non-empty")]))
            .collect();
        acc = acc.iter().map(|&i| step[i]).collect();
    }
    Ok(acc)
}

fn symbol_witness_candidates(ctx: &Raag, kind: &SymbolKind) -> Vec<NormalForm> {
    let g = ctx.graph();
    let w = match kind {
        SymbolKind::LInn(_, l)
        | SymbolKind::Agg(_, l)
        | SymbolKind::Coll(_, l)
        | SymbolKind::Norm(_, l)
        | SymbolKind::Ext(_, l) => Some(NormalForm::letter(*l)),
        SymbolKind::Inner(w) | SymbolKind::GammaJ(w, _) | SymbolKind::Whitehead(_, w) => Some(w.clone()),
        _ => None,
    };
    let mut out = vec![NormalForm::identity()];
    if let Some(w) = w {
        out.push(w.inverse(g));
        out.push(w);
    }
    out
}

/// `f` with `G(Y)φ = G(Y)^f` checked exactly, where `φ` and `φ⁻¹` are given.
fn verify_set_witness(ctx: &Raag, phi: &Automorphism, phi_inv: &Automorphism, y: VertexSet, f: &NormalForm) -> bool {
    let g = ctx.graph();
    let finv = f.inverse(g);
    y.iter().all(|v| {
        phi.image(v).conjugate(g, &finv).support().is_subset(y)
            && phi_inv
                .apply_nf(g, &NormalForm::letter(Letter::pos(v)).conjugate(g, f))
                .support()
                .is_subset(y)
    })
}

/// Per-set witnesses `f_Y` with `G(Y)φ = G(Y)^{f_Y}` for every `Y ∈ 𝓚_X`,
/// composed generator by generator along the symbol word; `None` when some
/// generator has no witness among its candidates.
pub fn st_conj_witnesses(ctx: &Raag, phi: &Automorphism) -> crate::Result<Option<Vec<(VertexSet, NormalForm)>>> {
    let g = ctx.graph();
    let mut out = Vec::new();
    let sym_auts: Vec<(Automorphism, Automorphism, SymbolKind)> = phi
        .word()
        .iter()
        .map(|s| {
            let a = Automorphism::from_symbol(ctx, s)?;
            let ai = Automorphism::from_symbol(ctx, &s.inverse())?;
            Ok((a, ai, s.effective_kind(ctx)?))
        })
        .collect::<crate::Result<_>>()?;
    for y0 in admissible_family(ctx) {
        let mut y = y0;
        let mut f = NormalForm::identity();
        for (a, ai, kind) in &sym_auts {
            match kind {
                SymbolKind::GraphAut(p) => {
                    y = p.image(y);
                    f = a.apply_nf(g, &f);
                }
                SymbolKind::Omega(j, ia, ib) => {
                    y = ctx.iso().omega(ctx.n(), *j, *ia, *ib).image(y);
                    f = a.apply_nf(g, &f);
                }
                _ => {
                    let Some(w) = symbol_witness_candidates(ctx, kind)
                        .into_iter()
                        .find(|w| verify_set_witness(ctx, a, ai, y, w))
                    else {
                        return Ok(None);
                    };
                    f = w.mul(g, &a.apply_nf(g, &f));
                }
            }
        }
        if y != y0 {
            return Ok(None);
        }
        out.push((y0, f));
    }
    Ok(Some(out))
}

/// `St^conj(𝓚)` membership of a symbol word: exact via the projection onto
/// class permutations, with per-set witnesses on success.
pub fn in_st_conj_k(ctx: &Raag, phi: &Automorphism) -> crate::Result<Verdict> {
    let g = ctx.graph();
    let proj = class_projection(ctx, phi.word())?;
    if let Some(i) = proj.iter().enumerate().find(|(i, &j)| *i != j).map(|(i, _)| i) {
        let cls = &ctx.classes().classes;
        return Ok(Verdict::No(format!(
            "compressed part moves class {} to {}",
            g.fmt_set(cls[i]),
            g.fmt_set(cls[proj[i]])
        )));
    }
    let inv = phi.invert(ctx)?;
    Ok(match st_conj_witnesses(ctx, phi)? {
        Some(ws) => {
            for (y, f) in &ws {
                if !verify_set_witness(ctx, phi, &inv, *y, f) {
                    return Ok(Verdict::Unknown(format!(
                        "witness for {} failed verification",
                        g.fmt_set(*y)
                    )));
                }
            }
            let text = ws
                .iter()
                .filter(|(_, f)| !f.is_identity())
                .map(|(y, f)| format!("f_{}={}", g.fmt_set(*y), f.display(g)))
                .collect::<Vec<_>>();
            Verdict::Yes(if text.is_empty() {
                "all f_Y = 1".into()
            } else {
                text.join(", ")
            })
        }
        None => Verdict::Yes("compressed projection trivial (per-set witnesses not found generator-wise)".into()),
    })
}

fn descent_verdict(ctx: &Raag, phi: &Automorphism, target: ConjTarget) -> Option<String> {
    let word = factor_conjugating(ctx, phi, target).ok()?;
    let check = Automorphism::from_word(ctx, &word).ok()?;
    (check == *phi).then(|| super::symbol::display_symbols(ctx, &word))
}

/// Exponent sum of the vertex `x` in an element.
fn exponent_sum(w: &NormalForm, x: Vertex) -> i64 {
    w.letters()
        .iter()
        .filter(|l| l.vertex() == x)
        .map(|l| l.sign() as i64)
        .sum()
}

/// `Conj_A` decision for connected graphs via exponent sums of the
/// conjugators over the components of `Γ_x`; a certificate word otherwise.
fn conj_a_verdict(ctx: &Raag, phi: &Automorphism, data: &ConjugationData) -> Verdict {
    let g = ctx.graph();
    let mut correction: Vec<Symbol> = Vec::new();
    for x in 0..g.n() {
        for c in g.components(VertexSet::singleton(x)) {
            let moving = c.difference(g.star(x));
            let Some(first) = moving.first() else { continue };
            let e = exponent_sum(data.g(first), x);
            if let Some(u) = moving.iter().find(|&u| exponent_sum(data.g(u), x) != e) {
                if g.is_connected() {
                    return Verdict::No(format!(
                        "exponent of {} in g_{} and g_{} differ inside one component of Γ minus {}",
                        g.name(x),
                        g.name(first),
                        g.name(u),
                        g.name(x)
                    ));
                }
                return match descent_verdict(ctx, phi, ConjTarget::Agg) {
                    Some(w) => Verdict::Yes(w),
                    None => Verdict::Unknown("aggregate descent stuck (disconnected graph)".into()),
                };
            }
            let l = if e > 0 { Letter::neg(x) } else { Letter::pos(x) };
            for _ in 0..e.unsigned_abs() {
                correction.push(Symbol::agg(c, l));
            }
        }
    }
    let Ok(corr) = Automorphism::from_word(ctx, &correction) else {
        return Verdict::Unknown("correction word invalid".into());
    };
    let Ok(psi) = phi.compose(g, &corr) else {
        return Verdict::Unknown("composition failed".into());
    };
    let psi_inner = conjugation_data(ctx, &psi).and_then(|d| common_conjugator(ctx, &d, g.all()));
    match psi_inner {
        Some(h) => {
            let mut word = vec![Symbol::inner(h)];
            word.extend(correction.iter().rev().map(Symbol::inverse));
            match Automorphism::from_word(ctx, &word) {
                Ok(chk) if chk == *phi => Verdict::Yes(super::symbol::display_symbols(ctx, &word)),
                _ => Verdict::Unknown("certificate failed verification".into()),
            }
        }
        None if g.is_connected() => Verdict::No("exponent-corrected automorphism is not inner".into()),
        None => match descent_verdict(ctx, phi, ConjTarget::Agg) {
            Some(w) => Verdict::Yes(w),
            None => Verdict::Unknown("aggregate descent stuck (disconnected graph)".into()),
        },
    }
}

/// Classifies an automorphism into the standard subgroups.
pub fn classify(ctx: &Raag, phi: &Automorphism) -> crate::Result<ClassificationReport> {
    let g = ctx.graph();
    let st_k = in_st_k(ctx, phi)?;
    let st_l = in_st_l(ctx, phi)?;
    let st_conj_k = in_st_conj_k(ctx, phi)?;
    let Some(data) = conjugation_data(ctx, phi) else {
        let x = (0..g.n()).find(|&x| conjugate_generator_form(g, phi.image(x), x).is_none_or(|(_, e)| e != 1));
        let why = format!(
            "image of {} is {}, not a conjugate of {}",
            g.name(x.unwrap_or(0)),
            phi.image(x.unwrap_or(0)).display(g),
            g.name(x.unwrap_or(0))
        );
        let no = || Verdict::No(why.clone());
        return Ok(ClassificationReport {
            conjugating: no(),
            inner: no(),
            conj_s: no(),
            conj_v: no(),
            conj_c: no(),
            conj_n: no(),
            conj_i: no(),
            conj_a: no(),
            st_k,
            st_l,
            st_conj_k,
            tame: no(),
        });
    };
    let conjugating = Verdict::Yes(if data.length() == 0 {
        "identity".into()
    } else {
        format!("|φ|={}; {}", data.length(), fmt_conjugators(ctx, &data))
    });

    let inner_f = common_conjugator(ctx, &data, g.all());
    let inner = match &inner_f {
        Some(f) => Verdict::Yes(format!("γ_g with g={}", f.display(g))),
        None => Verdict::No("the g_x have no common conjugator".into()),
    };

    let conj_s = match (0..g.n()).find(|&x| !data.g(x).support().is_subset(ctx.adm(x))) {
        None => Verdict::Yes("ν(g_x) ⊆ a(x) for every x".into()),
        Some(x) => Verdict::No(format!(
            "ν(g_{}) = {} not inside a({}) = {}",
            g.name(x),
            g.fmt_set(data.g(x).support()),
            g.name(x),
            g.fmt_set(ctx.adm(x))
        )),
    };

    let mut conj_v_fail = None;
    let mut conj_v_cert = Vec::new();
    for c in &ctx.classes().classes {
        match common_conjugator(ctx, &data, *c) {
            Some(f) => {
                if !f.is_identity() {
                    conj_v_cert.push(format!("f_{}={}", g.fmt_set(*c), f.display(g)))
                }
            }
            None => {
                conj_v_fail = Some(*c);
                break;
            }
        }
    }
    let conj_v = match conj_v_fail {
        None => Verdict::Yes(if conj_v_cert.is_empty() {
            "all f = 1".into()
        } else {
            conj_v_cert.join(", ")
        }),
        Some(c) => Verdict::No(format!("class {} has no common conjugator", g.fmt_set(c))),
    };

    let mut conj_n_fail = None;
    for x in 0..g.n() {
        if common_conjugator(ctx, &data, ctx.adm(x)).is_none() {
            conj_n_fail = Some(x);
            break;
        }
    }
    let conj_n = match conj_n_fail {
        None => Verdict::Yes("every G(a(x)) has a common conjugator".into()),
        Some(x) => Verdict::No(format!(
            "a({}) = {} has no common conjugator",
            g.name(x),
            g.fmt_set(ctx.adm(x))
        )),
    };

    let conj_c = if !conj_v.is_yes() {
        Verdict::No("not vertex conjugating".into())
    } else if !conj_s.is_yes() {
        Verdict::No("not singular".into())
    } else {
        match descent_verdict(ctx, phi, ConjTarget::LInnC) {
            Some(w) => Verdict::Yes(w),
            None => Verdict::Unknown("collected descent stuck".into()),
        }
    };

    let conj_i = if !conj_n.is_yes() {
        Verdict::No("not normal conjugating".into())
    } else if !conj_s.is_yes() {
        Verdict::No("not singular".into())
    } else {
        match descent_verdict(ctx, phi, ConjTarget::LInnI) {
            Some(w) => Verdict::Yes(w),
            None => Verdict::Unknown("intersection descent stuck".into()),
        }
    };

    let no_isolated = (0..g.n()).all(|v| !ctx.is_isolated(v));
    let conj_a = if !conj_v.is_yes() {
        Verdict::No("not vertex conjugating".into())
    } else if no_isolated && !conj_n.is_yes() {
        Verdict::No("not normal conjugating (no isolated vertices)".into())
    } else {
        conj_a_verdict(ctx, phi, &data)
    };

    let tame = match descent_verdict(ctx, phi, ConjTarget::Tame) {
        Some(w) => Verdict::Yes(w),
        None => Verdict::Unknown("tame descent stuck".into()),
    };

    Ok(ClassificationReport {
        conjugating,
        inner,
        conj_s,
        conj_v,
        conj_c,
        conj_n,
        conj_i,
        conj_a,
        st_k,
        st_l,
        st_conj_k,
        tame,
    })
}

/// Steps `(x, y, ε)` with `x^ε g_x` a right divisor of `g_y`.
pub fn divisor_steps(ctx: &Raag, data: &ConjugationData) -> Vec<(Vertex, Vertex, i32)> {
    let g = ctx.graph();
    let mut out = Vec::new();
    for x in 0..g.n() {
        for e in [1, -1] {
            let l = Letter::new(x, e > 0);
            let d = NormalForm::letter(l).mul(g, data.g(x));
            if d.len() != data.g(x).len() + 1 {
                continue;
            }
            for y in 0..g.n() {
                if y != x && data.g(y).len() >= d.len() && is_right_divisor(g, &d, data.g(y)) {
                    out.push((x, y, e));
                }
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

    #[test]
    fn conj_length_of_elementary() {
        let ctx = gd();
        let a = Automorphism::parse(&ctx, "lc({a,r,s},v)").unwrap();
        assert_eq!(conj_length(&ctx, &a), Some(3));
        let t = Automorphism::parse(&ctx, "tr(v,a)").unwrap();
        assert_eq!(conj_length(&ctx, &t), None);
    }

    #[test]
    fn classify_examples() {
        let ctx = gd();
        let a = Automorphism::parse(&ctx, "lc({a,r,s},v)").unwrap();
        let r = classify(&ctx, &a).unwrap();
        assert!(r.conjugating.is_yes());
        assert!(r.conj_s.is_no());
        assert!(r.st_k.is_no());
        let s = Automorphism::parse(&ctx, "lc({v},a)").unwrap();
        let r = classify(&ctx, &s).unwrap();
        assert!(r.conj_s.is_yes());
        assert!(r.st_k.is_yes());
        let i = Automorphism::parse(&ctx, "inner(\"v a\")").unwrap();
        let r = classify(&ctx, &i).unwrap();
        assert!(r.inner.is_yes());
        assert!(r.conj_a.is_yes());
        assert!(r.conj_n.is_yes());
    }

    #[test]
    fn bounded_agrees_with_exact_on_inner() {
        let ctx = gd();
        let i = Automorphism::parse(&ctx, "inner(\"r v\")").unwrap();
        let d = conjugation_data(&ctx, &i).unwrap();
        let exact = common_conjugator(&ctx, &d, ctx.graph().all()).unwrap();
        let bounded = bounded_common_conjugator(&ctx, &d, ctx.graph().all(), default_bound(&d), 100_000).unwrap();
        assert_eq!(exact, bounded);
    }
}
