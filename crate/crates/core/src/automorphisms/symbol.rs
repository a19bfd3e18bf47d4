//! Named standard generators of `Aut(G(Γ))`: validity, images, inverses and
//! the textual symbol syntax.

use super::Raag;
use crate::error::{Error, Result};
use crate::graph_lattice::{dominates, h_closure, GraphAutomorphism, Vertex, VertexSet};
use crate::words::{Letter, NormalForm, Word};
use std::fmt::Write as _;

/// The set `A ⊆ J ∪ X_S ∪ X_S⁻¹` of a Whitehead automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WhiteheadSet {
    /// Indices of non-trivial components in `A` (sorted).
    pub comps: Vec<usize>,
    /// Isolated letters in `A` (sorted).
    pub letters: Vec<Letter>,
}

impl WhiteheadSet {
    /// Builds a set, sorting and deduplicating.
    pub fn new(mut comps: Vec<usize>, mut letters: Vec<Letter>) -> Self {
        comps.sort();
        comps.dedup();
        letters.sort();
        letters.dedup();
        WhiteheadSet { comps, letters }
    }

    /// Membership of a component index.
    pub fn has_comp(&self, j: usize) -> bool {
        self.comps.contains(&j)
    }

    /// Membership of an isolated letter.
    pub fn has_letter(&self, l: Letter) -> bool {
        self.letters.contains(&l)
    }

    /// Membership of the hat of an element.
    pub fn has(&self, e: &WhiteheadElement) -> bool {
        match e {
            WhiteheadElement::Comp(j) => self.has_comp(*j),
            WhiteheadElement::Letter(l) => self.has_letter(*l),
        }
    }

    /// Union.
    pub fn union(&self, o: &Self) -> Self {
        let mut c = self.comps.clone();
        c.extend(&o.comps);
        let mut l = self.letters.clone();
        l.extend(&o.letters);
        WhiteheadSet::new(c, l)
    }

    /// Intersection.
    pub fn intersection(&self, o: &Self) -> Self {
        WhiteheadSet::new(
            self.comps.iter().copied().filter(|j| o.has_comp(*j)).collect(),
            self.letters.iter().copied().filter(|l| o.has_letter(*l)).collect(),
        )
    }

    /// Difference.
    pub fn minus(&self, o: &Self) -> Self {
        WhiteheadSet::new(
            self.comps.iter().copied().filter(|j| !o.has_comp(*j)).collect(),
            self.letters.iter().copied().filter(|l| !o.has_letter(*l)).collect(),
        )
    }

    /// The set with one element added.
    pub fn plus_elem(&self, e: &WhiteheadElement) -> Self {
        self.union(&WhiteheadSet::of_elem(e))
    }

    /// The set with one element removed.
    pub fn minus_elem(&self, e: &WhiteheadElement) -> Self {
        self.minus(&WhiteheadSet::of_elem(e))
    }

    /// Singleton set.
    pub fn of_elem(e: &WhiteheadElement) -> Self {
        match e {
            WhiteheadElement::Comp(j) => WhiteheadSet::new(vec![*j], vec![]),
            WhiteheadElement::Letter(l) => WhiteheadSet::new(vec![], vec![*l]),
        }
    }

    /// True for the empty set.
    pub fn is_empty(&self) -> bool {
        self.comps.is_empty() && self.letters.is_empty()
    }
}

/// An element of `J ∪ X_S ∪ X_S⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WhiteheadElement {
    /// A non-trivial component index `j ∈ J`.
    Comp(usize),
    /// An isolated letter.
    Letter(Letter),
}

/// The hat `â` of a Whitehead multiplier: the component of `a` when `a`
/// lies in a non-trivial component, otherwise the isolated letter itself.
pub fn whitehead_hat(ctx: &Raag, a: &NormalForm) -> Result<WhiteheadElement> {
    let s = a.support();
    let Some(v) = s.first() else {
        return Err(Error::InvalidGenerator(
            "Whitehead multiplier must be non-trivial".into(),
        ));
    };
    let j = ctx.component_of(v);
    if !s.is_subset(ctx.component(j)) {
        return Err(Error::InvalidGenerator(format!(
            "Whitehead multiplier `{}` spans several components",
            a.display(ctx.graph())
        )));
    }
    if ctx.is_isolated_component(j) {
        if a.len() != 1 {
            return Err(Error::InvalidGenerator(format!(
                "isolated Whitehead multiplier `{}` must be a single letter",
                a.display(ctx.graph())
            )));
        }
        Ok(WhiteheadElement::Letter(a.letters()[0]))
    } else {
        Ok(WhiteheadElement::Comp(j))
    }
}

/// The kind and parameters of a standard generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SymbolKind {
    /// `ι_x`: inverts `x`.
    Inv(Vertex),
    /// `τ_{x,y}`: `x ↦ xy` for letters `x, y`.
    Tr(Letter, Letter),
    /// `α_{C,x}`: conjugates a component `C` of `Γ_{x^⊥}` by `x`.
    LInn(VertexSet, Letter),
    /// `β_{C,x}`: conjugates a component `C` of `Γ \ {x}` by `x`.
    Agg(VertexSet, Letter),
    /// `α_{[u],x}`: conjugates `[u] \ {x}` by `x`, where `x` dominates `u`.
    Coll(Vertex, Letter),
    /// `α̃_{y,x}`: conjugates `𝓗ₓ(y) \ x^⊥` by `x`, for `y ∉ x^⊥`.
    Norm(Vertex, Letter),
    /// `α_{L,x}`: conjugates a union `L` of components of `Γ_{x^⊥}` by `x`.
    Ext(VertexSet, Letter),
    /// `τ̃_{x,w}`: `x ↦ xw`, a product of transvections.
    CompTr(Letter, NormalForm),
    /// `γ_g(j)`: conjugates connected component `j` of `Γ` by `g`.
    GammaJ(NormalForm, usize),
    /// `γ_g`: the inner automorphism `u ↦ g⁻¹ u g`.
    Inner(NormalForm),
    /// Automorphism induced by a graph automorphism.
    GraphAut(GraphAutomorphism),
    /// `ω^j_{a,b}`: swaps copies `a` and `b` (0-based) of component group `j`;
    /// `None` refers to the isolated vertices.
    Omega(Option<usize>, usize, usize),
    /// Whitehead automorphism `(A, a)`.
    Whitehead(WhiteheadSet, NormalForm),
}

/// A generator symbol with a formal exponent `±1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symbol {
    /// Kind and parameters.
    pub kind: SymbolKind,
    /// True for the formal inverse.
    pub inverted: bool,
}

impl From<SymbolKind> for Symbol {
    fn from(kind: SymbolKind) -> Self {
        Symbol { kind, inverted: false }
    }
}

impl Symbol {
    /// `ι_x`.
    pub fn inv(x: Vertex) -> Self {
        SymbolKind::Inv(x).into()
    }
    /// `τ_{x,y}`.
    pub fn tr(x: Letter, y: Letter) -> Self {
        SymbolKind::Tr(x, y).into()
    }
    /// `α_{C,x}`.
    pub fn lc(c: VertexSet, x: Letter) -> Self {
        SymbolKind::LInn(c, x).into()
    }
    /// `β_{C,x}`.
    pub fn agg(c: VertexSet, x: Letter) -> Self {
        SymbolKind::Agg(c, x).into()
    }
    /// `α_{[u],x}`.
    pub fn coll(u: Vertex, x: Letter) -> Self {
        SymbolKind::Coll(u, x).into()
    }
    /// `α̃_{y,x}`.
    pub fn norm(y: Vertex, x: Letter) -> Self {
        SymbolKind::Norm(y, x).into()
    }
    /// `α_{L,x}`.
    pub fn ext(l: VertexSet, x: Letter) -> Self {
        SymbolKind::Ext(l, x).into()
    }
    /// `τ̃_{x,w}`.
    pub fn ctr(x: Letter, w: NormalForm) -> Self {
        SymbolKind::CompTr(x, w).into()
    }
    /// `γ_g(j)`.
    pub fn gamma_j(g: NormalForm, j: usize) -> Self {
        SymbolKind::GammaJ(g, j).into()
    }
    /// `γ_g`.
    pub fn inner(g: NormalForm) -> Self {
        SymbolKind::Inner(g).into()
    }
    /// Graph automorphism.
    pub fn graph_aut(p: GraphAutomorphism) -> Self {
        SymbolKind::GraphAut(p).into()
    }
    /// `ω^j_{a,b}`.
    pub fn omega(j: Option<usize>, a: usize, b: usize) -> Self {
        SymbolKind::Omega(j, a, b).into()
    }
    /// `(A, a)`.
    pub fn whitehead(a_set: WhiteheadSet, a: NormalForm) -> Self {
        SymbolKind::Whitehead(a_set, a).into()
    }

    /// The formal inverse.
    pub fn inverse(&self) -> Symbol {
        Symbol {
            kind: self.kind.clone(),
            inverted: !self.inverted,
        }
    }

    /// The kind whose plain evaluation equals this symbol.
    pub fn effective_kind(&self, ctx: &Raag) -> Result<SymbolKind> {
        if self.inverted {
            self.kind.inverse_kind(ctx)
        } else {
            Ok(self.kind.clone())
        }
    }

    /// Images of the vertices under this generator.
    pub fn images(&self, ctx: &Raag) -> Result<Vec<NormalForm>> {
        self.kind.validate(ctx)?;
        self.effective_kind(ctx)?.plain_images(ctx)
    }

    /// Textual form.
    pub fn display(&self, ctx: &Raag) -> String {
        let mut s = self.kind.display(ctx);
        if self.inverted {
            s.push_str("^-1");
        }
        s
    }
}

fn identity_images(n: usize) -> Vec<NormalForm> {
    (0..n).map(|v| NormalForm::letter(Letter::pos(v))).collect()
}

fn conj_set(ctx: &Raag, set: VertexSet, by: &NormalForm) -> Vec<NormalForm> {
    let g = ctx.graph();
    let mut im = identity_images(g.n());
    for v in set.iter() {
        im[v] = im[v].conjugate(g, by);
    }
    im
}

fn transvect(ctx: &Raag, x: Letter, w: &NormalForm) -> Vec<NormalForm> {
    let g = ctx.graph();
    let mut im = identity_images(g.n());
    let xv = x.vertex();
    let base = NormalForm::letter(Letter::pos(xv));
    im[xv] = if x.is_positive() {
        base.mul(g, w)
    } else {
        w.inverse(g).mul(g, &base)
    };
    im
}

/// Checks that `c` is a union of components of `Γ_{x^⊥}`.
fn is_union_of_star_components(ctx: &Raag, c: VertexSet, x: Vertex) -> bool {
    let g = ctx.graph();
    g.components(g.star(x)).iter().all(|d| d.is_subset(c) || !d.meets(c)) && !c.meets(g.star(x))
}

/// Vertices conjugated by the normal generator `α̃_{y,x}`.
pub fn normal_support(ctx: &Raag, y: Vertex, x: Vertex) -> VertexSet {
    let g = ctx.graph();
    h_closure(g, x, VertexSet::singleton(y)).difference(g.star(x))
}

/// Vertices conjugated by the collected generator `α_{[u],x}`.
pub fn collected_support(ctx: &Raag, u: Vertex, x: Vertex) -> VertexSet {
    ctx.classes().class_of(u).without(x)
}

impl SymbolKind {
    /// Checks the defining precondition, reporting a witness on failure.
    pub fn validate(&self, ctx: &Raag) -> Result<()> {
        let g = ctx.graph();
        let bad = |m: String| Err(Error::InvalidGenerator(m));
        match self {
            SymbolKind::Inv(_) => Ok(()),
            SymbolKind::Tr(x, y) => {
                let (xv, yv) = (x.vertex(), y.vertex());
                if xv == yv {
                    return bad(format!("transvection `{}` on a single vertex", self.display(ctx)));
                }
                match g.neighbours(xv).difference(g.star(yv)).first() {
                    Some(u) => bad(format!(
                        "`{}` invalid: {} ∈ {}^⊥\\{} but {} ∉ {}^⊥",
                        self.display(ctx),
                        g.name(u),
                        g.name(xv),
                        g.name(xv),
                        g.name(u),
                        g.name(yv)
                    )),
                    None => Ok(()),
                }
            }
            SymbolKind::LInn(c, x) => {
                if g.components(g.star(x.vertex())).contains(c) {
                    Ok(())
                } else {
                    bad(format!(
                        "{} is not a component of Γ minus {}^⊥",
                        g.fmt_set(*c),
                        g.name(x.vertex())
                    ))
                }
            }
            SymbolKind::Agg(c, x) => {
                if g.components(VertexSet::singleton(x.vertex())).contains(c) {
                    Ok(())
                } else {
                    bad(format!(
                        "{} is not a component of Γ minus {}",
                        g.fmt_set(*c),
                        g.name(x.vertex())
                    ))
                }
            }
            SymbolKind::Coll(u, x) => {
                if dominates(g, x.vertex(), *u) {
                    Ok(())
                } else {
                    bad(format!("{} does not dominate {}", g.name(x.vertex()), g.name(*u)))
                }
            }
            SymbolKind::Norm(y, x) => {
                if g.star(x.vertex()).contains(*y) {
                    bad(format!("{} lies in {}^⊥", g.name(*y), g.name(x.vertex())))
                } else {
                    Ok(())
                }
            }
            SymbolKind::Ext(l, x) => {
                if is_union_of_star_components(ctx, *l, x.vertex()) {
                    Ok(())
                } else {
                    bad(format!(
                        "{} is not a union of components of Γ minus {}^⊥",
                        g.fmt_set(*l),
                        g.name(x.vertex())
                    ))
                }
            }
            SymbolKind::CompTr(x, w) => {
                for &y in w.letters() {
                    SymbolKind::Tr(*x, y).validate(ctx)?;
                }
                Ok(())
            }
            SymbolKind::GammaJ(_, j) => {
                if *j < ctx.component_count() {
                    Ok(())
                } else {
                    bad(format!("no component {j}"))
                }
            }
            SymbolKind::Inner(_) => Ok(()),
            SymbolKind::GraphAut(p) => {
                if p.is_automorphism_of(g) {
                    Ok(())
                } else {
                    bad("permutation is not a graph automorphism".into())
                }
            }
            SymbolKind::Omega(j, a, b) => {
                let m = match j {
                    None => ctx.iso().isolated.len(),
                    Some(j) => ctx.iso().groups.get(*j).map_or(0, |grp| grp.multiplicity()),
                };
                if a == b || *a >= m || *b >= m {
                    bad(format!("omega indices {a},{b} out of range"))
                } else {
                    Ok(())
                }
            }
            SymbolKind::Whitehead(set, a) => {
                let hat = whitehead_hat(ctx, a)?;
                if !set.has(&hat) {
                    return bad(format!("hat of the multiplier is not in A for `{}`", self.display(ctx)));
                }
                if let WhiteheadElement::Letter(l) = hat {
                    if set.has_letter(l.inverse()) {
                        return bad(format!("A contains both a and a^-1 in `{}`", self.display(ctx)));
                    }
                }
                for &j in &set.comps {
                    if j >= ctx.component_count() || ctx.is_isolated_component(j) {
                        return bad(format!("component {j} of A is not a non-trivial component"));
                    }
                }
                for l in &set.letters {
                    if !ctx.is_isolated(l.vertex()) {
                        return bad(format!("letter {} of A is not isolated", l.display(g)));
                    }
                }
                Ok(())
            }
        }
    }

    /// The kind of the inverse generator.
    pub fn inverse_kind(&self, ctx: &Raag) -> Result<SymbolKind> {
        let g = ctx.graph();
        Ok(match self {
            SymbolKind::Inv(x) => SymbolKind::Inv(*x),
            SymbolKind::Tr(x, y) => SymbolKind::Tr(*x, y.inverse()),
            SymbolKind::LInn(c, x) => SymbolKind::LInn(*c, x.inverse()),
            SymbolKind::Agg(c, x) => SymbolKind::Agg(*c, x.inverse()),
            SymbolKind::Coll(u, x) => SymbolKind::Coll(*u, x.inverse()),
            SymbolKind::Norm(y, x) => SymbolKind::Norm(*y, x.inverse()),
            SymbolKind::Ext(l, x) => SymbolKind::Ext(*l, x.inverse()),
            SymbolKind::CompTr(x, w) => SymbolKind::CompTr(*x, w.inverse(g)),
            SymbolKind::GammaJ(w, j) => SymbolKind::GammaJ(w.inverse(g), *j),
            SymbolKind::Inner(w) => SymbolKind::Inner(w.inverse(g)),
            SymbolKind::GraphAut(p) => SymbolKind::GraphAut(p.inverse()),
            SymbolKind::Omega(j, a, b) => SymbolKind::Omega(*j, *a, *b),
            SymbolKind::Whitehead(set, a) => match whitehead_hat(ctx, a)? {
                WhiteheadElement::Comp(_) => SymbolKind::Whitehead(set.clone(), a.inverse(g)),
                WhiteheadElement::Letter(l) => SymbolKind::Whitehead(
                    set.minus_elem(&WhiteheadElement::Letter(l))
                        .plus_elem(&WhiteheadElement::Letter(l.inverse())),
                    a.inverse(g),
                ),
            },
        })
    }

    /// Images of the vertices, assuming validity.
    pub fn plain_images(&self, ctx: &Raag) -> Result<Vec<NormalForm>> {
        let g = ctx.graph();
        let n = g.n();
        Ok(match self {
            SymbolKind::Inv(x) => {
                let mut im = identity_images(n);
                im[*x] = NormalForm::letter(Letter::neg(*x));
                im
            }
            SymbolKind::Tr(x, y) => transvect(ctx, *x, &NormalForm::letter(*y)),
            SymbolKind::CompTr(x, w) => transvect(ctx, *x, w),
            SymbolKind::LInn(c, x) | SymbolKind::Agg(c, x) | SymbolKind::Ext(c, x) => {
                conj_set(ctx, *c, &NormalForm::letter(*x))
            }
            SymbolKind::Coll(u, x) => conj_set(ctx, collected_support(ctx, *u, x.vertex()), &NormalForm::letter(*x)),
            SymbolKind::Norm(y, x) => conj_set(ctx, normal_support(ctx, *y, x.vertex()), &NormalForm::letter(*x)),
            SymbolKind::GammaJ(w, j) => conj_set(ctx, ctx.component(*j), w),
            SymbolKind::Inner(w) => conj_set(ctx, g.all(), w),
            SymbolKind::GraphAut(p) => (0..n).map(|v| NormalForm::letter(Letter::pos(p.perm[v]))).collect(),
            SymbolKind::Omega(j, a, b) => {
                let p = ctx.iso().omega(n, *j, *a, *b);
                (0..n).map(|v| NormalForm::letter(Letter::pos(p.perm[v]))).collect()
            }
            SymbolKind::Whitehead(set, a) => {
                let hat = whitehead_hat(ctx, a)?;
                let mut im = identity_images(n);
                for &j in &set.comps {
                    if WhiteheadElement::Comp(j) == hat {
                        continue;
                    }
                    for v in ctx.component(j).iter() {
                        im[v] = im[v].conjugate(g, a);
                    }
                }
                let ainv = a.inverse(g);
                for v in ctx.iso().isolated.iter().copied() {
                    let (p, q) = (Letter::pos(v), Letter::neg(v));
                    let hp = set.has_letter(p) && WhiteheadElement::Letter(p) != hat;
                    let hq = set.has_letter(q) && WhiteheadElement::Letter(q) != hat;
                    let base = NormalForm::letter(p);
                    im[v] = match (hp, hq) {
                        (true, true) => base.conjugate(g, a),
                        (true, false) => base.mul(g, a),
                        (false, true) => ainv.mul(g, &base),
                        (false, false) => base,
                    };
                }
                im
            }
        })
    }

    /// Textual form in the symbol syntax.
    pub fn display(&self, ctx: &Raag) -> String {
        let g = ctx.graph();
        let l = |x: &Letter| x.display(g);
        let w = |x: &NormalForm| format!("\"{}\"", x.display(g));
        let comp = |j: &usize| g.name(ctx.component(*j).first().expect("non-empty")).to_string();
        match self {
            SymbolKind::Inv(x) => format!("inv({})", g.name(*x)),
            SymbolKind::Tr(x, y) => format!("tr({},{})", l(x), l(y)),
            SymbolKind::LInn(c, x) => format!("lc({},{})", g.fmt_set(*c), l(x)),
            SymbolKind::Agg(c, x) => format!("agg({},{})", g.fmt_set(*c), l(x)),
            SymbolKind::Coll(u, x) => format!("coll({},{})", g.name(*u), l(x)),
            SymbolKind::Norm(y, x) => format!("norm({},{})", g.name(*y), l(x)),
            SymbolKind::Ext(c, x) => format!("ext({},{})", g.fmt_set(*c), l(x)),
            SymbolKind::CompTr(x, v) => format!("ctr({},{})", l(x), w(v)),
            SymbolKind::GammaJ(v, j) => format!("gammaj({},{})", w(v), comp(j)),
            SymbolKind::Inner(v) => format!("inner({})", w(v)),
            SymbolKind::GraphAut(p) => {
                let mut s = String::from("gaut(");
                let mut seen = vec![false; p.perm.len()];
                for start in 0..p.perm.len() {
                    if seen[start] || p.perm[start] == start {
                        continue;
                    }
                    let mut cyc = Vec::new();
                    let mut v = start;
                    while !seen[v] {
                        seen[v] = true;
                        cyc.push(g.name(v));
                        v = p.perm[v];
                    }
                    let _ = write!(s, "({})", cyc.join(" "));
                }
                s.push(')');
                s
            }
            SymbolKind::Omega(j, a, b) => format!("omega({},{},{})", j.map_or(0, |j| j + 1), a + 1, b + 1),
            SymbolKind::Whitehead(set, a) => {
                let mut parts: Vec<String> = set.comps.iter().map(|j| format!("X({})", comp(j))).collect();
                parts.extend(set.letters.iter().map(l));
                format!("wh({{{}}},{})", parts.join(","), w(a))
            }
        }
    }
}

/// Formats a symbol word, `id` for the empty word.
pub fn display_symbols(ctx: &Raag, word: &[Symbol]) -> String {
    if word.is_empty() {
        "id".to_string()
    } else {
        word.iter().map(|s| s.display(ctx)).collect::<Vec<_>>().join(" ")
    }
}

fn perr(message: String) -> Error {
    Error::Parse { line: 0, message }
}

/// Splits at top-level occurrences of `sep` (outside quotes and brackets).
fn split_top(s: &str, sep: impl Fn(char) -> bool) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    let mut quoted = false;
    for c in s.chars() {
        if c == '"' {
            quoted = !quoted;
            cur.push(c);
            continue;
        }
        if !quoted {
            if matches!(c, '(' | '{' | '[') {
                depth += 1;
            } else if matches!(c, ')' | '}' | ']') {
                depth -= 1;
                if depth < 0 {
                    return Err(perr(format!("unbalanced brackets in `{s}`")));
                }
            }
            if depth == 0 && sep(c) {
                if !cur.trim().is_empty() {
                    out.push(cur.trim().to_string());
                }
                cur.clear();
                continue;
            }
        }
        cur.push(c);
    }
    if depth != 0 || quoted {
        return Err(perr(format!("unbalanced brackets or quotes in `{s}`")));
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    Ok(out)
}

fn parse_letter(ctx: &Raag, s: &str) -> Result<Letter> {
    let w = Word::parse(ctx.graph(), s.trim())?;
    if w.0.len() != 1 {
        return Err(perr(format!("expected a single letter, got `{s}`")));
    }
    Ok(w.0[0])
}

fn parse_word_arg(ctx: &Raag, s: &str) -> Result<NormalForm> {
    let t = s.trim().trim_matches('"');
    NormalForm::parse(ctx.graph(), t)
}

fn parse_set(ctx: &Raag, s: &str) -> Result<VertexSet> {
    let t = s.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| perr(format!("expected a set in braces, got `{s}`")))?;
    ctx.graph().set(inner)
}

fn parse_component(ctx: &Raag, s: &str) -> Result<usize> {
    let t = s.trim();
    if let Ok(k) = t.parse::<usize>() {
        if k == 0 || k > ctx.component_count() {
            return Err(perr(format!("component index {k} out of range")));
        }
        return Ok(k - 1);
    }
    Ok(ctx.component_of(ctx.vertex(t)?))
}

fn parse_whitehead_set(ctx: &Raag, s: &str) -> Result<WhiteheadSet> {
    let t = s.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| perr(format!("expected a set in braces, got `{s}`")))?;
    let mut comps = Vec::new();
    let mut letters = Vec::new();
    for part in split_top(inner, |c| c == ',')? {
        if let Some(r) = part.strip_prefix("X(").and_then(|r| r.strip_suffix(')')) {
            comps.push(parse_component(ctx, r)?);
        } else {
            letters.push(parse_letter(ctx, &part)?);
        }
    }
    Ok(WhiteheadSet::new(comps, letters))
}

fn parse_cycles(ctx: &Raag, s: &str) -> Result<GraphAutomorphism> {
    let mut perm: Vec<Vertex> = (0..ctx.n()).collect();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| perr(format!("bad cycle list `{s}`")))?;
        let close = open.find(')').ok_or_else(|| perr(format!("bad cycle list `{s}`")))?;
        let cyc: Vec<Vertex> = open[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| ctx.vertex(t))
            .collect::<Result<_>>()?;
        for i in 0..cyc.len() {
            perm[cyc[i]] = cyc[(i + 1) % cyc.len()];
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(GraphAutomorphism { perm })
}

/// Parses one symbol such as `tr(x^-1,y)` or `lc({a,r,s},v)^-1`.
pub fn parse_symbol(ctx: &Raag, s: &str) -> Result<Symbol> {
    let t = s.trim();
    let (body, inverted) = match t.strip_suffix("^-1") {
        Some(b) if b.ends_with(')') => (b, true),
        _ => (t, false),
    };
    let open = body
        .find('(')
        .ok_or_else(|| perr(format!("expected `name(args)`, got `{s}`")))?;
    let name = &body[..open];
    let args_s = body[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| perr(format!("missing `)` in `{s}`")))?;
    let args = split_top(args_s, |c| c == ',')?;
    let need = |k: usize| -> Result<()> {
        if args.len() == k {
            Ok(())
        } else {
            Err(perr(format!("`{name}` takes {k} arguments, got {}", args.len())))
        }
    };
    let kind = match name {
        "inv" => {
            need(1)?;
            SymbolKind::Inv(ctx.vertex(&args[0])?)
        }
        "tr" => {
            need(2)?;
            SymbolKind::Tr(parse_letter(ctx, &args[0])?, parse_letter(ctx, &args[1])?)
        }
        "lc" => {
            need(2)?;
            SymbolKind::LInn(parse_set(ctx, &args[0])?, parse_letter(ctx, &args[1])?)
        }
        "agg" => {
            need(2)?;
            SymbolKind::Agg(parse_set(ctx, &args[0])?, parse_letter(ctx, &args[1])?)
        }
        "ext" => {
            need(2)?;
            SymbolKind::Ext(parse_set(ctx, &args[0])?, parse_letter(ctx, &args[1])?)
        }
        "coll" => {
            need(2)?;
            SymbolKind::Coll(ctx.vertex(&args[0])?, parse_letter(ctx, &args[1])?)
        }
        "norm" => {
            need(2)?;
            SymbolKind::Norm(ctx.vertex(&args[0])?, parse_letter(ctx, &args[1])?)
        }
        "ctr" => {
            need(2)?;
            SymbolKind::CompTr(parse_letter(ctx, &args[0])?, parse_word_arg(ctx, &args[1])?)
        }
        "gammaj" => {
            need(2)?;
            SymbolKind::GammaJ(parse_word_arg(ctx, &args[0])?, parse_component(ctx, &args[1])?)
        }
        "inner" => {
            need(1)?;
            SymbolKind::Inner(parse_word_arg(ctx, &args[0])?)
        }
        "gaut" => {
            if args.len() > 1 {
                return Err(perr("`gaut` takes one cycle list".into()));
            }
            SymbolKind::GraphAut(parse_cycles(ctx, args.first().map_or("", |a| a.as_str()))?)
        }
        "omega" => {
            need(3)?;
            let nums: Vec<usize> = args
                .iter()
                .map(|a| a.parse::<usize>().map_err(|_| perr(format!("bad omega index `{a}`"))))
                .collect::<Result<_>>()?;
            if nums[1] == 0 || nums[2] == 0 {
                return Err(perr("omega copy indices are 1-based".into()));
            }
            let j = if nums[0] == 0 { None } else { Some(nums[0] - 1) };
            SymbolKind::Omega(j, nums[1] - 1, nums[2] - 1)
        }
        "wh" => {
            need(2)?;
            SymbolKind::Whitehead(parse_whitehead_set(ctx, &args[0])?, parse_word_arg(ctx, &args[1])?)
        }
        _ => return Err(perr(format!("unknown symbol `{name}`"))),
    };
    kind.validate(ctx)?;
    Ok(Symbol { kind, inverted })
}

/// Parses a whitespace separated symbol word; `id` or an empty string is the identity.
pub fn parse_symbols(ctx: &Raag, s: &str) -> Result<Vec<Symbol>> {
    split_top(s, char::is_whitespace)?
        .into_iter()
        .filter(|t| t != "id")
        .map(|t| parse_symbol(ctx, &t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphisms::Automorphism;
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
    fn roundtrip_display_parse() {
        let ctx = gd();
        for s in [
            "inv(v)",
            "tr(v,a^-1)",
            "lc({a,r,s},v)^-1",
            "ctr(v,\"a b\")",
            "inner(\"a v\")",
            "norm(a,v)",
            "gammaj(\"a\",v)",
            "gaut()",
        ] {
            let sym = parse_symbol(&ctx, s).unwrap();
            assert_eq!(sym.display(&ctx), s);
        }
    }

    #[test]
    fn invalid_transvection_reports_witness() {
        let ctx = gd();
        let err = parse_symbol(&ctx, "tr(r,v)").unwrap_err();
        assert!(err.to_string().contains("a ∈ r^⊥"));
        assert!(parse_symbol(&ctx, "tr(v,a)").is_ok());
    }

    #[test]
    fn inverse_laws() {
        let ctx = gd();
        for s in [
            "inv(v)",
            "tr(v,a)",
            "lc({a,r,s},v)",
            "norm(a,v)",
            "inner(\"a r\")",
            "ctr(v,\"a b\")",
        ] {
            let f = Automorphism::parse(&ctx, s).unwrap();
            let id = f.compose(ctx.graph(), &f.invert(&ctx).unwrap()).unwrap();
            assert!(id.is_identity(), "{s}");
        }
    }

    #[test]
    fn singular_conjugation_is_two_transvections() {
        let ctx = gd();
        let a = Automorphism::parse(&ctx, "lc({v},a)").unwrap();
        let b = Automorphism::parse(&ctx, "tr(v,a) tr(v^-1,a)").unwrap();
        assert_eq!(a, b);
    }
}
