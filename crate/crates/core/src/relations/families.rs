//! Instantiation of the relator families within parameter bounds.

use super::generators::{
    comp_generators, factor_generators, int_generators, nontrivial_components, symm_generators, Factor,
};
use super::whitehead::{elements_up_to, universe, whitehead_automorphisms, whitehead_image};
use crate::automorphisms::symbol::whitehead_hat;
use crate::automorphisms::{Automorphism, Raag, Symbol, WhiteheadElement, WhiteheadSet};
use crate::error::{Error, Result};
use crate::words::{all_geodesics, Letter, NormalForm};
use std::collections::BTreeMap;
use std::fmt;

/// Limits on parameter enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Maximal length of group elements used as parameters (R10, R12 and
    /// Whitehead multipliers).
    pub word_len: usize,
    /// Maximal number of instances per family. Larger candidate lists are
    /// thinned by taking evenly spaced entries.
    pub max_per_family: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            word_len: 2,
            max_per_family: 400,
        }
    }
}

/// Relator family tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[allow(missing_docs)]
pub enum Family {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
    Sigma,
    Rsymm,
    W,
    D,
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
    S8,
    S9,
    EqWhaut,
    /// R3 with mixed-sign letters and the right side exactly as printed.
    R3Literal,
    /// R11(ii) with the common exponent `ε₁` on every factor.
    R11Literal,
}

impl Family {
    /// Every family expected to verify.
    pub const ALL: [Family; 26] = [
        Family::R1,
        Family::R2,
        Family::R3,
        Family::R4,
        Family::R5,
        Family::R6,
        Family::R7,
        Family::R8,
        Family::R9,
        Family::R10,
        Family::R11,
        Family::R12,
        Family::Sigma,
        Family::Rsymm,
        Family::W,
        Family::D,
        Family::S1,
        Family::S2,
        Family::S3,
        Family::S4,
        Family::S5,
        Family::S6,
        Family::S7,
        Family::S8,
        Family::S9,
        Family::EqWhaut,
    ];

    /// Families whose instances belong to the presentation.
    pub const PRESENTATION: [Family; 14] = [
        Family::Rsymm,
        Family::W,
        Family::D,
        Family::R1,
        Family::R2,
        Family::R3,
        Family::R4,
        Family::R5,
        Family::R6,
        Family::R7,
        Family::R8,
        Family::R9,
        Family::R10,
        Family::R11,
    ];

    /// Diagnostic families recording literal readings that are expected to fail.
    pub const DIAGNOSTIC: [Family; 2] = [Family::R3Literal, Family::R11Literal];

    /// Tag used in reports and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Family::R1 => "R1",
            Family::R2 => "R2",
            Family::R3 => "R3",
            Family::R4 => "R4",
            Family::R5 => "R5",
            Family::R6 => "R6",
            Family::R7 => "R7",
            Family::R8 => "R8",
            Family::R9 => "R9",
            Family::R10 => "R10",
            Family::R11 => "R11",
            Family::R12 => "R12",
            Family::Sigma => "sigma",
            Family::Rsymm => "Rsymm",
            Family::W => "W",
            Family::D => "D",
            Family::S1 => "S1",
            Family::S2 => "S2",
            Family::S3 => "S3",
            Family::S4 => "S4",
            Family::S5 => "S5",
            Family::S6 => "S6",
            Family::S7 => "S7",
            Family::S8 => "S8",
            Family::S9 => "S9",
            Family::EqWhaut => "eq-whaut",
            Family::R3Literal => "R3-literal",
            Family::R11Literal => "R11ii-literal",
        }
    }

    fn lookup(tok: &str) -> Option<Family> {
        Family::ALL
            .iter()
            .chain(&Family::DIAGNOSTIC)
            .copied()
            .find(|f| f.name().eq_ignore_ascii_case(tok))
    }

    /// Parses a comma separated list of tags, ranges such as `R1-R11` or
    /// `S1-S9`, `all` and `diagnostics`. Duplicates are removed and the
    /// canonical order kept.
    pub fn parse_list(s: &str) -> Result<Vec<Family>> {
        let mut out = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if tok.eq_ignore_ascii_case("all") {
                out.extend(Family::ALL);
            } else if tok.eq_ignore_ascii_case("diagnostics") {
                out.extend(Family::DIAGNOSTIC);
            } else if let Some(f) = Family::lookup(tok) {
                out.push(f);
            } else if let Some((a, b)) = tok
                .split_once('-')
                .and_then(|(a, b)| Some((Family::lookup(a)?, Family::lookup(b)?)))
            {
                let pos = |f| Family::ALL.iter().position(|&g| g == f);
                let (Some(i), Some(j)) = (pos(a), pos(b)) else {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("bad family range `{tok}`"),
                    });
                };
                if i > j {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("empty family range `{tok}`"),
                    });
                }
                out.extend(&Family::ALL[i..=j]);
            } else {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("unknown relator family `{tok}`"),
                });
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn uses_whitehead_pairs(self) -> bool {
        matches!(
            self,
            Family::S2 | Family::S3 | Family::S4 | Family::S5 | Family::S8 | Family::S9
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One instance `lhs = rhs` of a relator family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorInstance {
    /// Family tag.
    pub family: Family,
    /// Parameter bindings, `name=value` separated by spaces.
    pub bindings: String,
    /// Left side.
    pub lhs: Vec<Symbol>,
    /// Right side.
    pub rhs: Vec<Symbol>,
}

fn inverse_word(w: &[Symbol]) -> Vec<Symbol> {
    w.iter().rev().map(Symbol::inverse).collect()
}

/// `[a,b] = a⁻¹b⁻¹ab` for words.
fn commutator(a: &[Symbol], b: &[Symbol]) -> Vec<Symbol> {
    let mut out = inverse_word(a);
    out.extend(inverse_word(b));
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out
}

fn thin<T>(v: Vec<T>, cap: usize) -> Vec<T> {
    let n = v.len();
    if n <= cap {
        return v;
    }
    let mut keep = (0..cap).map(|i| i * n / cap).peekable();
    v.into_iter()
        .enumerate()
        .filter_map(|(i, x)| {
            if keep.peek() == Some(&i) {
                keep.next();
                Some(x)
            } else {
                None
            }
        })
        .collect()
}

struct Env<'a> {
    ctx: &'a Raag,
    bounds: Bounds,
    iso_letters: Vec<Letter>,
    all_letters: Vec<Letter>,
    j: Vec<usize>,
}

/// A Whitehead pair with its set as a bit mask over the universe.
struct Wh {
    set: WhiteheadSet,
    a: NormalForm,
    mask: u64,
    hat: usize,
    comp: bool,
    inv: Option<usize>,
}

impl<'a> Env<'a> {
    fn new(ctx: &'a Raag, bounds: Bounds) -> Self {
        let iso_letters = ctx
            .iso()
            .isolated
            .iter()
            .flat_map(|&v| [Letter::pos(v), Letter::neg(v)])
            .collect();
        let all_letters = (0..ctx.n()).flat_map(|v| [Letter::pos(v), Letter::neg(v)]).collect();
        Env {
            ctx,
            bounds,
            iso_letters,
            all_letters,
            j: nontrivial_components(ctx),
        }
    }

    fn l(&self, x: Letter) -> String {
        x.display(self.ctx.graph())
    }

    fn w(&self, x: &NormalForm) -> String {
        x.display(self.ctx.graph())
    }

    fn comp(&self, j: usize) -> String {
        format!(
            "X({})",
            self.ctx.graph().name(self.ctx.component(j).first().expect("non-empty"))
        )
    }

    fn breve(&self, x: Letter) -> usize {
        self.ctx.component_of(x.vertex())
    }

    fn tau(&self, x: Letter, y: Letter) -> Symbol {
        Symbol::tr(x, y)
    }

    fn alpha(&self, j: usize, y: Letter) -> Symbol {
        Symbol::lc(self.ctx.component(j), y)
    }

    fn tau_w(&self, x: Letter, w: &[Letter]) -> Vec<Symbol> {
        w.iter().rev().map(|&y| self.tau(x, y)).collect()
    }

    fn alpha_w(&self, j: usize, w: &[Letter]) -> Vec<Symbol> {
        w.iter().rev().map(|&y| self.alpha(j, y)).collect()
    }

    /// `ι` of the `k`-th isolated vertex as a word in `ω⁰` and `ι_z`.
    fn iota_at(&self, k: usize) -> Vec<Symbol> {
        let z = Symbol::inv(self.ctx.iso().isolated[0]);
        if k == 0 {
            vec![z]
        } else {
            let w = Factor::Isolated.omega(0, k);
            vec![w.clone(), z, w]
        }
    }

    fn iso_index(&self, v: usize) -> usize {
        self.ctx.iso().isolated.iter().position(|&u| u == v).expect("isolated")
    }

    /// `γ_y(i)` as a product of partial conjugations supported in a first
    /// copy, conjugated by a swap when `X_i` is a later copy.
    fn gamma(&self, y: Letter, i: usize) -> Vec<Symbol> {
        let ctx = self.ctx;
        let g = ctx.graph();
        let xi = ctx.component(i);
        let (grp, k) = ctx.iso().locate(xi).expect("non-trivial component");
        if k == 0 {
            return g
                .components(g.star(y.vertex()))
                .into_iter()
                .filter(|c| c.is_subset(xi))
                .map(|c| Symbol::lc(c, y))
                .collect();
        }
        let om = Symbol::omega(Some(grp), 0, k);
        let swap = Automorphism::from_symbol(ctx, &om).expect("valid swap");
        let y0 = swap.apply(g, &[y]).letters()[0];
        let first = ctx.component_of(y0.vertex());
        let mut out = vec![om.clone()];
        out.extend(self.gamma(y0, first));
        out.push(om);
        out
    }

    fn inst(&self, family: Family, bindings: String, lhs: Vec<Symbol>, rhs: Vec<Symbol>) -> RelatorInstance {
        RelatorInstance {
            family,
            bindings,
            lhs,
            rhs,
        }
    }

    fn tr_ext_pairs(&self) -> Vec<(Letter, Letter)> {
        let mut out = Vec::new();
        for &x in &self.iso_letters {
            for &y in &self.all_letters {
                if y.vertex() != x.vertex() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    fn r1(&self) -> Vec<RelatorInstance> {
        let mut out = Vec::new();
        let pairs = self.tr_ext_pairs();
        for &(x, y) in &pairs {
            for &(u, v) in &pairs {
                let (bx, by, bu, bv) = (self.breve(x), self.breve(y), self.breve(u), self.breve(v));
                if u == x.inverse() || (bx != bu && bx != bv && by != bu) {
                    out.push(self.inst(
                        Family::R1,
                        format!("x={} y={} u={} v={}", self.l(x), self.l(y), self.l(u), self.l(v)),
                        commutator(&[self.tau(x, y)], &[self.tau(u, v)]),
                        vec![],
                    ));
                }
            }
        }
        out
    }

    fn r2(&self) -> Vec<RelatorInstance> {
        let mut out = Vec::new();
        for (x, y) in self.tr_ext_pairs() {
            for &u in &self.iso_letters {
                if self.breve(x) != self.breve(u) && self.breve(y) != self.breve(u) {
                    out.push(self.inst(
                        Family::R2,
                        format!("x={} y={} u={}", self.l(x), self.l(y), self.l(u)),
                        commutator(&[self.tau(x, y).inverse()], &[self.tau(u, x).inverse()]),
                        vec![self.tau(u, y).inverse()],
                    ));
                }
            }
        }
        out
    }

    /// R3 instances; with `literal` only mixed-sign pairs with the printed
    /// right side, otherwise every pair with the sign-dependent right side.
    fn r3(&self, literal: bool) -> Vec<RelatorInstance> {
        let iso = &self.ctx.iso().isolated;
        let mut out = Vec::new();
        for (i, &xv) in iso.iter().enumerate() {
            for (j, &yv) in iso.iter().enumerate() {
                if i == j {
                    continue;
                }
                for x in [Letter::pos(xv), Letter::neg(xv)] {
                    for y in [Letter::pos(yv), Letter::neg(yv)] {
                        let same = x.is_positive() == y.is_positive();
                        if literal && same {
                            continue;
                        }
                        let om = Factor::Isolated.omega(i, j);
                        let mut rhs = vec![om];
                        let tag = if same || literal {
                            rhs.extend(self.iota_at(j));
                            "printed"
                        } else {
                            rhs.extend(self.iota_at(i));
                            "mixed-sign"
                        };
                        let lhs = vec![self.tau(x, y).inverse(), self.tau(y, x), self.tau(x.inverse(), y)];
                        let fam = if literal { Family::R3Literal } else { Family::R3 };
                        out.push(self.inst(fam, format!("x={} y={} rhs={tag}", self.l(x), self.l(y)), lhs, rhs));
                    }
                }
            }
        }
        out
    }

    fn r4(&self) -> Vec<RelatorInstance> {
        let mut out = Vec::new();
        for &i in &self.j {
            for &j in &self.j {
                if i == j {
                    continue;
                }
                for &x in &self.all_letters {
                    for &y in &self.all_letters {
                        let ok = |l: Letter| self.breve(l) != i && self.breve(l) != j;
                        if ok(x) && ok(y) {
                            out.push(self.inst(
                                Family::R4,
                                format!("i={} j={} x={} y={}", self.comp(i), self.comp(j), self.l(x), self.l(y)),
                                commutator(&[self.alpha(i, x)], &[self.alpha(j, y)]),
                                vec![],
                            ));
                        }
                    }
                }
            }
        }
        out
    }

    fn r5(&self) -> Vec<RelatorInstance> {
        let mut out = Vec::new();
        for &i in &self.j {
            for &j in &self.j {
                if i == j {
                    continue;
                }
                for &x in self.all_letters.iter().filter(|&&x| self.breve(x) == i) {
                    for &y in self
                        .all_letters
                        .iter()
                        .filter(|&&y| self.breve(y) != i && self.breve(y) != j)
                    {
                        out.push(self.inst(
                            Family::R5,
                            format!("i={} j={} x={} y={}", self.comp(i), self.comp(j), self.l(x), self.l(y)),
                            commutator(&[self.alpha(j, x)], &[self.alpha(i, y), self.alpha(j, y)]),
                            vec![],
                        ));
                    }
                }
            }
        }
        out
    }

    fn r6(&self) -> Vec<RelatorInstance> {
        let mut out = Vec::new();
        for (x, y) in self.tr_ext_pairs() {
            for &l in &self.j {
                if self.breve(y) == l {
                    continue;
                }
                for &z in &self.all_letters {
                    if self.breve(z) != l && self.breve(x) != self.breve(z) {
                        out.push(self.inst(
                            Family::R6,
                            format!("x={} y={} l={} z={}", self.l(x), self.l(y), self.comp(l), self.l(z)),
                            commutator(&[self.tau(x, y)], &[self.alpha(l, z)]),
                            vec![],
                        ));
                    }
                }
            }
        }
        out
    }

    fn r7(&self) -> Vec<RelatorInstance> {
        let mut out = Vec::new();
        for (x, y) in self.tr_ext_pairs() {
            for &l in &self.j {
                if self.breve(y) != l {
                    out.push(self.inst(
                        Family::R7,
                        format!("x={} y={} l={}", self.l(x), self.l(y), self.comp(l)),
                        commutator(&[self.tau(x, y).inverse()], &[self.alpha(l, x).inverse()]),
                        vec![self.alpha(l, y).inverse()],
                    ));
                }
            }
        }
        out
    }

    fn r8(&self) -> Vec<RelatorInstance> {
        let mut out = Vec::new();
        for (x, y) in self.tr_ext_pairs() {
            let i = self.breve(y);
            if !self.j.contains(&i) {
                continue;
            }
            for &z in &self.all_letters {
                if self.breve(z) != i && z.vertex() != x.vertex() {
                    out.push(self.inst(
                        Family::R8,
                        format!("x={} y={} z={}", self.l(x), self.l(y), self.l(z)),
                        commutator(&[self.tau(x, y)], &[self.alpha(i, z), self.tau(x, z)]),
                        vec![],
                    ));
                }
            }
        }
        out
    }

    fn r9(&self) -> Vec<RelatorInstance> {
        let mut out = Vec::new();
        for (x, y) in self.tr_ext_pairs() {
            let i = self.breve(y);
            if !self.j.contains(&i) {
                continue;
            }
            let mut rhs = vec![self.alpha(i, x), self.tau(x.inverse(), y).inverse()];
            rhs.extend(inverse_word(&self.gamma(y, i)));
            out.push(self.inst(
                Family::R9,
                format!("x={} y={}", self.l(x), self.l(y)),
                vec![self.tau(x, y), self.alpha(i, x)],
                rhs,
            ));
        }
        out
    }

    /// Commuting pairs of elements of `G(X_i)` with disjoint supports.
    fn commuting_pairs(&self, i: usize) -> Vec<(NormalForm, NormalForm)> {
        let g = self.ctx.graph();
        let els = elements_up_to(self.ctx, self.ctx.component(i), self.bounds.word_len);
        let mut out = Vec::new();
        for (p, y) in els.iter().enumerate() {
            for z in &els[p + 1..] {
                if !y.support().meets(z.support()) && y.mul(g, z) == z.mul(g, y) {
                    out.push((y.clone(), z.clone()));
                }
            }
        }
        out
    }

    fn r10(&self) -> Vec<RelatorInstance> {
        let mut out = Vec::new();
        for &x in &self.iso_letters {
            for u in (0..self.ctx.n()).map(Letter::pos).filter(|u| u.vertex() != x.vertex()) {
                out.push(self.inst(
                    Family::R10,
                    format!("(i) x={} u={}", self.l(x), self.l(u)),
                    vec![self.tau(x, u).inverse()],
                    vec![self.tau(x, u.inverse())],
                ));
            }
        }
        for &j in &self.j {
            for u in (0..self.ctx.n()).map(Letter::pos).filter(|&u| self.breve(u) != j) {
                out.push(self.inst(
                    Family::R10,
                    format!("(iii) j={} u={}", self.comp(j), self.l(u)),
                    vec![self.alpha(j, u).inverse()],
                    vec![self.alpha(j, u.inverse())],
                ));
            }
        }
        for &i in &self.j {
            let pairs = self.commuting_pairs(i);
            for (y, z) in &pairs {
                for &x in &self.iso_letters {
                    out.push(self.inst(
                        Family::R10,
                        format!("(ii) x={} y={} z={}", self.l(x), self.w(y), self.w(z)),
                        commutator(&self.tau_w(x, y.letters()), &self.tau_w(x, z.letters())),
                        vec![],
                    ));
                }
                for &j in self.j.iter().filter(|&&j| j != i) {
                    out.push(self.inst(
                        Family::R10,
                        format!("(iv) j={} y={} z={}", self.comp(j), self.w(y), self.w(z)),
                        commutator(&self.alpha_w(j, y.letters()), &self.alpha_w(j, z.letters())),
                        vec![],
                    ));
                }
            }
        }
        out
    }

    fn thetas(&self) -> Vec<(Symbol, Automorphism)> {
        let ctx = self.ctx;
        comp_generators(ctx)
            .into_iter()
            .chain(int_generators(ctx))
            .map(|s| {
                let a = Automorphism::from_symbol(ctx, &s).expect("generators are valid");
                (s, a)
            })
            .collect()
    }

    /// R11; with `literal` only part (ii) with the common exponent `ε₁`.
    fn r11(&self, literal: bool) -> Vec<RelatorInstance> {
        let g = self.ctx.graph();
        let mut out = Vec::new();
        for (th, phi) in self.thetas() {
            if !literal {
                for (x, y) in self.tr_ext_pairs() {
                    let xi = phi.apply(g, &[x]);
                    let [z] = xi.letters()[..] else { continue };
                    if !self.ctx.is_isolated(z.vertex()) {
                        continue;
                    }
                    let yth = phi.apply(g, &[y]);
                    if yth.letters().iter().any(|l| l.vertex() == z.vertex()) {
                        continue;
                    }
                    let mut rhs = vec![th.clone()];
                    rhs.extend(self.tau_w(z, yth.letters()));
                    out.push(self.inst(
                        Family::R11,
                        format!("(i) theta={} x={} y={}", th.display(self.ctx), self.l(x), self.l(y)),
                        vec![self.tau(x, y), th.clone()],
                        rhs,
                    ));
                }
            }
            for &j in &self.j {
                let xj = self.ctx.component(j);
                let v0 = xj.first().expect("non-empty");
                let i = self.ctx.component_of(phi.image(v0).letters()[0].vertex());
                let xi = self.ctx.component(i);
                if !xj.iter().all(|v| phi.image(v).support().is_subset(xi)) {
                    continue;
                }
                for &y in self.all_letters.iter().filter(|&&y| self.breve(y) != j) {
                    let yth = phi.apply(g, &[y]);
                    let eps = yth.letters().first().is_none_or(|l| l.is_positive());
                    if literal && eps {
                        continue;
                    }
                    let mut rhs = vec![th.clone()];
                    let factors = self.alpha_w(i, yth.letters());
                    if literal {
                        rhs.extend(factors.iter().map(Symbol::inverse));
                    } else {
                        rhs.extend(factors);
                    }
                    out.push(self.inst(
                        if literal { Family::R11Literal } else { Family::R11 },
                        format!("(ii) theta={} j={} y={}", th.display(self.ctx), self.comp(j), self.l(y)),
                        vec![self.alpha(j, y), th.clone()],
                        rhs,
                    ));
                }
            }
        }
        out
    }

    fn r12(&self) -> Vec<RelatorInstance> {
        let g = self.ctx.graph();
        let mut out = Vec::new();
        for &i in &self.j {
            for el in elements_up_to(self.ctx, self.ctx.component(i), self.bounds.word_len.max(2)) {
                let geos = all_geodesics(g, &el);
                let a = el.letters();
                for b in geos.iter().filter(|b| b.as_slice() != a) {
                    let bs = crate::words::fmt_letters(g, b);
                    for &j in self.j.iter().filter(|&&j| j != i) {
                        out.push(self.inst(
                            Family::R12,
                            format!("j={} a={} b={}", self.comp(j), self.w(&el), bs),
                            self.alpha_w(j, a),
                            self.alpha_w(j, b),
                        ));
                    }
                    for &x in &self.iso_letters {
                        out.push(self.inst(
                            Family::R12,
                            format!("x={} a={} b={}", self.l(x), self.w(&el), bs),
                            self.tau_w(x, a),
                            self.tau_w(x, b),
                        ));
                    }
                }
            }
        }
        out
    }

    fn sigma(&self) -> Vec<RelatorInstance> {
        let g = self.ctx.graph();
        let mut out = Vec::new();
        for cls in &self.ctx.classes().classes {
            for x in cls.iter() {
                for y in cls.iter().filter(|&y| y != x) {
                    let mut perm: Vec<usize> = (0..g.n()).collect();
                    perm.swap(x, y);
                    let (xl, yl) = (Letter::pos(x), Letter::pos(y));
                    out.push(self.inst(
                        Family::Sigma,
                        format!("x={} y={}", g.name(x), g.name(y)),
                        vec![Symbol::graph_aut(crate::graph_lattice::GraphAutomorphism { perm })],
                        vec![
                            Symbol::inv(x),
                            self.tau(xl, yl).inverse(),
                            self.tau(yl, xl),
                            self.tau(xl.inverse(), yl),
                        ],
                    ));
                }
            }
        }
        out
    }

    fn rsymm(&self) -> Vec<RelatorInstance> {
        let mut out = Vec::new();
        for f in Factor::all(self.ctx) {
            let m = f.multiplicity(self.ctx);
            let tr: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
            let name = |(a, b): (usize, usize)| f.omega(a, b).display(self.ctx);
            for &t in &tr {
                let w = f.omega(t.0, t.1);
                out.push(self.inst(Family::Rsymm, format!("s={}", name(t)), vec![w.clone(), w], vec![]));
            }
            for (p, &s) in tr.iter().enumerate() {
                for &t in &tr[p + 1..] {
                    let common = [s.0, s.1].iter().filter(|v| **v == t.0 || **v == t.1).count();
                    let pair = [f.omega(s.0, s.1), f.omega(t.0, t.1)];
                    let power = if common == 0 { 2 } else { 3 };
                    let lhs: Vec<Symbol> = pair.iter().cycle().take(2 * power).cloned().collect();
                    out.push(self.inst(Family::Rsymm, format!("s={} t={}", name(s), name(t)), lhs, vec![]));
                }
            }
        }
        out
    }

    fn wreath(&self) -> Vec<RelatorInstance> {
        let mut out = Vec::new();
        for f in Factor::all(self.ctx) {
            let m = f.multiplicity(self.ctx);
            if m < 2 {
                continue;
            }
            let ps = factor_generators(self.ctx, f);
            let d = |s: &Symbol| s.display(self.ctx);
            let conj = |a: usize, p: &Symbol| vec![f.omega(0, a), p.clone(), f.omega(0, a)];
            for a in 1..m {
                for b in a + 1..m {
                    for p in &ps {
                        out.push(self.inst(
                            Family::W,
                            format!("a={} b={} p={}", a + 1, b + 1, d(p)),
                            commutator(&[f.omega(a, b)], std::slice::from_ref(p)),
                            vec![],
                        ));
                    }
                }
            }
            for a in 1..m {
                for p in &ps {
                    for q in &ps {
                        out.push(self.inst(
                            Family::W,
                            format!("a={} p={} q={}", a + 1, d(p), d(q)),
                            commutator(std::slice::from_ref(p), &conj(a, q)),
                            vec![],
                        ));
                    }
                }
            }
            for a in 1..m {
                for b in a + 1..m {
                    for p in &ps {
                        for q in &ps {
                            out.push(self.inst(
                                Family::W,
                                format!("a={} b={} p={} q={}", a + 1, b + 1, d(p), d(q)),
                                commutator(&conj(a, p), &conj(b, q)),
                                vec![],
                            ));
                        }
                    }
                }
            }
        }
        out
    }

    fn d(&self) -> Vec<RelatorInstance> {
        let fs = Factor::all(self.ctx);
        let gens: Vec<Vec<Symbol>> = fs
            .iter()
            .map(|&f| {
                let mut v = factor_generators(self.ctx, f);
                v.extend(symm_generators(self.ctx, f));
                v
            })
            .collect();
        let mut out = Vec::new();
        for i in 0..fs.len() {
            for j in i + 1..fs.len() {
                for p in &gens[i] {
                    for q in &gens[j] {
                        out.push(self.inst(
                            Family::D,
                            format!("p={} q={}", p.display(self.ctx), q.display(self.ctx)),
                            commutator(std::slice::from_ref(p), std::slice::from_ref(q)),
                            vec![],
                        ));
                    }
                }
            }
        }
        out
    }

    fn whs(&self) -> Vec<Wh> {
        let uni = universe(self.ctx);
        let index = |e: &WhiteheadElement| uni.iter().position(|u| u == e).expect("in universe");
        whitehead_automorphisms(self.ctx, self.bounds.word_len)
            .into_iter()
            .map(|(set, a)| {
                let hat_e = whitehead_hat(self.ctx, &a).expect("valid multiplier");
                let mut mask = 0u64;
                for e in &uni {
                    if set.has(e) {
                        mask |= 1 << index(e);
                    }
                }
                let (comp, inv) = match hat_e {
                    WhiteheadElement::Comp(_) => (true, None),
                    WhiteheadElement::Letter(l) => (false, Some(index(&WhiteheadElement::Letter(l.inverse())))),
                };
                Wh {
                    set,
                    a,
                    mask,
                    hat: index(&hat_e),
                    comp,
                    inv,
                }
            })
            .collect()
    }

    fn phi(&self, set: &WhiteheadSet, a: &NormalForm) -> Vec<Symbol> {
        whitehead_image(self.ctx, set, a).expect("valid multiplier")
    }

    fn wh_name(&self, set: &WhiteheadSet, a: &NormalForm) -> String {
        let g = self.ctx.graph();
        let mut parts: Vec<String> = set.comps.iter().map(|&j| self.comp(j)).collect();
        parts.extend(set.letters.iter().map(|l| l.display(g)));
        format!("({{{}}},{})", parts.join(","), self.w(a))
    }

    fn wh_valid(&self, set: &WhiteheadSet, a: &NormalForm) -> bool {
        Symbol::whitehead(set.clone(), a.clone()).images(self.ctx).is_ok()
    }

    fn hat(&self, a: &NormalForm) -> WhiteheadElement {
        whitehead_hat(self.ctx, a).expect("valid multiplier")
    }

    fn s1(&self, whs: &[Wh]) -> Vec<RelatorInstance> {
        let g = self.ctx.graph();
        whs.iter()
            .map(|w| {
                let ainv = w.a.inverse(g);
                let set = match self.hat(&w.a) {
                    WhiteheadElement::Comp(_) => w.set.clone(),
                    h @ WhiteheadElement::Letter(l) => {
                        w.set.minus_elem(&h).plus_elem(&WhiteheadElement::Letter(l.inverse()))
                    }
                };
                self.inst(
                    Family::S1,
                    format!("A,a={}", self.wh_name(&w.set, &w.a)),
                    inverse_word(&self.phi(&w.set, &w.a)),
                    self.phi(&set, &ainv),
                )
            })
            .collect()
    }

    fn pair_candidates(&self, whs: &[Wh], fams: &[Family]) -> BTreeMap<Family, Vec<(usize, usize)>> {
        let mut out: BTreeMap<Family, Vec<(usize, usize)>> = fams.iter().map(|&f| (f, Vec::new())).collect();
        let has = |m: u64, i: Option<usize>| i.is_some_and(|i| m >> i & 1 == 1);
        for (p, a) in whs.iter().enumerate() {
            for (q, b) in whs.iter().enumerate() {
                let disjoint = a.mask & b.mask == 0;
                let subset = a.mask & !b.mask == 0;
                let bit_b = 1u64 << b.hat;
                for (&f, v) in out.iter_mut() {
                    let ok = match f {
                        Family::S2 => {
                            disjoint
                                && ((a.comp && b.comp)
                                    || (!a.comp && !b.comp && !has(b.mask, a.inv) && !has(a.mask, b.inv))
                                    || (a.comp && !b.comp && !has(a.mask, b.inv)))
                        }
                        Family::S3 => {
                            disjoint
                                && ((!a.comp && !b.comp && !has(b.mask, a.inv) && has(a.mask, b.inv))
                                    || (a.comp && !b.comp && has(a.mask, b.inv)))
                        }
                        Family::S4 => !a.comp && a.a == b.a && a.mask & b.mask == 1 << a.hat,
                        Family::S5 => a.comp && b.comp && a.hat == b.hat && a.mask & b.mask == 1 << a.hat,
                        Family::S8 => subset && a.mask & bit_b == 0 && (a.comp || has(b.mask, a.inv)),
                        Family::S9 => subset && a.comp && !b.comp && a.mask & bit_b != 0,
                        _ => false,
                    };
                    if ok {
                        v.push((p, q));
                    }
                }
            }
        }
        out
    }

    fn pair_instance(&self, f: Family, a: &Wh, b: &Wh) -> Option<RelatorInstance> {
        let g = self.ctx.graph();
        let pa = self.phi(&a.set, &a.a);
        let pb = self.phi(&b.set, &b.a);
        let ab = || [pa.clone(), pb.clone()].concat();
        let ba = || [pb.clone(), pa.clone()].concat();
        let names = format!("A,a={} B,b={}", self.wh_name(&a.set, &a.a), self.wh_name(&b.set, &b.a));
        let (tag, lhs, rhs) = match f {
            Family::S2 => ("", ab(), ba()),
            Family::S8 => ("", ab(), ba()),
            Family::S3 => {
                let set = a.set.union(&b.set).minus_elem(&self.hat(&b.a));
                if !self.wh_valid(&set, &a.a) {
                    return None;
                }
                ("", ab(), [pb.clone(), self.phi(&set, &a.a)].concat())
            }
            Family::S4 => ("", ab(), self.phi(&a.set.union(&b.set), &a.a)),
            Family::S5 => {
                if a.a == b.a {
                    ("(ii) ", ab(), self.phi(&a.set.union(&b.set), &a.a))
                } else {
                    ("(i) ", ab(), ba())
                }
            }
            Family::S9 => {
                let WhiteheadElement::Letter(bl) = self.hat(&b.a) else {
                    return None;
                };
                let hat_a = self.hat(&a.a);
                let set = b
                    .set
                    .minus(&a.set)
                    .plus_elem(&hat_a)
                    .plus_elem(&WhiteheadElement::Letter(bl.inverse()));
                let ainv = a.a.inverse(g);
                let WhiteheadElement::Comp(j) = hat_a else { return None };
                let mut rhs = pb.clone();
                rhs.extend(self.phi(&set, &ainv));
                rhs.push(Symbol::gamma_j(ainv, j));
                ("", ab(), rhs)
            }
            _ => return None,
        };
        Some(self.inst(f, format!("{tag}{names}"), lhs, rhs))
    }

    fn s5_iii(&self, whs: &[Wh]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (p, a) in whs.iter().enumerate() {
            for (q, b) in whs.iter().enumerate() {
                if a.comp && b.comp && a.hat == b.hat && a.mask == b.mask {
                    out.push((p, q));
                }
            }
        }
        out
    }

    fn s5_iii_instance(&self, a: &Wh, b: &Wh) -> Option<RelatorInstance> {
        let g = self.ctx.graph();
        let prod = b.a.mul(g, &a.a);
        if prod.is_identity() {
            return None;
        }
        Some(self.inst(
            Family::S5,
            format!(
                "(iii) A={} a={} b={}",
                self.wh_name(&a.set, &a.a),
                self.w(&a.a),
                self.w(&b.a)
            ),
            [self.phi(&a.set, &a.a), self.phi(&a.set, &b.a)].concat(),
            self.phi(&a.set, &prod),
        ))
    }

    fn s6(&self, whs: &[Wh]) -> Vec<RelatorInstance> {
        let ctx = self.ctx;
        let g = ctx.graph();
        let thetas = self.thetas();
        let cands: Vec<(usize, usize)> = (0..thetas.len())
            .flat_map(|t| (0..whs.len()).map(move |w| (t, w)))
            .collect();
        let mut out = Vec::new();
        for (t, w) in thin(cands, self.bounds.max_per_family) {
            let (th, phi) = &thetas[t];
            let wh = &whs[w];
            let comps: Vec<usize> = wh
                .set
                .comps
                .iter()
                .map(|&j| {
                    ctx.component_of(phi.image(ctx.component(j).first().expect("non-empty")).letters()[0].vertex())
                })
                .collect();
            let mut letters = Vec::new();
            for &l in &wh.set.letters {
                let im = phi.apply(g, &[l]);
                let [z] = im.letters()[..] else { continue };
                letters.push(z);
            }
            let set = WhiteheadSet::new(comps, letters);
            let a = phi.apply_nf(g, &wh.a);
            if !self.wh_valid(&set, &a) {
                continue;
            }
            let mut lhs = vec![th.inverse()];
            lhs.extend(self.phi(&wh.set, &wh.a));
            lhs.push(th.clone());
            out.push(self.inst(
                Family::S6,
                format!("phi={} A,a={}", th.display(ctx), self.wh_name(&wh.set, &wh.a)),
                lhs,
                self.phi(&set, &a),
            ));
        }
        out
    }

    fn s7(&self, whs: &[Wh]) -> Vec<RelatorInstance> {
        let mut cands = Vec::new();
        for (p, w) in whs.iter().enumerate() {
            if w.comp {
                continue;
            }
            for &b in &self.iso_letters {
                let a = w.a.letters()[0];
                if b.vertex() != a.vertex() && w.set.has_letter(b) && !w.set.has_letter(b.inverse()) {
                    cands.push((p, b));
                }
            }
        }
        let mut out = Vec::new();
        for (p, b) in thin(cands, self.bounds.max_per_family) {
            let w = &whs[p];
            let a = w.a.letters()[0];
            let (s, t) = (self.iso_index(a.vertex()), self.iso_index(b.vertex()));
            let la = |l: Letter| WhiteheadElement::Letter(l);
            let bn = NormalForm::letter(b);
            let set1 = w.set.minus_elem(&la(a)).plus_elem(&la(a.inverse()));
            let set2 = w.set.minus_elem(&la(b)).plus_elem(&la(b.inverse()));
            let same = a.is_positive() == b.is_positive();
            let mut rho = if same { self.iota_at(s) } else { self.iota_at(t) };
            rho.push(Factor::Isolated.omega(s, t));
            let mut rhs = rho;
            rhs.extend(self.phi(&set2, &w.a));
            out.push(self.inst(
                Family::S7,
                format!(
                    "A,a={} b={} rho={}",
                    self.wh_name(&w.set, &w.a),
                    self.l(b),
                    if same { "printed" } else { "mixed-sign" }
                ),
                [self.phi(&w.set, &w.a), self.phi(&set1, &bn)].concat(),
                rhs,
            ));
        }
        out
    }

    fn eq_whaut(&self, whs: &[Wh]) -> Vec<RelatorInstance> {
        whs.iter()
            .map(|w| {
                self.inst(
                    Family::EqWhaut,
                    format!("A,a={}", self.wh_name(&w.set, &w.a)),
                    vec![Symbol::whitehead(w.set.clone(), w.a.clone())],
                    self.phi(&w.set, &w.a),
                )
            })
            .collect()
    }
}

/// Instantiates the requested families on `G(Γ)`. Every instance satisfies
/// its family's side conditions; enumeration is exhaustive up to the
/// parameter length bound and then thinned to `max_per_family` instances.
pub fn instantiate_relators(ctx: &Raag, families: &[Family], bounds: &Bounds) -> Result<Vec<RelatorInstance>> {
    let env = Env::new(ctx, *bounds);
    let cap = bounds.max_per_family;
    let needs_wh = families
        .iter()
        .any(|f| f.uses_whitehead_pairs() || matches!(f, Family::S1 | Family::S6 | Family::S7 | Family::EqWhaut));
    let whs = if needs_wh { env.whs() } else { Vec::new() };
    let pair_fams: Vec<Family> = families.iter().copied().filter(|f| f.uses_whitehead_pairs()).collect();
    let mut pairs = if pair_fams.is_empty() {
        BTreeMap::new()
    } else {
        env.pair_candidates(&whs, &pair_fams)
    };
    let mut out = Vec::new();
    for &f in families {
        let list = match f {
            Family::R1 => env.r1(),
            Family::R2 => env.r2(),
            Family::R3 => env.r3(false),
            Family::R3Literal => env.r3(true),
            Family::R4 => env.r4(),
            Family::R5 => env.r5(),
            Family::R6 => env.r6(),
            Family::R7 => env.r7(),
            Family::R8 => env.r8(),
            Family::R9 => env.r9(),
            Family::R10 => env.r10(),
            Family::R11 => env.r11(false),
            Family::R11Literal => env.r11(true),
            Family::R12 => env.r12(),
            Family::Sigma => env.sigma(),
            Family::Rsymm => env.rsymm(),
            Family::W => env.wreath(),
            Family::D => env.d(),
            Family::S1 => env.s1(&whs),
            Family::S6 => env.s6(&whs),
            Family::S7 => env.s7(&whs),
            Family::EqWhaut => env.eq_whaut(&whs),
            Family::S5 => {
                let mut cands: Vec<(bool, usize, usize)> = pairs
                    .remove(&f)
                    .unwrap_or_default()
                    .into_iter()
                    .map(|(p, q)| (false, p, q))
                    .collect();
                cands.extend(env.s5_iii(&whs).into_iter().map(|(p, q)| (true, p, q)));
                thin(cands, cap * 2)
                    .into_iter()
                    .filter_map(|(iii, p, q)| {
                        if iii {
                            env.s5_iii_instance(&whs[p], &whs[q])
                        } else {
                            env.pair_instance(f, &whs[p], &whs[q])
                        }
                    })
                    .collect()
            }
            _ => thin(pairs.remove(&f).unwrap_or_default(), cap * 2)
                .into_iter()
                .filter_map(|(p, q)| env.pair_instance(f, &whs[p], &whs[q]))
                .collect(),
        };
        out.extend(thin(list, cap));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_lattice::Graph;
    use crate::relations::verify_relator;

    fn ctx(names: &[&str], edges: &[(&str, &str)]) -> Raag {
        Raag::new(Graph::new(names, edges).unwrap()).unwrap()
    }

    fn small() -> Raag {
        ctx(&["a", "b", "c", "d", "p", "q"], &[("a", "b"), ("c", "d")])
    }

    #[test]
    fn family_lists_parse() {
        assert_eq!(
            Family::parse_list("R1-R3,sigma").unwrap(),
            vec![Family::R1, Family::R2, Family::R3, Family::Sigma]
        );
        assert_eq!(Family::parse_list("all").unwrap().len(), Family::ALL.len());
        assert_eq!(Family::parse_list("S1-S9").unwrap().len(), 9);
        assert!(Family::parse_list("R99").is_err());
    }

    #[test]
    fn every_family_verifies_on_a_small_graph() {
        let c = small();
        let b = Bounds {
            word_len: 2,
            max_per_family: 60,
        };
        for f in Family::ALL {
            let insts = instantiate_relators(&c, &[f], &b).unwrap();
            for i in &insts {
                let v = verify_relator(&c, i);
                assert!(v.holds, "{} {} {:?}", i.family, i.bindings, v.error);
            }
        }
    }

    #[test]
    fn literal_readings_fail() {
        let c = small();
        let b = Bounds::default();
        for f in Family::DIAGNOSTIC {
            let insts = instantiate_relators(&c, &[f], &b).unwrap();
            assert!(!insts.is_empty());
            assert!(insts.iter().any(|i| !verify_relator(&c, i).holds), "{f}");
        }
    }

    #[test]
    fn corrupted_instance_fails() {
        let c = small();
        let mut i = instantiate_relators(&c, &[Family::R2], &Bounds::default())
            .unwrap()
            .remove(0);
        i.rhs[0] = i.rhs[0].inverse();
        assert!(!verify_relator(&c, &i).holds);
    }

    #[test]
    fn no_isolated_vertices_means_no_tr_ext_families() {
        let c = ctx(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]);
        let b = Bounds::default();
        for f in [
            Family::R1,
            Family::R2,
            Family::R3,
            Family::R6,
            Family::R7,
            Family::R8,
            Family::R9,
        ] {
            assert!(instantiate_relators(&c, &[f], &b).unwrap().is_empty(), "{f}");
        }
        assert!(!instantiate_relators(&c, &[Family::R10], &b).unwrap().is_empty());
    }

    #[test]
    fn r3_printed_form() {
        let c = ctx(&["z", "p"], &[]);
        let insts = instantiate_relators(&c, &[Family::R3], &Bounds::default()).unwrap();
        let i = insts.iter().find(|i| i.bindings.starts_with("x=p y=z ")).unwrap();
        assert_eq!(
            crate::automorphisms::symbol::display_symbols(&c, &i.rhs),
            "omega(0,1,2) inv(z)"
        );
    }
}
