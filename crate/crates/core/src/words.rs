//! Word calculus of `G(Γ)`: normal forms, length, support, divisors, cyclic
//! and block decompositions, roots, centralizers and least common multiples.
//!
//! Letters are ordered by vertex input order with `x⁻¹` before `x`; the
//! normal form of an element is the lexicographically least geodesic.

use crate::error::{Error, Result};
use crate::graph_lattice::{Graph, Vertex, VertexSet};
use std::collections::{HashSet, VecDeque};
use std::fmt;

/// A generator or inverse generator `x^{±1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u16);

impl Letter {
    /// Letter `x` (positive) or `x⁻¹` (negative).
    pub fn new(v: Vertex, positive: bool) -> Self {
        Letter((v as u16) << 1 | positive as u16)
    }

    /// Positive letter `x`.
    pub fn pos(v: Vertex) -> Self {
        Letter::new(v, true)
    }

    /// Negative letter `x⁻¹`.
    pub fn neg(v: Vertex) -> Self {
        Letter::new(v, false)
    }

    /// Underlying vertex.
    pub fn vertex(self) -> Vertex {
        (self.0 >> 1) as Vertex
    }

    /// True for `x`, false for `x⁻¹`.
    pub fn is_positive(self) -> bool {
        self.0 & 1 == 1
    }

    /// Exponent `±1`.
    pub fn sign(self) -> i32 {
        if self.is_positive() {
            1
        } else {
            -1
        }
    }

    /// `x^{-ε}` for `x^ε`.
    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    /// Letter raised to `±1`.
    pub fn pow(self, e: i32) -> Self {
        if e > 0 {
            self
        } else {
            self.inverse()
        }
    }

    /// Name of the letter in the textual syntax (`a` or `a^-1`).
    pub fn display(self, g: &Graph) -> String {
        if self.is_positive() {
            g.name(self.vertex()).to_string()
        } else {
            format!("{}^-1", g.name(self.vertex()))
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.vertex())
        } else {
            write!(f, "x{}'", self.vertex())
        }
    }
}

/// Two letters are dependent when they share a vertex or do not commute.
pub fn dependent(g: &Graph, a: Letter, b: Letter) -> bool {
    a.vertex() == b.vertex() || !g.adjacent(a.vertex(), b.vertex())
}

/// An arbitrary, possibly non-geodesic, sequence of letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    /// Parses the textual word syntax: whitespace-separated tokens `a`,
    /// `a^-1` or `a^k`, with `1` (or the empty string) for the identity.
    pub fn parse(g: &Graph, s: &str) -> Result<Word> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e: i32 = e.parse().map_err(|_| Error::Parse {
                        line: 0,
                        message: format!("bad exponent in `{tok}`"),
                    })?;
                    (n, e)
                }
                None => (tok, 1),
            };
            let v = g.vertex(name)?;
            for _ in 0..exp.unsigned_abs() {
                out.push(Letter::new(v, exp > 0));
            }
        }
        Ok(Word(out))
    }

    /// Formats the word in the textual syntax.
    pub fn display(&self, g: &Graph) -> String {
        fmt_letters(g, &self.0)
    }
}

/// Formats letters as space separated tokens, `1` for the empty word.
pub fn fmt_letters(g: &Graph, letters: &[Letter]) -> String {
    if letters.is_empty() {
        "1".to_string()
    } else {
        letters.iter().map(|l| l.display(g)).collect::<Vec<_>>().join(" ")
    }
}

/// The canonical geodesic representative of a group element.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm(Vec<Letter>);

impl NormalForm {
    /// The identity element.
    pub fn identity() -> Self {
        NormalForm(Vec::new())
    }

    /// Normal form of a single letter.
    pub fn letter(l: Letter) -> Self {
        NormalForm(vec![l])
    }

    /// Normal form of a word.
    pub fn of(g: &Graph, letters: &[Letter]) -> Self {
        normalize(g, letters)
    }

    /// Parses and normalizes a word.
    pub fn parse(g: &Graph, s: &str) -> Result<Self> {
        Ok(normalize(g, &Word::parse(g, s)?.0))
    }

    /// The letters of the canonical geodesic.
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Geodesic length `lg`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the identity.
    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Same as [`NormalForm::is_identity`].
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Support `ν`.
    pub fn support(&self) -> VertexSet {
        self.0.iter().map(|l| l.vertex()).collect()
    }

    /// Product `self · other`.
    pub fn mul(&self, g: &Graph, other: &NormalForm) -> NormalForm {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        normalize(g, &v)
    }

    /// Inverse element.
    pub fn inverse(&self, g: &Graph) -> NormalForm {
        let v: Vec<Letter> = self.0.iter().rev().map(|l| l.inverse()).collect();
        NormalForm(canonical(g, &v))
    }

    /// Integer power.
    pub fn pow(&self, g: &Graph, k: i64) -> NormalForm {
        let base = if k < 0 { self.inverse(g) } else { self.clone() };
        let mut v = Vec::new();
        for _ in 0..k.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        normalize(g, &v)
    }

    /// Conjugate `by⁻¹ · self · by`.
    pub fn conjugate(&self, g: &Graph, by: &NormalForm) -> NormalForm {
        let mut v: Vec<Letter> = by.0.iter().rev().map(|l| l.inverse()).collect();
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&by.0);
        normalize(g, &v)
    }

    /// Formats in the textual syntax.
    pub fn display(&self, g: &Graph) -> String {
        fmt_letters(g, &self.0)
    }
}

/// Freely reduces a word modulo commutation: appends letters one by one,
/// cancelling each against the first earlier inverse reachable through
/// commuting letters. The result is geodesic.
pub fn reduce(g: &Graph, letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    'next: for &l in letters {
        for i in (0..out.len()).rev() {
            let k = out[i];
            if k == l.inverse() {
                out.remove(i);
                continue 'next;
            }
            if dependent(g, k, l) {
                break;
            }
        }
        out.push(l);
    }
    out
}

/// Lexicographically least linearization of a reduced word's commutation class.
pub fn canonical(g: &Graph, letters: &[Letter]) -> Vec<Letter> {
    let mut rest: Vec<Letter> = letters.to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..rest.len() {
            if rest[..i].iter().any(|&k| dependent(g, k, rest[i])) {
                continue;
            }
            if best.is_none_or(|b| rest[i] < rest[b]) {
                best = Some(i);
            }
        }
        let b = best.expect("some letter is always available");
        out.push(rest.remove(b));
    }
    out
}

/// Normal form of an arbitrary word.
pub fn normalize(g: &Graph, letters: &[Letter]) -> NormalForm {
    NormalForm(canonical(g, &reduce(g, letters)))
}

/// Equality in `G(Γ)`.
pub fn equal(g: &Graph, u: &[Letter], v: &[Letter]) -> bool {
    normalize(g, u) == normalize(g, v)
}

/// Positions of letters that can be moved to the front of a reduced word.
pub fn front_positions(g: &Graph, w: &[Letter]) -> Vec<usize> {
    (0..w.len())
        .filter(|&i| w[..i].iter().all(|&k| !dependent(g, k, w[i])))
        .collect()
}

/// Positions of letters that can be moved to the back of a reduced word.
pub fn back_positions(g: &Graph, w: &[Letter]) -> Vec<usize> {
    (0..w.len())
        .filter(|&i| w[i + 1..].iter().all(|&k| !dependent(g, k, w[i])))
        .collect()
}

/// `gd^l_Y(w)`: returns `(d, v)` with `w = d∘v`, `ν(d) ⊆ Y`, `d` maximal.
pub fn greatest_left_divisor(g: &Graph, w: &NormalForm, y: VertexSet) -> (NormalForm, NormalForm) {
    let mut rest = w.0.clone();
    let mut d = Vec::new();
    loop {
        let pick = front_positions(g, &rest)
            .into_iter()
            .find(|&i| y.contains(rest[i].vertex()));
        match pick {
            Some(i) => d.push(rest.remove(i)),
            None => break,
        }
    }
    (NormalForm(canonical(g, &d)), NormalForm(canonical(g, &rest)))
}

/// `gd^r_Y(w)`: returns `(v, d)` with `w = v∘d`, `ν(d) ⊆ Y`, `d` maximal.
pub fn greatest_right_divisor(g: &Graph, w: &NormalForm, y: VertexSet) -> (NormalForm, NormalForm) {
    let mut rest = w.0.clone();
    let mut d = Vec::new();
    loop {
        let pick = back_positions(g, &rest)
            .into_iter()
            .find(|&i| y.contains(rest[i].vertex()));
        match pick {
            Some(i) => d.insert(0, rest.remove(i)),
            None => break,
        }
    }
    (NormalForm(canonical(g, &rest)), NormalForm(canonical(g, &d)))
}

/// True when `d` is a left divisor of `w` (`w = d∘v`).
pub fn is_left_divisor(g: &Graph, d: &NormalForm, w: &NormalForm) -> bool {
    d.inverse(g).mul(g, w).len() + d.len() == w.len()
}

/// True when `d` is a right divisor of `w` (`w = v∘d`).
pub fn is_right_divisor(g: &Graph, d: &NormalForm, w: &NormalForm) -> bool {
    w.mul(g, &d.inverse(g)).len() + d.len() == w.len()
}

/// `w = u⁻¹∘core∘u` with `core` cyclically minimal.
pub fn cyclic_decomposition(g: &Graph, w: &NormalForm) -> (NormalForm, NormalForm) {
    let mut core = w.0.clone();
    let mut u: Vec<Letter> = Vec::new();
    'outer: loop {
        let fronts = front_positions(g, &core);
        let backs = back_positions(g, &core);
        for &i in &fronts {
            for &j in &backs {
                if i != j && core[j] == core[i].inverse() {
                    let l = core[i];
                    let (a, b) = if i < j { (i, j) } else { (j, i) };
                    core.remove(b);
                    core.remove(a);
                    u.insert(0, l.inverse());
                    continue 'outer;
                }
            }
        }
        break;
    }
    (NormalForm(canonical(g, &u)), NormalForm(canonical(g, &core)))
}

/// True when no single-letter conjugation and no cyclic strip shortens `w`.
pub fn is_cyclically_minimal(g: &Graph, w: &NormalForm) -> bool {
    cyclic_decomposition(g, w).0.is_identity()
}

/// Block decomposition `w = u⁻¹ (w₁⋯w_l) u` of an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Conjugator `u`.
    pub conjugator: NormalForm,
    /// Cyclically minimal core.
    pub core: NormalForm,
    /// Blocks `w_j`, ordered by least support vertex.
    pub blocks: Vec<NormalForm>,
}

/// Connected components of the non-commutation graph on `s`.
pub fn delta_components(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    let mut rest = s;
    let mut out = Vec::new();
    while let Some(start) = rest.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(s.difference(g.star(v)));
            }
            next = next.difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        out.push(comp);
        rest = rest.difference(comp);
    }
    out
}

/// Splits an element into its conjugator and the blocks of its core.
pub fn block_decomposition(g: &Graph, w: &NormalForm) -> BlockDecomposition {
    let (u, core) = cyclic_decomposition(g, w);
    let blocks = delta_components(g, core.support())
        .into_iter()
        .map(|c| {
            let part: Vec<Letter> = core.0.iter().copied().filter(|l| c.contains(l.vertex())).collect();
            NormalForm(canonical(g, &part))
        })
        .collect();
    BlockDecomposition {
        conjugator: u,
        core,
        blocks,
    }
}

/// Left divisors of `w` of the given length, each as a normal form.
pub fn left_divisors_of_length(g: &Graph, w: &NormalForm, len: usize) -> Vec<NormalForm> {
    let letters = &w.0;
    let n = letters.len();
    let mut level: HashSet<u64> = HashSet::from([0u64]);
    for _ in 0..len {
        let mut next = HashSet::new();
        for &mask in &level {
            for i in 0..n {
                if mask >> i & 1 == 1 {
                    continue;
                }
                let free = (0..i).all(|j| mask >> j & 1 == 1 || !dependent(g, letters[j], letters[i]));
                if free {
                    next.insert(mask | 1 << i);
                }
            }
        }
        level = next;
    }
    let mut out: Vec<NormalForm> = level
        .into_iter()
        .map(|mask| {
            let d: Vec<Letter> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| letters[i]).collect();
            NormalForm(canonical(g, &d))
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn block_root(g: &Graph, b: &NormalForm) -> (NormalForm, u64) {
    let l = b.len();
    for k in (2..=l).rev() {
        if !l.is_multiple_of(k) {
            continue;
        }
        for r in left_divisors_of_length(g, b, l / k) {
            if r.pow(g, k as i64) == *b {
                return (r, k as u64);
            }
        }
    }
    (b.clone(), 1)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Root `r` and exponent `n` with `w = rⁿ`, `r` not a proper power.
/// The identity has root `(1, 1)`.
pub fn root(g: &Graph, w: &NormalForm) -> (NormalForm, u64) {
    if w.is_identity() {
        return (NormalForm::identity(), 1);
    }
    let bd = block_decomposition(g, w);
    let roots: Vec<(NormalForm, u64)> = bd.blocks.iter().map(|b| block_root(g, b)).collect();
    let n = roots.iter().fold(0, |acc, (_, k)| gcd(acc, *k));
    let mut r = NormalForm::identity();
    for (rb, k) in &roots {
        r = r.mul(g, &rb.pow(g, (k / n) as i64));
    }
    (r.conjugate(g, &bd.conjugator), n)
}

/// `C(w) = ⟨v₁⟩ × ⋯ × ⟨v_k⟩ × A(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerBasis {
    /// Roots of the blocks.
    pub roots: Vec<NormalForm>,
    /// `Y` with `A(w) = G(Y)`.
    pub parabolic: VertexSet,
}

impl CentralizerBasis {
    /// Membership of `c` in the centralizer described by the basis.
    pub fn contains(&self, g: &Graph, c: &NormalForm) -> bool {
        let mut covered = self.parabolic;
        for r in &self.roots {
            let s = r.support();
            covered = covered.union(s);
            let part: Vec<Letter> = c.0.iter().copied().filter(|l| s.contains(l.vertex())).collect();
            let part = normalize(g, &part);
            if part.is_identity() {
                continue;
            }
            if !part.len().is_multiple_of(r.len()) {
                return false;
            }
            let k = (part.len() / r.len()) as i64;
            if part != r.pow(g, k) && part != r.pow(g, -k) {
                return false;
            }
        }
        c.support().is_subset(covered)
    }
}

/// `A(w)`: vertices outside `ν(w)` commuting with all of `ν(w)`.
pub fn a_set(g: &Graph, w: &NormalForm) -> VertexSet {
    let s = w.support();
    let common = s.iter().fold(g.all(), |acc, v| acc.intersection(g.star(v)));
    common.difference(s)
}

/// Centralizer basis of a cyclically minimal element.
pub fn centralizer_basis(g: &Graph, w: &NormalForm) -> Result<CentralizerBasis> {
    if !is_cyclically_minimal(g, w) {
        return Err(Error::Precondition(format!(
            "`{}` is not cyclically minimal",
            w.display(g)
        )));
    }
    let bd = block_decomposition(g, w);
    let roots = bd.blocks.iter().map(|b| block_root(g, b).0).collect();
    Ok(CentralizerBasis {
        roots,
        parabolic: a_set(g, w),
    })
}

/// If `w = f⁻¹∘x^ε∘f` returns `(f, ε)` with `f` free of left divisors in `C(x)`.
pub fn conjugate_generator_form(g: &Graph, w: &NormalForm, x: Vertex) -> Option<(NormalForm, i32)> {
    let (u, core) = cyclic_decomposition(g, w);
    if core.len() != 1 || core.0[0].vertex() != x {
        return None;
    }
    let (_, f) = greatest_left_divisor(g, &u, g.star(x));
    Some((f, core.0[0].sign()))
}

/// Least common right multiple of two elements in the divisor order
/// (`w = p∘u = q∘v`), or `None` when no geodesic common multiple exists.
pub fn right_lcm(g: &Graph, u: &NormalForm, v: &NormalForm) -> Option<NormalForm> {
    fn rec(g: &Graph, u: Vec<Letter>, mut v: Vec<Letter>) -> Option<Vec<Letter>> {
        let Some(&j) = back_positions(g, &v).first() else {
            return Some(u);
        };
        let l = v.remove(j);
        let mut u = u;
        if let Some(i) = back_positions(g, &u).into_iter().find(|&i| u[i] == l) {
            u.remove(i);
        } else if u.iter().any(|&k| dependent(g, k, l)) {
            return None;
        }
        let mut m = rec(g, u, v)?;
        m.push(l);
        Some(m)
    }
    let m = rec(g, u.0.clone(), v.0.clone())?;
    let nf = normalize(g, &m);
    (nf.len() == m.len()).then_some(nf)
}

/// Least common right multiple of a family of elements.
pub fn right_lcm_all<'a, I: IntoIterator<Item = &'a NormalForm>>(g: &Graph, items: I) -> Option<NormalForm> {
    items
        .into_iter()
        .try_fold(NormalForm::identity(), |acc, w| right_lcm(g, &acc, w))
}

/// Every geodesic word of the element (all linearizations of its heap).
pub fn all_geodesics(g: &Graph, w: &NormalForm) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(g: &Graph, rest: &mut Vec<Letter>, cur: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in front_positions(g, rest) {
            let l = rest.remove(i);
            cur.push(l);
            rec(g, rest, cur, out);
            cur.pop();
            rest.insert(i, l);
        }
    }
    let mut rest = w.0.clone();
    rec(g, &mut rest, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Brute-force normal form: explores free cancellations and commuting
/// transpositions and returns the lexicographically least shortest word.
pub fn brute_force_normal_form(g: &Graph, letters: &[Letter]) -> Vec<Letter> {
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    let mut queue = VecDeque::from([letters.to_vec()]);
    seen.insert(letters.to_vec());
    let mut best = letters.to_vec();
    while let Some(w) = queue.pop_front() {
        if (w.len(), &w) < (best.len(), &best) {
            best = w.clone();
        }
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            let mut next = Vec::new();
            if a == b.inverse() {
                next.push([&w[..i], &w[i + 2..]].concat());
            } else if !dependent(g, a, b) {
                let mut s = w.clone();
                s.swap(i, i + 1);
                next.push(s);
            }
            for s in next {
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gd() -> Graph {
        Graph::new(
            &["v", "c", "a", "b", "r", "s", "t"],
            &[("v", "c"), ("c", "a"), ("c", "b"), ("a", "r"), ("r", "s"), ("b", "t")],
        )
        .unwrap()
    }

    fn nf(g: &Graph, s: &str) -> NormalForm {
        NormalForm::parse(g, s).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let g = gd();
        assert!(nf(&g, "a a^-1").is_identity());
        assert_eq!(nf(&g, "a c a^-1"), nf(&g, "c"));
        assert_eq!(nf(&g, "r s r").len(), 3);
        assert_eq!(nf(&g, "a c"), nf(&g, "c a"));
        assert!(nf(&g, "v c v^-1 c^-1").is_identity());
        assert_eq!(nf(&g, "a b^-1 a").support(), g.set("a b").unwrap());
    }

    #[test]
    fn divisor_examples() {
        let g = gd();
        let w = nf(&g, "c r a");
        let (d, _) = greatest_left_divisor(&g, &w, g.set("a c").unwrap());
        assert_eq!(d, nf(&g, "c a"));
        let (d, rest) = greatest_left_divisor(&g, &nf(&g, "v a c"), g.set("a c").unwrap());
        assert_eq!((d, rest), (nf(&g, "c"), nf(&g, "v a")));
        assert_eq!(greatest_left_divisor(&g, &w, g.all()).0, w);
        assert!(greatest_left_divisor(&g, &w, VertexSet::EMPTY).0.is_identity());
    }

    #[test]
    fn cyclic_examples() {
        let g = gd();
        let (u, core) = cyclic_decomposition(&g, &nf(&g, "v^-1 r v"));
        assert_eq!((u, core), (nf(&g, "v"), nf(&g, "r")));
        assert_eq!(nf(&g, "a^-1 r a"), nf(&g, "r"));
        let w = nf(&g, "r s");
        assert_eq!(cyclic_decomposition(&g, &w), (NormalForm::identity(), w));
    }

    #[test]
    fn block_and_root_examples() {
        let g = gd();
        assert_eq!(block_decomposition(&g, &nf(&g, "a c")).blocks.len(), 2);
        assert_eq!(block_decomposition(&g, &nf(&g, "r s b t")).blocks.len(), 1);
        assert_eq!(block_decomposition(&g, &nf(&g, "a s r")).blocks.len(), 2);
        assert_eq!(root(&g, &nf(&g, "r s r s")), (nf(&g, "r s"), 2));
        assert_eq!(root(&g, &nf(&g, "a a")), (nf(&g, "a"), 2));
    }

    #[test]
    fn centralizer_examples() {
        let g = gd();
        let cb = centralizer_basis(&g, &nf(&g, "a s a s")).unwrap();
        assert_eq!(cb.roots, vec![nf(&g, "a s")]);
        assert_eq!(cb.parabolic, g.set("r").unwrap());
        let cb = centralizer_basis(&g, &nf(&g, "a c")).unwrap();
        assert_eq!(cb.roots.len(), 2);
        assert!(cb.parabolic.is_empty());
        assert!(centralizer_basis(&g, &nf(&g, "v^-1 r v")).is_err());
    }

    #[test]
    fn conjugate_generator_examples() {
        let g = gd();
        let v = g.vertex("v").unwrap();
        assert_eq!(
            conjugate_generator_form(&g, &nf(&g, "a^-1 v a"), v),
            Some((nf(&g, "a"), 1))
        );
        assert_eq!(
            conjugate_generator_form(&g, &nf(&g, "c v c^-1"), v),
            Some((NormalForm::identity(), 1))
        );
        assert_eq!(
            conjugate_generator_form(&g, &nf(&g, "v"), v),
            Some((NormalForm::identity(), 1))
        );
        assert_eq!(conjugate_generator_form(&g, &nf(&g, "v a"), v), None);
    }

    #[test]
    fn lcm_examples() {
        let g = gd();
        assert_eq!(right_lcm(&g, &nf(&g, "a"), &nf(&g, "c")).unwrap(), nf(&g, "a c"));
        assert_eq!(right_lcm(&g, &nf(&g, "r a"), &nf(&g, "s a")).unwrap(), nf(&g, "r s a"));
        assert!(right_lcm(&g, &nf(&g, "r a"), &nf(&g, "c")).is_none());
        assert_eq!(right_lcm(&g, &nf(&g, "a"), &nf(&g, "r")).unwrap(), nf(&g, "a r"));
        assert!(right_lcm(&g, &nf(&g, "a"), &nf(&g, "v")).is_none());
        assert!(right_lcm(&g, &nf(&g, "a"), &nf(&g, "a^-1")).is_none());
    }
}
