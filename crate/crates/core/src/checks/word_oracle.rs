//! The word calculus against brute-force oracles.
//!
//! Every word up to the length bound is normalized and compared with the
//! breadth-first exploration of free cancellations and commuting
//! transpositions. Each distinct element is then checked for greatest
//! divisors (longest prefixes and suffixes with the right support among all
//! geodesics), cyclic decomposition (conjugation descent), block
//! decomposition (components of the non-commutation graph) and roots
//! (maximal exponent among all powers inside the ball).

use super::{ensure, CheckOptions, Outcome};
use crate::graph_lattice::{Graph, VertexSet};
use crate::words::{
    block_decomposition, brute_force_normal_form, cyclic_decomposition, dependent, equal, greatest_left_divisor,
    greatest_right_divisor, normalize, root, Letter, NormalForm,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, HashSet, VecDeque};

/// Word length bound.
pub const MAX_LEN: usize = 6;
/// Number of random five-vertex graphs.
pub const RANDOM_GRAPHS: usize = 200;
/// Elements per random five-vertex graph receiving the element-level checks.
pub const SAMPLED_ELEMENTS: usize = 400;

fn letter_index(l: Letter) -> usize {
    l.vertex() << 1 | l.is_positive() as usize
}

/// The ball of radius `MAX_LEN`, built from brute-force normal forms with a
/// memoized transition table.
struct Ball {
    letters: Vec<Letter>,
    elems: Vec<Vec<Letter>>,
    index: HashMap<Vec<Letter>, u32>,
    trans: Vec<Vec<u32>>,
}

impl Ball {
    fn new(g: &Graph) -> Self {
        let letters: Vec<Letter> = (0..g.n()).flat_map(|v| [Letter::neg(v), Letter::pos(v)]).collect();
        let mut b = Ball {
            letters,
            elems: Vec::new(),
            index: HashMap::new(),
            trans: Vec::new(),
        };
        b.intern(Vec::new());
        b
    }

    fn intern(&mut self, w: Vec<Letter>) -> u32 {
        if let Some(&i) = self.index.get(&w) {
            return i;
        }
        let i = self.elems.len() as u32;
        self.elems.push(w.clone());
        self.index.insert(w, i);
        self.trans.push(vec![u32::MAX; self.letters.len()]);
        i
    }

    fn step(&mut self, g: &Graph, id: u32, l: Letter) -> u32 {
        let li = letter_index(l);
        let t = self.trans[id as usize][li];
        if t != u32::MAX {
            return t;
        }
        let mut w = self.elems[id as usize].clone();
        w.push(l);
        let t = self.intern(brute_force_normal_form(g, &w));
        self.trans[id as usize][li] = t;
        t
    }
}

/// Normalizes every word of length at most `MAX_LEN` and compares with the
/// oracle; returns the ball and the number of words.
fn words_agree(g: &Graph) -> Result<(Ball, usize), String> {
    let mut ball = Ball::new(g);
    let letters = ball.letters.clone();
    let mut stack: Vec<(Vec<Letter>, u32)> = vec![(Vec::new(), 0)];
    let mut count = 0usize;
    let mut prev: (Vec<Letter>, u32) = (Vec::new(), 0);
    while let Some((w, id)) = stack.pop() {
        count += 1;
        let nf = normalize(g, &w);
        ensure(nf.letters() == ball.elems[id as usize].as_slice(), || {
            format!(
                "normalize({}) = {}, oracle {}",
                fmt(g, &w),
                nf.display(g),
                fmt(g, &ball.elems[id as usize])
            )
        })?;
        ensure(equal(g, &w, &prev.0) == (id == prev.1), || {
            format!("equal({}, {}) disagrees", fmt(g, &w), fmt(g, &prev.0))
        })?;
        if w.len() < MAX_LEN {
            for &l in &letters {
                let t = ball.step(g, id, l);
                let mut u = w.clone();
                u.push(l);
                stack.push((u, t));
            }
        }
        prev = (w, id);
    }
    Ok((ball, count))
}

fn fmt(g: &Graph, w: &[Letter]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|l| l.display(g)).collect::<Vec<_>>().join(" ")
    }
}

fn support(w: &[Letter]) -> VertexSet {
    w.iter().map(|l| l.vertex()).collect()
}

/// All geodesic words of a reduced word: closure under commuting swaps.
fn swap_class(g: &Graph, w: &[Letter]) -> Vec<Vec<Letter>> {
    let mut seen: HashSet<Vec<Letter>> = HashSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(u) = queue.pop_front() {
        for i in 0..u.len().saturating_sub(1) {
            if !dependent(g, u[i], u[i + 1]) {
                let mut s = u.clone();
                s.swap(i, i + 1);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
    }
    seen.into_iter().collect()
}

fn divisors_agree(g: &Graph, w: &NormalForm, class: &[Vec<Letter>], y: VertexSet) -> Result<(), String> {
    let (d, rest) = greatest_left_divisor(g, w, y);
    ensure(
        d.mul(g, &rest) == *w && d.len() + rest.len() == w.len() && d.support().is_subset(y),
        || {
            format!(
                "gd_left({}, {}) = {} is not a left divisor",
                w.display(g),
                g.fmt_set(y),
                d.display(g)
            )
        },
    )?;
    let (rest_r, e) = greatest_right_divisor(g, w, y);
    ensure(
        rest_r.mul(g, &e) == *w && e.len() + rest_r.len() == w.len() && e.support().is_subset(y),
        || {
            format!(
                "gd_right({}, {}) = {} is not a right divisor",
                w.display(g),
                g.fmt_set(y),
                e.display(g)
            )
        },
    )?;
    for s in class {
        for k in 0..=s.len() {
            let (p, q) = (&s[..k], &s[s.len() - k..]);
            if support(p).is_subset(y) {
                let p = normalize(g, p);
                ensure(
                    p.len() <= d.len() && p.inverse(g).mul(g, &d).len() == d.len() - p.len(),
                    || {
                        format!(
                            "left divisor {} of {} in {} does not divide {}",
                            p.display(g),
                            w.display(g),
                            g.fmt_set(y),
                            d.display(g)
                        )
                    },
                )?;
            }
            if support(q).is_subset(y) {
                let q = normalize(g, q);
                ensure(
                    q.len() <= e.len() && e.mul(g, &q.inverse(g)).len() == e.len() - q.len(),
                    || {
                        format!(
                            "right divisor {} of {} in {} does not divide {}",
                            q.display(g),
                            w.display(g),
                            g.fmt_set(y),
                            e.display(g)
                        )
                    },
                )?;
            }
        }
    }
    Ok(())
}

fn cyclic_agrees(g: &Graph, w: &NormalForm, letters: &[Letter]) -> Result<(), String> {
    let (u, core) = cyclic_decomposition(g, w);
    ensure(
        core.conjugate(g, &u) == *w && w.len() == 2 * u.len() + core.len(),
        || {
            format!(
                "cyclic({}) = ({}, {}) does not reassemble",
                w.display(g),
                u.display(g),
                core.display(g)
            )
        },
    )?;
    for &l in letters {
        let c = NormalForm::letter(l);
        ensure(core.conjugate(g, &c).len() >= core.len(), || {
            format!(
                "core {} of {} shortens under {}",
                core.display(g),
                w.display(g),
                l.display(g)
            )
        })?;
        ensure(
            cyclic_decomposition(g, &w.conjugate(g, &c)).1.len() == core.len(),
            || {
                format!(
                    "cyclic length of {} changes under conjugation by {}",
                    w.display(g),
                    l.display(g)
                )
            },
        )?;
    }
    Ok(())
}

/// Components of the non-commutation graph on `s`, by union-find.
fn non_commuting_components(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    let vs = s.to_vec();
    let mut parent: Vec<usize> = (0..vs.len()).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if !g.adjacent(vs[i], vs[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: HashMap<usize, VertexSet> = HashMap::new();
    for (i, &v) in vs.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().insert(v);
    }
    groups.into_values().collect()
}

fn blocks_agree(g: &Graph, w: &NormalForm) -> Result<(), String> {
    let bd = block_decomposition(g, w);
    let (u, core) = cyclic_decomposition(g, w);
    ensure(bd.conjugator == u && bd.core == core, || {
        format!("block decomposition of {} has the wrong core", w.display(g))
    })?;
    let comps: HashSet<VertexSet> = non_commuting_components(g, core.support()).into_iter().collect();
    let supports: HashSet<VertexSet> = bd.blocks.iter().map(NormalForm::support).collect();
    ensure(supports == comps && bd.blocks.len() == comps.len(), || {
        format!("blocks of {} do not match the components", w.display(g))
    })?;
    let product = bd.blocks.iter().fold(NormalForm::identity(), |acc, b| acc.mul(g, b));
    let total: usize = bd.blocks.iter().map(NormalForm::len).sum();
    ensure(product == core && total == core.len(), || {
        format!("blocks of {} do not multiply to the core", w.display(g))
    })?;
    Ok(())
}

/// Largest `k` with `w = s^k` for some `s` in the ball.
fn power_table(g: &Graph, ball: &Ball) -> HashMap<Vec<Letter>, u64> {
    let mut best: HashMap<Vec<Letter>, u64> = HashMap::new();
    for s in ball.elems.iter().skip(1) {
        let s = normalize(g, s);
        for k in 2..=MAX_LEN as i64 {
            let p = s.pow(g, k);
            if p.len() > MAX_LEN {
                break;
            }
            let e = best.entry(p.letters().to_vec()).or_insert(1);
            *e = (*e).max(k as u64);
        }
    }
    best
}

fn root_agrees(g: &Graph, w: &NormalForm, powers: &HashMap<Vec<Letter>, u64>) -> Result<(), String> {
    let (r, n) = root(g, w);
    let want = powers.get(w.letters()).copied().unwrap_or(1);
    ensure(r.pow(g, n as i64) == *w && n == want, || {
        format!(
            "root({}) = ({}, {n}), oracle exponent {want}",
            w.display(g),
            r.display(g)
        )
    })?;
    ensure(powers.get(r.letters()).is_none(), || {
        format!("root {} of {} is a proper power", r.display(g), w.display(g))
    })?;
    Ok(())
}

fn elements_agree(g: &Graph, ball: &Ball, ids: &[usize], ys: &dyn Fn(usize) -> Vec<VertexSet>) -> Result<(), String> {
    let powers = power_table(g, ball);
    for &i in ids {
        let w = normalize(g, &ball.elems[i]);
        let class = swap_class(g, w.letters());
        for y in ys(i) {
            divisors_agree(g, &w, &class, y)?;
        }
        cyclic_agrees(g, &w, &ball.letters)?;
        blocks_agree(g, &w)?;
        if !w.is_identity() {
            root_agrees(g, &w, &powers)?;
        }
    }
    Ok(())
}

/// One representative edge mask per isomorphism class of graphs on `n`
/// vertices.
fn isomorphism_classes(n: usize) -> Vec<u64> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let bit = |i: usize, j: usize| pairs.iter().position(|&p| p == (i.min(j), i.max(j))).expect("pair");
    let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                let free: Vec<usize> = (0..n).filter(|v| !p.contains(v)).collect();
                free.into_iter().map(move |v| [p.clone(), vec![v]].concat())
            })
            .collect();
    }
    let mut reps = Vec::new();
    let mut seen = HashSet::new();
    for mask in 0..1u64 << pairs.len() {
        let canon = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .fold(0u64, |acc, (_, &(i, j))| acc | 1 << bit(p[i], p[j]))
            })
            .min()
            .expect("at least one permutation");
        if seen.insert(canon) {
            reps.push(mask);
        }
    }
    reps
}

pub(super) fn run(opts: &CheckOptions) -> Outcome {
    let mut words = 0usize;
    let mut elements = 0usize;
    let mut small = 0usize;
    for n in 1..=4 {
        for mask in isomorphism_classes(n) {
            let g = Graph::from_edge_mask(n, mask);
            let (ball, count) = words_agree(&g).map_err(|e| format!("{g:?}: {e}"))?;
            words += count;
            let ids: Vec<usize> = (0..ball.elems.len()).collect();
            elements += ids.len();
            let subsets: Vec<VertexSet> = g.all().subsets().collect();
            elements_agree(&g, &ball, &ids, &|_| subsets.clone()).map_err(|e| format!("{g:?}: {e}"))?;
            small += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut sampled = 0usize;
    for _ in 0..RANDOM_GRAPHS {
        let g = Graph::from_edge_mask(5, rng.gen_range(0..1u64 << 10));
        let (ball, count) = words_agree(&g).map_err(|e| format!("{g:?}: {e}"))?;
        words += count;
        let mut ids: Vec<usize> = (0..ball.elems.len()).collect();
        ids.shuffle(&mut rng);
        ids.truncate(SAMPLED_ELEMENTS);
        sampled += ids.len();
        let ys: Vec<VertexSet> = ids
            .iter()
            .map(|_| VertexSet::from_bits(rng.gen_range(0..1u64 << 5)))
            .collect();
        let pos: HashMap<usize, usize> = ids.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        elements_agree(&g, &ball, &ids, &|i| vec![ys[pos[&i]], g.all()]).map_err(|e| format!("{g:?}: {e}"))?;
    }
    Ok(format!(
        "{words} words normalized; {elements} elements on {small} graphs up to isomorphism with at most 4 vertices checked exhaustively; {sampled} sampled elements on {RANDOM_GRAPHS} random 5-vertex graphs"
    ))
}
