//! Properties of closures, admissible sets, classes and the total order,
//! checked on every labelled graph with at most six vertices.

use super::{ensure, CheckOptions, Outcome};
use crate::graph_lattice::{
    admissible_of, admissible_set, closure, diamond_class, dom_graph, dominates, enumerate_lattice, h_closure,
    is_k_maximal, is_k_minimal, is_l_minimal, orthogonal_complement, perp_class, total_order, vertex_classification,
    Graph, LatticeKind, TieBreaks, VertexSet,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

/// Calls `f` on every labelled graph with `0..=max_n` vertices, spread over
/// `threads` workers. Returns the number of graphs, or the first failure
/// prefixed by the graph.
pub fn for_all_graphs<F>(max_n: usize, threads: usize, f: F) -> Result<usize, String>
where
    F: Fn(&Graph, u64) -> Result<(), String> + Sync,
{
    let mut jobs: Vec<(usize, u64)> = Vec::new();
    for n in 0..=max_n {
        let pairs = n * n.saturating_sub(1) / 2;
        jobs.extend((0..1u64 << pairs).map(|m| (n, m)));
    }
    let next = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let failure: Mutex<Option<String>> = Mutex::new(None);
    std::thread::scope(|s| {
        for _ in 0..threads.max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= jobs.len() || stop.load(Ordering::Relaxed) {
                    break;
                }
                let (n, mask) = jobs[i];
                let g = Graph::from_edge_mask(n, mask);
                if let Err(e) = f(&g, mask) {
                    stop.store(true, Ordering::Relaxed);
                    let mut slot = failure.lock().expect("no poisoning");
                    slot.get_or_insert_with(|| format!("{g:?}: {e}"));
                    break;
                }
            });
        }
    });
    match failure.into_inner().expect("no poisoning") {
        Some(e) => Err(e),
        None => Ok(jobs.len()),
    }
}

fn star_of(g: &Graph, s: VertexSet) -> VertexSet {
    orthogonal_complement(g, s)
}

fn closure_properties(g: &Graph, subsets: &[VertexSet], cls: &[VertexSet]) -> Result<(), String> {
    for (i, &y) in subsets.iter().enumerate() {
        let c = cls[i];
        ensure(y.is_subset(c), || format!("cl not extensive at {}", g.fmt_set(y)))?;
        ensure(closure(g, c) == c, || format!("cl not idempotent at {}", g.fmt_set(y)))?;
        for (j, &z) in subsets.iter().enumerate() {
            if y.is_subset(z) {
                ensure(c.is_subset(cls[j]), || {
                    format!("cl not monotone at {} in {}", g.fmt_set(y), g.fmt_set(z))
                })?;
            }
        }
    }
    Ok(())
}

/// The twelve items of the basic lemma on admissible sets.
fn admissible_items(g: &Graph, subsets: &[VertexSet], adm_u: &[VertexSet]) -> Result<(), String> {
    let n = g.n();
    let adm = |x| admissible_of(g, x);
    let cl = |x| closure(g, VertexSet::singleton(x));
    for (i, &u) in subsets.iter().enumerate() {
        for (j, &v) in subsets.iter().enumerate() {
            if u.is_subset(v) {
                ensure(adm_u[j].is_subset(adm_u[i]), || {
                    format!("(i) fails for U={} V={}", g.fmt_set(u), g.fmt_set(v))
                })?;
            }
            ensure(adm_u[i].intersection(adm_u[j]) == admissible_set(g, u.union(v)), || {
                format!("(ii) fails for U={} V={}", g.fmt_set(u), g.fmt_set(v))
            })?;
        }
        let union = adm_u[i].iter().fold(VertexSet::EMPTY, |acc, y| acc.union(adm(y)));
        ensure(adm_u[i] == union, || format!("(x) fails for U={}", g.fmt_set(u)))?;
    }
    for x in 0..n {
        let (ax, sx, px) = (adm(x), g.star(x), g.neighbours(x));
        ensure(cl(x) == ax.intersection(sx), || format!("(iii) fails at {x}"))?;
        ensure((ax == cl(x)) == ax.is_subset(sx), || {
            format!("(iii) second clause fails at {x}")
        })?;
        let simplex = sx.iter().all(|u| sx.is_subset(g.star(u)));
        ensure(sx.is_subset(ax) == simplex, || format!("(iv) fails at {x}"))?;
        for z in ax.iter() {
            ensure(adm(z).is_subset(ax), || format!("(ix) fails at x={x} z={z}"))?;
        }
        if ax == cl(x) {
            for y in ax.iter() {
                ensure(cl(y) == adm(y), || format!("(xi) fails at x={x} y={y}"))?;
            }
        }
        for z in (0..n).filter(|&z| z != x) {
            let (az, sz, pz) = (adm(z), g.star(z), g.neighbours(z));
            if px.is_subset(pz) {
                ensure(az.is_subset(ax), || format!("(v) fails at x={x} z={z}"))?;
            }
            if sx.is_subset(sz) {
                ensure(az.is_subset(ax), || format!("(vi) fails at x={x} z={z}"))?;
            }
            ensure(az.is_subset(ax) == px.is_subset(sz), || {
                format!("(vii) fails at x={x} z={z}")
            })?;
            ensure((ax == az) == (sx == sz || px == pz), || {
                format!("(viii) fails at x={x} z={z}")
            })?;
            if g.commute(x, z) {
                ensure(ax.is_subset(star_of(g, az)), || format!("(xii) fails at x={x} z={z}"))?;
            }
        }
    }
    Ok(())
}

fn class_lemmas(g: &Graph) -> Result<(), String> {
    let n = g.n();
    let cls = vertex_classification(g);
    let adm = |x| admissible_of(g, x);
    let cl = |x| closure(g, VertexSet::singleton(x));
    for x in 0..n {
        let ax = adm(x);
        let class = cls.class_of(x);
        let by_def: VertexSet = (0..n)
            .filter(|&y| g.star(x) == g.star(y) || g.neighbours(x) == g.neighbours(y))
            .collect();
        ensure(class == by_def, || format!("class of {x} is {}", g.fmt_set(class)))?;
        for y in 0..n {
            ensure(ax.contains(y) == g.neighbours(x).is_subset(g.star(y)), || {
                format!("admot (i) fails at x={x} y={y}")
            })?;
            ensure(ax.contains(y) == cl(y).is_subset(ax), || {
                format!("admot (ii) fails at x={x} y={y}")
            })?;
            ensure((adm(y) == ax) == class.contains(y), || {
                format!("ad1 (i) fails at x={x} y={y}")
            })?;
        }
        let lower = ax
            .iter()
            .filter(|&y| adm(y).is_subset(ax) && adm(y) != ax)
            .fold(VertexSet::EMPTY, |acc, y| acc.union(adm(y)));
        ensure(class == ax.difference(lower), || format!("ad1 (ii) fails at {x}"))?;
        let want = if ax == cl(x) {
            perp_class(g, x)
        } else {
            diamond_class(g, x)
        };
        ensure(class == want, || format!("ad2 fails at {x}"))?;
        ensure(is_k_minimal(g, x) == (class == ax), || format!("admin fails at {x}"))?;
        if is_k_minimal(g, x) {
            ensure(is_l_minimal(g, x), || format!("admin (i) fails at {x}"))?;
            for y in ax.iter() {
                ensure(cl(y) == perp_class(g, y), || format!("admin (ii) fails at x={x} y={y}"))?;
            }
        }
    }
    Ok(())
}

fn h_lemma(g: &Graph) -> Result<(), String> {
    let n = g.n();
    for x in 0..n {
        let h = |y: usize| h_closure(g, x, VertexSet::singleton(y));
        for y in 0..n {
            if g.star(x).contains(y) {
                ensure(h(y) == VertexSet::singleton(y), || {
                    format!("hel (i) fails at x={x} y={y}")
                })?;
                continue;
            }
            for z in (0..n).filter(|&z| z != x && is_k_maximal(g, z)) {
                if admissible_of(g, y).is_subset(admissible_of(g, z)) {
                    ensure(h(y) == h(z), || format!("hel (ii) fails at x={x} y={y} z={z}"))?;
                }
            }
        }
    }
    Ok(())
}

fn component_lemmas(g: &Graph) -> Result<(), String> {
    let n = g.n();
    for y in 0..n {
        let comps_y = g.components(g.star(y));
        for x in 0..n {
            let ax = admissible_of(g, x);
            for &c in &comps_y {
                if !ax.is_subset(c.union(g.star(y))) && ax.meets(c) {
                    ensure(ax.contains(y), || format!("fixad fails at x={x} y={y}"))?;
                }
            }
            if !dominates(g, x, y) {
                continue;
            }
            let comps_x = g.components(g.star(x));
            for &c in &comps_y {
                if !c.contains(x) {
                    ensure(comps_x.contains(&c), || format!("xycomps (i) fails at x={x} y={y}"))?;
                } else {
                    let meet = comps_x
                        .iter()
                        .filter(|d| d.meets(c))
                        .fold(VertexSet::EMPTY, |acc, d| acc.union(*d));
                    ensure(c == meet.union(g.star(x)).difference(g.star(y)), || {
                        format!("xycomps (ii) fails at x={x} y={y}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn lattice_properties(g: &Graph) -> Result<(), String> {
    let k = enumerate_lattice(g, LatticeKind::Admissible);
    let l = enumerate_lattice(g, LatticeKind::Closed);
    for &s in &k.elements {
        ensure(l.contains(s), || {
            format!("admissible set {} is not closed", g.fmt_set(s))
        })?;
    }
    for lat in [&k, &l] {
        for &a in &lat.elements {
            for &b in &lat.elements {
                ensure(lat.contains(a.intersection(b)), || {
                    "lattice not closed under intersection".into()
                })?;
            }
        }
    }
    ensure(k.top() == g.all(), || "top of K is not X".into())?;
    ensure(k.bottom() == admissible_set(g, g.all()), || {
        "bottom of K is not a(X)".into()
    })?;
    Ok(())
}

fn order_properties(g: &Graph, tie: &TieBreaks) -> Result<(), String> {
    let order = total_order(g, tie);
    let n = g.n();
    ensure(order.len() == n, || "order is not a permutation".into())?;
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    ensure(pos.iter().all(|&p| p != usize::MAX), || "order misses a vertex".into())?;
    let cls = vertex_classification(g);
    for x in 0..n {
        for y in 0..n {
            if admissible_of(g, x).is_subset(admissible_of(g, y)) && admissible_of(g, x) != admissible_of(g, y) {
                ensure(pos[y] < pos[x], || format!("order property (1) fails at x={x} y={y}"))?;
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (z, y, x) = (order[i], order[j], order[k]);
                if cls.class_of(x).contains(z) {
                    ensure(cls.class_of(x).contains(y), || {
                        format!("order property (2) fails at {z} {y} {x}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn random_tie_breaks(g: &Graph, rng: &mut ChaCha8Rng) -> TieBreaks {
    let mut priority: Vec<usize> = (0..g.n()).collect();
    priority.shuffle(rng);
    let class_orders = vertex_classification(g)
        .classes
        .iter()
        .map(|c| {
            let mut v = c.to_vec();
            v.shuffle(rng);
            v
        })
        .collect();
    TieBreaks {
        b_priority: priority,
        class_orders,
    }
}

/// Checks every property on one graph.
fn all_properties(g: &Graph, seed: u64) -> Result<(), String> {
    let subsets: Vec<VertexSet> = g.all().subsets().collect();
    let cls: Vec<VertexSet> = subsets.iter().map(|&y| closure(g, y)).collect();
    let adm_u: Vec<VertexSet> = subsets.iter().map(|&y| admissible_set(g, y)).collect();
    closure_properties(g, &subsets, &cls)?;
    admissible_items(g, &subsets, &adm_u)?;
    class_lemmas(g)?;
    h_lemma(g)?;
    component_lemmas(g)?;
    lattice_properties(g)?;
    order_properties(g, &TieBreaks::default())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..3 {
        order_properties(g, &random_tie_breaks(g, &mut rng))?;
    }
    Ok(())
}

pub(super) fn lemmas(opts: &CheckOptions) -> Outcome {
    let count = for_all_graphs(6, opts.threads, |g, mask| {
        all_properties(g, opts.seed ^ mask ^ (g.n() as u64) << 32)
    })?;
    Ok(format!(
        "{count} labelled graphs on at most 6 vertices, every item holds"
    ))
}

pub(super) fn no_domination(opts: &CheckOptions) -> Outcome {
    let hits = AtomicUsize::new(0);
    let count = for_all_graphs(6, opts.threads, |g, _| {
        if !dom_graph(g).is_empty() {
            return Ok(());
        }
        hits.fetch_add(1, Ordering::Relaxed);
        for x in 0..g.n() {
            ensure(admissible_of(g, x) == closure(g, VertexSet::singleton(x)), || {
                format!("a({x}) differs from cl({x})")
            })?;
        }
        Ok(())
    })?;
    Ok(format!(
        "{} of {count} graphs have no domination; 0 counterexamples",
        hits.into_inner()
    ))
}
