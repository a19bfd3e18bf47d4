//! Worked examples on the fixture graphs.

use super::{ensure, fixtures, Outcome};
use crate::automorphisms::classify::in_st_k;
use crate::automorphisms::factor::generator_family;
use crate::automorphisms::{balanced_factorization, Automorphism, ConjTarget, Raag};
use crate::error::Error;
use crate::graph_lattice::{
    admissible_closure, admissible_of, admissible_set, admissible_singletons, closure, compressed_automorphisms,
    dominates, graph_automorphisms, is_balanced, is_k_maximal, is_k_minimal, is_l_minimal, orthogonal_complement,
    out_set, total_order, vertex_classification, Graph, VertexSet,
};
use crate::words::NormalForm;
use std::collections::HashSet;

/// Compares named set equalities, reporting the first mismatch.
struct SetChecks<'a> {
    g: &'a Graph,
    count: usize,
}

impl<'a> SetChecks<'a> {
    fn new(g: &'a Graph) -> Self {
        SetChecks { g, count: 0 }
    }

    fn s(&self, names: &str) -> VertexSet {
        self.g.set(names).expect("fixture vertex")
    }

    fn eq(&mut self, what: &str, got: VertexSet, want: VertexSet) -> Result<(), String> {
        self.count += 1;
        ensure(got == want, || {
            format!("{what} = {}, expected {}", self.g.fmt_set(got), self.g.fmt_set(want))
        })
    }
}

fn cl(g: &Graph, v: &str) -> VertexSet {
    closure(g, g.set(v).expect("fixture vertex"))
}

fn adm(g: &Graph, v: &str) -> VertexSet {
    admissible_of(g, g.vertex(v).expect("fixture vertex"))
}

fn star(g: &Graph, v: &str) -> VertexSet {
    g.star(g.vertex(v).expect("fixture vertex"))
}

fn punctured(g: &Graph, v: &str) -> VertexSet {
    g.neighbours(g.vertex(v).expect("fixture vertex"))
}

pub(super) fn ga() -> Outcome {
    let g = fixtures::graph("GA.graph");
    let mut c = SetChecks::new(&g);
    let perp = |s: VertexSet| orthogonal_complement(&g, s);
    c.eq("a(a)", adm(&g, "a"), perp(c.s("b c d e g h i")))?;
    c.eq("a(a)", adm(&g, "a"), c.s("a"))?;
    c.eq("cl(a)", cl(&g, "a"), c.s("a"))?;
    c.eq("d-star", star(&g, "d"), c.s("a c d e g h"))?;
    c.eq("g-star", star(&g, "g"), c.s("a c d e g h"))?;
    for v in ["d", "g"] {
        c.eq(&format!("a({v})"), adm(&g, v), c.s("a d g"))?;
        c.eq(&format!("cl({v})"), cl(&g, v), c.s("a d g"))?;
    }
    c.eq("cl(b)", cl(&g, "b"), perp(c.s("a b c h")))?;
    c.eq("cl(b)", cl(&g, "b"), c.s("a b"))?;
    c.eq("cl(i)", cl(&g, "i"), perp(c.s("a c h i")))?;
    c.eq("cl(i)", cl(&g, "i"), c.s("a i"))?;
    c.eq("i-star minus i", punctured(&g, "i"), punctured(&g, "b"))?;
    for v in ["b", "i"] {
        c.eq(&format!("a({v})"), adm(&g, v), perp(c.s("a c h")))?;
        c.eq(&format!("a({v})"), adm(&g, v), c.s("a b d g i"))?;
    }
    c.eq("a(b)", adm(&g, "b"), cl(&g, "b").union(cl(&g, "d")).union(cl(&g, "i")))?;
    c.eq("cl(c)", cl(&g, "c"), c.s("a c"))?;
    c.eq("cl(h)", cl(&g, "h"), c.s("a h"))?;
    c.eq("c-star minus c", punctured(&g, "c"), punctured(&g, "h"))?;
    for v in ["c", "h"] {
        c.eq(&format!("a({v})"), adm(&g, v), c.s("a c h"))?;
    }
    c.eq("a(c)", adm(&g, "c"), cl(&g, "c").union(cl(&g, "h")))?;
    c.eq("a(e)", adm(&g, "e"), perp(c.s("a d f g")))?;
    c.eq("a(e)", adm(&g, "e"), c.s("e"))?;
    c.eq("cl(e)", cl(&g, "e"), c.s("e"))?;
    c.eq("cl(f)", cl(&g, "f"), perp(c.s("e f")))?;
    c.eq("cl(f)", cl(&g, "f"), c.s("e f"))?;
    c.eq("a(f)", adm(&g, "f"), perp(c.s("e")))?;
    c.eq("a(f)", adm(&g, "f"), c.s("a d e f g"))?;
    c.eq("a(f)", adm(&g, "f"), cl(&g, "d").union(cl(&g, "f")))?;
    Ok(format!("{} set equalities", c.count))
}

pub(super) fn p4() -> Outcome {
    let g = fixtures::graph("P4.graph");
    let mut c = SetChecks::new(&g);
    c.eq("a(a)", adm(&g, "a"), c.s("a b c"))?;
    c.eq("a(b)", adm(&g, "b"), c.s("b"))?;
    c.eq("a({a,d})", admissible_set(&g, c.s("a d")), c.s("b c"))?;
    c.eq("cl_a({a,d})", admissible_closure(&g, c.s("a d")), g.all())?;
    Ok(format!("{} set equalities", c.count))
}

pub(super) fn go() -> Outcome {
    let g = fixtures::graph("GO.graph");
    let mut c = SetChecks::new(&g);
    for (vs, want) in [("a b", "a b e f"), ("c d", "c d"), ("e f", "e f"), ("g", "c d g")] {
        for v in vs.split(' ') {
            c.eq(&format!("a({v})"), adm(&g, v), c.s(want))?;
        }
    }
    let v = |s: &str| g.vertex(s).expect("fixture vertex");
    for x in ["c", "d", "e", "f"] {
        ensure(is_k_minimal(&g, v(x)), || format!("{x} should be K-minimal"))?;
    }
    for x in ["a", "b", "g"] {
        ensure(is_k_maximal(&g, v(x)), || format!("{x} should be K-maximal"))?;
        ensure(!is_k_minimal(&g, v(x)), || format!("{x} should not be K-minimal"))?;
        ensure(is_l_minimal(&g, v(x)), || format!("{x} should be L-minimal"))?;
    }
    for x in 0..g.n() {
        c.eq("cl(x)", closure(&g, VertexSet::singleton(x)), VertexSet::singleton(x))?;
    }
    let cls = vertex_classification(&g);
    let classes: Vec<String> = cls.classes.iter().map(|s| g.fmt_set(*s)).collect();
    ensure(classes == ["{a,b}", "{c,d}", "{e,f}", "{g}"], || {
        format!("classes {classes:?}")
    })?;
    let want_b = [vec![adm(&g, "c"), adm(&g, "e")], vec![adm(&g, "a"), adm(&g, "g")]];
    let as_set = |l: &[VertexSet]| l.iter().copied().collect::<HashSet<_>>();
    ensure(cls.b_sets.len() == 2, || format!("{} B-sets", cls.b_sets.len()))?;
    for (i, want) in want_b.iter().enumerate() {
        ensure(as_set(&cls.b_sets[i]) == as_set(want), || format!("B_{i} differs"))?;
    }
    for (x, h) in [("a", 1), ("b", 1), ("g", 1), ("c", 0), ("d", 0), ("e", 0), ("f", 0)] {
        ensure(cls.height(v(x)) == h, || {
            format!("height of {x} is {}, expected {h}", cls.height(v(x)))
        })?;
    }
    let order: Vec<&str> = total_order(&g, &fixtures::go_tie_breaks())
        .iter()
        .map(|&x| g.name(x))
        .collect();
    ensure(order == ["g", "b", "a", "f", "e", "d", "c"], || {
        format!("order {}", order.join(" "))
    })?;
    Ok(format!(
        "{} set equalities, 4 classes, 2 B-sets, order {}",
        c.count,
        order.join(" ")
    ))
}

pub(super) fn gd() -> Outcome {
    let g = fixtures::graph("GD.graph");
    let mut c = SetChecks::new(&g);
    let listed: HashSet<VertexSet> = ["a b c v", "a r s", "b c t", "a", "b", "c", "r"]
        .iter()
        .map(|s| c.s(s))
        .collect();
    let got: HashSet<VertexSet> = admissible_singletons(&g).into_iter().collect();
    ensure(got == listed, || {
        let mut v: Vec<String> = got.iter().map(|s| g.fmt_set(*s)).collect();
        v.sort();
        format!("K_X = {}", v.join(" "))
    })?;
    for (x, want) in [
        ("v", "a b c v"),
        ("s", "a r s"),
        ("t", "b c t"),
        ("a", "a"),
        ("b", "b"),
        ("c", "c"),
        ("r", "r"),
    ] {
        c.eq(&format!("a({x})"), adm(&g, x), c.s(want))?;
    }
    let v = g.vertex("v").expect("fixture vertex");
    let comps: HashSet<VertexSet> = g.components(g.star(v)).into_iter().collect();
    ensure(comps == HashSet::from([c.s("a r s"), c.s("b t")]), || {
        "components of the complement of v-star".into()
    })?;
    ensure(dominates(&g, g.vertex("a").expect("fixture vertex"), v), || {
        "a does not dominate v".into()
    })?;
    c.eq("out(v)", out_set(&g, v), c.s("a b"))?;
    let w = is_balanced(&g).err().ok_or("GD reported balanced")?;
    let names = (g.name(w.vertex), g.name(w.pair.0), g.name(w.pair.1));
    ensure(names == ("v", "a", "b"), || format!("witness {names:?}"))?;
    Ok(format!(
        "7 admissible sets, 2 components, unbalanced at ({}, {}, {})",
        names.0, names.1, names.2
    ))
}

/// `φ = α_{C,v} τ_{v,a} τ_{v,b} τ_{v,a⁻¹}` on GD.
pub(crate) fn gd_obstruction(ctx: &Raag) -> Automorphism {
    Automorphism::parse(ctx, "lc({a,r,s},v) tr(v,a) tr(v,b) tr(v,a^-1)").expect("valid on GD")
}

pub(super) fn gd_composition() -> Outcome {
    let ctx = Raag::new(fixtures::graph("GD.graph")).map_err(|e| e.to_string())?;
    let g = ctx.graph();
    let phi = gd_obstruction(&ctx);
    let w = NormalForm::parse(g, "v a^-1 b a").expect("word");
    for x in 0..g.n() {
        let name = g.name(x);
        let xv = NormalForm::parse(g, name).expect("letter");
        let want = match name {
            "b" | "c" | "t" => xv,
            "v" => w.clone(),
            _ => xv.conjugate(g, &w),
        };
        ensure(phi.image(x) == &want, || {
            format!(
                "image of {name} is {}, expected {}",
                phi.image(x).display(g),
                want.display(g)
            )
        })?;
    }
    Ok(format!(
        "v -> {}; a -> {}",
        phi.image(0).display(g),
        phi.image(g.vertex("a").expect("a")).display(g)
    ))
}

pub(super) fn automorphism_count() -> Outcome {
    let mut parts = Vec::new();
    for name in ["GA.graph", "GO.graph", "GD.graph", "C5.graph"] {
        let g = fixtures::graph(name);
        let full = graph_automorphisms(&g).len();
        let comp = compressed_automorphisms(&g).len();
        let classes: usize = vertex_classification(&g)
            .classes
            .iter()
            .map(|c| (1..=c.len()).product::<usize>())
            .product();
        ensure(full == classes * comp, || {
            format!("{name}: |Aut| = {full}, class factor {classes}, |Aut_comp| = {comp}")
        })?;
        parts.push(format!("{} {full}={classes}*{comp}", name.trim_end_matches(".graph")));
    }
    Ok(parts.join(", "))
}

/// Radius of the search among products of elementary conjugating
/// generators in the negative control.
pub const NEGATIVE_CONTROL_RADIUS: usize = 3;

pub(super) fn negative_control() -> Outcome {
    let ctx = Raag::new(fixtures::graph("GD.graph")).map_err(|e| e.to_string())?;
    let g = ctx.graph();
    let phi = gd_obstruction(&ctx);
    let gens = generator_family(&ctx, ConjTarget::LInn);
    let gen_auts: Vec<Automorphism> = gens
        .iter()
        .map(|s| Automorphism::from_symbol(&ctx, s))
        .collect::<crate::Result<_>>()
        .map_err(|e| e.to_string())?;
    let mut seen: HashSet<Vec<NormalForm>> = HashSet::from([Automorphism::identity(g.n()).images().to_vec()]);
    let mut frontier = vec![Automorphism::identity(g.n())];
    let mut candidates = 0usize;
    for depth in 0..=NEGATIVE_CONTROL_RADIUS {
        let mut next = Vec::new();
        for d in &frontier {
            candidates += 1;
            let gamma = phi.compose(g, d).map_err(|e| e.to_string())?;
            if in_st_k(&ctx, &gamma).map_err(|e| e.to_string())?.is_yes() {
                return Err(format!(
                    "found a factorization with conjugating part {}",
                    d.invert(&ctx).map_err(|e| e.to_string())?.word_display(&ctx)
                ));
            }
            if depth < NEGATIVE_CONTROL_RADIUS {
                for a in &gen_auts {
                    let e = d.compose(g, a).map_err(|e| e.to_string())?;
                    if seen.insert(e.images().to_vec()) {
                        next.push(e);
                    }
                }
            }
        }
        frontier = next;
    }
    match balanced_factorization(&ctx, phi.word()) {
        Err(Error::Unbalanced { vertex, left, right }) if (vertex.as_str(), left.as_str(), right.as_str()) == ("v", "a", "b") => {
            Ok(format!(
                "unknown beyond bound: no St(K) x Conj factorization among {candidates} conjugating automorphisms within {NEGATIVE_CONTROL_RADIUS} of {} elementary generators; balanced factorization refused with witness (v, a, b)",
                gens.len()
            ))
        }
        other => Err(format!("balanced factorization on GD returned {other:?}")),
    }
}
