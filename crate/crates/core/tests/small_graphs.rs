//! Exhaustive checks on all graphs with at most three or four vertices:
//! centralizers against direct commutation, and the commutation lemma for
//! conjugates of commuting generators.

use raag_core::checks::for_all_graphs;
use raag_core::words::{centralizer_basis, is_cyclically_minimal, is_right_divisor, Letter, NormalForm};
use raag_core::Graph;
use std::collections::BTreeSet;

fn ball(g: &Graph, max_len: usize) -> Vec<NormalForm> {
    let letters: Vec<Letter> = (0..g.n()).flat_map(|v| [Letter::pos(v), Letter::neg(v)]).collect();
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

fn threads() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

#[test]
fn centralizer_membership_matches_commutation() {
    let graphs = for_all_graphs(3, threads(), |g, _| {
        let elems = ball(g, 4);
        for w in elems.iter().filter(|w| w.len() <= 3 && is_cyclically_minimal(g, w)) {
            let basis = centralizer_basis(g, w).map_err(|e| e.to_string())?;
            for c in &elems {
                let commutes = c.mul(g, w) == w.mul(g, c);
                if basis.contains(g, c) != commutes {
                    return Err(format!("C({}) membership of {} is wrong", w.display(g), c.display(g)));
                }
            }
        }
        Ok(())
    });
    assert!(graphs.is_ok(), "{}", graphs.unwrap_err());
}

fn reduced_conjugate(g: &Graph, x: usize, f: &NormalForm) -> Option<NormalForm> {
    let c = NormalForm::letter(Letter::pos(x)).conjugate(g, f);
    (c.len() == 2 * f.len() + 1).then_some(c)
}

fn share_right_divisor(g: &Graph, f: &NormalForm, h: &NormalForm) -> bool {
    (0..g.n())
        .flat_map(|v| [Letter::pos(v), Letter::neg(v)])
        .map(NormalForm::letter)
        .any(|l| is_right_divisor(g, &l, f) && is_right_divisor(g, &l, h))
}

#[test]
fn conjugates_of_commuting_generators() {
    let counted = std::sync::atomic::AtomicUsize::new(0);
    let graphs = for_all_graphs(4, threads(), |g, _| {
        let elems = ball(g, 2);
        for x in 0..g.n() {
            for y in (0..g.n()).filter(|&y| y != x && g.commute(x, y)) {
                for f in &elems {
                    let Some(xf) = reduced_conjugate(g, x, f) else { continue };
                    for h in &elems {
                        let Some(yh) = reduced_conjugate(g, y, h) else { continue };
                        if xf.mul(g, &yh) != yh.mul(g, &xf) || share_right_divisor(g, f, h) {
                            continue;
                        }
                        counted.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        let supports_commute = f.support().iter().all(|a| h.support().iter().all(|b| g.commute(a, b)));
                        let commutes = |u: &NormalForm, v: usize| {
                            let l = NormalForm::letter(Letter::pos(v));
                            u.mul(g, &l) == l.mul(g, u)
                        };
                        if !supports_commute || !commutes(f, y) || !commutes(h, x) {
                            return Err(format!(
                                "x={}, y={}, f={}, g={}",
                                g.name(x),
                                g.name(y),
                                f.display(g),
                                h.display(g)
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    });
    assert!(graphs.is_ok(), "{}", graphs.unwrap_err());
    assert!(counted.into_inner() > 1000);
}
