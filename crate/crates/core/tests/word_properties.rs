//! Property tests of the word calculus on random graphs and words.

use proptest::prelude::*;
use raag_core::graph_lattice::VertexSet;
use raag_core::words::{
    block_decomposition, centralizer_basis, cyclic_decomposition, equal, front_positions, greatest_left_divisor,
    greatest_right_divisor, is_cyclically_minimal, normalize, root, Letter, NormalForm,
};
use raag_core::Graph;

fn graph_and_words(max_len: usize, count: usize) -> impl Strategy<Value = (Graph, Vec<Vec<Letter>>)> {
    (1usize..=6).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        let word = prop::collection::vec((0..n, any::<bool>()).prop_map(|(v, p)| Letter::new(v, p)), 0..=max_len);
        (0..1u64 << pairs, prop::collection::vec(word, count))
            .prop_map(move |(mask, ws)| (Graph::from_edge_mask(n, mask), ws))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn normal_forms_form_a_group((g, ws) in graph_and_words(10, 3)) {
        let [u, v, w] = [0, 1, 2].map(|i| normalize(&g, &ws[i]));
        prop_assert_eq!(normalize(&g, u.letters()), u.clone());
        prop_assert!(u.mul(&g, &u.inverse(&g)).is_identity());
        prop_assert_eq!(u.mul(&g, &v).mul(&g, &w), u.mul(&g, &v.mul(&g, &w)));
        prop_assert!(u.mul(&g, &v).len() <= u.len() + v.len());
        prop_assert_eq!(equal(&g, &ws[0], &ws[1]), u == v);
    }

    #[test]
    fn commuting_swaps_and_cancellations_preserve_normal_forms((g, ws) in graph_and_words(10, 1), at in 0usize..12, x in 0usize..6) {
        let w = &ws[0];
        let nf = normalize(&g, w);
        if w.len() >= 2 {
            let i = at % (w.len() - 1);
            if g.commute(w[i].vertex(), w[i + 1].vertex()) {
                let mut s = w.clone();
                s.swap(i, i + 1);
                prop_assert_eq!(normalize(&g, &s), nf.clone());
            }
        }
        let l = Letter::pos(x % g.n());
        let mut t = w.clone();
        let k = at.min(t.len());
        t.splice(k..k, [l, l.inverse()]);
        prop_assert_eq!(normalize(&g, &t), nf);
    }

    #[test]
    fn greatest_divisors_are_maximal((g, ws) in graph_and_words(10, 1), bits in any::<u64>()) {
        let w = normalize(&g, &ws[0]);
        let y = VertexSet::from_bits(bits & g.all().bits());
        let (d, rest) = greatest_left_divisor(&g, &w, y);
        prop_assert_eq!(d.mul(&g, &rest), w.clone());
        prop_assert_eq!(d.len() + rest.len(), w.len());
        prop_assert!(d.support().is_subset(y));
        for p in front_positions(&g, rest.letters()) {
            prop_assert!(!y.contains(rest.letters()[p].vertex()));
        }
        let (rest_r, e) = greatest_right_divisor(&g, &w, y);
        prop_assert_eq!(rest_r.mul(&g, &e), w.clone());
        prop_assert_eq!(e.len(), greatest_left_divisor(&g, &w.inverse(&g), y).0.len());
    }

    #[test]
    fn decompositions_reassemble((g, ws) in graph_and_words(12, 1)) {
        let w = normalize(&g, &ws[0]);
        let (u, core) = cyclic_decomposition(&g, &w);
        prop_assert_eq!(core.conjugate(&g, &u), w.clone());
        prop_assert!(is_cyclically_minimal(&g, &core));
        let bd = block_decomposition(&g, &w);
        let product = bd.blocks.iter().fold(NormalForm::identity(), |acc, b| acc.mul(&g, b));
        prop_assert_eq!(product, core.clone());
        for (i, a) in bd.blocks.iter().enumerate() {
            for b in &bd.blocks[i + 1..] {
                prop_assert_eq!(a.mul(&g, b), b.mul(&g, a));
            }
        }
        let (r, n) = root(&g, &w);
        prop_assert_eq!(r.pow(&g, n as i64), w.clone());
        prop_assert_eq!(root(&g, &r).1, 1);
    }

    #[test]
    fn centralizer_basis_is_sound((g, ws) in graph_and_words(8, 3), k in -3i64..=3) {
        let core = cyclic_decomposition(&g, &normalize(&g, &ws[0])).1;
        let basis = centralizer_basis(&g, &core).expect("core is cyclically minimal");
        let a = VertexSet::from_vertices(ws[1].iter().map(|l| l.vertex()).filter(|&v| basis.parabolic.contains(v)));
        let from_a: Vec<Letter> = ws[1].iter().copied().filter(|l| a.contains(l.vertex())).collect();
        let mut c = normalize(&g, &from_a);
        for r in &basis.roots {
            c = c.mul(&g, &r.pow(&g, k));
        }
        prop_assert!(basis.contains(&g, &c));
        prop_assert_eq!(c.mul(&g, &core), core.mul(&g, &c));
        let other = normalize(&g, &ws[2]);
        prop_assert_eq!(basis.contains(&g, &other), other.mul(&g, &core) == core.mul(&g, &other));
    }
}
