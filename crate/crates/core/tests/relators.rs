//! Relator suite on the fixture graphs.

use raag_core::automorphisms::Raag;
use raag_core::io::parse_graph;
use raag_core::relations::{
    emit_presentation, instantiate_relators, tr_ext_generators, verify_relator, Bounds, Family,
};

fn fixture(name: &str) -> Raag {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    Raag::new(parse_graph(&std::fs::read_to_string(path).unwrap()).unwrap()).unwrap()
}

#[test]
fn every_family_verifies_on_the_fixtures() {
    let mut total = 0;
    for name in ["GD.graph", "GA.graph", "GD_edge_point.graph", "twins.graph"] {
        let ctx = fixture(name);
        let insts = instantiate_relators(&ctx, &Family::ALL, &Bounds::default()).unwrap();
        for i in &insts {
            let v = verify_relator(&ctx, i);
            assert!(v.holds, "{name}: {} {} {:?}", i.family, i.bindings, v.error);
        }
        total += insts.len();
    }
    assert!(total >= 1000, "{total}");
}

#[test]
fn every_tr_ext_family_is_populated_on_gd_with_edge_and_point() {
    let ctx = fixture("GD_edge_point.graph");
    for f in Family::ALL {
        let n = instantiate_relators(&ctx, &[f], &Bounds::default()).unwrap().len();
        let expected_empty = matches!(
            f,
            Family::R2 | Family::R3 | Family::S4 | Family::S7 | Family::Rsymm | Family::W | Family::Sigma
        );
        if !expected_empty {
            assert!(n > 0, "{f}");
        }
    }
}

#[test]
fn twins_populate_wreath_and_symmetric_families() {
    let ctx = fixture("twins.graph");
    for f in [
        Family::R2,
        Family::R3,
        Family::S4,
        Family::S7,
        Family::Rsymm,
        Family::W,
        Family::D,
    ] {
        assert!(
            !instantiate_relators(&ctx, &[f], &Bounds::default()).unwrap().is_empty(),
            "{f}"
        );
    }
}

#[test]
fn presentation_mentions_only_its_generators() {
    for name in ["GD_edge_point.graph", "twins.graph", "GD.graph"] {
        let ctx = fixture(name);
        let p = emit_presentation(
            &ctx,
            &Bounds {
                word_len: 2,
                max_per_family: 100,
            },
            &[],
        )
        .unwrap();
        let mut names = p.generators.clone();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), p.generators.len(), "{name}");
        assert_eq!(p.foreign_symbols(), Vec::<String>::new(), "{name}");
    }
}

#[test]
fn connected_graph_has_no_external_generators() {
    let ctx = fixture("GD.graph");
    assert!(tr_ext_generators(&ctx).is_empty());
    let p = emit_presentation(&ctx, &Bounds::default(), &[]).unwrap();
    assert_eq!(p.placeholders.len(), 1);
    assert!(p
        .relators
        .iter()
        .all(|r| !r.family.starts_with('R') || r.family == "Rsymm"));
}

#[test]
fn two_isomorphic_components_give_symmetric_and_wreath_relators() {
    let ctx = Raag::new(raag_core::Graph::new(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap()).unwrap();
    let p = emit_presentation(&ctx, &Bounds::default(), &[]).unwrap();
    assert!(p.generators.iter().any(|g| g.starts_with("omega(1,")));
    let fams: std::collections::BTreeSet<&str> = p.relators.iter().map(|r| r.family.as_str()).collect();
    assert!(fams.contains("Rsymm") && fams.contains("W"));
    for f in ["R1", "R2", "R3", "R6", "R7", "R8", "R9"] {
        assert!(!fams.contains(f), "{f}");
    }
    assert!(fams.contains("R10") && fams.contains("R11"));
}
