//! Benchmarks of normalization, lattice enumeration, classification,
//! factorization and relator verification on the fixture graphs.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use raag_bench::{context, word};
use raag_core::automorphisms::factor::{factor_conjugating, generator_family, ConjTarget};
use raag_core::automorphisms::{classify, Automorphism, Symbol};
use raag_core::graph_lattice::{enumerate_lattice, Graph, LatticeKind};
use raag_core::relations::{instantiate_relators, verify_relator, Bounds, Family};
use raag_core::words::{cyclic_decomposition, normalize, root};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn normalize_words(c: &mut Criterion) {
    let ctx = context("GA.graph");
    let g = ctx.graph();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut group = c.benchmark_group("normalize");
    for len in [16, 64, 256] {
        let w = word(len, |_| (rng.gen_range(0..g.n()), rng.gen_bool(0.5)));
        group.bench_with_input(BenchmarkId::from_parameter(len), &w, |b, w| {
            b.iter(|| normalize(g, black_box(w)))
        });
    }
    group.finish();
    let w = normalize(g, &word(64, |_| (rng.gen_range(0..g.n()), rng.gen_bool(0.5))));
    c.bench_function("cyclic_decomposition/64", |b| {
        b.iter(|| cyclic_decomposition(g, black_box(&w)))
    });
    let p = w.pow(g, 3);
    c.bench_function("root/cube", |b| b.iter(|| root(g, black_box(&p))));
}

fn lattices(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [8, 12, 16] {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(0.4))
            .collect();
        let g = Graph::from_indices(n, &edges).expect("valid random graph");
        c.bench_function(&format!("admissible_lattice/{n}"), |b| {
            b.iter(|| enumerate_lattice(black_box(&g), LatticeKind::Admissible))
        });
    }
}

fn automorphisms(c: &mut Criterion) {
    let ctx = context("GD.graph");
    let family = generator_family(&ctx, ConjTarget::LInn);
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let w: Vec<Symbol> = (0..6)
        .map(|_| family.choose(&mut rng).expect("non-empty").clone())
        .collect();
    let phi = Automorphism::from_word(&ctx, &w).expect("valid word");
    c.bench_function("classify/GD", |b| b.iter(|| classify(&ctx, black_box(&phi))));
    c.bench_function("factor_LInn/GD", |b| {
        b.iter(|| factor_conjugating(&ctx, black_box(&phi), ConjTarget::LInn))
    });
}

fn relators(c: &mut Criterion) {
    let ctx = context("GD_edge_point.graph");
    let insts = instantiate_relators(
        &ctx,
        &Family::ALL,
        &Bounds {
            word_len: 1,
            max_per_family: 50,
        },
    )
    .expect("instances");
    c.bench_function("relators/instantiate", |b| {
        b.iter(|| {
            instantiate_relators(
                &ctx,
                &Family::ALL,
                &Bounds {
                    word_len: 1,
                    max_per_family: 50,
                },
            )
        })
    });
    c.bench_function("relators/verify", |b| {
        b.iter(|| insts.iter().filter(|i| verify_relator(&ctx, i).holds).count())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = normalize_words, lattices, automorphisms, relators
}
criterion_main!(benches);
