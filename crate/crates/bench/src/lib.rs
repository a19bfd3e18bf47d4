//! Shared inputs for the raag-core benchmarks under `benches/`.

use raag_core::automorphisms::Raag;
use raag_core::checks::fixtures;
use raag_core::words::Letter;

/// Context of an embedded fixture graph.
pub fn context(name: &str) -> Raag {
    Raag::new(fixtures::graph(name)).expect("fixture graphs are valid")
}

/// Word of letters chosen by `pick(k)`, where `pick` returns a vertex and a
/// sign for the `k`-th position.
pub fn word(len: usize, pick: impl FnMut(usize) -> (usize, bool)) -> Vec<Letter> {
    (0..len).map(pick).map(|(v, p)| Letter::new(v, p)).collect()
}
