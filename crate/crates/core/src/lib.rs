//! Executable theory of automorphism groups of partially commutative groups
//! (right-angled Artin groups) `G(Γ)`.
//!
//! The crate provides the word calculus of `G(Γ)`, the lattices of closed and
//! admissible vertex sets, the standard generators of `Aut(G(Γ))` together
//! with subgroup classifiers and factorization algorithms, and machine
//! verification of the relators of a presentation of `Aut(G(Γ))`.
//!
//! Conventions: `[a,b] = a⁻¹b⁻¹ab`, `y^x = x⁻¹yx`, and automorphisms act on
//! the right, so `xφψ = (xφ)ψ`.

pub mod automorphisms;
pub mod checks;
pub mod error;
pub mod graph_lattice;
pub mod io;
pub mod relations;
pub mod words;

pub use automorphisms::{Automorphism, Symbol, SymbolKind};
pub use error::{Error, Result};
pub use graph_lattice::{Graph, GraphAutomorphism, Vertex, VertexSet};
pub use words::{Letter, NormalForm, Word};
