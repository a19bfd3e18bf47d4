//! Purely graph-theoretic structure: complements, closures, admissible sets,
//! lattices, vertex classes, the total order, compression, domination,
//! balancedness, components, isomorphism types and graph automorphisms.

pub mod classes;
pub mod graph;
pub mod lattice;
pub mod structure;

pub use classes::{
    compression_graph, diamond_class, dom_graph, dom_set, dominates, h_closure, is_balanced, is_k_maximal,
    is_k_minimal, is_l_minimal, j_step, k_less, k_step, out_set, perp_class, sol_sets, total_order,
    vertex_classification, ClassTag, CompressionGraph, TieBreaks, UnbalancedWitness, VertexClassification,
};
pub use graph::{Graph, Vertex, VertexSet, MAX_VERTICES};
pub use lattice::{
    admissible_closure, admissible_of, admissible_set, admissible_singletons, closure, enumerate_lattice, hasse_edges,
    intersection_closure, orthogonal_complement, LatticeKind, VertexSetLattice,
};
pub use structure::{
    class_permutation, compressed_automorphisms, graph_automorphisms, isomorphism_type, isomorphisms, ComponentGroup,
    GraphAutomorphism, IsomorphismType,
};
