//! Automorphisms of `G(Γ)`: standard generator symbols, composition,
//! inversion, classification into the standard subgroups and the
//! factorization algorithms.

pub mod classify;
pub mod factor;
pub mod rewrite;
pub mod symbol;

pub use classify::{classify, conjugation_data, ClassificationReport, ConjugationData, Verdict};
pub use factor::{balanced_factorization, factor_conjugating, BalancedFactorization, ConjTarget};
pub use rewrite::rewrite_tame;
pub use symbol::{Symbol, SymbolKind, WhiteheadElement, WhiteheadSet};

use crate::error::{Error, Result};
use crate::graph_lattice::{
    admissible_of, isomorphism_type, vertex_classification, Graph, IsomorphismType, Vertex, VertexClassification,
    VertexSet,
};
use crate::words::{normalize, Letter, NormalForm};

/// The group `G(Γ)` together with cached graph structure used by the
/// automorphism algorithms.
#[derive(Clone, Debug)]
pub struct Raag {
    graph: Graph,
    iso: IsomorphismType,
    classes: VertexClassification,
    adm: Vec<VertexSet>,
}

impl Raag {
    /// Builds the context for a graph.
    pub fn new(graph: Graph) -> Result<Self> {
        let iso = isomorphism_type(&graph)?;
        let classes = vertex_classification(&graph);
        let adm = (0..graph.n()).map(|x| admissible_of(&graph, x)).collect();
        Ok(Raag {
            graph,
            iso,
            classes,
            adm,
        })
    }

    /// The underlying graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Isomorphism type with the fixed component isomorphisms.
    pub fn iso(&self) -> &IsomorphismType {
        &self.iso
    }

    /// Vertex classes.
    pub fn classes(&self) -> &VertexClassification {
        &self.classes
    }

    /// `𝔞(x)`.
    pub fn adm(&self, x: Vertex) -> VertexSet {
        self.adm[x]
    }

    /// Index of the connected component containing `v`.
    pub fn component_of(&self, v: Vertex) -> usize {
        self.iso.component_index(v)
    }

    /// Vertex set of component `j`.
    pub fn component(&self, j: usize) -> VertexSet {
        self.iso.components[j]
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        self.iso.components.len()
    }

    /// True when component `j` is an isolated vertex.
    pub fn is_isolated_component(&self, j: usize) -> bool {
        self.iso.components[j].len() == 1
    }

    /// True when `v` is an isolated vertex.
    pub fn is_isolated(&self, v: Vertex) -> bool {
        self.graph.neighbours(v).is_empty()
    }

    /// Parses a word into its normal form.
    pub fn word(&self, s: &str) -> Result<NormalForm> {
        NormalForm::parse(&self.graph, s)
    }

    /// Looks up a vertex.
    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.graph.vertex(name)
    }

    /// Parses a vertex list.
    pub fn set(&self, s: &str) -> Result<VertexSet> {
        self.graph.set(s)
    }
}

/// An automorphism presented both as a word in generator symbols and by the
/// normal forms of the images of the vertices.
#[derive(Clone, Debug)]
pub struct Automorphism {
    word: Vec<Symbol>,
    images: Vec<NormalForm>,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for Automorphism {}

impl Automorphism {
    /// The identity automorphism.
    pub fn identity(n: usize) -> Self {
        Automorphism {
            word: Vec::new(),
            images: (0..n).map(|v| NormalForm::letter(Letter::pos(v))).collect(),
        }
    }

    /// Builds an automorphism from a word and its precomputed images.
    pub(crate) fn from_parts(word: Vec<Symbol>, images: Vec<NormalForm>) -> Self {
        Automorphism { word, images }
    }

    /// A single generator.
    pub fn from_symbol(ctx: &Raag, s: &Symbol) -> Result<Self> {
        let images = s.images(ctx)?;
        Ok(Automorphism {
            word: vec![s.clone()],
            images,
        })
    }

    /// Product of generators, applied left to right.
    pub fn from_word(ctx: &Raag, word: &[Symbol]) -> Result<Self> {
        let mut acc = Automorphism::identity(ctx.n());
        for s in word {
            acc = acc.compose(ctx.graph(), &Automorphism::from_symbol(ctx, s)?)?;
        }
        Ok(acc)
    }

    /// Parses a symbol word and evaluates it.
    pub fn parse(ctx: &Raag, s: &str) -> Result<Self> {
        Automorphism::from_word(ctx, &symbol::parse_symbols(ctx, s)?)
    }

    /// The generator word.
    pub fn word(&self) -> &[Symbol] {
        &self.word
    }

    /// Images of the vertices, indexed by vertex.
    pub fn images(&self) -> &[NormalForm] {
        &self.images
    }

    /// Image of one vertex.
    pub fn image(&self, v: Vertex) -> &NormalForm {
        &self.images[v]
    }

    /// Image of an arbitrary word.
    pub fn apply(&self, g: &Graph, letters: &[Letter]) -> NormalForm {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            let im = &self.images[l.vertex()];
            if l.is_positive() {
                out.extend_from_slice(im.letters());
            } else {
                out.extend(im.letters().iter().rev().map(|k| k.inverse()));
            }
        }
        normalize(g, &out)
    }

    /// Image of an element.
    pub fn apply_nf(&self, g: &Graph, w: &NormalForm) -> NormalForm {
        self.apply(g, w.letters())
    }

    /// `self` followed by `other` (`x(φψ) = (xφ)ψ`).
    pub fn compose(&self, g: &Graph, other: &Automorphism) -> Result<Automorphism> {
        if self.images.len() != other.images.len() {
            return Err(Error::GraphMismatch);
        }
        let images = self.images.iter().map(|w| other.apply_nf(g, w)).collect();
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        Ok(Automorphism { word, images })
    }

    /// Inverse, obtained by reversing the word and inverting each symbol.
    pub fn invert(&self, ctx: &Raag) -> Result<Automorphism> {
        let word: Vec<Symbol> = self.word.iter().rev().map(|s| s.inverse()).collect();
        Automorphism::from_word(ctx, &word)
    }

    /// Equality of the induced maps.
    pub fn equal(&self, other: &Automorphism) -> bool {
        self.images == other.images
    }

    /// True for the identity map.
    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(v, w)| w.letters() == [Letter::pos(v)])
    }

    /// Formats the generator word.
    pub fn word_display(&self, ctx: &Raag) -> String {
        symbol::display_symbols(ctx, &self.word)
    }

    /// Formats the images as `x -> w` lines.
    pub fn images_display(&self, g: &Graph) -> Vec<String> {
        (0..g.n())
            .map(|v| format!("{} -> {}", g.name(v), self.images[v].display(g)))
            .collect()
    }

    /// Replaces the stored word (the images are unchanged).
    pub fn with_word(mut self, word: Vec<Symbol>) -> Self {
        self.word = word;
        self
    }
}

/// Evaluates a symbol word to its automorphism.
pub fn eval(ctx: &Raag, word: &[Symbol]) -> Result<Automorphism> {
    Automorphism::from_word(ctx, word)
}
