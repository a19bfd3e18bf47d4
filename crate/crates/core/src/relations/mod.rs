//! Relator families of the presentation of `Aut(G(Γ))`, their machine
//! verification, the assembled presentation, and the Fouxe-Rabinovitch
//! generators.

mod families;
mod generators;
mod whitehead;

pub use families::{instantiate_relators, Bounds, Family, RelatorInstance};
pub use generators::{
    comp_generators, factor_generators, fr_generators, int_generators, lext_generators, nontrivial_components,
    projects_trivially, symm_generators, tr_ext_generators, Factor,
};
pub use whitehead::{whitehead_automorphisms, whitehead_image};

use crate::automorphisms::{symbol::display_symbols, Automorphism, Raag, Symbol};
use crate::error::Result;
use serde::Serialize;
use std::collections::BTreeSet;

/// Outcome of checking one relator instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    /// True when both sides induce the same automorphism.
    pub holds: bool,
    /// Evaluation error, if a side failed to evaluate.
    pub error: Option<String>,
}

/// Evaluates both sides of an instance and compares the vertex images.
pub fn verify_relator(ctx: &Raag, inst: &RelatorInstance) -> Verification {
    let eval = |w: &[Symbol]| Automorphism::from_word(ctx, w);
    match (eval(&inst.lhs), eval(&inst.rhs)) {
        (Ok(l), Ok(r)) => Verification {
            holds: l == r,
            error: None,
        },
        (Err(e), _) | (_, Err(e)) => Verification {
            holds: false,
            error: Some(e.to_string()),
        },
    }
}

/// Tab-separated report `family, bindings, verdict` with a header line.
pub fn tsv_report(ctx: &Raag, instances: &[RelatorInstance]) -> (String, usize) {
    let mut out = String::from("family\tbindings\tverdict\n");
    let mut failures = 0;
    for inst in instances {
        let v = verify_relator(ctx, inst);
        if !v.holds {
            failures += 1;
        }
        let verdict = match (&v.error, v.holds) {
            (Some(e), _) => format!("error: {e}"),
            (None, true) => "pass".to_string(),
            (None, false) => "fail".to_string(),
        };
        out.push_str(&format!("{}\t{}\t{}\n", inst.family, inst.bindings, verdict));
    }
    (out, failures)
}

/// A relator `lhs = rhs` of the presentation, in symbol syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentedRelator {
    /// Family name.
    pub family: String,
    /// Left side.
    pub lhs: String,
    /// Right side.
    pub rhs: String,
}

/// Generators and relators of the presentation `⟨𝓟 | 𝓡⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    /// Generator names in symbol syntax, grouped as compressed graph,
    /// internal and external generators.
    pub generators: Vec<String>,
    /// Concrete relators.
    pub relators: Vec<PresentedRelator>,
    /// Named placeholders for the factor presentations `𝓡_i`.
    pub placeholders: Vec<String>,
}

impl Presentation {
    /// Plain-text `⟨ generators | relators ⟩` listing.
    pub fn to_text(&self) -> String {
        let mut out = String::from("<\n  generators:\n");
        for g in &self.generators {
            out.push_str(&format!("    {g}\n"));
        }
        out.push_str("  |\n  relators:\n");
        for r in &self.relators {
            out.push_str(&format!("    [{}] {} = {}\n", r.family, r.lhs, r.rhs));
        }
        for p in &self.placeholders {
            out.push_str(&format!("    [placeholder] {p}\n"));
        }
        out.push_str(">\n");
        out
    }

    /// Names used by relators that are neither generators nor inverses of
    /// generators (`id` and placeholders excluded).
    pub fn foreign_symbols(&self) -> Vec<String> {
        let gens: BTreeSet<&str> = self.generators.iter().map(String::as_str).collect();
        let mut bad = BTreeSet::new();
        for r in &self.relators {
            for side in [&r.lhs, &r.rhs] {
                for tok in split_symbols(side) {
                    let base = tok.strip_suffix("^-1").unwrap_or(&tok);
                    if base != "id" && !gens.contains(base) {
                        bad.insert(tok.clone());
                    }
                }
            }
        }
        bad.into_iter().collect()
    }
}

fn split_symbols(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    let mut quoted = false;
    for ch in s.chars() {
        match ch {
            '"' => quoted = !quoted,
            '(' | '{' if !quoted => depth += 1,
            ')' | '}' if !quoted => depth -= 1,
            _ => {}
        }
        if ch.is_whitespace() && depth == 0 && !quoted {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Assembles the presentation: generators `𝓟 = 𝓟_comp ∪ 𝓟_int ∪ 𝓟_ext`,
/// relators `𝓡_symm ∪ 𝓦 ∪ 𝓓 ∪ R1–R11` within `bounds`, and one named
/// placeholder per factor presentation `𝓡_i` unless supplied in
/// `factor_relators` (as `(factor index, lhs, rhs)` triples).
pub fn emit_presentation(
    ctx: &Raag,
    bounds: &Bounds,
    factor_relators: &[(usize, String, String)],
) -> Result<Presentation> {
    let mut generators: Vec<String> = Vec::new();
    let mut push = |s: &Symbol| {
        let name = s.display(ctx);
        if !generators.contains(&name) {
            generators.push(name);
        }
    };
    for s in comp_generators(ctx)
        .iter()
        .chain(&int_generators(ctx))
        .chain(&tr_ext_generators(ctx))
    {
        push(s);
    }
    for s in lext_generators(ctx) {
        push(&s);
    }
    let families: Vec<Family> = Family::PRESENTATION.to_vec();
    let mut relators = Vec::new();
    for inst in instantiate_relators(ctx, &families, bounds)? {
        relators.push(PresentedRelator {
            family: inst.family.to_string(),
            lhs: display_symbols(ctx, &inst.lhs),
            rhs: display_symbols(ctx, &inst.rhs),
        });
    }
    let mut placeholders = Vec::new();
    for (i, f) in Factor::all(ctx).iter().enumerate() {
        let supplied: Vec<&(usize, String, String)> = factor_relators.iter().filter(|r| r.0 == i).collect();
        if supplied.is_empty() {
            placeholders.push(format!(
                "R_{i}: relators of Aut(G({}))",
                ctx.graph().fmt_set(f.first_copy(ctx))
            ));
        }
        for (_, l, r) in supplied {
            relators.push(PresentedRelator {
                family: format!("R_{i}"),
                lhs: l.clone(),
                rhs: r.clone(),
            });
        }
    }
    Ok(Presentation {
        generators,
        relators,
        placeholders,
    })
}
