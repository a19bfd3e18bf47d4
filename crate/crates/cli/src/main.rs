//! `raag`: command-line front end for the word calculus, the admissible-set
//! lattices, automorphism evaluation and classification, relator
//! verification and the acceptance checks.
//!
//! Exit codes: 0 on success, 1 when a verification or membership test
//! fails, 2 on malformed input.

use clap::{Args, Parser, Subcommand, ValueEnum};
use raag_core::automorphisms::factor::{balanced_factorization, factor_conjugating, ConjTarget};
use raag_core::automorphisms::symbol::{display_symbols, parse_symbols};
use raag_core::automorphisms::{classify, Automorphism, Raag};
use raag_core::checks::{self, CheckOptions, TITLES};
use raag_core::graph_lattice::{
    admissible_of, admissible_singletons, closure, compressed_automorphisms, compression_graph, dom_graph,
    enumerate_lattice, graph_automorphisms, is_balanced, orthogonal_complement, out_set, total_order,
    vertex_classification, Graph, LatticeKind, TieBreaks, VertexSet,
};
use raag_core::io::{compression_dot, graph_dot, lattice_dot, parse_graph, parse_tie_breaks};
use raag_core::relations::{emit_presentation, instantiate_relators, tsv_report, verify_relator, Bounds, Family};
use raag_core::words::{equal, normalize, Word};
use raag_core::Error;
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "raag", version, about = "Automorphisms of right-angled Artin groups")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Graph file (line format or JSON).
    #[arg(long, global = true)]
    graph: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximal parameter word length for relator enumeration.
    #[arg(long, global = true)]
    bounds: Option<usize>,
    /// Tie-break file for the total order.
    #[arg(long = "tie-break", global = true)]
    tie_break: Option<PathBuf>,
    /// Relator families, e.g. `R1-R11,S1`, `all` or `diagnostics`.
    #[arg(long, global = true, default_value = "all")]
    families: String,
    /// Seed of the sampled checks.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Tables of complements, closures and admissible sets, classes, order,
    /// domination, balancedness and automorphism counts.
    Analyze {
        /// Graph file; overrides `--graph`.
        file: Option<PathBuf>,
    },
    /// Normal form of a word.
    Nf {
        /// Word such as `a b^-1 c`, or `1`.
        word: String,
    },
    /// Tests two words for equality; exits 1 when they differ.
    Eq {
        /// First word.
        left: String,
        /// Second word.
        right: String,
    },
    /// Automorphism operations.
    #[command(subcommand)]
    Aut(AutCommand),
    /// Relator verification.
    #[command(subcommand)]
    Relators(RelatorsCommand),
    /// Presentation output.
    #[command(subcommand)]
    Presentation(PresentationCommand),
    /// Runs the acceptance checks; exits 1 on any failure.
    VerifyPaper {
        /// Comma separated criterion numbers; all when omitted.
        #[arg(long)]
        only: Option<String>,
    },
    /// Graph exports.
    #[command(subcommand)]
    Export(ExportCommand),
}

#[derive(Subcommand)]
enum AutCommand {
    /// Images of the vertices, or of one word with `--on`.
    Eval {
        /// Symbol word, applied left to right.
        word: String,
        /// Word to apply the automorphism to.
        #[arg(long)]
        on: Option<String>,
    },
    /// Composition `φψ` (first `φ`, then `ψ`).
    Compose {
        /// `φ`.
        first: String,
        /// `ψ`.
        second: String,
    },
    /// Membership verdicts for the standard subgroups.
    Classify {
        /// Symbol word.
        word: String,
    },
    /// Factorization over a generator family, or the (St(K), Conj)
    /// factorization with `--target balanced`.
    Factor {
        /// Symbol word.
        word: String,
        /// `LInn`, `LInn_V`, `LInn_N`, `LInn_S`, `LInn_C`, `LInn_I`, `agg` or `balanced`.
        #[arg(long, default_value = "LInn")]
        target: String,
    },
}

#[derive(Subcommand)]
enum RelatorsCommand {
    /// Instantiates and verifies relators; exits 1 on any failure.
    Verify {
        /// Graph file; overrides `--graph`.
        file: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PresentationCommand {
    /// Generators and relators of the presentation.
    Emit {
        /// Graph file; overrides `--graph`.
        file: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ExportCommand {
    /// DOT output.
    Dot {
        /// Graph file; overrides `--graph`.
        file: Option<PathBuf>,
        /// What to draw.
        #[arg(long, value_enum, default_value_t = DotKind::Graph)]
        what: DotKind,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DotKind {
    Graph,
    Compression,
    Closed,
    Admissible,
}

/// A failed command: exit status and message.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownVertex(_)
            | Error::Parse { .. }
            | Error::InvalidGraph(_)
            | Error::InvalidGenerator(_)
            | Error::GraphMismatch => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Rendered output and the exit status to report after printing it.
struct Report {
    text: String,
    json: Value,
    other: Option<(Format, String)>,
    code: u8,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            other: None,
            code: 0,
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(global: &Global, file: Option<&Path>) -> Result<Graph, Failure> {
    let path = file
        .or(global.graph.as_deref())
        .ok_or_else(|| input_error("no graph given; pass a file or --graph"))?;
    parse_graph(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_context(global: &Global, file: Option<&Path>) -> Result<Raag, Failure> {
    Ok(Raag::new(load_graph(global, file)?)?)
}

fn bounds(global: &Global) -> Bounds {
    let mut b = Bounds::default();
    if let Some(n) = global.bounds {
        b.word_len = n;
    }
    b
}

fn set_list(g: &Graph, sets: &[VertexSet]) -> Vec<String> {
    sets.iter().map(|s| g.fmt_set(*s)).collect()
}

fn analyze(global: &Global, file: Option<&Path>) -> Result<Report, Failure> {
    let g = load_graph(global, file)?;
    let tie = match &global.tie_break {
        Some(p) => parse_tie_breaks(&g, &read(p)?)?,
        None => TieBreaks::default(),
    };
    let mut text = String::new();
    let mut line = |s: String| {
        text.push_str(&s);
        text.push('\n');
    };
    line(format!("vertices: {}", g.names().join(" ")));
    line("vertex\tperp\tcl\tadm".into());
    let mut table = Vec::new();
    for v in 0..g.n() {
        let s = VertexSet::singleton(v);
        let row = [orthogonal_complement(&g, s), closure(&g, s), admissible_of(&g, v)].map(|x| g.fmt_set(x));
        line(format!("{}\t{}\t{}\t{}", g.name(v), row[0], row[1], row[2]));
        table.push(json!({"vertex": g.name(v), "perp": row[0], "cl": row[1], "adm": row[2]}));
    }
    let k_x = admissible_singletons(&g);
    line(format!("K_X ({}): {}", k_x.len(), set_list(&g, &k_x).join(" ")));
    let closed = enumerate_lattice(&g, LatticeKind::Closed).elements.len();
    let admissible = enumerate_lattice(&g, LatticeKind::Admissible).elements.len();
    line(format!("lattice sizes: closed {closed}, admissible {admissible}"));
    let cls = vertex_classification(&g);
    line("classes:".into());
    let mut classes = Vec::new();
    for (i, c) in cls.classes.iter().enumerate() {
        let tag = format!("{:?}", cls.tags[i]).to_lowercase();
        line(format!("  {} {} height {}", g.fmt_set(*c), tag, cls.heights[i]));
        classes.push(json!({"class": g.fmt_set(*c), "tag": tag, "height": cls.heights[i]}));
    }
    for (i, b) in cls.b_sets.iter().enumerate() {
        line(format!("B{i}: {}", set_list(&g, b).join(" ")));
    }
    let order: Vec<&str> = total_order(&g, &tie).into_iter().map(|v| g.name(v)).collect();
    line(format!("order: {}", order.join(" ")));
    let dom = dom_graph(&g);
    line(format!("Dom: {}", g.fmt_set(dom)));
    let mut outs = Vec::new();
    for v in dom.iter() {
        let o = g.fmt_set(out_set(&g, v));
        line(format!("  out({}) = {o}", g.name(v)));
        outs.push(json!({"vertex": g.name(v), "out": o}));
    }
    let balanced = match is_balanced(&g) {
        Ok(()) => {
            line("balanced: yes".into());
            json!(true)
        }
        Err(w) => {
            let (a, b) = (g.name(w.pair.0), g.name(w.pair.1));
            line(format!(
                "balanced: no (vertex {}, out-set vertices {a} and {b})",
                g.name(w.vertex)
            ));
            json!({"vertex": g.name(w.vertex), "left": a, "right": b})
        }
    };
    let ctx = Raag::new(g.clone())?;
    let iso = ctx.iso();
    let groups: Vec<Value> = iso
        .groups
        .iter()
        .map(|grp| json!({"copies": grp.multiplicity(), "size": grp.copies[0].len()}))
        .collect();
    line(format!(
        "isomorphism type: {} isolated; {}",
        iso.isolated.len(),
        if iso.groups.is_empty() {
            "no non-trivial components".to_string()
        } else {
            iso.groups
                .iter()
                .map(|grp| format!("{} x component on {} vertices", grp.multiplicity(), grp.copies[0].len()))
                .collect::<Vec<_>>()
                .join(", ")
        }
    ));
    let (aut, comp) = (graph_automorphisms(&g).len(), compressed_automorphisms(&g).len());
    line(format!("|Aut| = {aut}, |Aut_comp| = {comp}"));
    let json = json!({
        "vertices": g.names(),
        "table": table,
        "K_X": set_list(&g, &k_x),
        "lattice_sizes": {"closed": closed, "admissible": admissible},
        "classes": classes,
        "b_sets": cls.b_sets.iter().map(|b| set_list(&g, b)).collect::<Vec<_>>(),
        "order": order,
        "dom": g.fmt_set(dom),
        "out": outs,
        "balanced": balanced,
        "isomorphism_type": {"isolated": iso.isolated.len(), "groups": groups},
        "aut": aut,
        "aut_comp": comp,
    });
    Ok(Report::new(text, json))
}

fn parse_word(g: &Graph, s: &str) -> Result<Word, Failure> {
    Ok(Word::parse(g, s)?)
}

fn automorphism(ctx: &Raag, s: &str) -> Result<Automorphism, Failure> {
    Ok(Automorphism::parse(ctx, s)?)
}

fn images_report(ctx: &Raag, phi: &Automorphism) -> Report {
    let g = ctx.graph();
    let images = phi.images_display(g);
    let text: String = (0..g.n())
        .map(|v| format!("{} -> {}\n", g.name(v), images[v]))
        .collect();
    let json = json!((0..g.n())
        .map(|v| json!({"vertex": g.name(v), "image": images[v]}))
        .collect::<Vec<_>>());
    Report::new(text, json)
}

fn aut(global: &Global, cmd: &AutCommand) -> Result<Report, Failure> {
    let ctx = load_context(global, None)?;
    let g = ctx.graph();
    match cmd {
        AutCommand::Eval { word, on } => {
            let phi = automorphism(&ctx, word)?;
            match on {
                None => Ok(images_report(&ctx, &phi)),
                Some(w) => {
                    let image = phi.apply(g, &parse_word(g, w)?.0).display(g);
                    Ok(Report::new(format!("{image}\n"), json!({"word": w, "image": image})))
                }
            }
        }
        AutCommand::Compose { first, second } => {
            let phi = automorphism(&ctx, first)?;
            let psi = automorphism(&ctx, second)?;
            Ok(images_report(&ctx, &phi.compose(g, &psi)?))
        }
        AutCommand::Classify { word } => {
            let phi = automorphism(&ctx, word)?;
            let r = classify(&ctx, &phi)?;
            let text = r.entries().iter().map(|(n, v)| format!("{n}: {v}\n")).collect();
            let json = json!(r
                .entries()
                .iter()
                .map(|(n, v)| json!({"subgroup": n, "verdict": v.label(), "detail": v.detail()}))
                .collect::<Vec<_>>());
            Ok(Report::new(text, json))
        }
        AutCommand::Factor { word, target } => {
            if target.eq_ignore_ascii_case("balanced") {
                let f = balanced_factorization(&ctx, &parse_symbols(&ctx, word)?)?;
                let (s, c) = (display_symbols(&ctx, &f.st_part), display_symbols(&ctx, &f.conj_part));
                return Ok(Report::new(
                    format!("St(K): {s}\nConj: {c}\n"),
                    json!({"st_part": s, "conj_part": c}),
                ));
            }
            let t = ConjTarget::parse(target)?;
            let phi = automorphism(&ctx, word)?;
            let f = display_symbols(&ctx, &factor_conjugating(&ctx, &phi, t)?);
            Ok(Report::new(
                format!("{f}\n"),
                json!({"target": target, "factorization": f}),
            ))
        }
    }
}

fn relators_verify(global: &Global, file: Option<&Path>) -> Result<Report, Failure> {
    let ctx = load_context(global, file)?;
    let families = Family::parse_list(&global.families)?;
    let insts = instantiate_relators(&ctx, &families, &bounds(global))?;
    let (tsv, failures) = tsv_report(&ctx, &insts);
    let mut per_family: Vec<(Family, usize, usize)> = Vec::new();
    let mut rows = Vec::new();
    for i in &insts {
        let v = verify_relator(&ctx, i);
        match per_family.iter_mut().find(|(f, _, _)| *f == i.family) {
            Some(e) => {
                e.1 += 1;
                e.2 += usize::from(v.holds);
            }
            None => per_family.push((i.family, 1, usize::from(v.holds))),
        }
        rows.push(json!({"family": i.family.name(), "bindings": i.bindings, "holds": v.holds, "error": v.error}));
    }
    let mut text: String = per_family.iter().map(|(f, n, ok)| format!("{f}\t{ok}/{n}\n")).collect();
    text.push_str(&format!("total\t{}/{}\n", insts.len() - failures, insts.len()));
    let mut r = Report::new(text, json!({"instances": rows, "failures": failures}));
    r.other = Some((Format::Tsv, tsv));
    r.code = u8::from(failures > 0);
    Ok(r)
}

fn presentation(global: &Global, file: Option<&Path>) -> Result<Report, Failure> {
    let ctx = load_context(global, file)?;
    let p = emit_presentation(&ctx, &bounds(global), &[])?;
    let json = serde_json::to_value(&p).map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    Ok(Report::new(p.to_text(), json))
}

fn verify_paper(global: &Global, only: Option<&str>) -> Result<Report, Failure> {
    let ids: Vec<usize> = match only {
        None => (1..=TITLES.len()).collect(),
        Some(s) => s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|i| (1..=TITLES.len()).contains(i))
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| input_error(format!("criteria must be numbers from 1 to {}", TITLES.len())))?,
    };
    let opts = CheckOptions {
        seed: global.seed,
        ..CheckOptions::default()
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut failed = 0;
    for id in ids {
        let r = checks::run(id, &opts);
        text.push_str(&r.line());
        text.push('\n');
        failed += usize::from(!r.passed);
        rows.push(json!({"id": r.id, "title": r.title, "passed": r.passed, "detail": r.detail}));
    }
    let mut r = Report::new(text, json!(rows));
    r.code = u8::from(failed > 0);
    Ok(r)
}

fn export_dot(global: &Global, file: Option<&Path>, what: DotKind) -> Result<Report, Failure> {
    let g = load_graph(global, file)?;
    let dot = match what {
        DotKind::Graph => graph_dot(&g),
        DotKind::Compression => compression_dot(&g, &compression_graph(&g)),
        DotKind::Closed => lattice_dot(&g, &enumerate_lattice(&g, LatticeKind::Closed)),
        DotKind::Admissible => lattice_dot(&g, &enumerate_lattice(&g, LatticeKind::Admissible)),
    };
    let mut r = Report::new(dot.clone(), json!({"dot": dot}));
    r.other = Some((Format::Dot, dot));
    Ok(r)
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let global = &cli.global;
    match &cli.command {
        Command::Analyze { file } => analyze(global, file.as_deref()),
        Command::Nf { word } => {
            let g = load_graph(global, None)?;
            let nf = normalize(&g, &parse_word(&g, word)?.0);
            Ok(Report::new(
                format!("{}\n", nf.display(&g)),
                json!({"normal_form": nf.display(&g), "length": nf.len()}),
            ))
        }
        Command::Eq { left, right } => {
            let g = load_graph(global, None)?;
            let same = equal(&g, &parse_word(&g, left)?.0, &parse_word(&g, right)?.0);
            let mut r = Report::new(
                format!("{}\n", if same { "equal" } else { "not equal" }),
                json!({"equal": same}),
            );
            r.code = u8::from(!same);
            Ok(r)
        }
        Command::Aut(cmd) => aut(global, cmd),
        Command::Relators(RelatorsCommand::Verify { file }) => relators_verify(global, file.as_deref()),
        Command::Presentation(PresentationCommand::Emit { file }) => presentation(global, file.as_deref()),
        Command::VerifyPaper { only } => verify_paper(global, only.as_deref()),
        Command::Export(ExportCommand::Dot { file, what }) => export_dot(global, file.as_deref(), *what),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(r) => {
            let out = match cli.global.format {
                Format::Text => r.text,
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&r.json).expect("JSON values serialize")
                ),
                f => match r.other {
                    Some((g, s)) if g == f => s,
                    _ => {
                        eprintln!("error: this command does not support the requested format");
                        return ExitCode::from(2);
                    }
                },
            };
            if std::io::stdout().write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(r.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
