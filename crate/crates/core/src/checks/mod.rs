//! The acceptance checks: worked examples on the fixture graphs and the
//! exhaustive or sampled property suites, each reported as one pass/fail
//! line.

mod examples;
mod exhaustive;
pub mod fixtures;
mod suites;
mod word_oracle;

pub use exhaustive::for_all_graphs;

use std::time::{Duration, Instant};

/// Options shared by the sampled checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Seed of every sampled suite.
    pub seed: u64,
    /// Worker threads for the exhaustive suites.
    pub threads: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        let threads = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
        CheckOptions { seed: 2024, threads }
    }
}

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    /// Criterion number, 1 to 14.
    pub id: usize,
    /// Short title.
    pub title: &'static str,
    /// True when every assertion held.
    pub passed: bool,
    /// Counts, witnesses or the first failure.
    pub detail: String,
    /// Wall-clock time.
    pub elapsed: Duration,
}

impl CheckResult {
    /// `PASS  3  title (detail) [time]` line.
    pub fn line(&self) -> String {
        format!(
            "{} {:>2}  {}: {} [{:.2}s]",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Outcome of a check body: `Ok(detail)` or `Err(first failure)`.
pub(crate) type Outcome = std::result::Result<String, String>;

/// Titles of the criteria, indexed from 1.
pub const TITLES: [&str; 14] = [
    "GA admissible sets and closures",
    "P4 admissible sets and closure",
    "GO classes, B-sets, heights and total order",
    "GD admissible sets, components, domination and balance",
    "GD composition of a partial conjugation and transvections",
    "relator suite on four fixture graphs",
    "transvection and partial conjugation commutation rules on GA and GD",
    "word calculus against brute-force oracles",
    "admissible-set lemmas on all graphs with at most six vertices",
    "factorization round trips on GD and GA",
    "classification coherence on sampled conjugating words",
    "no domination implies admissible sets equal closures",
    "graph automorphism count identity",
    "GD obstruction has no bounded stabilizer-conjugating factorization",
];

fn body(id: usize, opts: &CheckOptions) -> Outcome {
    match id {
        1 => examples::ga(),
        2 => examples::p4(),
        3 => examples::go(),
        4 => examples::gd(),
        5 => examples::gd_composition(),
        6 => suites::relators(),
        7 => suites::commutation_rules(),
        8 => word_oracle::run(opts),
        9 => exhaustive::lemmas(opts),
        10 => suites::round_trips(opts),
        11 => suites::coherence(opts),
        12 => exhaustive::no_domination(opts),
        13 => examples::automorphism_count(),
        14 => examples::negative_control(),
        _ => Err(format!("no criterion {id}")),
    }
}

/// Runs criterion `id` (1 to 14).
pub fn run(id: usize, opts: &CheckOptions) -> CheckResult {
    let start = Instant::now();
    let out = std::panic::catch_unwind(|| body(id, opts)).unwrap_or_else(|p| Err(format!("panic: {}", panic_text(&p))));
    let (passed, detail) = match out {
        Ok(d) => (true, d),
        Err(e) => (false, e),
    };
    CheckResult {
        id,
        title: TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"),
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

/// Runs every criterion in order.
pub fn run_all(opts: &CheckOptions) -> Vec<CheckResult> {
    (1..=TITLES.len()).map(|id| run(id, opts)).collect()
}

fn panic_text(p: &Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<String>()
        .cloned()
        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "unknown".into())
}

/// Fails with `msg` unless `cond` holds.
pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}
