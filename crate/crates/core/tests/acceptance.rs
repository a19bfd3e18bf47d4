//! Acceptance criteria: one pass/fail line per criterion.

use raag_core::checks::{run, CheckOptions, TITLES};
use std::io::Write;

fn main() {
    let opts = CheckOptions::default();
    let mut failed = 0;
    for id in 1..=TITLES.len() {
        let r = run(id, &opts);
        println!("{}", r.line());
        std::io::stdout().flush().ok();
        failed += usize::from(!r.passed);
    }
    println!("{} of {} criteria passed", TITLES.len() - failed, TITLES.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
