//! Acceptance target: runs every criterion and prints one verdict line per
//! criterion. Exits with status 1 when any criterion fails.
//!
//! The seed for randomized criteria comes from `SETTOP_SEED` (default 0).

use std::io::Write;
use std::process::ExitCode;

use settop::suite::{run_criterion, SuiteConfig, CRITERIA};

fn main() -> ExitCode {
    let seed = std::env::var("SETTOP_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let cfg = SuiteConfig { seed, ..Default::default() };
    let mut failed = 0;
    for id in 1..=CRITERIA {
        let r = run_criterion(id, &cfg);
        println!("{}", r.line());
        std::io::stdout().flush().ok();
        failed += usize::from(!r.pass);
    }
    println!("acceptance: {} of {CRITERIA} criteria pass", CRITERIA - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
