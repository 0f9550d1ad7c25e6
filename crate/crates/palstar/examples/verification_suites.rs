//! Run every verification suite at desk scale and print the outcomes.
//! The same checks back the `palstar verify` subcommand.
//!
//! ```bash
//! cargo run -p palstar --example verification_suites
//! ```

use palstar::verify::all_suites;
use palstar::words::DEFAULT_ENUMERATION_BUDGET;

fn main() {
    let outcomes = all_suites(DEFAULT_ENUMERATION_BUDGET);
    let mut failures = 0;
    for outcome in &outcomes {
        let status = if outcome.passed { "pass" } else { "FAIL" };
        println!("[{status}] {} — {}", outcome.name, outcome.detail);
        if !outcome.passed {
            failures += 1;
        }
    }
    println!("\n{} checks, {failures} failures", outcomes.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
