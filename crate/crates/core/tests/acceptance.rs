//! One line per acceptance criterion, details for failures. Runs without
//! the libtest harness so the table is always printed.

use isopair_core::suite::{run_suite, DEFAULT_SEED};

fn main() {
    let report = run_suite(DEFAULT_SEED, None);
    for c in &report.criteria {
        println!("criterion {:>2} {}: {} ({} ms)", c.number, c.title, if c.pass { "pass" } else { "FAIL" }, c.millis);
        for l in &c.lines {
            println!("    {l}");
        }
    }
    let passed = report.criteria.iter().filter(|c| c.pass).count();
    println!("acceptance: {passed}/{} criteria passed", report.criteria.len());
    if !report.pass() {
        std::process::exit(1);
    }
}
