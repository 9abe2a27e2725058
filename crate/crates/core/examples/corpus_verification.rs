//! Batch verification of the bundled corpus against the recorded golden
//! values, printed as a table.

use knotcover::harness::{bundled_corpus, bundled_golden, render, run_verification, Format, VerifyConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = VerifyConfig { golden: Some(bundled_golden()), ..Default::default() };
    let report = run_verification(&bundled_corpus(), &config)?;
    print!("{}", render(&report, Format::Table));
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
