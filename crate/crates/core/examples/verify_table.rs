//! Cross-checks a JSON-lines knot table, the bundled one by default.
//!
//! `cargo run --example verify_table -- my_knots.jsonl`

use knotform::table::{parse_table, verify_entry, BUNDLED_TABLE};

fn main() -> std::io::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => BUNDLED_TABLE.to_string(),
    };
    let mut failures = 0;
    for line in parse_table(&text) {
        match line.entry {
            Ok(entry) => {
                let report = verify_entry(line.line, &entry);
                println!("{:>3} {:<8} {}", line.line, report.name, if report.passed() { "ok" } else { "FAILED" });
                for c in report.checks.iter().filter(|c| !c.passed) {
                    failures += 1;
                    println!("      {}: {}", c.name, c.detail);
                }
            }
            Err(e) => {
                failures += 1;
                println!("{:>3} schema error: {e}", line.line);
            }
        }
    }
    println!("{failures} failures");
    Ok(())
}
