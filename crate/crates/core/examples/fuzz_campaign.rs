//! Seeded random campaigns against every checker.
//!
//! cargo run --release --example fuzz_campaign -- 200 7

use idealcalc::theorems::{fuzz, THEOREM_IDS};
use idealcalc::{Field, Result};

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(50);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    println!("{:<22} {:>6} {:>9} {:>15} {:>7}", "theorem", "holds", "violated", "not-applicable", "errors");
    for id in THEOREM_IDS {
        let s = fuzz(id, count, seed, Field::default())?;
        println!("{id:<22} {:>6} {:>9} {:>15} {:>7}", s.holds, s.violated, s.not_applicable, s.errors.len());
        for v in s.violations() {
            println!("{}", serde_json::to_string(v).unwrap());
        }
    }
    Ok(())
}
