//! Every checker on a few corpus entries, printed as JSON reports.
//!
//! cargo run --example verify_theorems

use idealcalc::corpus::corpus_entry;
use idealcalc::theorems::{verify, THEOREM_IDS};
use idealcalc::{Field, Result};

fn main() -> Result<()> {
    let f = Field::default();
    let load = |n: &str| corpus_entry(n, f).and_then(|e| e.ideal());

    let r = verify("serre", &[load("skew_lines_p3")?, load("point_p3_generic")?], 1)?;
    println!("{}", serde_json::to_string_pretty(&r).unwrap());

    let r = verify("dubreil_base", &[load("maximal_square_p1")?], 1)?;
    println!("dubreil_base on maximal_square_p1: {:?} {:?}", r.verdict, r.quantities);

    for name in ["skew_lines_p3", "rational_quartic_p3", "conic_line_p4"] {
        let i = load(name)?;
        for id in &THEOREM_IDS[2..] {
            if *id == "migliore" && i.ring().nvars() != 4 {
                continue;
            }
            let r = verify(id, std::slice::from_ref(&i), 1)?;
            let slack = r.quantity_i64("slack").map_or(String::new(), |s| format!(" slack {s}"));
            println!("{name:>20} {id:<22} {:?}{slack}", r.verdict);
        }
    }
    Ok(())
}
