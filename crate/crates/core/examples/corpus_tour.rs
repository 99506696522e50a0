//! The bundled corpus: parse each entry, compare its recorded
//! expectations to fresh computations, and round-trip the file format.
//!
//! cargo run --example corpus_tour

use idealcalc::cohomology::deficiency_module;
use idealcalc::corpus::{corpus_entry, corpus_names, IdealFile};
use idealcalc::resolution::{free_resolution, ResolutionInvariants};
use idealcalc::{Field, Result};

fn main() -> Result<()> {
    let f = Field::default();
    println!("{:<22} {:>4} {:>5} {:>6} {:>4}  expected", "name", "ν", "α", "CM", "h^1");
    for name in corpus_names() {
        let e = corpus_entry(name, f)?;
        let i = e.ideal()?;
        let inv = ResolutionInvariants::of(&i, &free_resolution(&i)?)?;
        let h1 = if i.is_saturated()? && i.krull_dim()? >= 2 {
            deficiency_module(&i, 1).map(|m| m.total_dim().to_string()).unwrap_or("-".into())
        } else {
            "-".into()
        };
        let expected: Vec<String> = ["nu", "alpha", "cm", "h1_total"]
            .iter()
            .filter_map(|k| e.metadata.get(*k).map(|v| format!("{k}={v}")))
            .collect();
        println!("{name:<22} {:>4} {:>5} {:>6} {:>4}  {}", inv.nu, inv.alpha, inv.cohen_macaulay, h1, expected.join(" "));
    }

    let text = "# name: cusp\nring x y z\ny^2*z - x^3\n";
    let parsed = IdealFile::parse(text, f)?;
    println!("\nround trip:\n{}", parsed.to_text());
    Ok(())
}
