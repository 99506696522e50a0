//! Minimal free resolutions, Betti tables and the numerical invariants read
//! off them.
//!
//! cargo run --example free_resolution

use idealcalc::corpus::corpus_entry;
use idealcalc::resolution::{free_resolution, ResolutionInvariants};
use idealcalc::{Field, Result};

fn main() -> Result<()> {
    for name in ["twisted_cubic_p3", "skew_lines_p3", "rational_quartic_p3", "conic_line_p4"] {
        let i = corpus_entry(name, Field::default())?.ideal()?;
        let res = free_resolution(&i)?;
        let inv = ResolutionInvariants::of(&i, &res)?;
        println!("{name}");
        print!("{}", res.betti().to_text());
        println!(
            "ν={} α={} pd={} depth={} dim={} reg={} CM={}",
            inv.nu, inv.alpha, inv.pd, inv.depth, inv.krull_dim, inv.regularity, inv.cohen_macaulay
        );
        println!(
            "Betti numbers reproduce the Hilbert numerator: {}\n",
            res.betti().matches_series(&i.hilbert_series()?)
        );
    }
    Ok(())
}
