//! Deficiency modules H^i_*(V) via Ext and graded duality, the
//! quasi-Buchsbaum test and a window on the top cohomology.
//!
//! cargo run --example deficiency_modules

use idealcalc::cohomology::{default_window, intermediate_cohomology, is_quasi_buchsbaum, top_cohomology_window};
use idealcalc::corpus::corpus_entry;
use idealcalc::{Field, Result};

fn main() -> Result<()> {
    for name in ["skew_lines_p3", "rational_quartic_p3", "double_line_p3", "conic_line_p4", "two_planes_p5", "twisted_cubic_p3"] {
        let i = corpus_entry(name, Field::default())?.ideal()?;
        println!("{name}");
        for (k, h) in intermediate_cohomology(&i)? {
            println!("    H^{k}: dims {:?}, killed by m: {}", h.dims_map(), h.is_killed_by_maximal_ideal());
        }
        println!("    quasi-Buchsbaum: {}", is_quasi_buchsbaum(&i)?.holds);
    }

    // The top cohomology of a curve is not finitely generated: it only
    // exists here as a truncation.
    let i = corpus_entry("skew_lines_p3", Field::default())?.ideal()?;
    let (lo, hi) = default_window(&i)?;
    let top = top_cohomology_window(&i, lo, hi)?;
    println!("H^2 of the skew lines on [{lo}, {hi}]: {:?}", top.dims_map());
    Ok(())
}
