//! Sums, products, intersections, colons and saturation, with Hilbert
//! series and dimension.
//!
//! cargo run --example ideal_operations

use idealcalc::ideal::Ideal;
use idealcalc::{Field, PolyRing, Result};

fn show(label: &str, i: &Ideal) -> Result<()> {
    let gens: Vec<String> = i.canonical_generators()?.iter().map(|g| g.to_string()).collect();
    let h = i.hilbert_series()?;
    println!("{label}: ({})", gens.join(", "));
    println!("    dim S/I = {}, degree {}, numerator {:?}", h.krull_dim(), h.degree(), h.numerator);
    Ok(())
}

fn main() -> Result<()> {
    let r = PolyRing::standard(4, Field::default())?;
    let l1 = Ideal::parse(&r, &["x0", "x1"])?;
    let l2 = Ideal::parse(&r, &["x2", "x3"])?;
    let l3 = Ideal::parse(&r, &["x0", "x2"])?;

    show("L1 ∩ L2 (skew lines)", &l1.intersect(&l2)?)?;
    show("L1 · L2", &l1.product(&l2)?)?;
    println!("    L1·L2 = L1∩L2: {}", l1.product(&l2)?.same_as(&l1.intersect(&l2)?)?);
    show("L1 ∩ L3 (lines meeting in a point)", &l1.intersect(&l3)?)?;
    println!("    L1·L3 = L1∩L3: {}", l1.product(&l3)?.same_as(&l1.intersect(&l3)?)?);

    // An m-primary component changes nothing projectively; saturation drops it.
    let m = Ideal::maximal(&r);
    let embedded = l1.intersect(&m.product(&m)?)?;
    println!("(x0, x1) ∩ m^2 saturated: {}", embedded.is_saturated()?);
    show("its saturation", &embedded.saturate()?)?;
    show("colon (x0, x1)^2 : x0", &l1.product(&l1)?.quotient_by(&r.var(0))?)?;
    Ok(())
}
