//! Reduced Gröbner bases under grevlex, lex and an elimination order.
//!
//! cargo run --example groebner_basis

use idealcalc::groebner::{buchberger, VectorElement};
use idealcalc::{Field, MonomialOrder, PolyRing, Result};

fn main() -> Result<()> {
    let r = PolyRing::new(&["t", "x", "y", "z"], Field::default())?;
    // The twisted cubic, plus a cubic cutting it in nine points.
    let gens: Vec<VectorElement> = ["t*y - x^2", "t*z - x*y", "x*z - y^2", "t^3 + x^3 + y^3 - z^3"]
        .iter()
        .map(|s| r.parse(s).map(VectorElement::from_poly))
        .collect::<Result<_>>()?;

    for (name, order) in [("grevlex", MonomialOrder::Grevlex), ("lex", MonomialOrder::Lex), ("eliminate t", MonomialOrder::Elimination(1))] {
        let gb = buchberger(&r, &gens, order)?;
        println!("{name}: {} elements", gb.len());
        for p in gb.polynomials() {
            println!("    {p}");
        }
    }

    let gb = buchberger(&r, &gens, MonomialOrder::Grevlex)?;
    let f = r.parse("x^3*z + t^2*y^2")?;
    println!("normal form of {f}: {}", gb.normal_form_poly(&f)?);
    Ok(())
}
