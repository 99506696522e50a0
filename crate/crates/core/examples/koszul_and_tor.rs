//! Koszul homology of finite modules and Tor_1 against (I ∩ J)/IJ.
//!
//! cargo run --example koszul_and_tor

use idealcalc::cohomology::comparison_module;
use idealcalc::homology::{koszul_homology, module_betti, tor};
use idealcalc::ideal::Ideal;
use idealcalc::linear_change::random_linear_forms;
use idealcalc::module::FiniteGradedModule;
use idealcalc::presentation::present_quotient;
use idealcalc::{Field, PolyRing, Result};

fn main() -> Result<()> {
    let f = Field::default();
    let r = PolyRing::standard(3, f)?;

    let k = FiniteGradedModule::residue_field(f, 3, 0);
    let (forms, _) = random_linear_forms(&r, 3, 1)?;
    for i in 0..=3 {
        println!("H_{i}(L1, L2, L3; k) = {:?}", koszul_homology(&forms, &k, i)?.dims);
    }

    let m = present_quotient(&Ideal::parse(&r, &["x0^2", "x1^2", "x2^2"])?)?.to_finite_exact()?;
    println!("S/(x0^2, x1^2, x2^2): dims {:?}, Betti {:?}", m.dims_map(), module_betti(&m)?);
    for i in 0..=2 {
        let h = koszul_homology(&forms[..2], &m, i)?;
        println!("H_{i}(L1, L2; M) = {:?}", h.dims);
    }

    let s = PolyRing::standard(4, f)?;
    let lines = Ideal::parse(&s, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"])?;
    let point = Ideal::parse(&s, &["x0 + x2", "x1 - x3", "x0 + x1 + x3"])?;
    println!("(I ∩ J)/IJ  = {:?}", comparison_module(&lines, &point)?.dims_map());
    println!("Tor_1(S/I, S/J) = {:?}", tor(&lines, &point, 1)?.dims_map());
    Ok(())
}
