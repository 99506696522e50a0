use std::collections::BTreeMap;

use super::*;
use crate::field::Field;
use crate::homology::tor;
use crate::linear_change::random_linear_forms;
use crate::poly::PolyRing;

fn ring(n: usize) -> PolyRing {
    PolyRing::standard(n, Field::default()).unwrap()
}

const SKEW: [&str; 4] = ["x0*x2", "x0*x3", "x1*x2", "x1*x3"];
const CONIC_LINE: [&str; 7] = ["x0*x3", "x1*x3", "x2*x3", "x0*x4", "x1*x4", "x2*x4", "x0*x2 - x1^2"];
const QUARTIC: [&str; 4] = ["x1*x2 - x0*x3", "x0*x2^2 - x1^2*x3", "x1^3 - x0^2*x2", "x2^3 - x1*x3^2"];

/// For a reduced curve with `h^0(O_V(t)) = h0(t)` when `t ≥ 0`:
/// `h^1(𝓘_V(t)) = h0(t) - dim (S/I)_t`, and zero for `t < 0`.
fn curve_oracle(i: &Ideal, h0: impl Fn(i64) -> i64, upto: i64) -> BTreeMap<i32, usize> {
    let h = i.hilbert_series().unwrap();
    (0..=upto)
        .map(|t| (t as i32, (h0(t) - h.dim(t) as i64) as usize))
        .filter(|&(_, n)| n > 0)
        .collect()
}

#[test]
fn skew_lines_ext_and_h1() {
    let r = ring(4);
    let i = Ideal::parse(&r, &SKEW).unwrap();
    let e3 = ext(&i, 3).unwrap().to_finite_exact().unwrap();
    assert_eq!(e3.dims_map(), BTreeMap::from([(-4, 1)]));
    assert!(!ext(&i, 2).unwrap().is_finite_length().unwrap());
    assert!(ext(&i, 1).unwrap().hilbert_series().unwrap().is_zero());
    let h1 = deficiency_module(&i, 1).unwrap();
    assert_eq!(h1.dims_map(), BTreeMap::from([(0, 1)]));
    assert!(h1.is_certified());
    assert_eq!(h1.dims_map(), curve_oracle(&i, |t| 2 * (t + 1), 6));
    let (forms, _) = random_linear_forms(&r, 2, 3).unwrap();
    let ka = h1.annihilator_submodule(&forms);
    assert_eq!((ka.total_dim(), ka.nu_module().unwrap()), (1, 1));
}

#[test]
fn acm_curves_have_no_h1() {
    let r = ring(4);
    for g in [&["x0", "x1"][..], &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]] {
        let i = Ideal::parse(&r, g).unwrap();
        assert!(deficiency_module(&i, 1).unwrap().is_zero());
        assert!(is_quasi_buchsbaum(&i).unwrap().holds);
    }
}

#[test]
fn rational_quartic() {
    let r = ring(4);
    let i = Ideal::parse(&r, &QUARTIC).unwrap();
    let h1 = deficiency_module(&i, 1).unwrap();
    assert_eq!(h1.dims_map(), curve_oracle(&i, |t| 4 * t + 1, 8));
    assert_eq!(h1.dims_map(), BTreeMap::from([(1, 1)]));
}

#[test]
fn conic_and_line() {
    let r = ring(5);
    let i = Ideal::parse(&r, &CONIC_LINE).unwrap();
    let h1 = deficiency_module(&i, 1).unwrap();
    assert_eq!(h1.dims_map(), curve_oracle(&i, |t| 3 * t + 2, 6));
    assert_eq!(h1.total_dim(), 1);
    let qb = is_quasi_buchsbaum(&i).unwrap();
    assert!(qb.holds);
    assert_eq!(qb.modules.len(), 1);
    // H^2 is the top cohomology here: infinite, so truncated.
    assert!(matches!(deficiency_module(&i, 2), Err(Error::Uncertified)));
    let (lo, hi) = default_window(&i).unwrap();
    let top = top_cohomology_window(&i, lo, hi).unwrap();
    let (forms, _) = random_linear_forms(&r, 3, 1).unwrap();
    let kill = top.annihilator_submodule(&forms);
    assert!(kill.total_dim() >= 2, "{:?}", kill.dims_map());
    let kz = top_koszul_homology(&i, &forms, 3, (lo, hi)).unwrap();
    assert!(kz.total_dim >= 2);
}

#[test]
fn index_range() {
    let r = ring(4);
    let i = Ideal::parse(&r, &SKEW).unwrap();
    assert!(matches!(deficiency_module(&i, 0), Err(Error::IndexOutOfRange { .. })));
    assert!(matches!(deficiency_module(&i, 3), Err(Error::IndexOutOfRange { .. })));
    let not_sat = Ideal::parse(&r, &["x0^2", "x0*x1", "x0*x2", "x0*x3", "x1"]).unwrap();
    assert!(matches!(deficiency_module(&not_sat, 1), Err(Error::Precondition(_))));
}

#[test]
fn point_on_the_line() {
    let r = ring(2);
    let i = Ideal::parse(&r, &["x0"]).unwrap();
    let top = top_cohomology_window(&i, -6, 3).unwrap();
    for t in -6..=3 {
        assert_eq!(top.dim(t), Some(usize::from(t <= -1)), "degree {t}");
    }
    assert!(!top.zero_below);
    // Shifting the window agrees on the overlap.
    let shifted = top_cohomology_window(&i, -5, 4).unwrap();
    for t in -5..=3 {
        assert_eq!(top.dim(t), shifted.dim(t));
    }
}

#[test]
fn top_cohomology_vanishes_past_regularity() {
    let r = ring(4);
    let i = Ideal::parse(&r, &SKEW).unwrap();
    let reg = free_resolution(&i).unwrap().regularity();
    let top = top_cohomology_window(&i, -3, reg + 4).unwrap();
    for t in reg..=reg + 4 {
        assert_eq!(top.dim(t), Some(0), "degree {t}");
    }
    // h^2(𝓘_V(t)) = h^1(O_V(t)) = 2(-t - 1) for two lines, t < 0.
    for t in -3..0 {
        assert_eq!(top.dim(t), Some((2 * (-t - 1)) as usize));
    }
}

#[test]
fn comparison_matches_tor() {
    let r = ring(4);
    let pairs: [(&[&str], &[&str]); 4] = [
        (&["x0", "x1"], &["x2", "x3"]),
        (&SKEW, &["x0 + x2", "x1 - x3", "x0 + x1 + x3"]),
        (&["x0^2", "x1"], &["x2", "x3^2"]),
        (&["x0*x1", "x2"], &["x0 - x3", "x1 + x2 - x3", "x2^2"]),
    ];
    for (a, b) in pairs {
        let (i, j) = (Ideal::parse(&r, a).unwrap(), Ideal::parse(&r, b).unwrap());
        let c = comparison_module(&i, &j).unwrap();
        let t = tor(&i, &j, 1).unwrap();
        assert!(c.is_certified() && t.is_certified());
        assert_eq!(c.dims_map(), t.dims_map(), "{a:?} {b:?}");
    }
    let i = Ideal::parse(&r, &["x0", "x1"]).unwrap();
    let j = Ideal::parse(&r, &["x1", "x2"]).unwrap();
    assert!(matches!(comparison_module(&i, &j), Err(Error::NotDisjoint { dim: 1 })));
}

#[test]
fn second_prime_agrees() {
    let r = PolyRing::standard(5, Field::new(31991).unwrap()).unwrap();
    let i = Ideal::parse(&r, &CONIC_LINE).unwrap();
    assert_eq!(deficiency_module(&i, 1).unwrap().dims_map(), BTreeMap::from([(0, 1)]));
}

#[test]
fn dims_export() {
    let r = ring(4);
    let i = Ideal::parse(&r, &SKEW).unwrap();
    let json = serde_json::to_string(&deficiency_module(&i, 1).unwrap().export(1)).unwrap();
    assert_eq!(json, r#"{"index":1,"dims":{"0":1},"total":1,"certified":true}"#);
}
