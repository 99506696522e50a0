use super::families::*;
use super::*;
use crate::field::Field;
use crate::poly::PolyRing;

fn ring(n: usize) -> PolyRing {
    PolyRing::standard(n, Field::default()).unwrap()
}

fn ideal(n: usize, g: &[&str]) -> Ideal {
    Ideal::parse(&ring(n), g).unwrap()
}

#[test]
fn serre_examples() {
    let r = verify_serre(&ideal(4, &["x0", "x1"]), &ideal(4, &["x2", "x3"])).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    assert_eq!(r.quantity_bool("productEqualsIntersection"), Some(true));
    let point = ideal(4, &["x0 + x2", "x1 - x3", "x0 + x1 + x3"]);
    let r = verify_serre(&ideal(4, &SKEW_LINES), &point).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    assert_eq!(r.quantity_bool("productEqualsIntersection"), Some(false));
    assert_eq!(r.quantity_bool("rhs"), Some(false));
    // In five variables these linear spaces meet at a point.
    let r = verify_serre(&ideal(5, &["x0", "x1"]), &ideal(5, &["x2", "x3"])).unwrap();
    assert_eq!(r.verdict, Verdict::NotApplicable);
}

#[test]
fn dubreil_examples() {
    let r = dubreil_base(&ideal(2, &["x0^2", "x0*x1", "x1^2"])).unwrap();
    assert_eq!((r.verdict, r.quantity_i64("nu"), r.quantity_i64("rhs")), (Verdict::Holds, Some(3), Some(3)));
    let r = dubreil_base(&ideal(2, &["x0^3"])).unwrap();
    assert_eq!((r.quantity_i64("nu"), r.quantity_i64("rhs")), (Some(1), Some(4)));
    assert!(dubreil_base(&ideal(3, &["x0"])).is_err());
}

#[test]
fn skew_lines_bounds() {
    let i = ideal(4, &SKEW_LINES);
    let e = extended_dubreil_bound(&i, 1).unwrap();
    assert_eq!((e.verdict, e.quantity_i64("rhs")), (Verdict::Holds, Some(4)));
    let q = quasi_buchsbaum_codim2_bound(&i).unwrap();
    assert_eq!((q.verdict, q.quantity_i64("rhs")), (Verdict::Holds, Some(4)));
    let g = quasi_buchsbaum_general_bound(&i, 1).unwrap();
    assert_eq!(g.quantity_i64("rhs"), q.quantity_i64("rhs"));
    let m = migliore_bound(&i, 1).unwrap();
    assert_eq!((m.verdict, m.quantity_i64("rhs"), m.quantity_bool("nuKAEqualsH1Dim")), (Verdict::Holds, Some(4), Some(true)));
}

#[test]
fn skew_lines_structure() {
    let i = ideal(4, &SKEW_LINES);
    let s = check_resolution_structure(&i).unwrap();
    assert_eq!(s.verdict, Verdict::Holds, "{s:?}");
    assert_eq!((s.quantity_i64("r"), s.quantity_i64("p")), (Some(0), Some(4)));
    let e = euler_lower_bound(&i).unwrap();
    assert_eq!((e.verdict, e.quantity_i64("rhs")), (Verdict::Holds, Some(-2)));
    let a = amasaki_bound(&i).unwrap();
    assert_eq!((a.verdict, a.quantity_i64("N"), a.quantity_i64("rhs")), (Verdict::Holds, Some(1), Some(1)));
}

#[test]
fn rational_quartic_structure() {
    let i = ideal(4, &RATIONAL_QUARTIC);
    let s = check_resolution_structure(&i).unwrap();
    assert_eq!(s.verdict, Verdict::Holds, "{s:?}");
    assert_eq!(s.quantity_i64("r"), Some(0));
}

#[test]
fn acm_reduces_to_dubreil() {
    let i = ideal(4, &TWISTED_CUBIC);
    let e = extended_dubreil_bound(&i, 3).unwrap();
    assert_eq!((e.verdict, e.quantity_i64("rhs")), (Verdict::Holds, Some(3)));
    let s = check_resolution_structure(&i).unwrap();
    assert_eq!(s.verdict, Verdict::Holds);
    let a = amasaki_bound(&i).unwrap();
    assert_eq!(a.quantity_i64("N"), Some(0));
}

#[test]
fn conic_and_line() {
    let i = ideal(5, &CONIC_LINE);
    let g = quasi_buchsbaum_general_bound(&i, 1).unwrap();
    assert_eq!(g.verdict, Verdict::Holds);
    assert_eq!((g.quantity_i64("nu"), g.quantity_i64("alpha")), (Some(7), Some(2)));
    assert!(g.quantity_i64("topAnnihilatorDim").unwrap() >= 2);
    assert!(g.quantity_i64("rhs").unwrap() >= 8);
    assert_eq!(quasi_buchsbaum_codim2_bound(&i).unwrap().verdict, Verdict::NotApplicable);
    let s = check_resolution_structure(&i).unwrap();
    assert_eq!(s.verdict, Verdict::NotApplicable);
}

#[test]
fn points_in_p3_use_the_top_module() {
    let i = ideal(4, &["x0", "x1", "x2"]).intersect(&ideal(4, &["x1", "x2", "x3"])).unwrap();
    let m = migliore_bound(&i, 5).unwrap();
    assert_eq!(m.verdict, Verdict::Holds, "{m:?}");
}

#[test]
fn report_round_trip() {
    let r = amasaki_bound(&ideal(4, &SKEW_LINES)).unwrap();
    let s = serde_json::to_string(&r).unwrap();
    assert!(s.starts_with(r#"{"theoremId":"amasaki","inputs":{"ideals":["ring x0 x1 x2 x3 | x0*x2, x0*x3, x1*x2, x1*x3"],"seeds":[],"prime":32003}"#), "{s}");
    let back: VerificationReport = serde_json::from_str(&s).unwrap();
    assert_eq!(back, r);
}

#[test]
fn unknown_theorem() {
    assert!(matches!(verify("nope", &[], 0), Err(Error::UnknownTheorem(_))));
}

#[test]
fn small_fuzz_runs() {
    let s = fuzz("dubreil_base", 20, 7, Field::default()).unwrap();
    assert_eq!((s.holds, s.violated), (20, 0));
    let s = fuzz("serre", 8, 1, Field::default()).unwrap();
    assert_eq!(s.violated, 0);
    assert!(s.errors.is_empty(), "{:?}", s.errors);
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn bounds_are_never_violated(seed in 0u64..1_000_000) {
            let f = Field::default();
            let mut rng = instance_rng(seed, 0);
            let i = subscheme(f, &mut rng, Some(4)).unwrap();
            for id in ["extended_dubreil", "qb_codim2", "qb_general", "migliore", "resolution_structure", "euler_lower", "amasaki"] {
                let r = verify(id, std::slice::from_ref(&i), seed).unwrap();
                prop_assert_ne!(r.verdict, Verdict::Violated, "{} {:?}", id, r);
            }
        }

        #[test]
        fn verdicts_do_not_depend_on_the_seed(seed in 0u64..1_000_000, other in 0u64..1_000_000) {
            let mut rng = instance_rng(seed, 1);
            let i = subscheme(Field::default(), &mut rng, None).unwrap();
            let a = quasi_buchsbaum_general_bound(&i, seed).unwrap();
            let b = quasi_buchsbaum_general_bound(&i, other).unwrap();
            prop_assert_eq!(a.verdict, b.verdict);
            prop_assert_eq!(a.quantity_i64("rhs"), b.quantity_i64("rhs"));
        }
    }
}
