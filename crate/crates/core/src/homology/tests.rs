use super::*;
use crate::field::Field;
use crate::linear_change::random_linear_forms;
use crate::monomial::binomial;

fn ring(n: usize) -> PolyRing {
    PolyRing::standard(n, Field::default()).unwrap()
}

fn quotient(r: &PolyRing, g: &[&str], hi: i32) -> FiniteGradedModule {
    present_quotient(&Ideal::parse(r, g).unwrap()).unwrap().to_finite(0, hi).unwrap()
}

#[test]
fn residue_field_koszul() {
    let r = ring(4);
    let k = FiniteGradedModule::residue_field(r.field(), 4, 0);
    let (forms, _) = random_linear_forms(&r, 3, 5).unwrap();
    for i in 0..=4 {
        let h = koszul_homology(&forms, &k, i).unwrap();
        assert_eq!(h.total_dim as u64, binomial(3, i as u64));
        assert_eq!(h.status, Stabilization::Certified);
        if h.total_dim > 0 {
            assert_eq!(h.dims.keys().copied().collect::<Vec<_>>(), vec![i as i32]);
        }
    }
}

#[test]
fn residue_field_betti_numbers() {
    let k = FiniteGradedModule::residue_field(Field::default(), 3, 0);
    let b = module_betti(&k).unwrap();
    assert_eq!(b, BTreeMap::from([((0, 0), 1), ((1, 1), 3), ((2, 2), 3), ((3, 3), 1)]));
}

#[test]
fn artinian_betti_numbers() {
    // S/(x0^2, x1) in k[x0, x1]: resolution 1, 2, 1 with twists 0 | 1 2 | 3.
    let r = ring(2);
    let m = present_quotient(&Ideal::parse(&r, &["x0^2", "x1"]).unwrap()).unwrap().to_finite_exact().unwrap();
    assert_eq!(m.nu_module().unwrap(), 1);
    let b = module_betti(&m).unwrap();
    assert_eq!(b, BTreeMap::from([((0, 0), 1), ((1, 1), 1), ((1, 2), 1), ((2, 3), 1)]));
}

#[test]
fn regular_sequence_has_no_higher_homology() {
    let r = ring(3);
    let m = quotient(&r, &["x0^2"], 7);
    let forms = vec![r.var(1), r.var(2)];
    for i in 1..=2 {
        let h = koszul_homology(&forms, &m, i).unwrap();
        assert_eq!(h.total_dim, 0, "index {i}");
        assert_eq!(h.status, Stabilization::WindowLimited);
    }
    let h0 = koszul_homology(&forms, &m, 0).unwrap();
    assert_eq!(h0.dims.get(&0), Some(&1));
    assert_eq!(h0.dims.get(&1), Some(&1));
}

#[test]
fn homology_is_annihilated_by_forms() {
    let r = ring(4);
    let m = quotient(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"], 6);
    let (forms, _) = random_linear_forms(&r, 2, 11).unwrap();
    for i in 0..=2 {
        let h = koszul_homology(&forms, &m, i).unwrap().module;
        for d in h.lo..h.hi() {
            for l in &forms {
                assert!(h.act_linear(l, d).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn zero_form_splits_homology() {
    let r = ring(3);
    let m = present_quotient(&Ideal::parse(&r, &["x0^2", "x1^2", "x2^3", "x0*x1*x2"]).unwrap()).unwrap().to_finite_exact().unwrap();
    let y = vec![r.parse("x1 + x2").unwrap(), r.parse("x0 - 2*x2").unwrap()];
    let zy: Vec<Polynomial> = std::iter::once(r.zero()).chain(y.iter().cloned()).collect();
    for i in 0..=3 {
        let whole = koszul_homology(&zy, &m, i).unwrap().dims;
        let a = koszul_homology(&y, &m, i).unwrap().dims;
        let b = if i > 0 { koszul_homology(&y, &m, i - 1).unwrap().dims } else { BTreeMap::new() };
        for e in -2..10 {
            let lhs = whole.get(&e).copied().unwrap_or(0);
            let rhs = a.get(&e).copied().unwrap_or(0) + b.get(&(e - 1)).copied().unwrap_or(0);
            assert_eq!(lhs, rhs, "index {i}, degree {e}");
        }
    }
}

#[test]
fn tor_examples() {
    let r = ring(4);
    let a = Ideal::parse(&r, &["x0"]).unwrap();
    let b = Ideal::parse(&r, &["x1"]).unwrap();
    assert!(tor(&a, &b, 1).unwrap().is_zero());
    let i = Ideal::parse(&r, &["x0", "x1"]).unwrap();
    let j = Ideal::parse(&r, &["x2", "x3"]).unwrap();
    let t1 = tor(&i, &j, 1).unwrap();
    assert!(t1.is_zero() && t1.is_certified());
    let t0 = tor(&i, &j, 0).unwrap();
    assert_eq!(t0.dims_map(), BTreeMap::from([(0, 1)]));
    assert!(tor(&i, &j, 7).unwrap().is_zero());
}

#[test]
fn short_exact_sequence_alternating_sum() {
    let r = ring(3);
    let m = present_quotient(&Ideal::parse(&r, &["x0^2", "x1^3", "x2^2", "x0*x1*x2"]).unwrap())
        .unwrap()
        .to_finite_exact()
        .unwrap();
    let (sub, quo) = m.split_by_submodule(&[(1, vec![(0, 1), (2, 3)]), (2, vec![(1, 1)])]);
    assert!(sub.total_dim() > 0 && quo.total_dim() > 0);
    assert_eq!(sub.total_dim() + quo.total_dim(), m.total_dim());
    let (forms, _) = random_linear_forms(&r, 2, 4).unwrap();
    let mut sum: BTreeMap<i32, i64> = BTreeMap::new();
    for i in 0..=2 {
        for (mm, sign) in [(&sub, 1), (&m, -1), (&quo, 1)] {
            for (e, n) in koszul_homology(&forms, mm, i).unwrap().dims {
                *sum.entry(e).or_default() += sign * if i % 2 == 0 { 1 } else { -1 } * n as i64;
            }
        }
    }
    assert!(sum.values().all(|&v| v == 0), "{sum:?}");
}

mod properties {
    use super::*;
    use crate::theorems::families::{artinian_module, instance_rng, random_elements};
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn koszul_homology_is_killed_and_exact(seed in 0u64..1_000_000, form_seed in 0u64..1000) {
            let mut rng = instance_rng(seed, 0);
            let (r, m) = artinian_module(Field::default(), &mut rng).unwrap();
            let (forms, _) = random_linear_forms(&r, r.nvars(), form_seed).unwrap();
            let (sub, quo) = m.split_by_submodule(&random_elements(&m, &mut rng));
            let mut sum: BTreeMap<i32, i64> = BTreeMap::new();
            for i in 0..=forms.len() {
                let h = koszul_homology(&forms, &m, i).unwrap().module;
                for d in h.lo..=h.hi() {
                    for l in &forms {
                        prop_assert!(h.act_linear(l, d).is_none_or(|a| a.is_zero()));
                    }
                }
                let sign = if i % 2 == 0 { 1 } else { -1 };
                for (mm, e) in [(&sub, 1), (&m, -1), (&quo, 1)] {
                    for (d, n) in koszul_homology(&forms, mm, i).unwrap().dims {
                        *sum.entry(d).or_default() += sign * e * n as i64;
                    }
                }
            }
            prop_assert!(sum.values().all(|&v| v == 0));
            // Euler characteristic of K(forms; M) with forms spanning the linear forms.
            let total: i64 = (0..=forms.len()).map(|i| {
                let n = koszul_homology(&forms, &m, i).unwrap().total_dim as i64;
                if i % 2 == 0 { n } else { -n }
            }).sum();
            prop_assert_eq!(total, 0);
        }
    }
}
