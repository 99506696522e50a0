use super::*;
use crate::field::Field;
use crate::linalg::{rank_of, SparseVec};
use crate::monomial::count_of_degree;
use proptest::prelude::*;
use std::collections::HashMap;

fn ring(n: usize) -> PolyRing {
    PolyRing::standard(n, Field::default()).unwrap()
}

fn polys(r: &PolyRing, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|x| r.parse(x).unwrap()).collect()
}

/// dim I_d by spanning all multiples of the generators in degree `d`.
fn ideal_dim_in_degree(r: &PolyRing, gens: &[Polynomial], d: u32) -> usize {
    let basis = Monomial::all_of_degree(r.nvars(), d);
    let idx: HashMap<Monomial, u32> = basis.iter().enumerate().map(|(i, m)| (*m, i as u32)).collect();
    let mut rows: Vec<SparseVec> = Vec::new();
    for g in gens {
        let gd = g.degree().unwrap();
        if gd > d {
            continue;
        }
        for m in Monomial::all_of_degree(r.nvars(), d - gd) {
            let mut v: SparseVec = g.mul_monomial(&m).terms().iter().map(|(t, c)| (idx[t], *c)).collect();
            v.sort();
            rows.push(v);
        }
    }
    rank_of(r.field(), &rows)
}

fn standard_count(leads: &[Monomial], n: usize, d: u32) -> usize {
    Monomial::all_of_degree(n, d).iter().filter(|m| !leads.iter().any(|l| l.divides(m))).count()
}

#[test]
fn twisted_cubic_basis() {
    let r = ring(4);
    let g = ideal_basis(&r, &polys(&r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]), MonomialOrder::Grevlex, &GbOptions::default()).unwrap();
    assert_eq!(g.len(), 3);
    let mut leads: Vec<String> = g.polynomials().iter().map(|p| Polynomial::monomial(&r, p.leading_term().unwrap().0, 1).to_string()).collect();
    leads.sort();
    assert_eq!(leads, vec!["x1*x2", "x1^2", "x2^2"]);
}

#[test]
fn lex_elimination_of_parametrization() {
    // t*x - y, t*y - z with t first: eliminating t leaves y^2 - x z.
    let r = PolyRing::new(&["t", "x", "y", "z"], Field::default()).unwrap();
    let g = ideal_basis(&r, &polys(&r, &["t*x - y", "t*y - z"]), MonomialOrder::Elimination(1), &GbOptions::default().inhomogeneous()).unwrap();
    let e = eliminate(&g).unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!(e[0], r.parse("y^2 - x*z").unwrap());
}

#[test]
fn syzygies_vanish() {
    let r = ring(4);
    let g = ideal_basis(&r, &polys(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]), MonomialOrder::Grevlex, &GbOptions::default()).unwrap();
    let gens = g.polynomials();
    let syz = syzygies(&g);
    assert_eq!(syz.len(), 4);
    for s in syz {
        assert!(s.is_homogeneous());
        let mut acc = r.zero();
        for (a, b) in s.entries.iter().zip(&gens) {
            acc = acc.add(&a.mul(b).unwrap()).unwrap();
        }
        assert!(acc.is_zero());
    }
}

#[test]
fn degree_guard_trips() {
    let r = ring(3);
    let opts = GbOptions { degree_guard: 3, ..GbOptions::default() };
    let err = ideal_basis(&r, &polys(&r, &["x0^2*x1^2 - x2^4"]), MonomialOrder::Grevlex, &opts).unwrap_err();
    assert!(matches!(err, Error::DegreeGuard { .. }));
}

#[test]
fn rejects_inhomogeneous_by_default() {
    let r = ring(2);
    let err = ideal_basis(&r, &polys(&r, &["x0^2 - x1"]), MonomialOrder::Grevlex, &GbOptions::default()).unwrap_err();
    assert!(matches!(err, Error::Inhomogeneous));
    assert!(ideal_basis(&r, &polys(&r, &["x0^2 - x1"]), MonomialOrder::Grevlex, &GbOptions::default().inhomogeneous()).is_ok());
}

#[test]
fn module_kernel_of_koszul_map() {
    // Kernel of (x0, x1, x2): S^3(-1) -> S is generated by the three Koszul relations.
    let r = ring(3);
    let f = r.field();
    let order = ModuleOrder::ideal(MonomialOrder::Grevlex);
    let imgs: Vec<Vector> = (0..3).map(|i| VectorElement::from_poly(r.var(i)).to_vector(&order)).collect();
    let k = kernel(&imgs, &[], &[0], &[1, 1, 1], MonomialOrder::Grevlex, f, &GbOptions::default()).unwrap();
    assert_eq!(k.len(), 3);
    for v in &k {
        assert_eq!(v.degree(&ModuleOrder::top(MonomialOrder::Grevlex, vec![1, 1, 1])), Some(2));
    }
}

fn homogeneous_poly(n: usize, d: u32) -> impl Strategy<Value = Vec<(usize, i64)>> {
    let count = count_of_degree(n, d as i64) as usize;
    proptest::collection::vec((0..count, -3i64..4), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn hilbert_function_matches_linear_algebra(
        a in homogeneous_poly(3, 2),
        b in homogeneous_poly(3, 2),
        c in homogeneous_poly(3, 3),
    ) {
        let r = ring(3);
        let mk = |shape: &Vec<(usize, i64)>, d: u32| {
            let mons = Monomial::all_of_degree(3, d);
            Polynomial::from_terms(&r, shape.iter().map(|&(i, c)| (mons[i], r.field().from_i64(c))).collect())
        };
        let gens: Vec<Polynomial> = [mk(&a, 2), mk(&b, 2), mk(&c, 3)].into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let g = ideal_basis(&r, &gens, MonomialOrder::Grevlex, &GbOptions::default()).unwrap();
        let leads = g.lead_monomials(0);
        for d in 0..7 {
            let total = count_of_degree(3, d as i64) as usize;
            prop_assert_eq!(total - ideal_dim_in_degree(&r, &gens, d), standard_count(&leads, 3, d));
        }
        for p in &gens {
            prop_assert!(g.normal_form_poly(p).unwrap().is_zero());
        }
        // Reducedness: no GB term divisible by another lead.
        for (i, p) in g.polynomials().iter().enumerate() {
            for (j, l) in leads.iter().enumerate() {
                if i != j {
                    prop_assert!(p.terms().iter().all(|(m, _)| !l.divides(m)));
                }
            }
        }
    }
}
