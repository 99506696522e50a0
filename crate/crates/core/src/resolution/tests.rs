use super::*;
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use proptest::prelude::*;

fn ring(n: usize) -> PolyRing {
    PolyRing::standard(n, Field::default()).unwrap()
}

fn res(r: &PolyRing, g: &[&str]) -> (Ideal, FreeResolution) {
    let i = Ideal::parse(r, g).unwrap();
    let f = free_resolution(&i).unwrap();
    (i, f)
}

#[test]
fn koszul_complexes() {
    let r = ring(4);
    let (_, f) = res(&r, &["x0", "x1"]);
    assert_eq!(f.twists, vec![vec![0], vec![1, 1], vec![2]]);
    let (_, f) = res(&r, &["x0^2", "x1^3"]);
    let mut t1 = f.twists[1].clone();
    t1.sort();
    assert_eq!(t1, vec![2, 3]);
    assert_eq!(f.twists[2], vec![5]);
}

#[test]
fn skew_lines() {
    let r = ring(4);
    let (i, f) = res(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
    assert_eq!((f.rank(1), f.rank(2), f.rank(3)), (4, 4, 1));
    let b = f.betti();
    assert_eq!(b.get(1, 2), 4);
    assert_eq!(b.get(2, 3), 4);
    assert_eq!(b.get(3, 4), 1);
    let inv = ResolutionInvariants::of(&i, &f).unwrap();
    assert_eq!((inv.pd, inv.depth, inv.krull_dim, inv.cohen_macaulay), (3, 1, 2, false));
    assert_eq!((inv.nu, inv.alpha), (4, 2));
    assert!(b.matches_series(&i.hilbert_series().unwrap()));
    assert!(f.is_exact_in_window(0, inv.regularity + 2));
}

#[test]
fn complete_intersection_is_cm() {
    let r = ring(4);
    let (i, _) = res(&r, &["x0", "x1"]);
    assert_eq!(pd(&i).unwrap(), 2);
    assert_eq!(depth_of_quotient(&i).unwrap(), 2);
    assert!(is_cohen_macaulay(&i).unwrap());
    let z = Ideal::zero(&r);
    assert_eq!(pd(&z).unwrap(), 0);
    assert!(is_cohen_macaulay(&z).unwrap());
    assert!(matches!(nu(&z), Err(Error::ZeroIdeal)));
}

#[test]
fn generator_counts() {
    let r = ring(2);
    let (i, _) = res(&r, &["x0^2", "x0*x1", "x1^2"]);
    assert_eq!((nu(&i).unwrap(), alpha(&i).unwrap()), (3, 2));
    let r5 = ring(5);
    let (cl, f) = res(&r5, &["x0*x3", "x1*x3", "x2*x3", "x0*x4", "x1*x4", "x2*x4", "x0*x2 - x1^2"]);
    let inv = ResolutionInvariants::of(&cl, &f).unwrap();
    assert_eq!((inv.nu, inv.alpha), (7, 2));
}

#[test]
fn identity_summand_cancels() {
    // Pad the Koszul complex on (x0, x1) with a trivial S(-3) -> S(-3).
    let r = ring(3);
    let (_, mut f) = res(&r, &["x0", "x1"]);
    let base = f.clone();
    let mut phi1 = PolyMatrix::zeros(&r, 1, 3);
    phi1.entries[0][0] = r.var(0);
    phi1.entries[0][1] = r.var(1);
    let mut phi2 = PolyMatrix::zeros(&r, 3, 2);
    phi2.entries[0][0] = r.var(1);
    phi2.entries[1][0] = r.var(0).neg();
    phi2.entries[2][1] = r.one();
    f.twists = vec![vec![0], vec![1, 1, 3], vec![2, 3]];
    f.maps = vec![phi1, phi2];
    f.minimize();
    assert_eq!(f.twists, base.twists);
    assert!(f.is_exact_in_window(0, 4));
}

#[test]
fn betti_text_layout() {
    let r = ring(4);
    let (_, f) = res(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
    let t = f.betti().to_text();
    assert!(t.contains("total: 1 4 4 1"), "{t}");
    assert!(f.betti().to_csv().starts_with("index,degree,count\n0,0,1\n1,2,4"));
}

fn random_ideal() -> impl Strategy<Value = Vec<(Vec<u16>, Vec<u16>, i64)>> {
    proptest::collection::vec((proptest::collection::vec(0u16..3, 4), proptest::collection::vec(0u16..3, 4), 1i64..7), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn resolution_consistency(shape in random_ideal(), seed in 0u64..1000) {
        let r = ring(4);
        // Binomials a - c*b with both monomials lifted to a common degree.
        let mut gens = Vec::new();
        for (a, b, c) in &shape {
            let (ma, mb) = (Monomial::from_exponents(a), Monomial::from_exponents(b));
            let d = ma.degree().max(mb.degree()).max(1);
            let pad = |m: Monomial, k: usize| m.mul(&Monomial::from_exponents(&{
                let mut e = [0u16; 4];
                e[k] = (d - m.degree()) as u16;
                e
            }));
            let p = Polynomial::monomial(&r, pad(ma, 0), 1)
                .sub(&Polynomial::monomial(&r, pad(mb, 3), r.field().from_i64(*c))).unwrap();
            gens.push(p);
        }
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let f = free_resolution(&i).unwrap();
        let h = i.hilbert_series().unwrap();
        prop_assert!(f.betti().matches_series(&h));
        prop_assert!(f.length() <= 4);
        prop_assert!(f.maps.iter().all(|m| m.find_unit().is_none()));
        // Generator order does not change the minimal Betti numbers.
        let mut shuffled = gens;
        let n = shuffled.len();
        shuffled.rotate_left((seed as usize) % n);
        shuffled.reverse();
        let g = free_resolution(&Ideal::new(&r, shuffled).unwrap()).unwrap();
        prop_assert_eq!(f.betti(), g.betti());
        prop_assert!(f.is_exact_in_window(0, f.regularity() + 2));
    }
}
