//! Seeded random instances for fuzz campaigns.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::field::Field;
use crate::ideal::Ideal;
use crate::linalg::{Mat, SparseVec};
use crate::linear_change::{apply_change, LinearChange};
use crate::module::FiniteGradedModule;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::presentation::present_quotient;

pub const SKEW_LINES: [&str; 4] = ["x0*x2", "x0*x3", "x1*x2", "x1*x3"];
pub const TWISTED_CUBIC: [&str; 3] = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"];
pub const RATIONAL_QUARTIC: [&str; 4] = ["x1*x2 - x0*x3", "x0*x2^2 - x1^2*x3", "x1^3 - x0^2*x2", "x2^3 - x1*x3^2"];
pub const CONIC_LINE: [&str; 7] = ["x0*x3", "x1*x3", "x2*x3", "x0*x4", "x1*x4", "x2*x4", "x0*x2 - x1^2"];

/// Generator for instance `id` of a campaign.
pub fn instance_rng(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

pub fn ring(nvars: usize, field: Field) -> PolyRing {
    PolyRing::standard(nvars, field).expect("standard ring")
}

/// One 32-bit draw reduced mod `p`, so streams line up across primes.
pub fn coefficient(p: u32, rng: &mut ChaCha8Rng) -> u32 {
    rng.gen::<u32>() % p
}

/// A form of degree `d` with every coefficient drawn at random.
pub fn random_form(r: &PolyRing, d: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let p = r.field().characteristic();
    let terms = Monomial::all_of_degree(r.nvars(), d).into_iter().map(|m| (m, coefficient(p, rng))).collect();
    Polynomial::from_terms(r, terms)
}

/// A form of degree `d` with few terms and small coefficients.
pub fn sparse_form(r: &PolyRing, d: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let all = Monomial::all_of_degree(r.nvars(), d);
    let k = rng.gen_range(1..=3.min(all.len()));
    let terms = (0..k).map(|_| (all[rng.gen_range(0..all.len())], r.field().from_i64(rng.gen_range(-3..=3)))).collect();
    Polynomial::from_terms(r, terms)
}

pub fn random_change(r: &PolyRing, rng: &mut ChaCha8Rng) -> LinearChange {
    let n = r.nvars();
    let p = r.field().characteristic();
    loop {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, coefficient(p, rng));
            }
        }
        if let Ok(c) = LinearChange::from_matrix(r, m) {
            return c;
        }
    }
}

/// The ideal of the image of `V(gens)` under a random coordinate change.
pub fn moved(r: &PolyRing, gens: &[&str], rng: &mut ChaCha8Rng) -> Result<Ideal> {
    let c = random_change(r, rng);
    let base = Ideal::parse(r, gens)?;
    let g = base.generators().iter().map(|f| apply_change(f, &c)).collect::<Result<Vec<_>>>()?;
    Ideal::new(r, g)
}

/// Complete intersection of general forms of the given degrees.
pub fn complete_intersection(r: &PolyRing, degrees: &[u32], rng: &mut ChaCha8Rng) -> Result<Ideal> {
    Ideal::new(r, degrees.iter().map(|&d| random_form(r, d, rng)).collect())
}

/// A general linear space of codimension `c`.
pub fn linear_space(r: &PolyRing, c: usize, rng: &mut ChaCha8Rng) -> Result<Ideal> {
    complete_intersection(r, &vec![1; c], rng)
}

/// Random homogeneous ideal in two variables.
pub fn binary_ideal(field: Field, rng: &mut ChaCha8Rng) -> Result<Ideal> {
    let r = ring(2, field);
    let k = rng.gen_range(1..=4);
    let mut gens = Vec::new();
    for _ in 0..k {
        let d = rng.gen_range(1..=5);
        let f = if rng.gen_bool(0.5) { sparse_form(&r, d, rng) } else { random_form(&r, d, rng) };
        if !f.is_zero() {
            gens.push(f);
        }
    }
    if gens.is_empty() {
        gens.push(r.var(0));
    }
    Ideal::new(&r, gens)
}

/// Pairs of disjoint subschemes. Even families satisfy the dimension and
/// Cohen-Macaulay conditions, odd ones fail one of them.
pub fn serre_pair(field: Field, rng: &mut ChaCha8Rng, family: usize) -> Result<(Ideal, Ideal)> {
    let p3 = ring(4, field);
    let p4 = ring(5, field);
    let deg = |rng: &mut ChaCha8Rng| rng.gen_range(1..=2);
    Ok(match family % 8 {
        0 => {
            let (a, b) = (deg(rng), deg(rng));
            let (c, d) = (deg(rng), deg(rng));
            (complete_intersection(&p3, &[a, b], rng)?, complete_intersection(&p3, &[c, d], rng)?)
        }
        1 => (moved(&p3, &SKEW_LINES, rng)?, linear_space(&p3, 2, rng)?),
        2 => {
            let d = rng.gen_range(1..=3);
            (complete_intersection(&p3, &[d], rng)?, linear_space(&p3, 3, rng)?)
        }
        3 => (linear_space(&p3, 3, rng)?, linear_space(&p3, 2 + rng.gen_range(0..=1), rng)?),
        4 => {
            let k = rng.gen_range(2..=3);
            let vars: Vec<String> = (0..5).map(|v| format!("x{v}")).collect();
            let (a, b) = vars.split_at(k);
            let a: Vec<&str> = a.iter().map(|s| s.as_str()).collect();
            let b: Vec<&str> = b.iter().map(|s| s.as_str()).collect();
            (Ideal::parse(&p4, &a)?, Ideal::parse(&p4, &b)?)
        }
        5 => (moved(&p3, &TWISTED_CUBIC, rng)?, moved(&p3, &SKEW_LINES, rng)?),
        6 => (moved(&p3, &TWISTED_CUBIC, rng)?, linear_space(&p3, 2, rng)?),
        _ => (Ideal::parse(&p4, &["x0", "x1", "x2", "x3"])?, Ideal::parse(&p4, &["x3", "x4"])?),
    })
}

/// Disjoint pairs in at most four variables with generators of degree at
/// most three, mixing points, curves and nonreduced structures.
pub fn small_disjoint_pair(field: Field, rng: &mut ChaCha8Rng) -> Result<(Ideal, Ideal)> {
    loop {
        let nv = rng.gen_range(3..=4);
        let r = ring(nv, field);
        let pick = |rng: &mut ChaCha8Rng| -> Result<Ideal> {
            match rng.gen_range(0..5) {
                0 => linear_space(&r, nv - 1, rng),
                1 => {
                    let c = rng.gen_range(1..nv);
                    let degs: Vec<u32> = (0..c).map(|_| rng.gen_range(1..=3)).collect();
                    complete_intersection(&r, &degs, rng)
                }
                2 if nv == 4 => moved(&r, &SKEW_LINES, rng),
                3 => {
                    // A fat point: (l0^2, l1, ...) for general linear forms.
                    let (forms, _) = crate::linear_change::random_linear_forms(&r, nv - 1, rng.gen())?;
                    let mut g = forms.clone();
                    g[0] = forms[0].pow(2);
                    Ideal::new(&r, g)
                }
                _ => {
                    let a = linear_space(&r, nv - 1, rng)?;
                    let b = linear_space(&r, nv - 1, rng)?;
                    a.intersect(&b)
                }
            }
        };
        let i = pick(rng)?;
        let j = pick(rng)?;
        if i.disjoint_from(&j)? && !i.is_unit()? && !j.is_unit()? {
            return Ok((i, j));
        }
    }
}

/// A subscheme from the curated families, moved by a random change of
/// coordinates. `nvars` restricts to one ambient space when given.
pub fn subscheme(field: Field, rng: &mut ChaCha8Rng, nvars: Option<usize>) -> Result<Ideal> {
    let p3 = ring(4, field);
    let p4 = ring(5, field);
    let choices: &[usize] = match nvars {
        Some(4) => &[0, 1, 2, 3, 4, 5],
        Some(5) => &[6, 7],
        _ => &[0, 1, 2, 3, 4, 5, 6, 7],
    };
    match choices[rng.gen_range(0..choices.len())] {
        0 => moved(&p3, &SKEW_LINES, rng),
        1 => moved(&p3, &TWISTED_CUBIC, rng),
        2 => moved(&p3, &RATIONAL_QUARTIC, rng),
        3 => {
            let (a, b) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            complete_intersection(&p3, &[a, b], rng)
        }
        4 => {
            let a = linear_space(&p3, 3, rng)?;
            let b = linear_space(&p3, 3, rng)?;
            a.intersect(&b)
        }
        5 => moved(&p3, &["x0", "x1"], rng)?.intersect(&linear_space(&p3, 3, rng)?),
        6 => moved(&p4, &CONIC_LINE, rng),
        _ => {
            let (a, b) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
            complete_intersection(&p4, &[a, b], rng)
        }
    }
}

/// A finite-length quotient `S/(x_0^a_0, .., x_r^a_r, f_1, ..)` in two or
/// three variables, with up to two extra random forms.
pub fn artinian_module(field: Field, rng: &mut ChaCha8Rng) -> Result<(PolyRing, FiniteGradedModule)> {
    let r = ring(rng.gen_range(2..=3), field);
    let mut gens: Vec<Polynomial> = (0..r.nvars()).map(|v| r.var(v).pow(rng.gen_range(2..=4))).collect();
    for _ in 0..rng.gen_range(0..=2) {
        let d = rng.gen_range(2..=3);
        let f = if rng.gen_bool(0.5) { sparse_form(&r, d, rng) } else { random_form(&r, d, rng) };
        gens.push(f);
    }
    let m = present_quotient(&Ideal::new(&r, gens)?)?.to_finite_exact()?;
    Ok((r, m))
}

/// Up to three random homogeneous elements of `m`, as (degree, vector).
pub fn random_elements(m: &FiniteGradedModule, rng: &mut ChaCha8Rng) -> Vec<(i32, SparseVec)> {
    let p = m.field.characteristic();
    let degrees: Vec<i32> = (m.lo..=m.hi()).filter(|&d| m.dim(d).unwrap_or(0) > 0).collect();
    if degrees.is_empty() {
        return Vec::new();
    }
    (0..rng.gen_range(1..=3))
        .map(|_| {
            let d = degrees[rng.gen_range(0..degrees.len())];
            let n = m.dim(d).unwrap();
            let mut v = SparseVec::new();
            for k in 0..n as u32 {
                let c = coefficient(p, rng);
                if c != 0 && rng.gen_bool(0.7) {
                    v.push((k, c));
                }
            }
            (d, v)
        })
        .filter(|(_, v)| !v.is_empty())
        .collect()
}
