//! Hilbert series of monomial ideals and of graded modules presented by a
//! Gröbner basis.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::monomial::{binomial, Monomial, MAX_VARS};

/// `numerator(t) / (1 - t)^nvars`, with a Laurent numerator to allow
/// negatively twisted modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    /// Exponent to coefficient; no zero entries.
    pub numerator: BTreeMap<i32, i64>,
    pub nvars: usize,
}

fn add_into(acc: &mut BTreeMap<i32, i64>, other: &BTreeMap<i32, i64>, shift: i32, sign: i64) {
    for (&e, &c) in other {
        let v = acc.entry(e + shift).or_insert(0);
        *v += sign * c;
        if *v == 0 {
            acc.remove(&(e + shift));
        }
    }
}

impl HilbertSeries {
    pub fn zero(nvars: usize) -> Self {
        HilbertSeries { numerator: BTreeMap::new(), nvars }
    }

    /// Series of `S/I` for the monomial ideal generated by `gens`.
    pub fn of_monomial_quotient(gens: &[Monomial], nvars: usize) -> Self {
        HilbertSeries { numerator: numerator(&minimalize(gens.to_vec())), nvars }
    }

    /// Series of `⊕ S(-twists[i]) / U` where `leads[i]` generate the initial
    /// submodule in component `i`.
    pub fn of_module(twists: &[i32], leads: &[Vec<Monomial>], nvars: usize) -> Self {
        let mut acc = BTreeMap::new();
        for (a, l) in twists.iter().zip(leads) {
            add_into(&mut acc, &numerator(&minimalize(l.clone())), *a, 1);
        }
        HilbertSeries { numerator: acc, nvars }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// `dim_k M_d`.
    pub fn dim(&self, d: i64) -> u64 {
        let n = self.nvars as u64;
        let mut s: i64 = 0;
        for (&e, &c) in &self.numerator {
            let k = d - e as i64;
            if k < 0 {
                continue;
            }
            let m = if n == 0 { (k == 0) as u64 } else { binomial(k as u64 + n - 1, n - 1) };
            s += c * m as i64;
        }
        debug_assert!(s >= 0);
        s.max(0) as u64
    }

    /// Numerator after cancelling all factors of `1 - t`, and the number
    /// cancelled.
    pub fn reduced(&self) -> (BTreeMap<i32, i64>, usize) {
        let mut num = self.numerator.clone();
        let mut k = 0;
        while !num.is_empty() && num.values().sum::<i64>() == 0 && k < self.nvars {
            // Synthetic division by (1 - t): q_e = sum of p_f for f <= e.
            let lo = *num.keys().next().unwrap();
            let hi = *num.keys().last().unwrap();
            let mut q = BTreeMap::new();
            let mut run = 0;
            for e in lo..hi {
                run += num.get(&e).copied().unwrap_or(0);
                if run != 0 {
                    q.insert(e, run);
                }
            }
            num = q;
            k += 1;
        }
        (num, k)
    }

    /// Krull dimension of the module; `-1` for the zero module.
    pub fn krull_dim(&self) -> i64 {
        if self.is_zero() {
            return -1;
        }
        let (_, k) = self.reduced();
        self.nvars as i64 - k as i64
    }

    /// Multiplicity: the reduced numerator evaluated at 1.
    pub fn degree(&self) -> i64 {
        self.reduced().0.values().sum()
    }

    /// Largest degree in which the module can be nonzero, when finite.
    pub fn top_degree(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let (num, k) = self.reduced();
        (k == self.nvars).then(|| *num.keys().last().unwrap() as i64)
    }

    /// Smallest degree with a possibly nonzero piece.
    pub fn bottom_degree(&self) -> Option<i64> {
        self.numerator.keys().next().map(|&e| e as i64)
    }
}

/// Minimal generators, sorted by degree then exponents.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), m.key()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N` with `HS(S/I) = N / (1-t)^n`, by pivoting on variable powers:
/// `N(I) = N(I + (p)) + t^{deg p} N(I : p)`.
fn numerator(gens: &[Monomial]) -> BTreeMap<i32, i64> {
    let mut out = BTreeMap::new();
    if gens.iter().any(|m| m.is_one()) {
        return out;
    }
    // Pairwise coprime generators form a regular sequence.
    let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        out.insert(0, 1);
        for g in gens {
            let mut next = out.clone();
            add_into(&mut next, &out, g.degree() as i32, -1);
            out = next;
        }
        return out;
    }
    let mut counts = [0usize; MAX_VARS];
    for g in gens {
        for (v, c) in counts.iter_mut().enumerate() {
            if g.exp(v) > 0 {
                *c += 1;
            }
        }
    }
    let var = (0..MAX_VARS).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let e = gens.iter().filter(|g| g.exp(var) > 0).map(|g| g.exp(var)).min().unwrap();
    let mut pe = [0u16; MAX_VARS];
    pe[var] = e;
    let p = Monomial::from_exponents(&pe);

    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !p.divides(g)).copied().collect();
    plus.push(p);
    let colon: Vec<Monomial> = gens.iter().map(|g| p.gcd(g).quotient_of(g)).collect();

    let a = numerator(&minimalize(plus));
    let b = numerator(&minimalize(colon));
    add_into(&mut out, &a, 0, 1);
    add_into(&mut out, &b, e as i32, 1);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::count_of_degree;
    use proptest::prelude::*;

    fn mons(v: &[&[u16]]) -> Vec<Monomial> {
        v.iter().map(|e| Monomial::from_exponents(e)).collect()
    }

    #[test]
    fn zero_ideal_and_maximal_ideal() {
        let h = HilbertSeries::of_monomial_quotient(&[], 4);
        assert_eq!(h.krull_dim(), 4);
        assert_eq!(h.dim(3), 20);
        let m = HilbertSeries::of_monomial_quotient(&mons(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3);
        assert_eq!(m.krull_dim(), 0);
        assert_eq!(m.top_degree(), Some(0));
    }

    #[test]
    fn skew_lines_initial_ideal() {
        let h = HilbertSeries::of_monomial_quotient(&mons(&[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]), 4);
        assert_eq!(h.krull_dim(), 2);
        assert_eq!(h.degree(), 2);
        for t in 1..10 {
            assert_eq!(h.dim(t), 2 * t as u64 + 2);
        }
    }

    #[test]
    fn twisted_module() {
        // S(1) ⊕ S/(x0) in two variables.
        let h = HilbertSeries::of_module(&[-1, 0], &[vec![], mons(&[&[1, 0]])], 2);
        assert_eq!(h.dim(-1), 1);
        assert_eq!(h.dim(0), 3);
        assert_eq!(h.krull_dim(), 2);
    }

    proptest! {
        #[test]
        fn matches_direct_count(raw in proptest::collection::vec(proptest::collection::vec(0u16..3, 4), 1..6)) {
            let gens: Vec<Monomial> = raw.iter().map(|e| Monomial::from_exponents(e)).collect();
            let h = HilbertSeries::of_monomial_quotient(&gens, 4);
            for d in 0..=10u32 {
                let direct = Monomial::all_of_degree(4, d).iter().filter(|m| !gens.iter().any(|g| g.divides(m))).count();
                prop_assert_eq!(h.dim(d as i64), direct as u64);
            }
            prop_assert!(h.dim(0) <= count_of_degree(4, 0));
        }
    }
}
