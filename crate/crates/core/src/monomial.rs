//! Dense exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

pub const MAX_VARS: usize = 16;

/// A monomial `x^a` stored as a dense exponent vector.
///
/// Entries past the ring's variable count are always zero, so comparisons
/// never need to know the ring size.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Default for Monomial {
    fn default() -> Self {
        Monomial::one()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], deg: 0 }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Monomial::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = e;
            m.deg += e as u32;
        }
        m
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    /// Raw exponent array, usable as a deterministic sort key.
    pub fn key(&self) -> [u16; MAX_VARS] {
        self.exps
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] += other.exps[i];
        }
        r.deg += other.deg;
        r
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut r = *self;
        r.exps[i] += 1;
        r.deg += 1;
        r
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut r = *other;
        for i in 0..MAX_VARS {
            r.exps[i] -= self.exps[i];
        }
        r.deg -= self.deg;
        r
    }

    pub fn div(&self, d: &Monomial) -> Option<Monomial> {
        d.divides(self).then(|| d.quotient_of(self))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = Monomial::one();
        for i in 0..MAX_VARS {
            r.exps[i] = self.exps[i].max(other.exps[i]);
            r.deg += r.exps[i] as u32;
        }
        r
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut r = Monomial::one();
        for i in 0..MAX_VARS {
            r.exps[i] = self.exps[i].min(other.exps[i]);
            r.deg += r.exps[i] as u32;
        }
        r
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Degree restricted to the first `k` variables.
    pub fn block_degree(&self, k: usize) -> u32 {
        self.exps[..k].iter().map(|&e| e as u32).sum()
    }

    pub fn involves_any(&self, vars: std::ops::Range<usize>) -> bool {
        vars.into_iter().any(|i| self.exps[i] != 0)
    }

    /// All monomials of total degree `d` in `nvars` variables, in
    /// decreasing lex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = Monomial::one();
        fn rec(i: usize, nvars: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
            if i + 1 == nvars {
                cur.exps[i] = left as u16;
                cur.deg += left;
                out.push(*cur);
                cur.deg -= left;
                cur.exps[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur.exps[i] = e as u16;
                cur.deg += e;
                rec(i + 1, nvars, left - e, cur, out);
                cur.deg -= e;
            }
            cur.exps[i] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(cur);
            }
            return out;
        }
        rec(0, nvars, d, &mut cur, &mut out);
        out
    }
}

/// Number of monomials of degree `d` in `n` variables.
pub fn count_of_degree(n: usize, d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    if n == 0 {
        return (d == 0) as u64;
    }
    binomial((d as u64) + n as u64 - 1, n as u64 - 1)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Orders on monomials of the polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Block order eliminating the first `k` variables: grevlex on the block,
    /// then grevlex on the remaining variables.
    Elimination(usize),
}

fn grevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da: u32 = a.exps[lo..hi].iter().map(|&e| e as u32).sum();
    let db: u32 = b.exps[lo..hi].iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (lo..hi).rev() {
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => {
                match a.deg.cmp(&b.deg) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for i in (0..MAX_VARS).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => {
                for i in 0..MAX_VARS {
                    if a.exps[i] != b.exps[i] {
                        return a.exps[i].cmp(&b.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination(k) => match grevlex_range(a, b, 0, *k) {
                Ordering::Equal => grevlex_range(a, b, *k, MAX_VARS),
                o => o,
            },
        }
    }

    /// Number of leading variables this order eliminates.
    pub fn eliminated(&self) -> usize {
        match self {
            MonomialOrder::Elimination(k) => *k,
            _ => 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..4, 4).prop_map(|v| Monomial::from_exponents(&v))
    }

    fn orders() -> [MonomialOrder; 4] {
        [
            MonomialOrder::Grevlex,
            MonomialOrder::Lex,
            MonomialOrder::Elimination(1),
            MonomialOrder::Elimination(2),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2500))]
        #[test]
        fn order_laws(a in mono(), b in mono(), c in mono()) {
            for o in orders() {
                // multiplicativity
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
                // 1 is minimal
                prop_assert_ne!(o.cmp(&Monomial::one(), &a), Ordering::Greater);
                // transitivity
                if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
                }
                // totality: equal only for equal monomials
                prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            }
        }
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::Elimination(1);
        let t = Monomial::var(0);
        let big = Monomial::from_exponents(&[0, 9, 9, 9]);
        assert_eq!(o.cmp(&t, &big), Ordering::Greater);
    }

    #[test]
    fn grevlex_ties() {
        let o = MonomialOrder::Grevlex;
        // x0*x2 < x1^2 in grevlex
        let a = Monomial::from_exponents(&[1, 0, 1]);
        let b = Monomial::from_exponents(&[0, 2, 0]);
        assert_eq!(o.cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn degree_enumeration() {
        for n in 1..5 {
            for d in 0..6 {
                assert_eq!(Monomial::all_of_degree(n, d).len() as u64, count_of_degree(n, d as i64));
            }
        }
    }
}
