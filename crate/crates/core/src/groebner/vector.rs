use std::cmp::Ordering;

use super::order::{ModuleOrder, Term};
use crate::field::Field;
use crate::monomial::Monomial;

/// Internal sparse module element: terms strictly decreasing in the order
/// it was built under.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    pub terms: Vec<(Term, u32)>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    /// Sorts and combines arbitrary terms.
    pub fn from_terms(mut terms: Vec<(Term, u32)>, order: &ModuleOrder, f: Field) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Term, u32)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == t => last.1 = f.add(last.1, c),
                _ => out.push((t, c)),
            }
        }
        out.retain(|x| x.1 != 0);
        Vector { terms: out }
    }

    pub fn resort(&self, order: &ModuleOrder, f: Field) -> Self {
        Self::from_terms(self.terms.clone(), order, f)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<(Term, u32)> {
        self.terms.first().copied()
    }

    pub fn lead_term(&self) -> Term {
        self.terms[0].0
    }

    /// Common twisted degree, `None` if zero or inhomogeneous.
    pub fn degree(&self, order: &ModuleOrder) -> Option<i32> {
        let d = order.degree_of(&self.terms.first()?.0);
        self.terms.iter().all(|(t, _)| order.degree_of(t) == d).then_some(d)
    }

    pub fn is_homogeneous(&self, order: &ModuleOrder) -> bool {
        self.is_zero() || self.degree(order).is_some()
    }

    pub fn monic(mut self, f: Field) -> Self {
        if let Some(&(_, c)) = self.terms.first() {
            if c != 1 {
                let s = f.inv(c);
                for t in &mut self.terms {
                    t.1 = f.mul(t.1, s);
                }
            }
        }
        self
    }

    pub fn scale(&self, c: u32, f: Field) -> Self {
        if c == 0 {
            return Vector::zero();
        }
        Vector { terms: self.terms.iter().map(|&(t, d)| (t, f.mul(c, d))).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Vector { terms: self.terms.iter().map(|&(t, c)| (t.mul(m), c)).collect() }
    }

    /// `self - c * m * other`, both sorted under `order`.
    pub fn sub_mul(&self, c: u32, m: &Monomial, other: &Vector, order: &ModuleOrder, f: Field) -> Vector {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let bt = (j < b.len()).then(|| b[j].0.mul(m));
            let ord = match (i < a.len(), bt) {
                (false, _) => Ordering::Less,
                (true, None) => Ordering::Greater,
                (true, Some(ref t)) => order.cmp(&a[i].0, t),
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bt.unwrap(), f.neg(f.mul(c, b[j].1))));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.sub_mul(a[i].1, c, b[j].1);
                    if v != 0 {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Vector { terms: out }
    }

    pub fn add(&self, other: &Vector, order: &ModuleOrder, f: Field) -> Vector {
        self.sub_mul(f.neg(1), &Monomial::one(), other, order, f)
    }

    /// Shifts all component indices by `offset`.
    pub fn shift_components(&self, offset: u32) -> Vector {
        Vector { terms: self.terms.iter().map(|&(t, c)| (Term::new(t.comp + offset, t.mon), c)).collect() }
    }

    /// Keeps only components in `range`, re-indexed from its start.
    pub fn restrict(&self, range: std::ops::Range<u32>) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| range.contains(&t.comp))
                .map(|&(t, c)| (Term::new(t.comp - range.start, t.mon), c))
                .collect(),
        }
    }

    pub fn max_component(&self) -> Option<u32> {
        self.terms.iter().map(|(t, _)| t.comp).max()
    }
}
