//! Polynomial rings over prime fields and their elements.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    names: Vec<String>,
    field: Field,
}

/// `k[x_0, ..., x_n]` with the standard grading. Cheap to clone.
#[derive(Clone, Debug)]
pub struct PolyRing(Arc<RingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for PolyRing {}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S], field: Field) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, got: names.len() });
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidRing(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        Ok(PolyRing(Arc::new(RingData { names, field })))
    }

    /// `k[x0, ..., x{n-1}]`.
    pub fn standard(nvars: usize, field: Field) -> Result<Self> {
        let names: Vec<String> = (0..nvars).map(|i| format!("x{i}")).collect();
        Self::new(&names, field)
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    /// Same variable names over another prime field.
    pub fn with_field(&self, field: Field) -> Self {
        PolyRing(Arc::new(RingData { names: self.0.names.clone(), field }))
    }

    /// A copy of this ring with extra variables prepended (used for
    /// elimination tricks).
    pub fn with_prefix_vars(&self, prefix: &[&str]) -> Result<Self> {
        let mut names: Vec<String> = prefix.iter().map(|s| s.to_string()).collect();
        names.extend(self.0.names.iter().cloned());
        Self::new(&names, self.0.field)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial { ring: self.clone(), terms: vec![(Monomial::var(i), 1)] }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        let c = self.field().from_i64(c);
        let terms = if c == 0 { vec![] } else { vec![(Monomial::one(), c)] };
        Polynomial { ring: self.clone(), terms }
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        crate::parse::parse_polynomial(self, s)
    }
}

/// A polynomial in canonical form: terms strictly decreasing in grevlex,
/// no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, u32)>,
}

pub(crate) const AMBIENT: MonomialOrder = MonomialOrder::Grevlex;

impl Polynomial {
    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &PolyRing, mut terms: Vec<(Monomial, u32)>) -> Polynomial {
        let f = ring.field();
        terms.sort_by(|a, b| AMBIENT.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = f.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn monomial(ring: &PolyRing, m: Monomial, c: u32) -> Polynomial {
        Polynomial::from_terms(ring, vec![(m, c)])
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.0.degree() == t.0.degree()),
        }
    }

    pub fn leading_term(&self) -> Option<(Monomial, u32)> {
        self.terms.first().copied()
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let f = self.ring.field();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                AMBIENT.cmp(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { f.neg(b[j].1) } else { b[j].1 };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { f.sub(a[i].1, b[j].1) } else { f.add(a[i].1, b[j].1) };
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let f = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), f.mul(*ca, *cb)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, c)| (m, f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        if c == 0 {
            return self.ring.zero();
        }
        let f = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, d)| (m, f.mul(c, d))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(t, c)| (t.mul(m), c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, c)) => self.scale(self.ring.field().inv(c)),
        }
    }

    /// Moves the polynomial into another ring with the same number of
    /// variables (or more, with `offset` shifting variable indices).
    pub fn embed(&self, ring: &PolyRing, offset: usize) -> Polynomial {
        assert!(ring.nvars() >= self.ring.nvars() + offset);
        let terms = self
            .terms
            .iter()
            .map(|&(m, c)| {
                let mut e = [0u16; MAX_VARS];
                for i in 0..self.ring.nvars() {
                    e[i + offset] = m.exp(i);
                }
                (Monomial::from_exponents(&e[..ring.nvars()]), c)
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Inverse of [`embed`](Self::embed): drops the first `offset`
    /// variables, which must not occur.
    pub fn project(&self, ring: &PolyRing, offset: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|&(m, c)| {
                debug_assert!(!m.involves_any(0..offset));
                let e: Vec<u16> = (0..ring.nvars()).map(|i| m.exp(i + offset)).collect();
                (Monomial::from_exponents(&e), c)
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Reduces coefficients into another prime field: valid when the text
    /// form has small integer coefficients (corpus files).
    pub fn reinterpret(&self, ring: &PolyRing) -> Polynomial {
        let f = self.ring.field();
        let g = ring.field();
        let terms = self.terms.iter().map(|&(m, c)| (m, g.from_i64(f.to_i64(c)))).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Substitutes polynomials for the variables.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch { expected: self.ring.nvars(), got: images.len() });
        }
        let target = images[0].ring().clone();
        let mut acc = target.zero();
        for &(m, c) in &self.terms {
            let mut t = target.constant(self.ring.field().to_i64(c));
            for (i, img) in images.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t = t.mul(img)?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// Exact division by a polynomial known to divide `self`; `None` if it
    /// does not divide.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let f = self.ring.field();
        let (lm, lc) = d.leading_term()?;
        let inv = f.inv(lc);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            let q = m.div(&lm)?;
            let qc = f.mul(c, inv);
            quot.push((q, qc));
            rem = rem.merge(&d.mul_monomial(&q).scale(qc), true);
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let f = self.ring.field();
        let names = self.ring.names();
        for (k, &(m, c)) in self.terms.iter().enumerate() {
            let c = f.to_i64(c);
            let (neg, a) = (c < 0, c.unsigned_abs());
            if k == 0 {
                if neg {
                    write!(out, "-")?;
                }
            } else {
                write!(out, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if a != 1 || m.is_one() {
                parts.push(a.to_string());
            }
            for (i, name) in names.iter().enumerate() {
                match m.exp(i) {
                    0 => {}
                    1 => parts.push(name.clone()),
                    e => parts.push(format!("{name}^{e}")),
                }
            }
            write!(out, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
