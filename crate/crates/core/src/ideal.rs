//! Homogeneous ideals and their calculus.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{eliminate, ideal_basis, GbOptions, GroebnerBasis};
use crate::hilbert::HilbertSeries;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

/// A homogeneous ideal with a lazily computed grevlex Gröbner basis.
#[derive(Clone)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    opts: GbOptions,
    gb: Arc<OnceLock<Result<GroebnerBasis>>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.gens).finish()
    }
}

impl PartialEq for Ideal {
    /// Equality of reduced Gröbner bases. Panics if either basis fails.
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other).expect("Gröbner basis for ideal comparison")
    }
}

impl Ideal {
    /// Zero generators are dropped; the rest must be homogeneous.
    pub fn new(ring: &PolyRing, gens: Vec<Polynomial>) -> Result<Self> {
        Self::with_options(ring, gens, GbOptions::default())
    }

    pub fn with_options(ring: &PolyRing, gens: Vec<Polynomial>, opts: GbOptions) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous);
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: kept, opts, gb: Arc::new(OnceLock::new()) })
    }

    pub fn parse(ring: &PolyRing, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Self::new(ring, vec![]).expect("zero ideal")
    }

    pub fn unit(ring: &PolyRing) -> Self {
        Self::new(ring, vec![ring.one()]).expect("unit ideal")
    }

    /// The irrelevant ideal `(x_0, ..., x_n)`.
    pub fn maximal(ring: &PolyRing) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| ring.var(i)).collect()).expect("maximal ideal")
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn options(&self) -> GbOptions {
        self.opts
    }

    /// Same generators, other Gröbner options.
    pub fn set_options(&self, opts: GbOptions) -> Ideal {
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), opts, gb: Arc::new(OnceLock::new()) }
    }

    /// Reduced grevlex Gröbner basis, computed once.
    pub fn gb(&self) -> Result<&GroebnerBasis> {
        self.gb
            .get_or_init(|| ideal_basis(&self.ring, &self.gens, MonomialOrder::Grevlex, &self.opts))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Reduced Gröbner basis elements: the canonical generating set.
    pub fn canonical_generators(&self) -> Result<Vec<Polynomial>> {
        Ok(self.gb()?.polynomials())
    }

    pub fn lead_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self.gb()?.lead_monomials(0))
    }

    pub fn same_as(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        Ok(self.canonical_generators()? == other.canonical_generators()?)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.gb()?.normal_form_poly(f)?.is_zero())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.gb()?.normal_form_poly(f)
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.lead_monomials()?.iter().any(|m| m.is_one()))
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::with_options(&self.ring, g, self.opts)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b)?);
            }
        }
        Ideal::with_options(&self.ring, g, self.opts)
    }

    /// `I ∩ J` by eliminating `t` from `t I + (1 - t) J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let name = (0..)
            .map(|i| format!("_t{i}"))
            .find(|n| !self.ring.names().contains(n))
            .expect("fresh variable name");
        let big = self.ring.with_prefix_vars(&[&name])?;
        let t = big.var(0);
        let one_minus_t = big.one().sub(&t)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            gens.push(t.mul(&a.embed(&big, 1))?);
        }
        for b in &other.gens {
            gens.push(one_minus_t.mul(&b.embed(&big, 1))?);
        }
        let gb = ideal_basis(&big, &gens, MonomialOrder::Elimination(1), &self.opts.inhomogeneous())?;
        let kept = eliminate(&gb)?.iter().map(|p| p.project(&self.ring, 1)).collect();
        Ideal::with_options(&self.ring, kept, self.opts)
    }

    /// `I : (f)`, as `(I ∩ (f)) / f`.
    pub fn quotient_by(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let fi = Ideal::with_options(&self.ring, vec![f.clone()], self.opts)?;
        let inter = self.intersect(&fi)?;
        let gens = inter
            .gens
            .iter()
            .map(|g| g.div_exact(f).ok_or_else(|| Error::Precondition("intersection not divisible".into())))
            .collect::<Result<Vec<_>>>()?;
        Ideal::with_options(&self.ring, gens, self.opts)
    }

    /// `I : J`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut acc = Ideal::unit(&self.ring).set_options(self.opts);
        for g in &other.gens {
            let q = self.quotient_by(g)?;
            acc = if acc.is_unit()? { q } else { acc.intersect(&q)? };
        }
        Ideal::with_options(&self.ring, acc.canonical_generators()?, self.opts)
    }

    /// `I : J^∞`.
    pub fn saturate_by(&self, other: &Ideal) -> Result<Ideal> {
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(other)?;
            if next.is_subset_of(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Saturation with respect to the irrelevant ideal.
    pub fn saturate(&self) -> Result<Ideal> {
        self.saturate_by(&Ideal::maximal(&self.ring))
    }

    pub fn is_saturated(&self) -> Result<bool> {
        self.quotient(&Ideal::maximal(&self.ring))?.is_subset_of(self)
    }

    /// Hilbert series of `S/I`.
    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        Ok(HilbertSeries::of_monomial_quotient(&self.lead_monomials()?, self.ring.nvars()))
    }

    /// Krull dimension of `S/I`; `-1` for the unit ideal.
    pub fn krull_dim(&self) -> Result<i64> {
        Ok(self.hilbert_series()?.krull_dim())
    }

    pub fn codim(&self) -> Result<i64> {
        Ok(self.ring.nvars() as i64 - self.krull_dim()?)
    }

    /// Multiplicity of `S/I`.
    pub fn degree(&self) -> Result<i64> {
        Ok(self.hilbert_series()?.degree())
    }

    /// Whether `V(I)` and `V(J)` are disjoint in projective space.
    pub fn disjoint_from(&self, other: &Ideal) -> Result<bool> {
        Ok(self.sum(other)?.krull_dim()? <= 0)
    }
}
