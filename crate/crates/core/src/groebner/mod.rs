//! Buchberger's algorithm for ideals and submodules of graded free modules.
//!
//! The engine works on [`Vector`]s: sparse lists of `(Term, coeff)` sorted
//! under a [`ModuleOrder`]. [`VectorElement`] is the polynomial-facing view.

mod buchberger;
mod order;
mod reduce;
mod syzygy;
mod vector;

pub use buchberger::{groebner, interreduce, GbOptions};
pub use order::{ModuleOrder, OrderKind, Term};
pub use reduce::{normal_form as reduce_vector, top_reduce_tracking, Reducers};
pub use syzygy::{kernel, schreyer_sort, schreyer_syzygies};
pub use vector::Vector;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

/// An element of `⊕ S(-twists[i])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorElement {
    pub entries: Vec<Polynomial>,
    pub twists: Vec<i32>,
}

impl VectorElement {
    pub fn new(entries: Vec<Polynomial>, twists: Vec<i32>) -> Result<Self> {
        if entries.len() != twists.len() {
            return Err(Error::DimensionMismatch { expected: twists.len(), got: entries.len() });
        }
        if let Some(first) = entries.first() {
            if entries.iter().any(|e| e.ring() != first.ring()) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(VectorElement { entries, twists })
    }

    /// Ideal element as a rank-one vector with twist zero.
    pub fn from_poly(f: Polynomial) -> Self {
        VectorElement { entries: vec![f], twists: vec![0] }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Twisted degree if homogeneous and nonzero.
    pub fn degree(&self) -> Option<i32> {
        let mut d = None;
        for (e, &t) in self.entries.iter().zip(&self.twists) {
            for (m, _) in e.terms() {
                let x = m.degree() as i32 + t;
                match d {
                    None => d = Some(x),
                    Some(y) if y != x => return None,
                    _ => {}
                }
            }
        }
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn to_vector(&self, order: &ModuleOrder) -> Vector {
        let field = self.entries.first().map(|e| e.ring().field()).unwrap_or_default();
        let terms = self
            .entries
            .iter()
            .enumerate()
            .flat_map(|(i, e)| e.terms().iter().map(move |&(m, c)| (Term::new(i as u32, m), c)))
            .collect();
        Vector::from_terms(terms, order, field)
    }

    pub fn from_vector(ring: &PolyRing, v: &Vector, twists: &[i32]) -> Self {
        let mut parts: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); twists.len()];
        for &(t, c) in &v.terms {
            parts[t.comp as usize].push((t.mon, c));
        }
        VectorElement {
            entries: parts.into_iter().map(|p| Polynomial::from_terms(ring, p)).collect(),
            twists: twists.to_vec(),
        }
    }
}

/// A Gröbner basis of a submodule of a graded free module over `ring`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: PolyRing,
    order: ModuleOrder,
    elems: Vec<Vector>,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wraps vectors already known to form a Gröbner basis under `order`.
    pub fn from_parts(ring: PolyRing, order: ModuleOrder, elems: Vec<Vector>, reduced: bool) -> Self {
        GroebnerBasis { ring, order, elems, reduced }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn monomial_order(&self) -> MonomialOrder {
        self.order.monomial_order()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn generators(&self) -> Vec<VectorElement> {
        self.elems.iter().map(|v| VectorElement::from_vector(&self.ring, v, self.order.twists())).collect()
    }

    /// First entries, for the ideal case.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators().into_iter().map(|mut g| g.entries.swap_remove(0)).collect()
    }

    pub fn lead_terms(&self) -> Vec<Term> {
        self.elems.iter().map(|v| v.lead_term()).collect()
    }

    /// Lead monomials of the elements living in component `comp`.
    pub fn lead_monomials(&self, comp: u32) -> Vec<Monomial> {
        self.elems.iter().map(|v| v.lead_term()).filter(|t| t.comp == comp).map(|t| t.mon).collect()
    }

    pub fn reduce(&self, v: &Vector) -> Vector {
        reduce::normal_form(v, &Reducers::new(&self.elems), &self.order, self.ring.field())
    }

    pub fn normal_form(&self, f: &VectorElement) -> Result<VectorElement> {
        self.check(f)?;
        let r = self.reduce(&f.to_vector(&self.order));
        Ok(VectorElement::from_vector(&self.ring, &r, self.order.twists()))
    }

    pub fn normal_form_poly(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(self.normal_form(&VectorElement::from_poly(f.clone()))?.entries.swap_remove(0))
    }

    pub fn contains(&self, f: &VectorElement) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    fn check(&self, f: &VectorElement) -> Result<()> {
        if f.twists.as_slice() != self.order.twists() {
            return Err(Error::DimensionMismatch { expected: self.order.rank(), got: f.rank() });
        }
        if f.entries.iter().any(|e| e.ring() != &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens` under the
/// term-over-position extension of `mono`.
pub fn buchberger(ring: &PolyRing, gens: &[VectorElement], mono: MonomialOrder) -> Result<GroebnerBasis> {
    let twists = match gens.first() {
        Some(g) => g.twists.clone(),
        None => vec![0],
    };
    let order = ModuleOrder::top(mono, twists);
    buchberger_with(ring, gens, order, &GbOptions::default())
}

pub fn buchberger_with(
    ring: &PolyRing,
    gens: &[VectorElement],
    order: ModuleOrder,
    opts: &GbOptions,
) -> Result<GroebnerBasis> {
    for g in gens {
        if g.twists.as_slice() != order.twists() {
            return Err(Error::DimensionMismatch { expected: order.rank(), got: g.rank() });
        }
        if g.entries.iter().any(|e| e.ring() != ring) {
            return Err(Error::RingMismatch);
        }
    }
    let vecs: Vec<Vector> = gens.iter().map(|g| g.to_vector(&order)).collect();
    let elems = groebner(&vecs, &order, ring.field(), opts)?;
    Ok(GroebnerBasis { ring: ring.clone(), order, elems, reduced: true })
}

/// Reduced Gröbner basis of an ideal.
pub fn ideal_basis(ring: &PolyRing, gens: &[Polynomial], mono: MonomialOrder, opts: &GbOptions) -> Result<GroebnerBasis> {
    let g: Vec<VectorElement> = gens.iter().cloned().map(VectorElement::from_poly).collect();
    buchberger_with(ring, &g, ModuleOrder::ideal(mono), opts)
}

/// Elements of an elimination-order basis free of the eliminated variables.
pub fn eliminate(g: &GroebnerBasis) -> Result<Vec<Polynomial>> {
    let k = match g.monomial_order() {
        MonomialOrder::Elimination(k) => k,
        MonomialOrder::Lex => 1,
        MonomialOrder::Grevlex => return Err(Error::WrongOrder("elimination needs a block or lex order".into())),
    };
    Ok(g.polynomials().into_iter().filter(|p| p.terms().iter().all(|(m, _)| !m.involves_any(0..k))).collect())
}

/// Generators of the syzygies on the elements of `g`, indexed as `g` is.
/// Each returned element is homogeneous in `⊕ S(-deg g_i)`.
pub fn syzygies(g: &GroebnerBasis) -> Vec<VectorElement> {
    let field = g.ring.field();
    let (next, syz) = schreyer_syzygies(&g.elems, &g.order, field);
    syz.iter().map(|s| VectorElement::from_vector(&g.ring, s, next.twists())).collect()
}

#[cfg(test)]
mod tests;
