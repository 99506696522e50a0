//! Graded modules given by generators and relations, and their conversion
//! to explicit [`FiniteGradedModule`]s.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{groebner, GbOptions, ModuleOrder, Term, Vector};
use crate::hilbert::HilbertSeries;
use crate::ideal::Ideal;
use crate::linalg::{Echelon, Mat, SparseVec};
use crate::module::FiniteGradedModule;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

/// `coker(relations) = ⊕ S(-twists[i]) / <relations>`.
#[derive(Clone, Debug)]
pub struct GradedModulePresentation {
    pub ring: PolyRing,
    pub twists: Vec<i32>,
    pub relations: Vec<Vector>,
    opts: GbOptions,
    gb: Arc<OnceLock<Result<Vec<Vector>>>>,
}

impl GradedModulePresentation {
    pub fn new(ring: &PolyRing, twists: Vec<i32>, relations: Vec<Vector>, opts: GbOptions) -> Self {
        GradedModulePresentation { ring: ring.clone(), twists, relations, opts, gb: Arc::new(OnceLock::new()) }
    }

    pub fn order(&self) -> ModuleOrder {
        ModuleOrder::top(MonomialOrder::Grevlex, self.twists.clone())
    }

    pub fn gb(&self) -> Result<&[Vector]> {
        self.gb
            .get_or_init(|| groebner(&self.relations, &self.order(), self.ring.field(), &self.opts))
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    fn leads(&self) -> Result<Vec<Vec<Monomial>>> {
        let mut out = vec![Vec::new(); self.twists.len()];
        for g in self.gb()? {
            let t = g.lead_term();
            out[t.comp as usize].push(t.mon);
        }
        Ok(out)
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        Ok(HilbertSeries::of_module(&self.twists, &self.leads()?, self.ring.nvars()))
    }

    /// Whether the module has finite length.
    pub fn is_finite_length(&self) -> Result<bool> {
        let h = self.hilbert_series()?;
        Ok(h.krull_dim() <= 0)
    }

    /// Standard monomials of degree `d`, in a fixed order.
    fn standard_basis(&self, leads: &[Vec<Monomial>], d: i32) -> Vec<Term> {
        let mut out = Vec::new();
        for (i, &a) in self.twists.iter().enumerate() {
            if d < a {
                continue;
            }
            for m in Monomial::all_of_degree(self.ring.nvars(), (d - a) as u32) {
                if !leads[i].iter().any(|l| l.divides(&m)) {
                    out.push(Term::new(i as u32, m));
                }
            }
        }
        out
    }

    /// The pieces in degrees `lo ..= hi` with the variable action.
    pub fn to_finite(&self, lo: i32, hi: i32) -> Result<FiniteGradedModule> {
        let leads = self.leads()?;
        let order = self.order();
        let gb = self.gb()?;
        let red = crate::groebner::Reducers::new(gb);
        let f = self.ring.field();
        let h = self.hilbert_series()?;
        let bases: Vec<Vec<Term>> = (lo..=hi).map(|d| self.standard_basis(&leads, d)).collect();
        let index: Vec<HashMap<Term, usize>> =
            bases.iter().map(|b| b.iter().enumerate().map(|(k, t)| (*t, k)).collect()).collect();
        let nv = self.ring.nvars();
        let mut action = Vec::new();
        for k in 0..bases.len().saturating_sub(1) {
            let mut per_var = Vec::with_capacity(nv);
            for v in 0..nv {
                let mut m = Mat::zeros(bases[k + 1].len(), bases[k].len());
                let x = Monomial::var(v);
                for (c, t) in bases[k].iter().enumerate() {
                    let prod = Vector { terms: vec![(t.mul(&x), 1)] };
                    let nf = crate::groebner::reduce_vector(&prod, &red, &order, f);
                    for (u, val) in nf.terms {
                        m.set(index[k + 1][&u], c, val);
                    }
                }
                per_var.push(m);
            }
            action.push(per_var);
        }
        let labels = bases
            .iter()
            .map(|b| b.iter().map(|t| format!("{}*e{}", Polynomial::monomial(&self.ring, t.mon, 1), t.comp)).collect())
            .collect();
        let min_twist = self.twists.iter().copied().min().unwrap_or(0);
        Ok(FiniteGradedModule {
            field: f,
            nvars: nv,
            lo,
            dims: bases.iter().map(|b| b.len()).collect(),
            action,
            zero_below: lo <= min_twist,
            zero_above: h.is_zero() || h.top_degree().is_some_and(|t| hi as i64 >= t),
            labels,
        })
    }

    /// The whole module when it has finite length.
    pub fn to_finite_exact(&self) -> Result<FiniteGradedModule> {
        let h = self.hilbert_series()?;
        if h.is_zero() {
            return Ok(FiniteGradedModule::zero(self.ring.field(), self.ring.nvars()));
        }
        let top = h.top_degree().ok_or(Error::Uncertified)?;
        let lo = self.twists.iter().copied().min().unwrap_or(0);
        let m = self.to_finite(lo, top as i32)?;
        Ok(m)
    }
}

/// `S/I` with one generator in degree 0.
pub fn present_quotient(ideal: &Ideal) -> Result<GradedModulePresentation> {
    let order = ModuleOrder::ideal(MonomialOrder::Grevlex);
    let rel: Vec<Vector> = ideal.gb()?.vectors().to_vec();
    let p = GradedModulePresentation::new(ideal.ring(), vec![0], rel.clone(), ideal.options());
    // The ideal basis is already a reduced basis for the rank-one order.
    let _ = p.gb.set(Ok(rel.into_iter().map(|v| v.resort(&order, ideal.ring().field())).collect()));
    Ok(p)
}

/// The submodule of `S/K` generated by `gens`, on degrees `lo ..= hi`.
/// `zero_above` is asserted by the caller.
pub fn submodule_of_quotient(
    k: &Ideal,
    gens: &[Polynomial],
    lo: i32,
    hi: i32,
    zero_above: bool,
) -> Result<FiniteGradedModule> {
    let pres = present_quotient(k)?;
    let ambient = pres.to_finite(lo.min(0), hi)?;
    let f = k.ring().field();
    let leads = pres.leads()?;
    let mut subs = Vec::new();
    for d in lo..=hi {
        let basis = pres.standard_basis(&leads, d);
        let index: HashMap<Monomial, u32> = basis.iter().enumerate().map(|(i, t)| (t.mon, i as u32)).collect();
        let mut ech = Echelon::new(f);
        let mut rows = Vec::new();
        for g in gens {
            let Some(gd) = g.degree() else { continue };
            if gd as i32 > d {
                continue;
            }
            for u in Monomial::all_of_degree(k.ring().nvars(), (d - gd as i32) as u32) {
                let nf = k.normal_form(&g.mul_monomial(&u))?;
                let mut v: SparseVec = nf.terms().iter().map(|(m, c)| (index[m], *c)).collect();
                v.sort_unstable();
                if ech.insert(&v).is_some() {
                    rows.push(v);
                }
            }
        }
        subs.push(rows);
    }
    let dens = vec![Vec::new(); subs.len()];
    Ok(ambient.subquotient(lo, &subs, &dens, true, zero_above))
}
