//! Ext modules, deficiency modules by local duality, truncated top
//! cohomology and the comparison module `(I ∩ J) / IJ`.
//!
//! Degrees follow sheaf cohomology: `H^i_*(V)_t = H^i(P^n, 𝓘_V(t))`, which
//! for `1 ≤ i ≤ n` is `(Ext^{n+1-i}_S(S/I, S)_{-t-n-1})^*`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{kernel, GbOptions, ModuleOrder, Term, Vector};
use crate::homology::{koszul_homology, KoszulHomologyResult};
use crate::ideal::Ideal;
use crate::module::{FiniteGradedModule, ModuleDims};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::presentation::{submodule_of_quotient, GradedModulePresentation};
use crate::resolution::{free_resolution, FreeResolution};

/// `Ext^j_S(coker F_1 -> F_0, S)` from a free resolution.
pub fn ext_of_resolution(res: &FreeResolution, j: usize, opts: &GbOptions) -> Result<GradedModulePresentation> {
    let ring = &res.ring;
    let f = ring.field();
    let mono = MonomialOrder::Grevlex;
    let empty = GradedModulePresentation::new(ring, vec![], vec![], *opts);
    if j > res.length() || res.rank(j) == 0 {
        return Ok(empty);
    }
    let dual = |a: &[i32]| a.iter().map(|x| -x).collect::<Vec<i32>>();
    let tw_j = dual(&res.twists[j]);
    let order_j = ModuleOrder::top(mono, tw_j.clone());
    // Cycles: kernel of the transpose of φ_{j+1}, whose rows are the images.
    let cycles: Vec<Vector> = match res.maps.get(j) {
        Some(phi) => {
            let tw_next = dual(&res.twists[j + 1]);
            let order_next = ModuleOrder::top(mono, tw_next.clone());
            let rows = phi.transpose().columns(&order_next);
            kernel(&rows, &[], &tw_next, &tw_j, mono, f, opts)?
        }
        None => (0..tw_j.len())
            .map(|k| Vector { terms: vec![(Term::new(k as u32, Monomial::one()), 1)] })
            .collect(),
    };
    if cycles.is_empty() {
        return Ok(empty);
    }
    let boundaries: Vec<Vector> = match j {
        0 => vec![],
        _ => res.maps[j - 1].transpose().columns(&order_j).into_iter().filter(|v| !v.is_zero()).collect(),
    };
    let gen_twists: Vec<i32> = cycles.iter().map(|v| order_j.degree_of(&v.lead_term())).collect();
    let relations = kernel(&cycles, &boundaries, &tw_j, &gen_twists, mono, f, opts)?;
    Ok(GradedModulePresentation::new(ring, gen_twists, relations, *opts))
}

/// `Ext^j_S(S/I, S)`.
pub fn ext(ideal: &Ideal, j: usize) -> Result<GradedModulePresentation> {
    ext_of_resolution(&free_resolution(ideal)?, j, &ideal.options())
}

/// Dimension of `V(I)` in projective space.
pub fn projective_dim(ideal: &Ideal) -> Result<i64> {
    Ok(ideal.krull_dim()? - 1)
}

fn check_index(ideal: &Ideal, i: usize) -> Result<usize> {
    let n = ideal.ring().nvars() as i64 - 1;
    if i < 1 || i as i64 > n - 1 {
        return Err(Error::IndexOutOfRange { index: i as i64, lo: 1, hi: n - 1 });
    }
    Ok(n as usize)
}

/// `H^i_*(V)` for `1 ≤ i ≤ n - 1`, finite for `i ≤ dim V` when `V` is
/// locally Cohen-Macaulay and equidimensional.
///
/// `I` must be saturated. A module that is not of finite length (the top
/// cohomology) gives [`Error::Uncertified`]; use [`top_cohomology_window`].
pub fn deficiency_module(ideal: &Ideal, i: usize) -> Result<FiniteGradedModule> {
    let n = check_index(ideal, i)?;
    if !ideal.is_saturated()? {
        return Err(Error::Precondition("deficiency modules need a saturated ideal".into()));
    }
    deficiency_unchecked(&free_resolution(ideal)?, ideal, n, i)
}

fn deficiency_unchecked(res: &FreeResolution, ideal: &Ideal, n: usize, i: usize) -> Result<FiniteGradedModule> {
    let e = ext_of_resolution(res, n + 1 - i, &ideal.options())?;
    let m = e.to_finite_exact()?;
    Ok(m.dual(n as i32 + 1))
}

/// `H^{d+1}_*(V)` on the degrees `lo ..= hi`, as a truncation.
pub fn top_cohomology_window(ideal: &Ideal, lo: i32, hi: i32) -> Result<FiniteGradedModule> {
    let n = ideal.ring().nvars() as i32 - 1;
    let d = projective_dim(ideal)?;
    if d < 0 {
        return Err(Error::Precondition("the top cohomology needs a nonempty subscheme".into()));
    }
    let e = ext(ideal, (n as i64 - d) as usize)?;
    if e.twists.is_empty() {
        let mut z = FiniteGradedModule::zero(ideal.ring().field(), n as usize + 1);
        z.lo = lo;
        return Ok(z);
    }
    Ok(e.to_finite(-hi - n - 1, -lo - n - 1)?.dual(n + 1))
}

/// `[-reg - n - 2, reg + 2]` from the regularity of `S/I`.
pub fn default_window(ideal: &Ideal) -> Result<(i32, i32)> {
    let reg = free_resolution(ideal)?.regularity();
    let n = ideal.ring().nvars() as i32 - 1;
    Ok((-reg - n - 2, reg + 2))
}

/// `ℍ_i(forms; H^{d+1}_*(V))` on a window of the top cohomology.
pub fn top_koszul_homology(ideal: &Ideal, forms: &[Polynomial], i: usize, window: (i32, i32)) -> Result<KoszulHomologyResult> {
    let top = top_cohomology_window(ideal, window.0, window.1)?;
    koszul_homology(forms, &top, i)
}

/// Koszul homology of the top cohomology on the default window and on the
/// windows widened by each of `widenings`.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StabilityReport {
    pub index: usize,
    pub windows: Vec<(i32, i32)>,
    pub dims: Vec<BTreeMap<i32, usize>>,
    pub stable: bool,
}

pub fn top_koszul_stability(ideal: &Ideal, forms: &[Polynomial], i: usize, widenings: &[i32]) -> Result<StabilityReport> {
    let (lo, hi) = default_window(ideal)?;
    let mut windows = vec![(lo, hi)];
    windows.extend(widenings.iter().map(|w| (lo - w, hi + w)));
    let mut dims = Vec::new();
    for &w in &windows {
        let mut h = top_koszul_homology(ideal, forms, i, w)?.dims;
        h.retain(|_, n| *n > 0);
        dims.push(h);
    }
    let stable = dims.windows(2).all(|p| p[0] == p[1]);
    Ok(StabilityReport { index: i, windows, dims, stable })
}

/// Whether every intermediate deficiency module is killed by `m`.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QuasiBuchsbaumReport {
    pub holds: bool,
    pub modules: Vec<ModuleDims>,
    pub failing: Vec<usize>,
}

pub fn is_quasi_buchsbaum(ideal: &Ideal) -> Result<QuasiBuchsbaumReport> {
    let mut modules = Vec::new();
    let mut failing = Vec::new();
    for (i, h) in intermediate_cohomology(ideal)? {
        if !h.is_killed_by_maximal_ideal() {
            failing.push(i);
        }
        modules.push(h.export(i as i64));
    }
    Ok(QuasiBuchsbaumReport { holds: failing.is_empty(), modules, failing })
}

/// `H^i_*(V)` for `i = 1 ..= dim V`, from one resolution.
pub fn intermediate_cohomology(ideal: &Ideal) -> Result<Vec<(usize, FiniteGradedModule)>> {
    if !ideal.is_saturated()? {
        return Err(Error::Precondition("deficiency modules need a saturated ideal".into()));
    }
    let n = ideal.ring().nvars() - 1;
    let d = projective_dim(ideal)?;
    let res = free_resolution(ideal)?;
    (1..=d.max(0) as usize)
        .filter(|&i| i < n)
        .map(|i| Ok((i, deficiency_unchecked(&res, ideal, n, i)?)))
        .collect()
}

/// `(I ∩ J) / IJ` for disjoint `V(I)`, `V(J)`.
pub fn comparison_module(i: &Ideal, j: &Ideal) -> Result<FiniteGradedModule> {
    let sum = i.sum(j)?;
    let h = sum.hilbert_series()?;
    if h.krull_dim() > 0 {
        return Err(Error::NotDisjoint { dim: h.krull_dim() });
    }
    let field = i.ring().field();
    let nv = i.ring().nvars();
    let cap = i.intersect(j)?;
    let prod = i.product(j)?;
    let gens = cap.canonical_generators()?;
    let degs: Vec<i32> = gens.iter().filter_map(|g| g.degree()).map(|d| d as i32).collect();
    let (Some(&lo), Some(&top)) = (degs.iter().min(), degs.iter().max()) else {
        return Ok(FiniteGradedModule::zero(field, nv));
    };
    // The module is killed by I + J, so it vanishes from maxgen + D0 on,
    // where (S / (I + J))_{D0} = 0.
    let d0 = h.top_degree().map_or(0, |t| t as i32 + 1);
    let hi = top + d0 - 1;
    if hi < lo {
        return Ok(FiniteGradedModule::zero(field, nv));
    }
    submodule_of_quotient(&prod, &gens, lo, hi, true)
}

#[cfg(test)]
mod tests;
