//! Homology of complexes `⊕ M(-t)` with polynomial differentials, for an
//! explicit module `M`: Koszul homology and Tor.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::{dense_to_sparse, kernel, Mat, SparseVec, Subquotient};
use crate::matrix::PolyMatrix;
use crate::module::{apply_sparse, FiniteGradedModule};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::presentation::present_quotient;
use crate::resolution::free_resolution;

/// Polynomial action on an explicit module, with memoized monomials.
struct PolyAction<'a> {
    m: &'a FiniteGradedModule,
    cache: RefCell<HashMap<(Monomial, i32), Option<Mat>>>,
}

impl<'a> PolyAction<'a> {
    fn new(m: &'a FiniteGradedModule) -> Self {
        PolyAction { m, cache: RefCell::new(HashMap::new()) }
    }

    fn monomial(&self, mon: &Monomial, d: i32) -> Option<Mat> {
        if let Some(hit) = self.cache.borrow().get(&(*mon, d)) {
            return hit.clone();
        }
        let out = if mon.is_one() {
            self.m.dim(d).map(Mat::identity)
        } else {
            let v = (0..self.m.nvars).find(|&v| mon.exp(v) > 0).unwrap();
            let rest = Monomial::var(v).quotient_of(mon);
            match (self.m.act(v, d), self.monomial(&rest, d + 1)) {
                (Some(a), Some(b)) => Some(b.mul(&a, self.m.field)),
                _ => None,
            }
        };
        self.cache.borrow_mut().insert((*mon, d), out.clone());
        out
    }

    /// `p : M_d -> M_{d + deg p}` for homogeneous `p`.
    fn poly(&self, p: &Polynomial, d: i32, deg: i32) -> Option<Mat> {
        let (src, tgt) = (self.m.dim(d)?, self.m.dim(d + deg)?);
        let mut acc = Mat::zeros(tgt, src);
        for (mon, c) in p.terms() {
            let a = self.monomial(mon, d)?;
            acc = Mat::combination(&[&acc, &a], &[1, *c], self.m.field);
        }
        Some(acc)
    }
}

/// One spot `C_{i+1} -> C_i -> C_{i-1}` of a complex of twisted copies.
pub struct ComplexSpot<'a> {
    pub twists_in: &'a [i32],
    pub map_in: Option<&'a PolyMatrix>,
    pub twists: &'a [i32],
    pub map_out: Option<&'a PolyMatrix>,
    pub twists_out: &'a [i32],
}

fn block_offsets(m: &FiniteGradedModule, twists: &[i32], e: i32) -> Option<Vec<usize>> {
    let mut off = vec![0];
    for &t in twists {
        off.push(off.last().unwrap() + m.dim(e - t)?);
    }
    Some(off)
}

/// Degree-`e` matrix of a polynomial map between sums of twisted copies.
fn piece(act: &PolyAction, p: &PolyMatrix, src: &[i32], tgt: &[i32], e: i32) -> Option<Mat> {
    let so = block_offsets(act.m, src, e)?;
    let to = block_offsets(act.m, tgt, e)?;
    let mut out = Mat::zeros(*to.last().unwrap(), *so.last().unwrap());
    for c in 0..src.len() {
        for r in 0..tgt.len() {
            let entry = p.get(r, c);
            if entry.is_zero() {
                continue;
            }
            let deg = src[c] - tgt[r];
            let blk = act.poly(entry, e - src[c], deg)?;
            for i in 0..blk.rows {
                for j in 0..blk.cols {
                    let x = blk.get(i, j);
                    if x != 0 {
                        out.set(to[r] + i, so[c] + j, x);
                    }
                }
            }
        }
    }
    Some(out)
}

fn columns(m: &Mat) -> Vec<SparseVec> {
    (0..m.cols).map(|c| dense_to_sparse(&m.column(c))).collect()
}

/// Homology at `C_i` in the degrees `elo ..= ehi` that the window of `m`
/// determines. The result keeps the requested certification only on sides
/// where no degree had to be dropped.
pub fn complex_homology(
    m: &FiniteGradedModule,
    spot: &ComplexSpot,
    elo: i32,
    ehi: i32,
    zero_below: bool,
    zero_above: bool,
) -> FiniteGradedModule {
    let f = m.field;
    let act = PolyAction::new(m);
    let mut computed: Vec<(i32, Vec<SparseVec>, Vec<SparseVec>)> = Vec::new();
    for e in elo..=ehi {
        let Some(off) = block_offsets(m, spot.twists, e) else { continue };
        let n = *off.last().unwrap();
        let sub = match spot.map_out {
            Some(p) => match piece(&act, p, spot.twists, spot.twists_out, e) {
                Some(mat) => kernel(f, &columns(&mat)),
                None => continue,
            },
            None => (0..n).map(|k| vec![(k as u32, 1)]).collect(),
        };
        let den = match spot.map_in {
            Some(p) => match piece(&act, p, spot.twists_in, spot.twists, e) {
                Some(mat) => columns(&mat),
                None => continue,
            },
            None => vec![],
        };
        computed.push((e, sub, den));
    }
    // Keep the longest run of consecutive degrees.
    let mut best = (0usize, 0usize);
    let mut start = 0;
    for k in 0..computed.len() {
        if k > 0 && computed[k].0 != computed[k - 1].0 + 1 {
            start = k;
        }
        if k + 1 - start > best.1 - best.0 {
            best = (start, k + 1);
        }
    }
    let run = &computed[best.0..best.1];
    if run.is_empty() {
        let mut z = FiniteGradedModule::zero(f, m.nvars);
        z.zero_below = false;
        z.zero_above = false;
        return z;
    }
    let lo = run[0].0;
    let hi = run.last().unwrap().0;
    let pieces: Vec<Subquotient> = run.iter().map(|(_, s, d)| Subquotient::new(f, s, d)).collect();
    let ring = dummy_ring(m.nvars, f);
    let shifted: Vec<i32> = spot.twists.iter().map(|t| t - 1).collect();
    let xmats: Vec<PolyMatrix> = (0..m.nvars)
        .map(|v| {
            let mut x = PolyMatrix::zeros(&ring, spot.twists.len(), spot.twists.len());
            for c in 0..spot.twists.len() {
                x.entries[c][c] = ring.var(v);
            }
            x
        })
        .collect();
    let mut action = Vec::new();
    for k in 0..pieces.len().saturating_sub(1) {
        let e = lo + k as i32;
        let mut per_var = Vec::new();
        for x in &xmats {
            let big = piece(&act, x, spot.twists, &shifted, e).expect("action inside window");
            let mut mat = Mat::zeros(pieces[k + 1].dim(), pieces[k].dim());
            for (c, rep) in pieces[k].reps().iter().enumerate() {
                let img = apply_sparse(&big, rep, f);
                for (r, val) in pieces[k + 1].coords(&img).into_iter().enumerate() {
                    mat.set(r, c, val);
                }
            }
            per_var.push(mat);
        }
        action.push(per_var);
    }
    FiniteGradedModule {
        field: f,
        nvars: m.nvars,
        lo,
        dims: pieces.iter().map(|p| p.dim()).collect(),
        action,
        zero_below: zero_below && lo == elo,
        zero_above: zero_above && hi == ehi,
        labels: vec![],
    }
}

fn dummy_ring(n: usize, f: crate::field::Field) -> PolyRing {
    PolyRing::standard(n, f).expect("standard ring")
}

/// Whether a truncated computation is known to be complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stabilization {
    Certified,
    WindowLimited,
}

/// `ℍ_i(forms; M)` degreewise.
#[derive(Clone, Debug)]
pub struct KoszulHomologyResult {
    pub index: usize,
    pub dims: BTreeMap<i32, usize>,
    pub total_dim: usize,
    pub status: Stabilization,
    pub module: FiniteGradedModule,
}

/// Subsets of `0..s` of size `k`, in lex order.
pub fn subsets(s: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, s: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..s {
            cur.push(x);
            rec(x + 1, s, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= s {
        rec(0, s, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Differential `K_i -> K_{i-1}`: `e_T ↦ Σ_k (-1)^k L_{t_k} e_{T - t_k}`.
pub fn koszul_matrix(ring: &PolyRing, forms: &[Polynomial], i: usize) -> PolyMatrix {
    let s = forms.len();
    let rows = subsets(s, i - 1);
    let cols = subsets(s, i);
    let index: HashMap<&Vec<usize>, usize> = rows.iter().enumerate().map(|(k, r)| (r, k)).collect();
    let mut m = PolyMatrix::zeros(ring, rows.len(), cols.len());
    for (c, t) in cols.iter().enumerate() {
        for (k, &x) in t.iter().enumerate() {
            let mut rest = t.clone();
            rest.remove(k);
            let entry = if k % 2 == 0 { forms[x].clone() } else { forms[x].neg() };
            m.entries[index[&rest]][c] = entry;
        }
    }
    m
}

/// Koszul homology `ℍ_i((L_1, ..., L_s); M)` for linear forms `L_t`.
pub fn koszul_homology(forms: &[Polynomial], m: &FiniteGradedModule, i: usize) -> Result<KoszulHomologyResult> {
    let s = forms.len();
    if forms.iter().any(|l| !l.is_zero() && l.degree() != Some(1)) {
        return Err(Error::Precondition("Koszul forms must be linear or zero".into()));
    }
    if i > s || m.dims.is_empty() {
        let mut z = FiniteGradedModule::zero(m.field, m.nvars);
        z.zero_below = m.zero_below || i > s;
        z.zero_above = m.zero_above || i > s;
        let status = if z.is_certified() { Stabilization::Certified } else { Stabilization::WindowLimited };
        return Ok(KoszulHomologyResult { index: i, dims: BTreeMap::new(), total_dim: 0, status, module: z });
    }
    let ring = forms.first().map(|l| l.ring().clone()).unwrap_or_else(|| dummy_ring(m.nvars, m.field));
    let tw = |k: usize| vec![k as i32; subsets(s, k).len()];
    let (t_in, t, t_out) = (tw(i + 1), tw(i), if i > 0 { tw(i - 1) } else { vec![] });
    let map_in = (i < s).then(|| koszul_matrix(&ring, forms, i + 1));
    let map_out = (i > 0).then(|| koszul_matrix(&ring, forms, i));
    let spot = ComplexSpot {
        twists_in: &t_in,
        map_in: map_in.as_ref(),
        twists: &t,
        map_out: map_out.as_ref(),
        twists_out: &t_out,
    };
    let h = complex_homology(m, &spot, m.lo + i as i32, m.hi() + i as i32, m.zero_below, m.zero_above);
    let status = if h.is_certified() { Stabilization::Certified } else { Stabilization::WindowLimited };
    Ok(KoszulHomologyResult { index: i, dims: h.dims_map(), total_dim: h.total_dim(), status, module: h })
}

/// Graded Betti numbers `β_{i,e}(M) = dim ℍ_i(x_0, ..., x_n; M)_e` of a
/// finite-length module.
pub fn module_betti(m: &FiniteGradedModule) -> Result<BTreeMap<(usize, i32), usize>> {
    if !m.is_certified() {
        return Err(Error::Uncertified);
    }
    let ring = dummy_ring(m.nvars, m.field);
    let vars: Vec<Polynomial> = (0..m.nvars).map(|v| ring.var(v)).collect();
    let mut out = BTreeMap::new();
    for i in 0..=m.nvars {
        for (e, n) in koszul_homology(&vars, m, i)?.dims {
            out.insert((i, e), n);
        }
    }
    Ok(out)
}

/// `Tor_i^S(S/I, S/J)` from the minimal resolution of `S/J`.
///
/// The degree window runs up to `reg S/I + reg S/J + i`; the result is
/// certified when `V(I)` and `V(J)` are disjoint, where that bound holds.
pub fn tor(i_ideal: &Ideal, j_ideal: &Ideal, i: usize) -> Result<FiniteGradedModule> {
    let ring = i_ideal.ring();
    if ring != j_ideal.ring() {
        return Err(Error::RingMismatch);
    }
    let f = ring.field();
    let res_j = free_resolution(j_ideal)?;
    if i > res_j.length() || res_j.rank(i) == 0 {
        return Ok(FiniteGradedModule::zero(f, ring.nvars()));
    }
    let res_i = free_resolution(i_ideal)?;
    let bound = res_i.regularity() + res_j.regularity() + i as i32;
    let lo = *res_j.twists[i].iter().min().unwrap();
    if lo > bound {
        return Ok(FiniteGradedModule::zero(f, ring.nvars()));
    }
    let base = present_quotient(i_ideal)?.to_finite(0, bound + 1)?;
    let empty: Vec<i32> = vec![];
    let spot = ComplexSpot {
        twists_in: res_j.twists.get(i + 1).unwrap_or(&empty),
        map_in: res_j.maps.get(i),
        twists: &res_j.twists[i],
        map_out: if i > 0 { res_j.maps.get(i - 1) } else { None },
        twists_out: if i > 0 { &res_j.twists[i - 1] } else { &empty },
    };
    let disjoint = i_ideal.disjoint_from(j_ideal)?;
    Ok(complex_homology(&base, &spot, lo, bound, true, disjoint))
}

#[cfg(test)]
mod tests;
