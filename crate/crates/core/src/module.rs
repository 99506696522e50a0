//! Finite graded modules as explicit linear algebra: one vector space per
//! degree of a window, plus the multiplication maps of the variables.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{dense_to_sparse, kernel, rank_of, Echelon, Mat, SparseVec, Subquotient};
use crate::poly::Polynomial;

/// A graded module known on the degrees `lo ..= lo + dims.len() - 1`.
///
/// `zero_below` / `zero_above` certify that the module vanishes outside the
/// window on that side; without them the window is a truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGradedModule {
    pub field: Field,
    pub nvars: usize,
    pub lo: i32,
    pub dims: Vec<usize>,
    /// `action[k][v]`: multiplication by `x_v` from degree `lo + k` to
    /// `lo + k + 1`, as a `dims[k+1] x dims[k]` matrix. Only maps inside
    /// the window are stored.
    pub action: Vec<Vec<Mat>>,
    pub zero_below: bool,
    pub zero_above: bool,
    /// Optional per-degree basis names.
    pub labels: Vec<Vec<String>>,
}

/// JSON view: `{index, dims: {degree: dim}, total, certified}`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ModuleDims {
    pub index: i64,
    pub dims: BTreeMap<i32, usize>,
    pub total: usize,
    pub certified: bool,
}

impl FiniteGradedModule {
    pub fn zero(field: Field, nvars: usize) -> Self {
        FiniteGradedModule {
            field,
            nvars,
            lo: 0,
            dims: vec![],
            action: vec![],
            zero_below: true,
            zero_above: true,
            labels: vec![],
        }
    }

    /// `k` in degree `d` with trivial action.
    pub fn residue_field(field: Field, nvars: usize, d: i32) -> Self {
        FiniteGradedModule { lo: d, dims: vec![1], labels: vec![vec!["1".into()]], ..Self::zero(field, nvars) }
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.dims.len() as i32 - 1
    }

    pub fn is_certified(&self) -> bool {
        self.zero_below && self.zero_above
    }

    pub fn in_window(&self, d: i32) -> bool {
        d >= self.lo && d <= self.hi()
    }

    /// `dim M_d`, or `None` where the truncation hides it.
    pub fn dim(&self, d: i32) -> Option<usize> {
        if self.in_window(d) {
            Some(self.dims[(d - self.lo) as usize])
        } else if (d < self.lo && self.zero_below) || (d > self.hi() && self.zero_above) {
            Some(0)
        } else {
            None
        }
    }

    pub fn dims_map(&self) -> BTreeMap<i32, usize> {
        self.dims.iter().enumerate().filter(|(_, &n)| n > 0).map(|(k, &n)| (self.lo + k as i32, n)).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Smallest and largest degree with a nonzero piece.
    pub fn support(&self) -> Option<(i32, i32)> {
        let m = self.dims_map();
        Some((*m.keys().next()?, *m.keys().last()?))
    }

    pub fn export(&self, index: i64) -> ModuleDims {
        ModuleDims { index, dims: self.dims_map(), total: self.total_dim(), certified: self.is_certified() }
    }

    /// Multiplication by `x_v` from degree `d`, when known.
    pub fn act(&self, v: usize, d: i32) -> Option<Mat> {
        let src = self.dim(d)?;
        let tgt = self.dim(d + 1)?;
        if self.in_window(d) && self.in_window(d + 1) {
            Some(self.action[(d - self.lo) as usize][v].clone())
        } else {
            Some(Mat::zeros(tgt, src))
        }
    }

    /// Multiplication by a linear form from degree `d`.
    pub fn act_linear(&self, form: &Polynomial, d: i32) -> Option<Mat> {
        let (src, tgt) = (self.dim(d)?, self.dim(d + 1)?);
        let mut acc = Mat::zeros(tgt, src);
        for (m, c) in form.terms() {
            debug_assert_eq!(m.degree(), 1);
            let v = (0..self.nvars).find(|&v| m.exp(v) == 1).expect("linear monomial");
            acc = Mat::combination(&[&acc, &self.act(v, d)?], &[1, *c], self.field);
        }
        Some(acc)
    }

    /// Checks `x_u x_v = x_v x_u` on every pair of consecutive maps.
    pub fn actions_commute(&self) -> bool {
        let f = self.field;
        for k in 0..self.action.len().saturating_sub(1) {
            for u in 0..self.nvars {
                for v in u + 1..self.nvars {
                    let a = self.action[k + 1][v].mul(&self.action[k][u], f);
                    let b = self.action[k + 1][u].mul(&self.action[k][v], f);
                    if a != b {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Graded dual shifted so that `D_t = (M_{-t-c})^*`.
    pub fn dual(&self, c: i32) -> FiniteGradedModule {
        let len = self.dims.len();
        let mut dims = self.dims.clone();
        dims.reverse();
        let action = (0..len.saturating_sub(1))
            .map(|k| self.action[len - 2 - k].iter().map(|m| m.transpose()).collect())
            .collect();
        let labels = if self.labels.len() == len {
            self.labels.iter().rev().map(|l| l.iter().map(|s| format!("({s})*")).collect()).collect()
        } else {
            vec![]
        };
        FiniteGradedModule {
            field: self.field,
            nvars: self.nvars,
            lo: -self.hi() - c,
            dims,
            action,
            zero_below: self.zero_above,
            zero_above: self.zero_below,
            labels,
        }
    }

    /// Restriction to the degrees `lo ..= hi`, which must lie in the window.
    pub fn restrict(&self, lo: i32, hi: i32) -> FiniteGradedModule {
        assert!(self.in_window(lo) && self.in_window(hi) && lo <= hi);
        let (a, b) = ((lo - self.lo) as usize, (hi - self.lo) as usize);
        FiniteGradedModule {
            lo,
            dims: self.dims[a..=b].to_vec(),
            action: self.action[a..b].to_vec(),
            zero_below: self.zero_below && self.dims[..a].iter().all(|&n| n == 0),
            zero_above: self.zero_above && self.dims[b + 1..].iter().all(|&n| n == 0),
            labels: if self.labels.is_empty() { vec![] } else { self.labels[a..=b].to_vec() },
            ..self.clone()
        }
    }

    /// The subquotient `sub_d / den_d` on degrees `lo ..`, with `den ⊆ sub`
    /// both closed under the action. `certified_above` states that the
    /// subquotient vanishes past the last supplied degree.
    pub fn subquotient(
        &self,
        lo: i32,
        subs: &[Vec<SparseVec>],
        dens: &[Vec<SparseVec>],
        zero_below: bool,
        zero_above: bool,
    ) -> FiniteGradedModule {
        let f = self.field;
        let pieces: Vec<Subquotient> = subs.iter().zip(dens).map(|(s, d)| Subquotient::new(f, s, d)).collect();
        let dims: Vec<usize> = pieces.iter().map(|p| p.dim()).collect();
        let mut action = Vec::new();
        for k in 0..pieces.len().saturating_sub(1) {
            let d = lo + k as i32;
            let mut per_var = Vec::with_capacity(self.nvars);
            for v in 0..self.nvars {
                let x = self.act(v, d).expect("action inside the ambient window");
                let mut m = Mat::zeros(dims[k + 1], dims[k]);
                for (c, rep) in pieces[k].reps().iter().enumerate() {
                    let img = apply_sparse(&x, rep, f);
                    for (r, val) in pieces[k + 1].coords(&img).into_iter().enumerate() {
                        m.set(r, c, val);
                    }
                }
                per_var.push(m);
            }
            action.push(per_var);
        }
        FiniteGradedModule { field: f, nvars: self.nvars, lo, dims, action, zero_below, zero_above, labels: vec![] }
    }

    /// `(0 :_M A)` for `A` generated by linear forms.
    pub fn annihilator_submodule(&self, forms: &[Polynomial]) -> FiniteGradedModule {
        let f = self.field;
        let mut subs = Vec::new();
        let mut top = self.hi();
        for d in self.lo..=self.hi() {
            let n = self.dims[(d - self.lo) as usize];
            let maps: Option<Vec<Mat>> = forms.iter().map(|l| self.act_linear(l, d)).collect();
            let Some(maps) = maps else {
                top = d - 1;
                break;
            };
            // Stack the maps and take the kernel.
            let images: Vec<SparseVec> = (0..n)
                .map(|c| {
                    let mut col = Vec::new();
                    let mut off = 0u32;
                    for m in &maps {
                        for r in 0..m.rows {
                            let x = m.get(r, c);
                            if x != 0 {
                                col.push((off + r as u32, x));
                            }
                        }
                        off += m.rows as u32;
                    }
                    col
                })
                .collect();
            subs.push(kernel(f, &images));
        }
        if top < self.lo {
            let mut z = FiniteGradedModule::zero(f, self.nvars);
            z.zero_below = self.zero_below;
            z.zero_above = self.zero_above && self.dims.is_empty();
            return z;
        }
        let dens = vec![Vec::new(); subs.len()];
        self.subquotient(self.lo, &subs, &dens, self.zero_below, self.zero_above && top == self.hi())
    }

    /// The submodule generated by `gens` (degree, vector) and the quotient
    /// by it, on the same window.
    pub fn split_by_submodule(&self, gens: &[(i32, SparseVec)]) -> (FiniteGradedModule, FiniteGradedModule) {
        let f = self.field;
        let len = self.dims.len();
        let mut ech: Vec<Echelon> = (0..len).map(|_| Echelon::new(f)).collect();
        let mut span: Vec<Vec<SparseVec>> = vec![Vec::new(); len];
        for (d, v) in gens {
            if self.in_window(*d) {
                let k = (d - self.lo) as usize;
                if ech[k].insert(v).is_some() {
                    span[k].push(v.clone());
                }
            }
        }
        // Degrees are closed in increasing order, so one pass suffices.
        for k in 0..len.saturating_sub(1) {
            for v in span[k].clone() {
                for x in &self.action[k] {
                    let img = apply_sparse(x, &v, f);
                    if ech[k + 1].insert(&img).is_some() {
                        span[k + 1].push(img);
                    }
                }
            }
        }
        let all: Vec<Vec<SparseVec>> = self.dims.iter().map(|&n| (0..n as u32).map(|i| vec![(i, 1)]).collect()).collect();
        let none = vec![Vec::new(); len];
        let sub = self.subquotient(self.lo, &span, &none, self.zero_below, self.zero_above);
        let quo = self.subquotient(self.lo, &all, &span, self.zero_below, self.zero_above);
        (sub, quo)
    }

    /// Whether every variable acts as zero.
    pub fn is_killed_by_maximal_ideal(&self) -> bool {
        self.action.iter().flatten().all(|m| m.is_zero())
    }

    /// Minimal number of generators: `Σ_d dim (M / mM)_d`.
    pub fn nu_module(&self) -> Result<usize> {
        if !self.is_certified() {
            return Err(Error::Uncertified);
        }
        let f = self.field;
        let mut total = 0;
        for (k, &n) in self.dims.iter().enumerate() {
            let mut imgs: Vec<SparseVec> = Vec::new();
            if k > 0 {
                for m in &self.action[k - 1] {
                    for c in 0..m.cols {
                        imgs.push(dense_to_sparse(&m.column(c)));
                    }
                }
            }
            total += n - rank_of(f, &imgs);
        }
        Ok(total)
    }
}

/// `m * v` for a sparse column vector.
pub fn apply_sparse(m: &Mat, v: &SparseVec, f: Field) -> SparseVec {
    let mut out = vec![0u32; m.rows];
    for &(c, x) in v {
        for (r, o) in out.iter_mut().enumerate() {
            let a = m.get(r, c as usize);
            if a != 0 {
                *o = f.add(*o, f.mul(a, x));
            }
        }
    }
    dense_to_sparse(&out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Field {
        Field::default()
    }

    /// `k[x0]/(x0^3)` in degrees 0..2, one variable.
    fn truncated_line() -> FiniteGradedModule {
        let mut one = Mat::zeros(1, 1);
        one.set(0, 0, 1);
        FiniteGradedModule {
            field: f(),
            nvars: 1,
            lo: 0,
            dims: vec![1, 1, 1],
            action: vec![vec![one.clone()], vec![one]],
            zero_below: true,
            zero_above: true,
            labels: vec![],
        }
    }

    #[test]
    fn residue_field_basics() {
        let k = FiniteGradedModule::residue_field(f(), 3, 0);
        assert_eq!(k.nu_module().unwrap(), 1);
        assert!(k.is_killed_by_maximal_ideal());
        assert_eq!(k.dual(0).dims_map(), BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn cyclic_module_has_one_generator() {
        let m = truncated_line();
        assert_eq!(m.nu_module().unwrap(), 1);
        let ann = m.annihilator_submodule(&[Polynomial::monomial(
            &crate::poly::PolyRing::standard(1, f()).unwrap(),
            crate::monomial::Monomial::var(0),
            1,
        )]);
        assert_eq!(ann.dims_map(), BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn zero_module_stays_certified() {
        let r = crate::poly::PolyRing::standard(2, f()).unwrap();
        let z = FiniteGradedModule::zero(f(), 2).annihilator_submodule(&[r.var(0)]);
        assert_eq!(z.nu_module().unwrap(), 0);
    }

    #[test]
    fn dual_reverses_degrees() {
        let m = truncated_line();
        let d = m.dual(4);
        assert_eq!((d.lo, d.hi()), (-6, -4));
        assert!(d.actions_commute());
        assert_eq!(d.nu_module().unwrap(), 1);
        assert_eq!(d.dual(4), FiniteGradedModule { labels: vec![], ..m });
    }

    #[test]
    fn truncation_hides_unknown_degrees() {
        let mut m = truncated_line();
        m.zero_below = false;
        assert_eq!(m.dim(-1), None);
        assert_eq!(m.dim(5), Some(0));
        assert!(m.nu_module().is_err());
    }
}
