//! Graded free resolutions by iterated Schreyer syzygies, minimization and
//! Betti tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{groebner, schreyer_sort, schreyer_syzygies, GbOptions, ModuleOrder, Vector};
use crate::hilbert::HilbertSeries;
use crate::ideal::Ideal;
use crate::linalg::Mat;
use crate::matrix::PolyMatrix;
use crate::monomial::MonomialOrder;
use crate::poly::PolyRing;

/// `... -> F_2 -> F_1 -> F_0`, resolving `coker(F_1 -> F_0)`.
///
/// `twists[j]` lists the `a` of the summands `S(-a)` of `F_j`; `maps[j - 1]`
/// is `φ_j : F_j -> F_{j-1}`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub ring: PolyRing,
    pub twists: Vec<Vec<i32>>,
    pub maps: Vec<PolyMatrix>,
    pub minimal: bool,
}

/// Resolution of `⊕ S(-f0_twists[i]) / <relations>`; relations are vectors
/// in that free module, homogeneous for its twists.
pub fn resolve_module(ring: &PolyRing, f0_twists: &[i32], relations: &[Vector], opts: &GbOptions) -> Result<FreeResolution> {
    let field = ring.field();
    let mut order = ModuleOrder::top(MonomialOrder::Grevlex, f0_twists.to_vec());
    let mut cur = groebner(relations, &order, field, opts)?;
    schreyer_sort(&mut cur);
    let mut twists = vec![f0_twists.to_vec()];
    let mut maps = Vec::new();
    while !cur.is_empty() {
        if maps.len() > ring.nvars() + 1 {
            return Err(Error::Precondition("resolution failed to terminate".into()));
        }
        twists.push(cur.iter().map(|v| order.degree_of(&v.lead_term())).collect());
        maps.push(PolyMatrix::from_columns(ring, order.rank(), &cur));
        let (next, mut syz) = schreyer_syzygies(&cur, &order, field);
        schreyer_sort(&mut syz);
        order = next;
        cur = syz;
    }
    Ok(FreeResolution { ring: ring.clone(), twists, maps, minimal: false })
}

/// Minimal free resolution of `S/I`.
pub fn free_resolution(ideal: &Ideal) -> Result<FreeResolution> {
    let gb = ideal.gb()?;
    let mut r = resolve_module(ideal.ring(), &[0], gb.vectors(), &ideal.options())?;
    r.minimize();
    Ok(r)
}

impl FreeResolution {
    /// Cancels unit entries until none remain.
    pub fn minimize(&mut self) {
        let f = self.ring.field();
        for j in 1..=self.maps.len() {
            while let Some((r, c)) = self.maps[j - 1].find_unit() {
                let a = &self.maps[j - 1];
                let u_inv = f.inv(a.get(r, c).terms()[0].1);
                let mut next = a.clone();
                for rr in 0..a.rows {
                    let arc = a.get(rr, c);
                    if rr == r || arc.is_zero() {
                        continue;
                    }
                    let s = arc.scale(u_inv);
                    for cc in 0..a.cols {
                        let b = a.get(r, cc);
                        if cc != c && !b.is_zero() {
                            next.entries[rr][cc] = next.entries[rr][cc].sub(&s.mul(b).unwrap()).unwrap();
                        }
                    }
                }
                next.remove_row(r);
                next.remove_col(c);
                self.maps[j - 1] = next;
                self.twists[j].remove(c);
                self.twists[j - 1].remove(r);
                if j < self.maps.len() {
                    self.maps[j].remove_row(c);
                }
                if j >= 2 {
                    self.maps[j - 2].remove_col(r);
                }
            }
        }
        while self.twists.len() > 1 && self.twists.last().is_some_and(|t| t.is_empty()) {
            self.twists.pop();
            self.maps.pop();
        }
        self.minimal = true;
    }

    pub fn rank(&self, j: usize) -> usize {
        self.twists.get(j).map_or(0, |t| t.len())
    }

    /// Length of the resolution: the projective dimension when minimal.
    pub fn length(&self) -> usize {
        self.twists.iter().rposition(|t| !t.is_empty()).unwrap_or(0)
    }

    pub fn betti(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (j, t) in self.twists.iter().enumerate() {
            for &d in t {
                *entries.entry((j, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    /// Castelnuovo–Mumford regularity of the resolved module.
    pub fn regularity(&self) -> i32 {
        self.betti().regularity()
    }

    /// Checks `φ_j φ_{j+1} = 0` and degreewise exactness at every interior
    /// `F_j` for degrees in `lo..=hi`.
    pub fn is_exact_in_window(&self, lo: i32, hi: i32) -> bool {
        for j in 1..self.maps.len() {
            if !self.maps[j - 1].mul(&self.maps[j]).is_zero() {
                return false;
            }
        }
        let f = self.ring.field();
        for d in lo..=hi {
            for j in 1..self.maps.len() + 1 {
                let dim = crate::matrix::graded_basis(self.ring.nvars(), &self.twists[j], d).0.len();
                let out = self.piece(j, d).rank(f);
                let inn = if j < self.maps.len() { self.piece(j + 1, d).rank(f) } else { 0 };
                if out + inn != dim {
                    return false;
                }
            }
        }
        true
    }

    fn piece(&self, j: usize, d: i32) -> Mat {
        self.maps[j - 1].graded_piece(&self.twists[j], &self.twists[j - 1], d)
    }
}

/// `β_{j,d}`: number of summands `S(-d)` in `F_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i32), usize>,
}

impl BettiTable {
    pub fn get(&self, j: usize, d: i32) -> usize {
        self.entries.get(&(j, d)).copied().unwrap_or(0)
    }

    pub fn total(&self, j: usize) -> usize {
        self.entries.iter().filter(|((i, _), _)| *i == j).map(|(_, v)| v).sum()
    }

    pub fn length(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn regularity(&self) -> i32 {
        self.entries.keys().map(|&(j, d)| d - j as i32).max().unwrap_or(0)
    }

    /// `Σ_j (-1)^j Σ_d β_{j,d} t^d`.
    pub fn hilbert_numerator(&self) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        for (&(j, d), &b) in &self.entries {
            let v = out.entry(d).or_insert(0i64);
            *v += if j % 2 == 0 { b as i64 } else { -(b as i64) };
            if *v == 0 {
                out.remove(&d);
            }
        }
        out
    }

    pub fn matches_series(&self, h: &HilbertSeries) -> bool {
        self.hilbert_numerator() == h.numerator
    }

    /// `homological index,degree,count` rows.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("index,degree,count\n");
        for (&(j, d), &b) in &self.entries {
            writeln!(s, "{j},{d},{b}").unwrap();
        }
        s
    }

    /// Macaulay2-style grid: column `j`, row `d - j`, dashes for zeros.
    pub fn to_text(&self) -> String {
        if self.entries.is_empty() {
            return "total:\n".into();
        }
        let len = self.length();
        let lo = self.entries.keys().map(|&(j, d)| d - j as i32).min().unwrap();
        let hi = self.regularity();
        let cells: Vec<Vec<String>> = (lo..=hi)
            .map(|r| {
                (0..=len)
                    .map(|j| match self.get(j, r + j as i32) {
                        0 => "-".to_string(),
                        b => b.to_string(),
                    })
                    .collect()
            })
            .collect();
        let totals: Vec<String> = (0..=len).map(|j| self.total(j).to_string()).collect();
        let w = cells.iter().flatten().chain(&totals).map(|c| c.len()).max().unwrap_or(1).max(len.to_string().len());
        let label = (hi.to_string().len().max(lo.to_string().len()) + 1).max(6);
        let mut s = String::new();
        write!(s, "{:>label$}", "").unwrap();
        for j in 0..=len {
            write!(s, " {j:>w$}").unwrap();
        }
        s.push('\n');
        write!(s, "{:>label$}", "total:").unwrap();
        for t in &totals {
            write!(s, " {t:>w$}").unwrap();
        }
        s.push('\n');
        for (k, row) in cells.iter().enumerate() {
            write!(s, "{:>label$}", format!("{}:", lo + k as i32)).unwrap();
            for c in row {
                write!(s, " {c:>w$}").unwrap();
            }
            s.push('\n');
        }
        s
    }
}

/// Numerical invariants of `S/I` read off its minimal resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ResolutionInvariants {
    pub nu: usize,
    pub alpha: i32,
    pub pd: usize,
    pub depth: i64,
    pub krull_dim: i64,
    pub cohen_macaulay: bool,
    pub regularity: i32,
}

impl ResolutionInvariants {
    pub fn of(ideal: &Ideal, res: &FreeResolution) -> Result<Self> {
        if res.rank(1) == 0 {
            return Err(Error::ZeroIdeal);
        }
        let pd = res.length();
        let depth = ideal.ring().nvars() as i64 - pd as i64;
        let krull_dim = ideal.krull_dim()?;
        Ok(ResolutionInvariants {
            nu: res.rank(1),
            alpha: *res.twists[1].iter().min().unwrap(),
            pd,
            depth,
            krull_dim,
            cohen_macaulay: depth == krull_dim,
            regularity: res.regularity(),
        })
    }
}

/// Minimal number of generators.
pub fn nu(ideal: &Ideal) -> Result<usize> {
    let r = free_resolution(ideal)?;
    match r.rank(1) {
        0 => Err(Error::ZeroIdeal),
        n => Ok(n),
    }
}

/// Least degree of a minimal generator.
pub fn alpha(ideal: &Ideal) -> Result<i32> {
    let r = free_resolution(ideal)?;
    r.twists.get(1).and_then(|t| t.iter().min().copied()).ok_or(Error::ZeroIdeal)
}

/// Projective dimension of `S/I`.
pub fn pd(ideal: &Ideal) -> Result<usize> {
    Ok(free_resolution(ideal)?.length())
}

pub fn depth_of_quotient(ideal: &Ideal) -> Result<i64> {
    Ok(ideal.ring().nvars() as i64 - pd(ideal)? as i64)
}

pub fn is_cohen_macaulay(ideal: &Ideal) -> Result<bool> {
    Ok(depth_of_quotient(ideal)? == ideal.krull_dim()?)
}

#[cfg(test)]
mod tests;
