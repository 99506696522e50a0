//! Exact linear algebra over `F_p`: dense matrices for small maps and a
//! sparse row-echelon structure for the degreewise pieces.

use std::collections::{BTreeMap, HashMap};

use crate::field::Field;

/// Sparse vector: `(column, value)` pairs, columns strictly increasing,
/// values nonzero.
pub type SparseVec = Vec<(u32, u32)>;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat, f: Field) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        let p = f.characteristic() as u64;
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc = (acc + self.get(r, k) as u64 * other.get(k, c) as u64) % p;
                }
                out.set(r, c, acc as u32);
            }
        }
        out
    }

    /// Linear combination `sum_k coeffs[k] * mats[k]`.
    pub fn combination(mats: &[&Mat], coeffs: &[u32], f: Field) -> Mat {
        let mut out = Mat::zeros(mats[0].rows, mats[0].cols);
        for (m, &c) in mats.iter().zip(coeffs) {
            for (o, &v) in out.data.iter_mut().zip(&m.data) {
                *o = f.add(*o, f.mul(c, v));
            }
        }
        out
    }

    pub fn apply(&self, v: &[u32], f: Field) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = f.characteristic() as u64;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..self.cols {
                    acc = (acc + self.get(r, c) as u64 * v[c] as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns_sparse(&self) -> Vec<SparseVec> {
        (0..self.cols).map(|c| dense_to_sparse(&self.column(c))).collect()
    }

    pub fn rank(&self, f: Field) -> usize {
        let mut e = Echelon::new(f);
        for c in 0..self.cols {
            e.insert(&dense_to_sparse(&self.column(c)));
        }
        e.rank()
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self, f: Field) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| a.get(r, col) != 0)?;
            if piv != col {
                for c in 0..n {
                    let (x, y) = (a.get(piv, c), a.get(col, c));
                    a.set(piv, c, y);
                    a.set(col, c, x);
                    let (x, y) = (inv.get(piv, c), inv.get(col, c));
                    inv.set(piv, c, y);
                    inv.set(col, c, x);
                }
            }
            let s = f.inv(a.get(col, col));
            for c in 0..n {
                a.set(col, c, f.mul(a.get(col, c), s));
                inv.set(col, c, f.mul(inv.get(col, c), s));
            }
            for r in 0..n {
                if r != col && a.get(r, col) != 0 {
                    let m = a.get(r, col);
                    for c in 0..n {
                        a.set(r, c, f.sub_mul(a.get(r, c), m, a.get(col, c)));
                        inv.set(r, c, f.sub_mul(inv.get(r, c), m, inv.get(col, c)));
                    }
                }
            }
        }
        Some(inv)
    }
}

pub fn dense_to_sparse(v: &[u32]) -> SparseVec {
    v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i as u32, x)).collect()
}

pub fn sparse_to_dense(v: &SparseVec, n: usize) -> Vec<u32> {
    let mut out = vec![0; n];
    for &(c, x) in v {
        out[c as usize] = x;
    }
    out
}

/// Sum `sum_k c_k v_k` of sparse vectors.
pub fn sparse_combination(f: Field, parts: &[(u32, &SparseVec)]) -> SparseVec {
    let mut acc: BTreeMap<u32, u32> = BTreeMap::new();
    for &(c, v) in parts {
        for &(col, x) in v {
            let e = acc.entry(col).or_insert(0);
            *e = f.add(*e, f.mul(c, x));
        }
    }
    acc.into_iter().filter(|&(_, x)| x != 0).collect()
}

/// Incrementally built row-echelon form. Every stored row has leading
/// coefficient 1 at its pivot column and no entries left of it.
///
/// Columns at or beyond `pivot_limit` never become pivots; they carry
/// bookkeeping (e.g. the combination of inputs that produced a row).
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    pivot_limit: u32,
    rows: Vec<SparseVec>,
    pivot_row: HashMap<u32, usize>,
}

/// Result of reducing a vector against an [`Echelon`].
pub struct Reduction {
    /// Remaining entries, in normal form with respect to the pivots.
    pub remainder: SparseVec,
    /// `(row index, coefficient)` such that `v = sum coeff * row + remainder`.
    pub used: Vec<(usize, u32)>,
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Self::with_limit(field, u32::MAX)
    }

    pub fn with_limit(field: Field, pivot_limit: u32) -> Self {
        Echelon { field, pivot_limit, rows: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn pivot_of(&self, i: usize) -> u32 {
        self.rows[i][0].0
    }

    pub fn reduce(&self, v: &SparseVec) -> Reduction {
        let f = self.field;
        let mut acc: BTreeMap<u32, u32> = v.iter().copied().collect();
        let mut remainder = Vec::new();
        let mut used = Vec::new();
        while let Some((&col, &x)) = acc.iter().next() {
            acc.remove(&col);
            if x == 0 {
                continue;
            }
            if col >= self.pivot_limit {
                remainder.push((col, x));
                remainder.extend(acc.iter().filter(|(_, &y)| y != 0).map(|(&c, &y)| (c, y)));
                break;
            }
            match self.pivot_row.get(&col) {
                Some(&r) => {
                    used.push((r, x));
                    for &(c, y) in &self.rows[r][1..] {
                        let e = acc.entry(c).or_insert(0);
                        *e = f.sub_mul(*e, x, y);
                    }
                }
                None => remainder.push((col, x)),
            }
        }
        Reduction { remainder, used }
    }

    /// Leading column of the remainder that can serve as a pivot.
    fn leading_pivot(&self, rem: &SparseVec) -> Option<(u32, u32)> {
        rem.first().copied().filter(|&(c, _)| c < self.pivot_limit)
    }

    /// Inserts `v` if it is independent of the stored rows (in the pivot
    /// columns). Returns the new row index.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let red = self.reduce(v);
        self.insert_reduced(red.remainder)
    }

    pub fn insert_reduced(&mut self, rem: SparseVec) -> Option<usize> {
        let (col, lead) = self.leading_pivot(&rem)?;
        let s = self.field.inv(lead);
        let row: SparseVec = rem.into_iter().map(|(c, x)| (c, self.field.mul(x, s))).collect();
        self.rows.push(row);
        self.pivot_row.insert(col, self.rows.len() - 1);
        Some(self.rows.len() - 1)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).remainder.iter().all(|&(c, _)| c >= self.pivot_limit)
    }
}

/// Kernel of the linear map sending basis vector `k` to `images[k]`
/// (vectors in a space with fewer than `2^31` columns). Returns a basis of
/// the kernel as sparse vectors in the source coordinates.
pub fn kernel(field: Field, images: &[SparseVec]) -> Vec<SparseVec> {
    const OFFSET: u32 = 1 << 31;
    let mut e = Echelon::with_limit(field, OFFSET);
    let mut out = Vec::new();
    for (k, img) in images.iter().enumerate() {
        let mut v = img.clone();
        v.push((OFFSET + k as u32, 1));
        let red = e.reduce(&v);
        if red.remainder.first().is_some_and(|&(c, _)| c >= OFFSET) {
            out.push(red.remainder.iter().map(|&(c, x)| (c - OFFSET, x)).collect());
        } else {
            e.insert_reduced(red.remainder);
        }
    }
    out
}

pub fn rank_of(field: Field, vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new(field);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// A subquotient `sub / den` of a coordinate space, where `den ⊆ sub`.
/// Basis representatives are vectors of `sub`; `coords` expresses any
/// vector of `sub` in that basis modulo `den`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ech: Echelon,
    /// For each echelon row: `Some(j)` if it is quotient basis vector `j`.
    tag: Vec<Option<usize>>,
    reps: Vec<SparseVec>,
}

impl Subquotient {
    pub fn new(field: Field, sub: &[SparseVec], den: &[SparseVec]) -> Self {
        let mut ech = Echelon::new(field);
        let mut tag = Vec::new();
        for v in den {
            if ech.insert(v).is_some() {
                tag.push(None);
            }
        }
        let mut reps = Vec::new();
        for v in sub {
            if let Some(i) = ech.insert(v) {
                tag.push(Some(reps.len()));
                reps.push(ech.row(i).clone());
            }
        }
        Subquotient { ech, tag, reps }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[SparseVec] {
        &self.reps
    }

    /// Coordinates of `v` (assumed to lie in `sub`) in the quotient basis.
    pub fn coords(&self, v: &SparseVec) -> Vec<u32> {
        let red = self.ech.reduce(v);
        debug_assert!(red.remainder.is_empty(), "vector outside the subspace");
        let mut out = vec![0; self.reps.len()];
        for (r, c) in red.used {
            if let Some(j) = self.tag[r] {
                out[j] = c;
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.ech.contains(v)
    }
}
