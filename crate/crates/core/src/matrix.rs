//! Homogeneous polynomial matrices between graded free modules.

use std::collections::HashMap;

use crate::groebner::{ModuleOrder, Term, Vector};
use crate::linalg::Mat;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// A map `⊕ S(-src[c]) -> ⊕ S(-tgt[r])`; column `c` is the image of `e_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub ring: PolyRing,
    /// Row-major entries.
    pub entries: Vec<Vec<Polynomial>>,
    pub rows: usize,
    pub cols: usize,
}

impl PolyMatrix {
    pub fn zeros(ring: &PolyRing, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), entries: vec![vec![ring.zero(); cols]; rows], rows, cols }
    }

    pub fn from_columns(ring: &PolyRing, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(ring, rows, columns.len());
        for (c, v) in columns.iter().enumerate() {
            let mut parts: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); rows];
            for &(t, x) in &v.terms {
                parts[t.comp as usize].push((t.mon, x));
            }
            for (r, p) in parts.into_iter().enumerate() {
                m.entries[r][c] = Polynomial::from_terms(ring, p);
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r][c]
    }

    pub fn column(&self, c: usize, order: &ModuleOrder) -> Vector {
        let terms = (0..self.rows)
            .flat_map(|r| self.entries[r][c].terms().iter().map(move |&(m, x)| (Term::new(r as u32, m), x)))
            .collect();
        Vector::from_terms(terms, order, self.ring.field())
    }

    pub fn columns(&self, order: &ModuleOrder) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c, order)).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = Self::zeros(&self.ring, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c][r] = self.entries[r][c].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(&self.ring, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other.entries[k][c];
                    if !b.is_zero() {
                        out.entries[r][c] = out.entries[r][c].add(&a.mul(b).unwrap()).unwrap();
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|e| e.is_zero()))
    }

    /// A nonzero constant entry, if any.
    pub fn find_unit(&self) -> Option<(usize, usize)> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = &self.entries[r][c];
                if !e.is_zero() && e.is_constant() {
                    return Some((r, c));
                }
            }
        }
        None
    }

    pub fn remove_row(&mut self, r: usize) {
        self.entries.remove(r);
        self.rows -= 1;
    }

    pub fn remove_col(&mut self, c: usize) {
        for row in &mut self.entries {
            row.remove(c);
        }
        self.cols -= 1;
    }

    /// The linear map in degree `d`. Bases of both sides are the pairs
    /// `(component, monomial)` enumerated by [`graded_basis`].
    pub fn graded_piece(&self, src: &[i32], tgt: &[i32], d: i32) -> Mat {
        let nv = self.ring.nvars();
        let f = self.ring.field();
        let (tb, tindex) = graded_basis(nv, tgt, d);
        let (sb, _) = graded_basis(nv, src, d);
        let mut m = Mat::zeros(tb.len(), sb.len());
        for (col, (c, mon)) in sb.iter().enumerate() {
            for r in 0..self.rows {
                for &(em, x) in self.entries[r][*c].terms() {
                    let t = em.mul(mon);
                    let row = tindex[&(r, t)];
                    m.set(row, col, f.add(m.get(row, col), x));
                }
            }
        }
        m
    }
}

type BasisIndex = HashMap<(usize, Monomial), usize>;

/// Monomial basis of `(⊕ S(-twists[i]))_d`.
pub fn graded_basis(nvars: usize, twists: &[i32], d: i32) -> (Vec<(usize, Monomial)>, BasisIndex) {
    let mut basis = Vec::new();
    for (i, &a) in twists.iter().enumerate() {
        if d >= a {
            for m in Monomial::all_of_degree(nvars, (d - a) as u32) {
                basis.push((i, m));
            }
        }
    }
    let index = basis.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    (basis, index)
}
