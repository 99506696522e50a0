//! Seeded linear coordinate changes, used to realize general linear forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

const MAX_DRAWS: usize = 16;

/// An invertible substitution `x_i -> sum_j matrix[i][j] x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    pub matrix: Mat,
    pub seed: u64,
}

impl LinearChange {
    pub fn identity(nvars: usize) -> Self {
        LinearChange { matrix: Mat::identity(nvars), seed: 0 }
    }

    pub fn from_matrix(ring: &PolyRing, matrix: Mat) -> Result<Self> {
        if matrix.rows != ring.nvars() || matrix.cols != ring.nvars() {
            return Err(Error::DimensionMismatch { expected: ring.nvars(), got: matrix.rows });
        }
        if matrix.inverse(ring.field()).is_none() {
            return Err(Error::Precondition("coordinate change is singular".into()));
        }
        Ok(LinearChange { matrix, seed: 0 })
    }

    pub fn nvars(&self) -> usize {
        self.matrix.rows
    }

    /// Image of `x_i`.
    pub fn image(&self, ring: &PolyRing, i: usize) -> Polynomial {
        let terms = (0..self.nvars()).map(|j| (Monomial::var(j), self.matrix.get(i, j))).collect();
        Polynomial::from_terms(ring, terms)
    }

    pub fn inverse(&self, ring: &PolyRing) -> LinearChange {
        let m = self.matrix.inverse(ring.field()).expect("linear change is invertible");
        LinearChange { matrix: m, seed: self.seed }
    }
}

/// `m` linearly independent linear forms drawn from `seed`, together with
/// the change whose first `m` coordinate images they are.
pub fn random_linear_forms(ring: &PolyRing, m: usize, seed: u64) -> Result<(Vec<Polynomial>, LinearChange)> {
    let n = ring.nvars();
    if m > n {
        return Err(Error::DimensionMismatch { expected: n, got: m });
    }
    let f = ring.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_DRAWS {
        let mut mat = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                mat.set(i, j, rng.gen::<u32>() % f.characteristic());
            }
        }
        if mat.inverse(f).is_some() {
            let change = LinearChange { matrix: mat, seed };
            let forms = (0..m).map(|i| change.image(ring, i)).collect();
            return Ok((forms, change));
        }
    }
    Err(Error::DegenerateDraw { count: m, attempts: MAX_DRAWS })
}

/// Applies the substitution to `f`.
pub fn apply_change(f: &Polynomial, c: &LinearChange) -> Result<Polynomial> {
    let ring = f.ring();
    if c.nvars() != ring.nvars() {
        return Err(Error::DimensionMismatch { expected: ring.nvars(), got: c.nvars() });
    }
    let images: Vec<Polynomial> = (0..ring.nvars()).map(|i| c.image(ring, i)).collect();
    f.substitute(&images)
}
