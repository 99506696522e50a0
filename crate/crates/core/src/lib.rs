//! Commutative algebra over prime fields: Gröbner bases, minimal free
//! resolutions, local cohomology of projective schemes, and numerical
//! checks of liaison-theoretic bounds.

pub mod cohomology;
pub mod corpus;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod linear_change;
pub mod matrix;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod presentation;
pub mod resolution;
pub mod theorems;

pub use error::{Error, Result};
pub use field::Field;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{PolyRing, Polynomial};
