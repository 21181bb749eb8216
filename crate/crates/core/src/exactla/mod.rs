//! Exact rational dense linear algebra.
//!
//! [`RatMatrix`] is a row-major matrix of `BigRational`s. Elimination is
//! fraction-free (Bareiss) in the forward phase; see [`RatMatrix::rref_with`].
//! [`modular`] holds the word-size prime-field routines used as certified
//! lower bounds, and [`poly`] the characteristic-polynomial and rational-root
//! machinery.

mod matrix;
pub mod modular;
pub mod poly;

pub use matrix::{independent_subset, kernel_from_rref, RatMatrix, Rref};
pub use poly::{charpoly, QPoly};
