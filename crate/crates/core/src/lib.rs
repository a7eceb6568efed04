//! Exact computation of relative Macdonald polynomials `E^z_mu` in type GL_n.
//!
//! The expansion of `E^z_mu` is a sum over *set-valued tableaux* of shape
//! `mu`: each box `(r,c)` of the composition diagram holds a subset of
//! `{1, ..., u_mu(r,c)}`, and every tableau contributes one term
//!
//! ```text
//! q^maj t^cov * prod (1-t)/(1-q^sh t^ht) * x^T
//! ```
//!
//! with all statistics read off the tableau.  The same terms can be produced
//! by stepping an alcove walk for the n-periodic permutation `u_mu` through
//! its box-greedy reduced word and folding at a chosen subset of letters;
//! [`walks`] implements that second route and the crate's verification
//! machinery checks the two agree term by term.  Symmetric Macdonald
//! polynomials `P_lambda` are assembled by summing `E^z_lambda` over all
//! permutations `z` and normalizing monically.
//!
//! Coefficients are exact: sparse integer Laurent polynomials in `q`, `t`
//! over denominators that are multisets of binomial factors `(1 - q^a t^b)`.
//! No floating point is used anywhere.
//!
//! Modules:
//! - [`combinatorics`]: compositions, boxes, permutations, n-periodic
//!   permutations, inversions, the box-greedy reduced word.
//! - [`qt`]: exact coefficient arithmetic and polynomials in `x_1..x_n`.
//! - [`tableaux`]: set-valued tableaux, permutation sequences, statistics.
//! - [`walks`]: alcove walks and the walk-side term evaluation.
//! - [`macdonald`]: assembly of `E^z_mu` and `P_lambda`, specializations,
//!   and the identity-verification suite.

pub mod combinatorics;
pub mod error;
pub mod macdonald;
pub mod qt;
pub mod tableaux;
pub mod walks;

pub use error::{Error, Result};
