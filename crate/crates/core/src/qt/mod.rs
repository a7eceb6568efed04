//! Exact coefficient arithmetic in `q` and `t`.
//!
//! Coefficients of Macdonald polynomials are kept in factored form: a sparse
//! integer Laurent polynomial numerator over a multiset of binomial
//! denominator factors `(1 - q^a t^b)`.  Every denominator arising from the
//! tableau formulas is of this shape, so cancellation reduces to exact trial
//! division and no multivariate gcd is ever needed.

mod poly;
mod rational;
mod xpoly;

pub use poly::QtPolynomial;
pub use rational::{BinomialFactor, FactoredRational, VarSubst};
pub use xpoly::{XMonomial, XPolynomial};
