//! Exact multivariate polynomial and rational-function arithmetic over the
//! integers.
//!
//! Monomials are ordered lexicographically with `x1 > x2 > ... > y1 > y2 > ...`
//! (a larger exponent on an earlier variable makes a larger monomial), and
//! polynomials print their terms from largest to smallest, e.g.
//! `3*x1^2*y2 - x2 + 7`.

mod monomial;
mod polynomial;
mod rational;

pub use monomial::{Monomial, VarKind, Variable};
pub use polynomial::Polynomial;
pub use rational::RationalFunction;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not an exact multiple of the divisor")]
    NotDivisible,
    #[error("no value assigned to variable {0}")]
    UnassignedVariable(Variable),
}
