//! Exact arithmetic kernel: integer-coefficient polynomials in one
//! indeterminate and reduced rationals.

mod poly;
mod rational;

pub use poly::{IntPoly, NotDivisible, ParsePolyError};
pub use rational::Rational;
