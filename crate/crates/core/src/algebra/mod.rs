//! Exact arithmetic kernel.

mod laurent;
mod qpoly;
mod rational;

pub use laurent::{Exponent, LaurentPolynomial};
pub use qpoly::QPolynomial;
pub use rational::{binomial, checked_div, factorial, factorial_ratio, ExactRational};
