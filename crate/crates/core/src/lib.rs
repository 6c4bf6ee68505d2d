//! Exact and numeric evaluation of a family of triple-product integrals and the
//! constant-term identities behind them.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: exact rationals, polynomials in `q` over the integers and sparse
//!   three-variable Laurent polynomials with constant-term extraction.
//! - [`qseries`]: q-factorials, q-binomials, finite and analytic q-Pochhammer
//!   symbols, the q-Gamma function and the Kadell expansion.
//! - [`identities`]: both sides of every exact combinatorial identity (Dyson,
//!   Morris, Dixon, q-Dixon, the radial binomial convolution, ...).
//! - [`padic`]: p-adic scalars, the local Gamma factor, the hypergeometric
//!   integral `F`, the double integral `J`, the triple integral and a brute-force
//!   coset-enumeration oracle.
//! - [`numeric`]: floating-point quadrature of the real, q-deformed and complex
//!   integrals against their Gamma-ratio closed forms.

// `!(x > 0.0)` is used on purpose so NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod algebra;
pub mod error;
pub mod identities;
pub mod numeric;
pub mod padic;
pub mod qseries;

pub use error::{Error, Result};
