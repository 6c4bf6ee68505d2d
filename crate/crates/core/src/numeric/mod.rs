//! Floating-point evaluation of the real, q-deformed and complex integrals and
//! their Gamma-ratio closed forms.

mod complex;
mod gamma;
mod params;
mod qtorus;
mod quadrature;
mod real;

pub use complex::{
    beta_radial, complex_pair_lhs, complex_pair_rhs, complex_pair_rhs_sigma, complex_pair_via_radial,
    complex_triple_sigma,
};
pub use gamma::{gamma_complex, gamma_real};
pub use params::{real3, ParameterSet};
pub use qtorus::{qtorus_lhs, qtorus_rhs};
pub use quadrature::{midpoint_nodes, tanh_sinh, QuadResult, QuadratureConfig};
pub use real::{rational_form_real, real_triple_lhs, real_triple_rhs, real_triple_rhs_forms};
