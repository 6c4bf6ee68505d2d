//! p-adic scalars and the local integrals built from `ψ_p(x) = max(|x|_p, 1)`.

mod double;
mod gamma;
mod hypergeometric;
mod moebius;
mod scalar;
mod triple;

pub use double::{j_closed, j_closed_exact, j_oracle};
pub use gamma::{
    gamma_qp, gamma_qp_exact, gamma_qp_infinity, p_pow, psi_moment_exact, psi_moment_partial, reciprocal_gamma_qp,
    reciprocal_gamma_qp_exact,
};
pub use hypergeometric::{
    f_closed, f_closed_exact, f_closed_uncorrected_exact, f_oracle, f_oracle_depths, OracleValue, MAX_ORACLE_CELLS,
};
pub use moebius::{
    difference_identity_holds, k_matrix, moebius_act, psi_identity_holds, random_scalar, random_sl2_qp, random_sl2_zp,
    Mat2,
};
pub use scalar::{PAdicContext, PAdicScalar, Prime};
pub use triple::{triple_closed, triple_closed_exact, triple_via_j, triple_via_j_exact, ExponentTriple, TripleValue};
