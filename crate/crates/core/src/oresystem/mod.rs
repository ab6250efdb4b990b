//! The Ore algebra `k<E, H : [H, E] = cE>` acting on itself, polynomials over
//! it in a central variable `t`, the equations `eq_n^k` derived from the
//! system `E^n p(H+n) = p(H-n) E^n`, and the operator-level matrix
//! representation of that system.

mod elem;
mod endop;
mod equations;
mod orepoly;
mod parse;
mod rep;
mod suite;

use thiserror::Error;

pub use elem::OreElem;
pub use endop::EndOp;
pub use equations::{
    corollary_c0_residual, corollary_c1_residual, degree_one_combination, degree_one_combination_unbalanced,
    eq_infty_residual, eq_residual, first_n_implies_all, id1_residual, id2_residual, id3_residual, recursion_residual,
    remark_second_form, remark_top_form, system_residual,
};
pub use orepoly::OrePoly;
pub use parse::{parse_ore_elem, parse_ore_poly};
pub use rep::{
    convert_coefficients, m_entry, m_monomial_entry, m_prime_entry, m_via_pochhammer_entry, rep_factorization_check,
    rep_row_residual, Basis,
};
pub use suite::{monomial_sweep, suite, DEFAULT_C_VALUES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OreError {
    #[error("elements of different algebras: c = {left} and c = {right}")]
    AlgebraMismatch { left: String, right: String },
    #[error("index error: n = {n}, k = {k} violates {requirement}")]
    Index { n: usize, k: usize, requirement: &'static str },
    #[error("{0}")]
    Domain(String),
    #[error("parse error at position {position} in {input:?}: {message}")]
    Parse { input: String, position: usize, message: String },
}
