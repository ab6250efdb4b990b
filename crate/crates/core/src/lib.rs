//! Exact computations for the linear system `E^n p(H+n) = p(H-n) E^n`:
//! its periodic Gaussian elimination, the LU factors of the associated
//! infinite matrices, and the Jacobi polynomial identities behind them.

pub mod exactpoly;
pub mod infmat;
pub mod jacobi;
pub mod oresystem;
pub mod report;
