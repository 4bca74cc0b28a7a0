//! Algebraic-geometry codes on plane curves `A(Y) = B(X)` with `A` additive.
//!
//! The crate builds one-point evaluation codes `C_L(D, s P∞)` over GF(q^2),
//! computes their true parameters by linear algebra (rank, duals, Gram
//! matrices, minimum distance), derives quantum stabilizer parameters from
//! Hermitian self-orthogonal codes, and adjudicates a fixed registry of
//! published claims about these codes against those computations.

pub mod gf;
pub mod matrix;
pub mod curve;
pub mod rr;
pub mod code;
pub mod quantum;
pub mod config;
pub mod claims;
pub mod cli;
