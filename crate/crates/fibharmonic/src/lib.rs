//! Exact verification engine for a catalog of Fibonacci-harmonic summation
//! identities.
//!
//! Everything is computed in the ring Q[ln2] with arbitrary-precision
//! rational coefficients: no floating point appears anywhere on an
//! evaluation path, so equality checks are exact and repeated runs are
//! byte-identical.

pub mod cli;
pub mod exact;
pub mod harmonic;
pub mod registry;
pub mod report;
pub mod sequences;
pub mod transforms;
pub mod verifier;
