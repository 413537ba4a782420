//! Exact analysis of invariant SU(3)-structures on six-dimensional Lie
//! algebras: torsion connections, curvature, instanton conditions and the
//! identities relating them.

#![allow(clippy::needless_range_loop, clippy::suspicious_arithmetic_impl)]

pub mod analysis;
pub mod catalog;
pub mod cli;
pub mod connection;
pub mod error;
pub mod exterior;
pub mod instanton;
pub mod liealg;
pub mod linalg;
pub mod scalar;
pub mod su3;

pub use error::Error;
pub use scalar::Scalar;
