pub mod combinat;
mod element;
mod error;
pub mod isotropic;
pub mod puzzle;
pub mod qpoly;
mod report;
pub mod scalar;
pub mod typea;
pub mod verify;

pub use element::{QuantumElement, Space};
pub use error::{Error, Result};
pub use report::Report;
pub use scalar::Scalar;

/// Quantum cohomology elements with machine-integer coefficients.
pub type QhElem = QuantumElement<i64>;
/// Quantum cohomology elements with arbitrary-precision coefficients.
pub type QhElemBig = QuantumElement<num_bigint::BigInt>;

/// Version stamp for persisted results.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
