//! Density-matrix simulation of qubit heat exchange.
//!
//! The crate evolves small (2- and 3-qubit) closed systems under
//! excitation-exchange Hamiltonians and tracks, alongside the internal
//! energy of every qubit, the *state complexity* of the evolving state: its
//! minimal Bures distance to the diagonal states sharing its spectrum.
//!
//! Numerical kernels ([`linalg`], [`state`], [`dynamics`], [`metrics`]) are
//! generic over [`Real`] (f32 or f64). The [`experiments`] layer is f64.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dynamics;
pub mod error;
pub mod experiments;
pub mod linalg;
pub mod metrics;
pub mod sampling;
pub mod scalar;
pub mod state;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, EigenDecomposition};
pub use scalar::Real;
pub use state::{DensityMatrix, QubitLabeling};

/// Complex scalar in double precision.
pub type C64 = num_complex::Complex<f64>;
/// Complex scalar in single precision.
pub type C32 = num_complex::Complex<f32>;

/// Double-precision matrix.
pub type Mat64 = ComplexMatrix<f64>;
/// Single-precision matrix.
pub type Mat32 = ComplexMatrix<f32>;
/// Double-precision density matrix.
pub type Rho64 = DensityMatrix<f64>;
/// Single-precision density matrix.
pub type Rho32 = DensityMatrix<f32>;
/// Double-precision eigen-decomposition.
pub type Eigen64 = EigenDecomposition<f64>;
