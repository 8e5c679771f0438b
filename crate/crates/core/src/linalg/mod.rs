//! Dense complex linear algebra for 2x2 through 8x8 operators.

mod eigen;
mod matrix;
mod spectral;
mod svd;

pub use eigen::{hermitian_eigendecomposition, hermitian_eigenvalues, EigenDecomposition, MAX_SWEEPS};
pub use matrix::{kron_all, kronecker_product, ComplexMatrix};
pub(crate) use spectral::clamp_psd_eigenvalue;
pub use spectral::{exp_minus_i, psd_sqrt, spectral_function, unitarity_deviation, unitary_conjugate};
pub use svd::{singular_values, trace_norm};
