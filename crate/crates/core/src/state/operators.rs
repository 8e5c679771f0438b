//! Single-qubit operators in the computational basis, `σ_z|0⟩ = +|0⟩`.

use crate::linalg::ComplexMatrix;
use crate::scalar::{c, re, Real};

pub fn identity<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::identity(2)
}

pub fn pauli_x<T: Real>() -> ComplexMatrix<T> {
    let (o, l) = (re(T::zero()), re(T::one()));
    ComplexMatrix::from_rows(&[&[o, l], &[l, o]]).expect("2x2")
}

pub fn pauli_y<T: Real>() -> ComplexMatrix<T> {
    let o = re(T::zero());
    ComplexMatrix::from_rows(&[&[o, c(T::zero(), -T::one())], &[c(T::zero(), T::one()), o]])
        .expect("2x2")
}

pub fn pauli_z<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::from_real_diagonal(&[T::one(), -T::one()])
}

/// Places `op` on qubit `position` of an `n`-qubit register.
pub fn embed<T: Real>(op: &ComplexMatrix<T>, position: usize, n: usize) -> ComplexMatrix<T> {
    assert!(position < n, "qubit position out of range");
    let left = ComplexMatrix::identity(1 << position);
    let right = ComplexMatrix::identity(1 << (n - position - 1));
    left.kron(op).kron(&right)
}
