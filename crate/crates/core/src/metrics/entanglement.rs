use crate::error::{Error, Result};
use crate::linalg::{clamp_psd_eigenvalue, hermitian_eigenvalues, psd_sqrt};
use crate::scalar::Real;
use crate::state::operators::pauli_y;
use crate::state::DensityMatrix;

/// Wootters concurrence of a two-qubit state.
///
/// Uses the eigenvalues of the Hermitian `√ρ ρ̃ √ρ`, which coincide with
/// those of `ρ ρ̃` for `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`.
pub fn concurrence<T: Real>(rho: &DensityMatrix<T>) -> Result<T> {
    if rho.qubits() != 2 {
        return Err(Error::WrongArity { expected: 2, found: rho.qubits() });
    }
    let yy = pauli_y::<T>().kron(&pauli_y());
    let flipped = yy.try_mul(&rho.matrix().conj())?.try_mul(&yy)?;
    let s = psd_sqrt(rho.matrix())?;
    let r = s.try_mul(&flipped)?.try_mul(&s)?.hermitian_part();
    let mut roots = Vec::with_capacity(4);
    for l in hermitian_eigenvalues(&r)? {
        roots.push(clamp_psd_eigenvalue(l)?.sqrt());
    }
    // ascending: roots[3] is the largest
    let c = roots[3] - roots[2] - roots[1] - roots[0];
    Ok(c.max(T::zero()).min(T::one()))
}

/// `h(x) = −x log₂ x − (1−x) log₂(1−x)` with `h(0) = h(1) = 0`.
pub fn binary_entropy<T: Real>(x: T) -> T {
    let term = |p: T| if p <= T::zero() { T::zero() } else { -p * p.log2() };
    term(x) + term(T::one() - x)
}

/// Entanglement of formation `h(1/2 + √(1 − C²)/2)`, in ebits.
pub fn entanglement_of_formation<T: Real>(c: T) -> Result<T> {
    if !(c >= T::zero() && c <= T::one()) {
        return Err(Error::DomainError(format!("concurrence {c} outside [0, 1]")));
    }
    let half = T::lit(0.5);
    Ok(binary_entropy(half + half * (T::one() - c * c).max(T::zero()).sqrt()))
}
