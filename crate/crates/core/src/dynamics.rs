//! Interaction Hamiltonians, propagators and unitary evolution (ħ = 1).

use crate::error::{Error, Result};
use crate::linalg::{exp_minus_i, unitarity_deviation, unitary_conjugate, ComplexMatrix};
use crate::scalar::Real;
use crate::state::operators::{embed, pauli_x, pauli_y};
use crate::state::DensityMatrix;

/// A Hermitian generator together with an evolution time.
#[derive(Debug, Clone)]
pub struct PropagatorSpec<T: Real> {
    hamiltonian: ComplexMatrix<T>,
    duration: T,
}

impl<T: Real> PropagatorSpec<T> {
    pub fn new(hamiltonian: ComplexMatrix<T>, duration: T) -> Result<Self> {
        let deviation = hamiltonian.hermiticity_deviation();
        if !(deviation <= T::STRUCTURAL) {
            return Err(Error::NotHermitian { deviation: deviation.as_f64() });
        }
        Ok(Self { hamiltonian, duration })
    }

    pub fn hamiltonian(&self) -> &ComplexMatrix<T> {
        &self.hamiltonian
    }

    pub fn duration(&self) -> T {
        self.duration
    }
}

/// `σ_x ⊗ σ_y − σ_y ⊗ σ_x`, nonzero only on the `{|01⟩, |10⟩}` block.
fn exchange_generator<T: Real>() -> ComplexMatrix<T> {
    pauli_x::<T>().kron(&pauli_y()) - pauli_y::<T>().kron(&pauli_x())
}

/// `(π/2)(σ_x^A σ_y^B − σ_y^A σ_x^B)`.
pub fn effective_hamiltonian_2q<T: Real>() -> ComplexMatrix<T> {
    exchange_generator::<T>().scale_real(T::FRAC_PI_2())
}

/// `(σ_x σ_y − σ_y σ_x)/2` on a pair of neighbouring qubits.
pub fn pair_hamiltonian<T: Real>() -> ComplexMatrix<T> {
    exchange_generator::<T>().scale_real(T::lit(0.5))
}

/// `t·(H_AB ⊗ I_C) + s·(I_A ⊗ H_BC)` in `[A, B, C]` order.
pub fn interaction_hamiltonian_3q<T: Real>(t: T, s: T) -> ComplexMatrix<T> {
    let h = pair_hamiltonian::<T>();
    let id = ComplexMatrix::<T>::identity(2);
    h.kron(&id).scale_real(t) + id.kron(&h).scale_real(s)
}

/// Sum of identical local Hamiltonians `Σ_i H_i` over `n` qubits.
pub fn total_local_hamiltonian<T: Real>(local: &ComplexMatrix<T>, n: usize) -> ComplexMatrix<T> {
    (0..n).fold(ComplexMatrix::zeros(1 << n), |acc, p| acc + embed(local, p, n))
}

/// `exp(−i·duration·H)`.
pub fn propagator<T: Real>(spec: &PropagatorSpec<T>) -> Result<ComplexMatrix<T>> {
    exp_minus_i(&spec.hamiltonian, spec.duration)
}

/// `U ρ U†`, revalidated.
pub fn evolve<T: Real>(rho0: &DensityMatrix<T>, u: &ComplexMatrix<T>) -> Result<DensityMatrix<T>> {
    if u.dim() != rho0.dim() {
        return Err(Error::DimensionMismatch { expected: rho0.dim(), found: u.dim() });
    }
    let deviation = unitarity_deviation(u);
    if !(deviation <= T::DERIVED) {
        return Err(Error::NotUnitary { deviation: deviation.as_f64() });
    }
    let m = unitary_conjugate(u, rho0.matrix())?;
    DensityMatrix::with_labels(m, rho0.labels().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{c, re};
    use crate::state::operators::pauli_z;
    use crate::state::{local_hamiltonian_2q, local_hamiltonian_3q, two_qubit_initial};
    use num_complex::Complex;
    use std::f64::consts::PI;

    type M = ComplexMatrix<f64>;

    #[test]
    fn effective_hamiltonian_entries() {
        let h = effective_hamiltonian_2q::<f64>();
        assert!((h[(1, 2)] - c(0.0, PI)).norm() < 1e-15);
        assert!((h[(2, 1)] - c(0.0, -PI)).norm() < 1e-15);
        for i in 0..4 {
            for j in 0..4 {
                if !matches!((i, j), (1, 2) | (2, 1)) {
                    assert_eq!(h[(i, j)].norm(), 0.0, "({i},{j})");
                }
            }
        }
        assert_eq!(h.trace().norm(), 0.0);
        assert!(h.is_hermitian(0.0));
    }

    #[test]
    fn effective_hamiltonian_performs_no_work() {
        let h = effective_hamiltonian_2q::<f64>();
        let local = total_local_hamiltonian(&local_hamiltonian_2q(), 2);
        assert!(h.commutator(&local).unwrap().frobenius_norm() < 1e-12);
    }

    #[test]
    fn three_qubit_interaction() {
        assert!(interaction_hamiltonian_3q::<f64>(0.0, 0.0).approx_eq(&M::zeros(8), 0.0));
        let h = interaction_hamiltonian_3q::<f64>(1.0, 0.0);
        assert!(h.approx_eq(&pair_hamiltonian::<f64>().kron(&M::identity(2)), 0.0));
        let z_total = total_local_hamiltonian(&pauli_z(), 3);
        for (t, s) in [(0.3, -1.7), (2.0, 5.0), (-4.0, 0.1)] {
            let h = interaction_hamiltonian_3q::<f64>(t, s);
            assert!(h.commutator(&z_total).unwrap().frobenius_norm() < 1e-12);
            let local = total_local_hamiltonian(&local_hamiltonian_3q(), 3);
            assert!(h.commutator(&local).unwrap().frobenius_norm() < 1e-12);
        }
    }

    #[test]
    fn zero_duration_is_identity() {
        let spec = PropagatorSpec::new(effective_hamiltonian_2q::<f64>(), 0.0).unwrap();
        assert!(propagator(&spec).unwrap().approx_eq(&M::identity(4), 1e-15));
    }

    #[test]
    fn pauli_z_propagator() {
        let t = 1.3;
        let spec = PropagatorSpec::new(pauli_z::<f64>(), t).unwrap();
        let expected = M::from_diagonal(&[Complex::from_polar(1.0, -t), Complex::from_polar(1.0, t)]);
        assert!(propagator(&spec).unwrap().approx_eq(&expected, 1e-15));
    }

    #[test]
    fn group_law() {
        let h = interaction_hamiltonian_3q::<f64>(0.7, -1.2);
        let u = |tau| propagator(&PropagatorSpec::new(h.clone(), tau).unwrap()).unwrap();
        let (a, b) = (0.37, 1.91);
        assert!((&u(a) * &u(b)).distance(&u(a + b)) < 1e-9);
    }

    #[test]
    fn non_hermitian_spec_rejected() {
        let m = M::from_rows(&[&[re(0.0), re(1.0)], &[re(0.0), re(0.0)]]).unwrap();
        assert!(PropagatorSpec::new(m, 1.0).is_err());
    }

    #[test]
    fn evolve_identity_and_errors() {
        let rho = two_qubit_initial(1.0, 2.0, re(0.1)).unwrap();
        let same = evolve(&rho, &M::identity(4)).unwrap();
        assert!(same.matrix().approx_eq(rho.matrix(), 0.0));
        assert!(matches!(evolve(&rho, &M::identity(2)), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(evolve(&rho, &M::identity(4).scale_real(1.1)), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn equal_temperatures_are_stationary() {
        let rho = two_qubit_initial(1.5, 1.5, re(0.0)).unwrap();
        let h = effective_hamiltonian_2q::<f64>();
        for t in [0.1, 0.25, 0.8] {
            let u = propagator(&PropagatorSpec::new(h.clone(), t).unwrap()).unwrap();
            assert!(evolve(&rho, &u).unwrap().matrix().distance(rho.matrix()) < 1e-12);
        }
    }
}
