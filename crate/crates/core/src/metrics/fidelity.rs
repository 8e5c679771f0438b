use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{psd_sqrt, trace_norm, ComplexMatrix};
use crate::scalar::Real;
use crate::state::DensityMatrix;

/// Root fidelity `√F(ρ₁, ρ₂) = Tr √(√ρ₂ ρ₁ √ρ₂)`, evaluated as the trace
/// norm `‖√ρ₁ √ρ₂‖₁`.
pub fn fidelity_root<T: Real>(rho1: &DensityMatrix<T>, rho2: &DensityMatrix<T>) -> Result<T> {
    if rho1.dim() != rho2.dim() {
        return Err(Error::DimensionMismatch { expected: rho1.dim(), found: rho2.dim() });
    }
    fidelity_from_roots(&psd_sqrt(rho1.matrix())?, &psd_sqrt(rho2.matrix())?)
}

/// `‖s₁ s₂‖₁` for precomputed square roots.
pub(crate) fn fidelity_from_roots<T: Real>(s1: &ComplexMatrix<T>, s2: &ComplexMatrix<T>) -> Result<T> {
    trace_norm(&s1.try_mul(s2)?)
}

/// Bures distance `D_B = √(Tr ρ₁ + Tr ρ₂ − 2√F)`.
///
/// A radicand below [`Real::ACCUMULATION`] is reported as distance zero;
/// at that scale it is eigensolver roundoff.
pub fn bures_distance<T: Real>(rho1: &DensityMatrix<T>, rho2: &DensityMatrix<T>) -> Result<T> {
    let root_f = fidelity_root(rho1, rho2)?;
    Ok(bures_from_fidelity(rho1.matrix().trace() + rho2.matrix().trace(), root_f))
}

pub(crate) fn bures_from_fidelity<T: Real>(trace_sum: Complex<T>, root_f: T) -> T {
    let radicand = trace_sum.re - T::lit(2.0) * root_f;
    if radicand <= T::ACCUMULATION || radicand.is_zero() {
        T::zero()
    } else {
        radicand.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::re;

    type Rho = DensityMatrix<f64>;

    #[test]
    fn self_fidelity_is_one() {
        let rho = Rho::pure(&[re(0.6), re(0.0), re(0.0), re(0.8)]).unwrap();
        assert!((fidelity_root(&rho, &rho).unwrap() - 1.0).abs() < 1e-9);
        assert_eq!(bures_distance(&rho, &rho).unwrap(), 0.0);
    }

    #[test]
    fn orthogonal_pure_states() {
        let zero = Rho::diagonal(&[1.0, 0.0]).unwrap();
        let one = Rho::diagonal(&[0.0, 1.0]).unwrap();
        assert_eq!(fidelity_root(&zero, &one).unwrap(), 0.0);
        assert!((bures_distance(&zero, &one).unwrap() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn commuting_states_classical_fidelity() {
        let a = Rho::diagonal(&[0.5, 0.5]).unwrap();
        let b = Rho::diagonal(&[1.0, 0.0]).unwrap();
        assert!((fidelity_root(&a, &b).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn dimension_mismatch() {
        let a = Rho::diagonal(&[0.5, 0.5]).unwrap();
        let b = Rho::diagonal(&[0.25; 4]).unwrap();
        assert!(matches!(fidelity_root(&a, &b), Err(Error::DimensionMismatch { .. })));
    }
}
