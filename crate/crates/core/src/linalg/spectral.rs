use num_complex::Complex;

use super::{hermitian_eigendecomposition, ComplexMatrix};
use crate::error::{Error, Result};
use crate::scalar::{re, Real};

/// Applies `f` to a Hermitian matrix through its eigenvalues:
/// `V diag(f(λ)) V†`.
pub fn spectral_function<T: Real>(
    h: &ComplexMatrix<T>,
    f: impl Fn(T) -> Complex<T>,
) -> Result<ComplexMatrix<T>> {
    Ok(hermitian_eigendecomposition(h)?.reconstruct_with(f))
}

/// Clamps an eigenvalue of a nominally PSD matrix at zero. Values below
/// `-STRUCTURAL` are an error.
pub(crate) fn clamp_psd_eigenvalue<T: Real>(lambda: T) -> Result<T> {
    if lambda < -T::STRUCTURAL {
        return Err(Error::NotPositive { eigenvalue: lambda.as_f64() });
    }
    Ok(lambda.max(T::zero()))
}

/// The unique positive semidefinite square root.
pub fn psd_sqrt<T: Real>(h: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let eig = hermitian_eigendecomposition(h)?;
    for &l in &eig.eigenvalues {
        clamp_psd_eigenvalue(l)?;
    }
    Ok(eig.reconstruct_with(|l| re(l.max(T::zero()).sqrt())))
}

/// `exp(-i τ H)` for Hermitian `H`.
pub fn exp_minus_i<T: Real>(h: &ComplexMatrix<T>, tau: T) -> Result<ComplexMatrix<T>> {
    spectral_function(h, |l| Complex::from_polar(T::one(), -tau * l))
}

/// `U A U†`.
pub fn unitary_conjugate<T: Real>(
    u: &ComplexMatrix<T>,
    a: &ComplexMatrix<T>,
) -> Result<ComplexMatrix<T>> {
    if u.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: u.dim(), found: a.dim() });
    }
    u.try_mul(a)?.try_mul(&u.adjoint())
}

/// `‖U†U − I‖_F`.
pub fn unitarity_deviation<T: Real>(u: &ComplexMatrix<T>) -> T {
    (&u.adjoint() * u).distance(&ComplexMatrix::identity(u.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    type M = ComplexMatrix<f64>;

    fn pauli_x() -> M {
        M::from_rows(&[&[re(0.0), re(1.0)], &[re(1.0), re(0.0)]]).unwrap()
    }

    #[test]
    fn sqrt_of_identity() {
        let s = spectral_function(&M::identity(2), |l: f64| re(l.sqrt())).unwrap();
        assert!(s.approx_eq(&M::identity(2), 1e-15));
    }

    #[test]
    fn exp_of_pauli_z() {
        let z = M::from_real_diagonal(&[1.0, -1.0]);
        let t = 0.7;
        let u = exp_minus_i(&z, t).unwrap();
        let expected = M::from_diagonal(&[
            Complex::from_polar(1.0, -t),
            Complex::from_polar(1.0, t),
        ]);
        assert!(u.approx_eq(&expected, 1e-15));
    }

    #[test]
    fn psd_sqrt_squares_back() {
        let rho = M::from_rows(&[
            &[re(0.5), c(0.1, 0.2), re(0.0), re(0.05)],
            &[c(0.1, -0.2), re(0.3), c(0.0, 0.05), re(0.0)],
            &[re(0.0), c(0.0, -0.05), re(0.15), re(0.02)],
            &[re(0.05), re(0.0), re(0.02), re(0.05)],
        ])
        .unwrap();
        let s = psd_sqrt(&rho).unwrap();
        assert!((&s * &s).distance(&rho) < 1e-9);
        assert!(s.is_hermitian(1e-12));
    }

    #[test]
    fn psd_sqrt_clamps_roundoff_negative() {
        let rho = M::from_real_diagonal(&[1.0, -1e-12]);
        let s = psd_sqrt(&rho).unwrap();
        assert_eq!(s[(1, 1)], re(0.0));
    }

    #[test]
    fn psd_sqrt_rejects_negative() {
        let rho = M::from_real_diagonal(&[1.0, -1e-6]);
        assert!(matches!(psd_sqrt(&rho), Err(Error::NotPositive { .. })));
    }

    #[test]
    fn conjugate_by_identity() {
        let a = M::from_rows(&[&[re(1.0), c(2.0, 1.0)], &[c(2.0, -1.0), re(3.0)]]).unwrap();
        assert!(unitary_conjugate(&M::identity(2), &a).unwrap().approx_eq(&a, 0.0));
    }

    #[test]
    fn bit_flip_swaps_diagonal() {
        let a = M::from_real_diagonal(&[0.25, 0.75]);
        let out = unitary_conjugate(&pauli_x(), &a).unwrap();
        assert!(out.approx_eq(&M::from_real_diagonal(&[0.75, 0.25]), 0.0));
    }

    #[test]
    fn conjugate_dimension_mismatch() {
        assert!(matches!(
            unitary_conjugate(&M::identity(2), &M::identity(4)),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
