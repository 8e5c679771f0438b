use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::Real;
use crate::state::{partial_trace, DensityMatrix};

/// `E = Tr(H ρ)`.
pub fn internal_energy<T: Real>(rho: &DensityMatrix<T>, h: &ComplexMatrix<T>) -> Result<T> {
    if h.dim() != rho.dim() {
        return Err(Error::DimensionMismatch { expected: rho.dim(), found: h.dim() });
    }
    let deviation = h.hermiticity_deviation();
    if !(deviation <= T::STRUCTURAL) {
        return Err(Error::NotHermitian { deviation: deviation.as_f64() });
    }
    let m = rho.matrix();
    let n = m.dim();
    let mut e = Complex::<T>::zero();
    for i in 0..n {
        for j in 0..n {
            e += h[(i, j)] * m[(j, i)];
        }
    }
    if e.im.abs() > T::STRUCTURAL {
        return Err(Error::NonRealEnergy { imag: e.im.as_f64() });
    }
    Ok(e.re)
}

/// Energy of a single qubit, `Tr(H_i ρ_i)` with `ρ_i` its reduced state.
pub fn qubit_energy<T: Real>(rho: &DensityMatrix<T>, label: char, h: &ComplexMatrix<T>) -> Result<T> {
    internal_energy(&partial_trace(rho, &[label])?, h)
}

/// Heat absorbed between consecutive samples, `Q_k = E_{k+1} − E_k`.
pub fn heat_flow<T: Real>(energies: &[T]) -> Result<Vec<T>> {
    if energies.len() < 2 {
        return Err(Error::TooFewSamples { needed: 2, found: energies.len() });
    }
    Ok(energies.windows(2).map(|w| w[1] - w[0]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::re;
    use crate::state::thermal_state;

    #[test]
    fn maximally_mixed_energy() {
        let rho = DensityMatrix::diagonal(&[0.5, 0.5]).unwrap();
        let h = ComplexMatrix::<f64>::from_real_diagonal(&[0.0, 1.0]);
        assert_eq!(internal_energy(&rho, &h).unwrap(), 0.5);
    }

    #[test]
    fn thermal_energy() {
        let h = ComplexMatrix::<f64>::from_real_diagonal(&[0.0, 1.0]);
        let rho = thermal_state(1.0, &h).unwrap();
        assert!((internal_energy(&rho, &h).unwrap() - 0.268_941_421_370).abs() < 1e-11);
    }

    #[test]
    fn errors() {
        let rho = DensityMatrix::diagonal(&[0.5, 0.5]).unwrap();
        assert!(matches!(
            internal_energy(&rho, &ComplexMatrix::identity(4)),
            Err(Error::DimensionMismatch { .. })
        ));
        let skew = ComplexMatrix::from_rows(&[&[re(0.0), re(1.0)], &[re(0.0), re(0.0)]]).unwrap();
        assert!(matches!(internal_energy(&rho, &skew), Err(Error::NotHermitian { .. })));
        assert_eq!(heat_flow(&[1.0]).unwrap_err(), Error::TooFewSamples { needed: 2, found: 1 });
    }

    #[test]
    fn constant_series_has_no_heat() {
        assert_eq!(heat_flow(&[0.3, 0.3, 0.3]).unwrap(), vec![0.0, 0.0]);
    }
}
