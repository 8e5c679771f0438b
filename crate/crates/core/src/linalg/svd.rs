//! Singular values by one-sided (Hestenes) Jacobi orthogonalisation.
//!
//! Column pairs are rotated until mutually orthogonal; the column norms are
//! then the singular values. Small singular values come out with absolute
//! error near `ε‖A‖`, which keeps nuclear norms accurate for nearly
//! rank-deficient products.

use num_complex::Complex;
use num_traits::Zero;

use super::{ComplexMatrix, MAX_SWEEPS};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Singular values in descending order.
pub fn singular_values<T: Real>(m: &ComplexMatrix<T>) -> Result<Vec<T>> {
    let n = m.dim();
    if m.as_slice().iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::DomainError("singular values of a non-finite matrix".into()));
    }
    // Work on columns stored contiguously.
    let mut cols: Vec<Vec<Complex<T>>> = (0..n).map(|j| (0..n).map(|i| m[(i, j)]).collect()).collect();
    let tol = T::epsilon() * T::lit(n as f64);
    let mut worst = T::zero();
    for _ in 0..MAX_SWEEPS {
        worst = T::zero();
        for p in 0..n {
            for q in p + 1..n {
                let alpha: T = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: T = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma = cols[p].iter().zip(&cols[q]).fold(Complex::<T>::zero(), |acc, (a, b)| acc + a.conj() * b);
                let g = gamma.norm();
                if g.is_zero() || g <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                worst = worst.max(g / (alpha * beta).sqrt());
                let phase = gamma / g;
                let zeta = (beta - alpha) / (T::lit(2.0) * g);
                let sign = if zeta < T::zero() { -T::one() } else { T::one() };
                let t = sign / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                let (left, right) = cols.split_at_mut(q);
                for (x, y) in left[p].iter_mut().zip(right[0].iter_mut()) {
                    let (a, b) = (*x, *y);
                    *x = a.scale(c) - b * phase.conj().scale(s);
                    *y = a * phase.scale(s) + b.scale(c);
                }
            }
        }
        if worst.is_zero() {
            let mut sv: Vec<T> = cols.iter().map(|c| c.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()).collect();
            sv.sort_by(|a, b| b.partial_cmp(a).expect("finite singular values"));
            return Ok(sv);
        }
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS, off_norm: worst.as_f64() })
}

/// Trace (nuclear) norm `Σ σ_k`.
pub fn trace_norm<T: Real>(m: &ComplexMatrix<T>) -> Result<T> {
    Ok(singular_values(m)?.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eigenvalues;
    use crate::scalar::{c, re};

    type M = ComplexMatrix<f64>;

    #[test]
    fn diagonal_and_permuted() {
        let m = M::from_rows(&[&[re(0.0), re(-3.0)], &[c(0.0, 2.0), re(0.0)]]).unwrap();
        assert_eq!(singular_values(&m).unwrap(), vec![3.0, 2.0]);
        assert_eq!(singular_values(&M::zeros(4)).unwrap(), vec![0.0; 4]);
    }

    #[test]
    fn matches_gram_spectrum() {
        let m = M::from_rows(&[
            &[c(1.0, 0.5), re(2.0), c(0.0, -1.0)],
            &[re(0.3), c(-1.0, 1.0), re(0.7)],
            &[c(0.2, 0.2), re(0.0), c(1.5, -0.5)],
        ])
        .unwrap();
        let sv = singular_values(&m).unwrap();
        let mut gram = hermitian_eigenvalues(&(&m.adjoint() * &m).hermitian_part()).unwrap();
        gram.reverse();
        for (s, l) in sv.iter().zip(&gram) {
            assert!((s * s - l).abs() < 1e-12);
        }
        assert!(sv.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn tiny_singular_values_are_accurate() {
        let m = M::from_real_diagonal(&[1.0, 1e-12, 1e-20]);
        let u = M::from_rows(&[&[re(0.6), re(0.8), re(0.0)], &[re(-0.8), re(0.6), re(0.0)], &[re(0.0), re(0.0), re(1.0)]])
            .unwrap();
        let sv = singular_values(&(&u * &m)).unwrap();
        assert!((sv[0] - 1.0).abs() < 1e-15);
        assert!((sv[1] - 1e-12).abs() < 1e-20);
    }

    #[test]
    fn rejects_nan() {
        let mut m = M::identity(2);
        m[(0, 1)] = re(f64::NAN);
        assert!(singular_values(&m).is_err());
    }
}
