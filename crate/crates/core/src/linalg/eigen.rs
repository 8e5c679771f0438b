//! Cyclic complex Jacobi eigensolver for small Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a[p][q]` with a
//! diagonal unitary, then annihilates the resulting real symmetric 2x2
//! block with a classical Jacobi rotation. Sweeps visit every `p < q` pair
//! in row order, so the result is a deterministic function of the input.

use num_complex::Complex;
use num_traits::Zero;

use super::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::{re, Real};

/// Hard cap on the number of full sweeps.
pub const MAX_SWEEPS: usize = 100;

/// Real spectrum and orthonormal eigenvectors (as columns) of a Hermitian
/// matrix. Eigenvalues are ascending.
#[derive(Debug, Clone)]
pub struct EigenDecomposition<T: Real> {
    pub eigenvalues: Vec<T>,
    pub eigenvectors: ComplexMatrix<T>,
}

impl<T: Real> EigenDecomposition<T> {
    /// `V diag(f(λ)) V†`.
    pub fn reconstruct_with(&self, f: impl Fn(T) -> Complex<T>) -> ComplexMatrix<T> {
        let v = &self.eigenvectors;
        let n = v.dim();
        let weights: Vec<Complex<T>> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex::zero();
                for (k, w) in weights.iter().enumerate() {
                    acc += v[(i, k)] * *w * v[(j, k)].conj();
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        self.reconstruct_with(re)
    }
}

fn off_diagonal_norm<T: Real>(a: &ComplexMatrix<T>) -> T {
    let n = a.dim();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn check_hermitian<T: Real>(h: &ComplexMatrix<T>) -> Result<()> {
    if h.as_slice().iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::NotHermitian { deviation: f64::NAN });
    }
    let deviation = h.hermiticity_deviation();
    if deviation > T::STRUCTURAL {
        return Err(Error::NotHermitian { deviation: deviation.as_f64() });
    }
    Ok(())
}

/// Runs the Jacobi iteration. Returns the diagonalized matrix and, if
/// requested, the accumulated rotation.
fn jacobi<T: Real>(
    h: &ComplexMatrix<T>,
    want_vectors: bool,
) -> Result<(Vec<T>, Option<ComplexMatrix<T>>)> {
    check_hermitian(h)?;
    let n = h.dim();
    let mut a = h.hermitian_part();
    let mut v = want_vectors.then(|| ComplexMatrix::identity(n));
    let threshold = T::ACCUMULATION * T::one().max(a.frobenius_norm());

    let mut converged = false;
    for _ in 0..=MAX_SWEEPS {
        if off_diagonal_norm(&a) < threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, v.as_mut(), p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps: MAX_SWEEPS,
            off_norm: off_diagonal_norm(&a).as_f64(),
        });
    }

    let values: Vec<T> = (0..n).map(|i| a[(i, i)].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    // Stable sort keeps the sweep order for exact ties.
    order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).expect("finite eigenvalues"));
    let eigenvalues = order.iter().map(|&i| values[i]).collect();
    let vectors = v.map(|v| {
        let mut sorted = ComplexMatrix::zeros(n);
        for (new_col, &old_col) in order.iter().enumerate() {
            for row in 0..n {
                sorted[(row, new_col)] = v[(row, old_col)];
            }
        }
        sorted
    });
    Ok((eigenvalues, vectors))
}

fn rotate<T: Real>(a: &mut ComplexMatrix<T>, v: Option<&mut ComplexMatrix<T>>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r.is_zero() {
        return;
    }
    let n = a.dim();
    let phase_conj = (apq / r).conj();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let theta = (aqq - app) / (T::lit(2.0) * r);
    let t = {
        let t = T::one() / (theta.abs() + (theta * theta + T::one()).sqrt());
        if theta < T::zero() {
            -t
        } else {
            t
        }
    };
    let cs = T::one() / (t * t + T::one()).sqrt();
    let sn = t * cs;

    // J restricted to (p, q): [[c, s], [-s e^{-iφ}, c e^{-iφ}]].
    let jpp: Complex<T> = re(cs);
    let jpq: Complex<T> = re(sn);
    let jqp = phase_conj * (-sn);
    let jqq = phase_conj * cs;

    // A <- A J
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    // A <- J† A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = Complex::zero();
    a[(q, p)] = Complex::zero();
    a[(p, p)] = re(a[(p, p)].re);
    a[(q, q)] = re(a[(q, q)].re);

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp * jpp + vkq * jqp;
            v[(k, q)] = vkp * jpq + vkq * jqq;
        }
    }
}

/// Eigen-decomposition of a Hermitian matrix.
pub fn hermitian_eigendecomposition<T: Real>(h: &ComplexMatrix<T>) -> Result<EigenDecomposition<T>> {
    let (eigenvalues, vectors) = jacobi(h, true)?;
    Ok(EigenDecomposition { eigenvalues, eigenvectors: vectors.expect("vectors requested") })
}

/// Ascending eigenvalues only; skips accumulating the rotation.
pub fn hermitian_eigenvalues<T: Real>(h: &ComplexMatrix<T>) -> Result<Vec<T>> {
    jacobi(h, false).map(|(values, _)| values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    type M = ComplexMatrix<f64>;

    fn check_invariants(h: &M, d: &EigenDecomposition<f64>) {
        let v = &d.eigenvectors;
        let vtv = &v.adjoint() * v;
        assert!(vtv.distance(&M::identity(h.dim())) < 1e-10, "V not unitary");
        assert!(d.reconstruct().distance(h) < 1e-10, "reconstruction failed");
        assert!(d.eigenvalues.windows(2).all(|w| w[0] <= w[1]), "not ascending");
    }

    #[test]
    fn diagonal_input_gives_permutation_vectors() {
        let h = M::from_real_diagonal(&[3.0, 1.0, 2.0]);
        let d = hermitian_eigendecomposition(&h).unwrap();
        assert_eq!(d.eigenvalues, vec![1.0, 2.0, 3.0]);
        for col in 0..3 {
            let nonzero: Vec<_> =
                (0..3).filter(|&row| d.eigenvectors[(row, col)].norm() > 0.5).collect();
            assert_eq!(nonzero.len(), 1);
            assert!((d.eigenvectors[(nonzero[0], col)].norm() - 1.0).abs() < 1e-15);
        }
        check_invariants(&h, &d);
    }

    #[test]
    fn pauli_x_spectrum() {
        let h = M::from_rows(&[&[re(0.0), re(1.0)], &[re(1.0), re(0.0)]]).unwrap();
        let d = hermitian_eigendecomposition(&h).unwrap();
        assert!((d.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((d.eigenvalues[1] - 1.0).abs() < 1e-14);
        check_invariants(&h, &d);
    }

    #[test]
    fn complex_hermitian_4x4() {
        let h = M::from_rows(&[
            &[re(2.0), c(1.0, 1.0), c(0.0, -0.5), re(0.3)],
            &[c(1.0, -1.0), re(-1.0), c(0.2, 0.7), c(0.0, 1.0)],
            &[c(0.0, 0.5), c(0.2, -0.7), re(0.5), c(-1.0, 0.1)],
            &[re(0.3), c(0.0, -1.0), c(-1.0, -0.1), re(1.5)],
        ])
        .unwrap();
        let d = hermitian_eigendecomposition(&h).unwrap();
        check_invariants(&h, &d);
        let trace: f64 = d.eigenvalues.iter().sum();
        assert!((trace - 3.0).abs() < 1e-12);
    }

    #[test]
    fn deterministic() {
        let h = M::from_rows(&[&[re(1.0), c(0.3, 0.4)], &[c(0.3, -0.4), re(-2.0)]]).unwrap();
        let a = hermitian_eigendecomposition(&h).unwrap();
        let b = hermitian_eigendecomposition(&h).unwrap();
        assert_eq!(a.eigenvalues, b.eigenvalues);
        assert_eq!(a.eigenvectors, b.eigenvectors);
    }

    #[test]
    fn rejects_non_hermitian() {
        let h = M::from_rows(&[&[re(0.0), re(1.0)], &[re(0.0), re(0.0)]]).unwrap();
        assert!(matches!(hermitian_eigendecomposition(&h), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn nan_input_is_not_hermitian() {
        let h = M::from_real_diagonal(&[f64::NAN, 1.0]);
        assert!(hermitian_eigendecomposition(&h).is_err());
    }

    #[test]
    fn eigenvalues_only_matches_full() {
        let h = M::from_rows(&[
            &[re(1.0), c(0.5, 0.5), re(0.0)],
            &[c(0.5, -0.5), re(0.0), c(0.0, 2.0)],
            &[re(0.0), c(0.0, -2.0), re(-1.0)],
        ])
        .unwrap();
        let full = hermitian_eigendecomposition(&h).unwrap();
        let only = hermitian_eigenvalues(&h).unwrap();
        for (a, b) in full.eigenvalues.iter().zip(&only) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn single_precision() {
        let h = ComplexMatrix::<f32>::from_rows(&[
            &[re(2.0), c(1.0, 1.0)],
            &[c(1.0, -1.0), re(-1.0)],
        ])
        .unwrap();
        let d = hermitian_eigendecomposition(&h).unwrap();
        // λ = 1/2 ± sqrt(9/4 + 2)
        let disc = (2.25f32 + 2.0).sqrt();
        assert!((d.eigenvalues[0] - (0.5 - disc)).abs() < 1e-5);
        assert!((d.eigenvalues[1] - (0.5 + disc)).abs() < 1e-5);
        assert!(d.reconstruct().distance(&h) < 1e-5);
    }
}
