use num_complex::Complex;
use num_traits::Zero;

use super::QubitLabeling;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix};
use crate::scalar::Real;

/// A validated multi-qubit density matrix: Hermitian, unit trace and
/// positive semidefinite up to [`Real::STRUCTURAL`].
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix<T: Real> {
    matrix: ComplexMatrix<T>,
    labels: QubitLabeling,
}

fn qubit_count(dim: usize) -> Result<usize> {
    if dim.is_power_of_two() && dim >= 2 {
        Ok(dim.trailing_zeros() as usize)
    } else {
        Err(Error::NotQubitDimension(dim))
    }
}

impl<T: Real> DensityMatrix<T> {
    /// Validates `matrix` and labels its qubits `A, B, C, ...`.
    pub fn new(matrix: ComplexMatrix<T>) -> Result<Self> {
        let n = qubit_count(matrix.dim())?;
        Self::with_labels(matrix, QubitLabeling::sequential(n))
    }

    pub fn with_labels(matrix: ComplexMatrix<T>, labels: QubitLabeling) -> Result<Self> {
        let n = qubit_count(matrix.dim())?;
        if labels.len() != n {
            return Err(Error::WrongArity { expected: n, found: labels.len() });
        }
        let deviation = matrix.hermiticity_deviation();
        if !(deviation <= T::STRUCTURAL) {
            return Err(Error::NotHermitian { deviation: deviation.as_f64() });
        }
        let matrix = matrix.hermitian_part();
        let trace = matrix.trace().re;
        if !((trace - T::one()).abs() <= T::STRUCTURAL) {
            return Err(Error::BadTrace { trace: trace.as_f64() });
        }
        let lowest = hermitian_eigenvalues(&matrix)?[0];
        if lowest < -T::STRUCTURAL {
            return Err(Error::NotPositive { eigenvalue: lowest.as_f64() });
        }
        Ok(Self { matrix, labels })
    }

    /// Diagonal state `diag(p)`.
    pub fn diagonal(populations: &[T]) -> Result<Self> {
        Self::new(ComplexMatrix::from_real_diagonal(populations))
    }

    /// Pure state `|ψ⟩⟨ψ|`; `psi` is normalized first.
    pub fn pure(psi: &[Complex<T>]) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if norm.is_zero() {
            return Err(Error::DomainError("zero state vector".into()));
        }
        let n = psi.len();
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = psi[i] * psi[j].conj() / (norm * norm);
            }
        }
        Self::new(m)
    }

    #[inline]
    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.matrix
    }

    #[inline]
    pub fn labels(&self) -> &QubitLabeling {
        &self.labels
    }

    #[inline]
    pub fn qubits(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Result<Vec<T>> {
        hermitian_eigenvalues(&self.matrix)
    }

    /// Replaces the labels without touching the matrix.
    pub fn relabeled(self, labels: QubitLabeling) -> Result<Self> {
        if labels.len() != self.qubits() {
            return Err(Error::WrongArity { expected: self.qubits(), found: labels.len() });
        }
        Ok(Self { matrix: self.matrix, labels })
    }

    /// `self ⊗ other`, labels concatenated.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let mut labels = self.labels.labels().to_vec();
        labels.extend_from_slice(other.labels.labels());
        let labels = QubitLabeling::new(&labels)?;
        Self::with_labels(self.matrix.kron(&other.matrix), labels)
    }

    pub fn is_diagonal(&self, tol: T) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| i == j || self.matrix[(i, j)].norm() <= tol))
    }
}

/// Reduced state on the `keep` qubits, in the order they appear in `rho`.
pub fn partial_trace<T: Real>(rho: &DensityMatrix<T>, keep: &[char]) -> Result<DensityMatrix<T>> {
    if keep.is_empty() {
        return Err(Error::InvalidConfig("partial trace must keep at least one qubit".into()));
    }
    let n = rho.qubits();
    let mut kept: Vec<usize> =
        keep.iter().map(|&l| rho.labels().position(l)).collect::<Result<_>>()?;
    kept.sort_unstable();
    kept.dedup();
    let traced: Vec<usize> = (0..n).filter(|p| !kept.contains(p)).collect();

    let bit = |pos: usize| n - 1 - pos;
    let scatter = |positions: &[usize], value: usize| -> usize {
        let k = positions.len();
        positions
            .iter()
            .enumerate()
            .map(|(i, &pos)| ((value >> (k - 1 - i)) & 1) << bit(pos))
            .sum()
    };

    let out_dim = 1usize << kept.len();
    let env_dim = 1usize << traced.len();
    let m = rho.matrix();
    let mut out = ComplexMatrix::zeros(out_dim);
    for i in 0..out_dim {
        let row_base = scatter(&kept, i);
        for j in 0..out_dim {
            let col_base = scatter(&kept, j);
            let mut acc = Complex::zero();
            for e in 0..env_dim {
                let env = scatter(&traced, e);
                acc += m[(row_base | env, col_base | env)];
            }
            out[(i, j)] = acc;
        }
    }
    let labels: Vec<char> = kept.iter().map(|&p| rho.labels().labels()[p]).collect();
    DensityMatrix::with_labels(out, QubitLabeling::new(&labels)?)
}

/// Basis index map induced by moving from labeling `from` to `to`.
pub(crate) fn basis_permutation(from: &QubitLabeling, to: &QubitLabeling) -> Result<Vec<usize>> {
    let n = from.len();
    let target_pos = from.permutation_to(to)?;
    Ok((0..1usize << n)
        .map(|x| {
            (0..n)
                .map(|p| ((x >> (n - 1 - p)) & 1) << (n - 1 - target_pos[p]))
                .sum()
        })
        .collect())
}

/// Re-expresses `rho` in the qubit order `to`: `ρ' = P ρ P†`.
pub fn reorder_qubits<T: Real>(rho: &DensityMatrix<T>, to: &QubitLabeling) -> Result<DensityMatrix<T>> {
    let map = basis_permutation(rho.labels(), to)?;
    let dim = rho.dim();
    let m = rho.matrix();
    let mut out = ComplexMatrix::zeros(dim);
    for x in 0..dim {
        for y in 0..dim {
            out[(map[x], map[y])] = m[(x, y)];
        }
    }
    DensityMatrix::with_labels(out, to.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{c, re};

    type Rho = DensityMatrix<f64>;

    #[test]
    fn validation_errors() {
        let not_herm = ComplexMatrix::from_rows(&[&[re(0.5), re(0.1)], &[re(0.0), re(0.5)]]).unwrap();
        assert!(matches!(Rho::new(not_herm), Err(Error::NotHermitian { .. })));
        assert!(matches!(Rho::diagonal(&[0.5, 0.6]), Err(Error::BadTrace { .. })));
        assert!(matches!(Rho::diagonal(&[1.5, -0.5]), Err(Error::NotPositive { .. })));
        assert!(matches!(Rho::diagonal(&[0.5, 0.25, 0.25]), Err(Error::NotQubitDimension(3))));
    }

    #[test]
    fn product_state_partial_trace() {
        let a = Rho::diagonal(&[0.7, 0.3]).unwrap();
        let b = Rho::pure(&[re(1.0), c(0.0, 1.0)]).unwrap().relabeled(QubitLabeling::new(&['B']).unwrap()).unwrap();
        let ab = a.tensor(&b).unwrap();
        let ra = partial_trace(&ab, &['A']).unwrap();
        let rb = partial_trace(&ab, &['B']).unwrap();
        assert!(ra.matrix().approx_eq(a.matrix(), 1e-15));
        assert!(rb.matrix().approx_eq(b.matrix(), 1e-15));
        assert_eq!(rb.labels().labels(), &['B']);
    }

    #[test]
    fn partial_trace_keeps_relative_order() {
        let rho = Rho::diagonal(&[0.1, 0.2, 0.05, 0.15, 0.1, 0.1, 0.2, 0.1]).unwrap();
        let kept = partial_trace(&rho, &['C', 'A']).unwrap();
        assert_eq!(kept.labels().labels(), &['A', 'C']);
        // ρ_AC[a c] = Σ_b p[a b c]
        let expected = [0.1 + 0.05, 0.2 + 0.15, 0.1 + 0.2, 0.1 + 0.1];
        for (i, e) in expected.iter().enumerate() {
            assert!((kept.matrix()[(i, i)].re - e).abs() < 1e-15);
        }
    }

    #[test]
    fn partial_trace_unknown_label() {
        let rho = Rho::diagonal(&[0.25; 4]).unwrap();
        assert_eq!(partial_trace(&rho, &['Z']).unwrap_err(), Error::UnknownLabel('Z'));
    }

    #[test]
    fn reorder_basis_relabeling() {
        // |01⟩⟨01| over [A,B] becomes |10⟩⟨10| over [B,A].
        let rho = Rho::diagonal(&[0.0, 1.0, 0.0, 0.0]).unwrap();
        let ba = QubitLabeling::new(&['B', 'A']).unwrap();
        let out = reorder_qubits(&rho, &ba).unwrap();
        assert!(out.matrix().approx_eq(&ComplexMatrix::from_real_diagonal(&[0.0, 0.0, 1.0, 0.0]), 0.0));
        let back = reorder_qubits(&out, &QubitLabeling::sequential(2)).unwrap();
        assert_eq!(back.matrix(), rho.matrix());
    }

    #[test]
    fn reorder_identity() {
        let rho = Rho::pure(&[re(0.6), re(0.0), c(0.0, 0.8), re(0.0)]).unwrap();
        let out = reorder_qubits(&rho, &QubitLabeling::sequential(2)).unwrap();
        assert_eq!(out.matrix(), rho.matrix());
    }

    #[test]
    fn reorder_label_mismatch() {
        let rho = Rho::diagonal(&[0.25; 4]).unwrap();
        let bad = QubitLabeling::new(&['A', 'C']).unwrap();
        assert!(matches!(reorder_qubits(&rho, &bad), Err(Error::LabelMismatch { .. })));
    }
}
