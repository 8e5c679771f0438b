//! Random operators for property checks and benchmarks.

use num_complex::Complex;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::Result;
use crate::linalg::{exp_minus_i, ComplexMatrix};
use crate::scalar::Real;
use crate::state::DensityMatrix;

fn gaussian<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Complex<T> {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex::new(T::lit(re), T::lit(im))
}

/// Ginibre matrix with i.i.d. standard complex Gaussian entries.
pub fn ginibre<T: Real, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix<T> {
    let data = (0..dim * dim).map(|_| gaussian(rng)).collect();
    ComplexMatrix::from_row_major(data).expect("square")
}

/// Random Hermitian matrix rescaled so that `‖H‖_F = norm`.
pub fn random_hermitian<T: Real, R: Rng + ?Sized>(rng: &mut R, dim: usize, norm: T) -> ComplexMatrix<T> {
    let g = ginibre::<T, R>(rng, dim);
    let h = (&g + &g.adjoint()).hermitian_part();
    let f = h.frobenius_norm();
    h.scale_real(norm / f)
}

/// Random unitary `exp(−iH)` for a random Hermitian `H` with `‖H‖_F = π`.
pub fn random_unitary<T: Real, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Result<ComplexMatrix<T>> {
    exp_minus_i(&random_hermitian(rng, dim, T::PI()), T::one())
}

/// Full-rank random state `G G† / Tr(G G†)` (Hilbert–Schmidt measure).
pub fn random_density_matrix<T: Real, R: Rng + ?Sized>(rng: &mut R, qubits: usize) -> Result<DensityMatrix<T>> {
    let g = ginibre::<T, R>(rng, 1 << qubits);
    let m = &g * &g.adjoint();
    let tr = m.trace().re;
    DensityMatrix::new(m.scale_real(T::one() / tr).hermitian_part())
}

/// Random pure state.
pub fn random_pure_state<T: Real, R: Rng + ?Sized>(rng: &mut R, qubits: usize) -> Result<DensityMatrix<T>> {
    let psi: Vec<Complex<T>> = (0..1usize << qubits).map(|_| gaussian(rng)).collect();
    DensityMatrix::pure(&psi)
}

/// Random probability vector of length `dim` (flat Dirichlet).
pub fn random_populations<T: Real, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<T> {
    let raw: Vec<f64> = (0..dim).map(|_| -rng.random::<f64>().max(1e-300).ln()).collect();
    let sum: f64 = raw.iter().sum();
    raw.into_iter().map(|x| T::lit(x / sum)).collect()
}
