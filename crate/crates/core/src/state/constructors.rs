use num_complex::Complex;

use super::{reorder_qubits, DensityMatrix, QubitLabeling};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigendecomposition, ComplexMatrix};
use crate::scalar::{re, Real};

/// Gibbs state `exp(-βH) / Tr exp(-βH)`. Negative `beta` is accepted.
pub fn thermal_state<T: Real>(beta: T, h: &ComplexMatrix<T>) -> Result<DensityMatrix<T>> {
    if !beta.is_finite() {
        return Err(Error::DomainError(format!("inverse temperature {beta} is not finite")));
    }
    let eig = hermitian_eigendecomposition(h)?;
    // Shift by the extreme eigenvalue so the largest weight is exactly 1.
    let shift = if beta >= T::zero() {
        eig.eigenvalues[0]
    } else {
        *eig.eigenvalues.last().expect("non-empty spectrum")
    };
    let weights: Vec<T> = eig.eigenvalues.iter().map(|&l| (-beta * (l - shift)).exp()).collect();
    let z: T = weights.iter().copied().sum();
    let unnormalized = eig.reconstruct_with(|l| re((-beta * (l - shift)).exp() / z));
    DensityMatrix::new(unnormalized)
}

/// Local qubit Hamiltonian of the two-qubit experiment, `(I + σ_z)/2`.
///
/// `|0⟩` is the excited level, matching the three-qubit convention; with
/// the interaction sign of [`crate::dynamics::effective_hamiltonian_2q`]
/// this is the convention under which real positive correlations reverse
/// the heat flow.
pub fn local_hamiltonian_2q<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::from_real_diagonal(&[T::one(), T::zero()])
}

/// Local qubit Hamiltonian of the three-qubit experiment, `(I + σ_z)/2`.
pub fn local_hamiltonian_3q<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::from_real_diagonal(&[T::one(), T::zero()])
}

/// `ρ_A(β_A) ⊗ ρ_B(β_B) + α|01⟩⟨10| + α*|10⟩⟨01|`.
pub fn two_qubit_initial<T: Real>(beta_a: T, beta_b: T, alpha: Complex<T>) -> Result<DensityMatrix<T>> {
    let h = local_hamiltonian_2q();
    let rho_a = thermal_state(beta_a, &h)?;
    let rho_b = thermal_state(beta_b, &h)?;
    let mut m = rho_a.matrix().kron(rho_b.matrix());
    m[(0b01, 0b10)] += alpha;
    m[(0b10, 0b01)] += alpha.conj();
    DensityMatrix::new(m)
}

/// Parameters of the correlated three-qubit initial state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeQubitParams<T> {
    /// Temperature of qubit B.
    pub temp_b: T,
    /// `⟨0|ρ_A|0⟩`.
    pub lambda_a: T,
    /// `⟨0|ρ_C|0⟩`.
    pub lambda_c: T,
    /// Weight of the `{|01⟩, |10⟩}` block of `ρ_AC`.
    pub gamma: T,
}

impl Default for ThreeQubitParams<f64> {
    fn default() -> Self {
        Self { temp_b: 2.0, lambda_a: 0.15, lambda_c: 0.3, gamma: 0.4 }
    }
}

fn checked_sqrt<T: Real>(x: T, what: &str) -> Result<T> {
    if x < -T::STRUCTURAL {
        return Err(Error::DomainError(format!("{what} = {x} is negative")));
    }
    Ok(x.max(T::zero()).sqrt())
}

/// Correlated `ρ_AC` over `[A, C]`: one half of
/// `(γ+λ_C−λ_A)|10⟩⟨10| + (γ−λ_C+λ_A)|01⟩⟨01| + √(γ²−(λ_C−λ_A)²)(|10⟩⟨01| + |01⟩⟨10|)
///  + (λ_A+λ_C−γ)|00⟩⟨00| + (2−λ_A−λ_C−γ)|11⟩⟨11| + √((λ_A+λ_C−γ)(2−λ_A−λ_C−γ))(|00⟩⟨11| + |11⟩⟨00|)`.
pub fn correlated_ac_state<T: Real>(p: &ThreeQubitParams<T>) -> Result<DensityMatrix<T>> {
    let (la, lc, g) = (p.lambda_a, p.lambda_c, p.gamma);
    let two = T::lit(2.0);
    let d = lc - la;
    let outer = la + lc - g;
    let inner = two - la - lc - g;
    if outer < -T::STRUCTURAL || inner < -T::STRUCTURAL || g * g - d * d < -T::STRUCTURAL {
        return Err(Error::DomainError(format!(
            "lambda_a={la}, lambda_c={lc}, gamma={g} violate |λ_C−λ_A| ≤ γ ≤ λ_A+λ_C, λ_A+λ_C+γ ≤ 2"
        )));
    }
    let coherence_mid = checked_sqrt(g * g - d * d, "γ² − (λ_C − λ_A)²")?;
    let coherence_outer = checked_sqrt(outer * inner, "(λ_A+λ_C−γ)(2−λ_A−λ_C−γ)")?;
    let half = T::lit(0.5);

    let mut m = ComplexMatrix::zeros(4);
    m[(0b00, 0b00)] = re(half * outer);
    m[(0b01, 0b01)] = re(half * (g - d));
    m[(0b10, 0b10)] = re(half * (g + d));
    m[(0b11, 0b11)] = re(half * inner);
    m[(0b01, 0b10)] = re(half * coherence_mid);
    m[(0b10, 0b01)] = re(half * coherence_mid);
    m[(0b00, 0b11)] = re(half * coherence_outer);
    m[(0b11, 0b00)] = re(half * coherence_outer);
    DensityMatrix::with_labels(m, QubitLabeling::new(&['A', 'C'])?)
}

/// `ρ_AC ⊗ ρ_B(T_B)` expressed in `[A, B, C]` order.
pub fn three_qubit_initial<T: Real>(p: &ThreeQubitParams<T>) -> Result<DensityMatrix<T>> {
    if !(p.temp_b > T::zero()) {
        return Err(Error::DomainError(format!("temperature {} must be positive", p.temp_b)));
    }
    let rho_ac = correlated_ac_state(p)?;
    let rho_b = thermal_state(T::one() / p.temp_b, &local_hamiltonian_3q())?
        .relabeled(QubitLabeling::new(&['B'])?)?;
    let acb = rho_ac.tensor(&rho_b)?;
    reorder_qubits(&acb, &QubitLabeling::sequential(3))
}
