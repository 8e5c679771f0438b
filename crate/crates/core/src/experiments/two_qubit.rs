use num_complex::Complex64;
use rayon::prelude::*;

use super::{check_count, check_range, linspace};
use crate::dynamics::{effective_hamiltonian_2q, evolve, propagator, PropagatorSpec};
use crate::error::{Error, Result};
use crate::metrics::{complexity, concurrence, entanglement_of_formation, qubit_energy};
use crate::state::{local_hamiltonian_2q, two_qubit_initial, DensityMatrix};

/// Two thermal qubits with an optional `|01⟩⟨10|` correlation, evolved
/// under the exchange interaction.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitScenario {
    pub beta_a: f64,
    pub beta_b: f64,
    pub alpha: Complex64,
    pub t_start: f64,
    pub t_end: f64,
    pub steps: usize,
}

impl Default for TwoQubitScenario {
    fn default() -> Self {
        Self { beta_a: 1.0, beta_b: 2.0, alpha: Complex64::new(0.0, 0.0), t_start: 0.0, t_end: 1.0, steps: 201 }
    }
}

impl TwoQubitScenario {
    /// Default temperatures and time grid with correlation `alpha`.
    pub fn with_alpha(alpha: Complex64) -> Self {
        Self { alpha, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        check_count("steps", self.steps)?;
        check_range("time range", self.t_start, self.t_end)?;
        if !(self.beta_a.is_finite() && self.beta_b.is_finite()) {
            return Err(Error::InvalidConfig("inverse temperatures must be finite".into()));
        }
        if !(self.alpha.re.is_finite() && self.alpha.im.is_finite()) {
            return Err(Error::InvalidConfig("alpha must be finite".into()));
        }
        Ok(())
    }

    pub fn times(&self) -> Vec<f64> {
        linspace(self.t_start, self.t_end, self.steps)
    }

    pub fn initial_state(&self) -> Result<DensityMatrix<f64>> {
        two_qubit_initial(self.beta_a, self.beta_b, self.alpha)
    }
}

/// One sample of a two-qubit run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitRecord {
    pub time: f64,
    pub e_a: f64,
    pub e_b: f64,
    pub complexity: f64,
    pub concurrence: f64,
    pub eof: f64,
}

/// Diagnostics of `ρ_AB(t) = U(t) ρ₀ U(t)†`.
pub fn two_qubit_sample(rho0: &DensityMatrix<f64>, time: f64) -> Result<TwoQubitRecord> {
    let u = propagator(&PropagatorSpec::new(effective_hamiltonian_2q(), time)?)?;
    let rho = evolve(rho0, &u)?;
    let h = local_hamiltonian_2q();
    let c = concurrence(&rho)?;
    Ok(TwoQubitRecord {
        time,
        e_a: qubit_energy(&rho, 'A', &h)?,
        e_b: qubit_energy(&rho, 'B', &h)?,
        complexity: complexity(&rho)?,
        concurrence: c,
        eof: entanglement_of_formation(c)?,
    })
}

/// Samples the scenario on its time grid.
pub fn run_two_qubit(scenario: &TwoQubitScenario) -> Result<Vec<TwoQubitRecord>> {
    scenario.validate()?;
    let rho0 = scenario.initial_state()?;
    scenario.times().into_par_iter().map(|t| two_qubit_sample(&rho0, t)).collect()
}
