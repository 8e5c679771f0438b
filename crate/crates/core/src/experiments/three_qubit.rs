use rayon::prelude::*;

use super::{check_count, check_range, linspace};
use crate::dynamics::{evolve, interaction_hamiltonian_3q, propagator, PropagatorSpec};
use crate::error::{Error, Result};
use crate::metrics::{complexity, qubit_energy};
use crate::state::{local_hamiltonian_3q, partial_trace, three_qubit_initial, DensityMatrix, ThreeQubitParams};

/// Sweep of the interaction strengths `(s, t)` at fixed evolution time.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreeQubitGrid {
    pub tau: f64,
    pub s_range: (f64, f64),
    pub t_range: (f64, f64),
    pub resolution: usize,
    pub state: ThreeQubitParams<f64>,
}

impl Default for ThreeQubitGrid {
    fn default() -> Self {
        Self {
            tau: 1.0,
            s_range: (-10.0, 10.0),
            t_range: (-10.0, 10.0),
            resolution: 201,
            state: ThreeQubitParams::default(),
        }
    }
}

impl ThreeQubitGrid {
    pub fn validate(&self) -> Result<()> {
        check_count("resolution", self.resolution)?;
        check_range("s range", self.s_range.0, self.s_range.1)?;
        check_range("t range", self.t_range.0, self.t_range.1)?;
        if !self.tau.is_finite() {
            return Err(Error::InvalidConfig("tau must be finite".into()));
        }
        Ok(())
    }

    pub fn s_axis(&self) -> Vec<f64> {
        linspace(self.s_range.0, self.s_range.1, self.resolution)
    }

    pub fn t_axis(&self) -> Vec<f64> {
        linspace(self.t_range.0, self.t_range.1, self.resolution)
    }
}

/// Evolution in time at fixed strengths `(s, t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreeQubitTrace {
    pub s: f64,
    pub t: f64,
    pub tau_range: (f64, f64),
    pub steps: usize,
    pub state: ThreeQubitParams<f64>,
}

impl Default for ThreeQubitTrace {
    fn default() -> Self {
        Self { s: 1.0, t: 1.0, tau_range: (0.0, 10.0), steps: 201, state: ThreeQubitParams::default() }
    }
}

impl ThreeQubitTrace {
    pub fn validate(&self) -> Result<()> {
        check_count("steps", self.steps)?;
        check_range("tau range", self.tau_range.0, self.tau_range.1)?;
        if !(self.s.is_finite() && self.t.is_finite()) {
            return Err(Error::InvalidConfig("interaction strengths must be finite".into()));
        }
        Ok(())
    }

    pub fn taus(&self) -> Vec<f64> {
        linspace(self.tau_range.0, self.tau_range.1, self.steps)
    }
}

/// Per-qubit energies and pairwise complexities of a three-qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeQubitDiagnostics {
    pub e_a: f64,
    pub e_b: f64,
    pub e_c: f64,
    pub c_ab: f64,
    pub c_bc: f64,
    pub c_ac: f64,
}

impl ThreeQubitDiagnostics {
    pub fn total_energy(&self) -> f64 {
        self.e_a + self.e_b + self.e_c
    }
}

pub fn three_qubit_diagnostics(rho: &DensityMatrix<f64>) -> Result<ThreeQubitDiagnostics> {
    let h = local_hamiltonian_3q();
    let pair = |a: char, b: char| complexity(&partial_trace(rho, &[a, b])?);
    Ok(ThreeQubitDiagnostics {
        e_a: qubit_energy(rho, 'A', &h)?,
        e_b: qubit_energy(rho, 'B', &h)?,
        e_c: qubit_energy(rho, 'C', &h)?,
        c_ab: pair('A', 'B')?,
        c_bc: pair('B', 'C')?,
        c_ac: pair('A', 'C')?,
    })
}

fn evolved_diagnostics(rho0: &DensityMatrix<f64>, t: f64, s: f64, tau: f64) -> Result<ThreeQubitDiagnostics> {
    let u = propagator(&PropagatorSpec::new(interaction_hamiltonian_3q(t, s), tau)?)?;
    three_qubit_diagnostics(&evolve(rho0, &u)?)
}

/// One cell of the `(s, t)` sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRecord {
    pub s: f64,
    pub t: f64,
    pub e_a: f64,
    pub e_b: f64,
    pub e_c: f64,
    pub c_ab: f64,
    pub c_bc: f64,
    pub c_ac: f64,
}

/// One sample of the fixed-strength time trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRecord {
    pub tau: f64,
    pub e_a: f64,
    pub e_b: f64,
    pub e_c: f64,
    pub c_ab: f64,
    pub c_bc: f64,
    pub c_ac: f64,
}

/// Evaluates every cell, `t` outer and `s` inner.
pub fn run_three_qubit_grid(grid: &ThreeQubitGrid) -> Result<Vec<GridRecord>> {
    grid.validate()?;
    let rho0 = three_qubit_initial(&grid.state)?;
    let s_axis = grid.s_axis();
    let t_axis = grid.t_axis();
    let n = grid.resolution;
    (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (t, s) = (t_axis[k / n], s_axis[k % n]);
            let d = evolved_diagnostics(&rho0, t, s, grid.tau)?;
            Ok(GridRecord { s, t, e_a: d.e_a, e_b: d.e_b, e_c: d.e_c, c_ab: d.c_ab, c_bc: d.c_bc, c_ac: d.c_ac })
        })
        .collect()
}

pub fn run_three_qubit_trace(trace: &ThreeQubitTrace) -> Result<Vec<TraceRecord>> {
    trace.validate()?;
    let rho0 = three_qubit_initial(&trace.state)?;
    trace
        .taus()
        .into_par_iter()
        .map(|tau| {
            let d = evolved_diagnostics(&rho0, trace.t, trace.s, tau)?;
            Ok(TraceRecord { tau, e_a: d.e_a, e_b: d.e_b, e_c: d.e_c, c_ab: d.c_ab, c_bc: d.c_bc, c_ac: d.c_ac })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_cell_matches_initial_state() {
        let grid = ThreeQubitGrid { resolution: 3, ..Default::default() };
        let records = run_three_qubit_grid(&grid).unwrap();
        assert_eq!(records.len(), 9);
        let origin = records[4];
        assert_eq!((origin.s, origin.t), (0.0, 0.0));
        let d = three_qubit_diagnostics(&three_qubit_initial(&grid.state).unwrap()).unwrap();
        assert_eq!(
            (origin.e_a, origin.e_b, origin.e_c, origin.c_ab, origin.c_bc, origin.c_ac),
            (d.e_a, d.e_b, d.e_c, d.c_ab, d.c_bc, d.c_ac)
        );
    }

    #[test]
    fn row_major_t_outer() {
        let grid = ThreeQubitGrid { resolution: 2, ..Default::default() };
        let r = run_three_qubit_grid(&grid).unwrap();
        let cells: Vec<_> = r.iter().map(|g| (g.t, g.s)).collect();
        assert_eq!(cells, vec![(-10.0, -10.0), (-10.0, 10.0), (10.0, -10.0), (10.0, 10.0)]);
    }

    #[test]
    fn initial_energies() {
        let d = three_qubit_diagnostics(&three_qubit_initial(&ThreeQubitParams::default()).unwrap()).unwrap();
        // ⟨0|ρ_i|0⟩ is the excited population under (I + σ_z)/2.
        assert!((d.e_a - 0.15).abs() < 1e-12);
        assert!((d.e_c - 0.3).abs() < 1e-12);
        let pb = (-0.5f64).exp() / (1.0 + (-0.5f64).exp());
        assert!((d.e_b - pb).abs() < 1e-12);
        // Product marginals are diagonal; ρ_AC is not.
        assert_eq!(d.c_ab, 0.0);
        assert_eq!(d.c_bc, 0.0);
        assert!(d.c_ac > 0.1);
    }

    #[test]
    fn rejects_bad_grid() {
        let grid = ThreeQubitGrid { resolution: 0, ..Default::default() };
        assert!(run_three_qubit_grid(&grid).is_err());
        let grid = ThreeQubitGrid { s_range: (1.0, 1.0), ..Default::default() };
        assert!(run_three_qubit_grid(&grid).is_err());
    }
}
