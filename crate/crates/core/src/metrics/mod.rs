//! Scalar diagnostics: fidelity, Bures distance, complexity, entanglement
//! and energetics.

mod complexity;
mod energy;
mod entanglement;
mod fidelity;

pub use complexity::{
    complexity, state_complexity, zero_complexity_set, zero_complexity_states, ComplexityResult,
    Spectrum, ZeroComplexityState, MAX_COMPLEXITY_DIM,
};
pub use energy::{heat_flow, internal_energy, qubit_energy};
pub use entanglement::{binary_entropy, concurrence, entanglement_of_formation};
pub use fidelity::{bures_distance, fidelity_root};
