//! Density matrices, qubit bookkeeping and the experiment initial states.

mod constructors;
mod density;
mod labeling;
pub mod operators;

pub use constructors::{
    correlated_ac_state, local_hamiltonian_2q, local_hamiltonian_3q, thermal_state,
    three_qubit_initial, two_qubit_initial, ThreeQubitParams,
};
pub use density::{partial_trace, reorder_qubits, DensityMatrix};
pub use labeling::QubitLabeling;
