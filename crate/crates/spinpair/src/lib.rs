//! Thermal entanglement of two qubits in the general Heisenberg XYZ chain.
//!
//! The library models a pair of spin-1/2 sites coupled by anisotropic XYZ
//! exchange, homogeneous and inhomogeneous z-axis fields, and a
//! Dzyaloshinskii-Moriya (DM) interaction along z. It computes the Gibbs
//! state at temperature T and its Wootters concurrence two independent ways:
//!
//! - closed forms derived from the Hamiltonian's 2x2 block structure
//!   ([`concurrence::closed_form_lambdas`], [`reductions`] for the named
//!   special cases), and
//! - a numeric pipeline (Jacobi eigendecomposition, singular-value lambdas)
//!   that never looks at the block structure
//!   ([`concurrence::thermal_concurrence_numeric`]).
//!
//! The two routes agree to ~1e-12 and cross-check each other throughout the
//! test suite. On top of them sit critical-threshold solvers (temperature
//! and DM coupling) and a sweep engine that tabulates concurrence surfaces
//! to CSV.

pub mod concurrence;
pub mod error;
pub mod linalg;
pub mod model;
pub mod reductions;
pub mod spectral;
pub mod sweep;
pub mod thermal;

pub use concurrence::{
    closed_form_lambdas, pure_state_concurrence, spin_flip, spin_flipped,
    thermal_concurrence_closed, thermal_concurrence_numeric, wootters_concurrence,
    ConcurrenceResult,
};
pub use error::{Error, Result};
pub use linalg::{C64, Mat4, Vec4};
pub use model::{Derived, ModelParams, Temperature};
pub use reductions::{
    classify, closed_form_concurrence, critical_dm, critical_temperature, ActiveFields, ModelCase,
    ModelTag, Regime, Threshold,
};
pub use spectral::{analytic_spectrum, bell_states, numeric_spectrum, Spectrum};
pub use sweep::{
    emit_csv, read_csv, reproduce_figure, run_sweep, Axis, AxisSpec, SweepConfig, SweepRow,
    SweepTable,
};
pub use thermal::{gibbs_closed, gibbs_numeric, partition_function, DensityMatrix, PartitionValue};
