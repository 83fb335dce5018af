//! Perturbative first-law ledgers for driven quantum systems.
//!
//! The crate computes order-by-order work, heat, and coherence contributions
//! to the internal-energy balance of a closed, externally driven quantum
//! system, together with an exact-propagation oracle that adjudicates every
//! perturbative series:
//!
//! * [`model`] — problem-statement types: Hermitian matrices, drives,
//!   time grids, and validated systems with cached spectra.
//! * [`dyson`] — interaction-picture drive, first-order transition
//!   amplitudes, transition probabilities and rates, and the two
//!   second-order population conventions.
//! * [`thermo`] — the per-order ledger: W⁽⁰⁻²⁾, Q⁽⁰⁻²⁾, C⁽⁰⁻²⁾ and the
//!   coherent heat/work splits q⁽¹⁾, w⁽¹⁾, q⁽²⁾, w⁽²⁾.
//! * [`oracle`] — exact unitary propagation, eigen-trajectory tracking, and
//!   the three non-perturbative first-law decompositions.
//! * [`twolevel`] — closed-form two-level results and golden-rule kernels
//!   used as ground truth by the test suites.
//! * [`report`] — residual scaling fits comparing the perturbative ledgers
//!   against the exact oracle.
//!
//! All types are immutable after validation and all operations are pure, so
//! scenarios can be evaluated in parallel. With the `parallel` feature
//! (default) sweeps fan out over a rayon pool capped by the `QTP_THREADS`
//! environment variable.

pub mod dyson;
pub mod grid;
pub mod linalg;
pub mod model;
pub mod oracle;
pub mod report;
pub mod sweep;
pub mod thermo;
pub mod twolevel;

pub use grid::TimeGrid;
pub use model::{
    DriveSpec, HermitianMatrix, ModelError, Rho0Basis, Spectrum, SystemSpec, ValidatedSystem,
};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
/// Dense complex matrix used throughout (dims stay small, ≤ 64).
pub type CMatrix = nalgebra::DMatrix<C64>;
