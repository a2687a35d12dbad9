//! Constrained output-feedback control augmentation for MIMO LTI systems.
//!
//! The crate covers the full workflow for enforcing box constraints on
//! selected outputs of a stabilizable LTI plant driven by an observer-based
//! baseline controller:
//!
//! - [`lti`]: state-space containers, eigenvalue reports, structural
//!   (stabilizability/observability) checks, fixed-step integration.
//! - [`design`]: relative degrees, the constraint sensitivity matrices and
//!   feasibility checks for the barrier-based augmentation.
//! - [`augmentation`]: the closed-form min-norm augmentation, its switching
//!   logic and piecewise-affine gain form, plus a brute-force QP oracle.
//! - [`observer`]: Riccati-based gain synthesis, observer dynamics, and
//!   closed-loop matrix assembly.
//! - [`servo`]: PI-servo extension of a physical plant with integrator and
//!   anti-windup channels.
//! - [`sim`]: closed-loop simulation, constraint violation reporting, and
//!   the invariance time bound.
//! - [`analysis`]: loop-gain assembly, classical and disk margins, actuator
//!   augmentation, and parameter sweeps.

pub mod analysis;
pub mod augmentation;
pub mod design;
pub mod error;
pub mod lti;
pub mod observer;
pub mod servo;
pub mod sim;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
