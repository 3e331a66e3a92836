//! Bipartite density operators, partial transposes, and the channels that
//! realize them as sequential-measurement experiments.
//!
//! The partial transpose of a bipartite state is Hermitian with unit trace
//! but usually not positive — formally a *pseudo-density operator*, the kind
//! of object that encodes two-time correlators of a prepare–measure–evolve–
//! measure (two-point sequential measurement) experiment. This crate makes
//! that correspondence constructive:
//!
//! * [`synthesis::synthesize_channel`] builds, for any bipartite state
//!   ρ_AB, the quantum channel E with ρ_AB^{T_B} = E ⋆ ρ_A (and, via the
//!   conjugate channel, ρ_AB^{T_A} = Ē ⋆ ρ_Aᵀ), by solving a block Sylvester
//!   equation in the eigenbasis of the marginal ρ_A.
//! * [`tpsm`] computes two-time correlators three ways — operationally from
//!   projective branches, algebraically from the pseudo-density operator,
//!   and by seeded Monte Carlo sampling — so the identities can be checked
//!   against one another.
//! * [`bell`] runs the two-qubit demonstration: a maximally entangled state
//!   violates the CHSH bound 2 spatially, and the synthesized channel
//!   violates it by the same amount temporally, with the σy⊗σy correlator
//!   flipping sign from −1 to +1 on the way.
//!
//! Start with the `examples/` directory: each example is a runnable tour of
//! one capability. The `spacetime-swap` binary exposes the same operations
//! for scripting on JSON matrix files.

pub mod bell;
pub mod channels;
pub mod error;
pub mod io;
pub mod linalg;
pub mod operators;
pub mod random;
pub mod synthesis;
pub mod tpsm;

pub use error::{Error, Result};

/// Relative eigenvalue threshold below which a marginal direction counts as
/// null (rank decisions, PSD checks of nominal states).
pub const DEFAULT_TOL_ZERO: f64 = 1e-10;

/// Frobenius tolerance for the synthesis residuals ‖E ⋆ ρ_A − ρ^{T_B}‖.
pub const DEFAULT_TOL_RESID: f64 = 1e-8;

/// Relative Hermiticity tolerance for inputs that must be Hermitian.
pub const DEFAULT_TOL_HERM: f64 = 1e-9;

/// Margin for complete-positivity and trace-preservation checks on Choi
/// matrices.
pub const CPTP_TOL: f64 = 1e-9;

/// Hermiticity/trace tolerance for pseudo-density operators.
pub const PDM_TOL: f64 = 1e-9;

/// Tolerance on M² = 1 for dichotomic observables.
pub const DICHOTOMIC_TOL: f64 = 1e-9;
