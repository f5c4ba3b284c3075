//! Semi-analytic solver and regularity classifier for the generalized
//! two-component Hunter-Saxton system
//!
//! ```text
//! u_xt + u u_xx − λ u_x² − κ ρ² = I(t),   ρ_t + u ρ_x = 2λ ρ u_x
//! ```
//!
//! on [0,1] with periodic (or Dirichlet) boundary conditions, where the
//! nonlocal term I(t) keeps u_x mean-free. Solutions are reconstructed along
//! characteristics from the quadratic
//!
//! ```text
//! Q(α,η) = C(α) η² − 2λ u₀′(α) η + 1,   C(α) = λ(λ u₀′² − κ ρ₀²),
//! ```
//!
//! whose earliest positive root over α, together with its multiplicity,
//! decides between finite-time blow-up, global existence, and convergence to
//! steady states. The crate provides:
//!
//! * [`model`] — problem data, built-in profile families, validation;
//! * [`quadratic`] — pointwise and global analysis of Q (Ω/Σ split, M, N, η*);
//! * [`quadrature`] — the integral terms, the time map t(η) and its inverse,
//!   terminal times with tail extrapolation;
//! * [`evaluator`] — jacobian, u_x∘γ, ρ∘γ, trajectories, Eulerian slices and
//!   the steady-state profiles;
//! * [`classifier`] — the executable regime decision tree with predicted and
//!   numerically fitted blow-up rate exponents;
//! * [`oracle`] — an independent pseudo-spectral direct integrator of the PDE
//!   used to cross-validate the representation formulas.

pub mod error;
pub mod model;
pub mod numerics;
pub mod quadratic;
pub mod quadrature;
pub mod rates;
pub mod evaluator;

pub use error::{Diagnostic, Error, Result};
pub use model::{example_spec, BcMode, InitialData, ProblemSpec, ProfileFn, ToleranceSet};
pub use quadratic::{analyze_point, find_omega, root_report, Multiplicity, PointAnalysis, RootReport};
pub use quadrature::{eta_of_time, i2, p0_partial, pbar0, terminal_time, time_of_eta, IntegralCache, TerminalTime};
