//! Crate-wide error type.

use thiserror::Error;

/// One validation finding; `validate` collects every violated invariant
/// instead of stopping at the first.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Diagnostic {
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown initial-data family `{0}`")]
    UnknownFamily(String),

    #[error("bad parameters for family `{family}`: {reason}")]
    BadFamilyParams { family: String, reason: String },

    #[error("problem specification invalid: {}", fmt_diagnostics(.0))]
    Validation(Vec<Diagnostic>),

    #[error("found {count} zeros of C(α); the finite-zero assumption is violated")]
    TooManyZeros { count: usize },

    #[error("quadrature tolerance not met: value {value:.17e}, error bound {error:.3e}")]
    ToleranceNotMet { value: f64, error: f64 },

    #[error("integrand certified non-integrable at η = {eta} (local exponent {exponent:.3})")]
    NonIntegrable { eta: f64, exponent: f64 },

    #[error("{what} = {value} outside admissible range {range}")]
    OutOfRange { what: &'static str, value: f64, range: String },

    #[error("η = {eta} is inside the blow-up cutoff layer (η* = {eta_star}); {hint}")]
    BlowupProximity { eta: f64, eta_star: f64, hint: String },

    #[error("special parameter case: {0}")]
    SpecialCase(String),

    #[error("steady-state hypotheses violated: {0}")]
    HypothesisViolated(String),

    #[error("rate fit unstable: max log-log residual {residual:.3} exceeds 0.05")]
    FitUnstable { residual: f64 },

    #[error("tail extrapolation uncertain: bounds [{lo:.6}, {hi:.6}] disagree beyond 1%")]
    TailUncertain { lo: f64, hi: f64 },

    #[error("time step {dt:.3e} violates the advective stability bound {bound:.3e}")]
    StabilityViolation { dt: f64, bound: f64 },

    #[error("blow-up monitor tripped: max|u_x| = {max_v:.3e} exceeded ceiling {ceiling:.1e} at t = {t}")]
    Overflow { max_v: f64, ceiling: f64, t: f64 },
}

fn fmt_diagnostics(d: &[Diagnostic]) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
