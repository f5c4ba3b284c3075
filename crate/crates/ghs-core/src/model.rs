//! Problem data: initial profiles u₀′ and ρ₀ on [0,1], the parameter pair
//! (λ, κ), numerical tolerances, and validation of the whole specification.
//!
//! Profiles are kept as function handles rather than sample arrays so the
//! quadrature layer can refine wherever it needs; sampled user data is turned
//! into a handle through a monotone piecewise-cubic interpolant.

use std::fmt;
use std::sync::Arc;

use crate::error::{Diagnostic, Error, Result};
use crate::numerics::{self, Pchip};

/// Boundary-condition mode for the first component u.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BcMode {
    Periodic,
    Dirichlet,
}

/// Shareable scalar profile on [0,1].
#[derive(Clone)]
pub struct ProfileFn(Arc<dyn Fn(f64) -> f64 + Send + Sync>);

impl ProfileFn {
    pub fn new<F: Fn(f64) -> f64 + Send + Sync + 'static>(f: F) -> Self {
        ProfileFn(Arc::new(f))
    }

    #[inline]
    pub fn eval(&self, alpha: f64) -> f64 {
        (self.0)(alpha)
    }
}

impl fmt::Debug for ProfileFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ProfileFn(..)")
    }
}

/// Initial data for the system: the slope u₀′, the second component ρ₀, an
/// optional antiderivative u₀ (needed for Dirichlet trajectory output), the
/// boundary mode and quadrature hints.
#[derive(Debug, Clone)]
pub struct InitialData {
    pub u0_prime: ProfileFn,
    pub rho0: ProfileFn,
    pub u0: Option<ProfileFn>,
    pub bc_mode: BcMode,
    pub family_tag: String,
    /// Interior points where the profiles lose smoothness; quadrature panels
    /// never straddle them.
    pub breakpoints: Vec<f64>,
    /// True for step data: profiles are only C⁰ a.e. and the endpoint-match
    /// checks do not apply (a seam jump is just another breakpoint).
    pub discontinuous: bool,
}

impl InitialData {
    pub fn new(u0_prime: ProfileFn, rho0: ProfileFn, bc_mode: BcMode, tag: &str) -> Self {
        InitialData {
            u0_prime,
            rho0,
            u0: None,
            bc_mode,
            family_tag: tag.to_string(),
            breakpoints: Vec::new(),
            discontinuous: false,
        }
    }

    pub fn with_u0(mut self, u0: ProfileFn) -> Self {
        self.u0 = Some(u0);
        self
    }

    /// Built-in families used by the worked examples.
    ///
    /// * `cos2pi`   — u₀′ = cos 2πα, ρ₀ ≡ c (params `[]` → c = 1)
    /// * `sin2pi`   — u₀′ = cos 2πα, ρ₀ = c·sin 2πα (params `[]` → c = 1)
    /// * `const`    — u₀′ ≡ 0, ρ₀ ≡ c (params `[]` → c = 1)
    /// * `affine`   — u₀′ = 1 − 2α, ρ₀ ≡ c, u₀ = α(1−α), Dirichlet
    /// * `piecewise_c2` — the step data with a double root on [1/4, 3/4]
    pub fn builtin(name: &str, params: &[f64]) -> Result<InitialData> {
        let one_param = |family: &str| -> Result<f64> {
            match params {
                [] => Ok(1.0),
                [c] => Ok(*c),
                _ => Err(Error::BadFamilyParams {
                    family: family.to_string(),
                    reason: format!("expected at most 1 parameter, got {}", params.len()),
                }),
            }
        };
        match name {
            "cos2pi" => {
                let c = one_param("cos2pi")?;
                let mut data = InitialData::new(
                    ProfileFn::new(|a| (2.0 * std::f64::consts::PI * a).cos()),
                    ProfileFn::new(move |_| c),
                    BcMode::Periodic,
                    "trig",
                );
                data.u0 = Some(ProfileFn::new(|a| {
                    (2.0 * std::f64::consts::PI * a).sin() / (2.0 * std::f64::consts::PI)
                }));
                Ok(data)
            }
            "sin2pi" => {
                let c = one_param("sin2pi")?;
                let mut data = InitialData::new(
                    ProfileFn::new(|a| (2.0 * std::f64::consts::PI * a).cos()),
                    ProfileFn::new(move |a| c * (2.0 * std::f64::consts::PI * a).sin()),
                    BcMode::Periodic,
                    "trig",
                );
                data.u0 = Some(ProfileFn::new(|a| {
                    (2.0 * std::f64::consts::PI * a).sin() / (2.0 * std::f64::consts::PI)
                }));
                Ok(data)
            }
            "const" => {
                let c = one_param("const")?;
                let mut data = InitialData::new(
                    ProfileFn::new(|_| 0.0),
                    ProfileFn::new(move |_| c),
                    BcMode::Periodic,
                    "const",
                );
                data.u0 = Some(ProfileFn::new(|_| 0.0));
                Ok(data)
            }
            "affine" => {
                let c = one_param("affine")?;
                let mut data = InitialData::new(
                    ProfileFn::new(|a| 1.0 - 2.0 * a),
                    ProfileFn::new(move |_| c),
                    BcMode::Dirichlet,
                    "affine",
                );
                data.u0 = Some(ProfileFn::new(|a| a * (1.0 - a)));
                Ok(data)
            }
            "piecewise_c2" => {
                if !params.is_empty() {
                    return Err(Error::BadFamilyParams {
                        family: "piecewise_c2".to_string(),
                        reason: "family takes no parameters".to_string(),
                    });
                }
                let u0p = ProfileFn::new(|a| {
                    if a < 0.25 {
                        0.5
                    } else if a <= 0.75 {
                        1.0
                    } else {
                        -2.5
                    }
                });
                let rho0 = ProfileFn::new(|a| {
                    if a < 0.25 {
                        -0.25
                    } else if a <= 0.75 {
                        0.0
                    } else {
                        -0.25
                    }
                });
                // u0 is the continuous antiderivative; mean-zero slope makes it periodic.
                let u0 = ProfileFn::new(|a| {
                    if a < 0.25 {
                        0.5 * a
                    } else if a <= 0.75 {
                        0.125 + (a - 0.25)
                    } else {
                        0.625 - 2.5 * (a - 0.75)
                    }
                });
                let mut data = InitialData::new(u0p, rho0, BcMode::Periodic, "piecewise-constant");
                data.u0 = Some(u0);
                data.breakpoints = vec![0.25, 0.75];
                data.discontinuous = true;
                Ok(data)
            }
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    /// Interpolate sampled profiles with a monotone piecewise cubic so the
    /// evaluator has arbitrary-α access. Sample knots are kept as quadrature
    /// breakpoints.
    pub fn from_samples(
        alphas: &[f64],
        u0_prime: &[f64],
        rho0: &[f64],
        bc_mode: BcMode,
    ) -> Result<InitialData> {
        let mk = |ys: &[f64]| -> Result<Pchip> {
            Pchip::new(alphas.to_vec(), ys.to_vec()).map_err(|e| Error::BadFamilyParams {
                family: "custom-samples".to_string(),
                reason: e.to_string(),
            })
        };
        let pu = mk(u0_prime)?;
        let pr = mk(rho0)?;
        let mut data = InitialData::new(
            ProfileFn::new(move |a| pu.eval(a)),
            ProfileFn::new(move |a| pr.eval(a)),
            bc_mode,
            "custom-samples",
        );
        data.breakpoints = alphas
            .iter()
            .copied()
            .filter(|&a| a > 0.0 && a < 1.0)
            .collect();
        Ok(data)
    }
}

/// Quadrature, root and near-blow-up tolerances.
#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
#[serde(default)]
pub struct ToleranceSet {
    pub quad_abs: f64,
    pub quad_rel: f64,
    pub root_tol: f64,
    /// Fraction of η* at which field evaluation near blow-up stops.
    pub eta_cutoff: f64,
    /// Scan resolution for root and extremum searches.
    pub grid_n: usize,
}

impl Default for ToleranceSet {
    fn default() -> Self {
        ToleranceSet {
            quad_abs: 1e-10,
            quad_rel: 1e-9,
            root_tol: 1e-12,
            eta_cutoff: 1e-6,
            grid_n: 512,
        }
    }
}

/// A full problem: parameters, initial data and tolerances.
#[derive(Debug, Clone)]
pub struct ProblemSpec {
    pub lambda: f64,
    pub kappa: f64,
    pub data: InitialData,
    pub tol: ToleranceSet,
}

impl ProblemSpec {
    pub fn new(lambda: f64, kappa: f64, data: InitialData) -> Self {
        ProblemSpec { lambda, kappa, data, tol: ToleranceSet::default() }
    }

    pub fn with_tol(mut self, tol: ToleranceSet) -> Self {
        self.tol = tol;
        self
    }

    #[inline]
    pub fn u0_prime(&self, alpha: f64) -> f64 {
        self.data.u0_prime.eval(alpha)
    }

    #[inline]
    pub fn rho0(&self, alpha: f64) -> f64 {
        self.data.rho0.eval(alpha)
    }

    /// Check every type invariant numerically, collecting all findings.
    pub fn validate(&self) -> std::result::Result<(), Vec<Diagnostic>> {
        let mut diags: Vec<Diagnostic> = Vec::new();
        let mut push = |field: &str, message: String| {
            diags.push(Diagnostic { field: field.to_string(), message });
        };

        if !self.lambda.is_finite() {
            push("lambda", format!("must be finite, got {}", self.lambda));
        }
        if !self.kappa.is_finite() {
            push("kappa", format!("must be finite, got {}", self.kappa));
        }

        let t = &self.tol;
        if !(t.quad_abs > 0.0 && t.quad_rel > 0.0 && t.root_tol > 0.0 && t.eta_cutoff > 0.0) {
            push("tol", "all tolerances must be positive".to_string());
        }
        if t.eta_cutoff >= 1.0 {
            push("tol.eta_cutoff", format!("must be < 1, got {}", t.eta_cutoff));
        }
        if t.grid_n == 0 {
            push("tol.grid_n", "must be positive".to_string());
        }

        // Boundedness of both profiles on the scan grid.
        let n = t.grid_n.max(16);
        let mut bounded = true;
        for i in 0..=n {
            let a = i as f64 / n as f64;
            if !self.u0_prime(a).is_finite() || !self.rho0(a).is_finite() {
                bounded = false;
                break;
            }
        }
        if !bounded {
            push("data", "profiles must be bounded on [0,1]".to_string());
        }

        match self.data.bc_mode {
            BcMode::Periodic => {
                if !self.data.discontinuous {
                    let du = (self.u0_prime(0.0) - self.u0_prime(1.0)).abs();
                    if du > 1e-12 {
                        push("data.u0_prime", format!("periodicity violated: |u0'(0)-u0'(1)| = {du:.3e}"));
                    }
                    let dr = (self.rho0(0.0) - self.rho0(1.0)).abs();
                    if dr > 1e-12 {
                        push("data.rho0", format!("periodicity violated: |rho0(0)-rho0(1)| = {dr:.3e}"));
                    }
                }
                if bounded {
                    // Periodic u forces a mean-zero slope; the check is itself a
                    // quadrature result, hence the 100x tolerance.
                    let mean = numerics::integrate(
                        &|a| self.u0_prime(a),
                        0.0,
                        1.0,
                        &self.data.breakpoints,
                        &[],
                        t.quad_abs,
                        t.quad_rel,
                    );
                    if mean.value.abs() > 100.0 * t.quad_abs {
                        push(
                            "data.u0_prime",
                            format!("mean-zero violated: ∫u0' dα = {:.6e}", mean.value),
                        );
                    }
                }
            }
            BcMode::Dirichlet => {
                if let Some(u0) = &self.data.u0 {
                    if u0.eval(0.0).abs() > 1e-12 || u0.eval(1.0).abs() > 1e-12 {
                        push(
                            "data.u0",
                            format!(
                                "Dirichlet data requires u0(0)=u0(1)=0, got ({:.3e}, {:.3e})",
                                u0.eval(0.0),
                                u0.eval(1.0)
                            ),
                        );
                    }
                }
            }
        }

        if diags.is_empty() {
            Ok(())
        } else {
            Err(diags)
        }
    }

    pub fn validated(&self) -> Result<&Self> {
        self.validate().map_err(Error::Validation)?;
        Ok(self)
    }
}

/// The four worked examples shipped with the CLI.
///
/// 1. (λ,κ) = (−1/2, −1), u₀′ = cos 2πα, ρ₀ ≡ 1/2 — one-sided blow-up.
/// 2. (λ,κ) = (−1, 1),  u₀′ = cos 2πα, ρ₀ = sin 2πα — blow-up at a ρ₀ zero.
/// 3. (λ,κ) = (1, 1),   u₀′ = cos 2πα, ρ₀ ≡ 1 — two-sided, everywhere blow-up.
/// 4. (λ,κ) = (−1/2, 1), u₀′ = 1 − 2α, ρ₀ ≡ 1 (Dirichlet) — steady state in finite time.
pub fn example_spec(id: u8) -> Result<ProblemSpec> {
    match id {
        1 => Ok(ProblemSpec::new(-0.5, -1.0, InitialData::builtin("cos2pi", &[0.5])?)),
        2 => Ok(ProblemSpec::new(-1.0, 1.0, InitialData::builtin("sin2pi", &[])?)),
        3 => Ok(ProblemSpec::new(1.0, 1.0, InitialData::builtin("cos2pi", &[])?)),
        4 => Ok(ProblemSpec::new(-0.5, 1.0, InitialData::builtin("affine", &[])?)),
        other => Err(Error::OutOfRange {
            what: "example id",
            value: other as f64,
            range: "1..=4".to_string(),
        }),
    }
}
