//! Pointwise solution reconstruction along characteristics: the jacobian
//! γ_α = P₀/P̄₀, the fields u_x∘γ and ρ∘γ, trajectories γ(α,t), Eulerian
//! resampling, and the finite-time steady states of the λκ < 0 regime.
//!
//! Periodic trajectories carry a time-dependent gauge γ₀(t) = γ(0,t) fixed by
//! the mean-zero convention ∫u dx = 0, which yields
//! γ̇₀ = −∫₀¹ (u∘γ − u∘γ(0)) γ_α dα; the gauge is integrated in η with a
//! classical fourth-order stepper on the cache knots.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{BcMode, ProblemSpec};
use crate::quadratic::{coeff_c, q_value, Multiplicity, RootReport};
use crate::quadrature::{self, p0_partial, time_of_eta};
use crate::rates::{self, Behavior};

/// One reconstructed point on a characteristic.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SolutionSample {
    pub alpha: f64,
    pub eta: f64,
    pub t: f64,
    pub jac: f64,
    pub ux: f64,
    pub rho: f64,
    pub gamma: Option<f64>,
}

/// One point of an Eulerian slice.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SlicePoint {
    pub alpha: f64,
    pub x: f64,
    pub eta: f64,
    pub t: f64,
    pub jac: f64,
    pub ux: f64,
    pub rho: f64,
}

/// The η-dependent integral pair shared by every field at a fixed time.
#[derive(Debug, Clone, Copy)]
pub struct FieldContext {
    pub eta: f64,
    pub pbar: f64,
    pub i2: f64,
}

impl FieldContext {
    /// Unguarded constructor; see [`guard_eta`] for the public cutoff.
    pub fn new(spec: &ProblemSpec, report: &RootReport, eta: f64) -> Result<Self> {
        Ok(FieldContext {
            eta,
            pbar: quadrature::pbar0(spec, report, eta)?,
            i2: quadrature::i2(spec, report, eta)?,
        })
    }
}

/// γ_α at one point given the context.
#[inline]
pub fn jac_at(spec: &ProblemSpec, ctx: &FieldContext, alpha: f64) -> f64 {
    let q = q_value(spec, alpha, ctx.eta).max(1e-300);
    q.powf(-0.5 / spec.lambda) / ctx.pbar
}

/// u_x∘γ at one point given the context.
#[inline]
pub fn ux_at(spec: &ProblemSpec, ctx: &FieldContext, alpha: f64) -> f64 {
    let lam = spec.lambda;
    let q = q_value(spec, alpha, ctx.eta).max(1e-300);
    let space = (lam * spec.u0_prime(alpha) - ctx.eta * coeff_c(spec, alpha)) / q;
    ctx.pbar.powf(-2.0 * lam) / lam * (space - ctx.i2 / ctx.pbar)
}

/// ρ∘γ at one point given the context.
#[inline]
pub fn rho_at(spec: &ProblemSpec, ctx: &FieldContext, alpha: f64) -> f64 {
    let q = q_value(spec, alpha, ctx.eta).max(1e-300);
    spec.rho0(alpha) / q * ctx.pbar.powf(-2.0 * spec.lambda)
}

fn ensure_parameters(spec: &ProblemSpec) -> Result<()> {
    if spec.lambda == 0.0 {
        return Err(Error::SpecialCase(
            "λ = 0: globally regular special case; see the classifier verdict".to_string(),
        ));
    }
    if spec.kappa == 0.0 {
        return Err(Error::SpecialCase(
            "κ = 0: the system reduces to the scalar stretching equation; see the classifier verdict"
                .to_string(),
        ));
    }
    Ok(())
}

/// Reject evaluation inside the blow-up cutoff layer, describing the
/// predicted divergence instead of returning a meaningless number.
fn guard_eta(spec: &ProblemSpec, report: &RootReport, eta: f64) -> Result<()> {
    if eta < 0.0 || !eta.is_finite() {
        return Err(Error::OutOfRange { what: "eta", value: eta, range: "η ≥ 0".to_string() });
    }
    if let Some(es) = report.eta_star {
        if eta > es * (1.0 - spec.tol.eta_cutoff) {
            let pred = match report.multiplicity {
                Multiplicity::Double => rates::double_root(spec.lambda),
                _ => rates::single_root(spec.lambda),
            };
            let sign = if spec.lambda < 0.0 { "-inf" } else { "+inf" };
            let rate = match pred.ux_at_abar {
                Behavior::Power(p) => format!("(η*-η)^{p:.4}"),
                Behavior::Log => "logarithmic".to_string(),
                Behavior::Bounded => "bounded".to_string(),
            };
            return Err(Error::BlowupProximity {
                eta,
                eta_star: es,
                hint: format!("predicted u_x(ᾱ) → {sign} like {rate}"),
            });
        }
    }
    Ok(())
}

/// γ_α(α,η) = Q^(−1/2λ)/P̄₀; positive before η*.
pub fn jacobian(spec: &ProblemSpec, report: &RootReport, alpha: f64, eta: f64) -> Result<f64> {
    ensure_parameters(spec)?;
    guard_eta(spec, report, eta)?;
    let ctx = FieldContext::new(spec, report, eta)?;
    Ok(jac_at(spec, &ctx, alpha))
}

/// u_x along the characteristic from α.
pub fn eval_ux(spec: &ProblemSpec, report: &RootReport, alpha: f64, eta: f64) -> Result<f64> {
    ensure_parameters(spec)?;
    guard_eta(spec, report, eta)?;
    let ctx = FieldContext::new(spec, report, eta)?;
    Ok(ux_at(spec, &ctx, alpha))
}

/// ρ along the characteristic from α.
pub fn eval_rho(spec: &ProblemSpec, report: &RootReport, alpha: f64, eta: f64) -> Result<f64> {
    ensure_parameters(spec)?;
    guard_eta(spec, report, eta)?;
    let ctx = FieldContext::new(spec, report, eta)?;
    Ok(rho_at(spec, &ctx, alpha))
}

/// Fixed α-grid with Simpson weights, segments aligned to data breakpoints.
struct SimpsonGrid {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl SimpsonGrid {
    fn build(breakpoints: &[f64], target: usize) -> Self {
        let mut cuts = vec![0.0, 1.0];
        for &b in breakpoints {
            if b > 1e-12 && b < 1.0 - 1e-12 {
                cuts.push(b);
            }
        }
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-12);

        let mut nodes = Vec::with_capacity(target + 8);
        let mut weights = Vec::with_capacity(target + 8);
        for w in cuts.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let mut m = ((hi - lo) * target as f64).ceil() as usize;
            if m < 16 {
                m = 16;
            }
            if m % 2 == 1 {
                m += 1;
            }
            let h = (hi - lo) / m as f64;
            for i in 0..=m {
                nodes.push(lo + i as f64 * h);
                let w = if i == 0 || i == m {
                    h / 3.0
                } else if i % 2 == 1 {
                    4.0 * h / 3.0
                } else {
                    2.0 * h / 3.0
                };
                weights.push(w);
            }
        }
        SimpsonGrid { nodes, weights }
    }

    /// Cumulative integral of the sampled values at every node (composite
    /// Simpson over interval pairs, quadratic correction on odd nodes).
    fn cumulative(&self, f: &[f64]) -> Vec<f64> {
        let n = self.nodes.len();
        let mut out = vec![0.0; n];
        let mut i = 0;
        while i + 2 < n {
            // Within one segment nodes are uniformly spaced; segment joins
            // duplicate the cut point with zero-width steps handled below.
            let h1 = self.nodes[i + 1] - self.nodes[i];
            let h2 = self.nodes[i + 2] - self.nodes[i + 1];
            if h1 <= 0.0 {
                out[i + 1] = out[i];
                i += 1;
                continue;
            }
            if h2 <= 0.0 || (h1 - h2).abs() > 1e-12 * h1 {
                // Trapezoid fallback across irregular joints.
                out[i + 1] = out[i] + 0.5 * h1 * (f[i] + f[i + 1]);
                i += 1;
                continue;
            }
            let h = h1;
            out[i + 1] = out[i] + h / 12.0 * (5.0 * f[i] + 8.0 * f[i + 1] - f[i + 2]);
            out[i + 2] = out[i] + h / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
            i += 2;
        }
        if i + 1 < n {
            let h = self.nodes[i + 1] - self.nodes[i];
            out[i + 1] = out[i] + 0.5 * h * (f[i] + f[i + 1]);
        }
        out
    }
}

/// Time-dependent gauge γ₀(η) for periodic trajectories, with cubic Hermite
/// interpolation between stepper knots.
pub struct GammaGauge {
    etas: Vec<f64>,
    g0: Vec<f64>,
    dg0: Vec<f64>,
}

impl GammaGauge {
    /// Integrate dγ₀/dη = −(1/P̄₀)∫₀¹ V(α) P₀(α) dα, V(α) = ∫₀^α P̄₀^{2λ}(u_x∘γ)γ_y dy,
    /// from 0 to `eta_max`.
    pub fn build(spec: &ProblemSpec, report: &RootReport, eta_max: f64) -> Result<Self> {
        ensure_parameters(spec)?;
        if eta_max < 0.0 {
            return Err(Error::OutOfRange {
                what: "eta_max",
                value: eta_max,
                range: "η ≥ 0".to_string(),
            });
        }
        let grid = SimpsonGrid::build(&spec.data.breakpoints, 2048);
        let u0p: Vec<f64> = grid.nodes.iter().map(|&a| spec.u0_prime(a)).collect();
        let cvals: Vec<f64> = grid.nodes.iter().map(|&a| coeff_c(spec, a)).collect();
        let lam = spec.lambda;
        let power = -0.5 / lam;

        // dγ₀/dη at one η from the grid arrays.
        let rhs = |eta: f64| -> f64 {
            let m = grid.nodes.len();
            let mut p0 = vec![0.0; m];
            let mut pbar = 0.0;
            let mut i2v = 0.0;
            for i in 0..m {
                let q = ((cvals[i] * eta - 2.0 * lam * u0p[i]) * eta + 1.0).max(1e-300);
                p0[i] = q.powf(power);
                pbar += grid.weights[i] * p0[i];
                i2v += grid.weights[i] * (lam * u0p[i] - eta * cvals[i]) * p0[i] / q;
            }
            // W = P̄₀^{2λ}·(u_x∘γ)·γ_α collapses to the bracket below.
            let mut w = vec![0.0; m];
            for i in 0..m {
                let q = ((cvals[i] * eta - 2.0 * lam * u0p[i]) * eta + 1.0).max(1e-300);
                let space = (lam * u0p[i] - eta * cvals[i]) / q;
                w[i] = (space - i2v / pbar) * p0[i] / (lam * pbar);
            }
            let v = grid.cumulative(&w);
            let mut total = 0.0;
            for i in 0..m {
                total += grid.weights[i] * v[i] * p0[i];
            }
            -total / pbar
        };

        // Graded steps: subdivide the geometric cache knots.
        let mut knots: Vec<f64> = vec![0.0];
        match report.eta_star {
            Some(es) => {
                let mut j = 1;
                loop {
                    let k = es * (1.0 - 0.5f64.powi(j));
                    if k >= eta_max || j > 40 {
                        break;
                    }
                    knots.push(k);
                    j += 1;
                }
            }
            None => {
                let mut e: f64 = 1.0;
                while e < eta_max {
                    knots.push(e);
                    e *= 2.0;
                }
            }
        }
        knots.push(eta_max);
        knots.dedup_by(|a, b| (*a - *b).abs() < 1e-15);

        let mut etas = vec![0.0];
        let mut g0 = vec![0.0];
        let mut dg0 = vec![rhs(0.0)];
        let mut gamma = 0.0;
        for w in knots.windows(2) {
            let steps = 48usize;
            let h = (w[1] - w[0]) / steps as f64;
            if h <= 0.0 {
                continue;
            }
            for s in 0..steps {
                let e0 = w[0] + s as f64 * h;
                let k1 = if s == 0 { *dg0.last().unwrap() } else { rhs(e0) };
                let k2 = rhs(e0 + 0.5 * h);
                let k3 = k2; // RHS depends on η only, not on γ₀ (pure quadrature).
                let k4 = rhs(e0 + h);
                gamma += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                etas.push(e0 + h);
                g0.push(gamma);
                dg0.push(k4);
            }
        }
        Ok(GammaGauge { etas, g0, dg0 })
    }

    /// γ₀ at η by cubic Hermite interpolation on the stepper knots.
    pub fn gamma0(&self, eta: f64) -> f64 {
        let n = self.etas.len();
        if eta <= 0.0 {
            return 0.0;
        }
        if eta >= self.etas[n - 1] {
            return self.g0[n - 1];
        }
        let i = match self
            .etas
            .binary_search_by(|v| v.partial_cmp(&eta).unwrap())
        {
            Ok(i) => return self.g0[i.min(n - 1)],
            Err(i) => i - 1,
        };
        let h = self.etas[i + 1] - self.etas[i];
        let s = (eta - self.etas[i]) / h;
        let (y0, y1, d0, d1) = (self.g0[i], self.g0[i + 1], self.dg0[i], self.dg0[i + 1]);
        let h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
        let h10 = s * (1.0 - s) * (1.0 - s);
        let h01 = s * s * (3.0 - 2.0 * s);
        let h11 = s * s * (s - 1.0);
        h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1
    }
}

/// γ(α,η): the Dirichlet flow map is pinned at the boundary
/// (γ(0,·) ≡ 0, γ(1,·) ≡ 1); the periodic one carries the mean-zero gauge.
pub fn trajectory(spec: &ProblemSpec, report: &RootReport, alpha: f64, eta: f64) -> Result<f64> {
    ensure_parameters(spec)?;
    guard_eta(spec, report, eta)?;
    let ctx = FieldContext::new(spec, report, eta)?;
    let g = p0_partial(spec, report, alpha, eta)? / ctx.pbar;
    match spec.data.bc_mode {
        BcMode::Dirichlet => Ok(g),
        BcMode::Periodic => {
            let gauge = GammaGauge::build(spec, report, eta)?;
            Ok(gauge.gamma0(eta) + g)
        }
    }
}

/// u∘γ for Dirichlet data, where γ(0,t) ≡ 0 anchors the flow:
/// u∘γ = d/dt (p0_partial/P̄₀).
pub fn u_on_characteristic(
    spec: &ProblemSpec,
    report: &RootReport,
    alpha: f64,
    eta: f64,
) -> Result<f64> {
    ensure_parameters(spec)?;
    guard_eta(spec, report, eta)?;
    if spec.data.bc_mode != BcMode::Dirichlet {
        return Err(Error::SpecialCase(
            "u∘γ via the anchored formula requires Dirichlet data".to_string(),
        ));
    }
    let ctx = FieldContext::new(spec, report, eta)?;
    let lam = spec.lambda;
    let g = p0_partial(spec, report, alpha, eta)? / ctx.pbar;
    // d/dη p0_partial = (1/λ)∫₀^α (λu₀′ − ηC) Q^{−1−1/2λ}, the partial i2.
    let i2p = partial_i2(spec, report, alpha, eta)?;
    Ok(ctx.pbar.powf(-2.0 * lam) / lam * (i2p - g * ctx.i2) / ctx.pbar)
}

fn partial_i2(spec: &ProblemSpec, report: &RootReport, alpha: f64, eta: f64) -> Result<f64> {
    let lam = spec.lambda;
    let mut breaks = spec.data.breakpoints.clone();
    breaks.extend_from_slice(&report.omega_set);
    let singular: Vec<f64> = if report.alpha_bar_interval {
        Vec::new()
    } else {
        report.alpha_bar.clone()
    };
    let f = |a: f64| {
        let q = q_value(spec, a, eta).max(1e-300);
        (lam * spec.u0_prime(a) - eta * coeff_c(spec, a)) * q.powf(-1.0 - 0.5 / lam)
    };
    let r = crate::numerics::integrate(
        &f,
        0.0,
        alpha,
        &breaks,
        &singular,
        spec.tol.quad_abs,
        spec.tol.quad_rel,
    );
    if r.converged {
        Ok(r.value)
    } else {
        Err(Error::ToleranceNotMet { value: r.value, error: r.error })
    }
}

/// Steady-state profiles U∞, P∞ with their defining constants
/// 𝓜 = ∫ C^(−1/2λ) dα and 𝓝 = ∫ u₀′ C^(−1−1/2λ) dα.
#[derive(Clone)]
pub struct SteadyState {
    pub curly_m: f64,
    pub curly_n: f64,
    spec: ProblemSpec,
}

impl std::fmt::Debug for SteadyState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SteadyState")
            .field("curly_m", &self.curly_m)
            .field("curly_n", &self.curly_n)
            .finish()
    }
}

impl SteadyState {
    /// P∞(α) = ρ₀ / (C 𝓜^{2λ}).
    pub fn p_inf(&self, alpha: f64) -> f64 {
        let spec = &self.spec;
        self.spec.rho0(alpha) / (coeff_c(spec, alpha) * self.curly_m.powf(2.0 * spec.lambda))
    }

    /// U∞(α) = −(𝓝/𝓜^{1+2λ} + u₀′/(C 𝓜^{2λ})); the u₀′/ρ₀·P∞ form of the
    /// second term with the removable ρ₀ factor cancelled.
    pub fn u_inf(&self, alpha: f64) -> f64 {
        let spec = &self.spec;
        let lam = spec.lambda;
        -(self.curly_n / self.curly_m.powf(1.0 + 2.0 * lam)
            + spec.u0_prime(alpha) / (coeff_c(spec, alpha) * self.curly_m.powf(2.0 * lam)))
    }
}

/// Compute the steady-state constants for the λκ < 0 non-vanishing-ρ₀ regime.
pub fn steady_constants(spec: &ProblemSpec) -> Result<SteadyState> {
    ensure_parameters(spec)?;
    if spec.lambda * spec.kappa >= 0.0 {
        return Err(Error::HypothesisViolated(format!(
            "steady states require λκ < 0, got λκ = {}",
            spec.lambda * spec.kappa
        )));
    }
    // C > 0 on [0,1] and no ρ₀ zero with λu₀′ > 0 there.
    let n = spec.tol.grid_n.max(64);
    for i in 0..=n {
        let a = i as f64 / n as f64;
        let c = coeff_c(spec, a);
        if c <= spec.tol.root_tol {
            return Err(Error::HypothesisViolated(format!(
                "C(α) must stay positive; C({a}) = {c:.3e}"
            )));
        }
        if spec.rho0(a).abs() <= spec.tol.root_tol && spec.lambda * spec.u0_prime(a) > 0.0 {
            return Err(Error::HypothesisViolated(format!(
                "ρ₀({a}) = 0 with λu₀′ > 0 puts the data in a blow-up regime"
            )));
        }
    }

    let power = -0.5 / spec.lambda;
    let breaks = &spec.data.breakpoints;
    let m_int = crate::numerics::integrate(
        &|a: f64| coeff_c(spec, a).powf(power),
        0.0,
        1.0,
        breaks,
        &[],
        spec.tol.quad_abs,
        spec.tol.quad_rel,
    );
    let n_int = crate::numerics::integrate(
        &|a: f64| spec.u0_prime(a) * coeff_c(spec, a).powf(-1.0 + power),
        0.0,
        1.0,
        breaks,
        &[],
        spec.tol.quad_abs,
        spec.tol.quad_rel,
    );
    if !m_int.converged || !n_int.converged {
        return Err(Error::ToleranceNotMet {
            value: m_int.value,
            error: m_int.error.max(n_int.error),
        });
    }
    Ok(SteadyState { curly_m: m_int.value, curly_n: n_int.value, spec: spec.clone() })
}

/// Trace `n` characteristics at fixed η and return Eulerian samples sorted by
/// position. Uses a prebuilt gauge when supplied (periodic mode only).
pub fn eulerian_slice_with(
    spec: &ProblemSpec,
    report: &RootReport,
    gauge: Option<&GammaGauge>,
    eta: f64,
    n: usize,
) -> Result<Vec<SlicePoint>> {
    ensure_parameters(spec)?;
    guard_eta(spec, report, eta)?;
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "slice size",
            value: n as f64,
            range: "n ≥ 2".to_string(),
        });
    }
    let ctx = FieldContext::new(spec, report, eta)?;
    let t = time_of_eta(spec, report, eta)?;
    let gamma0 = match spec.data.bc_mode {
        BcMode::Dirichlet => 0.0,
        BcMode::Periodic => match gauge {
            Some(g) => g.gamma0(eta),
            None => GammaGauge::build(spec, report, eta)?.gamma0(eta),
        },
    };

    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let alpha = i as f64 / (n - 1) as f64;
        let x = gamma0 + p0_partial(spec, report, alpha, eta)? / ctx.pbar;
        out.push(SlicePoint {
            alpha,
            x,
            eta,
            t,
            jac: jac_at(spec, &ctx, alpha),
            ux: ux_at(spec, &ctx, alpha),
            rho: rho_at(spec, &ctx, alpha),
        });
    }
    // Positive jacobian means γ is strictly increasing in α.
    for w in out.windows(2) {
        debug_assert!(w[1].x > w[0].x, "non-monotone slice positions");
    }
    Ok(out)
}

pub fn eulerian_slice(
    spec: &ProblemSpec,
    report: &RootReport,
    eta: f64,
    n: usize,
) -> Result<Vec<SlicePoint>> {
    eulerian_slice_with(spec, report, None, eta, n)
}

/// Full sample (with trajectory) at one characteristic point.
pub fn sample(spec: &ProblemSpec, report: &RootReport, alpha: f64, eta: f64) -> Result<SolutionSample> {
    ensure_parameters(spec)?;
    guard_eta(spec, report, eta)?;
    let ctx = FieldContext::new(spec, report, eta)?;
    let t = time_of_eta(spec, report, eta)?;
    let gamma = trajectory(spec, report, alpha, eta).ok();
    Ok(SolutionSample {
        alpha,
        eta,
        t,
        jac: jac_at(spec, &ctx, alpha),
        ux: ux_at(spec, &ctx, alpha),
        rho: rho_at(spec, &ctx, alpha),
        gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::example_spec;
    use crate::quadratic::root_report;

    fn prepared(id: u8) -> (ProblemSpec, RootReport) {
        let spec = example_spec(id).unwrap();
        let report = root_report(&spec).unwrap();
        (spec, report)
    }

    /// §5.1 closed forms with η = t: Eqs. for u_x∘γ and ρ∘γ.
    fn ex1_ux(alpha: f64, t: f64) -> f64 {
        let c2 = (2.0 * std::f64::consts::PI * alpha).cos();
        let c4 = (4.0 * std::f64::consts::PI * alpha).cos();
        (8.0 * c2 + 2.0 * t * c4) / (8.0 + 8.0 * t * c2 + t * t * c4)
    }

    fn ex1_rho(alpha: f64, t: f64) -> f64 {
        let c2 = (2.0 * std::f64::consts::PI * alpha).cos();
        let c4 = (4.0 * std::f64::consts::PI * alpha).cos();
        4.0 / (8.0 + 8.0 * t * c2 + t * t * c4)
    }

    #[test]
    fn fields_at_eta_zero_return_initial_data() {
        for id in 1..=4 {
            let (spec, report) = prepared(id);
            for &alpha in &[0.0, 0.3, 0.77] {
                assert!((jacobian(&spec, &report, alpha, 0.0).unwrap() - 1.0).abs() < 1e-9);
                let ux = eval_ux(&spec, &report, alpha, 0.0).unwrap();
                assert!(
                    (ux - spec.u0_prime(alpha)).abs() < 1e-9,
                    "example {id}: u_x(α,0) = {ux}"
                );
                let rho = eval_rho(&spec, &report, alpha, 0.0).unwrap();
                assert!((rho - spec.rho0(alpha)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn example1_closed_form_fields() {
        let (spec, report) = prepared(1);
        // u_x(γ(0,t),t) at t = 1 is 10/17; ρ(γ(1/2,t),t) at t = 1 is 4.
        let ux = eval_ux(&spec, &report, 0.0, 1.0).unwrap();
        assert!((ux - 10.0 / 17.0).abs() < 1e-8, "got {ux}");
        let rho = eval_rho(&spec, &report, 0.5, 1.0).unwrap();
        assert!((rho - 4.0).abs() < 1e-7, "got {rho}");

        for &alpha in &[0.1, 0.35, 0.6, 0.9] {
            for &t in &[0.3, 0.8, 1.1] {
                let ux = eval_ux(&spec, &report, alpha, t).unwrap();
                assert!((ux - ex1_ux(alpha, t)).abs() < 1e-8);
                let rho = eval_rho(&spec, &report, alpha, t).unwrap();
                assert!((rho - ex1_rho(alpha, t)).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn example1_jacobian_closed_form() {
        // At α = 1/2 the quadratic is (8 − 8η + η²)/8 and P̄₀ ≡ 1; for
        // λ = −1/2 the exponent −1/(2λ) is 1.
        let (spec, report) = prepared(1);
        for &eta in &[0.2, 0.7, 1.1] {
            let j = jacobian(&spec, &report, 0.5, eta).unwrap();
            let want = (8.0 - 8.0 * eta + eta * eta) / 8.0;
            assert!((j - want).abs() < 1e-9, "jac({eta}) = {j}");
        }
    }

    #[test]
    fn jacobian_has_mean_one() {
        let (spec, report) = prepared(3);
        let eta = 0.3;
        let ctx = FieldContext::new(&spec, &report, eta).unwrap();
        let r = crate::numerics::integrate(
            &|a: f64| jac_at(&spec, &ctx, a),
            0.0,
            1.0,
            &[],
            &[],
            1e-11,
            1e-10,
        );
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-9, "mean jac = {}", r.value);
    }

    #[test]
    fn transport_law_relates_rho_and_jacobian() {
        for id in [1u8, 2, 3] {
            let (spec, report) = prepared(id);
            let es = report.eta_star.unwrap();
            for j in 1..=5 {
                let eta = es * 0.9 * j as f64 / 5.0;
                let ctx = FieldContext::new(&spec, &report, eta).unwrap();
                for &alpha in &[0.05, 0.3, 0.62, 0.98] {
                    let lhs = rho_at(&spec, &ctx, alpha);
                    let rhs = spec.rho0(alpha) * jac_at(&spec, &ctx, alpha).powf(2.0 * spec.lambda);
                    let scale = lhs.abs().max(1e-6);
                    assert!(
                        ((lhs - rhs) / scale).abs() < 1e-8,
                        "transport law violated at ({alpha}, {eta}) in example {id}"
                    );
                }
            }
        }
    }

    #[test]
    fn dirichlet_trajectory_pins_boundary() {
        let (spec, report) = prepared(4);
        for &eta in &[0.0, 0.5, 2.0] {
            assert!(trajectory(&spec, &report, 0.0, eta).unwrap().abs() < 1e-12);
            assert!((trajectory(&spec, &report, 1.0, eta).unwrap() - 1.0).abs() < 1e-9);
        }
        // γ(α,0) = α.
        for &alpha in &[0.2, 0.5, 0.9] {
            assert!((trajectory(&spec, &report, alpha, 0.0).unwrap() - alpha).abs() < 1e-10);
        }
    }

    #[test]
    fn periodic_trajectory_starts_at_identity() {
        let (spec, report) = prepared(1);
        for &alpha in &[0.0, 0.25, 0.8] {
            let g = trajectory(&spec, &report, alpha, 0.0).unwrap();
            assert!((g - alpha).abs() < 1e-10, "γ({alpha},0) = {g}");
        }
    }

    #[test]
    fn steady_constants_example4() {
        let spec = example_spec(4).unwrap();
        let st = steady_constants(&spec).unwrap();
        // 𝓜 = ∫ C dα = ∫ [¼(1−2α)² + ½] dα = 7/12 for λ = −1/2.
        assert!((st.curly_m - 7.0 / 12.0).abs() < 1e-10, "𝓜 = {}", st.curly_m);
        assert!(st.curly_n.abs() < 1e-10, "𝓝 = {}", st.curly_n);
        // ρ∞(α) = 7/(3(4α²−4α+3)); at 0 that is 7/9.
        for &alpha in &[0.0, 0.25, 0.6, 1.0] {
            let want = 7.0 / (3.0 * (4.0 * alpha * alpha - 4.0 * alpha + 3.0));
            assert!((st.p_inf(alpha) - want).abs() < 1e-9);
            let want_u = -spec.u0_prime(alpha) * want;
            assert!((st.u_inf(alpha) - want_u).abs() < 1e-9);
        }
        assert!((st.p_inf(0.0) - 7.0 / 9.0).abs() < 1e-9);
    }

    #[test]
    fn steady_constants_swapped_example4() {
        let mut spec = example_spec(4).unwrap();
        spec.lambda = 0.5;
        spec.kappa = -1.0;
        let st = steady_constants(&spec).unwrap();
        // ρ∞ = √2/((4α²−4α+3)·arcCot√2), arcCot x = arctan(1/x).
        let arccot_sqrt2 = (1.0f64 / 2.0f64.sqrt()).atan();
        for &alpha in &[0.0, 0.37, 1.0] {
            let want = 2.0f64.sqrt() / ((4.0 * alpha * alpha - 4.0 * alpha + 3.0) * arccot_sqrt2);
            let got = st.p_inf(alpha);
            assert!((got - want).abs() < 1e-8, "ρ∞({alpha}) = {got}, want {want}");
        }
    }

    #[test]
    fn steady_constants_rejects_blowup_regime() {
        let spec = example_spec(3).unwrap(); // λκ > 0
        assert!(matches!(steady_constants(&spec), Err(Error::HypothesisViolated(_))));
        let spec2 = example_spec(2).unwrap(); // λκ < 0 but ρ₀ vanishes with λu₀′ > 0
        assert!(matches!(steady_constants(&spec2), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn slice_at_eta_zero_echoes_initial_data() {
        let (spec, report) = prepared(4);
        let pts = eulerian_slice(&spec, &report, 0.0, 33).unwrap();
        for p in &pts {
            assert!((p.x - p.alpha).abs() < 1e-10);
            assert!((p.ux - spec.u0_prime(p.alpha)).abs() < 1e-9);
            assert!((p.rho - spec.rho0(p.alpha)).abs() < 1e-9);
        }
    }

    #[test]
    fn slice_positions_strictly_increase() {
        let (spec, report) = prepared(4);
        let pts = eulerian_slice(&spec, &report, 1.7, 65).unwrap();
        for w in pts.windows(2) {
            assert!(w[1].x > w[0].x);
        }
    }

    #[test]
    fn slice_approaches_steady_profile() {
        // At large η the Eulerian u_x profile converges to U∞ along
        // characteristics.
        let (spec, report) = prepared(4);
        let st = steady_constants(&spec).unwrap();
        let pts = eulerian_slice(&spec, &report, 1000.0, 65).unwrap();
        let mut worst = 0.0f64;
        for p in &pts {
            worst = worst.max((p.ux - st.u_inf(p.alpha)).abs());
        }
        assert!(worst < 1e-3, "sup |u_x − U∞| = {worst}");
    }

    #[test]
    fn blowup_proximity_guard_fires() {
        let (spec, report) = prepared(3);
        let es = report.eta_star.unwrap();
        let res = eval_ux(&spec, &report, 0.0, es * (1.0 - 1e-8));
        assert!(matches!(res, Err(Error::BlowupProximity { .. })));
    }

    #[test]
    fn lambda_zero_refused_with_special_case() {
        let mut spec = example_spec(3).unwrap();
        spec.lambda = 0.0;
        let report = root_report(&spec).unwrap();
        assert!(matches!(
            eval_ux(&spec, &report, 0.3, 0.1),
            Err(Error::SpecialCase(_))
        ));
    }

    #[test]
    fn characteristic_ode_consistency_dirichlet() {
        // d/dt γ(α,t) matches the anchored u∘γ within 1e-4.
        let (spec, report) = prepared(4);
        for &alpha in &[0.25, 0.5, 0.8] {
            for &eta in &[0.4, 1.0] {
                let t = time_of_eta(&spec, &report, eta).unwrap();
                let h = 1e-4;
                let ep = crate::quadrature::eta_of_time(&spec, &report, t + h).unwrap();
                let em = crate::quadrature::eta_of_time(&spec, &report, t - h).unwrap();
                let dgdt = (trajectory(&spec, &report, alpha, ep).unwrap()
                    - trajectory(&spec, &report, alpha, em).unwrap())
                    / (2.0 * h);
                let u = u_on_characteristic(&spec, &report, alpha, eta).unwrap();
                assert!(
                    (dgdt - u).abs() < 1e-4,
                    "α={alpha}, η={eta}: dγ/dt={dgdt}, u∘γ={u}"
                );
            }
        }
    }

    #[test]
    fn periodic_gauge_keeps_u_mean_zero() {
        // ∫ u dx = ∫ (u∘γ) γ_α dα must vanish; u∘γ(α) = γ̇₀ + Ġ(α), realised
        // here through the gauge derivative plus the anchored increment.
        let (spec, report) = prepared(1);
        let eta = 0.8;
        let gauge = GammaGauge::build(&spec, &report, eta).unwrap();
        let ctx = FieldContext::new(&spec, &report, eta).unwrap();
        // Central difference of γ(α,·) in t for a few α, then quadrature.
        let t = time_of_eta(&spec, &report, eta).unwrap();
        let h = 1e-5;
        let ep = crate::quadrature::eta_of_time(&spec, &report, t + h).unwrap();
        let em = crate::quadrature::eta_of_time(&spec, &report, t - h).unwrap();
        let gauge_p = GammaGauge::build(&spec, &report, ep).unwrap();
        let gauge_m = GammaGauge::build(&spec, &report, em).unwrap();
        let u_of = |alpha: f64| -> f64 {
            let gp = gauge_p.gamma0(ep)
                + p0_partial(&spec, &report, alpha, ep).unwrap()
                    / crate::quadrature::pbar0(&spec, &report, ep).unwrap();
            let gm = gauge_m.gamma0(em)
                + p0_partial(&spec, &report, alpha, em).unwrap()
                    / crate::quadrature::pbar0(&spec, &report, em).unwrap();
            (gp - gm) / (2.0 * h)
        };
        let _ = gauge;
        let mut mean = 0.0;
        let m = 64;
        for i in 0..m {
            let alpha = (i as f64 + 0.5) / m as f64;
            mean += u_of(alpha) * jac_at(&spec, &ctx, alpha) / m as f64;
        }
        assert!(mean.abs() < 1e-4, "∫u dx = {mean}");
    }
}
