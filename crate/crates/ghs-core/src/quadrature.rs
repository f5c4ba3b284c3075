//! Integral objects built on the quadratic: the mean P̄₀(η) of Q^(−1/2λ), the
//! companion integral driving u_x, partial integrals in α for trajectories,
//! the time map t(η) = ∫₀^η P̄₀^{2λ} dσ with its inverse, and the terminal
//! time (finite or infinite) with tail extrapolation past the quadrature
//! cutoff.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::ProblemSpec;
use crate::numerics::{integrate, linear_fit, QuadResult};
use crate::quadratic::{coeff_c, q_value, Multiplicity, RootReport};
use crate::rates::{self, Behavior};

fn ensure_lambda(spec: &ProblemSpec) -> Result<()> {
    if spec.lambda == 0.0 {
        return Err(Error::SpecialCase(
            "the representation formulas assume λ ≠ 0; see the classifier's λ = 0 branch"
                .to_string(),
        ));
    }
    Ok(())
}

/// Points where the α-integrands lose smoothness: data breakpoints, Ω points,
/// and (as substitution hints) the isolated blow-up locations.
fn alpha_breaks(spec: &ProblemSpec, report: &RootReport) -> (Vec<f64>, Vec<f64>) {
    let mut breaks = spec.data.breakpoints.clone();
    breaks.extend_from_slice(&report.omega_set);
    let mut singular = Vec::new();
    if report.alpha_bar_interval {
        breaks.extend_from_slice(&report.alpha_bar);
    } else {
        singular.extend_from_slice(&report.alpha_bar);
    }
    (breaks, singular)
}

fn check_eta_range(report: &RootReport, eta: f64) -> Result<()> {
    if eta < 0.0 || !eta.is_finite() {
        return Err(Error::OutOfRange {
            what: "eta",
            value: eta,
            range: "η ≥ 0".to_string(),
        });
    }
    if let Some(es) = report.eta_star {
        if eta > es {
            return Err(Error::OutOfRange {
                what: "eta",
                value: eta,
                range: format!("[0, η* = {es}]"),
            });
        }
    }
    Ok(())
}

fn finish(r: QuadResult) -> Result<f64> {
    if r.converged {
        Ok(r.value)
    } else {
        Err(Error::ToleranceNotMet { value: r.value, error: r.error })
    }
}

/// Local contact exponent p in |Q(α, η)| ~ c·|α − ᾱ|^p, fitted on shrinking
/// windows around the earliest-root location.
fn contact_exponent(spec: &ProblemSpec, abar: f64, eta: f64) -> f64 {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for k in 1..=8 {
        let r = 0.05 * 0.5f64.powi(k);
        let mut sample = 0.0;
        let mut count = 0;
        for side in [-1.0, 1.0] {
            let a = abar + side * r;
            if (0.0..=1.0).contains(&a) {
                sample += q_value(spec, a, eta).abs();
                count += 1;
            }
        }
        if count > 0 && sample > 0.0 {
            xs.push(r.ln());
            ys.push((sample / count as f64).ln());
        }
    }
    if xs.len() < 3 {
        return 2.0;
    }
    linear_fit(&xs, &ys).slope
}

/// Shared implementation for the two η*-singular α-integrals.
fn alpha_integral(
    spec: &ProblemSpec,
    report: &RootReport,
    eta: f64,
    q_power: f64,
    weight: &dyn Fn(f64) -> f64,
) -> Result<f64> {
    ensure_lambda(spec)?;
    check_eta_range(report, eta)?;
    let tol = spec.tol;

    // At η* itself, certify integrability from the fitted contact exponent.
    if let Some(es) = report.eta_star {
        if eta >= es * (1.0 - 1e-14) && !report.alpha_bar_interval {
            for &abar in &report.alpha_bar {
                let p = contact_exponent(spec, abar, eta);
                if p * q_power <= -1.0 {
                    return Err(Error::NonIntegrable { eta, exponent: p * q_power });
                }
            }
        }
    }

    let (breaks, singular) = alpha_breaks(spec, report);
    let f = |a: f64| weight(a) * q_value(spec, a, eta).max(1e-300).powf(q_power);
    finish(integrate(&f, 0.0, 1.0, &breaks, &singular, tol.quad_abs, tol.quad_rel))
}

/// P̄₀(η) = ∫₀¹ Q(α,η)^(−1/2λ) dα. Equals 1 at η = 0.
pub fn pbar0(spec: &ProblemSpec, report: &RootReport, eta: f64) -> Result<f64> {
    alpha_integral(spec, report, eta, -0.5 / spec.lambda, &|_| 1.0)
}

/// The companion integral ∫₀¹ (λu₀′ − ηC)/Q^(1+1/2λ) dα; satisfies
/// dP̄₀/dη = i2/λ.
pub fn i2(spec: &ProblemSpec, report: &RootReport, eta: f64) -> Result<f64> {
    let lam = spec.lambda;
    alpha_integral(spec, report, eta, -(1.0 + 0.5 / lam), &|a| {
        lam * spec.u0_prime(a) - eta * coeff_c(spec, a)
    })
}

/// Partial mean ∫₀^α Q(y,η)^(−1/2λ) dy; equals P̄₀ at α = 1.
pub fn p0_partial(spec: &ProblemSpec, report: &RootReport, alpha: f64, eta: f64) -> Result<f64> {
    ensure_lambda(spec)?;
    check_eta_range(report, eta)?;
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::OutOfRange {
            what: "alpha",
            value: alpha,
            range: "[0, 1]".to_string(),
        });
    }
    let tol = spec.tol;
    let (breaks, singular) = alpha_breaks(spec, report);
    let power = -0.5 / spec.lambda;
    let f = |a: f64| q_value(spec, a, eta).max(1e-300).powf(power);
    finish(integrate(&f, 0.0, alpha, &breaks, &singular, tol.quad_abs, tol.quad_rel))
}

/// dt/dη = P̄₀(η)^{2λ}, evaluated with tightened inner tolerance.
fn time_integrand(spec: &ProblemSpec, report: &RootReport, sigma: f64) -> f64 {
    let tol = spec.tol;
    let (breaks, singular) = alpha_breaks(spec, report);
    let power = -0.5 / spec.lambda;
    let f = |a: f64| q_value(spec, a, sigma).max(1e-300).powf(power);
    let r = integrate(&f, 0.0, 1.0, &breaks, &singular, 0.1 * tol.quad_abs, 0.1 * tol.quad_rel);
    r.value.powf(2.0 * spec.lambda)
}

fn time_segment(spec: &ProblemSpec, report: &RootReport, from: f64, to: f64) -> Result<f64> {
    if to == from {
        return Ok(0.0);
    }
    let (a, b, sign) = if to > from { (from, to, 1.0) } else { (to, from, -1.0) };
    let tol = spec.tol;
    let g = |sigma: f64| time_integrand(spec, report, sigma);
    let r = integrate(&g, a, b, &[], &[], tol.quad_abs, tol.quad_rel);
    finish(r).map(|v| sign * v)
}

/// t(η) = ∫₀^η P̄₀(σ)^{2λ} dσ; strictly increasing.
pub fn time_of_eta(spec: &ProblemSpec, report: &RootReport, eta: f64) -> Result<f64> {
    ensure_lambda(spec)?;
    check_eta_range(report, eta)?;
    if let Some(es) = report.eta_star {
        if eta >= es {
            return Err(Error::OutOfRange {
                what: "eta",
                value: eta,
                range: format!("[0, η*) with η* = {es}; use terminal_time for the limit"),
            });
        }
    }
    time_segment(spec, report, 0.0, eta)
}

/// Geometric η knots clustering toward η* (ratio 1/2), or dyadically growing
/// knots when no root exists.
fn knot_list(spec: &ProblemSpec, report: &RootReport) -> Vec<f64> {
    match report.eta_star {
        Some(es) => {
            let levels = (1.0 / spec.tol.eta_cutoff).log2().ceil().max(4.0) as i32;
            let mut knots = vec![0.0];
            for j in 1..=levels {
                knots.push(es * (1.0 - 0.5f64.powi(j)));
            }
            knots
        }
        None => {
            let mut knots = vec![0.0];
            let mut e = 1.0;
            while e <= 16_384.0 {
                knots.push(e);
                e *= 2.0;
            }
            knots
        }
    }
}

/// Knot cache of the η-dependent integrals and the time map.
#[derive(Debug, Clone, Serialize)]
pub struct IntegralCache {
    pub eta_knots: Vec<f64>,
    pub pbar_vals: Vec<f64>,
    pub i2_vals: Vec<f64>,
    pub t_vals: Vec<f64>,
}

impl IntegralCache {
    pub fn build(spec: &ProblemSpec, report: &RootReport) -> Result<Self> {
        ensure_lambda(spec)?;
        let eta_knots = knot_list(spec, report);
        let mut pbar_vals = Vec::with_capacity(eta_knots.len());
        let mut i2_vals = Vec::with_capacity(eta_knots.len());
        let mut t_vals = Vec::with_capacity(eta_knots.len());
        let mut t_acc = 0.0;
        for (j, &e) in eta_knots.iter().enumerate() {
            pbar_vals.push(pbar0(spec, report, e)?);
            i2_vals.push(i2(spec, report, e)?);
            if j > 0 {
                t_acc += time_segment(spec, report, eta_knots[j - 1], e)?;
            }
            t_vals.push(t_acc);
        }
        Ok(IntegralCache { eta_knots, pbar_vals, i2_vals, t_vals })
    }

    /// CSV dump: one row per knot, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("eta,pbar0,i2,t\n");
        for i in 0..self.eta_knots.len() {
            out.push_str(&format!(
                "{:.16e},{:.16e},{:.16e},{:.16e}\n",
                self.eta_knots[i], self.pbar_vals[i], self.i2_vals[i], self.t_vals[i]
            ));
        }
        out
    }

    /// t(η) using the cached knot below η as the integration start.
    pub fn time_of_eta(&self, spec: &ProblemSpec, report: &RootReport, eta: f64) -> Result<f64> {
        check_eta_range(report, eta)?;
        let j = match self
            .eta_knots
            .binary_search_by(|k| k.partial_cmp(&eta).unwrap())
        {
            Ok(j) => j,
            Err(j) => j.saturating_sub(1),
        };
        Ok(self.t_vals[j] + time_segment(spec, report, self.eta_knots[j], eta)?)
    }
}

/// Inverse time map: the η with t(η) = t, to root tolerance. Marches the
/// geometric knots to bracket t, then runs a safeguarded Newton iteration
/// (the derivative P̄₀^{2λ} is available exactly).
pub fn eta_of_time(spec: &ProblemSpec, report: &RootReport, t: f64) -> Result<f64> {
    ensure_lambda(spec)?;
    if t < 0.0 || !t.is_finite() {
        return Err(Error::OutOfRange { what: "t", value: t, range: "t ≥ 0".to_string() });
    }
    if t == 0.0 {
        return Ok(0.0);
    }

    let knots = knot_list(spec, report);
    let mut lo = 0.0;
    let mut t_lo = 0.0;
    let mut hi = None;
    let mut t_hi = 0.0;
    for &k in knots.iter().skip(1) {
        let tk = t_lo + time_segment(spec, report, lo, k)?;
        if tk >= t {
            hi = Some(k);
            t_hi = tk;
            break;
        }
        lo = k;
        t_lo = tk;
    }
    let mut hi = match hi {
        Some(h) => h,
        None => {
            return Err(Error::OutOfRange {
                what: "t",
                value: t,
                range: format!("t exceeds t({}) = {:.6}", knots.last().unwrap(), t_lo),
            })
        }
    };

    // Newton from the bracket midpoint; keep (lo, hi) as a safeguard.
    let mut x = 0.5 * (lo + hi);
    let mut tx = t_lo + time_segment(spec, report, lo, x)?;
    let target_tol = 1e-10 * t.abs().max(1.0);
    for _ in 0..80 {
        let resid = tx - t;
        if resid.abs() <= target_tol {
            return Ok(x);
        }
        if resid > 0.0 {
            hi = x;
            t_hi = tx;
        } else {
            lo = x;
            t_lo = tx;
        }
        let slope = time_integrand(spec, report, x);
        let mut next = x - resid / slope;
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        tx = if (next - x).abs() < 0.5 * (hi - lo) {
            tx + time_segment(spec, report, x, next)?
        } else {
            t_lo + time_segment(spec, report, lo, next)?
        };
        x = next;
        if hi - lo <= spec.tol.root_tol {
            break;
        }
        let _ = t_hi;
    }
    Ok(x)
}

/// Finite or infinite limiting time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum TerminalTime {
    Finite(f64),
    Infinite,
}

impl TerminalTime {
    pub fn finite(&self) -> Option<f64> {
        match self {
            TerminalTime::Finite(t) => Some(*t),
            TerminalTime::Infinite => None,
        }
    }
}

/// t* = lim_{η↑η*} t(η) when the quadratic vanishes, or t∞ = lim_{η→∞} t(η)
/// in the steady regime. Quadrature runs to a cutoff and the remaining tail
/// is extrapolated from the predicted power law.
pub fn terminal_time(spec: &ProblemSpec, report: &RootReport) -> Result<TerminalTime> {
    ensure_lambda(spec)?;
    match report.eta_star {
        Some(es) => {
            let prediction = match report.multiplicity {
                Multiplicity::Double => rates::double_root(spec.lambda),
                _ => rates::single_root(spec.lambda),
            };
            let tail = rates::time_integrand_tail(spec.lambda, prediction.pbar0);
            if let Behavior::Power(p) = tail {
                if p <= -1.0 {
                    return Ok(TerminalTime::Infinite);
                }
            }
            let delta = 1e-8;
            let eta_end = es * (1.0 - delta);
            let t_main = time_segment(spec, report, 0.0, eta_end)?;
            let f_end = time_integrand(spec, report, eta_end);
            let eps_end = es - eta_end;
            let t_tail = match tail {
                Behavior::Power(p) => f_end * eps_end / (p + 1.0),
                // Log or bounded integrand: the last sliver is O(ε·ln^k ε).
                _ => f_end * eps_end,
            };
            Ok(TerminalTime::Finite(t_main + t_tail))
        }
        None => terminal_time_steady(spec, report),
    }
}

/// Steady regime: t∞ = t(1) + ∫₁^∞ P̄₀^{2λ} dσ via the substitution σ = 1/w,
/// cross-checked against direct large-η quadrature with the asymptotic tail
/// P̄₀ ~ 𝓜 η^(−1/λ).
fn terminal_time_steady(spec: &ProblemSpec, report: &RootReport) -> Result<TerminalTime> {
    let tol = spec.tol;

    // Divergence probe: the substituted integrand g(w) = P̄₀(1/w)^{2λ} / w²
    // must stay bounded as w → 0 for a finite t∞.
    let g = |w: f64| {
        let eta = 1.0 / w;
        time_integrand(spec, report, eta) / (w * w)
    };
    let probes: Vec<f64> = [1e-3, 1e-4, 1e-5].iter().map(|&w| g(w)).collect();
    if probes[2] > 10.0 * probes[1].max(1.0) && probes[1] > 10.0 * probes[0].max(1.0) {
        return Ok(TerminalTime::Infinite);
    }

    let t1 = time_segment(spec, report, 0.0, 1.0)?;
    let tail = integrate(&g, 0.0, 1.0, &[], &[], tol.quad_abs, tol.quad_rel);
    let t_inf = t1 + finish(tail)?;

    // Bracket check with the 𝓜-asymptotic at η = 10³ and 10⁴.
    let power = -0.5 / spec.lambda;
    let (breaks, _) = alpha_breaks(spec, report);
    let cm = finish(integrate(
        &|a: f64| coeff_c(spec, a).max(1e-300).powf(power),
        0.0,
        1.0,
        &breaks,
        &[],
        tol.quad_abs,
        tol.quad_rel,
    ))?;
    let mut direct = Vec::new();
    for big in [1e3, 1e4] {
        let t_big = time_segment(spec, report, 0.0, big)?;
        direct.push(t_big + cm.powf(2.0 * spec.lambda) / big);
    }
    let lo = direct.iter().fold(t_inf, |m, &v| m.min(v));
    let hi = direct.iter().fold(t_inf, |m, &v| m.max(v));
    if (hi - lo) > 0.01 * t_inf.abs().max(1e-12) {
        return Err(Error::TailUncertain { lo, hi });
    }
    Ok(TerminalTime::Finite(t_inf))
}
