//! Analysis of the quadratic Q(α,η) = C(α)η² − 2λu₀′(α)η + 1 whose earliest
//! positive root over α sets the blow-up clock.
//!
//! The label set Ω collects the α where C vanishes (Q degenerates to a linear
//! function of η); on the complement Σ the quadratic factors through
//! g₁,₂ = λu₀′ ± √(λκ)|ρ₀|. The largest applicable of
//!   M  = max over Ω of 2λu₀′,
//!   N  = max over Σ of g₁ (which may fail to exist),
//!   N₁ = max over Σ of λu₀′ (the double-root candidate where ρ₀ = 0)
//! determines η* = 1/max and the attaining locations ᾱ.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::ProblemSpec;
use crate::numerics::{refine_max, scan_zeros};

/// C(α) = λ(λ·u₀′(α)² − κ·ρ₀(α)²).
#[inline]
pub fn coeff_c(spec: &ProblemSpec, alpha: f64) -> f64 {
    let up = spec.u0_prime(alpha);
    let r = spec.rho0(alpha);
    spec.lambda * (spec.lambda * up * up - spec.kappa * r * r)
}

/// Discriminant 𝒟(α) = 4λκ·ρ₀(α)².
#[inline]
pub fn discriminant(spec: &ProblemSpec, alpha: f64) -> f64 {
    let r = spec.rho0(alpha);
    4.0 * spec.lambda * spec.kappa * r * r
}

/// Q(α,η) evaluated directly from the coefficient form.
#[inline]
pub fn q_value(spec: &ProblemSpec, alpha: f64, eta: f64) -> f64 {
    let up = spec.u0_prime(alpha);
    (coeff_c(spec, alpha) * eta - 2.0 * spec.lambda * up) * eta + 1.0
}

/// The factor slopes g₁ ≥ g₂; NaN when λκ < 0 (complex pair).
#[inline]
pub fn g_pair(spec: &ProblemSpec, alpha: f64) -> (f64, f64) {
    let lu = spec.lambda * spec.u0_prime(alpha);
    let s = (spec.lambda * spec.kappa).sqrt() * spec.rho0(alpha).abs();
    (lu + s, lu - s)
}

/// A root of Q(α,·) in η.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QRoot {
    pub eta: f64,
    /// 1 for simple roots, 2 for the double root at a ρ₀ zero.
    pub order: u8,
}

/// Pointwise algebra of the quadratic at one α.
#[derive(Debug, Clone, Serialize)]
pub struct PointAnalysis {
    pub alpha: f64,
    pub c_val: f64,
    pub disc: f64,
    pub g1: f64,
    pub g2: f64,
    /// Real roots sorted ascending; empty when the discriminant is negative.
    pub roots: Vec<QRoot>,
}

pub fn analyze_point(spec: &ProblemSpec, alpha: f64) -> PointAnalysis {
    let c_val = coeff_c(spec, alpha);
    let disc = discriminant(spec, alpha);
    let (g1, g2) = g_pair(spec, alpha);
    let tiny = spec.tol.root_tol;

    let mut roots: Vec<QRoot> = Vec::new();
    if disc >= 0.0 {
        if (g1 - g2).abs() <= tiny {
            // ρ₀ = 0 here: Q = (1 − λη u₀′)², a double root when the slope is nonzero.
            if g1.abs() > tiny {
                roots.push(QRoot { eta: 1.0 / g1, order: 2 });
            }
        } else {
            for g in [g1, g2] {
                if g.abs() > tiny {
                    roots.push(QRoot { eta: 1.0 / g, order: 1 });
                }
            }
        }
        roots.sort_by(|a, b| a.eta.partial_cmp(&b.eta).unwrap());
    }
    PointAnalysis { alpha, c_val, disc, g1, g2, roots }
}

/// Root multiplicity of η* reported by [`RootReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Multiplicity {
    Single,
    Double,
    #[serde(rename = "None")]
    Absent,
}

/// Global root structure of Q over the unit interval.
#[derive(Debug, Clone, Serialize)]
pub struct RootReport {
    pub omega_set: Vec<f64>,
    #[serde(rename = "M")]
    pub m: Option<f64>,
    #[serde(rename = "N")]
    pub n: Option<f64>,
    #[serde(rename = "N1")]
    pub n1: Option<f64>,
    pub eta_star: Option<f64>,
    pub multiplicity: Multiplicity,
    pub alpha_bar: Vec<f64>,
    /// Set when the earliest root is attained on a whole subinterval (step
    /// data); `alpha_bar` then holds the interval endpoints.
    pub alpha_bar_interval: bool,
}

impl RootReport {
    /// Earliest root, or an error naming the caller when none exists.
    pub fn eta_star_required(&self, what: &'static str) -> Result<f64> {
        self.eta_star.ok_or_else(|| Error::OutOfRange {
            what,
            value: f64::NAN,
            range: "spec has no finite η*".to_string(),
        })
    }
}

/// Zeros of C(α) on [0,1]: sign changes plus tangential zeros.
///
/// Fails when more than 64 zeros are found, which violates the standing
/// finite-Ω assumption.
pub fn find_omega(spec: &ProblemSpec) -> Result<Vec<f64>> {
    let f = |a: f64| coeff_c(spec, a);
    let scan = scan_zeros(
        &f,
        0.0,
        1.0,
        spec.tol.grid_n,
        spec.tol.root_tol,
        spec.tol.root_tol,
        64,
    );
    if scan.overflow {
        return Err(Error::TooManyZeros { count: scan.zeros.len() });
    }
    Ok(scan.zeros)
}

/// One maximisation result over a masked scan of [0,1].
struct MaxObs {
    value: f64,
    /// Cluster representatives; for an interval cluster its two endpoints.
    attaining: Vec<f64>,
    interval: bool,
}

/// Maximise `f` over the valid subset of [0,1] by grid scan, local
/// refinement, and plateau collection.
fn maximize_over(
    f: &dyn Fn(f64) -> f64,
    valid: &dyn Fn(f64) -> bool,
    extra_points: &[f64],
    spec: &ProblemSpec,
) -> Option<MaxObs> {
    let n = spec.tol.grid_n.max(64);
    let h = 1.0 / n as f64;
    let mut xs: Vec<f64> = (0..=n).map(|i| i as f64 * h).collect();
    for &p in extra_points {
        for q in [p, p - 1e-9, p + 1e-9] {
            if (0.0..=1.0).contains(&q) {
                xs.push(q);
            }
        }
    }
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.dedup();

    let vals: Vec<Option<f64>> = xs.iter().map(|&x| valid(x).then(|| f(x))).collect();
    let grid_best = vals.iter().flatten().fold(f64::NEG_INFINITY, |m, &v| m.max(v));
    if !grid_best.is_finite() {
        return None;
    }

    // Position priority for tie-breaking inside an attaining cluster: exact
    // domain endpoints beat named special points beat refined positions.
    let priority = |x: f64| -> u8 {
        if x == 0.0 || x == 1.0 {
            2
        } else if extra_points.contains(&x) {
            1
        } else {
            0
        }
    };

    let tol_val = spec.tol.root_tol * grid_best.abs().max(1.0);
    let mut candidates: Vec<(f64, f64, u8)> = Vec::new();

    // Interior strict local maxima, refined inside their grid bracket.
    for i in 1..xs.len() - 1 {
        if let (Some(vm), Some(v), Some(vp)) = (vals[i - 1], vals[i], vals[i + 1]) {
            if v >= vm && v >= vp && (v > vm || v > vp) {
                let (pos, val) = refine_max(f, xs[i - 1], xs[i + 1], 1e-12);
                if valid(pos) && val.is_finite() {
                    candidates.push((pos, val, priority(pos)));
                } else {
                    candidates.push((xs[i], v, priority(xs[i])));
                }
            }
        }
    }
    // Endpoints and plateau points stand on their own.
    for (i, &x) in xs.iter().enumerate() {
        if let Some(v) = vals[i] {
            if i == 0 || i == xs.len() - 1 || v >= grid_best - tol_val {
                candidates.push((x, v, priority(x)));
            }
        }
    }

    let best = candidates.iter().map(|&(_, v, _)| v).fold(f64::NEG_INFINITY, f64::max);
    let attain_tol = spec.tol.root_tol * best.abs().max(1.0);
    let mut attaining: Vec<(f64, f64, u8)> = candidates
        .into_iter()
        .filter(|&(_, v, _)| v >= best - attain_tol)
        .collect();
    attaining.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    // Cluster attaining positions; a cluster wider than a few grid cells is an
    // interval-valued maximiser reported by its endpoints.
    let gap = 2.5 * h;
    let tie = 1e-14 * best.abs().max(1.0);
    let mut reps: Vec<f64> = Vec::new();
    let mut interval = false;
    let mut i = 0usize;
    while i < attaining.len() {
        let mut j = i;
        while j + 1 < attaining.len() && attaining[j + 1].0 - attaining[j].0 <= gap {
            j += 1;
        }
        let span = attaining[j].0 - attaining[i].0;
        if span > gap {
            interval = true;
            reps.push(attaining[i].0);
            reps.push(attaining[j].0);
        } else {
            let mut rep = attaining[i];
            for c in &attaining[i + 1..=j] {
                if c.1 > rep.1 + tie || ((c.1 - rep.1).abs() <= tie && c.2 > rep.2) {
                    rep = *c;
                }
            }
            reps.push(rep.0);
        }
        i = j + 1;
    }

    Some(MaxObs { value: best, attaining: reps, interval })
}

fn dist_to_set(x: f64, set: &[f64]) -> f64 {
    set.iter().map(|&p| (x - p).abs()).fold(f64::INFINITY, f64::min)
}

/// Positional tolerance deciding whether a refined maximiser sits *at* an Ω
/// point (so the maximum over the open set Σ is not attained).
const OMEGA_POS_TOL: f64 = 1e-7;

/// Full root structure: Ω, the maxima M/N/N₁, the earliest positive root η*
/// with multiplicity, and the attaining set ᾱ.
pub fn root_report(spec: &ProblemSpec) -> Result<RootReport> {
    let omega = find_omega(spec)?;
    let tol = spec.tol;
    let lam = spec.lambda;
    let lk = lam * spec.kappa;

    let rho_nonzero = |a: f64| spec.rho0(a).abs() > tol.root_tol;

    // M over the finite Ω set, restricted to ρ₀ ≠ 0.
    let m = omega
        .iter()
        .filter(|&&a| rho_nonzero(a))
        .map(|&a| 2.0 * lam * spec.u0_prime(a))
        .fold(None, |acc: Option<f64>, v| Some(acc.map_or(v, |m: f64| m.max(v))));

    // N1 over Σ: like N, the maximum exists only when attained away from Ω.
    let n1 = maximize_over(
        &|a| lam * spec.u0_prime(a),
        &|_| true,
        &spec.data.breakpoints,
        spec,
    )
    .and_then(|obs| {
        let attained_in_sigma = obs
            .attaining
            .iter()
            .any(|&a| dist_to_set(a, &omega) > OMEGA_POS_TOL);
        attained_in_sigma.then_some(obs.value)
    });

    // N over Σ with ρ₀ ≠ 0; discard maxima attained at Ω points (Σ is open,
    // so the supremum there is not a maximum).
    let n = if lk > 0.0 {
        maximize_over(
            &|a| g_pair(spec, a).0,
            &|a| rho_nonzero(a),
            &spec.data.breakpoints,
            spec,
        )
        .and_then(|obs| {
            let attained_in_sigma = obs
                .attaining
                .iter()
                .any(|&a| dist_to_set(a, &omega) > OMEGA_POS_TOL);
            attained_in_sigma.then_some(obs.value)
        })
    } else {
        None
    };

    // Earliest positive root of Q over α: the reciprocal of the largest root
    // rate. For λκ ≥ 0 the rate is g₁ everywhere (on Ω it reduces to 2λu₀′);
    // for λκ < 0 real roots exist only where ρ₀ vanishes, with rate λu₀′.
    let rate_obs: Option<MaxObs> = if lam == 0.0 {
        None
    } else if lk >= 0.0 {
        let mut extra = spec.data.breakpoints.clone();
        extra.extend_from_slice(&omega);
        maximize_over(&|a| g_pair(spec, a).0, &|_| true, &extra, spec)
    } else {
        rho_zero_candidates(spec)
    };

    let (eta_star, multiplicity, alpha_bar, interval) = match rate_obs {
        Some(obs) if obs.value > tol.root_tol => {
            let single = obs.attaining.iter().any(|&a| rho_nonzero(a));
            (
                Some(1.0 / obs.value),
                if single { Multiplicity::Single } else { Multiplicity::Double },
                obs.attaining,
                obs.interval,
            )
        }
        _ => (None, Multiplicity::Absent, Vec::new(), false),
    };

    Ok(RootReport {
        omega_set: omega,
        m,
        n,
        n1,
        eta_star,
        multiplicity,
        alpha_bar,
        alpha_bar_interval: interval,
    })
}

/// λκ < 0: collect the zeros of ρ₀ (isolated and plateau) and maximise λu₀′
/// over them.
fn rho_zero_candidates(spec: &ProblemSpec) -> Option<MaxObs> {
    let tol = spec.tol;
    let lam = spec.lambda;
    let scan = scan_zeros(
        &|a| spec.rho0(a),
        0.0,
        1.0,
        tol.grid_n,
        tol.root_tol,
        tol.root_tol,
        64,
    );
    let mut points: Vec<f64> = scan.zeros;
    // Plateau zeros (step data) show up as exact zeros on the grid.
    let n = tol.grid_n.max(64);
    for i in 0..=n {
        let a = i as f64 / n as f64;
        if spec.rho0(a).abs() <= tol.root_tol {
            points.push(a);
        }
    }
    for &p in &spec.data.breakpoints {
        if spec.rho0(p).abs() <= tol.root_tol {
            points.push(p);
        }
    }
    points.sort_by(|a, b| a.partial_cmp(b).unwrap());
    points.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
    if points.is_empty() {
        return None;
    }

    let vals: Vec<f64> = points.iter().map(|&a| lam * spec.u0_prime(a)).collect();
    let best = vals.iter().fold(f64::NEG_INFINITY, |m, &v| m.max(v));
    let attain_tol = tol.root_tol * best.abs().max(1.0);
    let attaining: Vec<(f64, f64)> = points
        .iter()
        .zip(&vals)
        .filter(|&(_, &v)| v >= best - attain_tol)
        .map(|(&a, &v)| (a, v))
        .collect();

    let gap = 2.5 / n as f64;
    let mut reps = Vec::new();
    let mut interval = false;
    let mut i = 0usize;
    while i < attaining.len() {
        let mut j = i;
        while j + 1 < attaining.len() && attaining[j + 1].0 - attaining[j].0 <= gap {
            j += 1;
        }
        if attaining[j].0 - attaining[i].0 > gap {
            interval = true;
            reps.push(attaining[i].0);
            reps.push(attaining[j].0);
        } else {
            reps.push(attaining[i].0);
        }
        i = j + 1;
    }
    Some(MaxObs { value: best, attaining: reps, interval })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{example_spec, InitialData, ProblemSpec};

    fn spec41_ex1() -> ProblemSpec {
        ProblemSpec::new(1.0, 1.0, InitialData::builtin("cos2pi", &[]).unwrap())
    }

    fn spec41_ex2() -> ProblemSpec {
        ProblemSpec::new(1.0, 1.0, InitialData::builtin("cos2pi", &[0.5]).unwrap())
    }

    #[test]
    fn point_analysis_example1_at_omega_boundary() {
        // (λ,κ) = (1,1), u₀′ = cos 2πα, ρ₀ ≡ 1 at α = 0: C = 0, g₁ = 2, single
        // root 1/2 from the linear representation.
        let p = analyze_point(&spec41_ex1(), 0.0);
        assert!(p.c_val.abs() < 1e-14);
        assert!((p.g1 - 2.0).abs() < 1e-14);
        assert_eq!(p.roots.len(), 1);
        assert!((p.roots[0].eta - 0.5).abs() < 1e-14);
        assert_eq!(p.roots[0].order, 1);
    }

    #[test]
    fn point_analysis_example51_omega_point() {
        // §5.1 data: cos²(π/4) = 1/2 makes C vanish at α = 1/8.
        let spec = example_spec(1).unwrap();
        let p = analyze_point(&spec, 0.125);
        assert!(p.c_val.abs() < 1e-14, "C(1/8) = {}", p.c_val);
    }

    #[test]
    fn discriminant_vanishes_with_rho() {
        // Step data has ρ₀ = 0 exactly on [1/4, 3/4]: Q = (1 − η)², a double root.
        let spec =
            ProblemSpec::new(1.0, 1.0, InitialData::builtin("piecewise_c2", &[]).unwrap());
        let p = analyze_point(&spec, 0.5);
        assert_eq!(p.disc, 0.0);
        assert_eq!(p.roots.len(), 1);
        assert_eq!(p.roots[0].order, 2);
        assert!((p.roots[0].eta - 1.0).abs() < 1e-14);

        // Near (not at) a smooth ρ₀ zero the discriminant is a hair negative
        // for λκ < 0 and the root list is empty, as the contract states.
        let spec2 = example_spec(2).unwrap();
        let p2 = analyze_point(&spec2, 0.5);
        assert!(p2.disc <= 0.0 && p2.disc.abs() < 1e-25);
    }

    #[test]
    fn q_is_one_at_eta_zero() {
        let spec = spec41_ex2();
        for i in 0..=16 {
            let a = i as f64 / 16.0;
            assert!((q_value(&spec, a, 0.0) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn omega_example1_three_points() {
        let omega = find_omega(&spec41_ex1()).unwrap();
        assert_eq!(omega.len(), 3, "Ω = {omega:?}");
        for (z, want) in omega.iter().zip([0.0, 0.5, 1.0]) {
            assert!((z - want).abs() < 1e-10, "Ω = {omega:?}");
        }
    }

    #[test]
    fn omega_example2_four_points() {
        let omega = find_omega(&spec41_ex2()).unwrap();
        let want = [1.0 / 6.0, 1.0 / 3.0, 2.0 / 3.0, 5.0 / 6.0];
        assert_eq!(omega.len(), 4, "Ω = {omega:?}");
        for (z, w) in omega.iter().zip(want) {
            assert!((z - w).abs() < 1e-10, "Ω = {omega:?}");
        }
    }

    #[test]
    fn omega_empty_for_example4() {
        // C = ¼(1−2α)² + ½ > 0 on all of [0,1].
        let spec = example_spec(4).unwrap();
        let omega = find_omega(&spec).unwrap();
        assert!(omega.is_empty(), "Ω = {omega:?}");
    }

    #[test]
    fn report_example1_m_branch() {
        let r = root_report(&spec41_ex1()).unwrap();
        assert!((r.m.unwrap() - 2.0).abs() < 1e-12);
        assert!(r.n.is_none(), "N = {:?} should be absent", r.n);
        assert!((r.eta_star.unwrap() - 0.5).abs() < 1e-12);
        assert_eq!(r.multiplicity, Multiplicity::Single);
        assert_eq!(r.alpha_bar.len(), 2);
        assert!(r.alpha_bar[0].abs() < 1e-9 && (r.alpha_bar[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn report_example2_n_branch() {
        // M inherits the Ω position tolerance (root_tol in α), so ~1e-11 here.
        let r = root_report(&spec41_ex2()).unwrap();
        assert!((r.m.unwrap() - 1.0).abs() < 1e-10);
        assert!((r.n.unwrap() - 1.5).abs() < 1e-12);
        assert!((r.eta_star.unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(r.multiplicity, Multiplicity::Single);
        assert_eq!(r.alpha_bar.len(), 2);
        assert!(r.alpha_bar[0].abs() < 1e-9 && (r.alpha_bar[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn report_example51_interior_maximum() {
        let spec = example_spec(1).unwrap();
        let r = root_report(&spec).unwrap();
        let n_expect = (1.0 + 2.0f64.sqrt()) / (2.0 * 2.0f64.sqrt());
        let eta_expect = 2.0 * 2.0f64.sqrt() / (1.0 + 2.0f64.sqrt());
        assert!((r.n.unwrap() - n_expect).abs() < 1e-11, "N = {:?}", r.n);
        assert!((r.eta_star.unwrap() - eta_expect).abs() < 1e-10);
        assert_eq!(r.multiplicity, Multiplicity::Single);
        assert_eq!(r.alpha_bar.len(), 1);
        assert!((r.alpha_bar[0] - 0.5).abs() < 1e-9);
    }

    #[test]
    fn report_appendix_piecewise_double_interval() {
        let spec = ProblemSpec::new(1.0, 1.0, InitialData::builtin("piecewise_c2", &[]).unwrap());
        let r = root_report(&spec).unwrap();
        assert!(r.omega_set.is_empty());
        assert!((r.eta_star.unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(r.multiplicity, Multiplicity::Double);
        assert!(r.alpha_bar_interval);
        assert!((r.alpha_bar[0] - 0.25).abs() < 1e-9, "ᾱ = {:?}", r.alpha_bar);
        assert!((r.alpha_bar[1] - 0.75).abs() < 1e-9, "ᾱ = {:?}", r.alpha_bar);
        assert!((r.n1.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn report_steady_regime_has_no_root() {
        // λκ < 0 with ρ₀ never vanishing: Q never vanishes.
        let spec = example_spec(4).unwrap();
        let r = root_report(&spec).unwrap();
        assert!(r.eta_star.is_none());
        assert_eq!(r.multiplicity, Multiplicity::Absent);
    }

    #[test]
    fn report_lk_negative_with_rho_zero_double() {
        // §5.2: ρ₀ = sin 2πα vanishes at {0, 1/2, 1}; λu₀′ = −cos is positive
        // only at 1/2, a double root with η* = 1.
        let spec = example_spec(2).unwrap();
        let r = root_report(&spec).unwrap();
        assert!((r.eta_star.unwrap() - 1.0).abs() < 1e-10);
        assert_eq!(r.multiplicity, Multiplicity::Double);
        assert_eq!(r.alpha_bar.len(), 1);
        assert!((r.alpha_bar[0] - 0.5).abs() < 1e-9);
    }

    #[test]
    fn earliest_root_property_on_grid() {
        // Strict positivity is checked up to η*(1 − 1e-6); any closer and a
        // double-root Q ~ (η*−η)² drops below representable resolution.
        for id in [1u8, 2, 3] {
            let spec = example_spec(id).unwrap();
            let r = root_report(&spec).unwrap();
            let eta = r.eta_star.unwrap();
            for i in 0..=200 {
                let a = i as f64 / 200.0;
                for j in 0..20 {
                    let e = eta * (1.0 - 1e-6) * j as f64 / 19.0;
                    assert!(
                        q_value(&spec, a, e) > 0.0,
                        "Q({a},{e}) ≤ 0 before η* for example {id}"
                    );
                }
            }
            let qmin = (0..=2000)
                .map(|i| q_value(&spec, i as f64 / 2000.0, eta))
                .fold(f64::INFINITY, f64::min);
            assert!(qmin.abs() < 1e-6, "min Q at η* = {qmin} for example {id}");
        }
    }

    #[test]
    fn factorization_consistency_random_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x9a3c);
        let spec = spec41_ex2();
        let mut checked = 0usize;
        while checked < 1000 {
            let a: f64 = rng.gen_range(0.0..1.0);
            let eta: f64 = rng.gen_range(0.0..2.0);
            let p = analyze_point(&spec, a);
            if p.disc > 0.0 {
                let q = q_value(&spec, a, eta);
                let fac = (1.0 - eta * p.g1) * (1.0 - eta * p.g2);
                assert!((q - fac).abs() <= 1e-12, "Q mismatch at ({a},{eta})");
                checked += 1;
            }
        }
    }

    #[test]
    fn g1_dominates_g2_when_defined() {
        let spec = spec41_ex1();
        for i in 0..=500 {
            let a = i as f64 / 500.0;
            let (g1, g2) = g_pair(&spec, a);
            assert!(g1 >= g2);
        }
    }

    #[test]
    fn double_dichotomy_tracks_rho_zero() {
        // Build data with ρ₀ ≡ 0: every root is double.
        let spec = ProblemSpec::new(2.0, 1.0, InitialData::builtin("cos2pi", &[0.0]).unwrap());
        let r = root_report(&spec).unwrap();
        assert_eq!(r.multiplicity, Multiplicity::Double);
        // η* = 1/(λ·max u₀′) = 1/2, attained where cos 2πα = 1.
        assert!((r.eta_star.unwrap() - 0.5).abs() < 1e-10);
    }
}
