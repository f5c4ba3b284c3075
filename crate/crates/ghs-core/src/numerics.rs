//! Shared numerical kernels: an adaptive Gauss-Kronrod integrator with forced
//! breakpoints and square-root substitution at known algebraic singularities,
//! bracketed and tangential root finding, extremum refinement, monotone cubic
//! interpolation, and least-squares line fits.

/// 15-point Kronrod abscissae on [0, 1] side of the symmetric rule.
const XGK15: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

/// Embedded 7-point Gauss weights.
const WG7: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// 15-point Kronrod weights.
const WGK15: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// One Gauss-Kronrod panel evaluation: Kronrod value plus a QUADPACK-style
/// scaled error estimate from the embedded Gauss rule.
fn qk15<F: Fn(f64) -> f64 + ?Sized>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);

    let mut fv = [0.0f64; 15];
    fv[7] = fc;
    let mut kronrod = fc * WGK15[7];
    let mut gauss = fc * WG7[3];
    let mut res_abs = kronrod.abs();

    for j in 0..7 {
        let x = half * XGK15[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv[j] = f1;
        fv[14 - j] = f2;
        let fsum = f1 + f2;
        kronrod += WGK15[j] * fsum;
        res_abs += WGK15[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG7[j / 2] * fsum;
        }
    }

    let mean = kronrod * 0.5;
    let mut res_asc = WGK15[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK15[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }

    let value = kronrod * half;
    res_abs *= half.abs();
    res_asc *= half.abs();
    let raw_err = ((kronrod - gauss) * half).abs();

    let mut err = raw_err;
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }

    if !value.is_finite() {
        return (0.0, f64::INFINITY);
    }
    (value, err)
}

/// Result of an adaptive integration. `error` is the accumulated panel error
/// bound; `converged` is false when the tolerance could not be certified
/// within the panel budget.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    seg: usize,
}

/// A smooth sub-segment of the original domain, possibly reparametrised by
/// the square-root map that absorbs an endpoint singularity of the form
/// |x - p|^(-q), q < 1.
#[derive(Debug, Clone, Copy)]
enum Segment {
    Plain,
    /// x = p + t^2, integrand picks up the factor 2t.
    SqrtLeft { p: f64 },
    /// x = p - t^2.
    SqrtRight { p: f64 },
}

impl Segment {
    fn map(&self, t: f64) -> (f64, f64) {
        match *self {
            Segment::Plain => (t, 1.0),
            Segment::SqrtLeft { p } => (p + t * t, 2.0 * t),
            Segment::SqrtRight { p } => (p - t * t, 2.0 * t),
        }
    }
}

const MAX_SPLITS: usize = 20_000;

/// Adaptive integration of `f` over [a, b].
///
/// `breakpoints` are forced subdivision points (panels never straddle them);
/// `singular` marks points where the integrand may carry an integrable
/// algebraic singularity, handled by the substitution x = p ± s².
pub fn integrate<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    singular: &[f64],
    abs_tol: f64,
    rel_tol: f64,
) -> QuadResult {
    if !(b > a) {
        return QuadResult { value: 0.0, error: 0.0, converged: true };
    }

    // Assemble cut points: domain ends, breakpoints, singular points, and a
    // midpoint between adjacent singular points so each segment touches at
    // most one of them.
    let margin = 1e-14 * (b - a);
    let mut cuts: Vec<f64> = vec![a, b];
    for &p in breakpoints.iter().chain(singular.iter()) {
        if p > a + margin && p < b - margin {
            cuts.push(p);
        }
    }
    cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    cuts.dedup_by(|x, y| (*x - *y).abs() <= margin);

    let is_singular = |p: f64| singular.iter().any(|&s| (s - p).abs() <= margin);
    let mut segments: Vec<Segment> = Vec::new();
    let mut domains: Vec<(f64, f64)> = Vec::new();
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let sing_lo = is_singular(lo);
        let sing_hi = is_singular(hi);
        match (sing_lo, sing_hi) {
            (false, false) => {
                segments.push(Segment::Plain);
                domains.push((lo, hi));
            }
            (true, false) => {
                segments.push(Segment::SqrtLeft { p: lo });
                domains.push((0.0, (hi - lo).sqrt()));
            }
            (false, true) => {
                segments.push(Segment::SqrtRight { p: hi });
                domains.push((0.0, (hi - lo).sqrt()));
            }
            (true, true) => {
                let mid = 0.5 * (lo + hi);
                segments.push(Segment::SqrtLeft { p: lo });
                domains.push((0.0, (mid - lo).sqrt()));
                segments.push(Segment::SqrtRight { p: hi });
                domains.push((0.0, (hi - mid).sqrt()));
            }
        }
    }

    let eval_panel = |seg: usize, lo: f64, hi: f64| -> (f64, f64) {
        let segment = segments[seg];
        qk15(
            &|t: f64| {
                let (x, w) = segment.map(t);
                let v = f(x) * w;
                if v.is_finite() { v } else { 0.0 }
            },
            lo,
            hi,
        )
    };

    let mut panels: Vec<Panel> = Vec::with_capacity(64);
    for (i, &(lo, hi)) in domains.iter().enumerate() {
        let (value, error) = eval_panel(i, lo, hi);
        panels.push(Panel { a: lo, b: hi, value, error, seg: i });
    }

    let min_width = 1e-14 * (b - a).max(1.0);
    let mut splits = 0usize;
    loop {
        let total: f64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.error).sum();
        let target = abs_tol.max(rel_tol * total.abs());
        if err <= target {
            return QuadResult { value: total, error: err, converged: true };
        }
        // Split the worst panel; first index wins ties for determinism.
        let mut worst = 0usize;
        for (i, p) in panels.iter().enumerate() {
            if p.error > panels[worst].error {
                worst = i;
            }
        }
        let p = panels[worst];
        if p.b - p.a <= min_width || splits >= MAX_SPLITS {
            return QuadResult { value: total, error: err, converged: false };
        }
        splits += 1;
        let mid = 0.5 * (p.a + p.b);
        let (v1, e1) = eval_panel(p.seg, p.a, mid);
        let (v2, e2) = eval_panel(p.seg, mid, p.b);
        panels[worst] = Panel { a: p.a, b: mid, value: v1, error: e1, seg: p.seg };
        panels.push(Panel { a: mid, b: p.b, value: v2, error: e2, seg: p.seg });
    }
}

/// Safeguarded secant iteration inside a sign-change bracket, falling back to
/// bisection whenever the secant step leaves the interval or stalls.
pub fn hybrid_root<F: Fn(f64) -> f64 + ?Sized>(f: &F, lo: f64, hi: f64, xtol: f64) -> f64 {
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    debug_assert!(fa * fb < 0.0, "hybrid_root requires a sign change");
    for _ in 0..200 {
        if (b - a).abs() <= xtol {
            break;
        }
        // Secant proposal from the current bracket endpoints.
        let mut x = b - fb * (b - a) / (fb - fa);
        let mid = 0.5 * (a + b);
        if !x.is_finite() || x <= a || x >= b {
            x = mid;
        }
        // Keep a minimal step so the bracket shrinks geometrically.
        let min_step = 0.25 * xtol.max(f64::EPSILON * x.abs());
        if (x - a).abs() < min_step || (b - x).abs() < min_step {
            x = mid;
        }
        let fx = f(x);
        if fx == 0.0 {
            return x;
        }
        if fa * fx < 0.0 {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
    }
    0.5 * (a + b)
}

/// Golden-section search for a local minimum of `f` in [lo, hi].
pub fn golden_min<F: Fn(f64) -> f64 + ?Sized>(f: &F, lo: f64, hi: f64, xtol: f64) -> f64 {
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INVPHI * (b - a);
    let mut d = a + INVPHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a).abs() <= xtol {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INVPHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INVPHI * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Polish a critical point of `f` near `x0` by driving the centred finite
/// difference of f' to zero with a safeguarded secant. Returns `x0` when the
/// iteration leaves [lo, hi] or fails to settle.
pub fn polish_critical<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    x0: f64,
    lo: f64,
    hi: f64,
    xtol: f64,
) -> f64 {
    let h = 1e-7_f64.max(1e-9 * x0.abs());
    let deriv = |x: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    let mut x_prev = x0;
    let mut x = x0 + 10.0 * h;
    if x > hi {
        x = x0 - 10.0 * h;
        if x < lo {
            return x0;
        }
    }
    let mut d_prev = deriv(x_prev);
    let mut d = deriv(x);
    for _ in 0..60 {
        if d == d_prev {
            break;
        }
        let next = x - d * (x - x_prev) / (d - d_prev);
        if !next.is_finite() || next < lo || next > hi {
            return x0;
        }
        x_prev = x;
        d_prev = d;
        x = next;
        if (x - x_prev).abs() <= xtol {
            return x;
        }
        d = deriv(x);
    }
    if (x - x0).abs() <= (hi - lo) {
        x
    } else {
        x0
    }
}

/// Zeros of a scalar function on [a, b] located from a uniform scan.
#[derive(Debug, Clone)]
pub struct ZeroScan {
    pub zeros: Vec<f64>,
    /// True when more than `max_zeros` candidates were found.
    pub overflow: bool,
}

/// Locate zeros of `f`: sign changes are bracketed and refined with the
/// hybrid secant/bisection; tangential zeros (no sign change) are recovered
/// from local minima of |f| refined to critical points and accepted when the
/// residual drops below `f_tol`.
pub fn scan_zeros<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    a: f64,
    b: f64,
    n: usize,
    xtol: f64,
    f_tol: f64,
    max_zeros: usize,
) -> ZeroScan {
    let n = n.max(8);
    let xs: Vec<f64> = (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect();
    let fs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let scale = fs.iter().fold(0.0f64, |m, v| m.max(v.abs()));

    let mut zeros: Vec<f64> = Vec::new();
    let mut sign_cells: Vec<usize> = Vec::new();
    for i in 0..n {
        if fs[i] == 0.0 {
            zeros.push(xs[i]);
        } else if fs[i] * fs[i + 1] < 0.0 {
            sign_cells.push(i);
            let root = hybrid_root(f, xs[i], xs[i + 1], xtol);
            // A jump through zero refines to a point where |f| stays O(scale).
            if f(root).abs() <= f_tol.max(1e-7 * scale) {
                zeros.push(root);
            }
        }
    }
    if fs[n] == 0.0 {
        zeros.push(xs[n]);
    }

    // Tangential zeros: local minima of |f| away from sign-change cells.
    let near_sign_cell = |i: usize| {
        sign_cells.iter().any(|&c| i >= c.saturating_sub(1) && i <= c + 2)
    };
    let consider = |lo: f64, hi: f64, zeros: &mut Vec<f64>| {
        let absf = |x: f64| f(x).abs();
        let x_golden = golden_min(&absf, lo, hi, 1e-10);
        let x_star = polish_critical(f, x_golden, lo, hi, 1e-13);
        let candidate = if absf(x_star) <= absf(x_golden) { x_star } else { x_golden };
        if f(candidate).abs() <= f_tol {
            zeros.push(candidate);
        }
    };
    for i in 1..n {
        let mag = fs[i].abs();
        if mag < fs[i - 1].abs() && mag <= fs[i + 1].abs() && !near_sign_cell(i) && mag > 0.0 {
            consider(xs[i - 1], xs[i + 1], &mut zeros);
        }
    }
    // Endpoints can hold tangential zeros invisible to interior minima.
    if fs[0] != 0.0 && fs[0].abs() < fs[1].abs() && fs[0].abs() <= f_tol {
        zeros.push(a);
    }
    if fs[n] != 0.0 && fs[n].abs() < fs[n - 1].abs() && fs[n].abs() <= f_tol {
        zeros.push(b);
    }

    zeros.sort_by(|x, y| x.partial_cmp(y).unwrap());
    zeros.dedup_by(|x, y| (*x - *y).abs() <= 100.0 * xtol.max(1e-12));
    let overflow = zeros.len() > max_zeros;
    ZeroScan { zeros, overflow }
}

/// Refine a local maximum of `f` bracketed by [lo, hi]; returns (argmax, max).
pub fn refine_max<F: Fn(f64) -> f64 + ?Sized>(f: &F, lo: f64, hi: f64, xtol: f64) -> (f64, f64) {
    let neg = |x: f64| -f(x);
    let x_golden = golden_min(&neg, lo, hi, xtol.max(1e-10));
    let x_star = polish_critical(f, x_golden, lo, hi, 1e-13);
    let candidate = if f(x_star) >= f(x_golden) { x_star } else { x_golden };
    (candidate, f(candidate))
}

/// Monotone piecewise-cubic interpolant (Fritsch-Carlson slopes).
#[derive(Debug, Clone)]
pub struct Pchip {
    x: Vec<f64>,
    y: Vec<f64>,
    d: Vec<f64>,
}

impl Pchip {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self, &'static str> {
        if x.len() != y.len() || x.len() < 2 {
            return Err("pchip needs at least two matching knots");
        }
        if x.windows(2).any(|w| w[1] <= w[0]) {
            return Err("pchip knots must be strictly increasing");
        }
        let n = x.len();
        let mut delta = vec![0.0f64; n - 1];
        for i in 0..n - 1 {
            delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
        }
        let mut d = vec![0.0f64; n];
        d[0] = delta[0];
        d[n - 1] = delta[n - 2];
        for i in 1..n - 1 {
            if delta[i - 1] * delta[i] <= 0.0 {
                d[i] = 0.0;
            } else {
                let w1 = 2.0 * (x[i + 1] - x[i]) + (x[i] - x[i - 1]);
                let w2 = (x[i + 1] - x[i]) + 2.0 * (x[i] - x[i - 1]);
                d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
            }
        }
        // Endpoint slopes limited to preserve monotonicity.
        for (i, di) in [(0usize, 0usize), (n - 1, n - 2)] {
            if d[i] * delta[di] <= 0.0 {
                d[i] = 0.0;
            } else if d[i].abs() > 3.0 * delta[di].abs() {
                d[i] = 3.0 * delta[di];
            }
        }
        Ok(Pchip { x, y, d })
    }

    pub fn eval(&self, t: f64) -> f64 {
        let n = self.x.len();
        let t = t.clamp(self.x[0], self.x[n - 1]);
        let i = match self.x.binary_search_by(|v| v.partial_cmp(&t).unwrap()) {
            Ok(i) => i.min(n - 2),
            Err(i) => i.saturating_sub(1).min(n - 2),
        };
        let h = self.x[i + 1] - self.x[i];
        let s = (t - self.x[i]) / h;
        let (y0, y1, d0, d1) = (self.y[i], self.y[i + 1], self.d[i], self.d[i + 1]);
        let h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
        let h10 = s * (1.0 - s) * (1.0 - s);
        let h01 = s * s * (3.0 - 2.0 * s);
        let h11 = s * s * (s - 1.0);
        h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1
    }
}

/// Ordinary least squares y ≈ intercept + slope·x.
#[derive(Debug, Clone, Copy)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub max_residual: f64,
}

pub fn linear_fit(x: &[f64], y: &[f64]) -> LinearFit {
    assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        sxx += (xi - mx) * (xi - mx);
        sxy += (xi - mx) * (yi - my);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let max_residual = x
        .iter()
        .zip(y)
        .map(|(&xi, &yi)| (yi - intercept - slope * xi).abs())
        .fold(0.0f64, f64::max);
    LinearFit { slope, intercept, max_residual }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_smooth_polynomial_exactly() {
        let r = integrate(&|x: f64| x * x * x - 2.0 * x + 1.0, 0.0, 2.0, &[], &[], 1e-12, 1e-12);
        assert!(r.converged);
        assert!((r.value - 2.0).abs() < 1e-13);
    }

    #[test]
    fn integrates_endpoint_singularity_with_substitution() {
        // ∫_0^1 x^(-1/2) dx = 2; plain panels cannot certify this cheaply.
        let r = integrate(&|x: f64| x.sqrt().recip(), 0.0, 1.0, &[], &[0.0], 1e-12, 1e-12);
        assert!(r.converged);
        assert!((r.value - 2.0).abs() < 1e-11);
    }

    #[test]
    fn integrates_interior_near_singularity() {
        // Sharp integrable peak at x = 0.3.
        let eps = 1e-8;
        let f = |x: f64| (eps + (x - 0.3) * (x - 0.3)).powf(-0.75);
        let r = integrate(&f, 0.0, 1.0, &[], &[0.3], 1e-10, 1e-10);
        assert!(r.converged);
        // Compare against the same integral split symmetrically around the peak
        // with an independent composite evaluation in the tail region.
        let tail = integrate(&f, 0.4, 1.0, &[], &[], 1e-12, 1e-12);
        assert!(tail.converged);
        assert!(r.value > tail.value);
    }

    #[test]
    fn respects_breakpoints_for_step_data() {
        let f = |x: f64| if x < 0.25 { 1.0 } else { 3.0 };
        let r = integrate(&f, 0.0, 1.0, &[0.25], &[], 1e-13, 1e-13);
        assert!(r.converged);
        assert!((r.value - (0.25 + 3.0 * 0.75)).abs() < 1e-13);
    }

    #[test]
    fn hybrid_root_finds_cosine_zero() {
        let root = hybrid_root(&|x: f64| x.cos(), 1.0, 2.0, 1e-14);
        assert!((root - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn scan_finds_tangential_and_crossing_zeros() {
        // f(x) = sin^2(pi x) - touches zero at 0, 1; crosses nowhere.
        let f = |x: f64| (std::f64::consts::PI * x).sin().powi(2);
        let scan = scan_zeros(&f, 0.0, 1.0, 256, 1e-12, 1e-12, 64);
        assert!(!scan.overflow);
        assert_eq!(scan.zeros.len(), 2);
        assert!(scan.zeros[0].abs() < 1e-9 && (scan.zeros[1] - 1.0).abs() < 1e-9);

        let g = |x: f64| (2.0 * std::f64::consts::PI * x).cos();
        let scan = scan_zeros(&g, 0.0, 1.0, 256, 1e-13, 1e-12, 64);
        assert_eq!(scan.zeros.len(), 2);
        assert!((scan.zeros[0] - 0.25).abs() < 1e-11);
        assert!((scan.zeros[1] - 0.75).abs() < 1e-11);
    }

    #[test]
    fn tangential_interior_zero_is_refined_to_high_accuracy() {
        // C(α) = cos²(2πα) - 1 touches zero at 1/2.
        let f = |x: f64| (2.0 * std::f64::consts::PI * x).cos().powi(2) - 1.0;
        let scan = scan_zeros(&f, 0.1, 0.9, 512, 1e-13, 1e-12, 64);
        assert_eq!(scan.zeros.len(), 1);
        assert!((scan.zeros[0] - 0.5).abs() < 1e-9, "got {}", scan.zeros[0]);
    }

    #[test]
    fn refine_max_polishes_to_critical_point() {
        let f = |x: f64| -(x - 0.371).powi(2) + 2.0;
        let (xm, fm) = refine_max(&f, 0.2, 0.6, 1e-10);
        assert!((xm - 0.371).abs() < 1e-9);
        assert!((fm - 2.0).abs() < 1e-12);
    }

    #[test]
    fn pchip_is_monotone_and_interpolating() {
        let x = vec![0.0, 0.3, 0.5, 1.0];
        let y = vec![0.0, 0.1, 0.8, 1.0];
        let p = Pchip::new(x.clone(), y.clone()).unwrap();
        for (xi, yi) in x.iter().zip(&y) {
            assert!((p.eval(*xi) - yi).abs() < 1e-14);
        }
        let mut prev = p.eval(0.0);
        for i in 1..=100 {
            let v = p.eval(i as f64 / 100.0);
            assert!(v >= prev - 1e-12);
            prev = v;
        }
    }

    #[test]
    fn linear_fit_recovers_slope() {
        let x: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let y: Vec<f64> = x.iter().map(|v| 3.0 - 1.5 * v).collect();
        let fit = linear_fit(&x, &y);
        assert!((fit.slope + 1.5).abs() < 1e-12);
        assert!(fit.max_residual < 1e-12);
    }
}
