//! Adaptive Gauss–Kronrod quadrature on finite and semi-infinite intervals,
//! plus a graded-mesh product rule for integrals with an algebraic weight
//! `u^p` at the origin.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::config::QuadratureControl;
use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method};

/// Abscissae of the 15-point Kronrod rule on [-1, 1]; the odd-indexed entries
/// together with 0 are the nodes of the embedded 7-point Gauss rule.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

/// Weights of the 7-point Gauss rule (pairs, then the centre).
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Weights of the 15-point Kronrod rule.
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

/// Combine the raw Gauss/Kronrod difference with the integrand's variation
/// into a defensible error estimate (the classic QUADPACK rescaling).
fn rescale_error(err: f64, resabs: f64, resasc: f64) -> f64 {
    let mut err = err.abs();
    if resasc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / resasc).powf(1.5);
        err = if scale < 1.0 { resasc * scale } else { resasc };
    }
    let min_pos = f64::MIN_POSITIVE;
    let eps = f64::EPSILON;
    if resabs > min_pos / (50.0 * eps) {
        let min_err = 50.0 * eps * resabs;
        if min_err > err {
            err = min_err;
        }
    }
    err
}

/// One 15-point Kronrod panel: returns (integral, error estimate, saw a
/// non-finite sample).
fn qk15(f: &mut dyn FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64, bool) {
    let centr = 0.5 * (a + b);
    let hlgth = 0.5 * (b - a);
    let dhlgth = hlgth.abs();

    let mut bad = false;
    let mut eval = |x: f64| -> f64 {
        let v = f(x);
        if !v.is_finite() {
            bad = true;
            0.0
        } else {
            v
        }
    };

    let fc = eval(centr);
    let mut resg = WG[3] * fc;
    let mut resk = WGK[7] * fc;
    let mut resabs = resk.abs();
    let mut fv1 = [0.0f64; 7];
    let mut fv2 = [0.0f64; 7];

    for j in 0..3 {
        let jtw = 2 * j + 1;
        let absc = hlgth * XGK[jtw];
        let f1 = eval(centr - absc);
        let f2 = eval(centr + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        let fsum = f1 + f2;
        resg += WG[j] * fsum;
        resk += WGK[jtw] * fsum;
        resabs += WGK[jtw] * (f1.abs() + f2.abs());
    }
    for j in 0..4 {
        let jtwm1 = 2 * j;
        let absc = hlgth * XGK[jtwm1];
        let f1 = eval(centr - absc);
        let f2 = eval(centr + absc);
        if jtwm1 < 7 {
            fv1[jtwm1] = f1;
            fv2[jtwm1] = f2;
        }
        let fsum = f1 + f2;
        resk += WGK[jtwm1] * fsum;
        resabs += WGK[jtwm1] * (f1.abs() + f2.abs());
    }

    let reskh = 0.5 * resk;
    let mut resasc = WGK[7] * (fc - reskh).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv1[j] - reskh).abs() + (fv2[j] - reskh).abs());
    }

    let result = resk * hlgth;
    let resabs = resabs * dhlgth;
    let resasc = resasc * dhlgth;
    let abserr = rescale_error((resk - resg) * hlgth, resabs, resasc);
    (result, if bad { f64::INFINITY } else { abserr }, bad)
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    result: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Worst-panel-first adaptive refinement over a list of initial segments.
fn adaptive(
    f: &mut dyn FnMut(f64) -> f64,
    segments: &[(f64, f64)],
    ctl: &QuadratureControl,
) -> Result<EvalResult> {
    let mut heap: BinaryHeap<Panel> = BinaryHeap::new();
    // Panels too narrow to bisect at f64 resolution; their error is kept but
    // they are no longer refined.
    let mut stuck: Vec<Panel> = Vec::new();
    let mut result = 0.0f64;
    let mut err = 0.0f64;

    let mut push = |heap: &mut BinaryHeap<Panel>,
                    result: &mut f64,
                    err: &mut f64,
                    a: f64,
                    b: f64|
     -> Result<()> {
        let (r, e, bad) = qk15(f, a, b);
        if bad {
            return Err(Error::domain(
                "quadrature",
                format!("integrand is not finite inside [{a:e}, {b:e}]"),
            ));
        }
        *result += r;
        *err += e;
        heap.push(Panel { a, b, result: r, err: e });
        Ok(())
    };

    for &(a, b) in segments {
        if a == b {
            continue;
        }
        push(&mut heap, &mut result, &mut err, a, b)?;
    }
    if heap.is_empty() {
        return Ok(EvalResult::new(0.0, 0.0, Method::Integral));
    }

    let tolerance = |result: f64| ctl.abs_tol.max(ctl.rel_tol * result.abs());
    let mut splits = 0usize;
    while err > tolerance(result) {
        let Some(worst) = heap.pop() else {
            break; // every remaining panel is stuck
        };
        let m = 0.5 * (worst.a + worst.b);
        let lo = worst.a.min(worst.b);
        let hi = worst.a.max(worst.b);
        if !(m > lo && m < hi) {
            stuck.push(worst);
            continue;
        }
        if splits >= ctl.max_subdivisions {
            heap.push(worst);
            break;
        }
        splits += 1;
        result -= worst.result;
        err -= worst.err;
        push(&mut heap, &mut result, &mut err, worst.a, m)?;
        push(&mut heap, &mut result, &mut err, m, worst.b)?;
    }

    // Refresh the running totals: they accumulate rounding noise as panels
    // are added and removed.
    result = 0.0;
    err = 0.0;
    for p in heap.iter().chain(stuck.iter()) {
        result += p.result;
        err += p.err;
    }

    if err > tolerance(result) {
        return Err(Error::QuadratureNonConvergence { err_est: err, subdivisions: splits });
    }
    Ok(EvalResult::new(result, err, Method::Integral))
}

/// Adaptive integral of `f` over the finite interval `[a, b]`.
pub fn integrate(
    mut f: impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    ctl: &QuadratureControl,
) -> Result<EvalResult> {
    if a == b {
        return Ok(EvalResult::new(0.0, 0.0, Method::Integral));
    }
    if a > b {
        let r = adaptive(&mut f, &[(b, a)], ctl)?;
        return Ok(EvalResult::new(-r.value, r.err_est, Method::Integral));
    }
    adaptive(&mut f, &[(a, b)], ctl)
}

/// Adaptive integral over `[points[0], points[last]]` with the interior
/// points used as initial panel boundaries (place known kinks, phase zeros,
/// or near-singularities here).
pub fn integrate_with_breakpoints(
    mut f: impl FnMut(f64) -> f64,
    points: &[f64],
    ctl: &QuadratureControl,
) -> Result<EvalResult> {
    if points.len() < 2 {
        return Err(Error::domain(
            "quadrature",
            "breakpoint list needs at least two points".to_string(),
        ));
    }
    if points.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::domain(
            "quadrature",
            "breakpoints must be non-decreasing".to_string(),
        ));
    }
    let segments: Vec<(f64, f64)> = points.windows(2).map(|w| (w[0], w[1])).collect();
    adaptive(&mut f, &segments, ctl)
}

/// Adaptive integral of `f` over `[a, ∞)`, through the map
/// `x = a + (1 - t)/t`, `t ∈ (0, 1]`. The integral must converge: mass
/// beyond `x ≈ 1e300` is treated as zero.
pub fn integrate_to_inf(
    mut f: impl FnMut(f64) -> f64,
    a: f64,
    ctl: &QuadratureControl,
) -> Result<EvalResult> {
    let mut mapped = |t: f64| -> f64 {
        let x = a + (1.0 - t) / t;
        if !(x < 1e300) {
            return 0.0;
        }
        f(x) / (t * t)
    };
    adaptive(&mut mapped, &[(0.0, 1.0)], ctl)
}

/// `∫₀ᵇ u^p g(u) du` for `p > -1` and smooth `g`, by a product rule that
/// integrates the weight exactly against a piecewise-linear interpolant of
/// `g` on a cosine-graded mesh (clustered at the origin, where the weight is
/// singular). Richardson extrapolation of the mesh-halving pair supplies the
/// error estimate.
pub fn power_weighted_integral(
    mut g: impl FnMut(f64) -> f64,
    p: f64,
    b: f64,
    ctl: &QuadratureControl,
) -> Result<EvalResult> {
    if !(p > -1.0) {
        return Err(Error::domain(
            "power-weighted quadrature",
            format!("weight exponent {p} must exceed -1 for an integrable weight"),
        ));
    }
    if !(b > 0.0) || !b.is_finite() {
        return Err(Error::domain(
            "power-weighted quadrature",
            format!("upper limit {b} must be positive and finite"),
        ));
    }
    let n = ctl.max_subdivisions.max(16);

    // Samples of g on the fine mesh; the coarse mesh reuses every other one.
    let mut nodes = Vec::with_capacity(n + 1);
    let mut values = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let theta = std::f64::consts::FRAC_PI_2 * (i as f64) / (n as f64);
        let u = b * (1.0 - theta.cos());
        let v = if i == 0 { 0.0 } else { g(u) };
        if !v.is_finite() {
            return Err(Error::domain(
                "power-weighted quadrature",
                format!("integrand factor is not finite at u = {u:e}"),
            ));
        }
        nodes.push(u);
        values.push(v);
    }
    // g(0) multiplies an integrable weight; a finite sample is still needed.
    values[0] = g(0.0);
    if !values[0].is_finite() {
        return Err(Error::domain(
            "power-weighted quadrature",
            "integrand factor is not finite at u = 0".to_string(),
        ));
    }

    let rule = |stride: usize| -> f64 {
        let mut total = 0.0f64;
        let mut i = 0usize;
        while i + stride <= n {
            let (u0, u1) = (nodes[i], nodes[i + stride]);
            let (g0, g1) = (values[i], values[i + stride]);
            let h = u1 - u0;
            if h > 0.0 {
                // Exact moments of the weight against 1 and (u - u0).
                let m0 = (u1.powf(p + 1.0) - u0.powf(p + 1.0)) / (p + 1.0);
                let m1 = (u1.powf(p + 2.0) - u0.powf(p + 2.0)) / (p + 2.0) - u0 * m0;
                total += g0 * m0 + (g1 - g0) / h * m1;
            }
            i += stride;
        }
        total
    };

    let coarse = rule(2);
    let fine = rule(1);
    // Piecewise-linear interpolation converges as h^2, so the halving pair
    // supports one Richardson step.
    let correction = (fine - coarse) / 3.0;
    let value = fine + correction;
    let err = correction.abs() + f64::EPSILON * value.abs() * (n as f64).sqrt();
    Ok(EvalResult::new(value, err, Method::Integral))
}
