//! Integral-transform machinery: forward Laplace transforms of callables,
//! inverse Laplace transforms by a branch-cut (Bromwich) integral and by a
//! fixed-Talbot contour, Fourier cosine transforms with oscillation-aware
//! panels, and convolution of an analytic kernel against sampled data.
//!
//! The two inverse-transform routes are deliberately independent — one
//! integrates along the branch cut on the negative real axis, the other
//! sums a deformed-contour trapezoid — so they can validate each other.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::config::QuadratureControl;
use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method, SeriesControl};
use crate::quad;
use crate::special::sinpi;
use crate::wright::{wright_w, WrightParams};

/// Interpolation rule of a [`SampledFunction`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interp {
    PiecewiseLinear,
    /// Local four-point Lagrange interpolation (exact on cubics).
    PiecewiseCubic,
}

/// A function known through samples on a strictly increasing grid. Outside
/// the sampled range it evaluates to zero (extension by zero), which is the
/// convention every consumer here wants: data functions with compact
/// support and causal signals that vanish before the first sample.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    xs: Vec<f64>,
    ys: Vec<f64>,
    interp: Interp,
}

impl SampledFunction {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>, interp: Interp) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::InvalidSamples(format!(
                "{} abscissae vs {} values",
                xs.len(),
                ys.len()
            )));
        }
        if xs.len() < 2 {
            return Err(Error::InvalidSamples(
                "need at least two sample points".to_string(),
            ));
        }
        if xs.iter().chain(ys.iter()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidSamples(
                "samples must be finite".to_string(),
            ));
        }
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSamples(
                "abscissae must be strictly increasing".to_string(),
            ));
        }
        Ok(SampledFunction { xs, ys, interp })
    }

    /// Sample a callable on `n + 1` equally spaced points of `[a, b]`.
    pub fn from_fn(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize, interp: Interp) -> Result<Self> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidSamples(format!(
                "need a finite range with a < b, got [{a}, {b}]"
            )));
        }
        if n < 1 {
            return Err(Error::InvalidSamples(
                "need at least one interval".to_string(),
            ));
        }
        let h = (b - a) / n as f64;
        let xs: Vec<f64> = (0..=n).map(|i| a + h * i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
        SampledFunction::new(xs, ys, interp)
    }

    /// Sampled range `[first, last]`.
    pub fn domain(&self) -> (f64, f64) {
        (self.xs[0], *self.xs.last().unwrap())
    }

    pub fn abscissae(&self) -> &[f64] {
        &self.xs
    }

    pub fn values(&self) -> &[f64] {
        &self.ys
    }

    pub fn interp(&self) -> Interp {
        self.interp
    }

    /// Interpolated value; zero outside the sampled range.
    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        if x < self.xs[0] || x > self.xs[n - 1] {
            return 0.0;
        }
        // index of the interval [xs[i], xs[i+1]] containing x
        let i = match self.xs.binary_search_by(|v| v.total_cmp(&x)) {
            Ok(k) => return self.ys[k],
            Err(k) => k - 1, // k >= 1 since x >= xs[0]
        };
        match self.interp {
            Interp::PiecewiseLinear => {
                let w = (x - self.xs[i]) / (self.xs[i + 1] - self.xs[i]);
                self.ys[i] * (1.0 - w) + self.ys[i + 1] * w
            }
            Interp::PiecewiseCubic => {
                let j0 = i.saturating_sub(1).min(n - 4);
                let mut acc = 0.0;
                for a in j0..j0 + 4 {
                    let mut l = self.ys[a];
                    for b in j0..j0 + 4 {
                        if b != a {
                            l *= (x - self.xs[b]) / (self.xs[a] - self.xs[b]);
                        }
                    }
                    acc += l;
                }
                acc
            }
        }
    }
}

/// Forward Laplace transform `∫₀^∞ e^{-st} f(t) dt` of a callable of at most
/// exponential-zero order, by adaptive quadrature on the mapped half-line.
pub fn laplace_fwd(
    f: impl Fn(f64) -> f64,
    s: f64,
    ctl: &QuadratureControl,
) -> Result<EvalResult> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain(
            "laplace transform",
            format!("need a positive finite transform variable, got s = {s}"),
        ));
    }
    quad::integrate_to_inf(move |t| (-s * t).exp() * f(t), 0.0, ctl)
}

/// Inverse Laplace transform of a function analytic off the negative real
/// axis, with at most a simple pole at the origin:
///
///   f(t) = residue − (1/π) ∫₀^∞ e^{-rt} Im[F(r·e^{iπ})] dr,
///
/// the Bromwich contour collapsed onto the branch cut. `f_above_cut(r)`
/// must return (Re, Im) of F just above the cut; `pole_residue_at_zero` is
/// the residue of the pole at s = 0 (zero when there is none).
///
/// The integration variable is substituted u = √r internally, which tames
/// the algebraic branch-point singularity at the origin for every image in
/// scope, and the upper limit is extended by interval-doubling until the
/// last segment is negligible — so images whose modulus first grows along
/// the cut (s^ν kernels with ν > 1/2) are truncated honestly. An integrand
/// too oscillatory for the subdivision budget surfaces as a
/// quadrature-non-convergence error.
pub fn bromwich_branchcut_invert(
    f_above_cut: impl Fn(f64) -> (f64, f64),
    pole_residue_at_zero: f64,
    t: f64,
    ctl: &QuadratureControl,
) -> Result<EvalResult> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(
            "branch-cut inversion",
            format!("need a positive finite time, got t = {t}"),
        ));
    }
    let g = |u: f64| {
        let (_, im) = f_above_cut(u * u);
        2.0 * u * (-u * u * t).exp() * im
    };

    // graded panels toward the branch point, then the damping scale
    let u0 = (ctl.tail_cutoff / t).sqrt();
    let pts: Vec<f64> = [0.0, 1e-12, 1e-8, 1e-5, 1e-3, 1e-2, 0.05, 0.2, 0.5, 1.0]
        .iter()
        .map(|&c| c * u0)
        .collect();
    let core = quad::integrate_with_breakpoints(g, &pts, ctl)?;
    let mut total = core.value;
    let mut err = core.err_est;

    // extend by doubling until a whole segment is below tolerance
    let mut hi = u0;
    let mut converged = false;
    for _ in 0..8 {
        let seg = quad::integrate(g, hi, 2.0 * hi, ctl)?;
        total += seg.value;
        err += seg.err_est;
        hi *= 2.0;
        if seg.value.abs() <= 0.1 * ctl.abs_tol.max(ctl.rel_tol * total.abs()) {
            err += seg.value.abs(); // bound on the remaining tail
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::QuadratureNonConvergence {
            err_est: err,
            subdivisions: ctl.max_subdivisions,
        });
    }

    let value = pole_residue_at_zero - total / PI;
    Ok(EvalResult::new(
        value,
        err / PI + 1e-15 * value.abs(),
        Method::Integral,
    ))
}

/// Symbolic descriptor of the Laplace image `s^{-μ} e^{-x s^ν}` — the
/// closed family all inverse transforms here target. Its inverse is the
/// scaled Wright function `t^{μ-1} W[-ν,μ](-x t^{-ν})`; special cases
/// include the complementary error function (μ = 1, ν = 1/2) and the
/// one-sided extremal densities (μ = 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceImage {
    mu: f64,
    x: f64,
    nu: f64,
}

impl LaplaceImage {
    /// Requires 0 ≤ μ ≤ 1 (stronger branch singularities at the origin are
    /// outside the collapsed-contour formula), x ≥ 0, and 0 < ν < 1.
    pub fn new(mu: f64, x: f64, nu: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&mu) || !(x >= 0.0) || !(nu > 0.0 && nu < 1.0) {
            return Err(Error::domain(
                "laplace image",
                format!("need 0 <= mu <= 1, x >= 0, 0 < nu < 1; got mu = {mu}, x = {x}, nu = {nu}"),
            ));
        }
        Ok(LaplaceImage { mu, x, nu })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// (Re, Im) of the image just above the branch cut, at s = r·e^{iπ},
    /// r > 0. The phase πμ + x r^ν sin(πν) is handled in units of π so the
    /// sine stays exact where the phase crosses multiples of π — plain
    /// floating-point `sin(π + ε)` would destroy the μ = 1 members.
    pub fn above_cut(&self, r: f64) -> (f64, f64) {
        let cos_pi_nu = sinpi(0.5 - self.nu);
        let amp = r.powf(-self.mu) * (-self.x * r.powf(self.nu) * cos_pi_nu).exp();
        let phase_over_pi = self.mu + self.x * r.powf(self.nu) * sinpi(self.nu) / PI;
        (
            amp * (PI * phase_over_pi).cos(),
            -amp * sinpi(phase_over_pi),
        )
    }

    /// Residue of the simple pole at s = 0 (present only at μ = 1).
    pub fn residue_at_origin(&self) -> f64 {
        if (self.mu - 1.0).abs() < 1e-12 {
            1.0
        } else {
            0.0
        }
    }

    /// The image at a general complex point (principal branch), evaluated
    /// in log space so that deep-contour points underflow to zero instead
    /// of producing 0·∞.
    pub fn image_at(&self, s: Complex64) -> Complex64 {
        let ln_s = s.ln();
        (-self.mu * ln_s - self.x * (self.nu * ln_s).exp()).exp()
    }

    /// The known time-domain function `t^{μ-1} W[-ν,μ](-x t^{-ν})`, through
    /// the series evaluator — the reference the two numerical inverters are
    /// compared against.
    pub fn time_domain(&self, t: f64, ctl: &SeriesControl) -> Result<EvalResult> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::domain(
                "laplace image",
                format!("need a positive finite time, got t = {t}"),
            ));
        }
        let params = WrightParams::new(-self.nu, self.mu)?;
        let w = wright_w(&params, -self.x * t.powf(-self.nu), ctl)?;
        Ok(w.scaled(t.powf(self.mu - 1.0)))
    }

    /// Branch-cut inversion of this image (see [`bromwich_branchcut_invert`]).
    pub fn invert_branch_cut(&self, t: f64, ctl: &QuadratureControl) -> Result<EvalResult> {
        bromwich_branchcut_invert(|r| self.above_cut(r), self.residue_at_origin(), t, ctl)
    }
}

/// Inverse Laplace transform by the fixed-Talbot contour
/// `s(θ) = r θ(cot θ + i)`, θ ∈ (−π, π), with `r = 2·n_nodes/(5t)`.
///
/// The θ-trapezoid is evaluated at `n_nodes`, `2·n_nodes`, and `4·n_nodes`
/// points on the *same* contour (refining nodes at fixed r keeps the
/// roundoff amplification `e^{rt}` bounded, unlike re-deriving r from the
/// doubled count). The value is the finest sum; the last doubling
/// difference is the error estimate; a doubling difference that grows is
/// reported as instability.
pub fn talbot_invert(image: &LaplaceImage, t: f64, n_nodes: usize) -> Result<EvalResult> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(
            "talbot inversion",
            format!("need a positive finite time, got t = {t}"),
        ));
    }
    if !(4..=4096).contains(&n_nodes) {
        return Err(Error::domain(
            "talbot inversion",
            format!("node count {n_nodes} outside the supported range 4..=4096"),
        ));
    }
    let r = 2.0 * n_nodes as f64 / (5.0 * t);

    // trapezoid sum with m nodes; also reports the largest term magnitude,
    // which sets the cancellation-noise floor
    let sum = |m: usize| -> (f64, f64) {
        let mut acc = 0.5 * (r * t).exp() * self_at_real(image, r);
        let mut peak = acc.abs();
        for k in 1..m {
            let theta = PI * k as f64 / m as f64;
            let cot = theta.cos() / theta.sin();
            let s = Complex64::new(r * theta * cot, r * theta);
            let sigma = theta + (theta * cot - 1.0) * cot;
            let ln_s = s.ln();
            let exponent = s * t - image.mu * ln_s - image.x * (image.nu * ln_s).exp();
            let term = (exponent.exp() * Complex64::new(1.0, sigma)).re;
            if term.is_finite() {
                acc += term;
                peak = peak.max(term.abs());
            }
        }
        (acc * r / m as f64, peak * r / m as f64)
    };

    let (f1, _) = sum(n_nodes);
    let (f2, _) = sum(2 * n_nodes);
    let (f4, peak) = sum(4 * n_nodes);
    let d1 = (f2 - f1).abs();
    let d2 = (f4 - f2).abs();
    let noise = (4 * n_nodes) as f64 * f64::EPSILON * peak.max(f4.abs());
    if d2 > d1.max(8.0 * noise) && d2 > 8.0 * noise {
        return Err(Error::InverseTransformUnstable { t, drift: d2 });
    }
    Ok(EvalResult::new(f4, d2.max(noise), Method::Integral))
}

/// The image at a real positive point, in log space.
fn self_at_real(image: &LaplaceImage, r: f64) -> f64 {
    (-image.mu * r.ln() - image.x * r.powf(image.nu)).exp()
}

/// Fourier cosine transform `∫₀^∞ cos(κx) f(x) dx` of an absolutely
/// integrable callable, with panel boundaries at the cosine zeros and the
/// half-line truncated at the control's tail cutoff (the neglected tail is
/// estimated from |f| at the cut and added to the error).
pub fn cosine_transform(
    f: impl Fn(f64) -> f64,
    kappa: f64,
    ctl: &QuadratureControl,
) -> Result<EvalResult> {
    if !kappa.is_finite() {
        return Err(Error::domain(
            "cosine transform",
            format!("frequency {kappa} is not finite"),
        ));
    }
    let k = kappa.abs();
    let upper = ctl.tail_cutoff;
    let mut pts = vec![0.0];
    if k > 0.0 {
        let mut j = 0u32;
        loop {
            let z = (0.5 + f64::from(j)) * PI / k;
            if z >= upper {
                break;
            }
            pts.push(z);
            j += 1;
            if j > 4096 {
                return Err(Error::domain(
                    "cosine transform",
                    format!("frequency {kappa} oscillates faster than the panel budget resolves"),
                ));
            }
        }
    }
    pts.push(upper);
    let core = quad::integrate_with_breakpoints(|x| (k * x).cos() * f(x), &pts, ctl)?;
    // tail bound: |∫_U^∞ cos·f| <= 2|f(U)|/κ for monotone decay, |f(U)|·U as
    // a crude fallback at κ = 0
    let at_cut = f(upper).abs();
    let tail = if k > 0.0 {
        (2.0 * at_cut / k).min(at_cut * upper)
    } else {
        at_cut * upper
    };
    Ok(EvalResult::new(
        core.value,
        core.err_est + tail,
        Method::Integral,
    ))
}

/// Which convolution the kernel/data pair means.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvolutionDomain {
    /// Space convolution over the data's support: ∫ k(x−y) f(y) dy.
    Space,
    /// Causal time convolution: ∫₀^t k(t−τ) g(τ) dτ.
    CausalTime,
}

/// Convolution of an analytic kernel against sampled data, evaluated at one
/// point by adaptive quadrature with panel boundaries on the sample grid.
/// When the data window cuts off kernel mass (the kernel is still large at
/// the window edge), the boundary leakage estimate is added to `err_est`
/// rather than silently ignored.
pub fn convolve(
    kernel: impl Fn(f64) -> f64,
    data: &SampledFunction,
    point: f64,
    domain: ConvolutionDomain,
    ctl: &QuadratureControl,
) -> Result<EvalResult> {
    if !point.is_finite() {
        return Err(Error::domain(
            "convolution",
            format!("evaluation point {point} is not finite"),
        ));
    }
    let (a, b) = data.domain();
    let (lo, hi) = match domain {
        ConvolutionDomain::Space => (a, b),
        ConvolutionDomain::CausalTime => {
            if !(point > 0.0) {
                return Err(Error::domain(
                    "convolution",
                    format!("causal convolution needs t > 0, got t = {point}"),
                ));
            }
            (a.max(0.0), b.min(point))
        }
    };
    if !(lo < hi) {
        return Ok(EvalResult::new(0.0, 0.0, Method::Integral));
    }

    // sample-grid breakpoints, thinned to keep the initial panel count sane
    let xs = data.abscissae();
    let stride = (xs.len() / 256).max(1);
    let mut pts = vec![lo];
    for &x in xs.iter().step_by(stride) {
        if x > lo && x < hi {
            pts.push(x);
        }
    }
    pts.push(hi);

    let integrand = |y: f64| kernel(point - y) * data.eval(y);
    let core = quad::integrate_with_breakpoints(integrand, &pts, ctl)?;

    // boundary-leakage estimate: kernel magnitude at each window edge times
    // the local sample value and edge spacing (heuristic, not a bound)
    let n = xs.len();
    let mut leak = 0.0;
    match domain {
        ConvolutionDomain::Space => {
            leak += (kernel(point - a) * data.values()[0]).abs() * (xs[1] - xs[0]);
            leak += (kernel(point - b) * data.values()[n - 1]).abs() * (xs[n - 1] - xs[n - 2]);
        }
        ConvolutionDomain::CausalTime => {
            if point > b {
                leak += (kernel(point - b) * data.values()[n - 1]).abs() * (point - b);
            }
        }
    }
    Ok(EvalResult::new(
        core.value,
        core.err_est + leak,
        Method::Integral,
    ))
}
