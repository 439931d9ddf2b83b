//! The Wright function W[λ,μ](z) = Σ zⁿ / (n! Γ(λn + μ)) and the pair of
//! auxiliary functions it generates for index -1 < λ < 0: the density
//! kernel M[ν](x) = W[-ν,1-ν](-x) and its companion F[ν](x) = W[-ν,0](-x).
//!
//! M[ν] is evaluated by a four-route dispatcher (closed forms, power series,
//! a steepest-descent-path integral, large-argument asymptotics); each route
//! can also be forced for cross-validation.

use std::f64::consts::PI;

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::eval::{sum_series, EvalResult, Method, SeriesControl};
use crate::quad;
use crate::special::{airy_ai, lgamma_sign, ln_rgamma_sign, rgamma, SQRT_PI};

/// Validated index pair (λ, μ) of a Wright function; requires λ > -1.
/// Indices with -1 < λ < 0 parameterize the "second kind" — the regime in
/// which the function carries probability densities on the half-line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrightParams {
    lambda: f64,
    mu: f64,
}

impl WrightParams {
    pub fn new(lambda: f64, mu: f64) -> Result<Self> {
        if !lambda.is_finite() || !mu.is_finite() || lambda <= -1.0 {
            return Err(Error::domain(
                "wright",
                format!("need finite indices with lambda > -1, got lambda = {lambda}, mu = {mu}"),
            ));
        }
        Ok(WrightParams { lambda, mu })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn second_kind(&self) -> bool {
        self.lambda < 0.0
    }
}

/// Terms zⁿ / (n! Γ(λn + μ)). Each term is built on a direct path (running
/// power times reciprocal gamma) while both factors are inside f64 range;
/// when either leaves it — the power under/overflows, or the reflection
/// regime of 1/Γ saturates — the term is recovered through logarithms with
/// explicit sign bookkeeping. The direct path keeps per-term rounding near
/// machine epsilon, which the all-logarithm construction would not.
fn wright_terms(lambda: f64, mu: f64, z: f64) -> impl Iterator<Item = f64> {
    let ln_az = z.abs().ln();
    let neg = z < 0.0;
    let mut pow = 1.0f64; // z^n / n!
    let mut n = 0u32;
    std::iter::from_fn(move || {
        let arg = lambda * f64::from(n) + mu;
        let rg = rgamma(arg);
        let t = if pow.is_finite() && rg.is_finite() {
            pow * rg
        } else {
            let (ln_rg, sg) = ln_rgamma_sign(arg);
            let sign = sg * if neg && n % 2 == 1 { -1.0 } else { 1.0 };
            let nf = f64::from(n);
            let (ln_fact, _) = lgamma_sign(nf + 1.0).expect("n + 1 >= 1 is pole-free");
            sign * (ln_rg + nf * ln_az - ln_fact).exp()
        };
        pow *= z / (f64::from(n) + 1.0);
        n += 1;
        Some(t)
    })
}

/// W[λ,μ](z) by power series (the function is entire, but deep cancellation
/// regions are refused with an honest error rather than returned as noise).
pub fn wright_w(params: &WrightParams, z: f64, ctl: &SeriesControl) -> Result<EvalResult> {
    if !z.is_finite() {
        return Err(Error::domain("wright", format!("argument {z} is not finite")));
    }
    sum_series("wright series", wright_terms(params.lambda, params.mu, z), ctl)
}

/// Validated auxiliary-function index: 0 < ν < 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuxIndex(f64);

impl AuxIndex {
    pub fn new(nu: f64) -> Result<Self> {
        if !(nu > 0.0 && nu < 1.0) {
            return Err(Error::domain(
                "aux-index",
                format!("need 0 < nu < 1, got {nu}"),
            ));
        }
        Ok(AuxIndex(nu))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Evaluation route for [`wright_m_route`]. `Auto` lets the dispatcher pick;
/// the others force one representation, which is how independent routes are
/// cross-validated against each other. A forced route is evaluated on its
/// own terms — applicability is the caller's responsibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MRoute {
    Auto,
    ClosedForm,
    Series,
    Integral,
    Asymptotic,
}

/// Decay constant of M[ν] in the stretched variable X = x^(1/(1-ν)):
/// M[ν](x) ≍ exp(-c₀ X) · (algebraic), with c₀ = (1-ν) ν^(ν/(1-ν)).
fn m_decay_constant(nu: f64) -> f64 {
    (1.0 - nu) * nu.powf(nu / (1.0 - nu))
}

/// Largest x at which the alternating power series of M[ν] keeps roughly
/// nine significant digits in f64: the cancellation ratio grows like
/// exp(2 c₀ X), so the cut is placed at c₀ X = 6.
fn m_series_cut(nu: f64) -> f64 {
    (6.0 / m_decay_constant(nu)).powf(1.0 - nu)
}

/// Elementary / Airy closed forms of M[ν], valid on the whole real line.
/// `None` when the index has no closed form or the Airy argument is outside
/// the supported range.
fn m_closed_form(nu: f64, x: f64) -> Result<Option<EvalResult>> {
    let c31 = 3.0f64.cbrt();
    if (nu - 0.5).abs() < 1e-14 {
        let v = (-x * x / 4.0).exp() / SQRT_PI;
        return Ok(Some(EvalResult::exact(v)));
    }
    if (nu - 1.0 / 3.0).abs() < 1e-14 {
        let u = x / c31;
        if u < -5.5 {
            return Ok(None);
        }
        let (ai, _) = airy_ai(u)?;
        let v = c31 * c31 * ai;
        return Ok(Some(EvalResult::new(v, 1e-12 * v.abs(), Method::ClosedForm)));
    }
    if (nu - 2.0 / 3.0).abs() < 1e-14 {
        let u = x * x / (3.0 * c31);
        let (ai, aip) = airy_ai(u)?;
        let damp = (-2.0 * x * x * x / 27.0).exp();
        let v = (c31 * x * ai - 3.0 * aip) * damp / (c31 * c31);
        if !v.is_finite() {
            return Err(Error::Overflow {
                what: "wright-m closed form",
                arg: x,
            });
        }
        // mild cancellation between the two Airy terms at negative x
        let cancel = if x < 0.0 { 20.0 } else { 2.0 };
        return Ok(Some(EvalResult::new(
            v,
            (1e-12 * cancel * v.abs()).max(f64::MIN_POSITIVE),
            Method::ClosedForm,
        )));
    }
    Ok(None)
}

/// M[ν](x) by power series: Σ (-x)ⁿ / (n! Γ(-νn + 1 - ν)).
fn m_series(nu: f64, x: f64, ctl: &SeriesControl) -> Result<EvalResult> {
    sum_series("wright-m series", wright_terms(-nu, 1.0 - nu, -x), ctl)
}

/// M[ν](x), x > 0, by the real integral over the steepest-descent-shaped
/// kernel:
///   M[ν](x) = (x^(ν/(1-ν)) / ((1-ν)π)) ∫₀^π K(φ) exp(-K(φ) X) dφ,
///   K(φ) = (sin((1-ν)φ)/sin φ) · (sin(νφ)/sin φ)^(ν/(1-ν)),
/// with X = x^(1/(1-ν)). K increases from c₀ at φ = 0 to +∞ at φ = π, so
/// exp(-c₀X) is factored out to keep the quadrature well-scaled, the
/// concentration width is located by bisection, and the final magnitude is
/// assembled in log space (values far below f64 normal range survive).
fn m_lk_integral(nu: f64, x: f64, qctl: &crate::config::QuadratureControl) -> Result<EvalResult> {
    if !(x > 0.0) {
        return Err(Error::domain(
            "wright-m integral",
            format!("integral representation needs x > 0, got {x}"),
        ));
    }
    let r = nu / (1.0 - nu);
    let big_x = x.powf(1.0 / (1.0 - nu));
    let c0 = m_decay_constant(nu);
    let ln_c0 = c0.ln();

    let ln_kernel = move |phi: f64| -> f64 {
        if phi == 0.0 {
            return ln_c0;
        }
        let s = phi.sin();
        ((1.0 - nu) * phi).sin().ln() - s.ln() + r * ((nu * phi).sin().ln() - s.ln())
    };
    // scaled integrand K(φ) exp(-(K(φ) - c₀) X), equal to c₀ at φ = 0
    let g = move |phi: f64| -> f64 {
        let ln_k = ln_kernel(phi);
        let e = ln_k - (ln_k.exp() - c0) * big_x;
        if e < -745.0 {
            0.0
        } else {
            e.exp()
        }
    };

    // width of the active region: (K(φ_w) - c₀) X = 1
    let excess = |phi: f64| (ln_kernel(phi).exp() - c0) * big_x - 1.0;
    let phi_w = if excess(PI) <= 0.0 {
        PI
    } else {
        let (mut lo, mut hi) = (0.0f64, PI);
        for _ in 0..90 {
            let mid = 0.5 * (lo + hi);
            if excess(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };

    let mut pts = vec![0.0];
    let mut p = phi_w;
    while p < PI {
        pts.push(p);
        p *= 2.0;
    }
    pts.push(PI);

    let integral = quad::integrate_with_breakpoints(g, &pts, qctl)?;
    if !(integral.value > 0.0) {
        return Err(Error::AccuracyLoss {
            op: "wright-m integral",
            value: 0.0,
            err_est: integral.err_est,
        });
    }
    let ln_v = integral.value.ln() + r * x.ln() - (1.0 - nu).ln() - PI.ln() - c0 * big_x;
    let v = ln_v.exp();
    let rel = integral.err_est / integral.value + 5e-14;
    Ok(EvalResult::new(
        v,
        (v * rel).max(f64::MIN_POSITIVE),
        Method::Integral,
    ))
}

/// Leading-order exponential asymptotics of M[ν](x) for large x > 0, in the
/// saddle variable Y = νx:
///   M[ν](Y/ν) ≈ Y^((ν-1/2)/(1-ν)) / sqrt(2π(1-ν)) · exp(-b Y^(1/(1-ν))),
/// b = (1-ν)/ν. Exact for ν = 1/2. The error estimate is the heuristic
/// first-correction scale 0.4/ζ of the calibration points, ζ being the
/// exponent magnitude.
fn m_asymptotic(nu: f64, x: f64) -> Result<EvalResult> {
    if !(x > 0.0) {
        return Err(Error::domain(
            "wright-m asymptotic",
            format!("asymptotic form needs x > 0, got {x}"),
        ));
    }
    let y = nu * x;
    let b = (1.0 - nu) / nu;
    let zeta = b * y.powf(1.0 / (1.0 - nu));
    let ln_a = -(2.0 * PI * (1.0 - nu)).ln() / 2.0;
    let p = (nu - 0.5) / (1.0 - nu);
    let ln_v = ln_a + p * y.ln() - zeta;
    let v = ln_v.exp();
    let rel = (0.4 / zeta).min(0.5);
    Ok(EvalResult::new(
        v,
        (v * rel).max(f64::MIN_POSITIVE),
        Method::Asymptotic,
    ))
}

/// M[ν](x) with automatic route selection: closed form where one exists,
/// power series left of the cancellation cut, the kernel integral beyond
/// it, and pure asymptotics once even the log-space integral would sit
/// below the representable range.
pub fn wright_m(nu: AuxIndex, x: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    wright_m_route(nu, x, MRoute::Auto, cfg)
}

/// M[ν](x) with the route chosen by the caller (see [`MRoute`]).
pub fn wright_m_route(nu: AuxIndex, x: f64, route: MRoute, cfg: &EvalConfig) -> Result<EvalResult> {
    if !x.is_finite() {
        return Err(Error::domain("wright-m", format!("argument {x} is not finite")));
    }
    let n = nu.get();
    match route {
        MRoute::Auto => {
            if let Some(r) = m_closed_form(n, x)? {
                return Ok(r);
            }
            if x <= m_series_cut(n) {
                return m_series(n, x, &cfg.series);
            }
            let big_x = x.powf(1.0 / (1.0 - n));
            if m_decay_constant(n) * big_x > 720.0 {
                m_asymptotic(n, x)
            } else {
                m_lk_integral(n, x, &cfg.quadrature)
            }
        }
        MRoute::ClosedForm => m_closed_form(n, x)?.ok_or_else(|| {
            Error::domain(
                "wright-m",
                format!("no closed form at nu = {n} (available for nu in {{1/3, 1/2, 2/3}} within the Airy-supported range)"),
            )
        }),
        MRoute::Series => m_series(n, x, &cfg.series),
        MRoute::Integral => m_lk_integral(n, x, &cfg.quadrature),
        MRoute::Asymptotic => m_asymptotic(n, x),
    }
}

/// F[ν](z) = W[-ν,0](-z). Inside the series-accuracy region this is
/// evaluated by its own power series — deliberately not through the
/// interrelation F[ν](z) = νz·M[ν](z), so the two stay independent routes
/// that can check each other. Beyond the cut, where the value is
/// exponentially small and the alternating series has lost every digit to
/// cancellation, the interrelation is the evaluation path (M has integral
/// and asymptotic routes there; the plain series does not).
pub fn wright_f(nu: AuxIndex, z: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    if !z.is_finite() {
        return Err(Error::domain("wright-f", format!("argument {z} is not finite")));
    }
    if z > m_series_cut(nu.get()) {
        return Ok(wright_m(nu, z, cfg)?.scaled(nu.get() * z));
    }
    sum_series("wright-f series", wright_terms(-nu.get(), 0.0, -z), &cfg.series)
}

/// The symmetric probability density ½ M[ν](|x|) on the whole real line.
pub fn m_symmetric_pdf(nu: AuxIndex, x: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    Ok(wright_m(nu, x.abs(), cfg)?.scaled(0.5))
}

/// The self-similar two-variable kernel t^(-ν) M[ν](x t^(-ν)), t > 0.
pub fn m_self_similar(nu: AuxIndex, x: f64, t: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(
            "wright-m",
            format!("self-similar kernel needs t > 0, got {t}"),
        ));
    }
    let scale = t.powf(-nu.get());
    Ok(wright_m(nu, x * scale, cfg)?.scaled(scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    fn nu(v: f64) -> AuxIndex {
        AuxIndex::new(v).unwrap()
    }

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn parameters_are_validated() {
        assert!(WrightParams::new(-1.0, 0.5).is_err());
        assert!(WrightParams::new(-2.0, 0.5).is_err());
        assert!(WrightParams::new(f64::NAN, 0.5).is_err());
        assert!(WrightParams::new(0.5, f64::INFINITY).is_err());
        assert!(WrightParams::new(-0.999, -3.0).unwrap().second_kind());
        assert!(!WrightParams::new(1.0, 1.0).unwrap().second_kind());
        assert!(AuxIndex::new(0.0).is_err());
        assert!(AuxIndex::new(1.0).is_err());
        assert!(AuxIndex::new(-0.3).is_err());
        assert!(AuxIndex::new(f64::NAN).is_err());
        assert_eq!(AuxIndex::new(0.75).unwrap().get(), 0.75);
    }

    #[test]
    fn first_kind_series_matches_references() {
        // 21-digit references; W[1,1](1) is also the Bessel value I0(2)
        let ctl = SeriesControl::default();
        let w = |l, m, z| wright_w(&WrightParams::new(l, m).unwrap(), z, &ctl).unwrap();
        assert!(rel(w(1.0, 1.0, 1.0).value, 2.27958530233606726744) < 1e-14);
        assert!(rel(w(0.5, 1.0, 1.0).value, 2.77734510050099573917) < 1e-14);
        assert!(rel(w(0.5, 2.0, -0.8).value, 0.535144975833267598837) < 1e-14);
    }

    #[test]
    fn first_kind_series_survives_power_overflow_midway() {
        // at z = 1200 the running power z^n/n! overflows f64 near n = 300
        // while terms stay significant until about n = 390: the log-space
        // fallback has to carry the sum across that stretch.
        let ctl = SeriesControl::default();
        let r = wright_w(&WrightParams::new(0.5, 1.0).unwrap(), 1200.0, &ctl).unwrap();
        assert!(rel(r.value, 1.86780567664216800176e91) < 1e-12);
    }

    #[test]
    fn second_kind_series_matches_references() {
        let ctl = SeriesControl::default();
        let w = |l, m, z| wright_w(&WrightParams::new(l, m).unwrap(), z, &ctl).unwrap();
        assert!(rel(w(-0.25, 0.25, -1.0).value, 0.212485180429549323942) < 1e-13);
        assert!(rel(w(-0.25, 1.0, -1.0).value, 0.421425328033798384331) < 1e-13);
        assert!(rel(w(-0.75, 0.75, -0.5).value, 0.779992154271564862337) < 1e-13);
        assert!(rel(w(-0.75, 1.0, -0.5).value, 0.821868655025149354281) < 1e-13);
        assert!(rel(w(-0.5, 0.5, -1.2).value, 0.393621715857143644895) < 1e-13);
        assert!(rel(w(-0.5, 0.0, -1.2).value, 0.236173029514286178197) < 1e-13);
    }

    #[test]
    fn closed_forms_match_references() {
        // ν = 1/2 (Gaussian), 1/3 (Airy), 2/3 (Airy pair) — whole real line
        let c = cfg();
        let m = |n, x| wright_m(nu(n), x, &c).unwrap();
        let g = m(0.5, -2.0);
        assert!(rel(g.value, 0.20755374871029735167) < 1e-14);
        assert_eq!(g.method, Method::ClosedForm);
        assert!(rel(m(0.5, 2.0).value, g.value) < 1e-15, "even in x");
        assert!(rel(m(1.0 / 3.0, -2.0).value, 1.02927488372093712714) < 1e-12);
        assert!(rel(m(1.0 / 3.0, 0.0).value, 0.73848811162164829673) < 1e-12);
        assert!(rel(m(2.0 / 3.0, -2.0).value, 0.0714928865036888605708) < 1e-11);
        assert!(rel(m(2.0 / 3.0, 1.0).value, 0.525852113880167368815) < 1e-12);
    }

    #[test]
    fn series_route_matches_references() {
        let c = cfg();
        let cases = [
            (0.25, 1.5, 0.251724944038526526285),
            (0.3, 2.0, 0.168400306226783124591),
            (0.6, 0.8, 0.503811397867586609863),
            (0.75, 1.2, 0.623230173390931420563),
            (0.9, 0.5, 0.280041742087365848016),
            (0.5, -2.0, 0.20755374871029735167),
            (2.0 / 3.0, -2.0, 0.0714928865036888605708),
        ];
        for &(n, x, truth) in &cases {
            let r = wright_m_route(nu(n), x, MRoute::Series, &c).unwrap();
            assert!(rel(r.value, truth) < 1e-11, "M[{n}]({x}) = {} vs {truth}", r.value);
            assert!((r.value - truth).abs() <= r.err_est.max(1e-13));
        }
    }

    #[test]
    fn series_and_closed_form_agree_on_a_sweep() {
        let c = cfg();
        for k in 0..=25 {
            let x = 0.2 * k as f64; // [0, 5]
            let s = wright_m_route(nu(0.5), x, MRoute::Series, &c).unwrap();
            let e = (-x * x / 4.0).exp() / SQRT_PI;
            assert!(
                (s.value - e).abs() <= 1e-10 * (1.0 + e),
                "x = {x}: {} vs {e}",
                s.value
            );
        }
    }

    #[test]
    fn integral_route_matches_references() {
        let c = cfg();
        let cases = [
            (0.25, 8.0, 1.87113153035302019174e-4),
            (0.6, 4.0, 2.0543626980806305472e-3),
            (0.25, 32.0, 3.27271652623339394296e-22),
            (0.75, 16.0 / 3.0, 2.78214626875767126366e-37),
            (0.9, 2.5, 1.12102648927584976068e-159),
        ];
        for &(n, x, truth) in &cases {
            let r = wright_m_route(nu(n), x, MRoute::Integral, &c).unwrap();
            assert!(rel(r.value, truth) < 1e-8, "M[{n}]({x}) = {} vs {truth}", r.value);
            assert!((r.value - truth).abs() <= r.err_est.max(1e-11 * truth.abs()));
        }
        // against the Gaussian closed form, where the kernel simplifies
        let r = wright_m_route(nu(0.5), 6.0, MRoute::Integral, &c).unwrap();
        assert!(rel(r.value, (-9.0f64).exp() / SQRT_PI) < 1e-10);
    }

    #[test]
    fn auto_dispatch_picks_sensible_routes() {
        let c = cfg();
        assert_eq!(wright_m(nu(0.25), 1.0, &c).unwrap().method, Method::Series);
        assert_eq!(wright_m(nu(0.25), 8.0, &c).unwrap().method, Method::Integral);
        assert_eq!(wright_m(nu(0.9), 2.5, &c).unwrap().method, Method::Integral);
        assert_eq!(wright_m(nu(0.5), 100.0, &c).unwrap().method, Method::ClosedForm);
        // so deep that even the log-space integral would underflow: the
        // asymptotic route reports a clean zero instead of noise
        let r = wright_m(nu(0.25), 1000.0, &c).unwrap();
        assert_eq!(r.method, Method::Asymptotic);
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn asymptotic_route_is_calibrated() {
        let c = cfg();
        // exactness at ν = 1/2
        let a = wright_m_route(nu(0.5), 6.0, MRoute::Asymptotic, &c).unwrap();
        assert!(rel(a.value, (-9.0f64).exp() / SQRT_PI) < 1e-13);
        // large-argument references: leading order lands within a percent,
        // and always inside its own error estimate
        let cases = [
            (0.25, 40.0, 1.81677341968228474611e-29),
            (0.25, 32.0, 3.27271652623339394296e-22),
            (0.75, 10.0 / 3.0, 4.42712262484897973827e-6),
            (0.75, 16.0 / 3.0, 2.78214626875767126366e-37),
        ];
        for &(n, x, truth) in &cases {
            let r = wright_m_route(nu(n), x, MRoute::Asymptotic, &c).unwrap();
            let ratio = r.value / truth;
            assert!(ratio > 0.9 && ratio < 1.1, "M[{n}]({x}) ratio {ratio}");
            assert!((r.value - truth).abs() <= r.err_est);
        }
    }

    #[test]
    fn companion_function_equals_nu_z_m() {
        let c = cfg();
        for &n in &[0.35, 0.65] {
            for &z in &[0.4, 1.1, 2.0] {
                let f = wright_f(nu(n), z, &c).unwrap();
                let m = wright_m_route(nu(n), z, MRoute::Series, &c).unwrap();
                let viaid = n * z * m.value;
                assert!(
                    (f.value - viaid).abs() <= 1e-12 * (1.0 + f.value.abs()),
                    "nu = {n}, z = {z}"
                );
            }
        }
        let f = wright_f(nu(0.5), 1.2, &cfg()).unwrap();
        assert!(rel(f.value, 0.236173029514286178197) < 1e-13);
    }

    #[test]
    fn density_wrappers_scale_correctly() {
        let c = cfg();
        let p = m_symmetric_pdf(nu(0.5), -1.3, &c).unwrap();
        let q = m_symmetric_pdf(nu(0.5), 1.3, &c).unwrap();
        assert_eq!(p.value, q.value);
        assert!(rel(p.value, 0.5 * (-1.3f64 * 1.3 / 4.0).exp() / SQRT_PI) < 1e-14);

        let s = m_self_similar(nu(0.5), 1.0, 4.0, &c).unwrap();
        assert!(rel(s.value, 0.5 * (-0.0625f64).exp() / SQRT_PI) < 1e-14);
        assert!(m_self_similar(nu(0.5), 1.0, 0.0, &c).is_err());
        assert!(m_self_similar(nu(0.5), 1.0, -2.0, &c).is_err());
    }

    #[test]
    fn hopeless_regions_are_refused_not_faked() {
        let c = cfg();
        // series at large positive x: cancellation destroys every digit
        assert!(matches!(
            wright_m_route(nu(0.5), 30.0, MRoute::Series, &c),
            Err(Error::AccuracyLoss { .. })
        ));
        // large negative arguments grow beyond f64 or cancel catastrophically
        assert!(wright_m(nu(0.45), -30.0, &c).is_err());
        assert!(wright_m(nu(0.9), -3.0, &c).is_err());
        // forced routes outside their domain
        assert!(wright_m_route(nu(0.5), -1.0, MRoute::Integral, &c).is_err());
        assert!(wright_m_route(nu(0.5), 0.0, MRoute::Asymptotic, &c).is_err());
        assert!(wright_m_route(nu(0.45), 1.0, MRoute::ClosedForm, &c).is_err());
    }
}
