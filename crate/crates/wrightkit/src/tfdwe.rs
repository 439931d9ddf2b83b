//! Green functions of the time-fractional diffusion-wave equation on the
//! real line, their Laplace-domain forms, the reciprocity relation between
//! the Cauchy and Signalling kernels, convolution solvers for both
//! problems, and the two classical families of auxiliary solutions (the
//! "three sisters" of ordinary diffusion and their four-member
//! generalization).
//!
//! Everything works internally in the nondimensional variable a = x/√D so
//! the diffusivity enters only at the API boundary.

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method};
use crate::special::{erfc, SQRT_PI};
use crate::transforms::{convolve, ConvolutionDomain, LaplaceImage, SampledFunction};
use crate::wright::{wright_f, wright_m, AuxIndex};

/// Which initial/boundary-value problem a Green function solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    /// Initial data on the whole line, evolved in time.
    Cauchy,
    /// Boundary data at x = 0, propagated into x > 0.
    Signalling,
}

/// Parameters of one evolution problem: the problem kind, the half-order
/// ν ∈ (0, 1] (ν = 1/2 is ordinary diffusion, ν = 1 the wave limit), and
/// the generalized diffusivity D > 0.
#[derive(Debug, Clone, Copy)]
pub struct GreenSpec {
    problem: Problem,
    nu: f64,
    diffusivity: f64,
}

impl GreenSpec {
    pub fn new(problem: Problem, nu: f64, diffusivity: f64) -> Result<Self> {
        if !(nu > 0.0 && nu <= 1.0) {
            return Err(Error::domain(
                "green spec",
                format!("need an order nu in (0, 1], got {nu}"),
            ));
        }
        if !(diffusivity > 0.0) || !diffusivity.is_finite() {
            return Err(Error::domain(
                "green spec",
                format!("need a positive finite diffusivity, got {diffusivity}"),
            ));
        }
        Ok(GreenSpec {
            problem,
            nu,
            diffusivity,
        })
    }

    pub fn problem(&self) -> Problem {
        self.problem
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn diffusivity(&self) -> f64 {
        self.diffusivity
    }

    fn expect(&self, problem: Problem, op: &'static str) -> Result<()> {
        if self.problem != problem {
            return Err(Error::domain(
                op,
                format!("spec is for the {:?} problem", self.problem),
            ));
        }
        Ok(())
    }

    fn aux(&self) -> Result<AuxIndex> {
        if self.nu == 1.0 {
            return Err(Error::domain(
                "green function",
                "at nu = 1 the kernel degenerates to traveling impulses and has no pointwise density"
                    .to_string(),
            ));
        }
        AuxIndex::new(self.nu)
    }
}

/// A space-time point together with its similarity coordinate
/// z = x/(√D·t^ν); the Green functions depend on (x, t) only through z
/// and a power of t.
#[derive(Debug, Clone, Copy)]
pub struct SimilarityPoint {
    pub x: f64,
    pub t: f64,
    pub z: f64,
}

pub fn similarity_point(spec: &GreenSpec, x: f64, t: f64) -> Result<SimilarityPoint> {
    if !(t > 0.0) || !t.is_finite() || !x.is_finite() {
        return Err(Error::domain(
            "similarity point",
            format!("need finite x and t > 0, got x = {x}, t = {t}"),
        ));
    }
    Ok(SimilarityPoint {
        x,
        t,
        z: x / (spec.diffusivity.sqrt() * t.powf(spec.nu)),
    })
}

fn require_time(t: f64, limit_desc: &str) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(
            "green function",
            format!("need t > 0, got t = {t}; the t → 0⁺ limit is {limit_desc}, not a pointwise value"),
        ));
    }
    Ok(())
}

/// Fundamental solution of the Cauchy problem,
/// `(t^{-ν}/(2√D))·M_ν(|x|/(√D t^ν))` — even in x, unit mass in x for
/// every t.
pub fn green_cauchy(spec: &GreenSpec, x: f64, t: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    spec.expect(Problem::Cauchy, "green function")?;
    let nu = spec.aux()?;
    require_time(t, "a unit point mass at x = 0")?;
    if !x.is_finite() {
        return Err(Error::domain(
            "green function",
            format!("need a finite position, got x = {x}"),
        ));
    }
    let rd = spec.diffusivity.sqrt();
    let z = x.abs() / (rd * t.powf(nu.get()));
    Ok(wright_m(nu, z, cfg)?.scaled(t.powf(-nu.get()) / (2.0 * rd)))
}

/// Fundamental solution of the Signalling problem,
/// `(ν x t^{-ν-1}/√D)·M_ν(x/(√D t^ν))` for x ≥ 0, vanishing at x = 0.
pub fn green_signalling(spec: &GreenSpec, x: f64, t: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    spec.expect(Problem::Signalling, "green function")?;
    let nu = spec.aux()?;
    require_time(t, "an impulse that has not yet entered the medium")?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(
            "green function",
            format!("the signalling kernel lives on x >= 0, got x = {x}"),
        ));
    }
    if x == 0.0 {
        return Ok(EvalResult::exact(0.0));
    }
    let n = nu.get();
    let rd = spec.diffusivity.sqrt();
    let z = x / (rd * t.powf(n));
    Ok(wright_m(nu, z, cfg)?.scaled(n * x * t.powf(-n - 1.0) / rd))
}

/// Laplace transform (in t) of the Green functions:
/// Cauchy `s^{ν-1} e^{-(|x|/√D) s^ν} / (2√D)`, Signalling
/// `e^{-(x/√D) s^ν}`. Closed forms, valid up to and including ν = 1.
pub fn green_laplace(spec: &GreenSpec, x: f64, s: f64) -> Result<f64> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain(
            "green laplace image",
            format!("need a positive finite transform variable, got s = {s}"),
        ));
    }
    let rd = spec.diffusivity.sqrt();
    match spec.problem {
        Problem::Cauchy => {
            Ok(s.powf(spec.nu - 1.0) * (-(x.abs() / rd) * s.powf(spec.nu)).exp() / (2.0 * rd))
        }
        Problem::Signalling => {
            if x < 0.0 {
                return Err(Error::domain(
                    "green laplace image",
                    format!("the signalling image lives on x >= 0, got x = {x}"),
                ));
            }
            Ok((-(x / rd) * s.powf(spec.nu)).exp())
        }
    }
}

/// The reciprocity triple `(2νx·G_cauchy, t·G_signalling, F_ν(z))` at a
/// point x > 0, t > 0 with z the similarity coordinate; the three numbers
/// are equal in exact arithmetic.
pub fn reciprocity(
    nu: f64,
    diffusivity: f64,
    x: f64,
    t: f64,
    cfg: &EvalConfig,
) -> Result<(f64, f64, f64)> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(
            "reciprocity",
            format!("need x > 0, got x = {x}"),
        ));
    }
    let cspec = GreenSpec::new(Problem::Cauchy, nu, diffusivity)?;
    let sspec = GreenSpec::new(Problem::Signalling, nu, diffusivity)?;
    let aux = cspec.aux()?;
    let z = similarity_point(&cspec, x, t)?.z;
    let lhs = 2.0 * nu * x * green_cauchy(&cspec, x, t, cfg)?.value;
    let mid = t * green_signalling(&sspec, x, t, cfg)?.value;
    let rhs = wright_f(aux, z, cfg)?.value;
    Ok((lhs, mid, rhs))
}

/// Evolve sampled initial data under the Cauchy kernel: the space
/// convolution `u(x,t) = ∫ G_c(x-y, t) f(y) dy` over the data's support.
pub fn solve_cauchy(
    spec: &GreenSpec,
    f: &SampledFunction,
    x: f64,
    t: f64,
    cfg: &EvalConfig,
) -> Result<EvalResult> {
    spec.expect(Problem::Cauchy, "cauchy solver")?;
    spec.aux()?;
    require_time(t, "the initial data itself")?;
    let kernel = |d: f64| {
        green_cauchy(spec, d, t, cfg)
            .map(|r| r.value)
            .unwrap_or(f64::NAN)
    };
    convolve(kernel, f, x, ConvolutionDomain::Space, &cfg.quadrature)
}

/// Propagate sampled boundary data under the Signalling kernel: the causal
/// time convolution `u(x,t) = ∫₀ᵗ G_s(x, t-τ) g(τ) dτ`.
pub fn solve_signalling(
    spec: &GreenSpec,
    g: &SampledFunction,
    x: f64,
    t: f64,
    cfg: &EvalConfig,
) -> Result<EvalResult> {
    spec.expect(Problem::Signalling, "signalling solver")?;
    spec.aux()?;
    require_time(t, "the boundary value at the wall")?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(
            "signalling solver",
            format!("need an interior position x > 0, got x = {x}"),
        ));
    }
    let kernel = |u: f64| {
        green_signalling(spec, x, u, cfg)
            .map(|r| r.value)
            .unwrap_or(f64::NAN)
    };
    convolve(kernel, g, t, ConvolutionDomain::CausalTime, &cfg.quadrature)
}

/// The three classical companions of the one-dimensional heat kernel in
/// the nondimensional wall distance a = x/√D:
///
///   φ(a,t) = erfc(a/(2√t))                     (step response),
///   ψ(a,t) = (a/(2√π)) t^{-3/2} e^{-a²/(4t)}   (impulse response),
///   χ(a,t) = (1/√(πt)) e^{-a²/(4t)}            (wall-gradient kernel),
///
/// linked by ∂φ/∂t = ψ, ∂φ/∂a = -χ, ∂χ/∂a = -ψ and χ = (2t/a)ψ.
pub fn three_sisters(a: f64, t: f64) -> Result<(EvalResult, EvalResult, EvalResult)> {
    if !(a >= 0.0) || !a.is_finite() || !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(
            "three sisters",
            format!("need a >= 0 and t > 0, got a = {a}, t = {t}"),
        ));
    }
    let phi = erfc(a / (2.0 * t.sqrt()));
    // assembled in log space so extreme (a, t) underflow cleanly instead of
    // producing 0·∞
    let psi = if a == 0.0 {
        0.0
    } else {
        ((a / (2.0 * SQRT_PI)).ln() - 1.5 * t.ln() - a * a / (4.0 * t)).exp()
    };
    let chi = (-(SQRT_PI * t.sqrt()).ln() - a * a / (4.0 * t)).exp();
    let wrap = |v: f64| EvalResult::new(v, 4.0 * f64::EPSILON * v.abs(), Method::ClosedForm);
    Ok((wrap(phi), wrap(psi), wrap(chi)))
}

/// The four-member generalization for order ν: the functions
/// `t^{μ-1} W_{-ν,μ}(-a t^{-ν})` keyed by μ ∈ {0, 1-ν, ν, 1}, returned as
/// (μ, value) pairs in that order. At ν = 1/2 the middle two coincide and
/// the family reduces to the three sisters.
pub fn four_sisters(
    nu: AuxIndex,
    a: f64,
    t: f64,
    cfg: &EvalConfig,
) -> Result<[(f64, EvalResult); 4]> {
    if !(a >= 0.0) || !a.is_finite() || !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(
            "four sisters",
            format!("need a >= 0 and t > 0, got a = {a}, t = {t}"),
        ));
    }
    let n = nu.get();
    let z = a * t.powf(-n);
    // The direct series is the cheap path, but its alternating terms
    // cancel catastrophically once the similarity argument z = a·t^(-ν)
    // grows large (small t at fixed a, or large a). There each member has
    // an expression through the auxiliary function — which carries
    // integral and asymptotic routes with no such limit:
    //
    //   member 1-ν:  t^(-ν) M[ν](z)
    //   member 0:    t^(-1) ν z M[ν](z)
    //   member 1:    ∫_z^∞ M[ν](u) du            (tail of the unit mass)
    //   member ν:    t^(ν-1) ∫_z^∞ ν u M[ν](u) du (tail of the first moment)
    let member = |mu: f64, deep: &dyn Fn() -> Result<EvalResult>| -> Result<EvalResult> {
        let image = LaplaceImage::new(mu, a, n)?;
        match image.time_domain(t, &cfg.series) {
            Ok(r) => Ok(r),
            Err(Error::AccuracyLoss { .. }) => deep(),
            Err(e) => Err(e),
        }
    };
    let m_tail = |weight_nu_u: bool| -> Result<EvalResult> {
        let r = crate::quad::integrate_to_inf(
            |u| {
                if u <= 0.0 {
                    return 0.0;
                }
                let m = wright_m(nu, u, cfg).map(|v| v.value).unwrap_or(f64::NAN);
                if weight_nu_u {
                    n * u * m
                } else {
                    m
                }
            },
            z,
            &cfg.quadrature,
        )?;
        Ok(EvalResult::new(r.value, r.err_est, Method::Integral))
    };
    let zero = member(0.0, &|| Ok(wright_f(nu, z, cfg)?.scaled(1.0 / t)))?;
    let one_minus = member(1.0 - n, &|| Ok(wright_m(nu, z, cfg)?.scaled(t.powf(-n))))?;
    let mid = member(n, &|| Ok(m_tail(true)?.scaled(t.powf(n - 1.0))))?;
    let one = member(1.0, &|| m_tail(false))?;
    Ok([(0.0, zero), (1.0 - n, one_minus), (n, mid), (1.0, one)])
}
