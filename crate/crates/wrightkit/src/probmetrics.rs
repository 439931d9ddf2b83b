//! Probabilistic functionals of the auxiliary bell family: moments, the
//! characteristic function, the two-variable spreading density and its
//! transforms along each axis, and the order-composition law.
//!
//! The bell member of index `nu` is a probability density on the positive
//! half-line; its two-variable extension `t^-nu M_nu(x t^-nu)` spreads
//! self-similarly in a time-like coordinate. Every closed form here is
//! paired (in the tests and the verification suites) with a quadrature
//! companion that recomputes it from the density directly.

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::eval::EvalResult;
use crate::quad::{integrate_to_inf, power_weighted_integral};
use crate::special::{gamma, mittag_leffler, rgamma};
use crate::wright::{wright_m, AuxIndex};

/// Absolute moment of order `delta > -1` of the index-`nu` bell density:
/// `Gamma(delta+1) / Gamma(nu*delta+1)`, exact.
///
/// Unlike most of the family, `nu = 0` is admissible here: the density
/// degenerates to the unit exponential and the formula reads
/// `Gamma(delta+1)`, consistently.
pub fn m_abs_moment(nu: f64, delta: f64) -> Result<f64> {
    if !nu.is_finite() || !(0.0..1.0).contains(&nu) {
        return Err(Error::domain(
            "bell density moment",
            format!("order index must lie in [0, 1), got {nu}"),
        ));
    }
    if !delta.is_finite() || delta <= -1.0 {
        return Err(Error::domain(
            "bell density moment",
            format!("moment order must exceed -1, got {delta}"),
        ));
    }
    Ok(gamma(delta + 1.0)? / gamma(nu * delta + 1.0)?)
}

/// The same moment recomputed by numerical quadrature of
/// `x^delta * M_nu(x)` over the half-line. Orders in `(-1, 0)` put an
/// integrable singularity at the origin, handled by the exact-weight
/// product rule on the first unit interval.
pub fn m_abs_moment_quadrature(nu: AuxIndex, delta: f64, cfg: &EvalConfig) -> Result<f64> {
    if !delta.is_finite() || delta <= -1.0 {
        return Err(Error::domain(
            "bell density moment",
            format!("moment order must exceed -1, got {delta}"),
        ));
    }
    let density = |x: f64| match wright_m(nu, x, cfg) {
        Ok(r) => r.value,
        Err(_) => f64::NAN,
    };
    if delta < 0.0 {
        let head = power_weighted_integral(density, delta, 1.0, &cfg.quadrature)?;
        let tail = integrate_to_inf(|x| x.powf(delta) * density(x), 1.0, &cfg.quadrature)?;
        Ok(head.value + tail.value)
    } else {
        let r = integrate_to_inf(|x| x.powf(delta) * density(x), 0.0, &cfg.quadrature)?;
        Ok(r.value)
    }
}

/// Integer moment of the bell density through the series coefficients of
/// the relaxation function: the n-th derivative of `E_nu(-s)` at `s = 0`
/// is `(-1)^n n! rgamma(nu n + 1)`, so the moment is `n! rgamma(nu n + 1)`.
/// An independent route from the gamma-quotient formula.
pub fn m_integer_moment_via_ml(nu: AuxIndex, n: u32) -> f64 {
    let mut factorial = 1.0f64;
    for k in 1..=n {
        factorial *= k as f64;
    }
    factorial * rgamma(nu.get() * n as f64 + 1.0)
}

/// Characteristic function of the symmetrized bell density:
/// `E_{2 nu}(-kappa^2)`. Real, even, equal to 1 at the origin, and of
/// modulus at most 1 (though it may dip negative for `nu > 1/2`, like any
/// oscillating relaxation pattern).
pub fn m_char_fn(nu: AuxIndex, kappa: f64, cfg: &EvalConfig) -> Result<f64> {
    if !kappa.is_finite() {
        return Err(Error::domain(
            "bell characteristic function",
            format!("frequency {kappa} is not finite"),
        ));
    }
    Ok(mittag_leffler(
        2.0 * nu.get(),
        1.0,
        -(kappa * kappa),
        &cfg.series,
        &cfg.quadrature,
    )?
    .value)
}

/// The two-variable spreading density `t^-nu M_nu(x t^-nu)` on the
/// positive quadrant: for each fixed `t > 0` a probability density in
/// `x >= 0`.
pub fn m_two_var(nu: AuxIndex, x: f64, t: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain(
            "two-variable bell density",
            format!("space coordinate must be finite and non-negative, got {x}"),
        ));
    }
    if !t.is_finite() || !(t > 0.0) {
        return Err(Error::domain(
            "two-variable bell density",
            format!("time-like coordinate must be positive and finite, got {t}"),
        ));
    }
    let w = t.powf(-nu.get());
    Ok(wright_m(nu, x * w, cfg)?.scaled(w))
}

/// Axis along which [`mvar_transform`] integrates the two-variable
/// density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MvarAxis {
    /// Laplace transform in the time-like coordinate at fixed `x > 0`.
    T,
    /// Laplace transform in the space coordinate at fixed `t > 0`.
    X,
    /// Fourier transform in space (even extension) at fixed `t > 0`.
    Fourier,
}

/// Closed-form integral transform of the two-variable density along one
/// axis: `fixed` is the coordinate held constant, `var` the transform
/// variable.
///
/// - `T`: `s^(nu-1) exp(-x s^nu)` for `s > 0`;
/// - `X`: `E_nu(-s t^nu)` for `s >= 0`;
/// - `Fourier`: `2 E_{2 nu}(-kappa^2 t^nu)`, the full-line transform of
///   the even extension.
pub fn mvar_transform(
    axis: MvarAxis,
    nu: AuxIndex,
    fixed: f64,
    var: f64,
    cfg: &EvalConfig,
) -> Result<f64> {
    let n = nu.get();
    match axis {
        MvarAxis::T => {
            let (x, s) = (fixed, var);
            if !x.is_finite() || !(x > 0.0) {
                return Err(Error::domain(
                    "two-variable transform",
                    format!("time-axis transform holds x > 0 fixed, got {x}"),
                ));
            }
            if !s.is_finite() || !(s > 0.0) {
                return Err(Error::domain(
                    "two-variable transform",
                    format!("transform variable must be positive, got {s}"),
                ));
            }
            Ok(((n - 1.0) * s.ln() - x * s.powf(n)).exp())
        }
        MvarAxis::X => {
            let (t, s) = (fixed, var);
            if !t.is_finite() || !(t > 0.0) {
                return Err(Error::domain(
                    "two-variable transform",
                    format!("space-axis transform holds t > 0 fixed, got {t}"),
                ));
            }
            if !s.is_finite() || s < 0.0 {
                return Err(Error::domain(
                    "two-variable transform",
                    format!("transform variable must be non-negative, got {s}"),
                ));
            }
            Ok(mittag_leffler(n, 1.0, -s * t.powf(n), &cfg.series, &cfg.quadrature)?.value)
        }
        MvarAxis::Fourier => {
            let (t, kappa) = (fixed, var);
            if !t.is_finite() || !(t > 0.0) {
                return Err(Error::domain(
                    "two-variable transform",
                    format!("space-axis transform holds t > 0 fixed, got {t}"),
                ));
            }
            if !kappa.is_finite() {
                return Err(Error::domain(
                    "two-variable transform",
                    format!("frequency {kappa} is not finite"),
                ));
            }
            let arg = -kappa * kappa * t.powf(n);
            Ok(2.0 * mittag_leffler(2.0 * n, 1.0, arg, &cfg.series, &cfg.quadrature)?.value)
        }
    }
}

/// Order-composition law: the index-`lambda*mu_c` spreading density at
/// `(x, t)` equals the `tau`-integral of the index-`lambda` density at
/// `(x, tau)` against the index-`mu_c` density at `(tau, t)`.
///
/// Returns `(lhs, rhs)`: the direct evaluation and the quadrature of the
/// composition integral. At `mu_c = 1` the inner kernel sifts exactly and
/// the integral collapses to the direct value.
pub fn composition_check(
    lambda: f64,
    mu_c: f64,
    x: f64,
    t: f64,
    cfg: &EvalConfig,
) -> Result<(f64, f64)> {
    if !lambda.is_finite() || !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::domain(
            "order composition",
            format!("outer order must lie in (0, 1), got {lambda}"),
        ));
    }
    if !mu_c.is_finite() || !(mu_c > 0.0 && mu_c <= 1.0) {
        return Err(Error::domain(
            "order composition",
            format!("inner order must lie in (0, 1], got {mu_c}"),
        ));
    }
    if !x.is_finite() || !(x > 0.0) || !t.is_finite() || !(t > 0.0) {
        return Err(Error::domain(
            "order composition",
            format!("need positive finite coordinates, got x = {x}, t = {t}"),
        ));
    }
    let composed = AuxIndex::new(lambda * mu_c)?;
    let lhs = m_two_var(composed, x, t, cfg)?.value;
    if mu_c == 1.0 {
        // The unit-order kernel is a point mass at tau = t; the integral
        // sifts to the outer density exactly.
        let rhs = m_two_var(AuxIndex::new(lambda)?, x, t, cfg)?.value;
        return Ok((lhs, rhs));
    }
    let outer = AuxIndex::new(lambda)?;
    let inner = AuxIndex::new(mu_c)?;
    let rhs = integrate_to_inf(
        |tau| {
            if tau <= 0.0 {
                return 0.0;
            }
            let a = match m_two_var(outer, x, tau, cfg) {
                Ok(r) => r.value,
                Err(_) => return f64::NAN,
            };
            let b = match m_two_var(inner, tau, t, cfg) {
                Ok(r) => r.value,
                Err(_) => return f64::NAN,
            };
            a * b
        },
        0.0,
        &cfg.quadrature,
    )?
    .value;
    Ok((lhs, rhs))
}
