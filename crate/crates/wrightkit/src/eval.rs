//! Evaluation results, controls, and the guarded series engine used by all
//! power-series evaluations in the crate.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// How a value was produced. Carried alongside every evaluation so callers
/// (and the CLI tables) can see which branch of a dispatcher fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    /// Power-series summation.
    Series,
    /// Deterministic quadrature of an integral representation.
    Integral,
    /// Large-argument asymptotic formula.
    Asymptotic,
    /// Exact closed form (elementary or special-function identity).
    ClosedForm,
    /// Reflection / interrelation from another evaluation.
    Reflection,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Series => "series",
            Method::Integral => "integral",
            Method::Asymptotic => "asymptotic",
            Method::ClosedForm => "closed-form",
            Method::Reflection => "reflection",
        };
        f.write_str(s)
    }
}

/// A numerical value together with an honest absolute error estimate and the
/// method that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    /// Estimated absolute error (always >= 0). Heuristic but conservative:
    /// derived from truncation bounds, rounding models, or node-doubling.
    pub err_est: f64,
    pub method: Method,
}

impl EvalResult {
    pub fn new(value: f64, err_est: f64, method: Method) -> Self {
        EvalResult {
            value,
            err_est: err_est.abs(),
            method,
        }
    }

    /// Exact closed form: error at the rounding level of the value itself.
    pub fn exact(value: f64) -> Self {
        EvalResult {
            value,
            err_est: 2.0 * f64::EPSILON * value.abs(),
            method: Method::ClosedForm,
        }
    }

    /// Rescale the value by a factor computed exactly (error scales along).
    pub fn scaled(self, factor: f64) -> Self {
        EvalResult {
            value: self.value * factor,
            err_est: self.err_est * factor.abs() + f64::EPSILON * (self.value * factor).abs(),
            method: self.method,
        }
    }

    /// Replace the method tag (used when an identity reroutes a value).
    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }
}

/// Controls for guarded series summation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SeriesControl {
    /// Relative tolerance: both the convergence target and the cancellation
    /// guard threshold.
    pub rel_tol: f64,
    /// Hard cap on the number of terms.
    pub max_terms: usize,
    /// Number of consecutive sub-tolerance terms required before the sum is
    /// declared converged (single small terms occur mid-series when a
    /// reciprocal-gamma factor hits one of its zeros).
    pub consecutive_small: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            rel_tol: 1e-14,
            max_terms: 1000,
            consecutive_small: 3,
        }
    }
}

impl SeriesControl {
    /// Same budget, different relative tolerance.
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }
}

/// Sum a series of terms under the control's convergence and cancellation
/// rules.
///
/// Stops after `consecutive_small` successive terms below `rel_tol * |sum|`.
/// Aborts with [`Error::AccuracyLoss`] when
///  * a term is non-finite (the partial sums have left f64 range),
///  * the term budget is exhausted, or
///  * cancellation was catastrophic — the rounding-noise floor
///    `max|term| * eps * count` ate all but two digits of the sum.
///
/// Milder cancellation is not an error: the returned absolute error
/// estimate (rounding floor plus the last neglected term) reports it
/// honestly, and callers that need more digits than survived can see so.
pub fn sum_series(
    op: &'static str,
    terms: impl Iterator<Item = f64>,
    ctl: &SeriesControl,
) -> Result<EvalResult> {
    let mut sum = 0.0f64;
    let mut max_term = 0.0f64;
    let mut small_run = 0usize;
    let mut last_abs = 0.0f64;
    let mut count = 0usize;
    let mut converged = false;

    for t in terms.take(ctl.max_terms) {
        if !t.is_finite() {
            return Err(Error::AccuracyLoss {
                op,
                value: sum,
                err_est: f64::INFINITY,
            });
        }
        sum += t;
        count += 1;
        let a = t.abs();
        last_abs = a;
        if a > max_term {
            max_term = a;
        }
        if a <= ctl.rel_tol * sum.abs() && count > 1 {
            small_run += 1;
            if small_run >= ctl.consecutive_small {
                converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }

    // Rounding-noise floor of the summation: worst-case linear accumulation
    // (the RMS model underestimates correlated rounding runs).
    let noise = max_term * f64::EPSILON * (count as f64).max(1.0);
    let trunc = last_abs;
    let err_est = noise + trunc;

    if !converged {
        return Err(Error::AccuracyLoss {
            op,
            value: sum,
            err_est: err_est.max(last_abs),
        });
    }
    if noise > 1e-2 * sum.abs() {
        return Err(Error::AccuracyLoss {
            op,
            value: sum,
            err_est,
        });
    }

    Ok(EvalResult::new(sum, err_est, Method::Series))
}
