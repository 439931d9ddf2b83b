//! Error type shared by every numerical operation in the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the numerical operations.
///
/// Partial results are carried inside [`Error::AccuracyLoss`] so callers can
/// decide whether a degraded value is still useful (the function dispatchers
/// use this to fall back to an alternative evaluation route).
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The gamma function has a pole at non-positive integer arguments.
    #[error("gamma pole at non-positive integer argument {arg}")]
    GammaPole { arg: f64 },

    /// A value exceeded the finite double-precision range.
    #[error("overflow in {what} at argument {arg:e}")]
    Overflow { what: &'static str, arg: f64 },

    /// Arguments outside the mathematical domain of the operation.
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// A series or summation lost too many digits to cancellation (or failed
    /// to converge within the term budget). `value` is the best partial
    /// result; `err_est` bounds its absolute error.
    #[error("accuracy loss in {op}: estimated absolute error {err_est:.3e} exceeds the requested tolerance (partial value {value:.6e})")]
    AccuracyLoss {
        op: &'static str,
        value: f64,
        err_est: f64,
    },

    /// Adaptive quadrature exhausted its subdivision budget before reaching
    /// the requested tolerance.
    #[error("quadrature failed to converge: error estimate {err_est:.3e} after {subdivisions} subdivisions")]
    QuadratureNonConvergence { err_est: f64, subdivisions: usize },

    /// Contour inversion did not stabilise under node doubling.
    #[error("inverse transform unstable at t={t}: node-doubling drift {drift:.3e}")]
    InverseTransformUnstable { t: f64, drift: f64 },

    /// Stable-density index pair outside the admissible diamond.
    #[error("parameters (alpha={alpha}, theta={theta}) violate the admissible bound |theta| <= min(alpha, 2-alpha)")]
    OutsideAdmissibleRegion { alpha: f64, theta: f64 },

    /// An operation requiring initial derivative data received the wrong
    /// number of values.
    #[error("missing initial data: expected {expected} derivative values at the origin, got {got}")]
    InitData { expected: usize, got: usize },

    /// A sampled function failed validation.
    #[error("invalid sample set: {0}")]
    InvalidSamples(String),

    /// A grid specification could not be parsed or is degenerate.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Configuration file problems.
    #[error("config error: {0}")]
    Config(String),

    /// A figure id outside the published set.
    #[error("unknown figure id {0}")]
    UnknownFigure(u32),
}

impl Error {
    /// Domain-error convenience constructor.
    pub fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain {
            op,
            msg: msg.into(),
        }
    }
}
