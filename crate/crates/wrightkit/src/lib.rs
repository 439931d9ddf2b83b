//! Numerics for Wright functions of the second kind, the auxiliary
//! Mainardi-type densities they generate, Green functions of the
//! time-fractional diffusion-wave equation, and one-sided / two-sided
//! stable densities — with Laplace/Fourier transform machinery and
//! fractional integro-differential operators built on the same kernels.

pub mod config;
pub mod error;
pub mod eval;
pub mod figures;
pub mod fraccalc;
pub mod grid;
pub mod probmetrics;
pub mod quad;
pub mod special;
pub mod stable;
pub mod table;
pub mod tfdwe;
pub mod transforms;
pub mod verify;
pub mod wright;

pub use config::{EvalConfig, QuadratureControl};
pub use error::{Error, Result};
pub use eval::{EvalResult, Method, SeriesControl};
pub use figures::{figure_table, FIGURE_COUNT};
pub use grid::{GridScale, GridSpec};
pub use table::Table;
pub use verify::{run_all_suites, run_suite, CheckResult, SuiteReport, SUITE_IDS};
pub use fraccalc::{
    caputo_derivative, caputo_derivative_sampled, laplace_symbol, power_rule, rl_derivative,
    rl_integral, DerivativeConvention, FracOp, FracOrder,
};
pub use probmetrics::{
    composition_check, m_abs_moment, m_abs_moment_quadrature, m_char_fn, m_integer_moment_via_ml,
    m_two_var, mvar_transform, MvarAxis,
};
pub use stable::{
    extremal_via_wright, reciprocity_map, stable_cf, stable_pdf, stable_scaled, DensityValue,
    StableParams,
};
pub use tfdwe::{
    four_sisters, green_cauchy, green_laplace, green_signalling, reciprocity, similarity_point,
    solve_cauchy, solve_signalling, three_sisters, GreenSpec, Problem, SimilarityPoint,
};
pub use transforms::{
    bromwich_branchcut_invert, convolve, cosine_transform, laplace_fwd, talbot_invert,
    ConvolutionDomain, Interp, LaplaceImage, SampledFunction,
};
pub use wright::{
    m_self_similar, m_symmetric_pdf, wright_f, wright_m, wright_m_route, wright_w, AuxIndex,
    MRoute, WrightParams,
};
