//! Data tables for the library's nine standard figures: the auxiliary
//! function families on signed and symmetric arguments, the extremal
//! stable densities they generate, and the step-response families of the
//! time-fractional diffusion-wave equation.
//!
//! Each table is a labelled-curve table (`curve,abscissa,value,method,
//! err_est`), rows sorted by abscissa within each curve, stamped with the
//! configuration hash. Curve families and plot ranges are fixed here so
//! the output is reproducible; ranges are chosen so every member stays
//! inside its evaluable region at full accuracy.

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::eval::EvalResult;
use crate::grid::GridSpec;
use crate::stable::extremal_via_wright;
use crate::table::{fmt_float, Table};
use crate::tfdwe::{four_sisters, three_sisters};
use crate::wright::{wright_m, AuxIndex};

/// Figures are numbered 1 through [`FIGURE_COUNT`].
pub const FIGURE_COUNT: u32 = 9;

/// Whether an auxiliary-family figure plots M[ν](x) on the signed axis or
/// the symmetric profile M[ν](|x|).
#[derive(Clone, Copy)]
enum ArgMode {
    Signed,
    Symmetric,
}

/// The ν → 0 member of the auxiliary family, exp(-x), as a closed form.
fn aux_member(nu: f64, arg: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    if nu == 0.0 {
        Ok(EvalResult::exact((-arg).exp()))
    } else {
        wright_m(AuxIndex::new(nu)?, arg, cfg)
    }
}

fn aux_family_figure(
    id: u32,
    caption: &str,
    nus: &[f64],
    grid: &GridSpec,
    mode: ArgMode,
    cfg: &EvalConfig,
) -> Result<Table> {
    let mut t = Table::for_curves(cfg);
    t.push_comment(format!("figure: {id}"));
    t.push_comment(caption.to_string());
    for &nu in nus {
        let label = format!("nu={}", fmt_float(nu));
        match mode {
            ArgMode::Signed => {
                for x in grid.points() {
                    let r = aux_member(nu, x, cfg)?;
                    t.push_curve_eval(&label, x, &r);
                }
            }
            // Evaluate the right half once and mirror it, so the emitted
            // profile is even to the last bit.
            ArgMode::Symmetric => {
                let half =
                    GridSpec::linear(0.0, grid.max(), grid.count() / 2 + 1)?;
                let rows: Vec<(f64, EvalResult)> = half
                    .points()
                    .into_iter()
                    .map(|x| aux_member(nu, x, cfg).map(|r| (x, r)))
                    .collect::<Result<_>>()?;
                for (x, r) in rows.iter().skip(1).rev() {
                    t.push_curve_eval(&label, -x, r);
                }
                for (x, r) in &rows {
                    t.push_curve_eval(&label, *x, r);
                }
            }
        }
    }
    Ok(t)
}

fn extremal_density_figure(
    id: u32,
    caption: &str,
    alpha: f64,
    grid: &GridSpec,
    cfg: &EvalConfig,
) -> Result<Table> {
    let mut t = Table::for_curves(cfg);
    t.push_comment(format!("figure: {id}"));
    t.push_comment(caption.to_string());
    let label = format!("alpha={}", fmt_float(alpha));
    for x in grid.points() {
        let r = extremal_via_wright(alpha, x, cfg)?;
        t.push_curve_eval(&label, x, &r);
    }
    Ok(t)
}

/// Both panels of a step-response family figure: every member against t at
/// x = 1, then against x at t = 1.
fn sisters_figure(id: u32, caption: &str, nu: Option<f64>, cfg: &EvalConfig) -> Result<Table> {
    let mut t = Table::for_curves(cfg);
    t.push_comment(format!("figure: {id}"));
    t.push_comment(caption.to_string());
    let t_grid = GridSpec::linear(0.1, 5.0, 100)?.points();
    let x_grid = GridSpec::linear(0.0, 5.0, 101)?.points();

    // rows are emitted curve-major so each curve is contiguous and sorted
    let mut curves: Vec<(String, Vec<(f64, EvalResult)>)> = Vec::new();
    let add = |label: String, abscissa: f64, r: EvalResult, curves: &mut Vec<(String, Vec<(f64, EvalResult)>)>| {
        if let Some(c) = curves.iter_mut().find(|c| c.0 == label) {
            c.1.push((abscissa, r));
        } else {
            curves.push((label, vec![(abscissa, r)]));
        }
    };

    match nu {
        Some(n) => {
            let idx = AuxIndex::new(n)?;
            for &tt in &t_grid {
                for (mu, r) in four_sisters(idx, 1.0, tt, cfg)? {
                    add(format!("mu={} vs t", fmt_float(mu)), tt, r, &mut curves);
                }
            }
            for &x in &x_grid {
                for (mu, r) in four_sisters(idx, x, 1.0, cfg)? {
                    add(format!("mu={} vs x", fmt_float(mu)), x, r, &mut curves);
                }
            }
        }
        None => {
            for &tt in &t_grid {
                let (phi, psi, chi) = three_sisters(1.0, tt)?;
                add("phi vs t".to_string(), tt, phi, &mut curves);
                add("psi vs t".to_string(), tt, psi, &mut curves);
                add("chi vs t".to_string(), tt, chi, &mut curves);
            }
            for &x in &x_grid {
                let (phi, psi, chi) = three_sisters(x, 1.0)?;
                add("phi vs x".to_string(), x, phi, &mut curves);
                add("psi vs x".to_string(), x, psi, &mut curves);
                add("chi vs x".to_string(), x, chi, &mut curves);
            }
        }
    }

    for (label, rows) in curves {
        for (abscissa, r) in rows {
            t.push_curve_eval(&label, abscissa, &r);
        }
    }
    Ok(t)
}

/// The data table behind figure `id` (1 ..= 9):
///
/// 1. M[ν](x) on a symmetric interval, ν from 0 to 1/2.
/// 2. M[ν](x) on a symmetric interval, ν from 1/2 to 3/4.
/// 3. One-sided extremal stable density, index 1/2.
/// 4. Two-sided extremal stable density, index 3/2.
/// 5. Symmetric profile M[ν](|x|), ν from 0 to 1/2.
/// 6. Symmetric profile M[ν](|x|), ν from 1/2 to 7/8.
/// 7. Four-member step-response family, order 1/4, vs t and vs x.
/// 8. Three-member step-response family (order 1/2), vs t and vs x.
/// 9. Four-member step-response family, order 3/4, vs t and vs x.
pub fn figure_table(id: u32, cfg: &EvalConfig) -> Result<Table> {
    match id {
        // The window stops at -3: past there the nu = 1/4 and 3/8 members
        // genuinely cross zero (first zeros near -4.1 and -3.2), and the
        // figure shows the non-negative core of the family.
        1 => aux_family_figure(
            1,
            "auxiliary function M[nu](x), signed argument, nu in [0, 1/2]",
            &[0.0, 0.125, 0.25, 0.375, 0.5],
            &GridSpec::linear(-3.0, 3.0, 201)?,
            ArgMode::Signed,
            cfg,
        ),
        2 => aux_family_figure(
            2,
            "auxiliary function M[nu](x), signed argument, nu in [1/2, 3/4]",
            &[0.5, 0.6, 0.7, 0.75],
            &GridSpec::linear(-2.5, 2.5, 201)?,
            ArgMode::Signed,
            cfg,
        ),
        3 => extremal_density_figure(
            3,
            "one-sided extremal stable density, index 1/2",
            0.5,
            &GridSpec::linear(0.0, 5.0, 201)?,
            cfg,
        ),
        4 => extremal_density_figure(
            4,
            "two-sided extremal stable density, index 3/2",
            1.5,
            &GridSpec::linear(-5.0, 5.0, 201)?,
            cfg,
        ),
        5 => aux_family_figure(
            5,
            "symmetric profile M[nu](|x|) at unit time, nu in [0, 1/2]",
            &[0.0, 0.125, 0.25, 0.5],
            &GridSpec::linear(-5.0, 5.0, 201)?,
            ArgMode::Symmetric,
            cfg,
        ),
        6 => aux_family_figure(
            6,
            "symmetric profile M[nu](|x|) at unit time, nu in [1/2, 7/8]",
            &[0.5, 0.625, 0.75, 0.875],
            &GridSpec::linear(-5.0, 5.0, 201)?,
            ArgMode::Symmetric,
            cfg,
        ),
        7 => sisters_figure(
            7,
            "four-member step-response family, order 1/4: vs t at x=1, vs x at t=1",
            Some(0.25),
            cfg,
        ),
        8 => sisters_figure(
            8,
            "three-member step-response family: vs t at x=1, vs x at t=1",
            None,
            cfg,
        ),
        9 => sisters_figure(
            9,
            "four-member step-response family, order 3/4: vs t at x=1, vs x at t=1",
            Some(0.75),
            cfg,
        ),
        other => Err(Error::UnknownFigure(other)),
    }
}
