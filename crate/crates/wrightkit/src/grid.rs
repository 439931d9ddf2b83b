//! Evaluation grids: validated 1-D point lattices, linear or logarithmic,
//! parsed from the `min:max:count` syntax used on the command line.

use crate::error::{Error, Result};

/// Spacing rule for a [`GridSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridScale {
    Linear,
    Logarithmic,
}

/// A validated 1-D evaluation grid: `count` points from `min` to `max`
/// inclusive, spaced linearly or logarithmically. Both endpoints are always
/// grid points, and points come out in strictly increasing order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    min: f64,
    max: f64,
    count: usize,
    scale: GridScale,
}

impl GridSpec {
    pub fn new(min: f64, max: f64, count: usize, scale: GridScale) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "grid endpoints must be finite, got {min} and {max}"
            )));
        }
        if !(min < max) {
            return Err(Error::InvalidGrid(format!(
                "grid needs min < max, got {min} and {max}"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidGrid(format!(
                "grid needs at least 2 points, got {count}"
            )));
        }
        if scale == GridScale::Logarithmic && !(min > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "logarithmic grid needs min > 0, got {min}"
            )));
        }
        Ok(GridSpec {
            min,
            max,
            count,
            scale,
        })
    }

    pub fn linear(min: f64, max: f64, count: usize) -> Result<Self> {
        Self::new(min, max, count, GridScale::Linear)
    }

    pub fn logarithmic(min: f64, max: f64, count: usize) -> Result<Self> {
        Self::new(min, max, count, GridScale::Logarithmic)
    }

    /// Parse the `min:max:count` syntax, e.g. `-5:5:101`.
    pub fn parse(text: &str, scale: GridScale) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidGrid(format!(
                "grid must be min:max:count, got {text:?}"
            )));
        }
        let min: f64 = parts[0]
            .trim()
            .parse()
            .map_err(|_| Error::InvalidGrid(format!("bad grid minimum {:?}", parts[0])))?;
        let max: f64 = parts[1]
            .trim()
            .parse()
            .map_err(|_| Error::InvalidGrid(format!("bad grid maximum {:?}", parts[1])))?;
        let count: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| Error::InvalidGrid(format!("bad grid count {:?}", parts[2])))?;
        Self::new(min, max, count, scale)
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn scale(&self) -> GridScale {
        self.scale
    }

    /// The grid points, strictly increasing, endpoints exact.
    pub fn points(&self) -> Vec<f64> {
        let n = self.count;
        let (lo, hi) = match self.scale {
            GridScale::Linear => (self.min, self.max),
            GridScale::Logarithmic => (self.min.ln(), self.max.ln()),
        };
        (0..n)
            .map(|i| {
                if i == 0 {
                    self.min
                } else if i == n - 1 {
                    self.max
                } else {
                    let u = lo + (hi - lo) * (i as f64) / ((n - 1) as f64);
                    match self.scale {
                        GridScale::Linear => u,
                        GridScale::Logarithmic => u.exp(),
                    }
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_grids_hit_endpoints_and_spacing() {
        let g = GridSpec::linear(-5.0, 5.0, 101).unwrap();
        let pts = g.points();
        assert_eq!(pts.len(), 101);
        assert_eq!(pts[0], -5.0);
        assert_eq!(pts[100], 5.0);
        assert!((pts[50] - 0.0).abs() < 1e-14);
        let h = pts[1] - pts[0];
        assert!(pts.windows(2).all(|w| ((w[1] - w[0]) - h).abs() < 1e-12));
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn logarithmic_grids_have_constant_ratio() {
        let g = GridSpec::logarithmic(0.1, 10.0, 5).unwrap();
        let pts = g.points();
        assert_eq!(pts[0], 0.1);
        assert_eq!(pts[4], 10.0);
        assert!((pts[2] - 1.0).abs() < 1e-14);
        let r = pts[1] / pts[0];
        assert!(pts
            .windows(2)
            .all(|w| (w[1] / w[0] - r).abs() < 1e-12 * r));
    }

    #[test]
    fn parse_accepts_the_cli_syntax() {
        let g = GridSpec::parse("-5:5:201", GridScale::Linear).unwrap();
        assert_eq!((g.min(), g.max(), g.count()), (-5.0, 5.0, 201));
        let g = GridSpec::parse("0.1 : 5 : 100", GridScale::Logarithmic).unwrap();
        assert_eq!(g.count(), 100);
    }

    #[test]
    fn invalid_grids_are_rejected() {
        for (min, max, count, scale) in [
            (5.0, -5.0, 10, GridScale::Linear),
            (1.0, 1.0, 10, GridScale::Linear),
            (0.0, 1.0, 1, GridScale::Linear),
            (-1.0, 1.0, 10, GridScale::Logarithmic),
            (0.0, 1.0, 10, GridScale::Logarithmic),
            (f64::NEG_INFINITY, 1.0, 10, GridScale::Linear),
            (0.0, f64::NAN, 10, GridScale::Linear),
        ] {
            assert!(
                GridSpec::new(min, max, count, scale).is_err(),
                "({min}, {max}, {count}) should be rejected"
            );
        }
        assert!(GridSpec::parse("1:2", GridScale::Linear).is_err());
        assert!(GridSpec::parse("a:2:5", GridScale::Linear).is_err());
        assert!(GridSpec::parse("1:2:many", GridScale::Linear).is_err());
    }
}
