//! Runtime configuration: series and quadrature controls, file loading, and
//! the config hash stamped into every output table.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::SeriesControl;

/// Tunables for adaptive quadrature and contour inversion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadratureControl {
    /// Absolute error target for one integral.
    pub abs_tol: f64,
    /// Relative error target for one integral.
    pub rel_tol: f64,
    /// Hard cap on adaptive interval splits (and on panel counts in the
    /// graded-mesh product rules).
    pub max_subdivisions: usize,
    /// Exponential tails are truncated where the damping factor reaches
    /// `exp(-tail_cutoff)`; the neglected mass goes into the error estimate.
    pub tail_cutoff: f64,
}

impl Default for QuadratureControl {
    fn default() -> Self {
        QuadratureControl {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_subdivisions: 512,
            tail_cutoff: 41.4,
        }
    }
}

/// Complete evaluation configuration. Loaded from a TOML file named by the
/// `WRIGHTKIT_CONFIG` environment variable; fields not present in the file
/// keep their defaults.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct EvalConfig {
    pub series: SeriesControl,
    pub quadrature: QuadratureControl,
}

/// Name of the environment variable holding the path of a TOML override file.
pub const CONFIG_ENV_VAR: &str = "WRIGHTKIT_CONFIG";

impl EvalConfig {
    /// Parse a TOML document. Unknown keys are rejected so that typos in an
    /// override file fail loudly instead of silently keeping a default.
    pub fn from_toml(text: &str) -> Result<Self> {
        let de = toml::de::Deserializer::new(text);
        let mut unused = Vec::new();
        let cfg: EvalConfig = serde_ignored::deserialize(de, |path| {
            unused.push(path.to_string());
        })
        .map_err(|e| Error::Config(e.to_string()))?;
        if !unused.is_empty() {
            return Err(Error::Config(format!(
                "unknown configuration key(s): {}",
                unused.join(", ")
            )));
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Load from a TOML file.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::Config(format!("cannot read {}: {e}", path.display()))
        })?;
        Self::from_toml(&text)
    }

    /// Defaults, overridden by the file named in `WRIGHTKIT_CONFIG` when that
    /// variable is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CONFIG_ENV_VAR) {
            Some(path) => Self::from_file(Path::new(&path)),
            None => Ok(Self::default()),
        }
    }

    fn validate(&self) -> Result<()> {
        let check = |name: &str, v: f64, lo: f64, hi: f64| -> Result<()> {
            if !(v > lo && v < hi) {
                return Err(Error::Config(format!(
                    "{name} = {v} out of range ({lo:e}, {hi:e})"
                )));
            }
            Ok(())
        };
        check("series.rel_tol", self.series.rel_tol, 1e-16, 1.0)?;
        check("quadrature.abs_tol", self.quadrature.abs_tol, 0.0, 1.0)?;
        check("quadrature.rel_tol", self.quadrature.rel_tol, 1e-16, 1.0)?;
        check("quadrature.tail_cutoff", self.quadrature.tail_cutoff, 1.0, 700.0)?;
        if self.series.max_terms == 0 || self.series.consecutive_small == 0 {
            return Err(Error::Config(
                "series.max_terms and series.consecutive_small must be positive".into(),
            ));
        }
        if self.quadrature.max_subdivisions == 0 {
            return Err(Error::Config("quadrature.max_subdivisions must be positive".into()));
        }
        Ok(())
    }

    /// Canonical one-line rendering of every tunable; input to [`Self::hash`].
    pub fn canonical_string(&self) -> String {
        format!(
            "series.rel_tol={:e};series.max_terms={};series.consecutive_small={};\
             quadrature.abs_tol={:e};quadrature.rel_tol={:e};\
             quadrature.max_subdivisions={};quadrature.tail_cutoff={:e}",
            self.series.rel_tol,
            self.series.max_terms,
            self.series.consecutive_small,
            self.quadrature.abs_tol,
            self.quadrature.rel_tol,
            self.quadrature.max_subdivisions,
            self.quadrature.tail_cutoff,
        )
    }

    /// FNV-1a hash of the canonical string, printed in table metadata so a
    /// table can be traced back to the exact tolerances that produced it.
    pub fn hash(&self) -> u64 {
        fnv1a(self.canonical_string().as_bytes())
    }
}

/// 64-bit FNV-1a.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h = OFFSET;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(PRIME);
    }
    h
}
