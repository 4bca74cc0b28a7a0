//! Run configuration shared by the command front end and the claim registry.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::DEFAULT_BUDGET;
use crate::curve::{Curve, CurveError, CurveSpec, Place};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("bad range {0:?}: expected a..b (inclusive) or a single integer")]
    Range(String),
    #[error("empty range {0}..{1}")]
    EmptyRange(i64, i64),
    #[error("unknown {kind} {value:?}")]
    Unknown { kind: &'static str, value: String },
    #[error("hermitian mode needs m = q + 1 = {expected}, got {got}")]
    HermitianM { expected: u64, got: u32 },
    #[error("m is required")]
    MissingM,
    #[error("config file: {0}")]
    File(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// Which evaluation set a code is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// GF(q^2)-rational affine places not rational over GF(q).
    Paper,
    /// All GF(q^2)-rational affine places.
    FullAffine,
    /// All affine places of `Y^q + Y = X^{q+1}`.
    Hermitian,
}

impl Mode {
    pub fn evaluation_set(self, curve: &Curve) -> Vec<Place> {
        match self {
            Mode::Paper => curve.point_sets().d_set,
            Mode::FullAffine | Mode::Hermitian => curve.full_affine_points(),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Paper => "paper",
            Mode::FullAffine => "full-affine",
            Mode::Hermitian => "hermitian",
        })
    }
}

impl FromStr for Mode {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Mode::Paper),
            "full-affine" => Ok(Mode::FullAffine),
            "hermitian" => Ok(Mode::Hermitian),
            _ => Err(ConfigError::Unknown {
                kind: "mode",
                value: s.into(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(ConfigError::Unknown {
                kind: "format",
                value: s.into(),
            }),
        }
    }
}

/// Parses `a..b` (both ends included), `a..=b`, or a single integer.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, ConfigError> {
    let bad = || ConfigError::Range(s.to_string());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
        }
        None => {
            let v: i64 = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(ConfigError::EmptyRange(lo, hi));
    }
    Ok(lo..=hi)
}

/// Everything a command needs; all computation is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub p: u32,
    pub n: u32,
    pub m: u32,
    pub mode: Mode,
    pub a_coeffs: Option<Vec<u32>>,
    pub b_coeffs: Option<Vec<u32>>,
    pub s_range: Option<RangeInclusive<i64>>,
    pub r_range: Option<RangeInclusive<i64>>,
    pub budget: u64,
    pub format: Format,
}

/// Key-value config file (TOML syntax), e.g.
///
/// ```toml
/// p = 3
/// n = 1
/// m = 2
/// mode = "paper"
/// s = "0..6"
/// ```
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub p: Option<u32>,
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub mode: Option<String>,
    pub a_coeffs: Option<Vec<u32>>,
    pub b_coeffs: Option<Vec<u32>>,
    pub s: Option<String>,
    pub r: Option<String>,
    pub budget: Option<u64>,
    pub format: Option<String>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        toml::from_str(text).map_err(|e| ConfigError::File(e.to_string()))
    }
}

impl RunConfig {
    /// Builds a config; `m` defaults to `q - 1`, or `q + 1` in hermitian mode.
    pub fn new(p: u32, n: u32, m: Option<u32>, mode: Mode) -> Result<Self, ConfigError> {
        let q = (p as u64).checked_pow(n).ok_or(ConfigError::MissingM)?;
        let m = match (mode, m) {
            (Mode::Hermitian, Some(m)) if m as u64 != q + 1 => {
                return Err(ConfigError::HermitianM { expected: q + 1, got: m })
            }
            (Mode::Hermitian, _) => q as u32 + 1,
            (_, Some(m)) => m,
            (_, None) => (q as u32).checked_sub(1).ok_or(ConfigError::MissingM)?,
        };
        Ok(Self {
            p,
            n,
            m,
            mode,
            a_coeffs: None,
            b_coeffs: None,
            s_range: None,
            r_range: None,
            budget: DEFAULT_BUDGET,
            format: Format::Table,
        })
    }

    pub fn from_file(file: &ConfigFile) -> Result<Self, ConfigError> {
        let mode = file.mode.as_deref().map(Mode::from_str).transpose()?.unwrap_or(Mode::Paper);
        let mut cfg = Self::new(
            file.p.ok_or_else(|| ConfigError::File("missing p".into()))?,
            file.n.unwrap_or(1),
            file.m,
            mode,
        )?;
        cfg.a_coeffs = file.a_coeffs.clone();
        cfg.b_coeffs = file.b_coeffs.clone();
        cfg.s_range = file.s.as_deref().map(parse_range).transpose()?;
        cfg.r_range = file.r.as_deref().map(parse_range).transpose()?;
        if let Some(b) = file.budget {
            cfg.budget = b;
        }
        if let Some(f) = &file.format {
            cfg.format = f.parse()?;
        }
        Ok(cfg)
    }

    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.n)
    }

    pub fn curve_spec(&self) -> Result<CurveSpec, ConfigError> {
        let mut spec = CurveSpec::new(self.p, self.n, self.m)?;
        if self.a_coeffs.is_some() || self.b_coeffs.is_some() {
            spec = CurveSpec::with_coefficients(
                self.p,
                self.n,
                self.m,
                self.a_coeffs.clone().unwrap_or(spec.a_coeffs),
                self.b_coeffs.clone().unwrap_or(spec.b_coeffs),
            )?;
        }
        Ok(spec)
    }

    pub fn curve(&self) -> Result<Curve, ConfigError> {
        Ok(Curve::new(self.curve_spec()?)?)
    }

    /// Pole bounds `s` for code tables; defaults to `-1 ..= q^2 + q - 3`.
    pub fn s_values(&self) -> RangeInclusive<i64> {
        self.s_range.clone().unwrap_or_else(|| self.default_range())
    }

    /// Values of `r` for the claim registry; same default as [`Self::s_values`].
    pub fn r_values(&self) -> RangeInclusive<i64> {
        self.r_range.clone().unwrap_or_else(|| self.default_range())
    }

    fn default_range(&self) -> RangeInclusive<i64> {
        let q = self.q() as i64;
        -1..=(q * q + q - 3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..6").unwrap(), 0..=6);
        assert_eq!(parse_range("-1..=3").unwrap(), -1..=3);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(matches!(parse_range("5..2"), Err(ConfigError::EmptyRange(5, 2))));
        assert!(matches!(parse_range("a..b"), Err(ConfigError::Range(_))));
    }

    #[test]
    fn hermitian_mode_forces_m() {
        assert_eq!(RunConfig::new(2, 1, None, Mode::Hermitian).unwrap().m, 3);
        assert!(matches!(
            RunConfig::new(2, 1, Some(4), Mode::Hermitian),
            Err(ConfigError::HermitianM { expected: 3, got: 4 })
        ));
        assert_eq!(RunConfig::new(3, 1, None, Mode::Paper).unwrap().m, 2);
    }

    #[test]
    fn config_file() {
        let text = "p = 3\nn = 1\nm = 2\nmode = \"full-affine\"\ns = \"0..4\"\nbudget = 1000\n";
        let cfg = RunConfig::from_file(&ConfigFile::parse(text).unwrap()).unwrap();
        assert_eq!(cfg.mode, Mode::FullAffine);
        assert_eq!(cfg.s_values(), 0..=4);
        assert_eq!(cfg.budget, 1000);
        assert!(ConfigFile::parse("p = 3\nbogus = 1\n").is_err());
        let coeffs = "p = 5\nm = 4\na_coeffs = [2, 1]\nb_coeffs = [1, 0, 0, 0, 3]\n";
        let cfg = RunConfig::from_file(&ConfigFile::parse(coeffs).unwrap()).unwrap();
        let spec = cfg.curve_spec().unwrap();
        assert_eq!(spec.a_coeffs, vec![2, 1]);
        assert_eq!(spec.b_coeffs, vec![1, 0, 0, 0, 3]);
    }
}
