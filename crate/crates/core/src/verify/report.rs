use std::fmt;
use std::str::FromStr;

use super::grid::GridSpec;
use crate::{Error, Result};

/// How `observed` is compared with `claimed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// `|observed − claimed| ≤ tol`
    Within,
    /// `observed ≤ claimed + tol`
    AtMost,
    /// `observed ≥ claimed − tol`
    AtLeast,
    /// `observed > claimed`; the tolerance is not used.
    Above,
}

impl Comparison {
    fn name(self) -> &'static str {
        match self {
            Comparison::Within => "within",
            Comparison::AtMost => "at-most",
            Comparison::AtLeast => "at-least",
            Comparison::Above => "above",
        }
    }

    /// Size of the violation of the one-sided relation, or the absolute difference for `Within`.
    fn error(self, claimed: f64, observed: f64) -> f64 {
        match self {
            Comparison::Within => (observed - claimed).abs(),
            Comparison::AtMost => (observed - claimed).max(0.0),
            Comparison::AtLeast | Comparison::Above => (claimed - observed).max(0.0),
        }
    }
}

impl FromStr for Comparison {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "within" => Ok(Comparison::Within),
            "at-most" => Ok(Comparison::AtMost),
            "at-least" => Ok(Comparison::AtLeast),
            "above" => Ok(Comparison::Above),
            other => Err(Error::MalformedReport(format!("unknown comparison {other:?}"))),
        }
    }
}

/// Outcome of one numeric check.
///
/// Except for [`Comparison::Above`], `passed` holds exactly when
/// `abs_error ≤ tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub check: String,
    pub alpha: f64,
    pub claimed: f64,
    pub observed: f64,
    pub comparison: Comparison,
    pub abs_error: f64,
    pub tolerance: f64,
    pub location: Option<(f64, f64)>,
    pub grid: Option<GridSpec>,
    pub seed: Option<u64>,
    pub details: Vec<(String, String)>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(
        check: &str,
        alpha: f64,
        claimed: f64,
        observed: f64,
        comparison: Comparison,
        tolerance: f64,
    ) -> Self {
        let abs_error = comparison.error(claimed, observed);
        let passed = match comparison {
            Comparison::Above => observed > claimed,
            _ => abs_error <= tolerance,
        };
        Self {
            check: check.to_owned(),
            alpha,
            claimed,
            observed,
            comparison,
            abs_error,
            tolerance,
            location: None,
            grid: None,
            seed: None,
            details: Vec::new(),
            passed,
        }
    }

    pub fn with_location(mut self, tau: f64, phi: f64) -> Self {
        self.location = Some((tau, phi));
        self
    }

    pub fn with_grid(mut self, grid: GridSpec) -> Self {
        self.grid = Some(grid);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// Extra `key=value` pair; neither side may contain whitespace or `=`.
    pub fn with_detail(mut self, key: &str, value: impl fmt::Display) -> Self {
        let value = value.to_string().replace(|c: char| c.is_whitespace() || c == '=', "_");
        self.details.push((key.to_owned(), value));
        self
    }

    pub fn detail(&self, key: &str) -> Option<&str> {
        self.details.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// One line of space-separated `key=value` pairs, starting with
    /// `check alpha claimed observed err passed` in that order.
    pub fn to_line(&self) -> String {
        self.to_string()
    }

    pub fn from_line(line: &str) -> Result<Self> {
        let bad = |msg: String| Error::MalformedReport(msg);
        let mut pairs = Vec::new();
        for token in line.split_whitespace() {
            let (k, v) = token
                .split_once('=')
                .ok_or_else(|| bad(format!("token without '=': {token:?}")))?;
            pairs.push((k, v));
        }
        let take = |key: &str| -> Result<&str> {
            pairs
                .iter()
                .find(|(k, _)| *k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| bad(format!("missing key {key:?}")))
        };
        let num = |key: &str| -> Result<f64> {
            take(key)?.parse().map_err(|_| bad(format!("bad number for {key:?}")))
        };
        let passed = match take("passed")? {
            "true" => true,
            "false" => false,
            other => return Err(bad(format!("bad bool {other:?}"))),
        };
        let location = match (take("tau").ok(), take("phi").ok()) {
            (Some(_), Some(_)) => Some((num("tau")?, num("phi")?)),
            _ => None,
        };
        let grid = take("grid").ok().map(GridSpec::from_str).transpose()?;
        let seed = take("seed")
            .ok()
            .map(|s| s.parse().map_err(|_| bad(format!("bad seed {s:?}"))))
            .transpose()?;
        const FIXED: [&str; 12] = [
            "check", "alpha", "claimed", "observed", "err", "passed", "cmp", "tol", "tau", "phi",
            "grid", "seed",
        ];
        let details = pairs
            .iter()
            .filter(|(k, _)| !FIXED.contains(k))
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        Ok(Self {
            check: take("check")?.to_owned(),
            alpha: num("alpha")?,
            claimed: num("claimed")?,
            observed: num("observed")?,
            comparison: take("cmp")?.parse()?,
            abs_error: num("err")?,
            tolerance: num("tol")?,
            location,
            grid,
            seed,
            details,
            passed,
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "check={} alpha={} claimed={} observed={} err={} passed={} cmp={} tol={}",
            self.check,
            self.alpha,
            self.claimed,
            self.observed,
            self.abs_error,
            self.passed,
            self.comparison.name(),
            self.tolerance
        )?;
        if let Some((tau, phi)) = self.location {
            write!(f, " tau={tau} phi={phi}")?;
        }
        if let Some(grid) = &self.grid {
            write!(f, " grid={grid}")?;
        }
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        for (k, v) in &self.details {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}
