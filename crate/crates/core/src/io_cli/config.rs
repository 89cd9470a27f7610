//! JSON job configuration.

use serde::Deserialize;

use crate::classify::DEFAULT_TOL;
use crate::coupler_curve::CouplerPoint;
use crate::error::{Error, Result};
use crate::fourbar::{LinkageParams, SolveMode, SolverOptions};

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepRange {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl SweepRange {
    pub fn validate(&self) -> Result<()> {
        if !(self.lo.is_finite() && self.hi.is_finite()) || self.lo >= self.hi {
            return Err(Error::Validation(format!(
                "sweep needs finite lo < hi, got lo={} hi={}",
                self.lo, self.hi
            )));
        }
        if self.steps < 2 {
            return Err(Error::Validation(format!(
                "sweep needs steps >= 2, got {}",
                self.steps
            )));
        }
        Ok(())
    }

    /// `steps` evenly spaced samples; the last one is exactly `hi`.
    pub fn samples(&self) -> Vec<f64> {
        let d = (self.hi - self.lo) / (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.hi
                } else {
                    self.lo + d * i as f64
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JobConfig {
    pub params: LinkageParams,
    pub mode: SolveMode,
    /// Relative zero band for classification sign tests.
    pub tol: f64,
    pub point: Option<CouplerPoint>,
    pub sweep: Option<SweepRange>,
}

impl JobConfig {
    pub fn new(params: LinkageParams) -> Self {
        Self {
            params,
            mode: SolveMode::Strict,
            tol: DEFAULT_TOL,
            point: None,
            sweep: None,
        }
    }

    pub fn solver_options(&self) -> SolverOptions {
        SolverOptions::with_mode(self.mode)
    }

    pub fn validate(&self) -> Result<()> {
        self.params
            .validate()
            .map_err(|e| Error::Validation(e.to_string()))?;
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::Validation(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        if let Some(pt) = self.point {
            if !(pt.x.is_finite() && pt.y.is_finite()) {
                return Err(Error::Validation("coupler point must be finite".into()));
            }
        }
        if let Some(s) = self.sweep {
            s.validate()?;
        }
        Ok(())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    a: f64,
    b: f64,
    g: f64,
    h: f64,
    #[serde(default)]
    mode: SolveMode,
    tol: Option<f64>,
    point: Option<CouplerPoint>,
    sweep: Option<SweepRange>,
}

/// Parse and validate a JSON job description.
///
/// Malformed JSON is a [`Error::Parse`]; unknown keys, missing keys and
/// out-of-range values are [`Error::Validation`].
pub fn parse_config(text: &str) -> Result<JobConfig> {
    let raw: RawConfig = serde_json::from_str(text).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Syntax | Category::Eof | Category::Io => Error::Parse(e.to_string()),
            Category::Data => Error::Validation(e.to_string()),
        }
    })?;
    let cfg = JobConfig {
        params: LinkageParams {
            a: raw.a,
            b: raw.b,
            g: raw.g,
            h: raw.h,
        },
        mode: raw.mode,
        tol: raw.tol.unwrap_or(DEFAULT_TOL),
        point: raw.point,
        sweep: raw.sweep,
    };
    cfg.validate()?;
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_one() {
        let c = parse_config(r#"{"a":1,"b":1,"g":4,"h":1}"#).unwrap();
        assert_eq!(
            c.params,
            LinkageParams {
                a: 1.0,
                b: 1.0,
                g: 4.0,
                h: 1.0
            }
        );
        assert_eq!(c.mode, SolveMode::Strict);
        assert_eq!(c.tol, DEFAULT_TOL);
    }

    #[test]
    fn full_schema() {
        let c = parse_config(
            r#"{"a":1,"b":1,"g":2,"h":2,"mode":"extended","tol":1e-6,
                "point":{"x":1,"y":0.25},"sweep":{"lo":-1,"hi":1,"steps":5}}"#,
        )
        .unwrap();
        assert_eq!(c.mode, SolveMode::Extended);
        assert_eq!(c.point, Some(CouplerPoint::new(1.0, 0.25)));
        assert_eq!(c.sweep.unwrap().samples(), vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_config(r#"{"a":0,"b":1,"g":1,"h":1}"#),
            Err(Error::Validation(_))
        ));
        match parse_config(r#"{"a":1,"b":1,"g":4,"h":1,"bogus":3}"#) {
            Err(Error::Validation(m)) => assert!(m.contains("bogus"), "{m}"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_config(r#"{"a":1,"b":1,"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_config(r#"{"a":1,"b":1,"g":1}"#),
            Err(Error::Validation(_))
        ));
        let bad_sweep = r#"{"a":1,"b":1,"g":1,"h":1,"sweep":{"lo":1,"hi":0,"steps":5}}"#;
        assert!(matches!(parse_config(bad_sweep), Err(Error::Validation(_))));
        let one_step = r#"{"a":1,"b":1,"g":1,"h":1,"sweep":{"lo":0,"hi":1,"steps":1}}"#;
        assert!(matches!(parse_config(one_step), Err(Error::Validation(_))));
        let mode = r#"{"a":1,"b":1,"g":1,"h":1,"mode":"loose"}"#;
        assert!(matches!(parse_config(mode), Err(Error::Validation(_))));
    }
}
