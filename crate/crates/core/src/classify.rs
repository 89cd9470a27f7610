//! Movement-type classification of the 4R chain from the signs of five
//! linear forms in the link lengths.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourbar::{branching_points_with_tol, Branching, LimitReport, LinkageParams};

/// Default relative zero band for sign tests.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TParams {
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
    pub t4: f64,
    pub t5: f64,
}

impl TParams {
    pub fn as_array(&self) -> [f64; 5] {
        [self.t1, self.t2, self.t3, self.t4, self.t5]
    }

    /// Replace every value with `|T| ≤ band` by an exact zero.
    pub fn snapped(&self, band: f64) -> Self {
        let s = |t: f64| if t.abs() <= band { 0.0 } else { t };
        Self {
            t1: s(self.t1),
            t2: s(self.t2),
            t3: s(self.t3),
            t4: s(self.t4),
            t5: s(self.t5),
        }
    }
}

pub fn t_params(p: &LinkageParams) -> TParams {
    let LinkageParams { a, b, g, h } = *p;
    TParams {
        t1: g + b - h - a,
        t2: a - g + b - h,
        t3: g - a - b - h,
        t4: g - a + b + h,
        t5: a - h + g + b,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subclass {
    /// One link is longer than the other three together.
    Strange,
    /// One link equals the other three together.
    Rigid,
    /// Normal, not rigid, with `T₁ = 0` or `T₂ = 0`.
    Reducible,
    Irreducible,
}

impl Subclass {
    pub fn as_str(self) -> &'static str {
        match self {
            Subclass::Strange => "strange",
            Subclass::Rigid => "rigid",
            Subclass::Reducible => "reducible",
            Subclass::Irreducible => "irreducible",
        }
    }
}

impl fmt::Display for Subclass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Subclass with the zero band `tol · (a + b + g + h)`.
///
/// Tested in the order strange, rigid, reducible.
pub fn subclass(p: &LinkageParams, tol: f64) -> Subclass {
    let band = tol * p.perimeter();
    let total = p.perimeter();
    let excess = p.as_array().map(|l| l - (total - l));
    if excess.iter().any(|&e| e > band) {
        return Subclass::Strange;
    }
    if excess.iter().any(|&e| e.abs() <= band) {
        return Subclass::Rigid;
    }
    let t = t_params(p);
    if t.t1.abs() > band && t.t2.abs() > band {
        Subclass::Irreducible
    } else {
        Subclass::Reducible
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MovementType {
    /// Passes through `θ = 0` unbounded.
    Crank,
    /// Confined to two ranges.
    Rocker,
    /// Confined to three ranges.
    Superrocker,
}

impl MovementType {
    pub fn as_str(self) -> &'static str {
        match self {
            MovementType::Crank => "crank",
            MovementType::Rocker => "rocker",
            MovementType::Superrocker => "superrocker",
        }
    }
}

impl fmt::Display for MovementType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn input_type(t: &TParams) -> Result<MovementType> {
    let (t12, t34) = (t.t1 * t.t2, t.t3 * t.t4);
    match (t12 >= 0.0, t34 <= 0.0) {
        (true, true) => Ok(MovementType::Crank),
        (false, true) => Ok(MovementType::Rocker),
        (false, false) => Ok(MovementType::Superrocker),
        (true, false) => Err(Error::UnclassifiedSignPattern),
    }
}

pub fn output_type(t: &TParams) -> Result<MovementType> {
    let t45 = t.t4 * t.t5;
    match (t.t1 >= 0.0, t45 >= 0.0) {
        (true, true) => Ok(MovementType::Crank),
        (false, true) => Ok(MovementType::Rocker),
        (false, false) => Ok(MovementType::Superrocker),
        (true, false) => Err(Error::UnclassifiedSignPattern),
    }
}

/// `l + s ≥ p + q` for the longest `l`, shortest `s` and middle `p, q`.
pub fn grashof_analog(p: &LinkageParams) -> bool {
    let mut l = p.as_array();
    l.sort_by(f64::total_cmp);
    l[3] + l[0] >= l[1] + l[2]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub t: TParams,
    pub subclass: Subclass,
    pub input_type: MovementType,
    pub output_type: MovementType,
    pub limits: LimitReport,
    pub branching: Branching,
    pub grashof: bool,
}

impl ClassificationReport {
    /// For example `"superrocker–crank"`.
    pub fn type_name(&self) -> String {
        format!("{}\u{2013}{}", self.input_type, self.output_type)
    }
}

pub fn classify(p: &LinkageParams) -> Result<ClassificationReport> {
    classify_with_tol(p, DEFAULT_TOL)
}

/// Classification with sign tests snapped to `tol · (a + b + g + h)`.
pub fn classify_with_tol(p: &LinkageParams, tol: f64) -> Result<ClassificationReport> {
    p.validate()?;
    let t = t_params(p);
    let snapped = t.snapped(tol * p.perimeter());
    Ok(ClassificationReport {
        t,
        subclass: subclass(p, tol),
        input_type: input_type(&snapped)?,
        output_type: output_type(&snapped)?,
        limits: LimitReport::new(p),
        branching: branching_points_with_tol(p, tol),
        grashof: grashof_analog(p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use MovementType::*;

    fn lp(a: f64, b: f64, g: f64, h: f64) -> LinkageParams {
        LinkageParams::new(a, b, g, h).unwrap()
    }

    fn tp(t: [f64; 5]) -> TParams {
        TParams {
            t1: t[0],
            t2: t[1],
            t3: t[2],
            t4: t[3],
            t5: t[4],
        }
    }

    #[test]
    fn t_params_examples() {
        assert_eq!(
            t_params(&lp(1.0, 1.0, 4.0, 1.0)).as_array(),
            [3.0, -3.0, 1.0, 5.0, 5.0]
        );
        let t = t_params(&lp(0.6, 1.0, 0.7, 0.5)).as_array();
        for (x, e) in t.iter().zip([0.6, 0.4, -1.4, 1.6, 1.8]) {
            assert!((x - e).abs() < 1e-12);
        }
        assert_eq!(
            t_params(&lp(1.0, 1.0, 1.0, 1.0)).as_array(),
            [0.0, 0.0, -2.0, 2.0, 2.0]
        );
    }

    #[test]
    fn subclass_examples() {
        assert_eq!(
            subclass(&lp(1.0, 1.0, 4.0, 1.0), DEFAULT_TOL),
            Subclass::Strange
        );
        assert_eq!(
            subclass(&lp(1.2, 0.4, 0.4, 0.4), DEFAULT_TOL),
            Subclass::Rigid
        );
        assert_eq!(
            subclass(&lp(0.5, 1.0, 2.0, 2.5), DEFAULT_TOL),
            Subclass::Reducible
        );
        assert_eq!(
            subclass(&lp(1.0, 1.0, 1.0, 1.0), DEFAULT_TOL),
            Subclass::Reducible
        );
        assert_eq!(
            subclass(&lp(0.6, 1.0, 0.7, 0.5), DEFAULT_TOL),
            Subclass::Irreducible
        );
    }

    #[test]
    fn movement_type_examples() {
        assert_eq!(input_type(&tp([3.0, -3.0, 1.0, 5.0, 5.0])), Ok(Superrocker));
        assert_eq!(output_type(&tp([3.0, -3.0, 1.0, 5.0, 5.0])), Ok(Crank));
        assert_eq!(input_type(&tp([-0.8, 0.8, -1.6, 0.0, 1.6])), Ok(Rocker));
        assert_eq!(output_type(&tp([-0.8, 0.8, -1.6, 0.0, 1.6])), Ok(Rocker));
        assert_eq!(input_type(&tp([0.6, 0.4, -1.4, 1.6, 1.8])), Ok(Crank));
        assert_eq!(output_type(&tp([0.0, -3.0, -2.0, 5.0, 1.0])), Ok(Crank));
    }

    #[test]
    fn uncovered_sign_patterns() {
        assert_eq!(
            input_type(&tp([1.0, 1.0, 1.0, 1.0, 1.0])),
            Err(Error::UnclassifiedSignPattern)
        );
        assert_eq!(
            output_type(&tp([1.0, 1.0, 1.0, -1.0, 1.0])),
            Err(Error::UnclassifiedSignPattern)
        );
    }

    #[test]
    fn classify_examples() {
        let r = classify(&lp(1.0, 1.0, 4.0, 1.0)).unwrap();
        assert_eq!(r.type_name(), "superrocker\u{2013}crank");
        let r = classify(&lp(1.0, 1.0, 1.0, 3.0)).unwrap();
        assert_eq!(
            (r.subclass, r.input_type, r.output_type),
            (Subclass::Rigid, Crank, Rocker)
        );
        let r = classify(&lp(1.0, 2.0, 2.5, 2.0)).unwrap();
        assert_eq!((r.input_type, r.output_type), (Rocker, Crank));
        // rigid, with T₄ one rounding step away from zero
        let r = classify(&lp(1.2, 0.4, 0.4, 0.4)).unwrap();
        assert_eq!(r.type_name(), "rocker\u{2013}rocker");
        assert_eq!(r.branching, Branching::NoBranching);
    }

    #[test]
    fn grashof_examples() {
        assert!(grashof_analog(&lp(1.0, 1.0, 1.0, 1.0)));
        assert!(grashof_analog(&lp(1.0, 1.0, 4.0, 1.0)));
        assert!(grashof_analog(&lp(0.6, 1.0, 0.7, 0.5)));
        assert!(!grashof_analog(&lp(2.0, 3.0, 3.0, 3.0)));
    }

    #[test]
    fn report_serde_round_trip() {
        let r = classify(&lp(0.6, 1.0, 0.7, 0.5)).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<ClassificationReport>(&s).unwrap(), r);
    }
}
