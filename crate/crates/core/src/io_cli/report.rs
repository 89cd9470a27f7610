//! Text, JSON and CSV reports.

use std::fmt::Write as _;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::classify::{classify_with_tol, MovementType, Subclass, TParams};
use crate::coupler_curve::{sextic_coefficients, trace_curve, CouplerPoint, SexticCurve, Trace};
use crate::error::Result;
use crate::fourbar::{
    coupler_angle_of, solve_output_angle, transmission_angle, Branch, Branching, LimitReport,
    LinkageParams, RootSign, SolverOptions,
};

use super::config::SweepRange;

/// Shortest round-trip decimal form; exponent notation outside
/// `[1e-5, 1e16)`; negative zero prints as `0`.
pub fn fmt_num(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 {
        "0".to_string()
    } else if a.is_finite() && !(1e-5..1e16).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

fn nz(x: f64) -> f64 {
    x + 0.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub params: LinkageParams,
    pub limits: LimitReport,
    pub t: TParams,
    pub branching: Branching,
    pub subclass: Subclass,
    pub input_type: MovementType,
    pub output_type: MovementType,
    pub type_name: String,
    pub grashof: bool,
}

impl AnalysisReport {
    pub fn new(p: &LinkageParams, tol: f64) -> Result<Self> {
        let c = classify_with_tol(p, tol)?;
        let mut limits = c.limits;
        for v in [
            &mut limits.ch_theta_min,
            &mut limits.ch_theta_max,
            &mut limits.ch_psi_min,
            &mut limits.ch_psi_max,
        ] {
            *v = nz(*v);
        }
        let t = TParams {
            t1: nz(c.t.t1),
            t2: nz(c.t.t2),
            t3: nz(c.t.t3),
            t4: nz(c.t.t4),
            t5: nz(c.t.t5),
        };
        let branching = match c.branching {
            Branching::Discrete {
                ch_theta,
                realizable,
            } => Branching::Discrete {
                ch_theta: nz(ch_theta),
                realizable,
            },
            other => other,
        };
        Ok(Self {
            params: *p,
            limits,
            t,
            branching,
            subclass: c.subclass,
            input_type: c.input_type,
            output_type: c.output_type,
            type_name: c.type_name(),
            grashof: c.grashof,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| crate::Error::Parse(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let p = &self.params;
        let l = &self.limits;
        let real = |e: bool| if e { "" } else { "  (no real angle)" };
        let mut s = String::new();
        let _ = writeln!(
            s,
            "linkage: a={} b={} g={} h={}",
            fmt_num(p.a),
            fmt_num(p.b),
            fmt_num(p.g),
            fmt_num(p.h)
        );
        let _ = writeln!(
            s,
            "ch theta_min = {}{}",
            fmt_num(l.ch_theta_min),
            real(l.theta_min_exists)
        );
        let _ = writeln!(
            s,
            "ch theta_max = {}{}",
            fmt_num(l.ch_theta_max),
            real(l.theta_max_exists)
        );
        let _ = writeln!(
            s,
            "ch psi_min   = {}{}",
            fmt_num(l.ch_psi_min),
            real(l.psi_min_exists)
        );
        let _ = writeln!(
            s,
            "ch psi_max   = {}{}",
            fmt_num(l.ch_psi_max),
            real(l.psi_max_exists)
        );
        let t = self.t.as_array().map(fmt_num);
        let _ = writeln!(s, "T = ({})", t.join(", "));
        let b = match self.branching {
            Branching::Discrete {
                ch_theta,
                realizable: true,
            } => {
                format!("ch theta = {}", fmt_num(ch_theta))
            }
            Branching::Discrete {
                ch_theta,
                realizable: false,
            } => {
                format!("ch theta = {} (not a real angle)", fmt_num(ch_theta))
            }
            Branching::NoBranching => "none".to_string(),
            Branching::AllPointsBranching => "every position".to_string(),
        };
        let _ = writeln!(s, "branching: {b}");
        let _ = writeln!(s, "subclass: {}", self.subclass);
        let _ = writeln!(s, "type: {}", self.type_name);
        let _ = writeln!(s, "grashof analog: {}", self.grashof);
        s
    }
}

pub const SWEEP_HEADER: [&str; 7] = ["theta", "root", "branch", "psi", "phi", "zeta", "feasible"];

/// One sweep CSV row; `solution` is `None` for an infeasible sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub theta: f64,
    pub solution: Option<SweepSolution>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSolution {
    pub root: RootSign,
    pub branch: Branch,
    pub psi: f64,
    pub phi: Option<f64>,
    pub zeta: Option<f64>,
}

/// Rows in θ order, then `Plus` before `Minus`, then `Standard` before `Reversed`.
pub fn sweep_rows(p: &LinkageParams, range: &SweepRange, opts: &SolverOptions) -> Vec<SweepRow> {
    let mut rows = Vec::new();
    for theta in range.samples() {
        let mut sols = solve_output_angle(p, theta, opts).unwrap_or_default();
        if sols.is_empty() {
            rows.push(SweepRow {
                theta,
                solution: None,
            });
            continue;
        }
        sols.sort_by_key(|s| (s.root, s.branch));
        let zeta = transmission_angle(p, theta).ok().map(|t| t.zeta);
        for sol in sols {
            let phi = coupler_angle_of(p, theta, &sol).ok().map(|c| c.phi);
            rows.push(SweepRow {
                theta,
                solution: Some(SweepSolution {
                    root: sol.root,
                    branch: sol.branch,
                    psi: sol.psi,
                    phi,
                    zeta,
                }),
            });
        }
    }
    rows
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    let opt = |v: Option<f64>| v.map(fmt_num).unwrap_or_default();
    for r in rows {
        let rec = match &r.solution {
            None => [
                fmt_num(r.theta),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                "0".into(),
            ],
            Some(s) => [
                fmt_num(r.theta),
                s.root.as_str().into(),
                s.branch.as_str().into(),
                fmt_num(s.psi),
                opt(s.phi),
                opt(s.zeta),
                "1".into(),
            ],
        };
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub const TRACE_HEADER: [&str; 5] = ["theta", "root", "branch", "X", "Y"];

pub fn write_trace_csv<W: Write>(trace: &Trace, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TRACE_HEADER)?;
    for line in &trace.polylines {
        for q in &line.points {
            w.write_record([
                fmt_num(q.theta),
                line.root.as_str().into(),
                line.branch.as_str().into(),
                fmt_num(q.x),
                fmt_num(q.y),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Coefficient table and trace residual of the implicit coupler curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SexticReport {
    pub params: LinkageParams,
    pub point: CouplerPoint,
    pub scale: f64,
    pub degree: Option<usize>,
    /// `(i, j, c)` for the monomial `Xⁱ Yʲ`.
    pub coefficients: Vec<(usize, usize, f64)>,
    pub theta_samples: usize,
    pub points_checked: usize,
    pub max_residual: Option<f64>,
}

impl SexticReport {
    pub fn new(
        p: &LinkageParams,
        pt: &CouplerPoint,
        range: (f64, f64),
        samples: usize,
        opts: &SolverOptions,
    ) -> Result<Self> {
        let curve = sextic_coefficients(p, pt)?;
        let trace = trace_curve(p, pt, range.0, range.1, samples, opts)?;
        let max_residual = trace
            .points()
            .map(|q| curve.normalized_residual(q.x, q.y))
            .fold(None, |m: Option<f64>, r| Some(m.map_or(r, |m| m.max(r))));
        Ok(Self {
            params: *p,
            point: *pt,
            scale: curve.scale,
            degree: curve.degree(),
            coefficients: curve_table(&curve),
            theta_samples: samples,
            points_checked: trace.point_count(),
            max_residual,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let p = &self.params;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "coupler curve: a={} b={} g={} h={} point=({}, {})",
            fmt_num(p.a),
            fmt_num(p.b),
            fmt_num(p.g),
            fmt_num(p.h),
            fmt_num(self.point.x),
            fmt_num(self.point.y)
        );
        let _ = writeln!(s, "scale: {}", fmt_num(self.scale));
        let deg = self.degree.map_or("none".to_string(), |d| d.to_string());
        let _ = writeln!(s, "degree: {deg}");
        let _ = writeln!(s, "{:<12} coefficient", "monomial");
        for &(i, j, c) in &self.coefficients {
            let _ = writeln!(s, "{:<12} {}", monomial_name(i, j), fmt_num(c));
        }
        match self.max_residual {
            Some(r) => {
                let _ = writeln!(
                    s,
                    "residual: max {} over {} points ({} theta samples)",
                    fmt_num(r),
                    self.points_checked,
                    self.theta_samples
                );
            }
            None => {
                let _ = writeln!(
                    s,
                    "residual: no feasible samples ({} theta samples)",
                    self.theta_samples
                );
            }
        }
        s
    }
}

fn curve_table(curve: &SexticCurve) -> Vec<(usize, usize, f64)> {
    curve
        .monomials()
        .into_iter()
        .map(|(i, j, c)| (i, j, nz(c)))
        .collect()
}

/// `"1"`, `"X"`, `"X^2*Y"`, ...
pub fn monomial_name(i: usize, j: usize) -> String {
    let part = |v: &str, k: usize| match k {
        0 => None,
        1 => Some(v.to_string()),
        k => Some(format!("{v}^{k}")),
    };
    let parts: Vec<String> = [part("X", i), part("Y", j)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}
