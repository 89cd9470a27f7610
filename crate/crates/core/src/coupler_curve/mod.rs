//! Coupler curves: the path of a point fixed to the coupler link, both as a
//! sampled trace and as an implicit algebraic curve of degree six.
//!
//! A coupler point is given in the moving frame `M` with origin at `A` and
//! x-axis along `AB`, so `(0, 0)` is `A` and `(h, 0)` is `B`.
//!
//! For the implicit form, write `AX = r(ch λ, sh λ)` and `BX = s(ch μ, sh μ)`
//! (up to orientation) with `γ = μ − λ` fixed by the point. The constraints
//! `‖OA‖² = a²` and `‖CB‖² = b²` are linear in `u = ch λ`, `v = sh λ`:
//!
//! ```text
//! P₁ u + Q₁ v = C₁      P₁ = 2s((X − g) ch γ − Y sh γ)
//!                       Q₁ = 2s((X − g) sh γ − Y ch γ)
//!                       C₁ = (X − g)² − Y² + s² − b²
//! A₂ u + B₂ v = C₂      A₂ = 2rX,  B₂ = −2rY,  C₂ = X² − Y² − a² + r²
//! ```
//!
//! Solving for `u, v` and imposing `u² − v² = 1` gives
//! `(C₁B₂ − C₂Q₁)² − (P₁C₂ − A₂C₁)² − (P₁B₂ − A₂Q₁)² = 0`.

mod poly;

pub use poly::{BiPoly, MAX_DEGREE};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourbar::{
    coupler_angle_of, input_pivot, solve_output_angle, Branch, LinkageParams, OutputSolution,
    RootSign, SolverOptions,
};
use crate::lorentz2::{Motion, Point};

/// Legs with `r` or `s` at or below this (relative to `max(1, h)`) are degenerate.
const LEG_TOL: f64 = 1e-12;

/// Coordinates of a coupler point in the moving frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CouplerPoint {
    pub x: f64,
    pub y: f64,
}

impl CouplerPoint {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// `x² − y²`, the signed square of `‖AX‖`.
    pub fn r_sq(&self) -> f64 {
        (self.x - self.y) * (self.x + self.y)
    }

    /// `(x − h)² − y²`, the signed square of `‖BX‖`.
    pub fn s_sq(&self, h: f64) -> f64 {
        let u = self.x - h;
        (u - self.y) * (u + self.y)
    }

    /// The coupler midpoint `(h/2, 0)`.
    pub fn midpoint(h: f64) -> Self {
        Self::new(0.5 * h, 0.0)
    }
}

/// `(ch γ, sh γ)` up to a common sign, for `γ = μ − λ`.
///
/// When the two legs point the same way this is a real hyperbolic angle
/// (`chg ≥ 1`); when they point opposite ways `chg ≤ −1` and only the pair
/// is meaningful.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gamma {
    pub chg: f64,
    pub shg: f64,
}

pub fn gamma_of_point(h: f64, x: f64, y: f64) -> Result<Gamma> {
    let pt = CouplerPoint::new(x, y);
    let (r, s) = leg_lengths(h, &pt)?;
    let rs = r * s;
    Ok(Gamma {
        chg: (x * (x - h) - y * y) / rs,
        shg: h * y / rs,
    })
}

fn leg_lengths(h: f64, pt: &CouplerPoint) -> Result<(f64, f64)> {
    let tol = LEG_TOL * h.max(1.0);
    let (r2, s2) = (pt.r_sq(), pt.s_sq(h));
    for q in [r2, s2] {
        if q <= 0.0 || q.sqrt() <= tol {
            return Err(Error::DegenerateLeg(q));
        }
    }
    Ok((r2.sqrt(), s2.sqrt()))
}

/// Position in the fixed frame of coupler point `pt` for one assembly.
pub fn trace_point(
    p: &LinkageParams,
    theta: f64,
    sol: &OutputSolution,
    pt: &CouplerPoint,
) -> Result<Point> {
    let angle = coupler_angle_of(p, theta, sol)?;
    let a = input_pivot(p, theta);
    let frame = Motion::new(angle.line_rapidity(theta), a.x, a.y);
    // a past-pointing AB flips the frame axes through A
    let local = if angle.future_pointing {
        Point::new(pt.x, pt.y)
    } else {
        Point::new(-pt.x, -pt.y)
    };
    Ok(frame.apply(local))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub theta: f64,
    pub x: f64,
    pub y: f64,
}

/// A run of consecutive samples on one `(root, branch)` assembly.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub root: RootSign,
    pub branch: Branch,
    pub points: Vec<TracePoint>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Trace {
    /// Ordered by `(branch, root)`, then by first sample.
    pub polylines: Vec<Polyline>,
    /// Samples with no assembly (impossible position or branching point).
    pub infeasible: usize,
    /// Solutions whose coupler point could not be placed.
    pub skipped: usize,
}

impl Trace {
    pub fn point_count(&self) -> usize {
        self.polylines.iter().map(|l| l.points.len()).sum()
    }

    pub fn points(&self) -> impl Iterator<Item = &TracePoint> {
        self.polylines.iter().flat_map(|l| l.points.iter())
    }
}

/// Sample `n` evenly spaced input angles in `[theta_lo, theta_hi]` and
/// trace `pt` on every assembly. A missing solution ends the current
/// polyline of that assembly.
pub fn trace_curve(
    p: &LinkageParams,
    pt: &CouplerPoint,
    theta_lo: f64,
    theta_hi: f64,
    n: usize,
    opts: &SolverOptions,
) -> Result<Trace> {
    if n < 2 || !(theta_lo.is_finite() && theta_hi.is_finite()) || theta_lo >= theta_hi {
        return Err(Error::Validation(format!(
            "trace needs n >= 2 and theta_lo < theta_hi (got n={n}, [{theta_lo}, {theta_hi}])"
        )));
    }
    const KEYS: [(Branch, RootSign); 4] = [
        (Branch::Standard, RootSign::Plus),
        (Branch::Standard, RootSign::Minus),
        (Branch::Reversed, RootSign::Plus),
        (Branch::Reversed, RootSign::Minus),
    ];
    let mut finished: [Vec<Polyline>; 4] = Default::default();
    let mut open: [Option<Polyline>; 4] = Default::default();
    let mut trace = Trace::default();
    let step = (theta_hi - theta_lo) / (n - 1) as f64;

    for i in 0..n {
        let theta = if i == n - 1 {
            theta_hi
        } else {
            theta_lo + step * i as f64
        };
        let sols = solve_output_angle(p, theta, opts).unwrap_or_default();
        if sols.is_empty() {
            trace.infeasible += 1;
        }
        let mut hit = [false; 4];
        for sol in &sols {
            let k = KEYS
                .iter()
                .position(|&(b, r)| b == sol.branch && r == sol.root)
                .unwrap();
            match trace_point(p, theta, sol, pt) {
                Ok(q) => {
                    hit[k] = true;
                    open[k]
                        .get_or_insert_with(|| Polyline {
                            root: sol.root,
                            branch: sol.branch,
                            points: Vec::new(),
                        })
                        .points
                        .push(TracePoint {
                            theta,
                            x: q.x,
                            y: q.y,
                        });
                }
                Err(_) => trace.skipped += 1,
            }
        }
        for k in 0..4 {
            if !hit[k] {
                if let Some(line) = open[k].take() {
                    finished[k].push(line);
                }
            }
        }
    }
    for k in 0..4 {
        if let Some(line) = open[k].take() {
            finished[k].push(line);
        }
    }
    trace.polylines = finished.into_iter().flatten().collect();
    Ok(trace)
}

/// Implicit coupler curve `Σ c[i][j] Xⁱ Yʲ = 0`, normalized so the largest
/// coefficient has magnitude 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SexticCurve {
    pub poly: BiPoly,
    /// Largest coefficient magnitude before normalization.
    pub scale: f64,
}

/// Coefficients below this (after normalization) count as zero.
pub const COEFF_ZERO_TOL: f64 = 1e-12;

impl SexticCurve {
    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        self.poly.coeff(i, j)
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.poly.eval(x, y)
    }

    /// Maximal total degree among coefficients above [`COEFF_ZERO_TOL`].
    pub fn degree(&self) -> Option<usize> {
        self.poly.degree(COEFF_ZERO_TOL)
    }

    /// `|P(X, Y)| / max(1, ‖(X, Y)‖∞)⁶`.
    pub fn normalized_residual(&self, x: f64, y: f64) -> f64 {
        let m = x.abs().max(y.abs()).max(1.0);
        self.eval(x, y).abs() / m.powi(MAX_DEGREE as i32)
    }

    /// `(i, j, c[i][j])` ordered by total degree, then by descending power of `X`.
    pub fn monomials(&self) -> Vec<(usize, usize, f64)> {
        let mut out = Vec::new();
        for d in 0..=MAX_DEGREE {
            for i in (0..=d).rev() {
                out.push((i, d - i, self.poly.coeff(i, d - i)));
            }
        }
        out
    }
}

pub fn sextic_coefficients(p: &LinkageParams, pt: &CouplerPoint) -> Result<SexticCurve> {
    let (r, s) = leg_lengths(p.h, pt)?;
    let Gamma { chg, shg } = gamma_of_point(p.h, pt.x, pt.y)?;
    let (a, b, g) = (p.a, p.b, p.g);

    let p1 = BiPoly::linear(-2.0 * s * g * chg, 2.0 * s * chg, -2.0 * s * shg);
    let q1 = BiPoly::linear(-2.0 * s * g * shg, 2.0 * s * shg, -2.0 * s * chg);
    let c1 = BiPoly::quadratic(g * g + s * s - b * b, -2.0 * g, 0.0, 1.0, -1.0);
    let a2 = BiPoly::linear(0.0, 2.0 * r, 0.0);
    let b2 = BiPoly::linear(0.0, 0.0, -2.0 * r);
    let c2 = BiPoly::quadratic(r * r - a * a, 0.0, 0.0, 1.0, -1.0);

    let ch_num = c1 * b2 - c2 * q1;
    let sh_num = p1 * c2 - a2 * c1;
    let det = p1 * b2 - a2 * q1;
    let raw = ch_num.square() - sh_num.square() - det.square();

    let scale = raw.max_abs();
    let poly = if scale > 0.0 {
        raw.scale(scale.recip())
    } else {
        raw
    };
    Ok(SexticCurve { poly, scale })
}

pub fn sextic_eval(curve: &SexticCurve, x: f64, y: f64) -> f64 {
    curve.eval(x, y)
}
