//! Position analysis of the planar 4R chain on the Minkowskian plane.
//!
//! The fixed frame has its origin at the input pivot `O` and its x-axis
//! through the output pivot `C = (g, 0)`. The input crank tip is
//! `A = (a ch θ, a sh θ)` and the output crank tip is
//! `B = (g + b ch ψ, b sh ψ)`. The coupler constraint `‖AB‖² = h²` becomes
//!
//! ```text
//! A(θ) ch ψ + B(θ) sh ψ = C(θ)
//! A(θ) = 2gb − 2ab ch θ
//! B(θ) = 2ab sh θ
//! C(θ) = h² − g² − b² − a² + 2ag ch θ
//! ```
//!
//! which is solved with the substitution `y = th(ψ/2)`:
//! `(A + C) y² + 2B y + (A − C) = 0`.
//!
//! Roots with `|y| > 1` do not give a real `ψ` directly. Writing
//! `y = coth(t)` gives `ch ψ → −ch 2t`, `sh ψ → −sh 2t`, i.e. the output
//! pivot on the other branch of its Minkowskian circle. [`SolveMode::Extended`]
//! reports those as [`Branch::Reversed`] solutions with `ψ = 2 artanh(1/y)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lorentz2::{LVec2, Point};

/// Link lengths of a 4R chain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkageParams {
    /// Input crank `OA`.
    pub a: f64,
    /// Output crank `CB`.
    pub b: f64,
    /// Ground link `OC`.
    pub g: f64,
    /// Coupler `AB`.
    pub h: f64,
}

impl LinkageParams {
    pub fn new(a: f64, b: f64, g: f64, h: f64) -> Result<Self> {
        let p = Self { a, b, g, h };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("a", self.a), ("b", self.b), ("g", self.g), ("h", self.h)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidLinkage(format!(
                    "link length {name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(())
    }

    /// `a + b + g + h`.
    pub fn perimeter(&self) -> f64 {
        self.a + self.b + self.g + self.h
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self {
            a: self.a * k,
            b: self.b * k,
            g: self.g * k,
            h: self.h * k,
        }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.a, self.b, self.g, self.h]
    }
}

/// Coefficients of `A ch ψ + B sh ψ = C` at one input angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstraintCoeffs {
    /// `A(θ)`, coefficient of `ch ψ`.
    pub ch_coeff: f64,
    /// `B(θ)`, coefficient of `sh ψ`.
    pub sh_coeff: f64,
    /// `C(θ)`.
    pub rhs: f64,
}

impl ConstraintCoeffs {
    /// `B² + C² − A²`; a real output angle needs this to be nonnegative.
    pub fn discriminant(&self) -> f64 {
        self.sh_coeff * self.sh_coeff + (self.rhs - self.ch_coeff) * (self.rhs + self.ch_coeff)
    }

    fn magnitude(&self) -> f64 {
        self.ch_coeff
            .abs()
            .max(self.sh_coeff.abs())
            .max(self.rhs.abs())
    }
}

pub fn constraint_coeffs(p: &LinkageParams, theta: f64) -> ConstraintCoeffs {
    let (ch, sh) = (theta.cosh(), theta.sinh());
    ConstraintCoeffs {
        ch_coeff: 2.0 * p.g * p.b - 2.0 * p.a * p.b * ch,
        sh_coeff: 2.0 * p.a * p.b * sh,
        rhs: p.h * p.h - p.g * p.g - p.b * p.b - p.a * p.a + 2.0 * p.a * p.g * ch,
    }
}

/// `B² + C² − A²` written as a polynomial in `c = ch θ` (using
/// `sh²θ = c² − 1`), so it can be evaluated for `c < 1` as well.
pub fn discriminant_at_ch(p: &LinkageParams, c: f64) -> f64 {
    let ca = 2.0 * p.g * p.b - 2.0 * p.a * p.b * c;
    let sb_sq = 4.0 * p.a * p.a * p.b * p.b * (c * c - 1.0);
    let rc = p.h * p.h - p.g * p.g - p.b * p.b - p.a * p.a + 2.0 * p.a * p.g * c;
    sb_sq + rc * rc - ca * ca
}

/// Which sign of `±√(B² + C² − A²)` produced a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootSign {
    Plus,
    Minus,
}

impl RootSign {
    pub fn as_str(self) -> &'static str {
        match self {
            RootSign::Plus => "plus",
            RootSign::Minus => "minus",
        }
    }
}

/// Branch of the output pivot's Minkowskian circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// `B = (g + b ch ψ, b sh ψ)`.
    Standard,
    /// `B = (g − b ch ψ, −b sh ψ)`.
    Reversed,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Standard => "standard",
            Branch::Reversed => "reversed",
        }
    }

    fn sign(self) -> f64 {
        match self {
            Branch::Standard => 1.0,
            Branch::Reversed => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveMode {
    /// Only roots with `|th(ψ/2)| < 1`.
    #[default]
    Strict,
    /// Also convert `|y| > 1` roots into reversed-branch solutions.
    Extended,
}

impl std::str::FromStr for SolveMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(SolveMode::Strict),
            "extended" => Ok(SolveMode::Extended),
            other => Err(Error::Validation(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub mode: SolveMode,
    /// `|A + C| ≤ branch_tol · max(1, |A| + |C|)` is a branching point.
    pub branch_tol: f64,
    /// `||y| − 1| ≤ lightlike_tol` means an isotropic output direction.
    pub lightlike_tol: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            mode: SolveMode::Strict,
            branch_tol: 1e-10,
            lightlike_tol: 1e-12,
        }
    }
}

impl SolverOptions {
    pub fn with_mode(mode: SolveMode) -> Self {
        Self {
            mode,
            ..Self::default()
        }
    }
}

/// One assembly of the chain at a given input angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutputSolution {
    pub psi: f64,
    pub root: RootSign,
    pub branch: Branch,
}

impl OutputSolution {
    /// The moving pivot `B` of the output crank.
    pub fn output_pivot(&self, p: &LinkageParams) -> Point {
        let s = self.branch.sign();
        Point::new(p.g + s * p.b * self.psi.cosh(), s * p.b * self.psi.sinh())
    }
}

/// Roots `y±` of `(A + C) y² + 2B y + (A − C) = 0`, computed without
/// cancellation. `sum = A + C` must be nonzero.
fn half_tangent_roots(k: &ConstraintCoeffs, sum: f64, sq: f64) -> (f64, f64) {
    let diff = k.ch_coeff - k.rhs;
    let b = k.sh_coeff;
    if b >= 0.0 {
        let q = -b - sq;
        if q == 0.0 {
            return (0.0, 0.0);
        }
        // y+ · y− = (A − C)/(A + C)
        (diff / q, q / sum)
    } else {
        let q = -b + sq;
        (q / sum, diff / q)
    }
}

/// Output angles for input angle `theta`.
///
/// Returns zero, one or two solutions, `Plus` first. An empty list means
/// the position is impossible (`B² + C² − A² < 0`, or in strict mode all
/// roots have `|y| > 1`).
pub fn solve_output_angle(
    p: &LinkageParams,
    theta: f64,
    opts: &SolverOptions,
) -> Result<Vec<OutputSolution>> {
    let k = constraint_coeffs(p, theta);
    let sum = k.ch_coeff + k.rhs;
    if sum.abs() <= opts.branch_tol * (k.ch_coeff.abs() + k.rhs.abs()).max(1.0) {
        return Err(Error::BranchingPoint { sum });
    }
    let mut disc = k.discriminant();
    if disc < 0.0 {
        let m = k.magnitude();
        if disc < -4.0 * f64::EPSILON * m * m {
            return Ok(Vec::new());
        }
        disc = 0.0;
    }
    let (y_plus, y_minus) = half_tangent_roots(&k, sum, disc.sqrt());

    let mut out = Vec::with_capacity(2);
    let mut lightlike = false;
    for (root, y) in [(RootSign::Plus, y_plus), (RootSign::Minus, y_minus)] {
        let ay = y.abs();
        if (ay - 1.0).abs() <= opts.lightlike_tol {
            lightlike = true;
        } else if ay < 1.0 {
            out.push(OutputSolution {
                psi: 2.0 * y.atanh(),
                root,
                branch: Branch::Standard,
            });
        } else if opts.mode == SolveMode::Extended {
            out.push(OutputSolution {
                psi: 2.0 * y.recip().atanh(),
                root,
                branch: Branch::Reversed,
            });
        }
    }
    for s in &mut out {
        s.psi = polish(&k, s.psi, s.branch);
    }
    if out.is_empty() && lightlike {
        return Err(Error::LightlikeOutput);
    }
    Ok(out)
}

/// One Newton step on `±(A ch ψ + B sh ψ) − C`.
fn polish(k: &ConstraintCoeffs, psi: f64, branch: Branch) -> f64 {
    let s = branch.sign();
    let (ch, sh) = (psi.cosh(), psi.sinh());
    let f = s * (k.ch_coeff * ch + k.sh_coeff * sh) - k.rhs;
    let df = s * (k.ch_coeff * sh + k.sh_coeff * ch);
    let scale = k.magnitude() * ch;
    // skip near double roots where the step is ill-conditioned
    if df.abs() <= 1e-6 * scale {
        return psi;
    }
    let next = psi - f / df;
    if next.is_finite() && (next - psi).abs() <= 1e-6 * psi.abs().max(1.0) {
        next
    } else {
        psi
    }
}

/// Output angles from the alternative closed form
/// `ψ = −artanh(B/A) ± arch(C/√(A² − B²))`.
///
/// Defined only when `A > |B|` and `C/√(A² − B²) ≥ 1`; returns the `+`
/// branch first.
pub fn solve_output_angle_alt(p: &LinkageParams, theta: f64) -> Result<[f64; 2]> {
    let k = constraint_coeffs(p, theta);
    let (ca, sb) = (k.ch_coeff, k.sh_coeff);
    if ca <= sb.abs() {
        return Err(Error::Domain {
            what: "A/sqrt(A^2-B^2)",
            value: ca,
        });
    }
    let rho = ((ca - sb) * (ca + sb)).sqrt();
    let ratio = k.rhs / rho;
    if ratio < 1.0 {
        return Err(Error::Domain {
            what: "arch",
            value: ratio,
        });
    }
    let delta = (sb / ca).atanh();
    let spread = ratio.acosh();
    Ok([-delta + spread, -delta - spread])
}

/// Joint positions of one assembly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose {
    pub o: Point,
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

impl Pose {
    /// `‖AB‖²_signed − h²` from the joint coordinates.
    pub fn closure_residual(&self, p: &LinkageParams) -> f64 {
        self.a.interval_sq(self.b) - p.h * p.h
    }
}

/// Signed loop-closure residual `‖AB‖² − h²` of an assembly, evaluated in
/// the null coordinates `x ∓ y`:
///
/// ```text
/// ‖AB‖² = (g + s b e^{−ψ} − a e^{−θ}) (g + s b e^{ψ} − a e^{θ})
/// ```
///
/// with `s = ±1` for the branch. Unlike [`Pose::closure_residual`] this does
/// not lose digits to the size of `B` when `|ψ|` is large.
pub fn closure_residual(p: &LinkageParams, theta: f64, sol: &OutputSolution) -> f64 {
    let s = sol.branch.sign();
    let minus = p.g + s * p.b * (-sol.psi).exp() - p.a * (-theta).exp();
    let plus = p.g + s * p.b * sol.psi.exp() - p.a * theta.exp();
    minus * plus - p.h * p.h
}

pub fn input_pivot(p: &LinkageParams, theta: f64) -> Point {
    Point::new(p.a * theta.cosh(), p.a * theta.sinh())
}

pub fn pose(p: &LinkageParams, theta: f64, sol: &OutputSolution) -> Pose {
    Pose {
        o: Point::ORIGIN,
        a: input_pivot(p, theta),
        b: sol.output_pivot(p),
        c: Point::new(p.g, 0.0),
    }
}

/// Where the constraint `A(θ) + C(θ) = 0` puts the branching points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Branching {
    /// `g ≠ b`: a single value of `ch θ`; a real angle only when it is ≥ 1.
    Discrete { ch_theta: f64, realizable: bool },
    /// `g = b`, `h ≠ a`.
    NoBranching,
    /// `g = b`, `h = a`.
    AllPointsBranching,
}

impl Branching {
    /// `θ ≥ 0` of a realizable discrete branching point.
    pub fn theta(&self) -> Option<f64> {
        match *self {
            Branching::Discrete {
                ch_theta,
                realizable: true,
            } => Some(ch_theta.max(1.0).acosh()),
            _ => None,
        }
    }
}

/// Branching points with the exact test `g = b`, `h = a`.
pub fn branching_points(p: &LinkageParams) -> Branching {
    branching_points_with_tol(p, 0.0)
}

/// Branching points; differences within `tol · (a + b + g + h)` count as equal.
pub fn branching_points_with_tol(p: &LinkageParams, tol: f64) -> Branching {
    let band = tol * p.perimeter();
    let gb = p.g - p.b;
    if gb.abs() <= band {
        if (p.h - p.a).abs() <= band {
            Branching::AllPointsBranching
        } else {
            Branching::NoBranching
        }
    } else {
        let ch_theta = (p.a * p.a - p.h * p.h) / (2.0 * p.a * gb) + gb / (2.0 * p.a);
        Branching::Discrete {
            ch_theta,
            realizable: ch_theta >= 1.0,
        }
    }
}

/// Coupler angle `φ = artanh((b sh ψ − a sh θ)/(g + b ch ψ − a ch θ)) − θ + π`
/// for a standard-branch output angle.
pub fn coupler_angle(p: &LinkageParams, theta: f64, psi: f64) -> Result<f64> {
    let num = p.b * psi.sinh() - p.a * theta.sinh();
    let den = p.g + p.b * psi.cosh() - p.a * theta.cosh();
    coupler_angle_from(theta, num, den, p)
}

fn coupler_angle_from(theta: f64, num: f64, den: f64, p: &LinkageParams) -> Result<f64> {
    if den.abs() <= 1e-12 * p.perimeter() {
        return Err(Error::DegenerateDenominator(den));
    }
    let ratio = num / den;
    if ratio.abs() >= 1.0 {
        return Err(Error::TimelikeCoupler { ratio });
    }
    Ok(ratio.atanh() - theta + PI)
}

/// Coupler angle of a solved assembly, with the orientation of `AB`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplerAngle {
    /// `φ`; the coupler line makes the angle `θ + φ − π` with the x-axis.
    pub phi: f64,
    /// Whether `AB` is future-pointing. When it is not, `B` lies at
    /// `A − h(ch(θ+φ−π), sh(θ+φ−π))`.
    pub future_pointing: bool,
}

impl CouplerAngle {
    /// Rapidity `θ + φ − π` of the coupler line.
    pub fn line_rapidity(&self, theta: f64) -> f64 {
        theta + self.phi - PI
    }

    /// Unit vector from `A` towards `B`.
    pub fn direction(&self, theta: f64) -> LVec2 {
        let u = LVec2::spacelike_unit(self.line_rapidity(theta));
        if self.future_pointing {
            u
        } else {
            -u
        }
    }
}

/// Coupler angle for a solution on either branch, read off the pose.
pub fn coupler_angle_of(
    p: &LinkageParams,
    theta: f64,
    sol: &OutputSolution,
) -> Result<CouplerAngle> {
    let ps = pose(p, theta, sol);
    let d = ps.b - ps.a;
    let phi = coupler_angle_from(theta, d.u2, d.u1, p)?;
    Ok(CouplerAngle {
        phi,
        future_pointing: d.u1 > 0.0,
    })
}

/// Transmission angle and the diagonal `AC` it is computed from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transmission {
    /// `ζ = arch q ≥ 0`.
    pub zeta: f64,
    /// `q = (−g² − a² + h² + b² + 2ag ch θ)/(2bh)`.
    pub q: f64,
    /// `d² = g² + a² − 2ag ch θ` from triangle `COA`.
    pub diag_sq_input: f64,
    /// `d² = h² + b² − 2bh ch ζ` from triangle `ABC`.
    pub diag_sq_output: f64,
}

/// Fraction of `q` below 1 still accepted as `q = 1` (alignment).
const ALIGN_TOL: f64 = 1e-12;

pub fn transmission_q(p: &LinkageParams, theta: f64) -> f64 {
    transmission_q_at_ch(p, theta.cosh())
}

/// `q` as a function of `c = ch θ`; defined for any real `c`.
pub fn transmission_q_at_ch(p: &LinkageParams, c: f64) -> f64 {
    (-p.g * p.g - p.a * p.a + p.h * p.h + p.b * p.b + 2.0 * p.a * p.g * c) / (2.0 * p.b * p.h)
}

pub fn transmission_angle(p: &LinkageParams, theta: f64) -> Result<Transmission> {
    let q = transmission_q(p, theta);
    if q.is_nan() || q < 1.0 - ALIGN_TOL {
        return Err(Error::Domain {
            what: "transmission angle arch",
            value: q,
        });
    }
    let zeta = q.max(1.0).acosh();
    Ok(Transmission {
        zeta,
        q,
        diag_sq_input: p.g * p.g + p.a * p.a - 2.0 * p.a * p.g * theta.cosh(),
        diag_sq_output: p.h * p.h + p.b * p.b - 2.0 * p.b * p.h * zeta.cosh(),
    })
}

/// `(ch θ_min, ch θ_max)`: the roots in `ch θ` of `B² + C² − A² = 0`.
pub fn input_limits(p: &LinkageParams) -> (f64, f64) {
    let base = p.a * p.a + p.g * p.g;
    let den = 2.0 * p.a * p.g;
    (
        (base - (p.b + p.h).powi(2)) / den,
        (base - (p.b - p.h).powi(2)) / den,
    )
}

/// `(ch ψ_min, ch ψ_max)`, reached when `OA` and `AB` are aligned.
pub fn output_limits(p: &LinkageParams) -> (f64, f64) {
    let base = p.g * p.g + p.b * p.b;
    let den = 2.0 * p.b * p.g;
    (
        ((p.a - p.h).powi(2) - base) / den,
        ((p.a + p.h).powi(2) - base) / den,
    )
}

/// A limit whose `ch` value is this close below 1 still counts as `θ = 0`.
pub const LIMIT_EXISTS_TOL: f64 = 1e-12;

/// Limit values and whether each is a real angle (`ch ≥ 1`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LimitReport {
    pub ch_theta_min: f64,
    pub ch_theta_max: f64,
    pub ch_psi_min: f64,
    pub ch_psi_max: f64,
    pub theta_min_exists: bool,
    pub theta_max_exists: bool,
    pub psi_min_exists: bool,
    pub psi_max_exists: bool,
}

impl LimitReport {
    pub fn new(p: &LinkageParams) -> Self {
        let (ch_theta_min, ch_theta_max) = input_limits(p);
        let (ch_psi_min, ch_psi_max) = output_limits(p);
        Self {
            ch_theta_min,
            ch_theta_max,
            ch_psi_min,
            ch_psi_max,
            theta_min_exists: ch_theta_min >= 1.0 - LIMIT_EXISTS_TOL,
            theta_max_exists: ch_theta_max >= 1.0 - LIMIT_EXISTS_TOL,
            psi_min_exists: ch_psi_min >= 1.0 - LIMIT_EXISTS_TOL,
            psi_max_exists: ch_psi_max >= 1.0 - LIMIT_EXISTS_TOL,
        }
    }
}
