//! Lorentzian 2-space: causal classes, boosts, rigid motions, oriented
//! angles and the Minkowskian cosine rule.
//!
//! The quadratic form is `⟨u, u⟩ = u1² − u2²`. Angles are rapidities: plain
//! reals with no periodicity.

use std::ops::{Add, Mul, Neg, Sub};

use crate::double_plane::DoubleNumber;
use crate::error::{Error, Result};

/// Default relative tolerance used for causal classification.
pub const CAUSAL_TOL: f64 = 1e-12;

/// A vector of `L²`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LVec2 {
    pub u1: f64,
    pub u2: f64,
}

impl LVec2 {
    pub const fn new(u1: f64, u2: f64) -> Self {
        Self { u1, u2 }
    }

    /// Unit future-pointing spacelike vector `(ch t, sh t)`.
    pub fn spacelike_unit(t: f64) -> Self {
        Self::new(t.cosh(), t.sinh())
    }

    /// Unit future-pointing timelike vector `(sh t, ch t)`.
    pub fn timelike_unit(t: f64) -> Self {
        Self::new(t.sinh(), t.cosh())
    }

    pub fn dot(self, v: Self) -> f64 {
        self.u1 * v.u1 - self.u2 * v.u2
    }

    /// Signed square `u1² − u2²`.
    pub fn norm_sq(self) -> f64 {
        (self.u1 - self.u2) * (self.u1 + self.u2)
    }

    /// `√|u1² − u2²|`.
    pub fn norm(self) -> f64 {
        self.norm_sq().abs().sqrt()
    }

    pub fn euclid_sq(self) -> f64 {
        self.u1 * self.u1 + self.u2 * self.u2
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(self.u1 * k, self.u2 * k)
    }

    /// The Lorentz-orthogonal companion `(u2, u1)`; a boost maps the pair
    /// `(v, v.companion())` the same way it maps `(e1, e2)`.
    pub fn companion(self) -> Self {
        Self::new(self.u2, self.u1)
    }

    pub fn classify(self) -> CausalClass {
        causal_classify(self, CAUSAL_TOL)
    }
}

impl Add for LVec2 {
    type Output = LVec2;
    fn add(self, v: LVec2) -> LVec2 {
        LVec2::new(self.u1 + v.u1, self.u2 + v.u2)
    }
}

impl Sub for LVec2 {
    type Output = LVec2;
    fn sub(self, v: LVec2) -> LVec2 {
        LVec2::new(self.u1 - v.u1, self.u2 - v.u2)
    }
}

impl Neg for LVec2 {
    type Output = LVec2;
    fn neg(self) -> LVec2 {
        LVec2::new(-self.u1, -self.u2)
    }
}

impl Mul<f64> for LVec2 {
    type Output = LVec2;
    fn mul(self, k: f64) -> LVec2 {
        self.scale(k)
    }
}

impl From<DoubleNumber> for LVec2 {
    fn from(z: DoubleNumber) -> Self {
        Self::new(z.x, z.y)
    }
}

impl From<LVec2> for DoubleNumber {
    fn from(v: LVec2) -> Self {
        DoubleNumber::new(v.u1, v.u2)
    }
}

/// A point of the Minkowskian plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Signed squared interval `Δx² − Δy²` to `other`.
    pub fn interval_sq(self, other: Point) -> f64 {
        (other - self).norm_sq()
    }

    /// Hyperbolic distance `√|Δx² − Δy²|`.
    pub fn distance(self, other: Point) -> f64 {
        (other - self).norm()
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }
}

impl Sub for Point {
    type Output = LVec2;
    fn sub(self, p: Point) -> LVec2 {
        LVec2::new(self.x - p.x, self.y - p.y)
    }
}

impl Add<LVec2> for Point {
    type Output = Point;
    fn add(self, v: LVec2) -> Point {
        Point::new(self.x + v.u1, self.y + v.u2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalKind {
    Spacelike,
    Lightlike,
    Timelike,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pointing {
    Future,
    Past,
    Undefined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CausalClass {
    pub kind: CausalKind,
    pub pointing: Pointing,
}

impl CausalClass {
    pub fn is_future(&self) -> bool {
        self.pointing == Pointing::Future
    }
}

/// Classify `v` by the sign of `u1² − u2²`, treating values within
/// `tol · (u1² + u2²)` of zero as lightlike.
///
/// Spacelike vectors point by the sign of `u1`, timelike ones by the sign
/// of `u2`. Lightlike vectors (including zero) have undefined pointing.
pub fn causal_classify(v: LVec2, tol: f64) -> CausalClass {
    let q = v.norm_sq();
    let e = v.euclid_sq();
    let undefined = CausalClass {
        kind: CausalKind::Lightlike,
        pointing: Pointing::Undefined,
    };
    if e == 0.0 || q.abs() <= tol * e {
        return undefined;
    }
    let sign = |c: f64| {
        if c > 0.0 {
            Pointing::Future
        } else if c < 0.0 {
            Pointing::Past
        } else {
            Pointing::Undefined
        }
    };
    if q > 0.0 {
        CausalClass {
            kind: CausalKind::Spacelike,
            pointing: sign(v.u1),
        }
    } else {
        CausalClass {
            kind: CausalKind::Timelike,
            pointing: sign(v.u2),
        }
    }
}

/// Element `A(φ)` of the proper Lorentz group `SO⁺(1,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Boost {
    pub phi: f64,
}

impl Boost {
    pub const IDENTITY: Boost = Boost { phi: 0.0 };

    pub const fn new(phi: f64) -> Self {
        Self { phi }
    }

    /// `[[ch φ, sh φ], [sh φ, ch φ]]`.
    pub fn matrix(self) -> [[f64; 2]; 2] {
        let (c, s) = (self.phi.cosh(), self.phi.sinh());
        [[c, s], [s, c]]
    }

    pub fn apply(self, v: LVec2) -> LVec2 {
        let (c, s) = (self.phi.cosh(), self.phi.sinh());
        LVec2::new(v.u1 * c + v.u2 * s, v.u1 * s + v.u2 * c)
    }

    pub fn compose(self, other: Boost) -> Boost {
        Boost::new(self.phi + other.phi)
    }

    pub fn inverse(self) -> Boost {
        Boost::new(-self.phi)
    }
}

pub fn boost_apply(b: Boost, v: LVec2) -> LVec2 {
    b.apply(v)
}

/// Motion of the Minkowskian plane: a boost followed by a translation,
/// i.e. the affine map with matrix `[[ch φ, sh φ, tx], [sh φ, ch φ, ty], [0, 0, 1]]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Motion {
    pub phi: f64,
    pub tx: f64,
    pub ty: f64,
}

impl Motion {
    pub const IDENTITY: Motion = Motion {
        phi: 0.0,
        tx: 0.0,
        ty: 0.0,
    };

    pub const fn new(phi: f64, tx: f64, ty: f64) -> Self {
        Self { phi, tx, ty }
    }

    pub fn apply(self, p: Point) -> Point {
        let v = Boost::new(self.phi).apply(LVec2::new(p.x, p.y));
        Point::new(v.u1 + self.tx, v.u2 + self.ty)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Motion) -> Motion {
        let t = Boost::new(self.phi).apply(LVec2::new(other.tx, other.ty));
        Motion::new(self.phi + other.phi, t.u1 + self.tx, t.u2 + self.ty)
    }

    pub fn inverse(self) -> Motion {
        let t = Boost::new(-self.phi).apply(LVec2::new(-self.tx, -self.ty));
        Motion::new(-self.phi, t.u1, t.u2)
    }

    pub fn matrix(self) -> [[f64; 3]; 3] {
        let (c, s) = (self.phi.cosh(), self.phi.sinh());
        [[c, s, self.tx], [s, c, self.ty], [0.0, 0.0, 1.0]]
    }
}

pub fn motion_apply(m: Motion, p: Point) -> Point {
    m.apply(p)
}

/// Rapidity of a nonzero spacelike or timelike vector relative to the
/// reference unit of its kind, `(1, 0)` or `(0, 1)`.
fn rapidity(v: LVec2, kind: CausalKind) -> f64 {
    match kind {
        CausalKind::Spacelike => (v.u2 / v.u1).atanh(),
        _ => (v.u1 / v.u2).atanh(),
    }
}

/// Oriented angle `φ` from `x` to `y`: the rapidity with
/// `A(φ) x/‖x‖ = y/‖y‖`.
///
/// Both vectors must be future-pointing and of the same causal kind. The
/// angle is taken from the ratio of components (artanh), which keeps its
/// sign; `ch φ` from the inner product cannot.
pub fn oriented_angle(x: LVec2, y: LVec2) -> Result<f64> {
    let (cx, cy) = (x.classify(), y.classify());
    if cx.kind == CausalKind::Lightlike || cy.kind == CausalKind::Lightlike {
        return Err(Error::Lightlike);
    }
    if cx.kind != cy.kind {
        return Err(Error::MixedCausalType);
    }
    if !cx.is_future() || !cy.is_future() {
        return Err(Error::NotFuturePointing);
    }
    Ok(rapidity(y, cy.kind) - rapidity(x, cx.kind))
}

/// `ch φ` from the inner product: `⟨x,y⟩/(‖x‖‖y‖)` for spacelike pairs and
/// `−⟨x,y⟩/(‖x‖‖y‖)` for timelike ones. Used as a cross-check of
/// [`oriented_angle`].
pub fn angle_cosh(x: LVec2, y: LVec2) -> Result<f64> {
    let (cx, cy) = (x.classify(), y.classify());
    if cx.kind == CausalKind::Lightlike || cy.kind == CausalKind::Lightlike {
        return Err(Error::Lightlike);
    }
    if cx.kind != cy.kind {
        return Err(Error::MixedCausalType);
    }
    let c = x.dot(y) / (x.norm() * y.norm());
    Ok(if cx.kind == CausalKind::Timelike {
        -c
    } else {
        c
    })
}

/// Side opposite `Ĉ` from the Minkowskian cosine rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosineRuleSide {
    /// `√|a² + b² − 2ab ch Ĉ|`.
    pub length: f64,
    /// `a² + b² − 2ab ch Ĉ` with its sign.
    pub signed_sq: f64,
}

pub fn cosine_rule_side(a: f64, b: f64, angle_c: f64) -> CosineRuleSide {
    let signed_sq = a * a + b * b - 2.0 * a * b * angle_c.cosh();
    CosineRuleSide {
        length: signed_sq.abs().sqrt(),
        signed_sq,
    }
}

/// Checks the reversed polygon inequality `‖Σ vᵢ‖ ≥ Σ ‖vᵢ‖` for a list of
/// future-pointing vectors of one causal kind.
///
/// For valid input this always holds; it exists as an executable oracle.
pub fn reversed_polygon_check(vs: &[LVec2]) -> Result<bool> {
    let Some(first) = vs.first() else {
        return Ok(true);
    };
    let kind = first.classify().kind;
    for v in vs {
        let c = v.classify();
        if c.kind == CausalKind::Lightlike {
            return Err(Error::Lightlike);
        }
        if c.kind != kind {
            return Err(Error::MixedCausalType);
        }
        if !c.is_future() {
            return Err(Error::NotFuturePointing);
        }
    }
    let sum = vs.iter().fold(LVec2::default(), |acc, v| acc + *v);
    let total: f64 = vs.iter().map(|v| v.norm()).sum();
    Ok(sum.norm() >= total - 1e-9 * total.max(1.0))
}
