//! Double (split-complex) numbers `x + jy` with `j² = 1`.
//!
//! They serve as coordinates of the Minkowskian plane in the same way the
//! complex numbers serve the Euclidean plane. The quadratic form is
//! `z·z̄ = x² − y²`, which vanishes on the isotropic lines `y = ±x`.
//!
//! No division is provided: the isotropic lines are zero divisors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A double number `x + jy`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DoubleNumber {
    /// Real part.
    pub x: f64,
    /// Unipotent part.
    pub y: f64,
}

impl DoubleNumber {
    pub const ONE: DoubleNumber = DoubleNumber { x: 1.0, y: 0.0 };
    pub const J: DoubleNumber = DoubleNumber { x: 0.0, y: 1.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Checked constructor; rejects NaN and infinities.
    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(Error::NonFinite("double number"))
        }
    }

    /// `r·e^{jφ} = r(ch φ + j sh φ)`, a point on the right branch of the
    /// Minkowskian circle of radius `r`.
    pub fn from_polar(r: f64, phi: f64) -> Self {
        Self::new(r * phi.cosh(), r * phi.sinh())
    }

    pub fn conj(self) -> Self {
        Self::new(self.x, -self.y)
    }

    /// `⟨z, w⟩ = Re(z w̄) = xu − yv`.
    pub fn scalar_product(self, w: Self) -> f64 {
        self.x * w.x - self.y * w.y
    }

    /// The signed quadratic form `x² − y²`.
    pub fn norm_sq(self) -> f64 {
        // (x − y)(x + y) keeps precision near the isotropic lines.
        (self.x - self.y) * (self.x + self.y)
    }

    /// Hyperbolic modulus `√|x² − y²|`.
    pub fn modulus(self) -> f64 {
        self.norm_sq().abs().sqrt()
    }

    /// True when `|x² − y²| ≤ tol · max(1, x² + y²)`.
    pub fn is_isotropic(self, tol: f64) -> bool {
        let euclid = self.x * self.x + self.y * self.y;
        self.norm_sq().abs() <= tol * euclid.max(1.0)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Mul for DoubleNumber {
    type Output = DoubleNumber;

    /// `(x + yj)(r + sj) = (xr + ys) + j(xs + yr)`.
    fn mul(self, w: DoubleNumber) -> DoubleNumber {
        DoubleNumber::new(self.x * w.x + self.y * w.y, self.x * w.y + self.y * w.x)
    }
}

impl Mul<f64> for DoubleNumber {
    type Output = DoubleNumber;

    fn mul(self, k: f64) -> DoubleNumber {
        DoubleNumber::new(self.x * k, self.y * k)
    }
}

impl Add for DoubleNumber {
    type Output = DoubleNumber;

    fn add(self, w: DoubleNumber) -> DoubleNumber {
        DoubleNumber::new(self.x + w.x, self.y + w.y)
    }
}

impl Sub for DoubleNumber {
    type Output = DoubleNumber;

    fn sub(self, w: DoubleNumber) -> DoubleNumber {
        DoubleNumber::new(self.x - w.x, self.y - w.y)
    }
}

impl Neg for DoubleNumber {
    type Output = DoubleNumber;

    fn neg(self) -> DoubleNumber {
        DoubleNumber::new(-self.x, -self.y)
    }
}

impl fmt::Display for DoubleNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_sign_negative() {
            write!(f, "{} - {}j", self.x, -self.y)
        } else {
            write!(f, "{} + {}j", self.x, self.y)
        }
    }
}

pub fn mul(z: DoubleNumber, w: DoubleNumber) -> DoubleNumber {
    z * w
}

pub fn conj(z: DoubleNumber) -> DoubleNumber {
    z.conj()
}

pub fn hyperbolic_scalar_product(z: DoubleNumber, w: DoubleNumber) -> f64 {
    z.scalar_product(w)
}

pub fn hyperbolic_modulus(z: DoubleNumber) -> f64 {
    z.modulus()
}

pub fn is_isotropic(z: DoubleNumber, tol: f64) -> bool {
    z.is_isotropic(tol)
}

pub fn from_polar(r: f64, phi: f64) -> DoubleNumber {
    DoubleNumber::from_polar(r, phi)
}

/// Point `(r ch t, r sh t)` of the Minkowskian circle `x² − y² = r²`.
pub fn minkowski_circle_point(r: f64, t: f64) -> (f64, f64) {
    (r * t.cosh(), r * t.sinh())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dn(x: f64, y: f64) -> DoubleNumber {
        DoubleNumber::new(x, y)
    }

    #[test]
    fn product_rule() {
        assert_eq!(mul(DoubleNumber::ONE, dn(2.5, -7.0)), dn(2.5, -7.0));
        assert_eq!(mul(DoubleNumber::J, DoubleNumber::J), dn(1.0, 0.0));
        assert_eq!(mul(dn(2.0, 1.0), dn(3.0, 2.0)), dn(8.0, 7.0));
    }

    #[test]
    fn conjugate() {
        assert_eq!(conj(dn(3.0, 2.0)), dn(3.0, -2.0));
        assert_eq!(conj(dn(5.0, 0.0)), dn(5.0, 0.0));
        assert_eq!(mul(dn(3.0, 2.0), conj(dn(3.0, 2.0))), dn(5.0, 0.0));
    }

    #[test]
    fn scalar_product_and_modulus() {
        assert_eq!(hyperbolic_scalar_product(dn(1.0, 0.0), dn(0.0, 1.0)), 0.0);
        assert_eq!(hyperbolic_scalar_product(dn(1.0, 1.0), dn(1.0, 1.0)), 0.0);
        assert_eq!(hyperbolic_scalar_product(dn(3.0, 2.0), dn(2.0, 1.0)), 4.0);
        assert_eq!(hyperbolic_modulus(dn(3.0, 0.0)), 3.0);
        assert_eq!(hyperbolic_modulus(dn(1.0, 1.0)), 0.0);
        assert_eq!(hyperbolic_modulus(dn(5.0, 3.0)), 4.0);
    }

    #[test]
    fn isotropic_lines() {
        assert!(is_isotropic(dn(2.0, 2.0), 1e-12));
        assert!(is_isotropic(dn(2.0, -2.0), 1e-12));
        assert!(!is_isotropic(dn(2.0, 1.0), 1e-12));
        // relative tolerance keeps large coordinates classified correctly
        assert!(is_isotropic(dn(1e8, 1e8 * (1.0 + 1e-15)), 1e-12));
        assert!(!is_isotropic(dn(1e8, 0.9e8), 1e-12));
    }

    #[test]
    fn polar_form() {
        assert_eq!(from_polar(2.0, 0.0), dn(2.0, 0.0));
        let z = from_polar(1.0, 1.0);
        assert!((z.x - 1.5430806348152437).abs() < 1e-15);
        assert!((z.y - 1.1752011936438014).abs() < 1e-15);
        let w = from_polar(3.0, -0.7);
        assert!((hyperbolic_modulus(w) - 3.0).abs() < 1e-12 * 3.0);
        assert!(w.y < 0.0 && w.x > 0.0);
    }

    #[test]
    fn circle_points() {
        assert_eq!(minkowski_circle_point(1.0, 0.0), (1.0, 0.0));
        let (x, y) = minkowski_circle_point(2.0, 1.0);
        assert_eq!((x, y), (2.0 * 1f64.cosh(), 2.0 * 1f64.sinh()));
        let (x, y) = minkowski_circle_point(1.5, -2.0);
        assert!(((x * x - y * y) - 2.25).abs() <= 1e-12 * 2.25);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(DoubleNumber::try_new(f64::NAN, 0.0).is_err());
        assert!(DoubleNumber::try_new(1.0, f64::INFINITY).is_err());
        assert!(DoubleNumber::try_new(1.0, 2.0).is_ok());
    }
}
