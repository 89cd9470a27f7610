//! Dense bivariate polynomials of total degree at most 6.

use std::ops::{Add, Mul, Neg, Sub};

pub const MAX_DEGREE: usize = 6;
const N: usize = MAX_DEGREE + 1;

/// `Σ c[i][j] Xⁱ Yʲ` with `i + j ≤ 6`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BiPoly {
    pub(crate) c: [[f64; N]; N],
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(k: f64) -> Self {
        let mut p = Self::zero();
        p.c[0][0] = k;
        p
    }

    /// `k0 + kx·X + ky·Y`.
    pub fn linear(k0: f64, kx: f64, ky: f64) -> Self {
        let mut p = Self::constant(k0);
        p.c[1][0] = kx;
        p.c[0][1] = ky;
        p
    }

    /// `k0 + kx·X + ky·Y + kxx·X² + kyy·Y²` (no mixed term needed here).
    pub fn quadratic(k0: f64, kx: f64, ky: f64, kxx: f64, kyy: f64) -> Self {
        let mut p = Self::linear(k0, kx, ky);
        p.c[2][0] = kxx;
        p.c[0][2] = kyy;
        p
    }

    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        self.c[i][j]
    }

    pub fn square(&self) -> Self {
        *self * *self
    }

    pub fn max_abs(&self) -> f64 {
        self.c.iter().flatten().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// Highest `i + j` with `|c[i][j]| > tol`.
    pub fn degree(&self, tol: f64) -> Option<usize> {
        let mut deg = None;
        for i in 0..N {
            for j in 0..N - i {
                if self.c[i][j].abs() > tol {
                    deg = Some(deg.map_or(i + j, |d: usize| d.max(i + j)));
                }
            }
        }
        deg
    }

    pub fn scale(&self, k: f64) -> Self {
        let mut out = *self;
        out.c.iter_mut().flatten().for_each(|v| *v *= k);
        out
    }

    /// Horner in `X` over Horner-in-`Y` rows.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let mut acc = 0.0;
        for i in (0..N).rev() {
            let mut row = 0.0;
            for j in (0..N - i).rev() {
                row = row * y + self.c[i][j];
            }
            acc = acc * x + row;
        }
        acc
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(mut self, o: BiPoly) -> BiPoly {
        for i in 0..N {
            for j in 0..N - i {
                self.c[i][j] += o.c[i][j];
            }
        }
        self
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, o: BiPoly) -> BiPoly {
        self + (-o)
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(-1.0)
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;

    /// Panics if the product would exceed total degree 6.
    fn mul(self, o: BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for i in 0..N {
            for j in 0..N - i {
                let a = self.c[i][j];
                if a == 0.0 {
                    continue;
                }
                for k in 0..N {
                    for l in 0..N - k {
                        let b = o.c[k][l];
                        if b == 0.0 {
                            continue;
                        }
                        assert!(i + j + k + l <= MAX_DEGREE, "product exceeds degree 6");
                        out.c[i + k][j + l] += a * b;
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_matches_pointwise() {
        let p = BiPoly::quadratic(1.0, -2.0, 0.5, 1.0, -1.0);
        let q = BiPoly::linear(3.0, 0.25, -4.0);
        let pq = p * q;
        for (x, y) in [(0.3, -1.2), (2.0, 5.0), (-3.5, 0.1)] {
            let lhs = pq.eval(x, y);
            let rhs = p.eval(x, y) * q.eval(x, y);
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
        }
        assert_eq!(pq.degree(0.0), Some(3));
        assert_eq!((pq.square()).degree(0.0), Some(6));
    }

    #[test]
    #[should_panic]
    fn degree_overflow_panics() {
        let p = BiPoly::linear(0.0, 1.0, 1.0);
        let _ = p.square().square() * p.square().square();
    }
}
