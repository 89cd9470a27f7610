//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use mink4r::fourbar::{Branch, LinkageParams};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn lp(a: f64, b: f64, g: f64, h: f64) -> LinkageParams {
    LinkageParams::new(a, b, g, h).unwrap()
}

/// Four lengths drawn uniformly from `[lo, hi)`.
pub fn random_params(r: &mut impl Rng, lo: f64, hi: f64) -> LinkageParams {
    lp(
        r.gen_range(lo..hi),
        r.gen_range(lo..hi),
        r.gen_range(lo..hi),
        r.gen_range(lo..hi),
    )
}

pub fn rel_close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0)
}

/// `‖AB‖² − h²` with `B` on the given branch at output angle `psi`.
pub fn closure_fn(p: &LinkageParams, theta: f64, branch: Branch, psi: f64) -> f64 {
    let s = match branch {
        Branch::Standard => 1.0,
        Branch::Reversed => -1.0,
    };
    // x − y and x + y of B − A
    let minus = p.g + s * p.b * (-psi).exp() - p.a * (-theta).exp();
    let plus = p.g + s * p.b * psi.exp() - p.a * theta.exp();
    minus * plus - p.h * p.h
}

fn bisect(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Minimizer of `|f|` on `[lo, hi]` by golden-section search.
fn golden_min(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - r * (hi - lo);
    let mut x2 = lo + r * (hi - lo);
    let (mut f1, mut f2) = (f(x1).abs(), f(x2).abs());
    for _ in 0..100 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = f(x1).abs();
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = f(x2).abs();
        }
    }
    0.5 * (lo + hi)
}

/// Roots of `f` on `[lo, hi]`: sign changes on a uniform grid refined by
/// bisection, plus near-tangent roots found at local extrema of `f`.
pub fn grid_roots(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, step: f64, touch_tol: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).ceil() as usize;
    let xs: Vec<f64> = (0..=n).map(|i| (lo + step * i as f64).min(hi)).collect();
    let fs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut roots = Vec::new();
    for i in 0..n {
        if fs[i] == 0.0 {
            roots.push(xs[i]);
        } else if (fs[i] < 0.0) != (fs[i + 1] < 0.0) && fs[i + 1] != 0.0 {
            roots.push(bisect(f, xs[i], xs[i + 1]));
        }
    }
    if fs[n] == 0.0 {
        roots.push(xs[n]);
    }
    // a pair of roots closer than one step shows up as an extremum without a sign change
    for i in 1..n {
        let (f0, f1, f2) = (fs[i - 1], fs[i], fs[i + 1]);
        let same_sign = (f0 < 0.0) == (f1 < 0.0) && (f1 < 0.0) == (f2 < 0.0);
        if same_sign && (f1 - f0) * (f2 - f1) < 0.0 && f1.abs() < f0.abs().max(f2.abs()) {
            let m = golden_min(f, xs[i - 1], xs[i + 1]);
            let fm = f(m);
            if (fm < 0.0) != (f1 < 0.0) {
                roots.push(bisect(f, xs[i - 1], m));
                roots.push(bisect(f, m, xs[i + 1]));
            } else if fm.abs() <= touch_tol {
                roots.push(m);
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

/// Every `(branch, ψ)` with `ψ ∈ [−6, 6]` that closes the loop, found by
/// sampling at step `1e−3`.
pub fn brute_force_solutions(p: &LinkageParams, theta: f64) -> Vec<(Branch, f64)> {
    let scale = (p.a + p.b + p.g + p.h).powi(2);
    let mut out = Vec::new();
    for branch in [Branch::Standard, Branch::Reversed] {
        let f = |psi: f64| closure_fn(p, theta, branch, psi);
        for r in grid_roots(&f, -6.0, 6.0, 1e-3, 1e-12 * scale) {
            out.push((branch, r));
        }
    }
    out
}
