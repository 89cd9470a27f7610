//! Invariants of the position solver and the limit/branching formulas.

mod common;

use mink4r::classify::{classify, MovementType};
use mink4r::fourbar::{
    branching_points, closure_residual, constraint_coeffs, pose, solve_output_angle,
    transmission_angle, Branch, Branching, LinkageParams, OutputSolution, SolveMode, SolverOptions,
};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = LinkageParams> {
    let len = || 0.2..3.0f64;
    (len(), len(), len(), len()).prop_map(|(a, b, g, h)| common::lp(a, b, g, h))
}

fn mode() -> impl Strategy<Value = SolveMode> {
    prop_oneof![Just(SolveMode::Strict), Just(SolveMode::Extended)]
}

fn solve(p: &LinkageParams, theta: f64, mode: SolveMode) -> Option<Vec<OutputSolution>> {
    solve_output_angle(p, theta, &SolverOptions::with_mode(mode)).ok()
}

fn same_psi(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-8 * x.abs().max(1.0)
}

proptest! {
    #[test]
    fn solutions_close_the_loop(p in params(), theta in -3.0..3.0f64, m in mode()) {
        let Some(sols) = solve(&p, theta, m) else { return Ok(()) };
        for s in &sols {
            let r = closure_residual(&p, theta, s);
            prop_assert!(r.abs() <= 1e-9 * (p.h * p.h).max(1.0), "{s:?} residual {r:e}");
            if m == SolveMode::Strict {
                prop_assert_eq!(s.branch, Branch::Standard);
            }
        }
    }

    #[test]
    fn strict_solutions_are_a_subset_of_extended(p in params(), theta in -3.0..3.0f64) {
        let (Some(strict), Some(ext)) = (solve(&p, theta, SolveMode::Strict), solve(&p, theta, SolveMode::Extended)) else {
            return Ok(());
        };
        for s in &strict {
            prop_assert!(ext.iter().any(|e| e.root == s.root && e.branch == s.branch && same_psi(e.psi, s.psi)));
        }
        prop_assert!(ext.len() >= strict.len());
    }

    #[test]
    fn mirror_symmetry_negates_both_angles(p in params(), theta in -3.0..3.0f64, m in mode()) {
        let (Some(fwd), Some(back)) = (solve(&p, theta, m), solve(&p, -theta, m)) else { return Ok(()) };
        prop_assert_eq!(fwd.len(), back.len());
        for s in &fwd {
            prop_assert!(back.iter().any(|t| t.branch == s.branch && same_psi(t.psi, -s.psi)),
                "{s:?} has no mirror image in {back:?}");
        }
    }

    #[test]
    fn uniform_scaling_keeps_angles(p in params(), k in 0.05..20.0f64, theta in -3.0..3.0f64, m in mode()) {
        let (Some(base), Some(scaled)) = (solve(&p, theta, m), solve(&p.scaled(k), theta, m)) else {
            return Ok(());
        };
        prop_assert_eq!(base.len(), scaled.len());
        for (s, t) in base.iter().zip(&scaled) {
            prop_assert_eq!((s.root, s.branch), (t.root, t.branch));
            prop_assert!(same_psi(s.psi, t.psi));
        }
    }

    #[test]
    fn parallelogram_follows_the_input(a in 0.2..3.0f64, g in 0.2..3.0f64, theta in -3.0..3.0f64) {
        prop_assume!((a - g).abs() > 1e-3);
        let p = common::lp(a, a, g, g);
        let sols = solve(&p, theta, SolveMode::Strict).unwrap();
        prop_assert!(sols.iter().any(|s| s.branch == Branch::Standard && (s.psi - theta).abs() <= 1e-9 * theta.abs().max(1.0)),
            "{sols:?}");
    }

    #[test]
    fn pose_has_the_link_lengths(p in params(), theta in -2.0..2.0f64) {
        let Some(sols) = solve(&p, theta, SolveMode::Extended) else { return Ok(()) };
        for s in &sols {
            let ps = pose(&p, theta, s);
            let scale = ps.b.x.abs().max(ps.b.y.abs()).max(1.0).powi(2);
            prop_assert!((ps.o.interval_sq(ps.a) - p.a * p.a).abs() <= 1e-12 * scale);
            prop_assert!((ps.c.interval_sq(ps.b) - p.b * p.b).abs() <= 1e-12 * scale);
            prop_assert!((ps.o.interval_sq(ps.c) - p.g * p.g).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn transmission_diagonals_agree(p in params(), theta in -3.0..3.0f64) {
        let Ok(t) = transmission_angle(&p, theta) else { return Ok(()) };
        let scale = (p.g * p.g + p.a * p.a) * theta.cosh();
        prop_assert!((t.diag_sq_input - t.diag_sq_output).abs() <= 1e-12 * scale);
        prop_assert!(t.zeta >= 0.0);
    }

    #[test]
    fn discrete_branching_zeroes_the_leading_coefficient(p in params()) {
        let Branching::Discrete { ch_theta, realizable: true } = branching_points(&p) else { return Ok(()) };
        let theta = ch_theta.acosh();
        let k = constraint_coeffs(&p, theta);
        let scale = k.ch_coeff.abs() + k.rhs.abs();
        prop_assert!((k.ch_coeff + k.rhs).abs() <= 1e-9 * scale.max(1.0));
    }
}

/// Number of maximal runs of feasible samples on an evenly spaced grid.
fn feasible_runs(p: &LinkageParams) -> usize {
    let opts = SolverOptions::with_mode(SolveMode::Extended);
    let mut runs = 0;
    let mut prev = false;
    for i in 0..=1600 {
        let theta = -8.0 + 0.01 * i as f64;
        // branching and isotropic positions are assembled
        let f = solve_output_angle(p, theta, &opts).map_or(true, |s| !s.is_empty());
        if f && !prev {
            runs += 1;
        }
        prev = f;
    }
    runs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn input_type_counts_feasible_ranges(p in params()) {
        let Ok(c) = classify(&p) else { return Ok(()) };
        let expected = match c.input_type {
            MovementType::Crank => 1,
            MovementType::Rocker => 2,
            MovementType::Superrocker => 3,
        };
        prop_assert_eq!(feasible_runs(&p), expected, "{:?} {:?}", p, c.t);
    }
}
