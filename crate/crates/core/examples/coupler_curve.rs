//! Trace a coupler point and check it against the implicit sextic.

use mink4r::coupler_curve::{sextic_coefficients, trace_curve, CouplerPoint};
use mink4r::fourbar::{LinkageParams, SolveMode, SolverOptions};
use mink4r::io_cli::report::monomial_name;

fn main() -> mink4r::Result<()> {
    let p = LinkageParams::new(0.6, 1.0, 0.7, 0.5)?;
    let pt = CouplerPoint::new(-0.8, 0.3);
    let opts = SolverOptions::with_mode(SolveMode::Extended);

    let trace = trace_curve(&p, &pt, -3.0, 3.0, 241, &opts)?;
    let curve = sextic_coefficients(&p, &pt)?;
    println!(
        "degree {:?}, {} nonzero terms",
        curve.degree(),
        curve.monomials().len()
    );
    for (i, j, c) in curve.monomials().into_iter().take(6) {
        println!("  {:<8} {c:+.6e}", monomial_name(i, j));
    }

    for line in &trace.polylines {
        let worst = line
            .points
            .iter()
            .map(|q| curve.normalized_residual(q.x, q.y))
            .fold(0.0, f64::max);
        println!(
            "{}-{}: {} points, theta {:.3}..{:.3}, max residual {worst:.1e}",
            line.root.as_str(),
            line.branch.as_str(),
            line.points.len(),
            line.points[0].theta,
            line.points[line.points.len() - 1].theta
        );
    }
    Ok(())
}
