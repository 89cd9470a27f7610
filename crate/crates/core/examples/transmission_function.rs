//! Output angle, coupler angle and transmission angle over an input sweep.

use mink4r::fourbar::{
    closure_residual, coupler_angle_of, solve_output_angle, transmission_angle, LinkageParams,
    SolveMode, SolverOptions,
};

fn main() -> mink4r::Result<()> {
    let p = LinkageParams::new(0.6, 1.0, 0.7, 0.5)?;
    let opts = SolverOptions::with_mode(SolveMode::Extended);
    println!(
        "{:>6} {:>5} {:>9} {:>10} {:>10} {:>10} {:>9}",
        "theta", "root", "branch", "psi", "phi", "zeta", "residual"
    );
    for i in 0..=12 {
        let theta = -3.0 + 0.5 * i as f64;
        let sols = match solve_output_angle(&p, theta, &opts) {
            Ok(s) => s,
            Err(e) => {
                println!("{theta:>6.2} {e}");
                continue;
            }
        };
        if sols.is_empty() {
            println!("{theta:>6.2} (no assembly)");
        }
        let zeta = transmission_angle(&p, theta)
            .map(|t| t.zeta)
            .unwrap_or(f64::NAN);
        for s in sols {
            let phi = coupler_angle_of(&p, theta, &s)
                .map(|c| c.phi)
                .unwrap_or(f64::NAN);
            println!(
                "{theta:>6.2} {:>5} {:>9} {:>10.6} {:>10.6} {:>10.6} {:>9.1e}",
                s.root.as_str(),
                s.branch.as_str(),
                s.psi,
                phi,
                zeta,
                closure_residual(&p, theta, &s)
            );
        }
    }
    Ok(())
}
