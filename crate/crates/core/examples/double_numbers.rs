//! Split-complex arithmetic, causal classes and boosts.

use mink4r::double_plane::DoubleNumber;
use mink4r::lorentz2::{causal_classify, oriented_angle, Boost, LVec2, CAUSAL_TOL};

fn main() {
    let z = DoubleNumber::new(3.0, 1.0);
    let w = DoubleNumber::from_polar(2.0, 0.5);
    println!("z = {z}, w = {w}");
    println!("z * w = {}", z * w);
    println!("|z|^2 = {} (z * conj z = {})", z.norm_sq(), z * z.conj());
    println!("j * j = {}", DoubleNumber::J * DoubleNumber::J);

    for v in [
        LVec2::new(2.0, 1.0),
        LVec2::new(1.0, -3.0),
        LVec2::new(1.0, 1.0),
    ] {
        let c = causal_classify(v, CAUSAL_TOL);
        println!("{v:?}: {:?}, {:?}", c.kind, c.pointing);
    }

    let x = LVec2::spacelike_unit(0.2);
    let y = Boost::new(0.9).apply(x).scale(3.0);
    println!("angle from x to y = {:.12}", oriented_angle(x, y).unwrap());
}
