//! Classification of the four reference linkages shipped in `configs/`.

use mink4r::classify::classify;
use mink4r::fourbar::LinkageParams;

fn main() -> mink4r::Result<()> {
    let linkages = [
        (1.0, 1.0, 4.0, 1.0),
        (1.2, 0.4, 0.4, 0.4),
        (0.5, 1.0, 2.0, 2.5),
        (0.6, 1.0, 0.7, 0.5),
    ];
    for (a, b, g, h) in linkages {
        let p = LinkageParams::new(a, b, g, h)?;
        let c = classify(&p)?;
        let t = c.t.as_array();
        println!("a={a} b={b} g={g} h={h}");
        println!("  T = {t:?}");
        println!(
            "  ch theta in [{}, {}], ch psi in [{}, {}]",
            c.limits.ch_theta_min, c.limits.ch_theta_max, c.limits.ch_psi_min, c.limits.ch_psi_max
        );
        println!("  branching: {:?}", c.branching);
        println!(
            "  {} {}, grashof analog {}",
            c.subclass,
            c.type_name(),
            c.grashof
        );
    }
    Ok(())
}
