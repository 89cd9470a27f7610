//! Sample random linkages and tabulate movement types by subclass.

use std::collections::BTreeMap;

use mink4r::classify::classify;
use mink4r::fourbar::LinkageParams;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut table: BTreeMap<(String, String), usize> = BTreeMap::new();
    for _ in 0..100_000 {
        let mut len = || rng.gen_range(0.1..3.0);
        let p = LinkageParams {
            a: len(),
            b: len(),
            g: len(),
            h: len(),
        };
        let name = match classify(&p) {
            Ok(c) => (c.subclass.to_string(), c.type_name()),
            Err(e) => ("-".into(), e.to_string()),
        };
        *table.entry(name).or_default() += 1;
    }
    for ((sub, ty), n) in table {
        println!("{sub:<12} {ty:<26} {n:>6}");
    }
}
