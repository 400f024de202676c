//! A pair of long cycles sharing two second-component labels.

use cyclic_hwp::long_cycles::{build_pair, LongPairSpec};

fn main() -> Result<(), cyclic_hwp::Error> {
    let spec = LongPairSpec {
        d1: 1,
        d2: 3,
        t: 7,
        x: 3,
        y: 4,
    };
    let (first, second) = build_pair(&spec)?;
    for cycle in [first, second] {
        let mut firsts: Vec<i64> = cycle.iter().map(|v| v.0).collect();
        println!("{cycle:?}");
        firsts.sort_unstable();
        assert_eq!(firsts, (0..=2 * spec.t).collect::<Vec<_>>());
    }
    Ok(())
}
