//! Paths on two integer intervals whose edge lengths are all distinct.

use cyclic_hwp::alpha_path::{all_specs, build_interval_path, validate};

fn main() -> Result<(), cyclic_hwp::Error> {
    let (a, b, c, d) = (5, 12, 40, 47);
    for spec in all_specs(a, b, c, d).into_iter().take(4) {
        let path = build_interval_path(&spec)?;
        let lengths: Vec<i64> = path.0.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
        println!("{:?} index {}: {:?}", spec.case, spec.index, path.0);
        println!("  lengths {lengths:?}, valid: {}", validate(&path, &spec));
    }
    Ok(())
}
