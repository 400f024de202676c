//! Base polygons for the short cycles and their lift with second-component labels.

use cyclic_hwp::short_cycles::{build_base_gons, build_d, lift_all};
use cyclic_hwp::{generate_skolem, Params};

fn main() -> Result<(), cyclic_hwp::Error> {
    let p = Params::new(9, 5)?;
    let reserved = build_d(&p);
    println!("reserved differences {:?}", reserved.values());
    let seq = generate_skolem(p.n - 2 * p.quarter)?;
    let gons = build_base_gons(&p, Some(&seq), &reserved)?;
    for g in &gons.gons {
        println!(
            "polygon {:?}, alternating: {}",
            g.vertices,
            g.is_alternating(&p)
        );
    }
    let lifted = lift_all(&p, &gons, &reserved, 0)?;
    println!("label shift {}", lifted.mu);
    for c in &lifted.cycles {
        println!("{:?}", c.0);
    }
    Ok(())
}
