//! The sign maps that drive the two completion cycles.

use cyclic_hwp::completion::{build_completion_cycles, g_properties_hold, RHO};
use cyclic_hwp::{assemble, Params};

fn main() -> Result<(), cyclic_hwp::Error> {
    let p = Params::new(9, 5)?;
    let pr = assemble(&p)?
        .provenance
        .expect("assemble records its inputs");
    let span = p.half_span();
    let show = |m: &cyclic_hwp::signmap::SignMap| {
        (2..span)
            .map(|x| format!("{:>2}", m.at(x)))
            .collect::<String>()
    };
    println!("F: {}", show(&pr.big_f));
    println!("G: {}", show(&pr.big_g));
    println!("flipped {} values: {:?}", pr.flip_count, pr.flipped);
    println!(
        "G properties hold: {}",
        g_properties_hold(&pr.big_f, &pr.big_g, RHO, &p)
    );
    let cc = build_completion_cycles(&p, &pr.big_f, &pr.big_g)?;
    let heights: Vec<i64> = cc
        .heights
        .iter()
        .map(|y| y.rem_euclid(p.ell as i64))
        .collect();
    println!("heights {heights:?}");
    Ok(())
}
