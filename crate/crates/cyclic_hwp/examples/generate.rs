//! Assemble the base cycles for (ell, n) given on the command line, default (9, 5).

use cyclic_hwp::{assemble, Params};

fn main() -> Result<(), cyclic_hwp::Error> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integer argument"));
    let ell = args.next().unwrap_or(9);
    let n = args.next().unwrap_or(5);
    let p = Params::new(ell, n)?;
    let base = assemble(&p)?;
    println!("order {} = {} x {}", p.order, p.ell, p.long_len);
    println!(
        "{} short base cycles, {} long base cycles",
        base.shorts.len(),
        base.longs.len()
    );
    for (i, c) in base.shorts.iter().enumerate() {
        let shown: Vec<String> = c.0.iter().map(|v| format!("({},{})", v.0, v.1)).collect();
        println!("short {i}: {}", shown.join(" "));
    }
    Ok(())
}
