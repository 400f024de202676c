//! Develop the base cycles into the full list of 2-factors.

use cyclic_hwp::{assemble, check_base, check_factorization, develop, Params};

fn main() -> Result<(), cyclic_hwp::Error> {
    let p = Params::new(9, 4)?;
    let base = assemble(&p)?;
    let fact = develop(&base, &check_base(&base))?;
    println!(
        "{} factors of {}-cycles, {} of {}-cycles",
        fact.short_count(),
        p.ell,
        fact.long_count(),
        p.long_len
    );
    for i in [0, fact.len() - 1] {
        let f = fact.factor(i).expect("index in range");
        println!(
            "factor {i} {:?}: {} cycles, first {:?}",
            f.id,
            f.cycles.len(),
            f.cycles[0].0
        );
    }
    println!("edge partition ok: {}", check_factorization(&fact, &p).ok);
    Ok(())
}
