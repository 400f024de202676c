//! Skolem sequences of small orders, ordinary for orders 0 or 1 mod 4 and hooked otherwise.

use cyclic_hwp::{generate_skolem, validate_skolem};

fn main() -> Result<(), cyclic_hwp::Error> {
    for order in 1..=12 {
        let s = generate_skolem(order)?;
        let mut slots = vec![0u32; 2 * order as usize + 1];
        for (i, &a) in s.entries.iter().enumerate() {
            let d = i as u32 + 1;
            slots[a as usize - 1] = d;
            slots[(a + d) as usize - 1] = d;
        }
        let row: Vec<String> = slots
            .iter()
            .map(|&d| if d == 0 { "_".into() } else { d.to_string() })
            .collect();
        println!(
            "{order:>2} {:?}: {} (valid: {})",
            s.flavor,
            row.join(" "),
            validate_skolem(&s)
        );
    }
    Ok(())
}
