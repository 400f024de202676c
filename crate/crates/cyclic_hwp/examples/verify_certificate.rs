//! Write a certificate, read it back in both formats and check it.

use cyclic_hwp::certificate::Certificate;
use cyclic_hwp::{assemble, check_base, check_factorization, develop, Params};

fn main() -> Result<(), cyclic_hwp::Error> {
    let p = Params::new(13, 6)?;
    let cert = Certificate::from_base(&assemble(&p)?, false);
    let text = cert.to_text();
    println!("{}", text.lines().take(2).collect::<Vec<_>>().join("\n"));

    let base = Certificate::parse(&text)?.to_base()?;
    assert_eq!(Certificate::parse(&cert.to_json())?, cert);
    let report = check_base(&base);
    println!("difference check: ok={}", report.ok);
    let full = check_factorization(&develop(&base, &report)?, &p);
    println!("edge check: ok={}", full.ok);

    let mut broken = cert.clone();
    broken.short_base_cycles[0].swap(0, 1);
    let report = check_base(&broken.to_base()?);
    println!(
        "after swapping two vertices: ok={} missing={} duplicated={}",
        report.ok,
        report.missing.len(),
        report.duplicated.len()
    );
    Ok(())
}
