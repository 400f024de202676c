//! Acceptance checks, one line per criterion. Runs without the default harness so the
//! summary lines always reach the terminal.

use std::collections::BTreeSet;
use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use cyclic_hwp::alpha_path::{
    all_specs, build_interval_path, enumerate_interval_paths, validate, IntervalPathSpec,
};
use cyclic_hwp::certificate::Certificate;
use cyclic_hwp::completion::{build_completion_cycles, build_g, g_properties_hold, RHO};
use cyclic_hwp::group::{DiffMultiset, LiftedCycle};
use cyclic_hwp::long_cycles::build_long_set;
use cyclic_hwp::short_cycles::{
    alternating_partial_sum, build_base_gons, build_d, cycle_from_pairs, lift_all, lift_gon,
    p_cycle, partial_sum_closed_form, q_cycle, Closing,
};
use cyclic_hwp::skolem::Flavor;
use cyclic_hwp::{
    assemble, check_base, check_factorization, develop, generate_skolem, validate_skolem, Params,
    Vertex,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let spent = start.elapsed();
    if spent > limit {
        Err(format!("took {spent:.2?}, limit {limit:?}"))
    } else {
        Ok(spent)
    }
}

fn sweep() -> Vec<Params> {
    let mut out = Vec::new();
    for ell in [9u32, 13, 17, 21] {
        let k = (ell - 1) / 4;
        for n in 2 * k..=2 * k + 7 {
            out.push(Params::new(ell, n).expect("grid parameters are valid"));
        }
    }
    out
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let p = Params::new(9, 5).unwrap();
    let d = build_d(&p);
    ensure!(d.values() == vec![2, 5], "reserved set {:?}", d.values());

    let seq = generate_skolem(1).unwrap();
    let gons = build_base_gons(&p, Some(&seq), &d).map_err(|e| e.to_string())?;
    ensure!(
        gons.skolem_cycles[0].0 == vec![-3, 25, 7, 15, 24, 5, 34, -4, 36],
        "A_1 = {:?}",
        gons.skolem_cycles[0].0
    );
    let b_expected: [[i64; 8]; 4] = [
        [0, -3, 1, -5, 2, -40, 3, -41],
        [0, -10, 1, -11, 2, -13, 3, -14],
        [0, -20, 1, -21, 2, -23, 3, -24],
        [0, -30, 1, -31, 2, -33, 3, -34],
    ];
    for (i, want) in b_expected.iter().enumerate() {
        ensure!(
            gons.gons[i].vertices == want.to_vec(),
            "B_{} = {:?}",
            i + 1,
            gons.gons[i].vertices
        );
    }

    let (longs, f) = build_long_set(&p, &d).map_err(|e| e.to_string())?;
    let mut diffs = DiffMultiset::new(&p);
    for c in &longs {
        diffs.add_cycle(c, &p);
    }
    let mut want = BTreeSet::new();
    for a in 1..91 {
        for b in [3i64, 4, -3, -4] {
            want.insert(Vertex::reduce(a, b, &p));
        }
    }
    for (a, b) in [(2, -1), (5, -1), (-2, 1), (-5, 1)] {
        want.insert(Vertex::reduce(a, b, &p));
    }
    let got: BTreeSet<Vertex> = diffs.iter().map(|(v, _)| v).collect();
    ensure!(
        got == want && diffs.total() == want.len() as u64,
        "long differences differ"
    );
    ensure!(
        f.get(2) == Some(-1) && f.get(5) == Some(-1),
        "f(2), f(5) = {:?}, {:?}",
        f.get(2),
        f.get(5)
    );

    let q_expected = [
        vec![0, 1, 2, 3, 4, 5, 6, 7, 8],
        vec![0, 1, 2, 3, 4, 5, 6, 8, 7],
        vec![0, 1, 2, 3, 4, 5, 7, 8, 6],
    ];
    for (i, want) in q_expected.iter().enumerate() {
        ensure!(&q_cycle(&p, i as i64 + 1).unwrap() == want, "Q_{}", i + 1);
    }
    let p_expected: [[u32; 9]; 9] = [
        [0, 7, 8, 1, 2, 3, 5, 6, 4],
        [0, 1, 8, 7, 6, 5, 3, 2, 4],
        [0, 7, 6, 8, 1, 2, 3, 5, 4],
        [0, 8, 7, 6, 5, 3, 1, 2, 4],
        [0, 2, 3, 4, 5, 7, 8, 6, 1],
        [0, 7, 6, 5, 4, 2, 1, 3, 8],
        [0, 2, 3, 1, 8, 7, 6, 5, 4],
        [0, 8, 1, 2, 3, 5, 7, 6, 4],
        [0, 2, 1, 8, 7, 6, 5, 3, 4],
    ];
    for (mu, want) in p_expected.iter().enumerate() {
        ensure!(p_cycle(&p, mu as i64) == want.to_vec(), "P_{mu}");
    }

    let lifted = lift_all(&p, &gons, &d, 0).map_err(|e| e.to_string())?;
    ensure!(lifted.mu == 6, "mu = {}", lifted.mu);
    let b46 = LiftedCycle::from_pairs(
        &[
            (0, 0),
            (-30, 2),
            (1, 3),
            (-31, 1),
            (2, 8),
            (-33, 7),
            (3, 6),
            (-34, 5),
            (0, 4),
        ],
        &p,
    );
    ensure!(lifted.cycles[4] == b46, "B'_(4,6) = {:?}", lifted.cycles[4]);
    for (x, v) in [(17, -2), (26, 2), (3, -1)] {
        ensure!(
            lifted.phi.get(x) == Some(v),
            "phi({x}) = {:?}",
            lifted.phi.get(x)
        );
    }

    let base = assemble(&p).map_err(|e| e.to_string())?;
    let pr = base.provenance.as_ref().unwrap();
    ensure!(pr.flip_count == 8, "flip count {}", pr.flip_count);
    ensure!(
        pr.flipped == vec![10, 11, 12, 13, 14, 18, 20, 21],
        "flip set {:?}",
        pr.flipped
    );
    let cc = build_completion_cycles(&p, &pr.big_f, &pr.big_g).map_err(|e| e.to_string())?;
    let ys: Vec<i64> = cc.heights.iter().map(|y| y.rem_euclid(9)).collect();
    let first = [
        0, 1, 2, 3, 2, 1, 2, 1, 0, 8, 7, 6, 5, 6, 7, 0, 8, 0, 8, 7, 6, 5, 3, 4, 6, 7, 8, 7, 5, 4,
        6, 8, 7, 6, 5, 4, 3, 4, 5, 4, 3, 2, 1,
    ];
    ensure!(ys[2..45] == first, "first height run {:?}", &ys[2..45]);
    ensure!(
        ys[44] == 1 && ys[87..90] == [0, 2, 0],
        "anchors {} {:?}",
        ys[44],
        &ys[87..90]
    );
    let spent = within(start, Duration::from_secs(1))?;
    Ok(format!("worked instance reproduced in {spent:.2?}"))
}

fn base_sweep() -> Outcome {
    let start = Instant::now();
    let grid = sweep();
    for p in &grid {
        let base = assemble(p).map_err(|e| format!("({}, {}): {e}", p.ell, p.n))?;
        let r = check_base(&base);
        ensure!(
            r.ok,
            "({}, {}): {} missing, {} duplicated, {} faults",
            p.ell,
            p.n,
            r.missing.len(),
            r.duplicated.len(),
            r.transversality_failures.len()
        );
    }
    let spent = within(start, Duration::from_secs(30))?;
    Ok(format!(
        "{} instances covered exactly once in {spent:.2?}",
        grid.len()
    ))
}

fn full_factorizations() -> Outcome {
    let start = Instant::now();
    for (ell, n) in [(9, 4), (9, 5), (9, 6), (9, 7), (13, 6)] {
        let p = Params::new(ell, n).unwrap();
        let base = assemble(&p).map_err(|e| e.to_string())?;
        let fact = develop(&base, &check_base(&base)).map_err(|e| e.to_string())?;
        ensure!(
            fact.short_count() == p.short_factors as usize
                && fact.long_count() == p.long_factors as usize,
            "({ell}, {n}): factor counts {} and {}",
            fact.short_count(),
            fact.long_count()
        );
        let v = p.order as u64;
        ensure!(
            fact.len() as u64 * v == v * (v - 1) / 2,
            "({ell}, {n}): edge total mismatch"
        );
        let r = check_factorization(&fact, &p);
        ensure!(
            r.ok,
            "({ell}, {n}): {:?}",
            r.transversality_failures.first()
        );
    }
    let spent = within(start, Duration::from_secs(120))?;
    Ok(format!(
        "5 factorizations partition the complete graph in {spent:.2?}"
    ))
}

fn skolem_suite() -> Outcome {
    let start = Instant::now();
    for k in 1..=200 {
        let s = generate_skolem(k).map_err(|e| e.to_string())?;
        ensure!(validate_skolem(&s), "order {k} invalid");
        let want = if k % 4 <= 1 {
            Flavor::Ordinary
        } else {
            Flavor::Hooked
        };
        ensure!(s.flavor == want, "order {k} has flavor {:?}", s.flavor);
    }
    Ok(format!("orders 1..=200 valid in {:.2?}", start.elapsed()))
}

fn interval_paths() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for g1 in 0i64..=10 {
        for g2 in [g1 - 1, g1, g1 + 1] {
            if g2 < 0 || g1 + g2 > 10 {
                continue;
            }
            for gap in 1..=2 {
                let (a, b) = (0, g1);
                let (c, d) = (g1 + gap, g1 + gap + g2);
                let all = enumerate_interval_paths(a, b, c, d).map_err(|e| e.to_string())?;
                let ends: BTreeSet<(i64, i64)> =
                    all.iter().map(|p| (p.0[0], *p.0.last().unwrap())).collect();
                for spec in all_specs(a, b, c, d) {
                    let path = build_interval_path(&spec).map_err(|e| e.to_string())?;
                    let mut rev = path.0.clone();
                    rev.reverse();
                    ensure!(
                        all.iter().any(|q| q.0 == path.0 || q.0 == rev),
                        "{spec:?} built a path missing from the enumeration"
                    );
                    let (s, e) = spec.endpoints();
                    ensure!(
                        ends.contains(&(s.min(e), s.max(e))),
                        "{spec:?}: endpoints ({s}, {e}) never realized"
                    );
                    checked += 1;
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let g1 = rng.gen_range(0..=500i64);
        let g2 = (g1 + rng.gen_range(-1..=1i64)).max(0);
        let a = rng.gen_range(-1000..1000i64);
        let c = a + g1 + rng.gen_range(1..50i64);
        let specs = all_specs(a, a + g1, c, c + g2);
        let spec: IntervalPathSpec = *specs.choose(&mut rng).expect("some request is legal");
        let path = build_interval_path(&spec).map_err(|e| e.to_string())?;
        ensure!(validate(&path, &spec), "{spec:?} failed validation");
    }
    Ok(format!(
        "{checked} small requests matched the enumeration, 100 large ones validated in {:.2?}",
        start.elapsed()
    ))
}

fn partial_sum_identity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(54);
    for trial in 0..1000 {
        let ell = [9u32, 13, 17, 21, 25][rng.gen_range(0..5)];
        let k = (ell as i64 - 1) / 4;
        let n = rng.gen_range(2 * k as u32..2 * k as u32 + 12);
        let p = Params::new(ell, n).unwrap();
        let hi = p.half_span() - 4 * k + 1;
        let u = 2 * rng.gen_range(1..=hi / 2);
        let set: Vec<i64> = (u..u + 4 * k).collect();
        let gon = cycle_from_pairs(&set, &p).map_err(|e| e.to_string())?;
        ensure!(
            gon.is_alternating(&p),
            "trial {trial}: gon over [{u}, ..] not alternating"
        );
        let mut labels: Vec<u32> = (1..ell).collect();
        labels.shuffle(&mut rng);
        labels.insert(0, 0);
        let closing = if rng.gen_bool(0.5) {
            Closing::AtZero
        } else {
            Closing::Repeat
        };
        let lifted = lift_gon(&gon, &labels, closing, &p);
        let direct =
            alternating_partial_sum(&lifted, u, u + 4 * k - 1, &p).map_err(|e| e.to_string())?;
        let closed = partial_sum_closed_form(&labels, closing, &p);
        ensure!(
            direct == closed,
            "trial {trial}: direct {direct}, closed form {closed}"
        );
    }
    Ok("1000 random gons agree with the closed form".into())
}

fn flip_properties() -> Outcome {
    let mut count = 0;
    for p in sweep() {
        let base = assemble(&p).map_err(|e| e.to_string())?;
        let pr = base.provenance.unwrap();
        for rho in 0..p.ell as i64 {
            let g = build_g(&pr.big_f, &pr.reserved, rho, &p)
                .map_err(|e| format!("({}, {}), rho {rho}: {e}", p.ell, p.n))?;
            ensure!(
                g_properties_hold(&pr.big_f, &g.map, rho, &p),
                "({}, {}), rho {rho}",
                p.ell,
                p.n
            );
            count += 1;
        }
        ensure!(
            g_properties_hold(&pr.big_f, &pr.big_g, RHO, &p),
            "assembled map at ({}, {})",
            p.ell,
            p.n
        );
        for x in 2..p.half_span() {
            let mut four = [
                pr.big_f.at(x),
                pr.big_g.at(x),
                -pr.big_g.at(x),
                -pr.big_f.at(x),
            ];
            four.sort_unstable();
            ensure!(
                four == [-2, -1, 1, 2],
                "({}, {}) at {x}: {four:?}",
                p.ell,
                p.n
            );
        }
    }
    Ok(format!(
        "{count} (instance, rho) pairs satisfy all three properties"
    ))
}

fn run_hwp(args: &[&str]) -> Result<i32, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hwp"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    out.status
        .code()
        .ok_or_else(|| "terminated by signal".to_string())
}

fn cli_round_trip() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("cert.json");
    let path_s = path.to_str().unwrap();
    let code = run_hwp(&[
        "generate", "--ell", "9", "--n", "5", "--verify", "full", "--output", path_s,
    ])?;
    ensure!(code == 0, "generate exited {code}");
    let text = fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let cert = Certificate::parse(&text).map_err(|e| e.to_string())?;
    ensure!(
        Certificate::parse(&cert.to_json()).as_ref() == Ok(&cert),
        "JSON round trip changed data"
    );
    ensure!(
        Certificate::parse(&cert.to_text()).as_ref() == Ok(&cert),
        "text round trip changed data"
    );
    let code = run_hwp(&["verify", "--input", path_s, "--level", "full"])?;
    ensure!(
        code == 0,
        "verify of the untouched certificate exited {code}"
    );

    // flip the lowest bit of a first component in every cycle, one cycle at a time
    let cycles = cert.short_base_cycles.len() + cert.long_base_cycles.len();
    let tampered = dir.path().join("tampered.json");
    for which in 0..cycles {
        let mut bad = cert.clone();
        let nshort = bad.short_base_cycles.len();
        let cycle = if which < nshort {
            &mut bad.short_base_cycles[which]
        } else {
            &mut bad.long_base_cycles[which - nshort]
        };
        let v = &mut cycle[1];
        v.0 ^= if v.0 ^ 1 < cert.params.long_len { 1 } else { 2 };
        fs::write(&tampered, bad.to_json()).map_err(|e| e.to_string())?;
        let code = run_hwp(&["verify", "--input", tampered.to_str().unwrap()])?;
        ensure!(code == 1, "tampered cycle {which}: verify exited {code}");
    }
    Ok(format!(
        "round trip verified, {cycles} single-bit tampers rejected"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("worked instance reproduction", worked_example),
        ("base-criterion sweep", base_sweep),
        ("full factorization validation", full_factorizations),
        ("Skolem suite", skolem_suite),
        ("interval path oracle", interval_paths),
        ("alternating partial-sum identity", partial_sum_identity),
        ("flip map properties", flip_properties),
        ("CLI round trip", cli_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
