//! Gluing the sign maps, the flipped map `G`, the two completion cycles, and the full assembly.

use crate::error::{Error, Result};
use crate::group::{LiftedCycle, Vertex};
use crate::long_cycles::build_long_set;
use crate::params::Params;
use crate::short_cycles::{build_base_gons, build_d, lift_all};
use crate::signmap::SignMap;
use crate::skolem::{generate_skolem, SkolemSeq};

/// Target residue for the alternating sum of `G`.
pub const RHO: i64 = -1;

/// Intermediate data recorded by [`assemble`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub reserved: Vec<i64>,
    pub f: SignMap,
    pub phi: SignMap,
    pub big_f: SignMap,
    pub big_g: SignMap,
    pub mu: u32,
    pub target: u32,
    pub flip_count: u32,
    pub flipped: Vec<i64>,
    pub skolem: Option<SkolemSeq>,
}

/// The base cycles of a cyclic solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseCycleSet {
    pub params: Params,
    pub shorts: Vec<LiftedCycle>,
    pub longs: Vec<LiftedCycle>,
    pub provenance: Option<Provenance>,
}

fn signed_sum(values: impl Iterator<Item = (i64, i8)>) -> i64 {
    values
        .map(|(i, v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum()
}

/// `F = f` on the reserved set and `phi` elsewhere, over `[2, ell*n - 1]` and negatives.
pub fn glue_f(f: &SignMap, phi: &SignMap, p: &Params) -> Result<SignMap> {
    let t = p.half_span();
    for (x, _) in f.positive_entries().chain(phi.positive_entries()) {
        if x < 2 || x >= t {
            return Err(Error::DomainOverlap(x));
        }
    }
    let mut out = SignMap::new(p);
    for x in 2..t {
        let v = match (f.get(x), phi.get(x)) {
            (Some(_), Some(_)) => return Err(Error::DomainOverlap(x)),
            (None, None) => return Err(Error::DomainGap(x)),
            (Some(v), None) | (None, Some(v)) => v,
        };
        out.set(x, v)?;
    }
    Ok(out)
}

/// `g` (twice or half of `F`) with some signs flipped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlippedMap {
    pub map: SignMap,
    pub flip_count: u32,
    pub flipped: Vec<i64>,
}

/// A map `G` with `sum (-1)^i G(i) = rho`, `|G(x)| = 1` exactly where `|F(x)| = 2`, and `G` odd.
///
/// Flips are taken from `{x not reserved : F(x) = (-1)^(x+1)}`, those `>= 2n` first, ascending.
pub fn build_g(big_f: &SignMap, reserved: &[i64], rho: i64, p: &Params) -> Result<FlippedMap> {
    let t = p.half_span();
    let ell = p.ell as i64;
    let mut g = SignMap::new(p);
    for x in 2..t {
        let v = big_f.get(x).ok_or(Error::DomainGap(x))?;
        g.set(x, if v.abs() == 1 { 2 * v } else { v / 2 })?;
    }
    let sum_g = g.alternating_sum(2, t - 1);
    let flip_count = ((sum_g - rho) * p.quarter as i64).rem_euclid(ell) as usize;
    let eligible =
        |x: &i64| !reserved.contains(x) && big_f.at(*x) as i64 == if x % 2 == 0 { -1 } else { 1 };
    let split = 2 * p.n as i64;
    let pool: Vec<i64> = (split.min(t)..t)
        .chain(2..split.min(t))
        .filter(eligible)
        .collect();
    if pool.len() < flip_count {
        return Err(Error::InsufficientFlipSet {
            needed: flip_count,
            available: pool.len(),
        });
    }
    let mut flipped = pool[..flip_count].to_vec();
    flipped.sort_unstable();
    for &x in &flipped {
        g = g.with_value(x, -g.at(x));
    }
    Ok(FlippedMap {
        map: g,
        flip_count: flip_count as u32,
        flipped,
    })
}

/// Direct check of the three defining properties of `G`.
pub fn g_properties_hold(big_f: &SignMap, big_g: &SignMap, rho: i64, p: &Params) -> bool {
    let t = p.half_span();
    let ell = p.ell as i64;
    let sum_ok = (signed_sum((2..t).map(|i| (i, big_g.at(i)))) - rho).rem_euclid(ell) == 0;
    let swap_ok = (2..t).all(|x| (big_g.at(x).abs() == 1) == (big_f.at(x).abs() == 2));
    let odd_ok = (2..t).all(|x| big_g.at(-x) == -big_g.at(x));
    sum_ok && swap_ok && odd_ok
}

/// The two long cycles that absorb every remaining difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionCycles {
    pub c: LiftedCycle,
    pub c_prime: LiftedCycle,
    /// Second components of `c` as integers before reduction.
    pub heights: Vec<i64>,
}

fn zigzag(i: i64) -> i64 {
    let h = (i + 1) / 2;
    if i % 2 == 1 {
        h
    } else {
        -h
    }
}

pub fn build_completion_cycles(
    p: &Params,
    big_f: &SignMap,
    big_g: &SignMap,
) -> Result<CompletionCycles> {
    let t = p.half_span();
    let len = (2 * t + 1) as usize;
    let ell = p.ell as i64;
    let mut ys = vec![0i64; len];
    ys[1] = 1;
    ys[t as usize] = 2;
    ys[t as usize + 1] = 1;
    ys[2 * t as usize] = -2;
    let mut acc = 1;
    for i in 2..t {
        acc += if i % 2 == 0 {
            big_f.at(i) as i64
        } else {
            -(big_f.at(i) as i64)
        };
        ys[i as usize] = acc;
    }
    acc = 1;
    for i in t + 2..2 * t {
        acc += if i % 2 == 0 {
            big_g.at(i) as i64
        } else {
            -(big_g.at(i) as i64)
        };
        ys[i as usize] = acc;
    }
    for (index, expected) in [(t as usize - 1, 1), (2 * t as usize - 1, 0)] {
        let found = ys[index].rem_euclid(ell) as u32;
        if found != expected {
            return Err(Error::AnchorViolation {
                index,
                found,
                expected,
            });
        }
    }
    let xs: Vec<i64> = (0..len as i64).map(zigzag).collect();
    let c = LiftedCycle((0..len).map(|i| Vertex::reduce(xs[i], ys[i], p)).collect());
    let even = p.n.is_multiple_of(2);
    let c_prime = LiftedCycle(
        (0..len)
            .map(|i| {
                let ii = i as i64;
                let (x, y) = if even {
                    if ii <= t {
                        (xs[i], 0)
                    } else {
                        (-xs[i], ys[i])
                    }
                } else if ii < t {
                    (xs[i], 0)
                } else if ii == t {
                    (-xs[i], 1)
                } else {
                    (-xs[i], ys[i])
                };
                Vertex::reduce(x, y, p)
            })
            .collect(),
    );
    Ok(CompletionCycles {
        c,
        c_prime,
        heights: ys,
    })
}

/// Build every base cycle for the given parameters.
pub fn assemble(p: &Params) -> Result<BaseCycleSet> {
    let dset = build_d(p);
    let (mut longs, f) = build_long_set(p, &dset)?;
    let reserved = dset.values();
    let target = p.reduce_short(-signed_sum(reserved.iter().map(|&i| (i, f.at(i)))));

    let order = p.n - 2 * p.quarter;
    let skolem = if order > 0 {
        Some(generate_skolem(order)?)
    } else {
        None
    };
    let base = build_base_gons(p, skolem.as_ref(), &dset)?;
    let lifted = lift_all(p, &base, &dset, target)?;

    let big_f = glue_f(&f, &lifted.phi, p)?;
    let flipped = build_g(&big_f, &reserved, RHO, p)?;
    let done = build_completion_cycles(p, &big_f, &flipped.map)?;
    longs.push(done.c);
    longs.push(done.c_prime);

    Ok(BaseCycleSet {
        params: *p,
        shorts: lifted.cycles,
        longs,
        provenance: Some(Provenance {
            reserved,
            f,
            phi: lifted.phi,
            big_f,
            big_g: flipped.map,
            mu: lifted.mu,
            target,
            flip_count: flipped.flip_count,
            flipped: flipped.flipped,
            skolem,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_instance() {
        let p = Params::new(9, 5).unwrap();
        let b = assemble(&p).unwrap();
        assert_eq!((b.shorts.len(), b.longs.len()), (5, 4));
        let pr = b.provenance.unwrap();
        assert_eq!(pr.target, 0);
        assert_eq!(pr.mu, 6);
        assert_eq!(pr.big_f.get(2), Some(-1));
        assert_eq!(pr.big_f.get(10), Some(-1));
        assert_eq!(pr.big_f.get(26), Some(2));
        assert_eq!(pr.big_f.alternating_sum(2, 44).rem_euclid(9), 0);
        assert_eq!(pr.flip_count, 8);
        assert_eq!(pr.flipped, vec![10, 11, 12, 13, 14, 18, 20, 21]);
        assert!(g_properties_hold(&pr.big_f, &pr.big_g, RHO, &p));
        assert!(pr.big_f.is_odd() && pr.big_g.is_odd());
    }

    #[test]
    fn worked_heights() {
        let p = Params::new(9, 5).unwrap();
        let b = assemble(&p).unwrap();
        let pr = b.provenance.unwrap();
        let cc = build_completion_cycles(&p, &pr.big_f, &pr.big_g).unwrap();
        let ys: Vec<i64> = cc.heights.iter().map(|y| y.rem_euclid(9)).collect();
        assert_eq!(
            &ys[2..45],
            &[
                0, 1, 2, 3, 2, 1, 2, 1, 0, 8, 7, 6, 5, 6, 7, 0, 8, 0, 8, 7, 6, 5, 3, 4, 6, 7, 8, 7,
                5, 4, 6, 8, 7, 6, 5, 4, 3, 4, 5, 4, 3, 2, 1
            ]
        );
        assert_eq!(&ys[87..90], &[0, 2, 0]);
        assert!(cc.c.is_transversal(crate::group::Kind::Long, &p).unwrap());
        assert!(cc
            .c_prime
            .is_transversal(crate::group::Kind::Long, &p)
            .unwrap());
    }

    #[test]
    fn flip_pool_exhaustion() {
        let p = Params::new(9, 5).unwrap();
        let mut f = SignMap::new(&p);
        for x in 2..45 {
            f.set(x, 2).unwrap();
        }
        assert_eq!(build_g(&f, &[], 1, &p).unwrap().flip_count, 0);
        assert_eq!(
            build_g(&f, &[], 0, &p),
            Err(Error::InsufficientFlipSet {
                needed: 2,
                available: 0
            })
        );
    }

    #[test]
    fn glue_detects_overlap_and_gap() {
        let p = Params::new(9, 5).unwrap();
        let pr = assemble(&p).unwrap().provenance.unwrap();
        let phi = pr.phi.with_value(2, 1);
        assert_eq!(glue_f(&pr.f, &phi, &p), Err(Error::DomainOverlap(2)));
        let empty = SignMap::new(&p);
        assert_eq!(glue_f(&pr.f, &empty, &p), Err(Error::DomainGap(3)));
    }
}
