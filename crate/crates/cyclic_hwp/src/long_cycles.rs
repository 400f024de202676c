//! Transversal long cycles built from pairs of interval paths.

use crate::alpha_path::{build_interval_path, IntervalPathSpec};
use crate::error::{Error, Result};
use crate::group::LiftedCycle;
use crate::params::Params;
use crate::short_cycles::DSet;
use crate::signmap::SignMap;

/// A cycle in `Z x Z` before reduction.
pub type PlainCycle = Vec<(i64, i64)>;

/// Two cycles of length `2t+1` sharing the labels `x`, `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LongPairSpec {
    pub d1: i64,
    pub d2: i64,
    pub t: i64,
    pub x: i64,
    pub y: i64,
}

impl LongPairSpec {
    pub fn check(&self) -> Result<()> {
        check_gap(self.d1, self.t)?;
        check_gap(self.d2, self.t)
    }
}

fn check_gap(d: i64, t: i64) -> Result<()> {
    if t < 2 {
        return Err(Error::SpecViolation(format!("t = {t} is below 2")));
    }
    if (d - t).rem_euclid(2) != 0 {
        return Err(Error::SpecViolation(format!(
            "{d} and {t} differ in parity"
        )));
    }
    if d < 1 || d > t - 1 || d == (t + 1) / 2 {
        return Err(Error::SpecViolation(format!(
            "{d} not in [1, {}] minus {}",
            t - 1,
            (t + 1) / 2
        )));
    }
    Ok(())
}

/// A `(2t+1)`-cycle in `Z x Z` whose first components are exactly `[0, 2t]`.
///
/// Its differences are `±(I x {y}) ∪ ±(J x {x}) ∪ {±(d, x-y)}` where `I = [1,t]`
/// for odd `t`, `I = [1,t+1]` for even `t`, and `J = [1,2t] \ I`.
pub fn build_cd_cycle(d: i64, t: i64, x: i64, y: i64) -> Result<PlainCycle> {
    check_gap(d, t)?;
    let (inner_spec, outer_spec) = if t % 2 == 1 {
        let m = (t + 1) / 2;
        let h = (d - 1) / 2;
        (
            IntervalPathSpec::new(m, 2 * m - 2, 2 * m - 1, 3 * m - 2, h)?,
            IntervalPathSpec::new(0, m - 1, 3 * m - 1, 4 * m - 2, h)?,
        )
    } else {
        let m = t / 2;
        let h = d / 2;
        (
            IntervalPathSpec::new(m, 2 * m - 1, 2 * m, 3 * m, h)?,
            IntervalPathSpec::new(0, m - 1, 3 * m + 1, 4 * m, h - 1)?,
        )
    };
    let mut inner = build_interval_path(&inner_spec)?.0;
    inner.reverse();
    let outer = build_interval_path(&outer_spec)?.0;

    let mut cycle = Vec::with_capacity(2 * t as usize + 1);
    cycle.extend(
        outer
            .iter()
            .enumerate()
            .map(|(j, &w)| (w, if j % 2 == 0 { 0 } else { x })),
    );
    cycle.extend(
        inner
            .iter()
            .enumerate()
            .map(|(j, &u)| (u, if j % 2 == 0 { y } else { 0 })),
    );
    Ok(cycle)
}

/// The two cycles; the second swaps the roles of `x` and `y`.
pub fn build_pair(spec: &LongPairSpec) -> Result<(PlainCycle, PlainCycle)> {
    spec.check()?;
    Ok((
        build_cd_cycle(spec.d1, spec.t, spec.x, spec.y)?,
        build_cd_cycle(spec.d2, spec.t, spec.y, spec.x)?,
    ))
}

/// The `(ell-5)/2` long base cycles covering every second component outside `{0, ±1, ±2}`,
/// plus the map `f` recording the extra differences over `±D`.
pub fn build_long_set(p: &Params, dset: &DSet) -> Result<(Vec<LiftedCycle>, SignMap)> {
    let t = p.half_span();
    let reflect = |d: i64| if d % 4 == 1 { 2 * t + 1 - d } else { d };
    let mut cycles = Vec::with_capacity(2 * dset.pairs.len());
    for (idx, &(first, second)) in dset.pairs.iter().enumerate() {
        let i = idx as i64 + 1;
        let spec = LongPairSpec {
            d1: reflect(first) / 2,
            d2: reflect(second) / 2,
            t,
            x: 2 * i + 1,
            y: 2 * i + 2,
        };
        let (c1, c2) = build_pair(&spec)?;
        for c in [c1, c2] {
            let doubled: Vec<(i64, i64)> = c.into_iter().map(|(a, b)| (2 * a, b)).collect();
            cycles.push(LiftedCycle::from_pairs(&doubled, p));
        }
    }
    let f = extract_unit_map(&cycles, p)?;
    Ok((cycles, f))
}

/// Collect the edges whose second-component difference is `±1`.
fn extract_unit_map(cycles: &[LiftedCycle], p: &Params) -> Result<SignMap> {
    let mut f = SignMap::new(p);
    for c in cycles {
        for (u, w) in c.edges() {
            let d = w.sub(u, p);
            let s = p.signed_short(d.1 as i64);
            if s.abs() == 1 {
                let a = d.0 as i64;
                if f.contains(a) {
                    return Err(Error::DomainOverlap(a));
                }
                f.set(a, s as i8)?;
            }
        }
    }
    Ok(f)
}
