//! Paths on two integer intervals whose edge lengths are all distinct.
//!
//! A path on `[a,b] ∪ [c,d]` (with `b < c`) qualifies when every edge joins the
//! low interval to the high one and the edge lengths are exactly `c-b ..= d-a`.
//! The builder works on the normalised instance `[0,g1] ∪ [g1+1, g1+g2+1]`
//! and then slides each side into place.

use crate::error::{Error, Result};

/// Which end vertices are requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EndpointCase {
    /// Low side one longer: ends `a+i` and `b-i`, both low.
    LowHeavy,
    /// Same size: ends `a+i` and `c+i`.
    Balanced,
    /// High side one longer: ends `c+i` and `d-i`, both high.
    HighHeavy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalPathSpec {
    pub low: (i64, i64),
    pub high: (i64, i64),
    pub case: EndpointCase,
    pub index: i64,
}

impl IntervalPathSpec {
    /// Infer the case from the interval sizes and check every constraint.
    pub fn new(a: i64, b: i64, c: i64, d: i64, index: i64) -> Result<Self> {
        let (g1, g2) = (b - a, d - c);
        let case = if g1 == g2 + 1 {
            EndpointCase::LowHeavy
        } else if g1 == g2 {
            EndpointCase::Balanced
        } else if g1 + 1 == g2 {
            EndpointCase::HighHeavy
        } else {
            return Err(Error::SpecViolation(format!(
                "interval sizes differ by more than one: [{a},{b}] and [{c},{d}]"
            )));
        };
        let spec = IntervalPathSpec {
            low: (a, b),
            high: (c, d),
            case,
            index,
        };
        spec.check()?;
        Ok(spec)
    }

    fn gaps(&self) -> (i64, i64) {
        (self.low.1 - self.low.0, self.high.1 - self.high.0)
    }

    pub fn check(&self) -> Result<()> {
        let (a, b) = self.low;
        let (c, d) = self.high;
        let (g1, g2) = self.gaps();
        let i = self.index;
        let bad = |m: String| Err(Error::SpecViolation(m));
        if a > b || c > d || b >= c {
            return bad(format!("need a <= b < c <= d, got [{a},{b}] and [{c},{d}]"));
        }
        match self.case {
            EndpointCase::LowHeavy => {
                if g1 != g2 + 1 {
                    return bad("low-heavy case needs b-a = d-c+1".into());
                }
                if i < 0 || i > g1 || 2 * i == g1 {
                    return bad(format!("index {i} not in [0,{g1}] minus the midpoint"));
                }
            }
            EndpointCase::Balanced => {
                if g1 != g2 {
                    return bad("balanced case needs b-a = d-c".into());
                }
                if i < 0 || i > g1 {
                    return bad(format!("index {i} not in [0,{g1}]"));
                }
            }
            EndpointCase::HighHeavy => {
                if g1 + 1 != g2 {
                    return bad("high-heavy case needs d-c = b-a+1".into());
                }
                if i < 0 || i > g2 || 2 * i == g2 {
                    return bad(format!("index {i} not in [0,{g2}] minus the midpoint"));
                }
            }
        }
        Ok(())
    }

    /// The two requested end vertices, first one is where the built path starts.
    pub fn endpoints(&self) -> (i64, i64) {
        let (a, b) = self.low;
        let (c, d) = self.high;
        let i = self.index;
        match self.case {
            EndpointCase::LowHeavy => (a + i, b - i),
            EndpointCase::Balanced => (a + i, c + i),
            EndpointCase::HighHeavy => (c + i, d - i),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalPath(pub Vec<i64>);

/// Check the two defining properties of a path on `[a,b] ∪ [c,d]`.
pub fn is_interval_path(path: &[i64], low: (i64, i64), high: (i64, i64)) -> bool {
    let (a, b) = low;
    let (c, d) = high;
    if a > b || c > d || b >= c {
        return false;
    }
    let total = (b - a + 1 + d - c + 1) as usize;
    if path.len() != total {
        return false;
    }
    let slot = |x: i64| -> Option<usize> {
        if (a..=b).contains(&x) {
            Some((x - a) as usize)
        } else if (c..=d).contains(&x) {
            Some((b - a + 1 + x - c) as usize)
        } else {
            None
        }
    };
    let mut seen = vec![false; total];
    for &x in path {
        match slot(x) {
            Some(s) if !seen[s] => seen[s] = true,
            _ => return false,
        }
    }
    let lo_len = c - b;
    let mut used = vec![false; (d - a - lo_len + 1) as usize];
    for w in path.windows(2) {
        let (u, v) = (w[0].min(w[1]), w[0].max(w[1]));
        if u > b || v < c {
            return false;
        }
        let k = (v - u - lo_len) as usize;
        if std::mem::replace(&mut used[k], true) {
            return false;
        }
    }
    true
}

/// Full check of a built path against its request.
pub fn validate(path: &IntervalPath, spec: &IntervalPathSpec) -> bool {
    let (s, e) = spec.endpoints();
    let p = &path.0;
    if p.is_empty() || !is_interval_path(p, spec.low, spec.high) {
        return false;
    }
    let (f, l) = (p[0], p[p.len() - 1]);
    (f, l) == (s, e) || (f, l) == (e, s)
}

/// Build a path for the request; it starts at the first endpoint of [`IntervalPathSpec::endpoints`].
pub fn build_interval_path(spec: &IntervalPathSpec) -> Result<IntervalPath> {
    spec.check()?;
    let (g1, g2) = spec.gaps();
    let n = g1 + g2 + 1;
    let i = spec.index;
    let (u, v) = match spec.case {
        EndpointCase::LowHeavy => (i, g1 - i),
        EndpointCase::Balanced => (i, g1 + 1 + i),
        EndpointCase::HighHeavy => (g1 + 1 + i, n - i),
    };
    let rel = normalised(g1, g2, u, v)
        .ok_or_else(|| Error::SpecViolation(format!("no decomposition found for {spec:?}")))?;
    let (a, c) = (spec.low.0, spec.high.0);
    let path = IntervalPath(
        rel.into_iter()
            .map(|z| if z <= g1 { a + z } else { c + z - g1 - 1 })
            .collect(),
    );
    if !validate(&path, spec) {
        return Err(Error::SpecViolation(format!(
            "built path failed validation for {spec:?}"
        )));
    }
    Ok(path)
}

/// Is `(u, v)` a legal end pair on `[0,g1] ∪ [g1+1, g1+g2+1]`?
fn legal_request(g1: i64, g2: i64, u: i64, v: i64) -> bool {
    let n = g1 + g2 + 1;
    if g1 < 0 || g2 < 0 || (g1 - g2).abs() > 1 || !(0..=n).contains(&u) || !(0..=n).contains(&v) {
        return false;
    }
    if g1 == g2 + 1 {
        u <= g1 && v <= g1 && u + v == g1 && u != v
    } else if g1 == g2 {
        let (lo, hi) = (u.min(v), u.max(v));
        lo <= g1 && g1 < hi && hi == g1 + 1 + lo
    } else {
        u > g1 && v > g1 && u + v == g1 + 1 + n && u != v
    }
}

/// The end vertex paired with `u` in a legal request.
fn partner(g1: i64, g2: i64, u: i64) -> Option<i64> {
    let n = g1 + g2 + 1;
    if g1 == g2 + 1 {
        (u <= g1 && 2 * u != g1).then_some(g1 - u)
    } else if g1 == g2 {
        Some(if u <= g1 { u + g1 + 1 } else { u - g1 - 1 })
    } else {
        (u > g1 && 2 * u != g1 + 1 + n).then_some(g1 + 1 + n - u)
    }
}

// Peel an outer shell containing `x` (the lows below `a` and the highs above
// `n-b`), solve it recursively, jump across with the single length the shell
// leaves free, and finish inside the core.
fn normalised(g1: i64, g2: i64, u: i64, v: i64) -> Option<Vec<i64>> {
    let n = g1 + g2 + 1;
    if (g1, g2) == (0, -1) || (g1, g2) == (-1, 0) {
        return Some(vec![0]);
    }
    if (g1, g2) == (0, 0) {
        return Some(vec![u, v]);
    }
    for (x, y, flip) in [(u, v, false), (v, u, true)] {
        let depth = if x <= g1 { x } else { n - x };
        for da in -1..=2 {
            for db in -1..=2 {
                let (a, b) = if x <= g1 {
                    (depth + 1 + da, depth + db)
                } else {
                    (depth + db, depth + 1 + da)
                };
                if a < 0 || b < 0 || a + b == 0 || a > g1 + 1 || b > g2 + 1 {
                    continue;
                }
                let (sg1, sg2) = (a - 1, b - 1);
                let (cg1, cg2) = (g1 - a, g2 - b);
                if (cg1 - cg2).abs() > 1 || cg1 < -1 || cg2 < -1 || (cg1 == -1 && cg2 == -1) {
                    continue;
                }
                if a > 0 && b > 0 && (sg1 - sg2).abs() > 1 {
                    continue;
                }
                if (a == 0 || b == 0) && a + b != 1 {
                    continue;
                }
                let in_shell = |z: i64| z < a || z > n - b;
                if !in_shell(x) || in_shell(y) {
                    continue;
                }
                let jump = n - a - b + 1;
                let srel = |z: i64| if z < a { z } else { z - (n - b + 1) + a };
                let sabs = |z: i64| if z < a { z } else { z - a + (n - b + 1) };
                let s = if a + b == 1 {
                    x
                } else {
                    match partner(sg1, sg2, srel(x)) {
                        Some(q) => sabs(q),
                        None => continue,
                    }
                };
                let t = if s < a { s + jump } else { s - jump };
                if t < a || t > n - b || (s < a) == (t <= g1) {
                    continue;
                }
                let degenerate = cg1 == -1 || cg2 == -1;
                if degenerate {
                    if t != y {
                        continue;
                    }
                } else if !legal_request(cg1, cg2, t - a, y - a) {
                    continue;
                }
                let mut path = if a + b == 1 {
                    vec![x]
                } else {
                    normalised(sg1, sg2, srel(x), srel(s))?
                        .into_iter()
                        .map(sabs)
                        .collect()
                };
                if degenerate {
                    path.push(t);
                } else {
                    path.extend(
                        normalised(cg1, cg2, t - a, y - a)?
                            .into_iter()
                            .map(|z| z + a),
                    );
                }
                if flip {
                    path.reverse();
                }
                return Some(path);
            }
        }
    }
    None
}

/// Largest `(b-a) + (d-c)` accepted by [`enumerate_interval_paths`].
pub const ENUMERATION_LIMIT: i64 = 10;

/// Every qualifying path on `[a,b] ∪ [c,d]`, each listed once with its first vertex below its last.
pub fn enumerate_interval_paths(a: i64, b: i64, c: i64, d: i64) -> Result<Vec<IntervalPath>> {
    let size = (b - a) + (d - c);
    if size > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            size,
            limit: ENUMERATION_LIMIT,
        });
    }
    if a > b || c > d || b >= c {
        return Ok(Vec::new());
    }
    let verts: Vec<i64> = (a..=b).chain(c..=d).collect();
    let total = verts.len();
    let lo_len = c - b;
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(total);
    let mut on_path = vec![false; total];
    let mut used = vec![false; (d - a - lo_len + 1) as usize];
    fn walk(
        verts: &[i64],
        lo_len: i64,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        used: &mut [bool],
        out: &mut Vec<IntervalPath>,
    ) {
        if path.len() == verts.len() {
            let p: Vec<i64> = path.iter().map(|&k| verts[k]).collect();
            if p.len() == 1 || p[0] < p[p.len() - 1] {
                out.push(IntervalPath(p));
            }
            return;
        }
        let last = verts[*path.last().unwrap()];
        for k in 0..verts.len() {
            if on_path[k] {
                continue;
            }
            let len = (verts[k] - last).abs();
            if len < lo_len {
                continue;
            }
            let slot = (len - lo_len) as usize;
            if slot >= used.len() || used[slot] {
                continue;
            }
            used[slot] = true;
            on_path[k] = true;
            path.push(k);
            walk(verts, lo_len, path, on_path, used, out);
            path.pop();
            on_path[k] = false;
            used[slot] = false;
        }
    }
    for start in 0..total {
        path.push(start);
        on_path[start] = true;
        walk(&verts, lo_len, &mut path, &mut on_path, &mut used, &mut out);
        on_path[start] = false;
        path.pop();
    }
    out.retain(|p| is_interval_path(&p.0, (a, b), (c, d)));
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Every legal request on `[a,b] ∪ [c,d]`.
pub fn all_specs(a: i64, b: i64, c: i64, d: i64) -> Vec<IntervalPathSpec> {
    let (g1, g2) = (b - a, d - c);
    let top = g1.max(g2);
    (0..=top)
        .filter_map(|i| IntervalPathSpec::new(a, b, c, d, i).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn balanced_example() {
        let spec = IntervalPathSpec::new(0, 2, 3, 5, 1).unwrap();
        assert_eq!(spec.case, EndpointCase::Balanced);
        let p = build_interval_path(&spec).unwrap();
        assert!(validate(&p, &spec));
        assert_eq!((p.0[0], p.0[5]), (1, 4));
        let all = enumerate_interval_paths(0, 2, 3, 5).unwrap();
        assert!(all.contains(&IntervalPath(vec![1, 5, 0, 3, 2, 4])));
    }

    #[test]
    fn low_heavy_example() {
        let spec = IntervalPathSpec::new(0, 1, 2, 2, 0).unwrap();
        assert_eq!(spec.case, EndpointCase::LowHeavy);
        let p = build_interval_path(&spec).unwrap();
        assert_eq!(p.0, vec![0, 2, 1]);
    }

    #[test]
    fn enumerations() {
        let all = enumerate_interval_paths(0, 1, 2, 3).unwrap();
        assert!(all.contains(&IntervalPath(vec![1, 2, 0, 3])));
        let single = enumerate_interval_paths(0, 0, 1, 1).unwrap();
        assert_eq!(single, vec![IntervalPath(vec![0, 1])]);
        let six = enumerate_interval_paths(0, 2, 3, 5).unwrap();
        for (s, e) in [(0, 3), (1, 4), (2, 5)] {
            assert!(six.iter().any(|p| (p.0[0], p.0[5]) == (s, e)));
        }
        assert!(matches!(
            enumerate_interval_paths(0, 5, 6, 12),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn midpoints_rejected() {
        assert!(IntervalPathSpec::new(0, 2, 3, 4, 1).is_err());
        assert!(IntervalPathSpec::new(0, 1, 2, 4, 1).is_err());
        assert!(IntervalPathSpec::new(0, 1, 2, 5, 0).is_err());
        assert!(IntervalPathSpec::new(0, 3, 2, 5, 0).is_err());
    }

    #[test]
    fn relocation_matches_direct_build() {
        for (a, b, c, d) in [(20, 29, 30, 40), (5, 12, 40, 48), (-7, 0, 3, 11)] {
            for spec in all_specs(a, b, c, d) {
                let p = build_interval_path(&spec).unwrap();
                let (g1, g2) = (b - a, d - c);
                let base = IntervalPathSpec {
                    low: (0, g1),
                    high: (g1 + 1, g1 + g2 + 1),
                    ..spec
                };
                let q = build_interval_path(&base).unwrap();
                let moved: Vec<i64> =
                    q.0.iter()
                        .map(|&z| if z <= g1 { z + a } else { z + c - (g1 + 1) })
                        .collect();
                assert_eq!(p.0, moved);
            }
        }
    }

    #[test]
    fn medium_sizes_validate() {
        for g1 in 0..40 {
            for g2 in [g1 - 1, g1, g1 + 1] {
                if g2 < 0 {
                    continue;
                }
                for spec in all_specs(0, g1, g1 + 1, g1 + 1 + g2) {
                    let p = build_interval_path(&spec).unwrap();
                    assert!(validate(&p, &spec));
                    assert_eq!(p.0[0], spec.endpoints().0);
                }
            }
        }
    }
}
