//! Short base cycles: the reserved set `D`, the `4k`-gons, the Skolem-seeded
//! cycles, the label cycles on `Z_ell`, and the lift to transversal cycles.

use crate::error::{Error, Result};
use crate::group::{LiftedCycle, Vertex, ZCycle};
use crate::params::Params;
use crate::signmap::SignMap;
use crate::skolem::{Flavor, SkolemSeq};

/// The `2k-2` differences reserved for the long cycles, in pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DSet {
    pub pairs: Vec<(i64, i64)>,
    half_span: i64,
}

impl DSet {
    /// Sorted members.
    pub fn values(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, x: i64) -> bool {
        self.pairs.iter().any(|&(a, b)| a == x || b == x)
    }

    /// `[2, ell*n - 1]` minus the reserved values.
    pub fn complement(&self) -> Vec<i64> {
        (2..self.half_span).filter(|&x| !self.contains(x)).collect()
    }
}

pub fn build_d(p: &Params) -> DSet {
    let k = p.quarter as i64;
    let n = p.n as i64;
    let t = p.half_span();
    let mut pairs: Vec<(i64, i64)> = (1..k)
        .map(|i| (if n % 2 == 1 { 4 * i - 2 } else { 4 * i }, 4 * i + 1))
        .collect();
    if matches!((n - 2 * k) % 4, 2 | 3) {
        *pairs.last_mut().expect("k >= 2") = (t - 2 * k - 1, t - 2 * k + 3);
    }
    DSet {
        pairs,
        half_span: t,
    }
}

/// A `4k`-cycle on integers starting at 0, with its signed steps.
///
/// `deltas[h-1] = (-1)^h (b_h - b_{h-1})` for `h < 4k` and `deltas[4k-1] = b_0 - b_{4k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gon {
    pub vertices: Vec<i64>,
    pub deltas: Vec<i64>,
}

impl Gon {
    pub fn from_vertices(vertices: Vec<i64>) -> Self {
        let len = vertices.len();
        let mut deltas: Vec<i64> = (1..len)
            .map(|h| {
                let step = vertices[h] - vertices[h - 1];
                if h % 2 == 0 {
                    step
                } else {
                    -step
                }
            })
            .collect();
        deltas.push(vertices[0] - vertices[len - 1]);
        Gon { vertices, deltas }
    }

    pub fn as_zcycle(&self) -> ZCycle {
        ZCycle(self.vertices.clone())
    }

    /// Starts at 0, steps in `[1, ell*n]`, even then odd parity pattern across the two halves.
    pub fn is_alternating(&self, p: &Params) -> bool {
        let len = self.vertices.len();
        let half = len / 2;
        if len != 4 * p.quarter as usize || self.vertices[0] != 0 {
            return false;
        }
        self.deltas.iter().enumerate().all(|(idx, &d)| {
            let i = idx as i64 + 1;
            let want = if idx < half { i + 1 } else { i };
            d >= 1 && d <= p.half_span() && (d - want).rem_euclid(2) == 0
        })
    }
}

/// A `4k`-cycle whose differences are `±U`, for `U` made of consecutive pairs.
pub fn cycle_from_pairs(set: &[i64], p: &Params) -> Result<Gon> {
    let len = 4 * p.quarter as usize;
    if set.len() != len {
        return Err(Error::ShapeMismatch(format!(
            "expected {len} values, got {}",
            set.len()
        )));
    }
    let mut u = set.to_vec();
    u.sort_unstable();
    if u[0] < 1 || u[len - 1] > p.half_span() {
        return Err(Error::ShapeMismatch("values must lie in [1, ell*n]".into()));
    }
    if u.chunks(2).any(|c| c[0] + 1 != c[1]) {
        return Err(Error::NotPairable);
    }
    let half = len / 2;
    let mid = u[half];
    let mut deltas: Vec<i64> = u[..half].iter().chain(&u[half + 1..]).copied().collect();
    deltas.push(mid);
    let mut vertices = vec![0i64];
    for (h, d) in deltas[..len - 1].iter().enumerate() {
        let last = *vertices.last().unwrap();
        vertices.push(if h % 2 == 0 { last - d } else { last + d });
    }
    Ok(Gon { vertices, deltas })
}

/// The Skolem-seeded `ell`-cycles and the `2k` gons covering the rest of `Z_M^- \ ±D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseGons {
    pub skolem_cycles: Vec<ZCycle>,
    pub gons: Vec<Gon>,
    /// Positive differences of each gon.
    pub gon_sets: Vec<Vec<i64>>,
    pub flavor: Flavor,
}

pub fn build_base_gons(p: &Params, seq: Option<&SkolemSeq>, dset: &DSet) -> Result<BaseGons> {
    let k = p.quarter as i64;
    let n = p.n as i64;
    let t = p.half_span();
    let order = (n - 2 * k) as u32;
    let flavor = Flavor::for_order(order);
    let entries: &[u32] = match seq {
        None if order == 0 => &[],
        Some(s) if s.order == order && s.flavor == flavor => &s.entries,
        other => {
            return Err(Error::SkolemMismatch {
                expected: order,
                found: other.map_or(0, |s| s.order),
            })
        }
    };

    let skolem_cycles = entries
        .iter()
        .enumerate()
        .map(|(idx, &s)| {
            let i = idx as i64 + 1;
            ZCycle(
                (0..=4 * k)
                    .map(|j| skolem_vertex(i, j, s as i64, k, n))
                    .collect(),
            )
        })
        .collect();

    let mut first: Vec<i64> = (2..4 * k).filter(|&z| !dset.contains(z)).collect();
    match flavor {
        Flavor::Ordinary => first.extend((t - 2 * k..t).filter(|&z| !dset.contains(z))),
        Flavor::Hooked => {
            first.extend((t - 2 * k - 1..t).filter(|&z| z != t - 2 * k && !dset.contains(z)))
        }
    }
    let mut gon_sets = vec![first];
    for beta in 1..2 * k {
        gon_sets.push((2 * n * beta..2 * n * beta + 4 * k).collect());
    }
    let gons = gon_sets
        .iter()
        .map(|s| cycle_from_pairs(s, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(BaseGons {
        skolem_cycles,
        gons,
        gon_sets,
        flavor,
    })
}

fn skolem_vertex(i: i64, j: i64, s: i64, k: i64, n: i64) -> i64 {
    if j == 4 * k {
        s + i + (4 * k - 1) * n - 1
    } else if j == 4 * k - 1 {
        -2 * k
    } else if j % 2 == 1 {
        (4 * k - 2 - j) * n
    } else if j <= 2 * k - 2 {
        j * n + i - 2 * k
    } else {
        j * n + i - 1 + 2 * k
    }
}

/// Positive differences claimed for the Skolem-seeded cycles, as a sorted list.
pub fn skolem_cycle_differences(p: &Params, flavor: Flavor) -> Vec<i64> {
    let k = p.quarter as i64;
    let n = p.n as i64;
    let t = p.half_span();
    let mut out = Vec::new();
    for alpha in 0..=2 * k - 2 {
        out.extend((4 * k..=2 * n - 1).map(|z| z + 2 * n * alpha));
    }
    let lo = (4 * k - 2) * (n + 1) + 2;
    match flavor {
        Flavor::Ordinary => out.extend(lo..=t - 2 * k - 1),
        Flavor::Hooked => {
            out.extend(lo..=t - 2 * k - 2);
            if n > 2 * k {
                out.push(t - 2 * k);
            }
        }
    }
    out.sort_unstable();
    out
}

fn progression(from: i64, to: i64, step: i64) -> Vec<i64> {
    if (to - from) * step < 0 {
        return Vec::new();
    }
    let mut v = Vec::new();
    let mut x = from;
    while (step > 0 && x <= to) || (step < 0 && x >= to) {
        v.push(x);
        x += step;
    }
    v
}

/// Label cycle on `Z_ell` with steps `±1, ±2` except one step `±i`.
pub fn q_cycle(p: &Params, i: i64) -> Result<Vec<u32>> {
    let k = p.quarter as i64;
    if i < 1 || i > 2 * k - 1 {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: 2 * k - 1,
        });
    }
    let top = 4 * k;
    let mut q = progression(0, top - i, 1);
    if i % 2 == 0 {
        q.extend(progression(top - i + 2, top, 2));
        q.extend(progression(top - 1, top - i + 1, -2));
    } else {
        q.extend(progression(top - i + 2, top - 1, 2));
        q.extend(progression(top, top - i + 1, -2));
    }
    Ok(q.into_iter().map(|z| p.reduce_short(z)).collect())
}

/// Label cycle on `Z_ell` used for the last gon; `mu` is read modulo `ell`.
pub fn p_cycle(p: &Params, mu: i64) -> Vec<u32> {
    let k = p.quarter as i64;
    let ell = p.ell as i64;
    let mu = mu.rem_euclid(ell);
    let raw: Vec<i64> = if mu == 2 * k {
        let mut v = vec![0];
        v.extend(2..=2 * k + 1);
        v.extend(progression(2 * k + 3, 4 * k - 1, 2));
        v.extend(progression(4 * k, 2 * k + 2, -2));
        v.push(1);
        v
    } else if mu == 2 * k + 1 {
        return p_cycle(p, 2 * k)
            .into_iter()
            .map(|z| p.reduce_short(-(z as i64)))
            .collect();
    } else {
        // x = (2k - mu) / 2 mod ell, using 2^{-1} = (ell + 1) / 2
        let x = ((2 * k - mu) * ((ell + 1) / 2)).rem_euclid(ell);
        let mut v = Vec::new();
        if x > 0 && x < 2 * k {
            v.push(0);
            if x % 2 == 0 {
                v.extend(progression(4 * k - 1, 2 * k + x + 1, -2));
                v.extend(progression(2 * k + x + 2, 4 * k, 2));
                v.extend(1..=2 * k - 1);
                v.extend(progression(2 * k + 1, 2 * k + x - 1, 2));
                v.extend(progression(2 * k + x, 2 * k, -2));
            } else {
                v.extend(progression(4 * k - 1, 2 * k + x + 2, -2));
                v.extend(progression(2 * k + x + 1, 4 * k, 2));
                v.extend(1..=2 * k - 1);
                v.extend(progression(2 * k + 1, 2 * k + x, 2));
                v.extend(progression(2 * k + x - 1, 2 * k, -2));
            }
        } else if x == 2 * k + 1 {
            v.push(0);
            v.extend(progression(4 * k, 2 * k + 1, -1));
            v.extend(progression(2 * k - 1, 1, -2));
            v.extend(progression(2, 2 * k, 2));
        } else {
            let xs = x - 2 * k;
            if x % 2 == 0 {
                v.extend(progression(0, xs - 2, 2));
                v.extend(progression(xs - 1, 1, -2));
                v.extend(progression(4 * k, 2 * k + 1, -1));
                v.extend(progression(2 * k - 1, xs + 1, -2));
                v.extend(progression(xs, 2 * k, 2));
            } else {
                v.extend(progression(0, xs - 1, 2));
                v.extend(progression(xs - 2, 1, -2));
                v.extend(progression(4 * k, 2 * k + 1, -1));
                v.extend(progression(2 * k - 1, xs, -2));
                v.extend(progression(xs + 1, 2 * k, 2));
            }
        }
        v
    };
    raw.into_iter().map(|z| p.reduce_short(z)).collect()
}

/// How the extra vertex of a lifted gon is placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Closing {
    /// Last vertex `(0, p_4k)`.
    AtZero,
    /// Last vertex `(b_{4k-1}, p_4k)`.
    Repeat,
}

/// Attach labels `labels[0..=4k]` to a gon, adding one vertex.
pub fn lift_gon(gon: &Gon, labels: &[u32], closing: Closing, p: &Params) -> LiftedCycle {
    let len = gon.vertices.len();
    let mut v: Vec<Vertex> = gon
        .vertices
        .iter()
        .zip(labels)
        .map(|(&b, &q)| Vertex(p.reduce_long(b), q))
        .collect();
    let last = match closing {
        Closing::AtZero => 0,
        Closing::Repeat => gon.vertices[len - 1],
    };
    v.push(Vertex(p.reduce_long(last), labels[len]));
    LiftedCycle(v)
}

/// `(first, second)` for each edge with nonzero first component, oriented so the first lies in `[1, ell*n]`.
fn positive_steps<'a>(c: &'a LiftedCycle, p: &'a Params) -> impl Iterator<Item = (i64, i64)> + 'a {
    let t = p.half_span();
    c.edges().filter_map(move |(u, w)| {
        let d = w.sub(u, p);
        let a = d.0 as i64;
        if a == 0 {
            None
        } else if a <= t {
            Some((a, p.signed_short(d.1 as i64)))
        } else {
            Some((p.long_len as i64 - a, p.signed_short(-(d.1 as i64))))
        }
    })
}

/// `sum_{i=lo}^{hi} (-1)^i phi(i) mod ell`, where `(i, phi(i))` is a difference of the cycle.
pub fn alternating_partial_sum(lifted: &LiftedCycle, lo: i64, hi: i64, p: &Params) -> Result<u32> {
    let mut found = vec![None; (hi - lo + 1).max(0) as usize];
    for (a, s) in positive_steps(lifted, p) {
        if (lo..=hi).contains(&a) {
            let slot = &mut found[(a - lo) as usize];
            if slot.is_some() {
                return Err(Error::ShapeMismatch(format!(
                    "difference {a} appears twice"
                )));
            }
            *slot = Some(s);
        }
    }
    let mut sum = 0i64;
    for (off, v) in found.iter().enumerate() {
        let i = lo + off as i64;
        let v = v.ok_or_else(|| Error::ShapeMismatch(format!("difference {i} is missing")))?;
        sum += if i % 2 == 0 { v } else { -v };
    }
    Ok(p.reduce_short(sum))
}

/// The closed form for [`alternating_partial_sum`] over a lifted alternating gon.
pub fn partial_sum_closed_form(labels: &[u32], closing: Closing, p: &Params) -> u32 {
    let k = p.quarter as usize;
    let lab = |i: usize| labels[i] as i64;
    let v = match closing {
        Closing::AtZero => lab(4 * k) - 2 * lab(2 * k),
        Closing::Repeat => lab(4 * k - 1) - lab(4 * k) - 2 * lab(2 * k),
    };
    p.reduce_short(v)
}

/// Lifted short cycles with the resulting map `phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedShorts {
    pub cycles: Vec<LiftedCycle>,
    pub phi: SignMap,
    pub mu: u32,
    /// Alternating sum over the complement of `D` for every candidate `mu`.
    pub sums: Vec<u32>,
}

fn record_steps(c: &LiftedCycle, p: &Params, phi: &mut SignMap) -> Result<()> {
    for (a, s) in positive_steps(c, p) {
        if !matches!(s.abs(), 1 | 2) {
            return Err(Error::ShapeMismatch(format!(
                "label step {s} at difference {a}"
            )));
        }
        if phi.contains(a) {
            return Err(Error::DomainOverlap(a));
        }
        phi.set(a, s as i8)?;
    }
    Ok(())
}

/// Lift every short skeleton; the last gon's labels are chosen so the sum over the complement of `D` is `target`.
pub fn lift_all(p: &Params, base: &BaseGons, dset: &DSet, target: u32) -> Result<LiftedShorts> {
    let k = p.quarter as i64;
    let mut cycles: Vec<LiftedCycle> = base
        .skolem_cycles
        .iter()
        .map(|c| {
            LiftedCycle(
                c.0.iter()
                    .enumerate()
                    .map(|(j, &a)| Vertex(p.reduce_long(a), j as u32))
                    .collect(),
            )
        })
        .collect();
    for i in 1..2 * k {
        let q = q_cycle(p, i)?;
        cycles.push(lift_gon(&base.gons[i as usize - 1], &q, Closing::AtZero, p));
    }
    let mut phi = SignMap::new(p);
    for c in &cycles {
        record_steps(c, p, &mut phi)?;
    }
    let last = &base.gons[2 * k as usize - 1];
    let complement = dset.complement();
    let mut sums = Vec::with_capacity(p.ell as usize);
    let mut chosen = None;
    for mu in 0..p.ell as i64 {
        let labels = p_cycle(p, mu);
        let closing = if mu == 2 * k || mu == 2 * k + 1 {
            Closing::Repeat
        } else {
            Closing::AtZero
        };
        let lifted = lift_gon(last, &labels, closing, p);
        let mut full = phi.clone();
        record_steps(&lifted, p, &mut full)?;
        let sum = p.reduce_short(
            complement
                .iter()
                .map(|&i| {
                    let v = full.at(i) as i64;
                    if i % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                })
                .sum(),
        );
        sums.push(sum);
        if sum == target && chosen.is_none() {
            chosen = Some((mu as u32, lifted, full));
        }
    }
    let (mu, lifted, phi) = chosen.ok_or(Error::NoMuFound(target))?;
    cycles.push(lifted);
    Ok(LiftedShorts {
        cycles,
        phi,
        mu,
        sums,
    })
}
