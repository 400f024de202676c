//! Independent checks: difference coverage of base cycles, orbit development, and
//! edge-level validation of the developed 2-factorization.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::completion::BaseCycleSet;
use crate::error::{Error, Result};
use crate::group::{DiffMultiset, Kind, LiftedCycle, Vertex};
use crate::params::Params;

/// A cycle or factor that failed a structural check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleFault {
    pub kind: Kind,
    /// Position in the base list or factor list; `None` for count mismatches.
    pub index: Option<usize>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub ok: bool,
    /// Nonzero differences (or edge classes) never covered.
    pub missing: Vec<Vertex>,
    /// Differences (or edge classes) covered more than once.
    pub duplicated: Vec<Vertex>,
    pub transversality_failures: Vec<CycleFault>,
    /// Identifies the checked input so that [`develop`] can refuse unchecked data.
    #[serde(skip)]
    fingerprint: u64,
}

impl CoverageReport {
    fn finish(
        missing: Vec<Vertex>,
        duplicated: Vec<Vertex>,
        faults: Vec<CycleFault>,
        fingerprint: u64,
    ) -> Self {
        CoverageReport {
            ok: missing.is_empty() && duplicated.is_empty() && faults.is_empty(),
            missing,
            duplicated,
            transversality_failures: faults,
            fingerprint,
        }
    }
}

fn fingerprint(base: &BaseCycleSet) -> u64 {
    let mut h = DefaultHasher::new();
    base.params.hash(&mut h);
    base.shorts.hash(&mut h);
    base.longs.hash(&mut h);
    h.finish()
}

fn cycle_fault(c: &LiftedCycle, kind: Kind, index: usize, p: &Params) -> Option<CycleFault> {
    let reason = if c.0.iter().any(|v| !v.in_range(p)) {
        "vertex outside the group".to_string()
    } else {
        match c.is_transversal(kind, p) {
            Ok(true) => return None,
            Ok(false) => "not transversal".to_string(),
            Err(e) => e.to_string(),
        }
    };
    Some(CycleFault {
        kind,
        index: Some(index),
        reason,
    })
}

/// Exact accounting of every nonzero difference over all base cycles.
pub fn check_base(base: &BaseCycleSet) -> CoverageReport {
    let p = &base.params;
    let mut faults = Vec::new();
    for (kind, list, want) in [
        (Kind::Short, &base.shorts, p.short_bases),
        (Kind::Long, &base.longs, p.long_bases),
    ] {
        if list.len() != want as usize {
            faults.push(CycleFault {
                kind,
                index: None,
                reason: format!("expected {want} base cycles, found {}", list.len()),
            });
        }
        faults.extend(
            list.iter()
                .enumerate()
                .filter_map(|(i, c)| cycle_fault(c, kind, i, p)),
        );
    }
    let mut diffs = DiffMultiset::new(p);
    for c in base.shorts.iter().chain(&base.longs) {
        if c.0.iter().all(|v| v.in_range(p)) {
            diffs.add_cycle(c, p);
        }
    }
    let mut missing = Vec::new();
    let mut duplicated = Vec::new();
    for a in 0..p.long_len {
        for b in 0..p.ell {
            let d = Vertex(a, b);
            match (d == Vertex(0, 0), diffs.count(d)) {
                (true, 0) | (false, 1) => {}
                (false, 0) => missing.push(d),
                _ => duplicated.push(d),
            }
        }
    }
    CoverageReport::finish(missing, duplicated, faults, fingerprint(base))
}

/// Which orbit a factor comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactorId {
    pub kind: Kind,
    /// Index into the short or long base list.
    pub base: usize,
    /// Translation applied to the whole factor: second component for short factors, first for long ones.
    pub shift: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub id: FactorId,
    pub cycles: Vec<LiftedCycle>,
}

/// All 2-factors generated by a checked base set, produced on demand.
#[derive(Debug, Clone)]
pub struct Factorization {
    params: Params,
    shorts: Vec<LiftedCycle>,
    longs: Vec<LiftedCycle>,
}

impl Factorization {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.short_count() + self.long_count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of factors made of short cycles.
    pub fn short_count(&self) -> usize {
        self.shorts.len() * self.params.ell as usize
    }

    pub fn long_count(&self) -> usize {
        self.longs.len() * self.params.long_len as usize
    }

    pub fn id(&self, index: usize) -> Option<FactorId> {
        let ell = self.params.ell as usize;
        let m = self.params.long_len as usize;
        if index < self.short_count() {
            Some(FactorId {
                kind: Kind::Short,
                base: index / ell,
                shift: (index % ell) as u32,
            })
        } else if index < self.len() {
            let j = index - self.short_count();
            Some(FactorId {
                kind: Kind::Long,
                base: j / m,
                shift: (j % m) as u32,
            })
        } else {
            None
        }
    }

    /// Short base `A` gives `A + (j, shift)` over all `j`; long base `B` gives `B + (shift, i)` over all `i`.
    pub fn factor(&self, index: usize) -> Option<Factor> {
        let id = self.id(index)?;
        let p = &self.params;
        let cycles = match id.kind {
            Kind::Short => {
                let a = &self.shorts[id.base];
                (0..p.long_len)
                    .map(|j| a.translate(Vertex(j, id.shift), p))
                    .collect()
            }
            Kind::Long => {
                let b = &self.longs[id.base];
                (0..p.ell)
                    .map(|i| b.translate(Vertex(id.shift, i), p))
                    .collect()
            }
        };
        Some(Factor { id, cycles })
    }

    pub fn iter(&self) -> impl Iterator<Item = Factor> + '_ {
        (0..self.len()).filter_map(move |i| self.factor(i))
    }
}

/// Orbit development; `report` must be a passing [`check_base`] report for this exact base set.
pub fn develop(base: &BaseCycleSet, report: &CoverageReport) -> Result<Factorization> {
    if !report.ok || report.fingerprint != fingerprint(base) {
        return Err(Error::DevelopBeforeCheck);
    }
    Ok(Factorization {
        params: base.params,
        shorts: base.shorts.clone(),
        longs: base.longs.clone(),
    })
}

/// One bit per unordered vertex pair.
struct EdgeSet {
    vertices: usize,
    bits: Vec<u64>,
}

impl EdgeSet {
    fn new(vertices: usize) -> Self {
        EdgeSet {
            vertices,
            bits: vec![0; (vertices * vertices).div_ceil(64)],
        }
    }

    /// Returns false if the edge was already present.
    fn insert(&mut self, u: usize, w: usize) -> bool {
        let (lo, hi) = if u < w { (u, w) } else { (w, u) };
        let slot = lo * self.vertices + hi;
        let mask = 1u64 << (slot % 64);
        let fresh = self.bits[slot / 64] & mask == 0;
        self.bits[slot / 64] |= mask;
        fresh
    }

    fn contains(&self, u: usize, w: usize) -> bool {
        let slot = u * self.vertices + w;
        self.bits[slot / 64] & (1u64 << (slot % 64)) != 0
    }
}

fn factor_fault(
    f: &Factor,
    index: usize,
    p: &Params,
    seen: &mut [u32],
    stamp: u32,
) -> Option<String> {
    let want = match f.id.kind {
        Kind::Short => p.ell as usize,
        Kind::Long => p.long_len as usize,
    };
    let mut covered = 0usize;
    for c in &f.cycles {
        if c.len() != want {
            return Some(format!(
                "cycle of length {} in a factor of {want}-cycles",
                c.len()
            ));
        }
        for v in &c.0 {
            if !v.in_range(p) {
                return Some(format!("vertex {v} outside the group"));
            }
            let slot = (v.0 * p.ell + v.1) as usize;
            if seen[slot] == stamp {
                return Some(format!("vertex {v} appears twice"));
            }
            seen[slot] = stamp;
            covered += 1;
        }
    }
    if covered != p.order as usize {
        return Some(format!(
            "factor {index} covers {covered} of {} vertices",
            p.order
        ));
    }
    None
}

/// Checks every factor is a spanning union of cycles of its tagged length, and that
/// together the factors use every edge of the complete graph exactly once.
pub fn check_factorization(fact: &Factorization, p: &Params) -> CoverageReport {
    check_factors(fact.iter(), p, fact.short_count(), fact.long_count())
}

/// As [`check_factorization`] over an explicit list of factors.
pub fn check_factors(
    factors: impl Iterator<Item = Factor>,
    p: &Params,
    short_expected: usize,
    long_expected: usize,
) -> CoverageReport {
    let v = p.order as usize;
    let index_of = |x: Vertex| (x.0 * p.ell + x.1) as usize;
    let vertex_of = |i: usize| Vertex(i as u32 / p.ell, i as u32 % p.ell);
    let mut edges = EdgeSet::new(v);
    let mut seen = vec![0u32; v];
    let mut faults = Vec::new();
    let mut dup = DiffMultiset::new(p);
    let mut counts = [0usize; 2];
    for (index, f) in factors.enumerate() {
        counts[(f.id.kind == Kind::Long) as usize] += 1;
        if let Some(reason) = factor_fault(&f, index, p, &mut seen, index as u32 + 1) {
            faults.push(CycleFault {
                kind: f.id.kind,
                index: Some(index),
                reason,
            });
            continue;
        }
        for c in &f.cycles {
            for (a, b) in c.edges() {
                if !edges.insert(index_of(a), index_of(b)) {
                    dup.insert(b.sub(a, p));
                }
            }
        }
    }
    for (kind, found, want) in [
        (Kind::Short, counts[0], short_expected),
        (Kind::Long, counts[1], long_expected),
    ] {
        if found != want {
            faults.push(CycleFault {
                kind,
                index: None,
                reason: format!("expected {want} factors, found {found}"),
            });
        }
    }
    let mut missing_classes = DiffMultiset::new(p);
    for u in 0..v {
        for w in u + 1..v {
            if !edges.contains(u, w) {
                missing_classes.insert(vertex_of(w).sub(vertex_of(u), p));
            }
        }
    }
    let missing = missing_classes.iter().map(|(d, _)| d).collect();
    let duplicated = dup.iter().map(|(d, _)| d).collect();
    CoverageReport::finish(missing, duplicated, faults, 0)
}
