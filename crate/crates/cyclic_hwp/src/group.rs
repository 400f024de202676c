//! Vertices of `Z_long_len x Z_ell`, cycles on them, and difference lists.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::Params;

/// A vertex `(a, b)` with `a` mod `long_len` and `b` mod `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex(pub u32, pub u32);

impl Vertex {
    /// Reduce an integer pair into canonical residues.
    pub fn reduce(a: i64, b: i64, p: &Params) -> Self {
        Vertex(p.reduce_long(a), p.reduce_short(b))
    }

    pub fn add(self, other: Vertex, p: &Params) -> Self {
        Vertex((self.0 + other.0) % p.long_len, (self.1 + other.1) % p.ell)
    }

    pub fn sub(self, other: Vertex, p: &Params) -> Self {
        Vertex(
            (self.0 + p.long_len - other.0) % p.long_len,
            (self.1 + p.ell - other.1) % p.ell,
        )
    }

    pub fn neg(self, p: &Params) -> Self {
        Vertex((p.long_len - self.0) % p.long_len, (p.ell - self.1) % p.ell)
    }

    pub fn in_range(self, p: &Params) -> bool {
        self.0 < p.long_len && self.1 < p.ell
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// A cycle on integers, read modulo `long_len`. Used for the short-cycle skeletons.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZCycle(pub Vec<i64>);

impl ZCycle {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Positive differences `|x - y|` taken as integers, in edge order.
    pub fn edge_lengths(&self) -> Vec<i64> {
        let n = self.0.len();
        (0..n)
            .map(|i| (self.0[(i + 1) % n] - self.0[i]).abs())
            .collect()
    }
}

/// A cycle on vertices of `Z_long_len x Z_ell`, read cyclically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LiftedCycle(pub Vec<Vertex>);

/// Which factor a base cycle generates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Length `ell`, second components pairwise distinct.
    Short,
    /// Length `long_len`, first components pairwise distinct.
    Long,
}

impl LiftedCycle {
    pub fn from_pairs(pairs: &[(i64, i64)], p: &Params) -> Self {
        LiftedCycle(
            pairs
                .iter()
                .map(|&(a, b)| Vertex::reduce(a, b, p))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i], self.0[(i + 1) % n]))
    }

    pub fn has_distinct_vertices(&self) -> bool {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.windows(2).all(|w| w[0] != w[1])
    }

    pub fn translate(&self, by: Vertex, p: &Params) -> Self {
        LiftedCycle(self.0.iter().map(|v| v.add(by, p)).collect())
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        LiftedCycle(v)
    }

    /// Rotation starting at the smallest vertex, heading to the smaller neighbour.
    pub fn canonical(&self) -> Self {
        let n = self.0.len();
        if n == 0 {
            return self.clone();
        }
        let start = (0..n).min_by_key(|&i| self.0[i]).unwrap();
        let next = self.0[(start + 1) % n];
        let prev = self.0[(start + n - 1) % n];
        let out = if next <= prev {
            (0..n).map(|j| self.0[(start + j) % n]).collect()
        } else {
            (0..n).map(|j| self.0[(start + n - j) % n]).collect()
        };
        LiftedCycle(out)
    }

    /// Transversality for the given kind; errors when the length does not fit the kind.
    pub fn is_transversal(&self, kind: Kind, p: &Params) -> Result<bool> {
        match kind {
            Kind::Short => {
                if self.len() != p.ell as usize {
                    return Err(Error::LengthMismatch {
                        expected: p.ell as usize,
                        found: self.len(),
                    });
                }
                let mut seen = vec![false; p.ell as usize];
                for v in &self.0 {
                    if v.1 >= p.ell || std::mem::replace(&mut seen[v.1 as usize], true) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Kind::Long => {
                if self.len() != p.long_len as usize {
                    return Err(Error::LengthMismatch {
                        expected: p.long_len as usize,
                        found: self.len(),
                    });
                }
                let mut seen = vec![false; p.long_len as usize];
                for v in &self.0 {
                    if v.0 >= p.long_len || std::mem::replace(&mut seen[v.0 as usize], true) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

/// Multiset of differences over `Z_long_len x Z_ell`, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffMultiset {
    ell: u32,
    long_len: u32,
    counts: Vec<u32>,
}

impl DiffMultiset {
    pub fn new(p: &Params) -> Self {
        DiffMultiset {
            ell: p.ell,
            long_len: p.long_len,
            counts: vec![0; p.long_len as usize * p.ell as usize],
        }
    }

    fn slot(&self, d: Vertex) -> usize {
        d.0 as usize * self.ell as usize + d.1 as usize
    }

    pub fn insert(&mut self, d: Vertex) {
        let s = self.slot(d);
        self.counts[s] += 1;
    }

    pub fn count(&self, d: Vertex) -> u32 {
        self.counts[self.slot(d)]
    }

    /// Add both `u - w` and `w - u` for every edge of the cycle.
    pub fn add_cycle(&mut self, c: &LiftedCycle, p: &Params) {
        for (u, w) in c.edges() {
            self.insert(w.sub(u, p));
            self.insert(u.sub(w, p));
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    /// Every element with its multiplicity, zero counts skipped.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, u32)> + '_ {
        let ell = self.ell;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(move |(i, &c)| (Vertex(i as u32 / ell, i as u32 % ell), c))
    }

    pub fn is_symmetric(&self) -> bool {
        let (m, l) = (self.long_len, self.ell);
        self.iter().all(|(d, c)| {
            let neg = Vertex((m - d.0) % m, (l - d.1) % l);
            self.count(neg) == c
        })
    }
}

/// The difference list of one cycle.
pub fn differences(c: &LiftedCycle, p: &Params) -> DiffMultiset {
    let mut m = DiffMultiset::new(p);
    m.add_cycle(c, p);
    m
}
