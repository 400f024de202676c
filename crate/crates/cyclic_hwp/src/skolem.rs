//! Ordinary and hooked Skolem sequences.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// The pairs cover `[1, 2n]`.
    Ordinary,
    /// The pairs cover `[1, 2n+1]` minus `2n`.
    Hooked,
}

impl Flavor {
    pub fn for_order(order: u32) -> Self {
        if order % 4 <= 1 {
            Flavor::Ordinary
        } else {
            Flavor::Hooked
        }
    }
}

/// `entries[i-1]` is the smaller position of the pair at distance `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkolemSeq {
    pub order: u32,
    pub entries: Vec<u32>,
    pub flavor: Flavor,
}

impl SkolemSeq {
    /// The entry for distance `i`, 1-indexed.
    pub fn get(&self, i: u32) -> u32 {
        self.entries[i as usize - 1]
    }
}

/// Orders up to this size are solved by backtracking, which gives the lexicographically first sequence.
const SMALL_ORDER: u32 = 12;

/// A Skolem sequence of the given order, deterministic.
///
/// Ordinary orders above [`SMALL_ORDER`] use closed forms. Hooked orders use an exact-cover
/// search that always branches on the most constrained distance or position.
pub fn generate_skolem(order: u32) -> Result<SkolemSeq> {
    if order == 0 {
        return Err(Error::InvalidOrder(order));
    }
    let flavor = Flavor::for_order(order);
    let entries = if order <= SMALL_ORDER {
        search(order, flavor)
    } else if let Some(pairs) = closed_form(order) {
        from_pairs(order, &pairs)
    } else {
        constrained_search(order, flavor)
    };
    let seq = SkolemSeq {
        order,
        entries,
        flavor,
    };
    debug_assert!(validate_skolem(&seq));
    Ok(seq)
}

/// True when the pairs `{s_i, s_i + i}` cover the set required by the flavor exactly once.
pub fn validate_skolem(seq: &SkolemSeq) -> bool {
    let n = seq.order as usize;
    if n == 0 || seq.entries.len() != n || seq.flavor != Flavor::for_order(seq.order) {
        return false;
    }
    let top = match seq.flavor {
        Flavor::Ordinary => 2 * n,
        Flavor::Hooked => 2 * n + 1,
    };
    let mut hit = vec![false; top + 1];
    for (i, &s) in seq.entries.iter().enumerate() {
        let s = s as usize;
        for pos in [s, s + i + 1] {
            if pos == 0 || pos > top || hit[pos] {
                return false;
            }
            hit[pos] = true;
        }
    }
    match seq.flavor {
        Flavor::Ordinary => true,
        Flavor::Hooked => !hit[2 * n],
    }
}

fn from_pairs(order: u32, pairs: &[(u32, u32)]) -> Vec<u32> {
    let mut entries = vec![0; order as usize];
    for &(lo, hi) in pairs {
        entries[(hi - lo) as usize - 1] = lo;
    }
    entries
}

fn closed_form(order: u32) -> Option<Vec<(u32, u32)>> {
    let s = order / 4;
    let mut p = Vec::with_capacity(order as usize);
    match order % 4 {
        0 if s >= 2 => {
            p.extend((1..=2 * s).map(|r| (4 * s + r - 1, 8 * s - r + 1)));
            p.extend((1..=s - 2).map(|r| (r, 4 * s - r - 1)));
            p.extend((1..=s - 2).map(|r| (s + r + 1, 3 * s - r)));
            p.extend([
                (s - 1, 3 * s),
                (s, s + 1),
                (2 * s, 4 * s - 1),
                (2 * s + 1, 6 * s),
            ]);
        }
        1 if s >= 2 => {
            p.extend((1..=2 * s).map(|r| (4 * s + r + 1, 8 * s - r + 3)));
            p.extend((1..=s).map(|r| (r, 4 * s - r + 1)));
            p.extend((1..=s - 2).map(|r| (s + r + 2, 3 * s - r + 1)));
            p.extend([
                (s + 1, s + 2),
                (2 * s + 2, 4 * s + 1),
                (2 * s + 1, 6 * s + 2),
            ]);
        }
        _ => return None,
    }
    Some(p)
}

fn top_position(n: usize, flavor: Flavor) -> usize {
    match flavor {
        Flavor::Ordinary => 2 * n,
        Flavor::Hooked => 2 * n + 1,
    }
}

fn initial_use(n: usize, flavor: Flavor) -> Vec<bool> {
    let mut used = vec![false; top_position(n, flavor) + 2];
    used[0] = true;
    if flavor == Flavor::Hooked {
        used[2 * n] = true;
    }
    used
}

// Place distance 1, 2, ... in turn at the smallest free position.
fn search(order: u32, flavor: Flavor) -> Vec<u32> {
    let n = order as usize;
    let top = top_position(n, flavor);
    let mut used = initial_use(n, flavor);
    let mut entries = vec![0u32; n];
    fn place(i: usize, n: usize, top: usize, used: &mut [bool], entries: &mut [u32]) -> bool {
        if i > n {
            return true;
        }
        for s in 1..=top.saturating_sub(i) {
            if !used[s] && !used[s + i] {
                used[s] = true;
                used[s + i] = true;
                entries[i - 1] = s as u32;
                if place(i + 1, n, top, used, entries) {
                    return true;
                }
                used[s] = false;
                used[s + i] = false;
            }
        }
        false
    }
    let found = place(1, n, top, &mut used, &mut entries);
    assert!(found, "Skolem sequences exist for every positive order");
    entries
}

struct Cover {
    n: usize,
    top: usize,
    used: Vec<bool>,
    /// Smaller position per distance, 0 while unplaced.
    start: Vec<usize>,
    nodes: u64,
    budget: u64,
    /// Nonzero salts reorder the branches of each node.
    salt: u64,
}

impl Cover {
    fn fits(&self, d: usize, a: usize) -> bool {
        a >= 1 && a + d <= self.top && !self.used[a] && !self.used[a + d]
    }

    fn set(&mut self, d: usize, a: usize, on: bool) {
        self.used[a] = on;
        self.used[a + d] = on;
        self.start[d] = if on { a } else { 0 };
    }

    /// Placements for the distance or free position with the fewest of them; `None` on a dead end.
    fn tightest(&self) -> Option<Vec<(usize, usize)>> {
        let open: Vec<usize> = (1..=self.n).filter(|&d| self.start[d] == 0).collect();
        let mut best: Option<(usize, Choice)> = None;
        for &d in &open {
            let bound = best.as_ref().map_or(usize::MAX, |b| b.0);
            let count = (1..=self.top.saturating_sub(d))
                .filter(|&a| self.fits(d, a))
                .take(bound)
                .count();
            if count == 0 {
                return None;
            }
            if count < bound {
                best = Some((count, Choice::Distance(d)));
            }
        }
        for p in 1..=self.top {
            if self.used[p] {
                continue;
            }
            let bound = best.as_ref().map_or(usize::MAX, |b| b.0);
            let mut count = 0;
            for &d in &open {
                count += self.fits(d, p) as usize + (p > d && self.fits(d, p - d)) as usize;
                if count >= bound {
                    break;
                }
            }
            if count == 0 {
                return None;
            }
            if count < bound {
                best = Some((count, Choice::Position(p)));
            }
        }
        let (_, choice) = best?;
        Some(match choice {
            Choice::Distance(d) => (1..=self.top - d)
                .filter(|&a| self.fits(d, a))
                .map(|a| (d, a))
                .collect(),
            Choice::Position(p) => open
                .iter()
                .rev()
                .flat_map(|&d| [(d, p), (d, p.wrapping_sub(d))])
                .filter(|&(d, a)| a <= p && self.fits(d, a))
                .collect(),
        })
    }

    /// `Some(found)`, or `None` once the node budget runs out.
    fn solve(&mut self, left: usize) -> Option<bool> {
        if left == 0 {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let Some(mut options) = self.tightest() else {
            return Some(false);
        };
        if self.salt != 0 {
            options.sort_by_cached_key(|&o| {
                let mut h = DefaultHasher::new();
                (self.salt, o).hash(&mut h);
                h.finish()
            });
        }
        for (d, a) in options {
            self.set(d, a, true);
            if self.solve(left - 1)? {
                return Some(true);
            }
            self.set(d, a, false);
        }
        Some(false)
    }
}

enum Choice {
    Distance(usize),
    Position(usize),
}

fn constrained_search(order: u32, flavor: Flavor) -> Vec<u32> {
    // The search time is heavy-tailed, so restart with shuffled branches and a growing budget.
    let n = order as usize;
    let mut budget = 4 * n as u64;
    for salt in 0.. {
        let mut c = Cover {
            n,
            top: top_position(n, flavor),
            used: initial_use(n, flavor),
            start: vec![0; n + 1],
            nodes: 0,
            budget,
            salt,
        };
        match c.solve(n) {
            Some(true) => return c.start[1..].iter().map(|&a| a as u32).collect(),
            Some(false) => unreachable!("Skolem sequences exist for every positive order"),
            None => budget += budget / 2,
        }
    }
    unreachable!()
}
