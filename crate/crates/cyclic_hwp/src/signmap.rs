//! Odd partial maps from `Z_long_len` to `{±1, ±2}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::params::Params;

/// Stored densely over `Z_long_len`; 0 marks "undefined". Setting `x` also sets `-x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignMap {
    long_len: u32,
    half_span: i64,
    values: Vec<i8>,
}

impl SignMap {
    pub fn new(p: &Params) -> Self {
        SignMap {
            long_len: p.long_len,
            half_span: p.half_span(),
            values: vec![0; p.long_len as usize],
        }
    }

    fn slot(&self, x: i64) -> usize {
        x.rem_euclid(self.long_len as i64) as usize
    }

    pub fn get(&self, x: i64) -> Option<i8> {
        match self.values[self.slot(x)] {
            0 => None,
            v => Some(v),
        }
    }

    /// Value at `x`, panicking when undefined. For internal use on total maps.
    pub fn at(&self, x: i64) -> i8 {
        self.get(x)
            .unwrap_or_else(|| panic!("sign map undefined at {x}"))
    }

    /// Define `x -> v` and `-x -> -v`; errors if either side already holds a different value.
    pub fn set(&mut self, x: i64, v: i8) -> Result<()> {
        debug_assert!(matches!(v, -2 | -1 | 1 | 2));
        let (a, b) = (self.slot(x), self.slot(-x));
        for (s, val) in [(a, v), (b, -v)] {
            if self.values[s] != 0 && self.values[s] != val {
                return Err(Error::DomainOverlap(x));
            }
            self.values[s] = val;
        }
        Ok(())
    }

    /// Copy with `x -> v` and `-x -> -v`, overwriting any previous values.
    pub fn with_value(&self, x: i64, v: i8) -> Self {
        let mut out = self.clone();
        let (a, b) = (out.slot(x), out.slot(-x));
        out.values[a] = v;
        out.values[b] = -v;
        out
    }

    pub fn contains(&self, x: i64) -> bool {
        self.get(x).is_some()
    }

    /// Defined points in `[1, ell*n]`, ascending.
    pub fn positive_entries(&self) -> impl Iterator<Item = (i64, i8)> + '_ {
        (1..=self.half_span).filter_map(move |x| self.get(x).map(|v| (x, v)))
    }

    pub fn len(&self) -> usize {
        self.values.iter().filter(|&&v| v != 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_odd(&self) -> bool {
        (0..self.long_len as i64).all(|x| match (self.get(x), self.get(-x)) {
            (Some(a), Some(b)) => a == -b,
            (None, None) => true,
            _ => false,
        })
    }

    /// `sum_{i=lo}^{hi} (-1)^i value(i)` as a plain integer.
    pub fn alternating_sum(&self, lo: i64, hi: i64) -> i64 {
        (lo..=hi)
            .map(|i| {
                if i % 2 == 0 {
                    self.at(i) as i64
                } else {
                    -(self.at(i) as i64)
                }
            })
            .sum()
    }

    /// Positive entries as an ordered table.
    pub fn to_table(&self) -> BTreeMap<i64, i8> {
        self.positive_entries().collect()
    }

    pub fn from_table(p: &Params, table: &BTreeMap<i64, i8>) -> Result<Self> {
        let mut m = SignMap::new(p);
        for (&x, &v) in table {
            if !matches!(v, -2 | -1 | 1 | 2) {
                return Err(Error::Schema(format!(
                    "sign map value {v} at {x} is not in {{±1, ±2}}"
                )));
            }
            if x < 1 || x > p.half_span() {
                return Err(Error::Schema(format!("sign map key {x} out of range")));
            }
            m.set(x, v)?;
        }
        Ok(m)
    }
}
