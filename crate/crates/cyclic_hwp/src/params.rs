use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Instance constants for one choice of short length `ell` and multiplier `n`.
///
/// The vertex set has `order = ell * long_len` elements and is identified with
/// `Z_long_len x Z_ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub ell: u32,
    pub n: u32,
    /// `(ell - 1) / 4`
    pub quarter: u32,
    /// Length of a long cycle, `2 * ell * n + 1`.
    pub long_len: u32,
    /// Number of vertices.
    pub order: u32,
    /// Number of 2-factors made of short cycles.
    pub short_factors: u32,
    /// Number of 2-factors made of long cycles.
    pub long_factors: u32,
    /// Number of short base cycles.
    pub short_bases: u32,
    /// Number of long base cycles.
    pub long_bases: u32,
}

impl Params {
    pub fn new(ell: u32, n: u32) -> Result<Self> {
        if ell == 5 {
            return Err(Error::EllNotSupported {
                ell,
                reason: "the case ell = 5 is already settled by earlier constructions",
            });
        }
        if ell % 4 != 1 || ell < 9 {
            return Err(Error::EllNotSupported {
                ell,
                reason: "ell must satisfy ell = 1 (mod 4) and ell >= 9",
            });
        }
        let quarter = (ell - 1) / 4;
        if n < 2 * quarter {
            return Err(Error::NTooSmall {
                n,
                min: 2 * quarter,
            });
        }
        let long_len = 2 * ell as u64 * n as u64 + 1;
        let order = ell as u64 * long_len;
        if order > u32::MAX as u64 / 2 {
            return Err(Error::EllNotSupported {
                ell,
                reason: "instance too large for 32-bit vertex labels",
            });
        }
        let long_len = long_len as u32;
        let p = Params {
            ell,
            n,
            quarter,
            long_len,
            order: order as u32,
            short_factors: ell * n,
            long_factors: (ell - 1) * long_len / 2,
            short_bases: n,
            long_bases: (ell - 1) / 2,
        };
        debug_assert_eq!(
            2 * p.ell as u64 * p.short_bases as u64 + 2 * p.long_len as u64 * p.long_bases as u64,
            p.order as u64 - 1
        );
        Ok(p)
    }

    /// `ell * n`, half of the largest first-component difference.
    pub fn half_span(&self) -> i64 {
        self.ell as i64 * self.n as i64
    }

    /// Reduce `x` into `[0, long_len)`.
    pub fn reduce_long(&self, x: i64) -> u32 {
        x.rem_euclid(self.long_len as i64) as u32
    }

    /// Reduce `x` into `[0, ell)`.
    pub fn reduce_short(&self, x: i64) -> u32 {
        x.rem_euclid(self.ell as i64) as u32
    }

    /// Symmetric representative of a residue modulo `ell`, in `(-ell/2, ell/2]`.
    pub fn signed_short(&self, x: i64) -> i64 {
        let r = x.rem_euclid(self.ell as i64);
        if 2 * r > self.ell as i64 {
            r - self.ell as i64
        } else {
            r
        }
    }

    /// Symmetric representative of a residue modulo `long_len`.
    pub fn signed_long(&self, x: i64) -> i64 {
        let m = self.long_len as i64;
        let r = x.rem_euclid(m);
        if 2 * r > m {
            r - m
        } else {
            r
        }
    }

    /// CRT: the element of `Z_order` congruent to `a` mod `long_len` and `b` mod `ell`.
    pub fn pack(&self, a: u32, b: u32) -> u32 {
        // long_len = 1 (mod ell), so z = a + long_len * ((b - a) mod ell)
        let m = self.long_len as u64;
        let l = self.ell as u64;
        let t = (b as u64 + l - a as u64 % l) % l;
        (a as u64 + m * t) as u32
    }

    pub fn unpack(&self, z: u32) -> (u32, u32) {
        (z % self.long_len, z % self.ell)
    }
}
