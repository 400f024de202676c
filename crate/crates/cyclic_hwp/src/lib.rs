//! Cyclic 2-factorizations of the complete graph on `ell * (2*ell*n + 1)` vertices that mix
//! `ell`-cycle factors with `(2*ell*n + 1)`-cycle factors, for `ell = 1 (mod 4)`, `ell >= 9`
//! and `n >= (ell - 1) / 2`.
//!
//! The vertex set is `Z_M x Z_ell` with `M = 2*ell*n + 1`. A solution is given by base
//! cycles: `n` short cycles with distinct second components and `(ell - 1) / 2` long cycles
//! with distinct first components, whose differences cover every nonzero group element
//! exactly once. [`assemble`] builds them; [`check_base`] and [`check_factorization`] verify
//! them independently.
//!
//! ```
//! use cyclic_hwp::{assemble, check_base, Params};
//!
//! let p = Params::new(9, 5).unwrap();
//! let base = assemble(&p).unwrap();
//! assert_eq!((base.shorts.len(), base.longs.len()), (5, 4));
//! assert!(check_base(&base).ok);
//! ```

pub mod alpha_path;
pub mod certificate;
pub mod completion;
pub mod error;
pub mod group;
pub mod long_cycles;
pub mod params;
pub mod short_cycles;
pub mod signmap;
pub mod skolem;
pub mod verify;

pub use completion::{assemble, BaseCycleSet, Provenance};
pub use error::{Error, Result};
pub use group::{Kind, LiftedCycle, Vertex};
pub use params::Params;
pub use skolem::{generate_skolem, validate_skolem, SkolemSeq};
pub use verify::{check_base, check_factorization, develop, CoverageReport, Factorization};
