//! Exact-arithmetic construction of equivariant Pieri resolutions.
//!
//! The crate is `no_std` and needs only `alloc`. Everything is exact: integers
//! are arbitrary precision and matrix entries are rationals. Caches live in
//! caller-owned context values instead of global state, so there is no locking.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod admissible;
pub mod betti;
pub mod classical;
pub mod error;
pub mod linalg;
pub mod minimize;
pub mod olver;
pub mod partition;
pub mod resolution;
pub mod straighten;
pub mod symfunc;
pub mod tableau;

pub use error::Error;
pub use partition::Partition;

/// Default bound on `dim S_λ V` for explicit matrix constructions.
pub const DEFAULT_SIZE_CAP: u64 = 5000;
