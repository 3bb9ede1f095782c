//! Schubert calculus on the Grassmannian `G(k,n)` of projective `k`-planes in
//! projective `n`-space.
//!
//! The crate provides the cohomology ring in the Schubert basis, an explicit
//! construction of Littlewood-Richardson tableaux certifying that
//! `sigma_a * sigma_b != 0` whenever `|a| + |b| <= n`, an exhaustive
//! computation of the effective good divisibility of `G(k,n)`, and the
//! Chern-series argument showing that morphisms `G(k,n) -> G(l,m)` with
//! `n > m` are constant.

pub mod cohomology;
pub mod divisibility;
pub mod partitions;
pub mod tableaux;
pub mod tango;
pub mod witness;

pub use cohomology::{CohomologyClass, CohomologyError};
pub use partitions::{GrassContext, Partition, PartitionError, SkewShape};
pub use tableaux::{SkewFilling, Weight};
