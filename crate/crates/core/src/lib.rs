//! Exact generating functions for cylindric partitions.
//!
//! Series are truncated power series in `q` with exact rational coefficients.
//! A profile's generating function can be computed by brute-force enumeration
//! ([`cylindric::enumerate`]), by summing over chains of slices
//! ([`genfun::chain_series`]) or from Borodin's product ([`genfun::borodin`]).

pub mod cylindric;
pub mod error;
pub mod genfun;
pub mod lemmas;
pub mod qseries;
pub mod slices;

pub use cylindric::{CylindricPartition, Profile, RefinedTable};
pub use error::{Error, Result};
pub use genfun::{Comparison, IdentityId};
pub use qseries::{PochSpec, Series};
pub use slices::{Shape, Slice};
