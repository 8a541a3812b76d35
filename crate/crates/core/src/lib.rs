//! Certified computation of the integer partition function.
//!
//! - [`exact`]: exact `p(n)` via the pentagonal recurrence, an independent
//!   brute-force oracle and a persistent table.
//! - [`enclosure`]: directed-rounding interval arithmetic.
//! - [`series`]: the Rademacher series, Lehmer's remainder bound and the
//!   dominant term `T(n)`.
//! - [`bounds`]: explicit sandwich bounds on second log-differences.
//! - [`decay`]: exact second log-differences and their asymptotic expansions.
//! - [`verify`]: range scans producing machine-readable reports.
//! - [`cli`]: the `partcert` command-line front end.

pub mod enclosure;
pub mod error;
pub mod exact;
pub mod series;
pub mod bounds;
pub mod decay;
pub mod verify;
pub mod cli;

pub use enclosure::{binary, unary, BinaryOp, Enclosure, UnaryFn};
pub use error::{Error, Result};
pub use exact::PartitionTable;
