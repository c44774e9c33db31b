//! Exact enumeration of rectangulations of a square.
//!
//! * [`combinatorics`]: binomials with a zero convention and the subset and
//!   composition counts used by the recurrence.
//! * [`recursion`]: the layered table `t(m, r, s)` and its marginals.
//! * [`topology`]: Euler characteristic and wedge-sphere counts of the
//!   tiling space.
//! * [`oracle`]: brute-force enumeration of grid tilings, canonical forms,
//!   and cross-checks against the recurrence.
//! * [`cache`]: on-disk table format.
//! * [`cli`]: the `rectcount` command-line front end.

pub mod cache;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod oracle;
pub mod recursion;
pub mod topology;

pub use error::{Error, Result};
pub use recursion::{fill_table, fill_table_with_threads, parity_report, CountTable, ParityReport};
pub use topology::{cell_dimension, euler_characteristic, wedge_count, WedgeReport};
