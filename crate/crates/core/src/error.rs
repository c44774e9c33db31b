use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("index (m={m}, r={r}, s={s}) is outside the table domain")]
    IndexOutOfRange { m: i64, r: i64, s: i64 },

    #[error("table is filled through m={filled}, but m={requested} was requested")]
    TableTooSmall { requested: usize, filled: usize },

    /// The signed recurrence summed to a negative value. Only possible if the
    /// recurrence implementation is wrong.
    #[error("recurrence produced a negative count {value} at (m={m}, r={r}, s={s})")]
    NegativeCount {
        m: usize,
        r: usize,
        s: usize,
        value: String,
    },

    #[error(
        "wedge count for n={n} is negative ({value}); the Euler characteristic is inconsistent"
    )]
    NegativeWedgeCount { n: usize, value: String },

    #[error("m={m} exceeds the brute-force bound {bound}")]
    OracleBoundExceeded { m: usize, bound: usize },

    #[error("cache line {line}: {msg}")]
    CacheParse { line: usize, msg: String },

    #[error("unsupported cache header {0:?}")]
    CacheVersion(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
