use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by the simulator library.
#[derive(Debug, Error)]
pub enum SimError {
    /// A packet arrival was recorded with a timestamp earlier than its
    /// previous arrival, which a single global simulation clock forbids.
    #[error("packet {packet}: arrival at {arrival} precedes last arrival {last}")]
    MonotonicClockViolation {
        packet: u64,
        arrival: u64,
        last: u64,
    },

    /// A hop arrival was recorded for a packet that already reached its
    /// final hop.
    #[error("packet {packet}: hop recorded beyond its total of {total_hops} hops")]
    Overtraversal { packet: u64, total_hops: u32 },

    /// The delay threshold is undefined for a packet at its destination
    /// (no remaining hops to divide the remaining lifetime over).
    #[error("packet {packet}: no delay threshold at destination (0 remaining hops)")]
    NoThreshold { packet: u64 },

    /// An experiment or simulation parameter failed validation.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Throughput over a zero-length run is undefined.
    #[error("throughput is undefined for a zero-tick duration")]
    UndefinedRate,

    /// Two run results cannot be compared (different cell coordinates).
    #[error("cannot compare runs: {0}")]
    Comparison(String),

    /// An output file could not be written or read.
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// An emitted results file failed to parse back.
    #[error("{path}: parse error at line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
}

impl SimError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        SimError::Io {
            path: path.into(),
            source,
        }
    }
}
