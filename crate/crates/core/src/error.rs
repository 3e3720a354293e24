use std::io;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input already contains the sentinel byte {sentinel:#04x} at offset {offset}")]
    SentinelCollision { sentinel: u8, offset: usize },
    #[error("patterns must contain at least one byte")]
    EmptyPattern,
    #[error("index construction requires a sentinel-terminated text with a non-empty body")]
    MissingSentinel,
    #[error("suffix tree is already finalized")]
    AlreadyFinalized,
    #[error("suffix tree must be finalized before it can be queried")]
    NotFinalized,
    #[error("text body of {len} bytes exceeds the suffix trie cap of {cap} bytes")]
    TrieCapExceeded { len: usize, cap: usize },
    #[error("text of {len} bytes is too long for 32-bit node coordinates")]
    TextTooLong { len: usize },
    #[error("invalid alphabet weights: {0}")]
    InvalidWeights(String),
    #[error("malformed FASTA: {0}")]
    MalformedFasta(String),
    #[error("illegal base {byte:#04x} on FASTA line {line}")]
    IllegalBase { byte: u8, line: usize },
    #[error("bad range: {0}")]
    BadRange(String),
    #[error("invalid benchmark configuration: {0}")]
    InvalidConfig(String),
    #[error(
        "result mismatch: {algorithm} found {got} matches, {reference} found {expected} \
         (text_len={text_len}, trial={trial})"
    )]
    ResultMismatch {
        algorithm: &'static str,
        reference: &'static str,
        got: usize,
        expected: usize,
        text_len: usize,
        trial: usize,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
