//! Classical single-pattern matchers used as benchmark baselines and oracles.

pub mod boyer_moore;
pub mod kmp;
pub mod naive;
pub mod rabin_karp;

pub use crate::probe::{Counters, Probe, Silent};
pub use boyer_moore::{build_tables as bm_build_tables, find_all as bm_find_all, BmTables};
pub use kmp::{build_lps, find_all as kmp_find_all, LpsTable};
pub use naive::find_all as naive_find_all;
pub use rabin_karp::{find_all as rk_find_all, rk_hash, RollingHashParams, WindowHashes};
