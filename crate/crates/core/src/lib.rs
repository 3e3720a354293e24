//! Exact string matching over byte texts.
//!
//! The centrepiece is [`suffix_tree::SuffixTreeIndex`], built online with
//! Ukkonen's algorithm and annotated with per-node leaf counts and suffix
//! coordinates so that counting an occurrence set costs a single descent.
//! Around it sit an uncompressed [`suffix_trie`] for node-count comparisons,
//! four classical [`baselines`], seeded dataset generation and ingestion in
//! [`datagen`], and the measurement harness in [`bench`].
//!
//! All matchers report every occurrence, overlapping ones included, as a
//! sorted [`MatchSet`] of 0-based offsets:
//!
//! ```
//! use suffixsearch::{Pattern, Text};
//! use suffixsearch::suffix_tree::SuffixTreeIndex;
//!
//! let tree = SuffixTreeIndex::build(Text::new("mississippi", true)?)?;
//! let issi = Pattern::new("issi")?;
//! assert_eq!(tree.find_all(&issi)?.offsets(), &[1, 4]);
//! assert_eq!(tree.count(&issi)?, 2);
//! # Ok::<(), suffixsearch::Error>(())
//! ```

pub mod algorithm;
pub mod baselines;
pub mod bench;
pub mod cli;
pub mod datagen;
pub mod error;
pub mod probe;
pub mod suffix_tree;
pub mod suffix_trie;
pub mod text;
pub mod verify;

pub use algorithm::Algorithm;
pub use error::{Error, Result};
pub use text::{MatchSet, Pattern, Text, SENTINEL};
pub use verify::{verify_occurrences, Verification};
