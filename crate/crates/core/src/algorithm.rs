//! Uniform handle over every matcher in the crate.

use std::fmt;
use std::str::FromStr;

use crate::baselines::{self, RollingHashParams};
use crate::error::{Error, Result};
use crate::suffix_tree::SuffixTreeIndex;
use crate::suffix_trie::SuffixTrieIndex;
use crate::text::{MatchSet, Pattern, Text};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Naive,
    Kmp,
    RabinKarp,
    BoyerMoore,
    SuffixTrie,
    SuffixTree,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Naive,
        Algorithm::Kmp,
        Algorithm::RabinKarp,
        Algorithm::BoyerMoore,
        Algorithm::SuffixTrie,
        Algorithm::SuffixTree,
    ];

    /// Short name used on the command line and in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Kmp => "kmp",
            Algorithm::RabinKarp => "rk",
            Algorithm::BoyerMoore => "bm",
            Algorithm::SuffixTrie => "strie",
            Algorithm::SuffixTree => "stree",
        }
    }

    /// Whether the algorithm builds an index before answering queries.
    pub fn is_index(self) -> bool {
        matches!(self, Algorithm::SuffixTrie | Algorithm::SuffixTree)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Algorithm> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                Error::InvalidConfig(format!(
                    "unknown algorithm {s:?} (expected one of naive, kmp, rk, bm, strie, stree)"
                ))
            })
    }
}

/// An algorithm ready to answer queries over one text.
pub enum Searcher {
    Scan(Algorithm, Text),
    Trie(SuffixTrieIndex),
    Tree(SuffixTreeIndex),
}

impl Searcher {
    /// Scanning algorithms keep the text as given; index algorithms append
    /// the sentinel and build (the trie subject to `trie_cap`).
    pub fn prepare(algorithm: Algorithm, text: &Text, trie_cap: usize) -> Result<Searcher> {
        Ok(match algorithm {
            Algorithm::SuffixTrie => Searcher::Trie(SuffixTrieIndex::build_capped(
                text.with_sentinel()?,
                trie_cap,
            )?),
            Algorithm::SuffixTree => Searcher::Tree(SuffixTreeIndex::build(text.with_sentinel()?)?),
            scan => Searcher::Scan(scan, text.clone()),
        })
    }

    pub fn find_all(&self, pattern: &Pattern) -> MatchSet {
        match self {
            Searcher::Scan(Algorithm::Naive, t) => baselines::naive_find_all(t, pattern),
            Searcher::Scan(Algorithm::Kmp, t) => baselines::kmp_find_all(t, pattern),
            Searcher::Scan(Algorithm::RabinKarp, t) => {
                baselines::rk_find_all(t, pattern, RollingHashParams::default())
            }
            Searcher::Scan(Algorithm::BoyerMoore, t) => baselines::bm_find_all(t, pattern),
            Searcher::Scan(index, _) => unreachable!("{index} is never a scan"),
            Searcher::Trie(trie) => trie.find_all(pattern),
            Searcher::Tree(tree) => tree
                .find_all(pattern)
                .expect("searcher trees are finalized"),
        }
    }

    /// Occurrence count; the suffix tree answers from its leaf counts.
    pub fn count(&self, pattern: &Pattern) -> usize {
        match self {
            Searcher::Tree(tree) => tree.count(pattern).expect("searcher trees are finalized"),
            other => other.find_all(pattern).len(),
        }
    }

    /// Index node count, 0 for scanning algorithms.
    pub fn nodes(&self) -> usize {
        match self {
            Searcher::Scan(..) => 0,
            Searcher::Trie(trie) => trie.node_count(),
            Searcher::Tree(tree) => tree.node_count(),
        }
    }

    /// Deterministic index size estimate, 0 for scanning algorithms.
    pub fn logical_bytes(&self) -> usize {
        match self {
            Searcher::Scan(..) => 0,
            Searcher::Trie(trie) => trie.stats().logical_bytes,
            Searcher::Tree(tree) => tree.node_count() * crate::suffix_tree::TREE_NODE_BYTES,
        }
    }
}
