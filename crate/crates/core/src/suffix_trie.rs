//! Uncompressed suffix trie: one node per distinct substring of the
//! sentinel-terminated text, plus the root.
//!
//! Construction inserts every suffix byte by byte, which is quadratic in the
//! text length. The trie exists for node-count comparisons against the
//! suffix tree and as a structural oracle for it, so bodies longer than a cap
//! are refused.

use crate::error::{Error, Result};
use crate::text::{MatchSet, Pattern, Text};

/// Default longest body accepted by [`SuffixTrieIndex::build`].
pub const DEFAULT_TRIE_CAP: usize = 100_000;

/// Bytes charged per node in [`TrieStats::logical_bytes`]: a one-byte edge
/// key, a 4-byte child id, a 4-byte suffix start and 7 bytes of child-list
/// overhead.
pub const TRIE_NODE_BYTES: usize = 16;

const NO_SUFFIX: u32 = u32::MAX;
const ROOT: u32 = 0;

#[derive(Clone, Debug, Default)]
struct TrieNode {
    // sorted by key
    children: Vec<(u8, u32)>,
    // start of the unique suffix ending here; leaves only
    suffix_start: u32,
}

impl TrieNode {
    fn child(&self, byte: u8) -> Option<u32> {
        self.children
            .binary_search_by_key(&byte, |&(b, _)| b)
            .ok()
            .map(|i| self.children[i].1)
    }
}

/// Structure counts for a built trie.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrieStats {
    pub node_count: usize,
    pub internal_count: usize,
    pub leaf_count: usize,
    /// Edges on the longest root-to-leaf path.
    pub max_depth: usize,
    pub logical_bytes: usize,
}

/// The trie after merging every unary non-root chain into a single edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactedTrie {
    pub node_count: usize,
    /// Edge labels, sorted.
    pub edge_labels: Vec<Vec<u8>>,
}

#[derive(Clone, Debug)]
pub struct SuffixTrieIndex {
    text: Text,
    nodes: Vec<TrieNode>,
}

impl SuffixTrieIndex {
    /// Builds with the [`DEFAULT_TRIE_CAP`].
    pub fn build(text: Text) -> Result<SuffixTrieIndex> {
        SuffixTrieIndex::build_capped(text, DEFAULT_TRIE_CAP)
    }

    pub fn build_capped(text: Text, cap: usize) -> Result<SuffixTrieIndex> {
        if !text.has_sentinel() || text.is_empty() {
            return Err(Error::MissingSentinel);
        }
        if text.len() > cap {
            return Err(Error::TrieCapExceeded {
                len: text.len(),
                cap,
            });
        }
        if text.as_bytes().len() >= NO_SUFFIX as usize {
            return Err(Error::TextTooLong { len: text.len() });
        }
        let mut nodes = vec![TrieNode {
            children: Vec::new(),
            suffix_start: NO_SUFFIX,
        }];
        let bytes = text.as_bytes();
        for start in 0..bytes.len() {
            let mut cur = ROOT;
            for &b in &bytes[start..] {
                let node = &nodes[cur as usize];
                cur = match node.children.binary_search_by_key(&b, |&(k, _)| k) {
                    Ok(i) => node.children[i].1,
                    Err(i) => {
                        let id = nodes.len() as u32;
                        nodes[cur as usize].children.insert(i, (b, id));
                        nodes.push(TrieNode {
                            children: Vec::new(),
                            suffix_start: NO_SUFFIX,
                        });
                        id
                    }
                };
            }
            // the sentinel makes this node fresh and childless
            nodes[cur as usize].suffix_start = start as u32;
        }
        Ok(SuffixTrieIndex { text, nodes })
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    /// Node count including the root.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.children.is_empty()).count()
    }

    /// Descends one byte per pattern byte and collects the suffix starts of
    /// every leaf below the node reached.
    pub fn find_all(&self, pattern: &Pattern) -> MatchSet {
        let mut cur = ROOT;
        for &b in pattern.as_bytes() {
            match self.nodes[cur as usize].child(b) {
                Some(next) => cur = next,
                None => return MatchSet::new(),
            }
        }
        let mut starts = Vec::new();
        let mut stack = vec![cur];
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id as usize];
            if node.children.is_empty() {
                starts.push(node.suffix_start as usize);
            } else {
                stack.extend(node.children.iter().map(|&(_, c)| c));
            }
        }
        MatchSet::from_unsorted(starts)
    }

    pub fn stats(&self) -> TrieStats {
        let leaf_count = self.leaf_count();
        let mut max_depth = 0;
        let mut stack = vec![(ROOT, 0usize)];
        while let Some((id, depth)) = stack.pop() {
            max_depth = max_depth.max(depth);
            stack.extend(
                self.nodes[id as usize]
                    .children
                    .iter()
                    .map(|&(_, c)| (c, depth + 1)),
            );
        }
        TrieStats {
            node_count: self.node_count(),
            internal_count: self.node_count() - leaf_count,
            leaf_count,
            max_depth,
            logical_bytes: self.node_count() * TRIE_NODE_BYTES,
        }
    }

    /// Merges unary chains below the root into single labelled edges.
    pub fn compact(&self) -> CompactedTrie {
        let mut labels = Vec::new();
        let mut stack = vec![ROOT];
        while let Some(id) = stack.pop() {
            for &(b, child) in &self.nodes[id as usize].children {
                let mut label = vec![b];
                let mut end = child;
                while let [(b, next)] = self.nodes[end as usize].children[..] {
                    label.push(b);
                    end = next;
                }
                labels.push(label);
                stack.push(end);
            }
        }
        labels.sort();
        CompactedTrie {
            node_count: labels.len() + 1,
            edge_labels: labels,
        }
    }
}

pub fn build_suffix_trie(text: Text) -> Result<SuffixTrieIndex> {
    SuffixTrieIndex::build(text)
}

pub fn trie_find_all(index: &SuffixTrieIndex, pattern: &Pattern) -> MatchSet {
    index.find_all(pattern)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn trie(s: &str) -> SuffixTrieIndex {
        SuffixTrieIndex::build(Text::new(s, true).unwrap()).unwrap()
    }

    fn distinct_substrings(bytes: &[u8]) -> usize {
        let mut set = HashSet::new();
        for i in 0..bytes.len() {
            for j in i + 1..=bytes.len() {
                set.insert(&bytes[i..j]);
            }
        }
        set.len()
    }

    #[test]
    fn mississippi_has_66_nodes() {
        assert_eq!(distinct_substrings(b"mississippi\x00"), 65);
        assert_eq!(trie("mississippi").node_count(), 66);
    }

    #[test]
    fn small_counts() {
        assert_eq!(distinct_substrings(b"abab\x00"), 12);
        assert_eq!(trie("abab").node_count(), 13);
        assert_eq!(trie("a").node_count(), 4);
    }

    #[test]
    fn leaves_are_one_per_suffix() {
        let t = trie("banana");
        assert_eq!(t.leaf_count(), 7);
        let s = t.stats();
        assert_eq!(s.leaf_count, 7);
        assert_eq!(s.max_depth, 7);
        assert_eq!(s.internal_count + s.leaf_count, s.node_count);
    }

    #[test]
    fn search_examples() {
        let p = |s: &str| Pattern::new(s).unwrap();
        assert_eq!(trie("banana").find_all(&p("ana")).offsets(), &[1, 3]);
        assert!(trie("banana").find_all(&p("x")).is_empty());
        assert_eq!(trie("mississippi").find_all(&p("issi")).offsets(), &[1, 4]);
    }

    #[test]
    fn requires_sentinel_and_respects_cap() {
        assert!(matches!(
            SuffixTrieIndex::build(Text::plain("abc")),
            Err(Error::MissingSentinel)
        ));
        assert!(matches!(
            SuffixTrieIndex::build(Text::new("", true).unwrap()),
            Err(Error::MissingSentinel)
        ));
        assert!(matches!(
            SuffixTrieIndex::build_capped(Text::new("abcd", true).unwrap(), 3),
            Err(Error::TrieCapExceeded { len: 4, cap: 3 })
        ));
    }

    #[test]
    fn compacted_banana() {
        let c = trie("banana").compact();
        assert_eq!(c.node_count, 11);
        let strs: Vec<&[u8]> = c.edge_labels.iter().map(|l| &l[..]).collect();
        assert!(strs.contains(&&b"banana\x00"[..]));
        assert!(strs.contains(&&b"na"[..]));
    }
}
