use super::{NodeId, SuffixTreeIndex};
use crate::error::Result;
use crate::probe::{Probe, Silent};
use crate::text::{MatchSet, Pattern};

/// Where a successful descent ends: `offset` bytes into the edge leading to
/// `node` (`1 ..= edge length`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Locus {
    pub node: NodeId,
    pub offset: usize,
}

impl SuffixTreeIndex {
    /// Matches the pattern against edge labels from the root. `None` on the
    /// first mismatch; patterns holding the sentinel never match.
    pub fn descend(&self, pattern: &Pattern) -> Result<Option<Locus>> {
        self.descend_probed(pattern, &mut Silent)
    }

    /// As [`descend`](Self::descend), reporting each text byte compared; at
    /// most `m` comparisons are made.
    pub fn descend_probed<P: Probe>(
        &self,
        pattern: &Pattern,
        probe: &mut P,
    ) -> Result<Option<Locus>> {
        self.require_finalized()?;
        if pattern.contains_sentinel() {
            return Ok(None);
        }
        let text = self.text().as_bytes();
        let p = pattern.as_bytes();
        let mut node = NodeId::ROOT;
        let mut i = 0;
        loop {
            let Some(child) = self.raw(node).child(p[i]) else {
                return Ok(None);
            };
            let c = self.raw(child);
            let (start, end) = (c.start as usize, c.end as usize);
            // the child key is the edge's first byte
            probe.compare(start);
            i += 1;
            let mut k = 1;
            while k < end - start && i < p.len() {
                probe.compare(start + k);
                if text[start + k] != p[i] {
                    return Ok(None);
                }
                k += 1;
                i += 1;
            }
            if i == p.len() {
                return Ok(Some(Locus {
                    node: child,
                    offset: k,
                }));
            }
            node = child;
        }
    }

    /// Occurrence count: the leaf count stored at the locus.
    pub fn count(&self, pattern: &Pattern) -> Result<usize> {
        Ok(self
            .descend(pattern)?
            .map_or(0, |locus| self.raw(locus.node).leaf_count as usize))
    }

    /// All occurrences: suffix starts of the leaves below the locus, sorted.
    pub fn find_all(&self, pattern: &Pattern) -> Result<MatchSet> {
        let Some(locus) = self.descend(pattern)? else {
            return Ok(MatchSet::new());
        };
        let limit = self.text().len() - pattern.len().min(self.text().len());
        let mut starts = Vec::with_capacity(self.raw(locus.node).leaf_count as usize);
        let mut stack = vec![locus.node];
        while let Some(id) = stack.pop() {
            let node = self.raw(id);
            if node.is_leaf() {
                debug_assert!(node.suffix_index as usize <= limit);
                starts.push(node.suffix_index as usize);
            } else {
                stack.extend(node.children.iter().rev().map(|&(_, c)| c));
            }
        }
        starts.sort_unstable();
        Ok(MatchSet::from_sorted(starts))
    }
}

pub fn stree_descend(index: &SuffixTreeIndex, pattern: &Pattern) -> Result<Option<Locus>> {
    index.descend(pattern)
}

pub fn stree_count(index: &SuffixTreeIndex, pattern: &Pattern) -> Result<usize> {
    index.count(pattern)
}

pub fn stree_find_all(index: &SuffixTreeIndex, pattern: &Pattern) -> Result<MatchSet> {
    index.find_all(pattern)
}
