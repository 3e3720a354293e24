//! Compressed suffix tree built online with Ukkonen's algorithm.
//!
//! Edges are `(start, end)` coordinates into the shared text; nothing is
//! copied. During construction every leaf's end is a shared frontier that
//! advances one byte per phase. [`SuffixTreeIndex::finalize`] freezes that
//! frontier and, in a single pass, annotates every node with its path depth
//! and the number of leaves below it, and every leaf with the start of the
//! suffix it spells. Counting queries then cost one descent plus a lookup;
//! enumeration walks only the subtree below the descent's locus.

mod build;
mod query;

use std::fmt;

pub use build::{ActiveState, BuildStats, UkkonenBuilder};
pub use query::{stree_count, stree_descend, stree_find_all, Locus};

use crate::error::{Error, Result};
use crate::text::Text;

/// Bytes charged per node in [`TreeStats::logical_bytes`]: six 4-byte fields
/// (edge start, edge end, suffix link, suffix index, leaf count, path depth)
/// plus a 16-byte child-list header.
pub const TREE_NODE_BYTES: usize = 40;

/// Placeholder edge end for leaves while the tree is still growing.
pub(crate) const GLOBAL_END: u32 = u32::MAX;
pub(crate) const NONE: u32 = u32::MAX;

/// Handle to a node of a [`SuffixTreeIndex`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub(crate) u32);

impl NodeId {
    pub const ROOT: NodeId = NodeId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Node {
    pub(crate) start: u32,
    pub(crate) end: u32,
    // sorted by first edge byte
    pub(crate) children: Vec<(u8, NodeId)>,
    pub(crate) link: u32,
    pub(crate) suffix_index: u32,
    pub(crate) leaf_count: u32,
    pub(crate) path_depth: u32,
}

impl Node {
    pub(crate) fn new(start: u32, end: u32) -> Node {
        Node {
            start,
            end,
            children: Vec::new(),
            link: NONE,
            suffix_index: NONE,
            leaf_count: 0,
            path_depth: 0,
        }
    }

    #[inline]
    pub(crate) fn child(&self, byte: u8) -> Option<NodeId> {
        let i = self
            .children
            .binary_search_by_key(&byte, |&(b, _)| b)
            .ok()?;
        Some(self.children[i].1)
    }

    pub(crate) fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

/// Structure counts for a finalized tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeStats {
    pub node_count: usize,
    /// Internal nodes, not counting the root.
    pub internal_count: usize,
    pub leaf_count_total: usize,
    /// Edges on the longest root-to-leaf path.
    pub max_depth: usize,
    /// `node_count * TREE_NODE_BYTES`.
    pub logical_bytes: usize,
}

/// A suffix tree over a sentinel-terminated text.
#[derive(Clone)]
pub struct SuffixTreeIndex {
    text: Text,
    nodes: Vec<Node>,
    build_stats: BuildStats,
    finalized: bool,
}

impl SuffixTreeIndex {
    /// Builds and finalizes in one step.
    pub fn build(text: Text) -> Result<SuffixTreeIndex> {
        let mut index = ukkonen_build(text)?;
        index.finalize()?;
        Ok(index)
    }

    pub(crate) fn from_parts(text: Text, nodes: Vec<Node>, build_stats: BuildStats) -> Self {
        SuffixTreeIndex {
            text,
            nodes,
            build_stats,
            finalized: false,
        }
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    pub fn is_finalized(&self) -> bool {
        self.finalized
    }

    pub fn build_stats(&self) -> &BuildStats {
        &self.build_stats
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> NodeId {
        NodeId::ROOT
    }

    /// Read access to a node. Leaf edge ends are only concrete after
    /// finalize; before that they read up to the end of the text.
    pub fn node(&self, id: NodeId) -> NodeRef<'_> {
        NodeRef { tree: self, id }
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeRef<'_>> + '_ {
        (0..self.nodes.len() as u32).map(move |i| self.node(NodeId(i)))
    }

    /// Resolves the shared leaf end, then annotates nodes with path depth,
    /// leaf count and (for leaves) suffix start.
    pub fn finalize(&mut self) -> Result<()> {
        if self.finalized {
            return Err(Error::AlreadyFinalized);
        }
        let total = self.text.as_bytes().len() as u32;
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![NodeId::ROOT];
        self.nodes[0].path_depth = 0;
        while let Some(id) = stack.pop() {
            order.push(id);
            let node = &mut self.nodes[id.index()];
            if node.end == GLOBAL_END {
                node.end = total;
            }
            let depth = node.path_depth;
            let children = std::mem::take(&mut node.children);
            for &(_, child) in &children {
                let c = &mut self.nodes[child.index()];
                let end = if c.end == GLOBAL_END { total } else { c.end };
                c.path_depth = depth + (end - c.start);
                stack.push(child);
            }
            self.nodes[id.index()].children = children;
        }
        // children follow their parent in `order`, so a reverse sweep is post-order
        for &id in order.iter().rev() {
            let node = &self.nodes[id.index()];
            let (leaf_count, suffix_index) = if node.is_leaf() {
                (1, total - node.path_depth)
            } else {
                let sum = node
                    .children
                    .iter()
                    .map(|&(_, c)| self.nodes[c.index()].leaf_count)
                    .sum();
                (sum, NONE)
            };
            let node = &mut self.nodes[id.index()];
            node.leaf_count = leaf_count;
            node.suffix_index = suffix_index;
        }
        self.finalized = true;
        Ok(())
    }

    pub fn stats(&self) -> Result<TreeStats> {
        self.require_finalized()?;
        let leaf_count_total = self.nodes.iter().filter(|n| n.is_leaf()).count();
        let mut max_depth = 0;
        let mut stack = vec![(NodeId::ROOT, 0usize)];
        while let Some((id, depth)) = stack.pop() {
            max_depth = max_depth.max(depth);
            stack.extend(
                self.nodes[id.index()]
                    .children
                    .iter()
                    .map(|&(_, c)| (c, depth + 1)),
            );
        }
        Ok(TreeStats {
            node_count: self.nodes.len(),
            internal_count: self.nodes.len() - leaf_count_total - 1,
            leaf_count_total,
            max_depth,
            logical_bytes: self.nodes.len() * TREE_NODE_BYTES,
        })
    }

    /// All edge labels, sorted.
    pub fn edge_labels(&self) -> Vec<Vec<u8>> {
        let mut labels: Vec<Vec<u8>> = self
            .nodes()
            .filter(|n| n.id() != NodeId::ROOT)
            .map(|n| n.edge().to_vec())
            .collect();
        labels.sort();
        labels
    }

    /// The bytes spelled from the root down to the end of `id`'s edge.
    pub fn path_string(&self, id: NodeId) -> Vec<u8> {
        // parent pointers are not stored; walk down from the root instead
        let mut parents = vec![NONE; self.nodes.len()];
        for (i, n) in self.nodes.iter().enumerate() {
            for &(_, c) in &n.children {
                parents[c.index()] = i as u32;
            }
        }
        let mut chain = vec![id];
        let mut cur = id.0;
        while parents[cur as usize] != NONE {
            cur = parents[cur as usize];
            chain.push(NodeId(cur));
        }
        chain
            .iter()
            .rev()
            .flat_map(|&n| self.node(n).edge().to_vec())
            .collect()
    }

    pub(crate) fn require_finalized(&self) -> Result<()> {
        if self.finalized {
            Ok(())
        } else {
            Err(Error::NotFinalized)
        }
    }

    pub(crate) fn raw(&self, id: NodeId) -> &Node {
        &self.nodes[id.index()]
    }

    fn edge_end(&self, node: &Node) -> usize {
        if node.end == GLOBAL_END {
            self.text.as_bytes().len()
        } else {
            node.end as usize
        }
    }
}

impl fmt::Debug for SuffixTreeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SuffixTreeIndex")
            .field("text", &self.text)
            .field("node_count", &self.nodes.len())
            .field("finalized", &self.finalized)
            .finish()
    }
}

/// Borrowed view of one node.
#[derive(Clone, Copy)]
pub struct NodeRef<'a> {
    tree: &'a SuffixTreeIndex,
    id: NodeId,
}

impl<'a> NodeRef<'a> {
    pub fn id(&self) -> NodeId {
        self.id
    }

    fn raw(&self) -> &'a Node {
        &self.tree.nodes[self.id.index()]
    }

    /// Text coordinates of the incoming edge label; empty for the root.
    pub fn edge_range(&self) -> std::ops::Range<usize> {
        let n = self.raw();
        n.start as usize..self.tree.edge_end(n)
    }

    pub fn edge(&self) -> &'a [u8] {
        &self.tree.text.as_bytes()[self.edge_range()]
    }

    pub fn children(&self) -> impl Iterator<Item = (u8, NodeId)> + 'a {
        self.raw().children.iter().copied()
    }

    pub fn child(&self, byte: u8) -> Option<NodeId> {
        self.raw().child(byte)
    }

    pub fn is_leaf(&self) -> bool {
        self.raw().is_leaf()
    }

    pub fn suffix_link(&self) -> Option<NodeId> {
        let link = self.raw().link;
        (link != NONE).then_some(NodeId(link))
    }

    /// Start of the suffix spelled by this leaf (finalized trees only).
    pub fn suffix_index(&self) -> Option<usize> {
        let s = self.raw().suffix_index;
        (s != NONE).then_some(s as usize)
    }

    /// Leaves in this subtree (finalized trees only).
    pub fn leaf_count(&self) -> usize {
        self.raw().leaf_count as usize
    }

    /// Bytes from the root to the end of this node's edge (finalized trees only).
    pub fn path_depth(&self) -> usize {
        self.raw().path_depth as usize
    }
}

impl fmt::Debug for NodeRef<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Node")
            .field("id", &self.id)
            .field("edge", &self.edge_range())
            .field("children", &self.raw().children.len())
            .finish()
    }
}

/// Runs Ukkonen's construction over a sentinel-terminated text. The result
/// must be finalized before it can be queried.
pub fn ukkonen_build(text: Text) -> Result<SuffixTreeIndex> {
    let mut builder = UkkonenBuilder::new(text)?;
    while builder.extend() {}
    Ok(builder.finish())
}

pub fn finalize_index(index: &mut SuffixTreeIndex) -> Result<()> {
    index.finalize()
}

#[cfg(test)]
mod tests;
