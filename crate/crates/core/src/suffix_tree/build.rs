use std::collections::HashSet;

use super::{Node, NodeId, SuffixTreeIndex, GLOBAL_END, NONE};
use crate::error::{Error, Result};
use crate::text::Text;

/// Work counters gathered during construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildStats {
    /// One per input byte.
    pub phases: u64,
    /// Iterations of the extension loop; each inspects the active node.
    pub node_visits: u64,
    /// Whole edges skipped while walking down, plus suffix links followed.
    pub edge_steps: u64,
    pub leaves_created: u64,
    pub splits: u64,
}

impl BuildStats {
    /// Total instrumented construction steps.
    pub fn work(&self) -> u64 {
        self.node_visits + self.edge_steps
    }
}

/// Snapshot of the active point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActiveState {
    pub active_node: NodeId,
    pub active_edge_byte: Option<u8>,
    pub active_length: usize,
    /// Suffixes of the processed prefix not yet inserted explicitly.
    pub remainder: usize,
    /// Bytes processed so far; every leaf edge currently ends here.
    pub global_end: usize,
}

/// Online suffix tree construction, one byte per [`UkkonenBuilder::extend`].
pub struct UkkonenBuilder {
    text: Text,
    nodes: Vec<Node>,
    active_node: NodeId,
    // text offset whose byte selects the active edge
    active_edge: usize,
    active_length: usize,
    remainder: usize,
    global_end: usize,
    stats: BuildStats,
}

impl UkkonenBuilder {
    pub fn new(text: Text) -> Result<UkkonenBuilder> {
        if !text.has_sentinel() || text.is_empty() {
            return Err(Error::MissingSentinel);
        }
        // GLOBAL_END and NONE must stay out of range
        if text.as_bytes().len() >= (u32::MAX / 2) as usize {
            return Err(Error::TextTooLong { len: text.len() });
        }
        let mut nodes = Vec::with_capacity(2 * text.as_bytes().len());
        nodes.push(Node::new(0, 0));
        Ok(UkkonenBuilder {
            text,
            nodes,
            active_node: NodeId::ROOT,
            active_edge: 0,
            active_length: 0,
            remainder: 0,
            global_end: 0,
            stats: BuildStats::default(),
        })
    }

    pub fn active_state(&self) -> ActiveState {
        ActiveState {
            active_node: self.active_node,
            active_edge_byte: (self.active_length > 0)
                .then(|| self.text.as_bytes()[self.active_edge]),
            active_length: self.active_length,
            remainder: self.remainder,
            global_end: self.global_end,
        }
    }

    pub fn stats(&self) -> &BuildStats {
        &self.stats
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Bytes of the text consumed so far.
    pub fn processed(&self) -> usize {
        self.global_end
    }

    #[inline]
    fn at(&self, pos: usize) -> u8 {
        self.text.as_bytes()[pos]
    }

    fn edge_len(&self, id: NodeId) -> usize {
        let n = &self.nodes[id.index()];
        let end = if n.end == GLOBAL_END {
            self.global_end
        } else {
            n.end as usize
        };
        end - n.start as usize
    }

    fn push_node(&mut self, node: Node) -> NodeId {
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(node);
        id
    }

    fn insert_child(&mut self, parent: NodeId, byte: u8, child: NodeId) {
        let children = &mut self.nodes[parent.index()].children;
        match children.binary_search_by_key(&byte, |&(b, _)| b) {
            Ok(i) => children[i].1 = child,
            Err(i) => children.insert(i, (byte, child)),
        }
    }

    /// Processes the next text byte. Returns `false` once the whole text,
    /// sentinel included, has been consumed.
    pub fn extend(&mut self) -> bool {
        let pos = self.global_end;
        if pos == self.text.as_bytes().len() {
            return false;
        }
        let c = self.at(pos);
        self.global_end += 1;
        self.remainder += 1;
        self.stats.phases += 1;
        let mut pending_link: Option<NodeId> = None;

        while self.remainder > 0 {
            self.stats.node_visits += 1;
            if self.active_length == 0 {
                self.active_edge = pos;
            }
            let edge_byte = self.at(self.active_edge);
            let Some(next) = self.nodes[self.active_node.index()].child(edge_byte) else {
                debug_assert_eq!(edge_byte, c);
                let leaf = self.push_node(Node::new(pos as u32, GLOBAL_END));
                self.insert_child(self.active_node, c, leaf);
                self.stats.leaves_created += 1;
                if let Some(v) = pending_link.take() {
                    self.nodes[v.index()].link = self.active_node.0;
                }
                self.advance(pos);
                continue;
            };

            let len = self.edge_len(next);
            if self.active_length >= len {
                self.active_edge += len;
                self.active_length -= len;
                self.active_node = next;
                self.stats.edge_steps += 1;
                continue;
            }

            let start = self.nodes[next.index()].start as usize;
            if self.at(start + self.active_length) == c {
                // already present implicitly; this phase is done
                if let Some(v) = pending_link.take() {
                    debug_assert_eq!(self.active_length, 0);
                    self.nodes[v.index()].link = self.active_node.0;
                }
                self.active_length += 1;
                break;
            }

            let split_at = start + self.active_length;
            let mut split = Node::new(start as u32, split_at as u32);
            split.link = NodeId::ROOT.0;
            let split = self.push_node(split);
            self.insert_child(self.active_node, edge_byte, split);
            self.nodes[next.index()].start = split_at as u32;
            self.insert_child(split, self.at(split_at), next);
            let leaf = self.push_node(Node::new(pos as u32, GLOBAL_END));
            self.insert_child(split, c, leaf);
            self.stats.splits += 1;
            self.stats.leaves_created += 1;
            if let Some(v) = pending_link.replace(split) {
                self.nodes[v.index()].link = split.0;
            }
            self.advance(pos);
        }
        true
    }

    /// Moves the active point to the next shorter suffix after an explicit
    /// insertion.
    fn advance(&mut self, pos: usize) {
        self.remainder -= 1;
        if self.active_node == NodeId::ROOT {
            if self.active_length > 0 {
                self.active_length -= 1;
                self.active_edge = pos + 1 - self.remainder;
            }
        } else {
            let link = self.nodes[self.active_node.index()].link;
            self.active_node = if link == NONE {
                NodeId::ROOT
            } else {
                NodeId(link)
            };
            self.stats.edge_steps += 1;
        }
    }

    /// Every string spelled by a root path in the current implicit tree
    /// (including mid-edge positions). Quadratic; meant for small inputs.
    pub fn represented_substrings(&self) -> HashSet<Vec<u8>> {
        let bytes = self.text.as_bytes();
        let mut out = HashSet::new();
        let mut stack = vec![(NodeId::ROOT, Vec::new())];
        while let Some((id, path)) = stack.pop() {
            for &(_, child) in &self.nodes[id.index()].children {
                let start = self.nodes[child.index()].start as usize;
                let mut p = path.clone();
                for &b in &bytes[start..start + self.edge_len(child)] {
                    p.push(b);
                    out.insert(p.clone());
                }
                stack.push((child, p));
            }
        }
        out
    }

    /// Consumes any remaining input and hands over the unfinalized tree.
    pub fn finish(mut self) -> SuffixTreeIndex {
        while self.extend() {}
        debug_assert_eq!(
            self.remainder, 0,
            "sentinel must make every suffix explicit"
        );
        SuffixTreeIndex::from_parts(self.text, self.nodes, self.stats)
    }
}
