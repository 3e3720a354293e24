#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use rand::Rng;
use suffixsearch::suffix_tree::{NodeId, SuffixTreeIndex, UkkonenBuilder};
use suffixsearch::suffix_trie::SuffixTrieIndex;
use suffixsearch::{Pattern, Text};

#[derive(Clone, Copy, Debug)]
pub enum Alphabet {
    Binary,
    Dna,
    /// Every byte except the sentinel.
    FullByte,
}

impl Alphabet {
    pub const ALL: [Alphabet; 3] = [Alphabet::Binary, Alphabet::Dna, Alphabet::FullByte];

    pub fn symbols(self) -> Vec<u8> {
        match self {
            Alphabet::Binary => b"ab".to_vec(),
            Alphabet::Dna => b"ACGT".to_vec(),
            Alphabet::FullByte => (1..=255).collect(),
        }
    }
}

pub fn random_bytes<R: Rng>(rng: &mut R, alphabet: Alphabet, len: usize) -> Vec<u8> {
    let symbols = alphabet.symbols();
    (0..len)
        .map(|_| symbols[rng.gen_range(0..symbols.len())])
        .collect()
}

/// Half substrings of the body, half random strings over the alphabet.
pub fn random_pattern<R: Rng>(
    rng: &mut R,
    alphabet: Alphabet,
    body: &[u8],
    max_len: usize,
) -> Pattern {
    if rng.gen_bool(0.5) && !body.is_empty() {
        let len = rng.gen_range(1..=max_len.min(body.len()));
        let start = rng.gen_range(0..=body.len() - len);
        Pattern::new(&body[start..start + len]).unwrap()
    } else {
        let len = rng.gen_range(1..=max_len);
        Pattern::new(random_bytes(rng, alphabet, len)).unwrap()
    }
}

/// Root-to-node strings for every node, built top-down.
pub fn path_strings(tree: &SuffixTreeIndex) -> HashMap<NodeId, Vec<u8>> {
    let mut out = HashMap::new();
    out.insert(tree.root(), Vec::new());
    let mut stack = vec![tree.root()];
    while let Some(id) = stack.pop() {
        let prefix = out[&id].clone();
        for (_, child) in tree.node(id).children() {
            let mut s = prefix.clone();
            s.extend_from_slice(tree.node(child).edge());
            out.insert(child, s);
            stack.push(child);
        }
    }
    out
}

/// Every non-root internal node links to the node spelling its path minus
/// the first byte.
pub fn check_suffix_links(tree: &SuffixTreeIndex) -> Result<(), String> {
    let paths = path_strings(tree);
    for node in tree.nodes() {
        if node.id() == tree.root() || node.is_leaf() {
            continue;
        }
        let link = node
            .suffix_link()
            .ok_or_else(|| format!("{:?} has no suffix link", node.id()))?;
        let path = &paths[&node.id()];
        if paths[&link][..] != path[1..] {
            return Err(format!(
                "link of {:?} ({:?}) spells {:?}",
                node.id(),
                String::from_utf8_lossy(path),
                String::from_utf8_lossy(&paths[&link])
            ));
        }
    }
    Ok(())
}

/// Leaf counts add up, leaves spell their suffixes and the root sees n+1.
pub fn check_leaf_counts(tree: &SuffixTreeIndex) -> Result<(), String> {
    let total = tree.text().as_bytes().len();
    let paths = path_strings(tree);
    let mut starts = Vec::new();
    for node in tree.nodes() {
        if node.is_leaf() {
            if node.leaf_count() != 1 {
                return Err(format!(
                    "leaf {:?} has leaf_count {}",
                    node.id(),
                    node.leaf_count()
                ));
            }
            let start = node.suffix_index().ok_or("leaf without suffix index")?;
            if paths[&node.id()][..] != tree.text().as_bytes()[start..] {
                return Err(format!(
                    "leaf {:?} does not spell suffix {start}",
                    node.id()
                ));
            }
            if node.path_depth() != total - start {
                return Err(format!("leaf {:?} has wrong path depth", node.id()));
            }
            starts.push(start);
        } else {
            let sum: usize = node
                .children()
                .map(|(_, c)| tree.node(c).leaf_count())
                .sum();
            if node.leaf_count() != sum {
                return Err(format!(
                    "{:?}: leaf_count {} != {sum}",
                    node.id(),
                    node.leaf_count()
                ));
            }
            if node.path_depth() != paths[&node.id()].len() {
                return Err(format!("{:?} has wrong path depth", node.id()));
            }
        }
    }
    if tree.node(tree.root()).leaf_count() != total {
        return Err(format!(
            "root leaf_count {} != {total}",
            tree.node(tree.root()).leaf_count()
        ));
    }
    starts.sort_unstable();
    if starts != (0..total).collect::<Vec<_>>() {
        return Err("suffix indexes are not a permutation of 0..=n".into());
    }
    Ok(())
}

/// Every internal non-root node branches and sibling edges start with
/// distinct bytes; edges are non-empty.
pub fn check_shape(tree: &SuffixTreeIndex) -> Result<(), String> {
    for node in tree.nodes() {
        if node.id() != tree.root() && node.edge().is_empty() {
            return Err(format!("{:?} has an empty edge", node.id()));
        }
        let keys: Vec<u8> = node.children().map(|(b, _)| b).collect();
        if !node.is_leaf() && node.id() != tree.root() && keys.len() < 2 {
            return Err(format!("internal {:?} has one child", node.id()));
        }
        for (b, c) in node.children() {
            if tree.node(c).edge()[0] != b {
                return Err(format!("child key of {c:?} disagrees with its edge"));
            }
        }
        if keys.windows(2).any(|w| w[0] >= w[1]) {
            return Err(format!("children of {:?} not strictly sorted", node.id()));
        }
    }
    Ok(())
}

pub fn check_node_bounds(tree: &SuffixTreeIndex) -> Result<(), String> {
    let n = tree.text().len();
    let count = tree.node_count();
    if count < n + 2 || count > 2 * (n + 1) - 1 {
        return Err(format!(
            "node_count {count} outside [{}, {}]",
            n + 2,
            2 * (n + 1) - 1
        ));
    }
    Ok(())
}

/// Compacting the trie must reproduce the tree exactly.
pub fn check_structural_oracle(body: &[u8]) -> Result<(), String> {
    let text = Text::new(body, true).unwrap();
    let trie = SuffixTrieIndex::build(text.clone()).unwrap();
    let tree = SuffixTreeIndex::build(text).unwrap();
    let compact = trie.compact();
    if compact.node_count != tree.node_count() {
        return Err(format!(
            "compacted trie has {} nodes, tree has {}",
            compact.node_count,
            tree.node_count()
        ));
    }
    if compact.edge_labels != tree.edge_labels() {
        return Err("edge label multisets differ".into());
    }
    Ok(())
}

/// After each phase the implicit tree spells exactly the substrings of the
/// prefix read so far.
pub fn check_online_property(body: &[u8]) -> Result<(), String> {
    let mut builder = UkkonenBuilder::new(Text::new(body, true).unwrap()).unwrap();
    for i in 0..body.len() {
        builder.extend();
        let mut want = HashSet::new();
        for s in 0..=i {
            for e in s + 1..=i + 1 {
                want.insert(body[s..e].to_vec());
            }
        }
        if builder.represented_substrings() != want {
            return Err(format!("phase {i} of {:?}", String::from_utf8_lossy(body)));
        }
    }
    Ok(())
}

pub fn distinct_substrings(bytes: &[u8]) -> usize {
    let mut set = HashSet::new();
    for i in 0..bytes.len() {
        for j in i + 1..=bytes.len() {
            set.insert(&bytes[i..j]);
        }
    }
    set.len()
}
