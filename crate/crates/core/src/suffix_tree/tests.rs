use super::*;
use crate::probe::Counters;
use crate::text::Pattern;

fn tree(s: &str) -> SuffixTreeIndex {
    SuffixTreeIndex::build(Text::new(s, true).unwrap()).unwrap()
}

fn pat(s: &str) -> Pattern {
    Pattern::new(s).unwrap()
}

#[test]
fn mississippi_has_19_nodes() {
    let t = tree("mississippi");
    let s = t.stats().unwrap();
    assert_eq!(s.node_count, 19);
    assert_eq!(s.leaf_count_total, 12);
    assert_eq!(s.internal_count, 6);
}

#[test]
fn banana_shape() {
    let s = tree("banana").stats().unwrap();
    assert_eq!(s.node_count, 11);
    assert_eq!(s.internal_count, 3);
    assert_eq!(s.leaf_count_total, 7);
}

#[test]
fn unary_run_forms_a_chain() {
    let t = tree("aaa");
    let s = t.stats().unwrap();
    assert_eq!(s.leaf_count_total, 4);
    assert_eq!(s.internal_count, 2);
    assert_eq!(s.node_count, 7);
    // root -a-> v1 -a-> v2 -a$-> leaf
    let v1 = t.node(t.root()).child(b'a').unwrap();
    let v2 = t.node(v1).child(b'a').unwrap();
    assert_eq!(t.node(v1).edge(), b"a");
    assert_eq!(t.node(v2).edge(), b"a");
    assert!(!t.node(v2).is_leaf());
    assert_eq!(s.max_depth, 3);
}

#[test]
fn tiny_trees() {
    let s = tree("a").stats().unwrap();
    assert_eq!(s.node_count, 3);
    assert_eq!(s.logical_bytes, 3 * TREE_NODE_BYTES);
    assert_eq!(tree("abab").stats().unwrap().leaf_count_total, 5);
}

#[test]
fn finalize_annotations() {
    let t = tree("banana");
    assert_eq!(t.node(t.root()).leaf_count(), 7);
    let a = t.node(t.root()).child(b'a').unwrap();
    assert_eq!(t.node(a).leaf_count(), 3);
    let mut starts: Vec<usize> = t.nodes().filter_map(|n| n.suffix_index()).collect();
    starts.sort_unstable();
    assert_eq!(starts, (0..=6).collect::<Vec<_>>());
}

#[test]
fn finalize_twice_fails() {
    let mut t = ukkonen_build(Text::new("abc", true).unwrap()).unwrap();
    assert!(t.finalize().is_ok());
    assert!(matches!(t.finalize(), Err(Error::AlreadyFinalized)));
}

#[test]
fn queries_require_finalize() {
    let t = ukkonen_build(Text::new("abc", true).unwrap()).unwrap();
    assert!(matches!(t.count(&pat("a")), Err(Error::NotFinalized)));
    assert!(matches!(t.find_all(&pat("a")), Err(Error::NotFinalized)));
    assert!(matches!(t.descend(&pat("a")), Err(Error::NotFinalized)));
    assert!(matches!(t.stats(), Err(Error::NotFinalized)));
}

#[test]
fn missing_sentinel_is_rejected() {
    assert!(matches!(
        ukkonen_build(Text::plain("abc")),
        Err(Error::MissingSentinel)
    ));
    assert!(matches!(
        ukkonen_build(Text::new("", true).unwrap()),
        Err(Error::MissingSentinel)
    ));
}

#[test]
fn descend_examples() {
    let t = tree("banana");
    let ana = t.descend(&pat("ana")).unwrap().unwrap();
    assert_eq!(t.node(ana.node).leaf_count(), 2);
    assert_eq!(t.descend(&pat("nab")).unwrap(), None);
    let b = t.descend(&pat("b")).unwrap().unwrap();
    assert!(t.node(b.node).is_leaf());
    assert_eq!(t.node(b.node).suffix_index(), Some(0));
    assert_eq!(b.offset, 1);
}

#[test]
fn descend_compares_at_most_m_bytes() {
    let t = tree("mississippi");
    for p in ["issi", "ssippi", "mississippi", "ppx", "q", "sis"] {
        let mut c = Counters::new();
        t.descend_probed(&pat(p), &mut c).unwrap();
        assert!(c.comparisons <= p.len() as u64, "{p}: {}", c.comparisons);
    }
}

#[test]
fn count_examples() {
    let t = tree("mississippi");
    assert_eq!(t.count(&pat("issi")).unwrap(), 2);
    assert_eq!(t.count(&pat("q")).unwrap(), 0);
    assert_eq!(tree("aaaa").count(&pat("a")).unwrap(), 4);
}

#[test]
fn find_all_examples() {
    assert_eq!(
        tree("banana").find_all(&pat("ana")).unwrap().offsets(),
        &[1, 3]
    );
    assert_eq!(
        tree("mississippi")
            .find_all(&pat("issi"))
            .unwrap()
            .offsets(),
        &[1, 4]
    );
    assert_eq!(
        tree("banana").find_all(&pat("banana")).unwrap().offsets(),
        &[0]
    );
    assert!(tree("banana").find_all(&pat("bananas")).unwrap().is_empty());
}

#[test]
fn sentinel_in_pattern_never_matches() {
    let t = tree("aa");
    let p = Pattern::new(&b"a\x00"[..]).unwrap();
    assert!(t.find_all(&p).unwrap().is_empty());
    assert_eq!(t.count(&p).unwrap(), 0);
}

#[test]
fn suffix_links_spell_the_tail() {
    let t = tree("mississippi");
    for n in t.nodes() {
        if n.id() == t.root() || n.is_leaf() {
            continue;
        }
        let link = n.suffix_link().expect("internal node without suffix link");
        assert_eq!(t.path_string(link), t.path_string(n.id())[1..].to_vec());
    }
}

#[test]
fn online_phases_cover_prefix_substrings() {
    let text = Text::new("abcabxabcd", true).unwrap();
    let body = text.body().to_vec();
    let mut b = UkkonenBuilder::new(text).unwrap();
    for i in 0..body.len() {
        assert!(b.extend());
        let mut want = std::collections::HashSet::new();
        for s in 0..=i {
            for e in s + 1..=i + 1 {
                want.insert(body[s..e].to_vec());
            }
        }
        assert_eq!(b.represented_substrings(), want, "after phase {i}");
    }
}

#[test]
fn active_state_after_repeat() {
    let mut b = UkkonenBuilder::new(Text::new("abab", true).unwrap()).unwrap();
    for _ in 0..3 {
        b.extend();
    }
    // "aba": 'a' is pending, active point one byte down the 'a' edge
    let s = b.active_state();
    assert_eq!(s.remainder, 1);
    assert_eq!(s.active_length, 1);
    assert_eq!(s.active_edge_byte, Some(b'a'));
    assert_eq!(s.global_end, 3);
}

#[test]
fn finalized_tree_is_shareable() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<SuffixTreeIndex>();
    let t = std::sync::Arc::new(tree("mississippi"));
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let t = t.clone();
            std::thread::spawn(move || t.count(&pat("ss")).unwrap())
        })
        .collect();
    for h in handles {
        assert_eq!(h.join().unwrap(), 2);
    }
}
