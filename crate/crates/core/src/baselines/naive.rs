//! Brute-force matcher: every alignment, left-to-right comparison.

use crate::probe::{Probe, Silent};
use crate::text::{MatchSet, Pattern, Text};

pub fn find_all(text: &Text, pattern: &Pattern) -> MatchSet {
    find_all_probed(text, pattern, &mut Silent)
}

pub fn find_all_probed<P: Probe>(text: &Text, pattern: &Pattern, probe: &mut P) -> MatchSet {
    let hay = text.body();
    let needle = pattern.as_bytes();
    let m = needle.len();
    let mut out = MatchSet::new();
    if m > hay.len() {
        return out;
    }
    for start in 0..=hay.len() - m {
        probe.alignment(start);
        let mut matched = true;
        for (k, &b) in needle.iter().enumerate() {
            probe.compare(start + k);
            if hay[start + k] != b {
                matched = false;
                break;
            }
        }
        if matched {
            out.push(start);
        }
    }
    out
}
