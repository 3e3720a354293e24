//! Knuth-Morris-Pratt search driven by the longest-prefix-suffix table.

use std::ops::Deref;

use crate::probe::{Probe, Silent};
use crate::text::{MatchSet, Pattern, Text};

/// `values[i]` is the length of the longest proper prefix of
/// `pattern[..=i]` that is also a suffix of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpsTable(Vec<usize>);

impl LpsTable {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Lengths of all proper borders of the whole pattern, longest first,
    /// found by chasing the table from the last index.
    pub fn borders(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut k = *self.0.last().expect("lps table is never empty");
        while k > 0 {
            out.push(k);
            k = self.0[k - 1];
        }
        out
    }
}

impl Deref for LpsTable {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

pub fn build_lps(pattern: &Pattern) -> LpsTable {
    let p = pattern.as_bytes();
    let mut lps = vec![0; p.len()];
    let mut k = 0;
    for i in 1..p.len() {
        while k > 0 && p[k] != p[i] {
            k = lps[k - 1];
        }
        if p[k] == p[i] {
            k += 1;
        }
        lps[i] = k;
    }
    LpsTable(lps)
}

pub fn find_all(text: &Text, pattern: &Pattern) -> MatchSet {
    find_all_probed(text, pattern, &mut Silent)
}

/// The text cursor only moves forward; each byte is compared at most twice
/// in amortized terms, so comparisons stay at or below `2n`.
pub fn find_all_probed<P: Probe>(text: &Text, pattern: &Pattern, probe: &mut P) -> MatchSet {
    let hay = text.body();
    let p = pattern.as_bytes();
    let m = p.len();
    let mut out = MatchSet::new();
    if m > hay.len() {
        return out;
    }
    let lps = build_lps(pattern);
    let mut k = 0;
    for (i, &c) in hay.iter().enumerate() {
        loop {
            probe.compare(i);
            if p[k] == c {
                k += 1;
                break;
            }
            if k == 0 {
                break;
            }
            k = lps[k - 1];
        }
        if k == m {
            let start = i + 1 - m;
            probe.alignment(start);
            out.push(start);
            k = lps[m - 1];
        }
    }
    out
}
