//! Boyer-Moore search with the bad-character and strong good-suffix rules.

use crate::probe::{Probe, Silent};
use crate::text::{MatchSet, Pattern, Text};

/// Shift tables for one pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmTables {
    /// Rightmost index of each byte in the pattern, or -1.
    pub bad_char: [isize; 256],
    /// `good_suffix[k]` is the shift to apply once the last `k` bytes matched
    /// (`k = m` after a full match).
    pub good_suffix: Vec<usize>,
}

impl BmTables {
    pub fn new(pattern: &Pattern) -> BmTables {
        let p = pattern.as_bytes();
        let mut bad_char = [-1isize; 256];
        for (i, &b) in p.iter().enumerate() {
            bad_char[b as usize] = i as isize;
        }
        BmTables {
            bad_char,
            good_suffix: good_suffix_shifts(p),
        }
    }

    /// Shift suggested by the bad-character rule for a mismatch of `byte` at
    /// pattern position `i`; may be zero or negative.
    #[inline]
    pub fn bad_char_shift(&self, byte: u8, i: usize) -> isize {
        i as isize - self.bad_char[byte as usize]
    }
}

/// `suff[i]` = length of the longest common suffix of `p[..=i]` and `p`.
fn suffix_lengths(p: &[u8]) -> Vec<usize> {
    let m = p.len() as isize;
    let mut suff = vec![0usize; p.len()];
    suff[p.len() - 1] = p.len();
    let mut g = m - 1;
    let mut f = m - 1;
    for i in (0..m - 1).rev() {
        if i > g && (suff[(i + m - 1 - f) as usize] as isize) < i - g {
            suff[i as usize] = suff[(i + m - 1 - f) as usize];
        } else {
            if i < g {
                g = i;
            }
            f = i;
            while g >= 0 && p[g as usize] == p[(g + m - 1 - f) as usize] {
                g -= 1;
            }
            suff[i as usize] = (f - g) as usize;
        }
    }
    suff
}

fn good_suffix_shifts(p: &[u8]) -> Vec<usize> {
    let m = p.len();
    let suff = suffix_lengths(p);
    // by_mismatch[j]: shift after a mismatch at pattern position j
    let mut by_mismatch = vec![m; m];
    let mut j = 0;
    for i in (0..m).rev() {
        if suff[i] == i + 1 {
            while j < m - 1 - i {
                if by_mismatch[j] == m {
                    by_mismatch[j] = m - 1 - i;
                }
                j += 1;
            }
        }
    }
    for i in 0..m.saturating_sub(1) {
        by_mismatch[m - 1 - suff[i]] = m - 1 - i;
    }
    let mut shifts: Vec<usize> = (0..m).map(|k| by_mismatch[m - 1 - k]).collect();
    shifts.push(by_mismatch[0]);
    shifts
}

pub fn build_tables(pattern: &Pattern) -> BmTables {
    BmTables::new(pattern)
}

pub fn find_all(text: &Text, pattern: &Pattern) -> MatchSet {
    find_all_probed(text, pattern, &mut Silent)
}

pub fn find_all_probed<P: Probe>(text: &Text, pattern: &Pattern, probe: &mut P) -> MatchSet {
    let hay = text.body();
    let p = pattern.as_bytes();
    let m = p.len();
    let mut out = MatchSet::new();
    if m > hay.len() {
        return out;
    }
    let tables = BmTables::new(pattern);
    let mut s = 0;
    while s <= hay.len() - m {
        probe.alignment(s);
        let mut i = m;
        while i > 0 {
            probe.compare(s + i - 1);
            if p[i - 1] != hay[s + i - 1] {
                break;
            }
            i -= 1;
        }
        if i == 0 {
            out.push(s);
            s += tables.good_suffix[m];
        } else {
            let pos = i - 1;
            let gs = tables.good_suffix[m - 1 - pos] as isize;
            let bc = tables.bad_char_shift(hay[s + pos], pos);
            s += gs.max(bc).max(1) as usize;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest shift in 1..=m that does not contradict a matched suffix of
    /// length `k` (and, for k < m, the mismatched byte before it).
    fn good_suffix_oracle(p: &[u8], k: usize) -> usize {
        let m = p.len() as isize;
        (1..=m)
            .find(|&s| {
                let suffix_ok =
                    (m - k as isize..m).all(|i| i - s < 0 || p[(i - s) as usize] == p[i as usize]);
                let j = m - 1 - k as isize;
                let mismatch_ok = k == p.len() || j - s < 0 || p[(j - s) as usize] != p[j as usize];
                suffix_ok && mismatch_ok
            })
            .unwrap() as usize
    }

    fn tables(p: &str) -> BmTables {
        build_tables(&Pattern::new(p).unwrap())
    }

    #[test]
    fn bad_char_rightmost() {
        let t = tables("ABCB");
        assert_eq!(t.bad_char[b'A' as usize], 0);
        assert_eq!(t.bad_char[b'B' as usize], 3);
        assert_eq!(t.bad_char[b'C' as usize], 2);
        let others = (0..256).filter(|b| !b"ABC".contains(&(*b as u8)));
        assert!(others.into_iter().all(|b| t.bad_char[b] == -1));
    }

    #[test]
    fn single_byte_pattern_shifts_by_one() {
        assert_eq!(tables("x").good_suffix, vec![1, 1]);
    }

    #[test]
    fn distinct_pattern_shifts_whole_length() {
        assert_eq!(good_suffix_oracle(b"ABCD", 1), 4);
        assert_eq!(tables("ABCD").good_suffix[1], 4);
    }

    #[test]
    fn good_suffix_matches_oracle_exhaustively() {
        for len in 1..=9u32 {
            for code in 0..3u32.pow(len) {
                let mut c = code;
                let p: Vec<u8> = (0..len)
                    .map(|_| {
                        let b = b'a' + (c % 3) as u8;
                        c /= 3;
                        b
                    })
                    .collect();
                let got = good_suffix_shifts(&p);
                let want: Vec<usize> = (0..=p.len()).map(|k| good_suffix_oracle(&p, k)).collect();
                assert_eq!(got, want, "pattern {:?}", String::from_utf8_lossy(&p));
            }
        }
    }

    #[test]
    fn search_examples() {
        let run =
            |t: &str, p: &str| find_all(&Text::plain(t), &Pattern::new(p).unwrap()).into_offsets();
        assert_eq!(run("HERE IS A SIMPLE EXAMPLE", "EXAMPLE"), vec![17]);
        assert_eq!(run("aaaa", "aa"), vec![0, 1, 2]);
        assert_eq!(run("abcabcabc", "cab"), vec![2, 5]);
    }
}
