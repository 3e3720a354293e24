//! Rabin-Karp search with a polynomial rolling hash.
//!
//! Every hash hit is confirmed byte-by-byte, so collisions cost time but
//! never produce a false match.

use crate::error::{Error, Result};
use crate::probe::{Probe, Silent};
use crate::text::{MatchSet, Pattern, Text};

/// Polynomial hash parameters: `h(s) = sum(s[i] * base^(|s|-1-i)) mod modulus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RollingHashParams {
    base: u64,
    modulus: u64,
}

impl RollingHashParams {
    pub const DEFAULT_BASE: u64 = 256;
    pub const DEFAULT_MODULUS: u64 = 1_000_000_007;

    /// `modulus` must be a prime below 2^32 so products fit in 64 bits.
    pub fn new(base: u64, modulus: u64) -> Result<RollingHashParams> {
        if base < 2 {
            return Err(Error::BadRange(format!(
                "hash base {base} must be at least 2"
            )));
        }
        if modulus >= 1 << 32 || !is_prime(modulus) {
            return Err(Error::BadRange(format!(
                "hash modulus {modulus} must be a prime below 2^32"
            )));
        }
        Ok(RollingHashParams { base, modulus })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl Default for RollingHashParams {
    fn default() -> Self {
        RollingHashParams {
            base: Self::DEFAULT_BASE,
            modulus: Self::DEFAULT_MODULUS,
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Hash of `s` computed from scratch (Horner's rule).
pub fn rk_hash(s: &[u8], params: RollingHashParams) -> u64 {
    let base = params.base % params.modulus;
    s.iter()
        .fold(0, |h, &b| (h * base + b as u64) % params.modulus)
}

/// Hashes of every length-`width` window of `bytes`, each derived from the
/// previous one in constant time.
#[derive(Clone, Debug)]
pub struct WindowHashes<'a> {
    bytes: &'a [u8],
    width: usize,
    next: usize,
    hash: u64,
    base: u64,
    modulus: u64,
    // base^(width-1) mod modulus, weight of the byte leaving the window
    lead: u64,
}

impl<'a> WindowHashes<'a> {
    pub fn new(bytes: &'a [u8], width: usize, params: RollingHashParams) -> WindowHashes<'a> {
        assert!(width >= 1, "window width must be at least 1");
        let modulus = params.modulus;
        let base = params.base % modulus;
        let lead = (1..width).fold(1 % modulus, |acc, _| acc * base % modulus);
        let hash = if width <= bytes.len() {
            rk_hash(&bytes[..width], params)
        } else {
            0
        };
        WindowHashes {
            bytes,
            width,
            next: 0,
            hash,
            base,
            modulus,
            lead,
        }
    }
}

impl Iterator for WindowHashes<'_> {
    /// `(window start, hash)`
    type Item = (usize, u64);

    fn next(&mut self) -> Option<(usize, u64)> {
        let start = self.next;
        if start + self.width > self.bytes.len() {
            return None;
        }
        if start > 0 {
            let out = self.bytes[start - 1] as u64;
            let inc = self.bytes[start + self.width - 1] as u64;
            let m = self.modulus;
            let h = (self.hash + m - out * self.lead % m) % m;
            self.hash = (h * self.base + inc) % m;
        }
        self.next += 1;
        Some((start, self.hash))
    }
}

pub fn find_all(text: &Text, pattern: &Pattern, params: RollingHashParams) -> MatchSet {
    find_all_probed(text, pattern, params, &mut Silent)
}

pub fn find_all_probed<P: Probe>(
    text: &Text,
    pattern: &Pattern,
    params: RollingHashParams,
    probe: &mut P,
) -> MatchSet {
    let hay = text.body();
    let needle = pattern.as_bytes();
    let m = needle.len();
    let mut out = MatchSet::new();
    if m > hay.len() {
        return out;
    }
    let target = rk_hash(needle, params);
    for (start, h) in WindowHashes::new(hay, m, params) {
        probe.alignment(start);
        if h != target {
            continue;
        }
        let mut matched = true;
        for (k, &b) in needle.iter().enumerate() {
            probe.compare(start + k);
            if hay[start + k] != b {
                matched = false;
                break;
            }
        }
        probe.hash_hit(!matched);
        if matched {
            out.push(start);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probe::Counters;

    fn p101() -> RollingHashParams {
        RollingHashParams::new(256, 101).unwrap()
    }

    #[test]
    fn hash_examples() {
        assert_eq!(rk_hash(b"a", p101()), 97);
        // (97*256 + 98) mod 101
        assert_eq!((97 * 256 + 98) % 101, 84);
        assert_eq!(rk_hash(b"ab", p101()), 84);
        assert_eq!((98 * 256 + 99) % 101, 38);
        assert_eq!(rk_hash(b"bc", p101()), 38);
    }

    #[test]
    fn params_validation() {
        assert!(RollingHashParams::new(256, 100).is_err());
        assert!(RollingHashParams::new(1, 101).is_err());
        assert!(RollingHashParams::new(256, 4_294_967_311).is_err());
        assert!(RollingHashParams::new(256, 2).is_ok());
        assert_eq!(RollingHashParams::default().modulus(), 1_000_000_007);
    }

    #[test]
    fn rolled_hashes_equal_fresh_hashes() {
        let bytes = b"the quick brown fox jumps over the lazy dog";
        for &params in &[p101(), RollingHashParams::default()] {
            for width in 1..=8 {
                for (start, h) in WindowHashes::new(bytes, width, params) {
                    assert_eq!(h, rk_hash(&bytes[start..start + width], params));
                }
            }
        }
    }

    #[test]
    fn search_examples() {
        let d = RollingHashParams::default();
        let run = |t: &str, p: &str, params| {
            find_all(&Text::plain(t), &Pattern::new(p).unwrap(), params).into_offsets()
        };
        assert_eq!(run("abab", "ab", d), vec![0, 2]);
        assert_eq!(run("mississippi", "ssi", d), vec![2, 5]);
    }

    #[test]
    fn maximal_collisions_still_exact() {
        let params = RollingHashParams::new(256, 2).unwrap();
        let text = Text::plain("mississippi");
        let pat = Pattern::new("ssi").unwrap();
        let mut c = Counters::new();
        let got = find_all_probed(&text, &pat, params, &mut c);
        assert_eq!(got.offsets(), &[2, 5]);
        assert!(c.spurious_hits > 0);
    }
}
