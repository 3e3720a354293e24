//! Haystack, needle and result types shared by every matcher.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Terminal byte appended to texts that back a suffix index.
pub const SENTINEL: u8 = 0x00;

/// An immutable haystack, optionally terminated by a unique sentinel byte.
#[derive(Clone, PartialEq, Eq)]
pub struct Text {
    bytes: Vec<u8>,
    has_sentinel: bool,
}

impl Text {
    /// Wraps `raw`, appending [`SENTINEL`] when `append_sentinel` is set.
    ///
    /// Fails with [`Error::SentinelCollision`] if the sentinel is requested
    /// but `raw` already contains it.
    pub fn new(raw: impl Into<Vec<u8>>, append_sentinel: bool) -> Result<Text> {
        let mut bytes = raw.into();
        if append_sentinel {
            if let Some(offset) = memchr(SENTINEL, &bytes) {
                return Err(Error::SentinelCollision {
                    sentinel: SENTINEL,
                    offset,
                });
            }
            bytes.push(SENTINEL);
        }
        Ok(Text {
            bytes,
            has_sentinel: append_sentinel,
        })
    }

    /// A text with no sentinel. Never fails.
    pub fn plain(raw: impl Into<Vec<u8>>) -> Text {
        Text {
            bytes: raw.into(),
            has_sentinel: false,
        }
    }

    /// Returns a copy of this text with the sentinel appended (no-op if it
    /// already has one).
    pub fn with_sentinel(&self) -> Result<Text> {
        if self.has_sentinel {
            Ok(self.clone())
        } else {
            Text::new(self.bytes.clone(), true)
        }
    }

    /// The bytes the sentinel terminates; equal to [`Text::as_bytes`] when
    /// there is no sentinel.
    pub fn body(&self) -> &[u8] {
        if self.has_sentinel {
            &self.bytes[..self.bytes.len() - 1]
        } else {
            &self.bytes
        }
    }

    /// All bytes, including the sentinel if present.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Body length `n`.
    pub fn len(&self) -> usize {
        self.body().len()
    }

    pub fn is_empty(&self) -> bool {
        self.body().is_empty()
    }

    pub fn has_sentinel(&self) -> bool {
        self.has_sentinel
    }

    pub fn sentinel(&self) -> u8 {
        SENTINEL
    }

    pub fn into_body(mut self) -> Vec<u8> {
        if self.has_sentinel {
            self.bytes.pop();
        }
        self.bytes
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Text")
            .field("body", &String::from_utf8_lossy(self.body()))
            .field("has_sentinel", &self.has_sentinel)
            .finish()
    }
}

fn memchr(needle: u8, haystack: &[u8]) -> Option<usize> {
    haystack.iter().position(|&b| b == needle)
}

/// A non-empty search pattern.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern(Vec<u8>);

impl Pattern {
    /// Fails with [`Error::EmptyPattern`] when `bytes` is empty.
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Pattern> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Pattern(bytes))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Pattern length `m`, always at least 1.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn contains_sentinel(&self) -> bool {
        self.0.contains(&SENTINEL)
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({:?})", String::from_utf8_lossy(&self.0))
    }
}

impl TryFrom<&str> for Pattern {
    type Error = Error;

    fn try_from(s: &str) -> Result<Pattern> {
        Pattern::new(s.as_bytes())
    }
}

impl TryFrom<&[u8]> for Pattern {
    type Error = Error;

    fn try_from(s: &[u8]) -> Result<Pattern> {
        Pattern::new(s)
    }
}

/// Sorted, duplicate-free 0-based start offsets of a pattern in a text.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MatchSet(Vec<usize>);

impl MatchSet {
    pub fn new() -> MatchSet {
        MatchSet(Vec::new())
    }

    /// Builds a match set from offsets in any order, removing duplicates.
    pub fn from_unsorted(mut offsets: Vec<usize>) -> MatchSet {
        offsets.sort_unstable();
        offsets.dedup();
        MatchSet(offsets)
    }

    /// Offsets must already be strictly increasing.
    pub(crate) fn from_sorted(offsets: Vec<usize>) -> MatchSet {
        debug_assert!(offsets.windows(2).all(|w| w[0] < w[1]));
        MatchSet(offsets)
    }

    pub(crate) fn push(&mut self, offset: usize) {
        debug_assert!(self.0.last().is_none_or(|&last| last < offset));
        self.0.push(offset);
    }

    pub fn offsets(&self) -> &[usize] {
        &self.0
    }

    pub fn into_offsets(self) -> Vec<usize> {
        self.0
    }

    pub fn contains(&self, offset: usize) -> bool {
        self.0.binary_search(&offset).is_ok()
    }
}

impl Deref for MatchSet {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for MatchSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> MatchSet {
        MatchSet::from_unsorted(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_text_has_no_sentinel() {
        let t = Text::new("abc", false).unwrap();
        assert_eq!(t.len(), 3);
        assert!(!t.has_sentinel());
        assert_eq!(t.as_bytes(), b"abc");
    }

    #[test]
    fn sentinel_is_appended() {
        let t = Text::new("abc", true).unwrap();
        assert_eq!(t.as_bytes(), b"abc\x00");
        assert_eq!(t.as_bytes().len(), 4);
        assert_eq!(t.body(), b"abc");
        assert_eq!(t.len(), 3);
        assert!(t.has_sentinel());
    }

    #[test]
    fn sentinel_collision_is_rejected() {
        match Text::new(&b"a\x00b"[..], true) {
            Err(Error::SentinelCollision { offset: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        // Without the sentinel the zero byte is ordinary data.
        assert_eq!(Text::new(&b"a\x00b"[..], false).unwrap().len(), 3);
    }

    #[test]
    fn empty_pattern_is_rejected() {
        assert!(matches!(Pattern::new(""), Err(Error::EmptyPattern)));
        assert_eq!(Pattern::new("ab").unwrap().len(), 2);
    }

    #[test]
    fn match_set_sorts_and_dedups() {
        let m = MatchSet::from_unsorted(vec![4, 1, 4, 0]);
        assert_eq!(m.offsets(), &[0, 1, 4]);
        assert!(m.contains(4));
        assert!(!m.contains(2));
    }
}
