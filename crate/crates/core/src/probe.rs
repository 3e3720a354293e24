//! Per-call instrumentation hooks for matchers and index queries.
//!
//! Matchers are generic over [`Probe`]; the [`Silent`] probe compiles down to
//! nothing, so uninstrumented calls pay no cost.

/// Observer of the work a matcher performs.
pub trait Probe {
    /// A text byte at offset `pos` was compared against a pattern byte.
    #[inline]
    fn compare(&mut self, _pos: usize) {}

    /// The pattern was aligned with its first byte at text offset `pos`.
    #[inline]
    fn alignment(&mut self, _pos: usize) {}

    /// A window hash equalled the pattern hash; `spurious` if verification
    /// then rejected it.
    #[inline]
    fn hash_hit(&mut self, _spurious: bool) {}
}

/// Probe that records nothing.
#[derive(Clone, Copy, Debug, Default)]
pub struct Silent;

impl Probe for Silent {}

/// Aggregate counters for one matcher call.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Counters {
    pub comparisons: u64,
    pub alignments: u64,
    pub hash_hits: u64,
    pub spurious_hits: u64,
    /// Comparisons at a text offset lower than the previous comparison's.
    pub backward_moves: u64,
    last_pos: Option<usize>,
}

impl Counters {
    pub fn new() -> Counters {
        Counters::default()
    }
}

impl Probe for Counters {
    #[inline]
    fn compare(&mut self, pos: usize) {
        self.comparisons += 1;
        if matches!(self.last_pos, Some(last) if pos < last) {
            self.backward_moves += 1;
        }
        self.last_pos = Some(pos);
    }

    #[inline]
    fn alignment(&mut self, _pos: usize) {
        self.alignments += 1;
    }

    #[inline]
    fn hash_hit(&mut self, spurious: bool) {
        self.hash_hits += 1;
        if spurious {
            self.spurious_hits += 1;
        }
    }
}

impl<P: Probe + ?Sized> Probe for &mut P {
    fn compare(&mut self, pos: usize) {
        (**self).compare(pos)
    }

    fn alignment(&mut self, pos: usize) {
        (**self).alignment(pos)
    }

    fn hash_hit(&mut self, spurious: bool) {
        (**self).hash_hit(spurious)
    }
}
