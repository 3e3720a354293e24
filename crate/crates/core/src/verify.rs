//! Gold-standard verification of claimed occurrences.

use crate::text::{MatchSet, Pattern, Text};

/// Precision and recall of a claimed match set against the direct-scan truth.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Verification {
    pub claimed: usize,
    pub truth: usize,
    pub true_positives: usize,
    pub precision: f64,
    pub recall: f64,
}

impl Verification {
    pub fn is_exact(&self) -> bool {
        self.true_positives == self.claimed && self.true_positives == self.truth
    }
}

/// Every window of the body that equals the pattern, by direct comparison.
pub fn gold_standard(text: &Text, pattern: &Pattern) -> MatchSet {
    let body = text.body();
    let needle = pattern.as_bytes();
    if needle.len() > body.len() {
        return MatchSet::new();
    }
    MatchSet::from_sorted(
        body.windows(needle.len())
            .enumerate()
            .filter(|(_, w)| *w == needle)
            .map(|(i, _)| i)
            .collect(),
    )
}

/// Scores `claimed` against [`gold_standard`]. Empty claimed sets have
/// precision 1.0 and empty truths have recall 1.0.
pub fn verify_occurrences(text: &Text, pattern: &Pattern, claimed: &MatchSet) -> Verification {
    let truth = gold_standard(text, pattern);
    let true_positives = claimed.iter().filter(|&&p| truth.contains(p)).count();
    Verification {
        claimed: claimed.len(),
        truth: truth.len(),
        true_positives,
        precision: ratio(true_positives, claimed.len()),
        recall: ratio(true_positives, truth.len()),
    }
}

fn ratio(hits: usize, total: usize) -> f64 {
    if total == 0 {
        1.0
    } else {
        hits as f64 / total as f64
    }
}
