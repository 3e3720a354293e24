//! Timing matrices over algorithms and dataset sizes, accuracy runs, and
//! CSV output.
//!
//! Each `(size, trial)` cell generates its own text and pattern from seeds
//! derived from the configured seed, so every data column except the two
//! timing columns is reproducible. All algorithms in a cell must return the
//! same match set; disagreement aborts the run with
//! [`Error::ResultMismatch`].

use std::hint::black_box;
use std::io::{Read, Write};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algorithm::{Algorithm, Searcher};
use crate::datagen::{generate_text, sample_patterns, AlphabetSpec, GenSpec};
use crate::error::{Error, Result};
use crate::suffix_tree::SuffixTreeIndex;
use crate::text::{MatchSet, Pattern, Text};
use crate::verify::verify_occurrences;

/// Default size grid.
pub const DEFAULT_SIZES: [usize; 4] = [200, 500, 1000, 10_000];

/// Largest text the benchmark hands to the suffix trie by default; its node
/// count grows quadratically with the text length.
pub const DEFAULT_BENCH_TRIE_MAX: usize = 2_000;

/// CSV header written by [`write_csv`].
pub const CSV_HEADER: &str =
    "algorithm,text_len,pattern_len,trial,queries,build_ns,query_total_ns,matches,nodes,logical_bytes";

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub algorithms: Vec<Algorithm>,
    pub pattern_length: usize,
    pub trials: usize,
    pub queries_per_trial: usize,
    pub seed: u64,
    pub alphabet: AlphabetSpec,
    /// Sizes above this skip the suffix trie.
    pub trie_max_len: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: DEFAULT_SIZES.to_vec(),
            algorithms: Algorithm::ALL.to_vec(),
            pattern_length: 10,
            trials: 5,
            queries_per_trial: 100,
            seed: 0,
            alphabet: AlphabetSpec::dna(),
            trie_max_len: DEFAULT_BENCH_TRIE_MAX,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.sizes.is_empty() {
            return bad("no dataset sizes".into());
        }
        if self.algorithms.is_empty() {
            return bad("no algorithms".into());
        }
        let min = *self.sizes.iter().min().unwrap();
        if self.pattern_length == 0 || self.pattern_length > min {
            return bad(format!(
                "pattern length {} must be between 1 and the smallest size {min}",
                self.pattern_length
            ));
        }
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        if self.queries_per_trial == 0 {
            return bad("queries per trial must be at least 1".into());
        }
        Ok(())
    }
}

/// One measurement row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub algorithm: String,
    pub text_len: usize,
    pub pattern_len: usize,
    pub trial: usize,
    pub queries: usize,
    pub build_ns: u64,
    pub query_total_ns: u64,
    pub matches: usize,
    pub nodes: usize,
    pub logical_bytes: usize,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn cell_seed(seed: u64, size: usize, trial: usize, stream: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(seed) ^ size as u64) ^ trial as u64) ^ stream
}

fn elapsed_ns(start: Instant) -> u64 {
    start.elapsed().as_nanos() as u64
}

/// Runs every configured algorithm over every `(size, trial)` cell.
///
/// Index algorithms report construction separately in `build_ns`; every
/// algorithm then answers the same pattern `queries_per_trial` times. Each
/// `(algorithm, size)` pair gets one untimed warm-up run first.
pub fn run_benchmark_matrix(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    config.validate()?;
    let mut records = Vec::new();
    for &size in &config.sizes {
        let algorithms: Vec<Algorithm> = config
            .algorithms
            .iter()
            .copied()
            .filter(|&a| a != Algorithm::SuffixTrie || size <= config.trie_max_len)
            .collect();
        for trial in 0..config.trials {
            let text = generate_text(&GenSpec {
                alphabet: config.alphabet.clone(),
                length: size,
                seed: cell_seed(config.seed, size, trial, 0),
            })?;
            let pattern = sample_patterns(
                &text,
                1,
                config.pattern_length,
                config.pattern_length,
                cell_seed(config.seed, size, trial, 1),
            )?
            .pop()
            .expect("one pattern requested");

            let mut reference: Option<(Algorithm, MatchSet)> = None;
            for &algorithm in &algorithms {
                if trial == 0 {
                    let warm = Searcher::prepare(algorithm, &text, usize::MAX)?;
                    black_box(warm.find_all(&pattern));
                }
                let (record, found) =
                    measure(algorithm, &text, &pattern, trial, config.queries_per_trial)?;
                match &reference {
                    None => reference = Some((algorithm, found)),
                    Some((ref_alg, expected)) if *expected != found => {
                        return Err(Error::ResultMismatch {
                            algorithm: algorithm.name(),
                            reference: ref_alg.name(),
                            got: found.len(),
                            expected: expected.len(),
                            text_len: size,
                            trial,
                        });
                    }
                    Some(_) => {}
                }
                records.push(record);
            }
        }
    }
    Ok(records)
}

fn measure(
    algorithm: Algorithm,
    text: &Text,
    pattern: &Pattern,
    trial: usize,
    queries: usize,
) -> Result<(BenchRecord, MatchSet)> {
    let start = Instant::now();
    let searcher = Searcher::prepare(algorithm, text, usize::MAX)?;
    let build_ns = if algorithm.is_index() {
        elapsed_ns(start)
    } else {
        0
    };

    let mut found = MatchSet::new();
    let start = Instant::now();
    for _ in 0..queries {
        found = black_box(searcher.find_all(black_box(pattern)));
    }
    let query_total_ns = elapsed_ns(start);

    let record = BenchRecord {
        algorithm: algorithm.name().to_string(),
        text_len: text.len(),
        pattern_len: pattern.len(),
        trial,
        queries,
        build_ns,
        query_total_ns,
        matches: found.len(),
        nodes: searcher.nodes(),
        logical_bytes: searcher.logical_bytes(),
    };
    Ok((record, found))
}

/// Writes [`CSV_HEADER`] and one row per record, LF-terminated.
pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<BenchRecord>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(Error::from))
        .collect()
}

/// Aggregate accuracy of suffix tree enumeration against the gold standard.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AccuracyReport {
    pub patterns: usize,
    pub claimed: usize,
    pub truth: usize,
    pub true_positives: usize,
    pub precision: f64,
    pub recall: f64,
}

/// Samples `pattern_count` substrings (lengths 5 to 50, clamped to the text)
/// and scores the suffix tree's answers for them.
pub fn run_accuracy_experiment(
    text: &Text,
    pattern_count: usize,
    seed: u64,
) -> Result<AccuracyReport> {
    if pattern_count == 0 {
        return run_accuracy_on_patterns(text, &[]);
    }
    let len_max = text.len().min(50);
    let len_min = len_max.min(5);
    let patterns = sample_patterns(text, pattern_count, len_min, len_max, seed)?;
    run_accuracy_on_patterns(text, &patterns)
}

pub fn run_accuracy_on_patterns(text: &Text, patterns: &[Pattern]) -> Result<AccuracyReport> {
    let mut report = AccuracyReport {
        patterns: patterns.len(),
        claimed: 0,
        truth: 0,
        true_positives: 0,
        precision: 1.0,
        recall: 1.0,
    };
    if patterns.is_empty() {
        return Ok(report);
    }
    let tree = SuffixTreeIndex::build(text.with_sentinel()?)?;
    let plain = Text::plain(text.body());
    for p in patterns {
        let v = verify_occurrences(&plain, p, &tree.find_all(p)?);
        report.claimed += v.claimed;
        report.truth += v.truth;
        report.true_positives += v.true_positives;
    }
    let ratio = |hits: usize, total: usize| {
        if total == 0 {
            1.0
        } else {
            hits as f64 / total as f64
        }
    };
    report.precision = ratio(report.true_positives, report.claimed);
    report.recall = ratio(report.true_positives, report.truth);
    Ok(report)
}
