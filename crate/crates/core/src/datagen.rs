//! Seeded dataset generation and ingestion of FASTA and plain-text files.
//!
//! # Reproducibility
//!
//! [`generate_text`] is pinned to xoshiro256** seeded through SplitMix64
//! (`Xoshiro256StarStar::seed_from_u64`). Each output byte consumes one
//! 64-bit draw `x`, mapped to `u = (x >> 11) * 2^-53` in `[0, 1)`. The symbol
//! emitted is the first one whose running weight total exceeds `u`, summing
//! weights in declaration order; if rounding leaves `u` above the final
//! total, the last symbol with positive weight is used. The same seed and
//! alphabet therefore yield the same bytes on every platform.

use std::io::{BufRead, Read, Write};

use rand::{Rng, RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::error::{Error, Result};
use crate::text::{Pattern, Text, SENTINEL};

const WEIGHT_TOLERANCE: f64 = 1e-9;

/// Symbols with sampling weights that sum to 1.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphabetSpec {
    symbols: Vec<u8>,
    weights: Vec<f64>,
}

impl AlphabetSpec {
    pub fn new(symbols: Vec<u8>, weights: Vec<f64>) -> Result<AlphabetSpec> {
        let bad = |msg: String| Err(Error::InvalidWeights(msg));
        if symbols.is_empty() {
            return bad("alphabet is empty".into());
        }
        if symbols.len() != weights.len() {
            return bad(format!(
                "{} symbols but {} weights",
                symbols.len(),
                weights.len()
            ));
        }
        for (i, &s) in symbols.iter().enumerate() {
            if s == SENTINEL {
                return bad("the sentinel byte cannot be an alphabet symbol".into());
            }
            if symbols[..i].contains(&s) {
                return bad(format!("symbol {:?} listed twice", s as char));
            }
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return bad(format!("weight {w} is not a non-negative number"));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_TOLERANCE {
            return bad(format!("weights sum to {sum}, not 1"));
        }
        Ok(AlphabetSpec { symbols, weights })
    }

    /// A, C, G and T with equal weight.
    pub fn dna() -> AlphabetSpec {
        AlphabetSpec::new(b"ACGT".to_vec(), vec![0.25; 4]).unwrap()
    }

    /// Printable ASCII (0x20 through 0x7e) with equal weight.
    pub fn ascii() -> AlphabetSpec {
        let symbols: Vec<u8> = (0x20..=0x7e).collect();
        let w = 1.0 / symbols.len() as f64;
        let weights = vec![w; symbols.len()];
        AlphabetSpec::new(symbols, weights).unwrap()
    }

    /// Parses `A=0.3,C=0.2,...`, one single-byte symbol per entry.
    pub fn parse_freqs(spec: &str) -> Result<AlphabetSpec> {
        let mut symbols = Vec::new();
        let mut weights = Vec::new();
        for entry in spec.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (sym, w) = entry.split_once('=').ok_or_else(|| {
                Error::InvalidWeights(format!("expected SYMBOL=WEIGHT, got {entry:?}"))
            })?;
            let &[sym] = sym.as_bytes() else {
                return Err(Error::InvalidWeights(format!(
                    "symbol {sym:?} must be a single byte"
                )));
            };
            let w: f64 = w
                .trim()
                .parse()
                .map_err(|_| Error::InvalidWeights(format!("weight {w:?} is not a number")))?;
            symbols.push(sym);
            weights.push(w);
        }
        AlphabetSpec::new(symbols, weights)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// Parameters for [`generate_text`].
#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub alphabet: AlphabetSpec,
    pub length: usize,
    pub seed: u64,
}

/// Draws `spec.length` symbols; see the module docs for the exact procedure.
pub fn generate_text(spec: &GenSpec) -> Result<Text> {
    if spec.length == 0 {
        return Err(Error::BadRange(
            "generated length must be at least 1".into(),
        ));
    }
    let AlphabetSpec { symbols, weights } = &spec.alphabet;
    let mut cumulative = Vec::with_capacity(weights.len());
    let mut total = 0.0;
    for &w in weights {
        total += w;
        cumulative.push(total);
    }
    let fallback = symbols[weights
        .iter()
        .rposition(|&w| w > 0.0)
        .unwrap_or(symbols.len() - 1)];
    let mut rng = Xoshiro256StarStar::seed_from_u64(spec.seed);
    let out = (0..spec.length)
        .map(|_| {
            let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            cumulative
                .iter()
                .position(|&c| u < c)
                .map_or(fallback, |i| symbols[i])
        })
        .collect::<Vec<u8>>();
    Ok(Text::plain(out))
}

/// Concatenates the sequence lines of every record, uppercased and with
/// whitespace removed. Unless `permissive`, only `A`, `C`, `G`, `T` and `N`
/// are accepted. The sentinel byte is never accepted.
pub fn read_fasta<R: BufRead>(reader: R, permissive: bool) -> Result<Text> {
    let mut seq = Vec::new();
    let mut seen_header = false;
    for (i, line) in reader.split(b'\n').enumerate() {
        let line = line?;
        let line = line.trim_ascii();
        if line.is_empty() {
            continue;
        }
        if line[0] == b'>' {
            seen_header = true;
            continue;
        }
        if !seen_header {
            return Err(Error::MalformedFasta(format!(
                "line {} has sequence data before any '>' header",
                i + 1
            )));
        }
        for &b in line {
            if b.is_ascii_whitespace() {
                continue;
            }
            let b = b.to_ascii_uppercase();
            let legal = if permissive {
                b != SENTINEL
            } else {
                matches!(b, b'A' | b'C' | b'G' | b'T' | b'N')
            };
            if !legal {
                return Err(Error::IllegalBase {
                    byte: b,
                    line: i + 1,
                });
            }
            seq.push(b);
        }
    }
    if !seen_header {
        return Err(Error::MalformedFasta("no '>' header line".into()));
    }
    Ok(Text::plain(seq))
}

/// Writes one FASTA record, wrapping the sequence at `width` bytes per line.
pub fn write_fasta<W: Write>(mut out: W, header: &str, text: &Text, width: usize) -> Result<()> {
    writeln!(out, ">{header}")?;
    for chunk in text.body().chunks(width.max(1)) {
        out.write_all(chunk)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Plain-text input after sentinel stripping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IngestedText {
    pub text: Text,
    /// Sentinel bytes dropped from the input.
    pub removed: usize,
}

/// Reads raw bytes, dropping every occurrence of the sentinel byte.
pub fn read_text_file<R: Read>(mut reader: R) -> Result<IngestedText> {
    let mut raw = Vec::new();
    reader.read_to_end(&mut raw)?;
    let before = raw.len();
    raw.retain(|&b| b != SENTINEL);
    Ok(IngestedText {
        removed: before - raw.len(),
        text: Text::plain(raw),
    })
}

/// `count` substrings of the body with lengths uniform in
/// `len_min..=len_max` and uniformly placed starts, so each occurs at least
/// once.
pub fn sample_patterns(
    text: &Text,
    count: usize,
    len_min: usize,
    len_max: usize,
    seed: u64,
) -> Result<Vec<Pattern>> {
    let body = text.body();
    if len_min == 0 || len_min > len_max || len_max > body.len() {
        return Err(Error::BadRange(format!(
            "pattern lengths {len_min}..={len_max} invalid for a body of {} bytes",
            body.len()
        )));
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(len_min..=len_max);
            let start = rng.gen_range(0..=body.len() - len);
            Pattern::new(&body[start..start + len])
        })
        .collect()
}
