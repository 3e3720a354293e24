//! Command-line front end.
//!
//! Exit codes: 0 success, 1 no match (`search` only), 2 usage error, 3 data
//! error (unreadable or malformed input, trie cap exceeded, or a correctness
//! failure such as disagreeing matchers).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algorithm::{Algorithm, Searcher};
use crate::bench::{self, BenchConfig, BenchRecord};
use crate::datagen::{self, AlphabetSpec, GenSpec};
use crate::error::Error;
use crate::suffix_tree::SuffixTreeIndex;
use crate::suffix_trie::{SuffixTrieIndex, DEFAULT_TRIE_CAP};
use crate::text::{Pattern, Text};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_MATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "suffixsearch",
    version,
    about = "Exact string matching and suffix index benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every occurrence of a pattern.
    Search(SearchArgs),
    /// Time the matchers over generated texts and emit CSV.
    Bench(BenchArgs),
    /// Report suffix trie or suffix tree structure counts.
    Stats(StatsArgs),
    /// Generate a seeded random text.
    Gen(GenArgs),
    /// Check suffix tree answers against the direct-scan gold standard.
    Accuracy(AccuracyArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "source")]
struct Source {
    /// Read the text from a file.
    #[arg(long, value_name = "FILE")]
    text: Option<PathBuf>,
    /// Read the text from standard input.
    #[arg(long)]
    stdin: bool,
}

#[derive(Debug, Args)]
struct Ingest {
    #[command(flatten)]
    source: Source,
    /// Parse the input as FASTA.
    #[arg(long)]
    fasta: bool,
    /// Accept any base letter in FASTA input, not only ACGTN.
    #[arg(long, requires = "fasta")]
    permissive: bool,
    /// Lowercase ASCII letters before indexing.
    #[arg(long)]
    lowercase: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "needle")]
struct PatternSource {
    /// Pattern given literally.
    #[arg(long)]
    pattern: Option<String>,
    /// Pattern read verbatim from a file, for arbitrary bytes.
    #[arg(long, value_name = "FILE")]
    pattern_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, default_value = "stree", value_parser = parse_algorithm)]
    algo: Algorithm,
    #[command(flatten)]
    ingest: Ingest,
    #[command(flatten)]
    needle: PatternSource,
    /// Print only the occurrence count.
    #[arg(long)]
    count_only: bool,
    /// Longest body the suffix trie will index.
    #[arg(long, default_value_t = DEFAULT_TRIE_CAP)]
    trie_cap: usize,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_values_t = bench::DEFAULT_SIZES)]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', value_parser = parse_algorithm,
          default_value = "naive,kmp,rk,bm,strie,stree")]
    algos: Vec<Algorithm>,
    #[arg(long, default_value_t = 10)]
    pattern_len: usize,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, default_value_t = 100)]
    queries: usize,
    #[arg(long)]
    seed: u64,
    #[command(flatten)]
    alphabet: AlphabetArgs,
    /// Sizes above this skip the suffix trie.
    #[arg(long, default_value_t = bench::DEFAULT_BENCH_TRIE_MAX)]
    trie_max: usize,
    /// Write CSV here instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IndexKind {
    Strie,
    Stree,
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[command(flatten)]
    ingest: Ingest,
    #[arg(long, value_enum, default_value = "stree")]
    index: IndexKind,
    #[arg(long, default_value_t = DEFAULT_TRIE_CAP)]
    trie_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlphabetKind {
    Dna,
    Ascii,
    Custom,
}

#[derive(Debug, Args)]
struct AlphabetArgs {
    #[arg(long, value_enum, default_value = "dna")]
    alphabet: AlphabetKind,
    /// Symbol weights such as `A=0.3,C=0.2,G=0.2,T=0.3`.
    #[arg(long)]
    freqs: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    Raw,
    Fasta,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    alphabet: AlphabetArgs,
    #[arg(long)]
    len: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, value_enum, default_value = "raw")]
    format: GenFormat,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "accuracy_source")]
struct AccuracySource {
    #[arg(long, value_name = "FILE")]
    text: Option<PathBuf>,
    #[arg(long)]
    stdin: bool,
    /// Generate this many bytes of DNA instead of reading input.
    #[arg(long, value_name = "N")]
    gen_len: Option<usize>,
}

#[derive(Debug, Args)]
struct AccuracyArgs {
    #[command(flatten)]
    source: AccuracySource,
    #[arg(long)]
    fasta: bool,
    #[arg(long, default_value_t = 100)]
    patterns: usize,
    #[arg(long)]
    seed: u64,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }

    fn data(e: impl std::fmt::Display) -> Failure {
        Failure {
            code: EXIT_DATA,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::data(e)
    }
}

type CmdResult = Result<i32, Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

/// Parses `args` (program name first) and runs the subcommand, returning
/// the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let out: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(out, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    let result = match cli.command {
        Command::Search(a) => cmd_search(a, &mut io),
        Command::Bench(a) => cmd_bench(a, &mut io),
        Command::Stats(a) => cmd_stats(a, &mut io),
        Command::Gen(a) => cmd_gen(a, &mut io),
        Command::Accuracy(a) => cmd_accuracy(a, &mut io),
    };
    let code = match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.stderr, "error: {}", f.message);
            f.code
        }
    };
    let _ = io.stdout.flush();
    code
}

fn read_source(text: &Option<PathBuf>, use_stdin: bool, io: &mut Io) -> Result<Vec<u8>, Failure> {
    let mut raw = Vec::new();
    match text {
        Some(path) => {
            File::open(path)
                .and_then(|f| BufReader::new(f).read_to_end(&mut raw))
                .map_err(|e| Failure::data(format!("{}: {e}", path.display())))?;
        }
        None => {
            debug_assert!(use_stdin);
            io.stdin.read_to_end(&mut raw)?;
        }
    }
    Ok(raw)
}

fn parse_text(raw: &[u8], fasta: bool, permissive: bool, io: &mut Io) -> Result<Text, Failure> {
    if fasta {
        datagen::read_fasta(raw, permissive).map_err(Failure::data)
    } else {
        let ingested = datagen::read_text_file(raw).map_err(Failure::data)?;
        if ingested.removed > 0 {
            writeln!(
                io.stderr,
                "note: removed {} NUL byte(s) from the input",
                ingested.removed
            )?;
        }
        Ok(ingested.text)
    }
}

fn ingest(args: &Ingest, io: &mut Io) -> Result<Text, Failure> {
    let raw = read_source(&args.source.text, args.source.stdin, io)?;
    let text = parse_text(&raw, args.fasta, args.permissive, io)?;
    Ok(if args.lowercase {
        Text::plain(text.body().to_ascii_lowercase())
    } else {
        text
    })
}

fn cmd_search(args: SearchArgs, io: &mut Io) -> CmdResult {
    let bytes = match (&args.needle.pattern, &args.needle.pattern_file) {
        (Some(p), _) => p.as_bytes().to_vec(),
        (None, Some(path)) => {
            std::fs::read(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        }
        (None, None) => unreachable!("clap enforces one pattern source"),
    };
    let pattern = Pattern::new(bytes).map_err(Failure::usage)?;
    let text = ingest(&args.ingest, io)?;
    let searcher = Searcher::prepare(args.algo, &text, args.trie_cap).map_err(Failure::data)?;
    let count = if args.count_only {
        searcher.count(&pattern)
    } else {
        let found = searcher.find_all(&pattern);
        for offset in found.iter() {
            writeln!(io.stdout, "{offset}")?;
        }
        found.len()
    };
    writeln!(io.stdout, "count: {count}")?;
    Ok(if count > 0 { EXIT_OK } else { EXIT_NO_MATCH })
}

fn alphabet(args: &AlphabetArgs) -> Result<AlphabetSpec, Failure> {
    match (args.alphabet, &args.freqs) {
        (AlphabetKind::Ascii, Some(_)) => Err(Failure::usage(
            "--freqs cannot be combined with --alphabet ascii",
        )),
        (AlphabetKind::Ascii, None) => Ok(AlphabetSpec::ascii()),
        (AlphabetKind::Dna, None) => Ok(AlphabetSpec::dna()),
        (AlphabetKind::Custom, None) => Err(Failure::usage("--alphabet custom requires --freqs")),
        (_, Some(freqs)) => AlphabetSpec::parse_freqs(freqs).map_err(Failure::usage),
    }
}

fn open_out(path: &Option<PathBuf>) -> Result<Option<File>, Failure> {
    path.as_ref()
        .map(|p| File::create(p).map_err(|e| Failure::data(format!("{}: {e}", p.display()))))
        .transpose()
}

fn cmd_bench(args: BenchArgs, io: &mut Io) -> CmdResult {
    let config = BenchConfig {
        sizes: args.sizes,
        algorithms: args.algos,
        pattern_length: args.pattern_len,
        trials: args.trials,
        queries_per_trial: args.queries,
        seed: args.seed,
        alphabet: alphabet(&args.alphabet)?,
        trie_max_len: args.trie_max,
    };
    config.validate().map_err(Failure::usage)?;
    let out = open_out(&args.out)?;
    let records = bench::run_benchmark_matrix(&config).map_err(Failure::data)?;
    match out {
        Some(file) => bench::write_csv(&records, io::BufWriter::new(file)),
        None => bench::write_csv(&records, &mut *io.stdout),
    }
    .map_err(Failure::data)?;
    for &size in &config.sizes {
        writeln!(io.stderr, "{}", size_summary(size, &records))?;
    }
    Ok(EXIT_OK)
}

fn size_summary(size: usize, records: &[BenchRecord]) -> String {
    let mut parts = Vec::new();
    for alg in Algorithm::ALL {
        let rows: Vec<&BenchRecord> = records
            .iter()
            .filter(|r| r.text_len == size && r.algorithm == alg.name())
            .collect();
        if rows.is_empty() {
            continue;
        }
        let queries: u64 = rows.iter().map(|r| r.queries as u64).sum();
        let per_query = rows.iter().map(|r| r.query_total_ns).sum::<u64>() / queries.max(1);
        let build = rows.iter().map(|r| r.build_ns).sum::<u64>() / rows.len() as u64;
        if alg.is_index() {
            parts.push(format!("{alg} {per_query} ns/query (build {build} ns)"));
        } else {
            parts.push(format!("{alg} {per_query} ns/query"));
        }
    }
    format!("size {size}: {}", parts.join(", "))
}

fn cmd_stats(args: StatsArgs, io: &mut Io) -> CmdResult {
    let text = ingest(&args.ingest, io)?;
    if text.is_empty() {
        return Err(Failure::data("text is empty"));
    }
    let text = text.with_sentinel().map_err(Failure::data)?;
    let lines = match args.index {
        IndexKind::Stree => {
            let tree = SuffixTreeIndex::build(text).map_err(Failure::data)?;
            let s = tree.stats().map_err(Failure::data)?;
            [
                ("node_count", s.node_count),
                ("leaf_count", s.leaf_count_total),
                ("internal_count", s.internal_count),
                ("max_depth", s.max_depth),
                ("logical_bytes", s.logical_bytes),
            ]
        }
        IndexKind::Strie => {
            let trie = SuffixTrieIndex::build_capped(text, args.trie_cap).map_err(Failure::data)?;
            let s = trie.stats();
            [
                ("node_count", s.node_count),
                ("leaf_count", s.leaf_count),
                ("internal_count", s.internal_count),
                ("max_depth", s.max_depth),
                ("logical_bytes", s.logical_bytes),
            ]
        }
    };
    for (key, value) in lines {
        writeln!(io.stdout, "{key}: {value}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_gen(args: GenArgs, io: &mut Io) -> CmdResult {
    let spec = GenSpec {
        alphabet: alphabet(&args.alphabet)?,
        length: args.len,
        seed: args.seed,
    };
    let text = datagen::generate_text(&spec).map_err(Failure::usage)?;
    let mut file = open_out(&args.out)?;
    let out: &mut dyn Write = match &mut file {
        Some(f) => f,
        None => &mut *io.stdout,
    };
    match args.format {
        GenFormat::Raw => out.write_all(text.body())?,
        GenFormat::Fasta => {
            datagen::write_fasta(&mut *out, "generated", &text, 60).map_err(Failure::data)?
        }
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn cmd_accuracy(args: AccuracyArgs, io: &mut Io) -> CmdResult {
    let text = match args.source.gen_len {
        Some(len) => datagen::generate_text(&GenSpec {
            alphabet: AlphabetSpec::dna(),
            length: len,
            seed: args.seed,
        })
        .map_err(Failure::usage)?,
        None => {
            let raw = read_source(&args.source.text, args.source.stdin, io)?;
            parse_text(&raw, args.fasta, false, io)?
        }
    };
    let report =
        bench::run_accuracy_experiment(&text, args.patterns, args.seed).map_err(Failure::data)?;
    writeln!(io.stdout, "patterns: {}", report.patterns)?;
    writeln!(io.stdout, "occurrences: {}", report.truth)?;
    writeln!(io.stdout, "precision: {}", report.precision)?;
    writeln!(io.stdout, "recall: {}", report.recall)?;
    if report.precision == 1.0 && report.recall == 1.0 {
        Ok(EXIT_OK)
    } else {
        Err(Failure::data(
            "suffix tree answers disagree with the gold standard",
        ))
    }
}
