//! Command-line surface: classification, evaluation, generation and
//! benchmarking with stable machine-readable output.
//!
//! Machine format emits one self-contained JSON record per line; re-running
//! a command with identical flags and seeds yields identical bytes (bench
//! rows carry wall-clock times and are the one exception). Exit codes never
//! conflate "no" with "error": for `query`, 0 = yes, 1 = no, 2 = bad
//! input/flags, 3 = resource cap.

use crate::automata::{Alphabet, Dfa, Regex};
use crate::classify::{classify, Caveat, Certificate, Diagnostics, Label, Verdict};
use crate::config::{Caps, OutputFormat, RunConfig};
use crate::engines::{
    brute_query, color_coding_query, tractable_query, Answer, EngineKind, QueryResult, QueryStats,
    Want,
};
use crate::error::{Error, Result};
use crate::graph::{GridScheme, LabelMode, LabeledGraph, PathWitness};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::time::Instant;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "rspq",
    version,
    about = "Regular simple path queries: classify and evaluate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a regular language into its query-complexity regime.
    Classify(ClassifyArgs),
    /// Evaluate a regular simple path query on a graph.
    Query(QueryArgs),
    /// Generate graph instances in the text format.
    Gen(GenArgs),
    /// Run an engine matrix over a generated corpus and print timing rows.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> OutputFormat {
        match f {
            Format::Human => OutputFormat::Human,
            Format::Machine => OutputFormat::Machine,
        }
    }
}

#[derive(Args)]
struct CapArgs {
    /// Determinization state cap.
    #[arg(long, default_value_t = Caps::default().determinization_states)]
    max_dfa_states: usize,
    /// Transition monoid element cap (aperiodicity answers `unknown` beyond it).
    #[arg(long, default_value_t = Caps::default().monoid_elements)]
    max_monoid_elements: usize,
    /// Node expansion budget for the exact engine.
    #[arg(long, default_value_t = Caps::default().brute_expansions)]
    max_brute_expansions: u64,
    /// Largest shortcut level a certificate may use.
    #[arg(long, default_value_t = Caps::default().max_level)]
    max_level: usize,
    /// Cap on prefix/suffix enumeration while building certificates.
    #[arg(long, default_value_t = Caps::default().level_enumeration)]
    max_level_enumeration: usize,
    /// Cap on color-coding trials.
    #[arg(long, default_value_t = Caps::default().color_trials)]
    max_color_trials: u64,
}

impl CapArgs {
    fn caps(&self) -> Result<Caps> {
        let caps = Caps {
            determinization_states: self.max_dfa_states,
            monoid_elements: self.max_monoid_elements,
            brute_expansions: self.max_brute_expansions,
            max_level: self.max_level,
            level_enumeration: self.max_level_enumeration,
            color_trials: self.max_color_trials,
            ..Caps::default()
        };
        caps.validate()?;
        Ok(caps)
    }
}

#[derive(Args)]
struct ClassifyArgs {
    /// Regular expression for the query language.
    #[arg(long, conflicts_with = "dfa")]
    regex: Option<String>,
    /// Declared alphabet (defaults to the symbols used in the regex).
    #[arg(long)]
    alphabet: Option<String>,
    /// Automaton file in the DFA text format, instead of a regex.
    #[arg(long)]
    dfa: Option<String>,
    /// Graph model the verdict is stated for.
    #[arg(long, default_value = "edge-labeled")]
    model: String,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args)]
struct QueryArgs {
    /// Graph file in the text format.
    graph: String,
    /// Regular expression for the query language.
    regex: String,
    /// Source vertex.
    x: usize,
    /// Target vertex.
    y: usize,
    #[arg(long)]
    alphabet: Option<String>,
    /// auto picks: certified tractable engine, else color-coding when
    /// --max-edges is given, else the exact engine.
    #[arg(long, default_value = "auto")]
    engine: String,
    /// Report a shortest satisfying path instead of any.
    #[arg(long)]
    shortest: bool,
    /// Path length bound for the color-coding engine.
    #[arg(long)]
    max_edges: Option<usize>,
    /// Failure probability for the color-coding engine.
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Uniform random graph with n vertices and m distinct labeled edges.
    Random {
        n: usize,
        m: usize,
        #[arg(long, default_value = "ab")]
        alphabet: String,
        #[arg(long, default_value = "edge-labeled")]
        mode: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<String>,
    },
    /// w×h directed grid (right and down edges).
    Grid {
        w: usize,
        h: usize,
        /// Labeling scheme: constant[:c], alternating[:cd], random[:chars].
        #[arg(long, default_value = "constant:a")]
        labels: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Args)]
struct BenchArgs {
    /// Instance family: chain, grid or random.
    #[arg(long)]
    family: String,
    #[arg(long)]
    regex: String,
    #[arg(long)]
    alphabet: Option<String>,
    /// Comma-separated sizes (chain/random: vertex count; grid: side).
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// Comma-separated engines: brute, tractable, color-coding.
    #[arg(long, value_delimiter = ',', default_value = "brute,tractable")]
    engines: Vec<String>,
    /// Grid labeling scheme.
    #[arg(long, default_value = "constant:a")]
    labels: String,
    #[arg(long)]
    max_edges: Option<usize>,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    #[command(flatten)]
    caps: CapArgs,
}

/// Classification record, one JSON object per line in machine format.
#[derive(Debug, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub label: Label,
    pub model: LabelMode,
    pub caveats: Vec<Caveat>,
    pub certificate: Certificate,
    pub diagnostics: Diagnostics,
    pub config: RunConfig,
}

/// Query record, one JSON object per line in machine format.
#[derive(Debug, Serialize, Deserialize)]
pub struct QueryRecord {
    pub answer: Answer,
    pub witness: Option<PathWitness>,
    pub word: Option<String>,
    pub length: Option<usize>,
    pub engine: EngineKind,
    pub stats: QueryStats,
    pub config: RunConfig,
}

/// Benchmark row. The wall-clock column is inherently nondeterministic;
/// every other column is reproducible.
#[derive(Debug, Serialize, Deserialize)]
pub struct BenchRecord {
    pub instance: String,
    pub engine: String,
    pub answer: String,
    pub wall_ms: f64,
    pub expansions: u64,
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let mut stdout = std::io::stdout().lock();
    run_from(args, &mut stdout)
}

/// Run with explicit arguments and output sink; returns the exit code.
pub fn run_from(args: Vec<String>, out: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version itself with success codes
            let code = if e.use_stderr() {
                EXIT_BAD_INPUT
            } else {
                EXIT_YES
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Classify(args) => cmd_classify(args, out),
        Command::Query(args) => cmd_query(args, out),
        Command::Gen(args) => cmd_gen(args, out),
        Command::Bench(args) => cmd_bench(args, out),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_resource() {
                EXIT_RESOURCE
            } else {
                EXIT_BAD_INPUT
            }
        }
    }
}

fn alphabet_for(regex: &str, declared: &Option<String>) -> Result<Alphabet> {
    match declared {
        Some(a) => Alphabet::parse(a),
        None => {
            // probe-parse over the largest alphabet to collect symbols
            let full = Alphabet::parse("abcdefghijklmnopqrstuvwxyz0123456789")?;
            let re = Regex::parse(regex, &full)?;
            let symbols = re.symbols();
            if symbols.is_empty() {
                return Err(Error::InvalidAlphabet(
                    "the regex uses no symbols; pass --alphabet explicitly".into(),
                ));
            }
            Alphabet::new(symbols)
        }
    }
}

fn cmd_classify(args: ClassifyArgs, out: &mut dyn Write) -> Result<i32> {
    let caps = args.caps.caps()?;
    let model: LabelMode = args.model.parse()?;
    let dfa = match (&args.regex, &args.dfa) {
        (Some(re), None) => {
            let alphabet = alphabet_for(re, &args.alphabet)?;
            Dfa::from_regex_with(re, &alphabet, &caps)?
        }
        (None, Some(path)) => Dfa::parse_text(&std::fs::read_to_string(path)?)?,
        _ => {
            return Err(Error::IncompatibleFlags(
                "pass exactly one of --regex or --dfa".into(),
            ))
        }
    };
    let verdict = classify(&dfa, model, &caps)?;
    let config = RunConfig {
        caps,
        delta: 0.01,
        seed: 0,
        format: args.format.into(),
    };
    match args.format {
        Format::Machine => {
            let record = ClassifyRecord {
                label: verdict.label,
                model: verdict.model,
                caveats: verdict.caveats.clone(),
                certificate: verdict.certificate.clone(),
                diagnostics: verdict.diagnostics,
                config,
            };
            writeln!(out, "{}", serde_json::to_string(&record)?)?;
        }
        Format::Human => print_verdict_human(&verdict, out)?,
    }
    Ok(EXIT_YES)
}

fn print_verdict_human(v: &Verdict, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "label: {:?}", v.label)?;
    writeln!(out, "model: {}", v.model.name())?;
    if !v.caveats.is_empty() {
        writeln!(out, "caveats: edge_model_only")?;
    }
    writeln!(
        out,
        "diagnostics: subword_closed={} aperiodic={:?}",
        v.diagnostics.subword_closed, v.diagnostics.aperiodic
    )?;
    match &v.certificate {
        Certificate::Decomposition(dec) => {
            writeln!(out, "certificate: decomposition at level {}", dec.level)?;
            writeln!(out, "  short words: {:?}", dec.short_words)?;
            for c in &dec.components {
                writeln!(
                    out,
                    "  component: \"{}\" · [{}-state middle] · \"{}\"",
                    c.prefix,
                    c.middle.num_states(),
                    c.suffix
                )?;
            }
        }
        Certificate::HardnessWitness(w) => {
            writeln!(
                out,
                "certificate: hardness witness p=\"{}\" s=\"{}\" m=\"{}\" m'=\"{}\"",
                w.prefix, w.suffix, w.middle, w.middle_subword
            )?;
            writeln!(
                out,
                "  pumps: prefix={:?} suffix={:?}",
                w.prefix_pump, w.suffix_pump
            )?;
        }
    }
    Ok(())
}

fn cmd_query(args: QueryArgs, out: &mut dyn Write) -> Result<i32> {
    let caps = args.caps.caps()?;
    let graph = LabeledGraph::parse(&std::fs::read_to_string(&args.graph)?)?;
    let alphabet = alphabet_for(&args.regex, &args.alphabet)?;
    let dfa = Dfa::from_regex_with(&args.regex, &alphabet, &caps)?;
    let want = if args.shortest {
        Want::Shortest
    } else {
        Want::Exists
    };
    let delta = args.delta.unwrap_or(0.01);

    let result = match args.engine.as_str() {
        "brute" => {
            reject_color_flags(&args, "brute")?;
            brute_query(&graph, &dfa, args.x, args.y, want, &caps)?
        }
        "tractable" => {
            reject_color_flags(&args, "tractable")?;
            let verdict = classify(&dfa, graph.mode(), &caps)?;
            let dec = verdict.decomposition().ok_or_else(|| {
                Error::IncompatibleFlags(
                    "the language is not certified tractable; use --engine brute or color-coding"
                        .into(),
                )
            })?;
            tractable_query(&graph, dec, &dfa, args.x, args.y, want, &caps)?
        }
        "color-coding" => {
            let max_edges = args.max_edges.ok_or_else(|| {
                Error::IncompatibleFlags("--engine color-coding needs --max-edges".into())
            })?;
            if args.shortest {
                return Err(Error::IncompatibleFlags(
                    "the color-coding engine answers existence only, not --shortest".into(),
                ));
            }
            color_coding_query(
                &graph, &dfa, args.x, args.y, max_edges, delta, args.seed, &caps,
            )?
        }
        "auto" => {
            let verdict = classify(&dfa, graph.mode(), &caps)?;
            match verdict.decomposition() {
                Some(dec) => {
                    if args.delta.is_some() {
                        return Err(Error::IncompatibleFlags(
                            "--delta applies only when the color-coding engine runs".into(),
                        ));
                    }
                    tractable_query(&graph, dec, &dfa, args.x, args.y, want, &caps)?
                }
                None => match args.max_edges {
                    Some(max_edges) if !args.shortest => color_coding_query(
                        &graph, &dfa, args.x, args.y, max_edges, delta, args.seed, &caps,
                    )?,
                    _ => {
                        if args.delta.is_some() {
                            return Err(Error::IncompatibleFlags(
                                "--delta applies only when the color-coding engine runs".into(),
                            ));
                        }
                        brute_query(&graph, &dfa, args.x, args.y, want, &caps)?
                    }
                },
            }
        }
        other => {
            return Err(Error::IncompatibleFlags(format!(
                "unknown engine '{other}' (use auto, brute, tractable or color-coding)"
            )))
        }
    };

    let config = RunConfig {
        caps,
        delta,
        seed: args.seed,
        format: args.format.into(),
    };
    let exit = if result.is_yes() { EXIT_YES } else { EXIT_NO };
    match args.format {
        Format::Machine => {
            let record = QueryRecord {
                answer: result.answer,
                word: result.witness.as_ref().map(|w| w.word.clone()),
                witness: result.witness.clone(),
                length: result.length,
                engine: result.engine,
                stats: result.stats,
                config,
            };
            writeln!(out, "{}", serde_json::to_string(&record)?)?;
        }
        Format::Human => print_query_human(&result, out)?,
    }
    Ok(exit)
}

fn reject_color_flags(args: &QueryArgs, engine: &str) -> Result<()> {
    if args.max_edges.is_some() {
        return Err(Error::IncompatibleFlags(format!(
            "--max-edges applies only to the color-coding engine, not {engine}"
        )));
    }
    if args.delta.is_some() {
        return Err(Error::IncompatibleFlags(format!(
            "--delta applies only to the color-coding engine, not {engine}"
        )));
    }
    Ok(())
}

fn print_query_human(r: &QueryResult, out: &mut dyn Write) -> Result<()> {
    match &r.witness {
        Some(w) => {
            writeln!(out, "answer: yes")?;
            writeln!(out, "path: {:?}", w.vertices)?;
            writeln!(out, "word: \"{}\"", w.word)?;
            writeln!(out, "length: {}", w.length)?;
        }
        None => writeln!(out, "answer: no")?,
    }
    writeln!(out, "engine: {}", r.engine.name())?;
    writeln!(
        out,
        "stats: expansions={} trials={}",
        r.stats.expansions, r.stats.trials
    )?;
    Ok(())
}

fn cmd_gen(args: GenArgs, out: &mut dyn Write) -> Result<i32> {
    let (text, path) = match args.family {
        GenFamily::Random {
            n,
            m,
            alphabet,
            mode,
            seed,
            out,
        } => {
            let alphabet = Alphabet::parse(&alphabet)?;
            let mode: LabelMode = mode.parse()?;
            let g = LabeledGraph::gen_random(n, m, &alphabet, mode, seed)?;
            (g.to_text(), out)
        }
        GenFamily::Grid {
            w,
            h,
            labels,
            seed,
            out,
        } => {
            let scheme: GridScheme = labels.parse()?;
            let g = LabeledGraph::gen_grid(w, h, &scheme, seed);
            (g.to_text(), out)
        }
    };
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => write!(out, "{text}")?,
    }
    Ok(EXIT_YES)
}

fn cmd_bench(args: BenchArgs, out: &mut dyn Write) -> Result<i32> {
    let caps = args.caps.caps()?;
    let alphabet = alphabet_for(&args.regex, &args.alphabet)?;
    let dfa = Dfa::from_regex_with(&args.regex, &alphabet, &caps)?;
    let verdict = classify(&dfa, LabelMode::EdgeLabeled, &caps)?;
    if args.format == Format::Human {
        writeln!(
            out,
            "{:<14} {:<12} {:<22} {:>10} {:>12}",
            "instance", "engine", "answer", "wall_ms", "expansions"
        )?;
    }
    for &size in &args.sizes {
        let (name, graph, x, y) = bench_instance(&args, size, &alphabet, &dfa)?;
        for engine in &args.engines {
            let started = Instant::now();
            let ran: Result<QueryResult> = match engine.as_str() {
                "brute" => brute_query(&graph, &dfa, x, y, Want::Exists, &caps),
                "tractable" => {
                    let dec = verdict.decomposition().ok_or_else(|| {
                        Error::IncompatibleFlags(format!(
                            "'{}' is not certified tractable; drop the tractable engine",
                            args.regex
                        ))
                    })?;
                    tractable_query(&graph, dec, &dfa, x, y, Want::Exists, &caps)
                }
                "color-coding" => {
                    let max_edges = args.max_edges.ok_or_else(|| {
                        Error::IncompatibleFlags("color-coding rows need --max-edges".into())
                    })?;
                    color_coding_query(
                        &graph,
                        &dfa,
                        x,
                        y,
                        max_edges,
                        args.delta.unwrap_or(0.01),
                        args.seed,
                        &caps,
                    )
                }
                other => {
                    return Err(Error::IncompatibleFlags(format!(
                        "unknown engine '{other}'"
                    )))
                }
            };
            let wall_ms = started.elapsed().as_secs_f64() * 1e3;
            let (answer, expansions) = match &ran {
                Ok(r) => (
                    if r.is_yes() {
                        "yes".to_string()
                    } else {
                        "no".to_string()
                    },
                    r.stats.expansions,
                ),
                Err(Error::CapExceeded { kind, .. }) => (format!("error:{kind}"), 0),
                Err(e) => return Err(clone_input_error(e)),
            };
            let record = BenchRecord {
                instance: name.clone(),
                engine: engine.clone(),
                answer,
                wall_ms,
                expansions,
            };
            match args.format {
                Format::Machine => writeln!(out, "{}", serde_json::to_string(&record)?)?,
                Format::Human => writeln!(
                    out,
                    "{:<14} {:<12} {:<22} {:>10.3} {:>12}",
                    record.instance,
                    record.engine,
                    record.answer,
                    record.wall_ms,
                    record.expansions
                )?,
            }
        }
    }
    Ok(EXIT_YES)
}

fn clone_input_error(e: &Error) -> Error {
    Error::IncompatibleFlags(e.to_string())
}

fn bench_instance(
    args: &BenchArgs,
    size: usize,
    alphabet: &Alphabet,
    dfa: &Dfa,
) -> Result<(String, LabeledGraph, usize, usize)> {
    match args.family.as_str() {
        "chain" => {
            if size < 1 {
                return Err(Error::Infeasible("chain needs at least one vertex".into()));
            }
            // label the chain with an accepted word of matching length when
            // one exists, else with the first alphabet letter (a negative
            // instance is still a meaningful row)
            let word = lex_min_word_of_length(dfa, size - 1)
                .unwrap_or_else(|| alphabet.chars()[0].to_string().repeat(size - 1));
            let chars: Vec<char> = word.chars().collect();
            let edges = (0..size - 1)
                .map(|i| crate::graph::EdgeRec {
                    from: i,
                    to: i + 1,
                    label: Some(chars[i]),
                })
                .collect();
            let g = LabeledGraph::new(LabelMode::EdgeLabeled, size, None, edges)?;
            Ok((format!("chain-{size}"), g, 0, size - 1))
        }
        "grid" => {
            let scheme: GridScheme = args.labels.parse()?;
            let g = LabeledGraph::gen_grid(size, size, &scheme, args.seed);
            Ok((format!("grid-{size}x{size}"), g, 0, size * size - 1))
        }
        "random" => {
            let m = (5 * size / 2).min(size.saturating_mul(size - 1));
            let g = LabeledGraph::gen_random(
                size,
                m,
                alphabet,
                LabelMode::EdgeLabeled,
                args.seed ^ size as u64,
            )?;
            Ok((format!("random-{size}"), g, 0, size - 1))
        }
        other => Err(Error::Infeasible(format!("unknown family '{other}'"))),
    }
}

/// Lexicographically smallest accepted word of exactly the given length.
fn lex_min_word_of_length(d: &Dfa, len: usize) -> Option<String> {
    // reach[r] = states that reach acceptance in exactly r more letters
    let n = d.num_states();
    let mut reach = vec![vec![false; n]; len + 1];
    for (q, slot) in reach[0].iter_mut().enumerate() {
        *slot = d.is_accepting(q);
    }
    for r in 1..=len {
        for q in 0..n {
            reach[r][q] = (0..d.alphabet().len()).any(|c| reach[r - 1][d.step_sym(q, c)]);
        }
    }
    if !reach[len][d.initial()] {
        return None;
    }
    let mut word = String::new();
    let mut q = d.initial();
    for r in (1..=len).rev() {
        let (c, &ch) = d
            .alphabet()
            .chars()
            .iter()
            .enumerate()
            .find(|(c, _)| reach[r - 1][d.step_sym(q, *c)])
            .expect("reachability table admits a letter");
        word.push(ch);
        q = d.step_sym(q, c);
    }
    Some(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_min_words() {
        let ab = Alphabet::parse("ab").unwrap();
        let d = Dfa::from_regex("a*b", &ab).unwrap();
        assert_eq!(lex_min_word_of_length(&d, 3).unwrap(), "aab");
        assert_eq!(lex_min_word_of_length(&d, 1).unwrap(), "b");
        let even = Dfa::from_regex("(aa)*", &Alphabet::parse("a").unwrap()).unwrap();
        assert_eq!(lex_min_word_of_length(&even, 4).unwrap(), "aaaa");
        assert!(lex_min_word_of_length(&even, 3).is_none());
    }
}
