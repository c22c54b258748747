// SPDX-License-Identifier: Apache-2.0

//! Command-line front end for `pdedit`.
//!
//! [`run_command`] parses arguments, runs one command and returns the exit
//! status with everything that would be printed, so tests can drive it
//! without a process.

pub mod format;
mod report;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use pdedit::automata::is_universal;
use pdedit::distance::{edit_distance_words, nested_reach_empty, word_to_nfa_distance};
use pdedit::fed::{
    bounded_distance, edit_distance_cfg, edit_distance_with, fed_bound, fed_decide_cfg, fed_decide_with,
    BoundReport, BoundedDistance, Decision, FedAnalysis, FedOptions, HatClosure,
};
use pdedit::grammar::{cfg_to_cnf, cfg_to_pda, compact_decomposition, pda_to_cfg, CompactDecomposition};
use pdedit::oracle::{oracle_sup_distance, oracle_ted, oracle_word_to_language, OracleBudget, OracleTed};
use pdedit::ted::{ted_decide_with, TedOptions};
use pdedit::{Cfg, Distance, Error, Nfa, Pda, Word};
use serde_json::{json, Map, Value};

use crate::format::{parse, serialize, writable_cfg, Body, Document, Kind, ParseError};
pub use crate::report::render_text;

/// Environment variable holding the default oracle source-length budget.
pub const ORACLE_BUDGET_ENV: &str = "PDEDIT_ORACLE_BUDGET";

/// Exit statuses.
pub mod status {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    /// Usage, parse and validation errors.
    pub const INVALID: i32 = 2;
    pub const PRECONDITION: i32 = 3;
    pub const BUDGET: i32 = 4;
    pub const INTERNAL: i32 = 70;
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "pdedit", version, about = "Edit distance from pushdown languages to regular languages")]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Pair {
    /// Source: a pda, cfg, nfa or dfa document.
    #[arg(long)]
    pda: PathBuf,
    /// Target: an nfa or dfa document.
    #[arg(long)]
    nfa: PathBuf,
}

#[derive(clap::Args, Debug)]
struct Search {
    /// Largest number of impact states per threshold check.
    #[arg(long)]
    max_states: Option<usize>,
    /// Skip the inclusion check, witness search and small thresholds.
    #[arg(long)]
    no_shortcuts: bool,
    /// Warn when the bound B exceeds this value.
    #[arg(long, default_value = "1000000")]
    bound_budget: BigUint,
    /// When B exceeds the bound budget, only probe thresholds up to --t-max.
    #[arg(long)]
    best_effort: bool,
    #[arg(long, default_value_t = 64)]
    t_max: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Edit distance between two words.
    EdWords { w1: String, w2: String },
    /// Edit distance from a word to the language of an automaton.
    EdWordNfa { word: String, file: PathBuf },
    /// Decide ed(L(source), L(target)) <= threshold.
    Ted {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        threshold: BigUint,
        #[arg(long)]
        max_states: Option<usize>,
    },
    /// Decide whether ed(L(source), L(target)) is finite.
    Fed {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        search: Search,
    },
    /// Compute ed(L(source), L(target)).
    Distance {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        search: Search,
    },
    /// Decide L(source) ⊆ L(target).
    Inclusion {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        max_states: Option<usize>,
    },
    /// Compact decomposition of a derivation of a word.
    Decompose {
        #[arg(long)]
        cfg: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long)]
        pump: Option<usize>,
    },
    /// The #-closure {#w1#...#wk# | wi in L} of an automaton.
    Hat {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        marker: char,
    },
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
        /// Longest source word enumerated (default from PDEDIT_ORACLE_BUDGET, else 8).
        #[arg(long, global = true)]
        budget: Option<usize>,
    },
    /// Convert between document kinds.
    Convert {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: Target,
    },
    /// Parse and validate a document.
    Validate { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Word-to-language distance by enumerating target words.
    WordNfa { word: String, file: PathBuf },
    /// Largest word-to-language distance over short source words.
    Sup {
        #[command(flatten)]
        pair: Pair,
    },
    /// Look for a short source word farther than the threshold.
    Ted {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        threshold: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Cfg,
    Pda,
    Cnf,
}

/// Command failure with its exit status.
#[derive(Debug)]
struct Failure {
    status: i32,
    message: String,
}

impl Failure {
    fn new(status: i32, message: impl Into<String>) -> Self {
        Failure { status, message: message.into() }
    }

    fn parse(path: &Path, e: ParseError) -> Self {
        Failure::new(status::INVALID, format!("{}:{e}", path.display()))
    }

    fn precondition(message: impl Into<String>) -> Self {
        Failure::new(status::PRECONDITION, message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Precondition(_) => status::PRECONDITION,
            Error::BudgetExceeded(_) => status::BUDGET,
            _ => status::INVALID,
        };
        Failure::new(status, e.to_string())
    }
}

type Run<T> = Result<T, Failure>;

/// What a command produced.
enum Output {
    Report(Map<String, Value>),
    Document(Box<Document>),
}

/// Runs one command line, `args` including the program name.
pub fn run_command<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let status = if e.use_stderr() { status::INVALID } else { status::OK };
            return if status == status::OK {
                Outcome { status, stdout: text, stderr: String::new() }
            } else {
                Outcome { status, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut warnings = Vec::new();
    let start = Instant::now();
    let result = dispatch(cli.command, &mut warnings);
    let mut stderr: String = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
    match result {
        Ok(Output::Report(mut report)) => {
            let stats = report.entry("stats").or_insert_with(|| json!({}));
            if let Value::Object(stats) = stats {
                stats.insert("elapsed-ms".into(), json!(start.elapsed().as_millis() as u64));
            }
            let stdout = if cli.json { report::render_json(&report) } else { render_text(&report) };
            Outcome { status: status::OK, stdout, stderr }
        }
        Ok(Output::Document(doc)) => {
            let text = serialize(&doc);
            let stdout = if cli.json {
                let mut report = Map::new();
                report.insert("document".into(), json!(text));
                report.insert("kind".into(), json!(doc.kind.as_str()));
                report::render_json(&report)
            } else {
                text
            };
            Outcome { status: status::OK, stdout, stderr }
        }
        Err(f) => {
            stderr.push_str(&format!("error: {}\n", f.message));
            Outcome { status: f.status, stdout: String::new(), stderr }
        }
    }
}

fn load(path: &Path) -> Run<Document> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(status::IO, format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::parse(path, e))
}

/// A source language with the grammar its bound is computed from.
struct Source {
    doc: Document,
    pda: Pda,
    /// Present for grammar documents, whose own nonterminal count is `T`.
    cfg: Option<Cfg>,
}

fn load_source(path: &Path) -> Run<Source> {
    let doc = load(path)?;
    let (pda, cfg) = match &doc.body {
        Body::Pda(p) => (p.clone(), None),
        Body::Nfa(n) => (Pda::from_nfa(n), None),
        Body::Cfg(g) => {
            let cnf = cfg_to_cnf(g);
            (cfg_to_pda(&cnf), Some(cnf))
        }
    };
    Ok(Source { doc, pda, cfg })
}

fn load_target(path: &Path) -> Run<(Document, Nfa)> {
    let doc = load(path)?;
    match &doc.body {
        Body::Nfa(n) => {
            let n = n.clone();
            Ok((doc, n))
        }
        _ => Err(Failure::precondition(format!(
            "{}: the target must be an nfa or dfa document, found {}",
            path.display(),
            doc.kind.as_str()
        ))),
    }
}

/// Source and target over the union of their alphabets.
fn load_pair(pair: &Pair) -> Run<(Source, Document, Nfa)> {
    let mut source = load_source(&pair.pda)?;
    let (target_doc, nfa) = load_target(&pair.nfa)?;
    let nfa = nfa.with_alphabet(source.pda.alphabet().iter().copied())?;
    source.pda = source.pda.with_alphabet(nfa.alphabet().iter().copied())?;
    if let Some(g) = &source.cfg {
        let mut general = g.to_general();
        general.alphabet = source.pda.alphabet().to_vec();
        source.cfg = Some(cfg_to_cnf(&general));
    }
    Ok((source, target_doc, nfa))
}

/// Letters of a word argument: one per character, or whitespace-separated
/// tokens resolved through the document's symbol table. `ε` is the empty
/// word.
fn read_word(text: &str, doc: &Document) -> Run<Word> {
    if text == "ε" {
        return Ok(Vec::new());
    }
    if text.contains(char::is_whitespace) {
        return text
            .split_whitespace()
            .map(|t| match doc.symbols.get(t) {
                Some(&c) => Ok(c),
                None => {
                    let mut chars = t.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => Ok(c),
                        _ => Err(Failure::new(status::INVALID, format!("unknown letter {t:?} in word"))),
                    }
                }
            })
            .collect();
    }
    Ok(text.chars().collect())
}

fn show_word(w: &[char], doc: &Document) -> String {
    if w.is_empty() {
        return "ε".into();
    }
    let names: BTreeMap<char, &str> = doc.symbols.iter().map(|(n, &c)| (c, n.as_str())).collect();
    if names.is_empty() {
        return w.iter().collect();
    }
    w.iter().map(|c| names.get(c).map_or_else(|| c.to_string(), |n| n.to_string())).collect::<Vec<_>>().join(" ")
}

fn distance_value(d: Distance) -> Value {
    match d {
        Distance::Finite(v) => json!(v),
        Distance::Infinite => json!("∞"),
    }
}

fn big(v: &BigUint) -> Value {
    use num_traits::ToPrimitive;
    v.to_u64().map_or_else(|| json!(v.to_string()), |x| json!(x))
}

fn bound_value(b: &BoundReport) -> Value {
    json!({ "t": b.t, "n": b.n, "b": big(&b.b), "adjustment": b.adjustment })
}

fn decomposition_value(d: &CompactDecomposition, doc: &Document) -> Value {
    let words = |ws: &[Vec<char>]| ws.iter().map(|w| show_word(w, doc)).collect::<Vec<_>>();
    json!({
        "word": show_word(&d.word, doc),
        "statics": words(&d.statics),
        "pumps": words(&d.pumps),
        "k": d.k(),
    })
}

fn internal(what: &str) -> Failure {
    Failure::new(status::INTERNAL, format!("internal error: {what} failed revalidation"))
}

/// Rechecks a counterexample to `ed ≤ t` before it is printed.
fn check_counterexample(w: &[char], pda: &Pda, nfa: &Nfa, t: &BigUint) -> Run<()> {
    let far = match word_to_nfa_distance(w, nfa) {
        Distance::Infinite => true,
        Distance::Finite(d) => BigUint::from(d) > *t,
    };
    if pda.accepts(w).unwrap_or(false) && far {
        Ok(())
    } else {
        Err(internal("counterexample"))
    }
}

/// Rechecks an infinity certificate before it is printed.
fn check_witness(d: &CompactDecomposition, pda: &Pda, nfa: &Nfa) -> Run<()> {
    if d.is_consistent() && pda.accepts(&d.word).unwrap_or(false) && nested_reach_empty(&d.pumps, &nfa.prefix_closure())
    {
        Ok(())
    } else {
        Err(internal("infinity witness"))
    }
}

fn fed_options(search: &Search) -> FedOptions {
    FedOptions { max_states: search.max_states, shortcuts: !search.no_shortcuts, ..FedOptions::default() }
}

fn source_bound(source: &Source, nfa: &Nfa) -> Run<Option<BoundReport>> {
    let safety = nfa.prefix_closure();
    if safety.num_states() == 0 {
        return Ok(None);
    }
    let g = source.cfg.clone().unwrap_or_else(|| pda_to_cfg(&source.pda));
    Ok(Some(fed_bound(&g, &safety)?))
}

/// Warns about a large `B`; true when the best-effort route should be used.
fn over_budget(search: &Search, bound: &Option<BoundReport>, warnings: &mut Vec<String>) -> bool {
    match bound {
        Some(b) if b.b > search.bound_budget => {
            warnings.push(format!(
                "B = {} exceeds the bound budget {}; {}",
                b.b,
                search.bound_budget,
                if search.best_effort {
                    format!("probing thresholds up to {} only", search.t_max)
                } else {
                    "the threshold check at B may not finish (see --best-effort)".to_string()
                }
            ));
            search.best_effort
        }
        _ => false,
    }
}

fn analysis_fields(report: &mut Map<String, Value>, a: &FedAnalysis, source: &Source, nfa: &Nfa) -> Run<()> {
    let decision = match a.decision {
        Decision::EmptySource => "empty-source",
        Decision::EmptyTarget => "empty-target",
        Decision::Inclusion => "inclusion",
        Decision::Witness => "witness",
        Decision::SmallThreshold => "small-threshold",
        Decision::Bound => "bound",
    };
    report.insert("decision".into(), json!(decision));
    if let Some(b) = &a.bound {
        report.insert("bound".into(), bound_value(b));
    }
    if let Some(d) = &a.witness {
        if a.decision != Decision::EmptyTarget {
            check_witness(d, &source.pda, nfa)?;
        }
        report.insert("witness".into(), decomposition_value(d, &source.doc));
    }
    if let Some(w) = &a.counterexample {
        if !source.pda.accepts(w).unwrap_or(false) {
            return Err(internal("counterexample"));
        }
        report.insert("counterexample".into(), json!(show_word(w, &source.doc)));
    }
    report.insert("stats".into(), json!({ "explored-states": a.explored_states }));
    Ok(())
}

fn best_effort_report(source: &Source, nfa: &Nfa, search: &Search, bound: &Option<BoundReport>, distance: bool) -> Run<Map<String, Value>> {
    let mut report = Map::new();
    report.insert("mode".into(), json!("best-effort"));
    if let Some(b) = bound {
        report.insert("bound".into(), bound_value(b));
    }
    match bounded_distance(&source.pda, nfa, search.t_max, &fed_options(search))? {
        BoundedDistance::Exact(d) => {
            report.insert("verdict".into(), json!("finite"));
            if distance {
                report.insert("value".into(), json!(d));
            }
        }
        BoundedDistance::Infinite(w) => {
            report.insert("verdict".into(), json!("infinite"));
            if distance {
                report.insert("value".into(), json!("∞"));
            }
            if let Some(d) = w {
                check_witness(&d, &source.pda, nfa)?;
                report.insert("witness".into(), decomposition_value(&d, &source.doc));
            }
        }
        BoundedDistance::Above(t) => {
            report.insert("verdict".into(), json!("unknown"));
            report.insert("value".into(), json!(format!("> {t} or ∞")));
        }
    }
    Ok(report)
}

fn dispatch(command: Command, warnings: &mut Vec<String>) -> Run<Output> {
    let mut report = Map::new();
    match command {
        Command::EdWords { w1, w2 } => {
            let empty = Document::from_nfa(Nfa::universal([]));
            let (u, v) = (read_word(&w1, &empty)?, read_word(&w2, &empty)?);
            report.insert("verdict".into(), json!("finite"));
            report.insert("value".into(), json!(edit_distance_words(&u, &v)));
        }
        Command::EdWordNfa { word, file } => {
            let (doc, nfa) = load_target(&file)?;
            let w = read_word(&word, &doc)?;
            let d = word_to_nfa_distance(&w, &nfa.with_alphabet(w.iter().copied())?);
            report.insert("verdict".into(), json!(if d.is_finite() { "finite" } else { "infinite" }));
            report.insert("value".into(), distance_value(d));
        }
        Command::Ted { pair, threshold, max_states } => {
            let (source, _, nfa) = load_pair(&pair)?;
            let out = ted_decide_with(&source.pda, &nfa, &threshold, TedOptions { max_states, first_counterexample: false })?;
            report.insert("verdict".into(), json!(out.holds));
            report.insert("threshold".into(), big(&threshold));
            if let Some(w) = &out.counterexample {
                check_counterexample(w, &source.pda, &nfa, &threshold)?;
                report.insert("witness".into(), json!(show_word(w, &source.doc)));
                report.insert("witness-distance".into(), distance_value(word_to_nfa_distance(w, &nfa)));
            }
            report.insert(
                "stats".into(),
                json!({ "explored-states": out.stats.impact_states, "state-bound": big(&out.stats.state_bound) }),
            );
        }
        Command::Fed { pair, search } => {
            let (source, _, nfa) = load_pair(&pair)?;
            let bound = source_bound(&source, &nfa)?;
            if over_budget(&search, &bound, warnings) {
                return Ok(Output::Report(best_effort_report(&source, &nfa, &search, &bound, false)?));
            }
            let options = fed_options(&search);
            let a = match &source.cfg {
                Some(g) => fed_decide_cfg(g, &nfa, &options)?,
                None => fed_decide_with(&source.pda, &nfa, &options)?,
            };
            report.insert("verdict".into(), json!(if a.finite { "finite" } else { "infinite" }));
            analysis_fields(&mut report, &a, &source, &nfa)?;
        }
        Command::Distance { pair, search } => {
            let (source, _, nfa) = load_pair(&pair)?;
            let bound = source_bound(&source, &nfa)?;
            if over_budget(&search, &bound, warnings) {
                return Ok(Output::Report(best_effort_report(&source, &nfa, &search, &bound, true)?));
            }
            let options = fed_options(&search);
            let r = match &source.cfg {
                Some(g) => edit_distance_cfg(g, &nfa, &options)?,
                None => edit_distance_with(&source.pda, &nfa, &options)?,
            };
            let d = r.distance();
            report.insert("verdict".into(), json!(if d.is_finite() { "finite" } else { "infinite" }));
            report.insert("value".into(), distance_value(d));
            analysis_fields(&mut report, &r.analysis, &source, &nfa)?;
            if let Value::Object(stats) = report.entry("stats").or_insert_with(|| json!({})) {
                stats.insert("probes".into(), json!(r.probes.len()));
            }
        }
        Command::Inclusion { pair, max_states } => {
            let (source, _, nfa) = load_pair(&pair)?;
            let zero = BigUint::from(0u32);
            let out = ted_decide_with(&source.pda, &nfa, &zero, TedOptions { max_states, first_counterexample: false })?;
            report.insert("verdict".into(), json!(out.holds));
            if let Some(w) = &out.counterexample {
                check_counterexample(w, &source.pda, &nfa, &zero)?;
                report.insert("witness".into(), json!(show_word(w, &source.doc)));
            }
            report.insert("stats".into(), json!({ "explored-states": out.stats.impact_states }));
        }
        Command::Decompose { cfg, word, pump } => {
            let source = load_source(&cfg)?;
            let g = source.cfg.clone().unwrap_or_else(|| pda_to_cfg(&source.pda));
            let w = read_word(&word, &source.doc)?;
            let d = compact_decomposition(&g, &w)?;
            if !d.is_consistent() {
                return Err(internal("decomposition"));
            }
            report.insert("verdict".into(), json!("ok"));
            report.insert("value".into(), decomposition_value(&d, &source.doc));
            report.insert("nonterminals".into(), json!(g.num_nonterminals()));
            report.insert("static-length".into(), json!(d.static_len()));
            report.insert("within-bounds".into(), json!(d.satisfies_bounds()));
            if let Some(ell) = pump {
                report.insert("pumped".into(), json!(show_word(&d.pumped(ell), &source.doc)));
            }
        }
        Command::Hat { input, marker } => {
            let doc = load(&input)?;
            return match &doc.body {
                Body::Nfa(n) => Ok(Output::Document(Box::new(doc.with_body(Kind::Nfa, Body::Nfa(n.hat_closure(marker)?))))),
                Body::Pda(p) => Ok(Output::Document(Box::new(doc.with_body(Kind::Pda, Body::Pda(p.hat_closure(marker)?))))),
                Body::Cfg(g) => {
                    let p = cfg_to_pda(&cfg_to_cnf(g));
                    Ok(Output::Document(Box::new(doc.with_body(Kind::Pda, Body::Pda(p.hat_closure(marker)?)))))
                }
            };
        }
        Command::Oracle { command, budget } => {
            let source_len = match budget {
                Some(b) => b,
                None => match std::env::var(ORACLE_BUDGET_ENV) {
                    Ok(v) => v.trim().parse().map_err(|_| {
                        Failure::new(status::INVALID, format!("{ORACLE_BUDGET_ENV}={v:?} is not a number"))
                    })?,
                    Err(_) => OracleBudget::default().source_len,
                },
            };
            let budget = OracleBudget::new(source_len, OracleBudget::default().target_len, OracleBudget::default().config_cap)?;
            report.insert("budget".into(), json!(source_len));
            match command {
                OracleCommand::WordNfa { word, file } => {
                    let (doc, nfa) = load_target(&file)?;
                    let w = read_word(&word, &doc)?;
                    let d = oracle_word_to_language(&w, &nfa.with_alphabet(w.iter().copied())?, &budget);
                    report.insert("verdict".into(), json!(if d.is_finite() { "finite" } else { "infinite" }));
                    report.insert("value".into(), distance_value(d));
                }
                OracleCommand::Sup { pair } => {
                    let (source, _, nfa) = load_pair(&pair)?;
                    let d = oracle_sup_distance(&source.pda, &nfa, &budget)?;
                    report.insert("verdict".into(), json!("lower-bound"));
                    report.insert("value".into(), distance_value(d));
                }
                OracleCommand::Ted { pair, threshold } => {
                    let (source, _, nfa) = load_pair(&pair)?;
                    match oracle_ted(&source.pda, &nfa, threshold, &budget)? {
                        OracleTed::ViolationFound(w) => {
                            check_counterexample(&w, &source.pda, &nfa, &BigUint::from(threshold))?;
                            report.insert("verdict".into(), json!("violation-found"));
                            report.insert("witness".into(), json!(show_word(&w, &source.doc)));
                        }
                        OracleTed::NoViolationWithinBudget => {
                            report.insert("verdict".into(), json!("no-violation-within-budget"));
                        }
                    }
                    report.insert("threshold".into(), json!(threshold));
                }
            }
        }
        Command::Convert { from, to } => {
            let doc = load(&from)?;
            let out = match (&doc.body, to) {
                (Body::Cfg(g), Target::Pda) => Body::Pda(cfg_to_pda(&cfg_to_cnf(g))),
                (Body::Cfg(g), Target::Cnf) => Body::Cfg(cfg_to_cnf(g).to_general()),
                (Body::Cfg(g), Target::Cfg) => Body::Cfg(g.clone()),
                (Body::Pda(p), Target::Pda) => Body::Pda(p.clone()),
                (Body::Pda(p), Target::Cfg | Target::Cnf) => Body::Cfg(pda_to_cfg(p).to_general()),
                (Body::Nfa(n), Target::Pda) => Body::Pda(Pda::from_nfa(n)),
                (Body::Nfa(n), Target::Cfg | Target::Cnf) => Body::Cfg(pda_to_cfg(&Pda::from_nfa(n)).to_general()),
            };
            let (kind, out) = match out {
                Body::Cfg(g) => (Kind::Cfg, Body::Cfg(writable_cfg(&g, &doc.symbols))),
                Body::Pda(p) => (Kind::Pda, Body::Pda(p)),
                Body::Nfa(n) => (Kind::Nfa, Body::Nfa(n)),
            };
            return Ok(Output::Document(Box::new(doc.with_body(kind, out))));
        }
        Command::Validate { file } => {
            let doc = load(&file)?;
            report.insert("verdict".into(), json!("valid"));
            report.insert("kind".into(), json!(doc.kind.as_str()));
            if let Some(name) = &doc.name {
                report.insert("name".into(), json!(name));
            }
            match &doc.body {
                Body::Nfa(n) => {
                    report.insert("states".into(), json!(n.num_states()));
                    report.insert("transitions".into(), json!(n.transitions().len()));
                    report.insert("deterministic".into(), json!(n.is_deterministic()));
                    report.insert("empty".into(), json!(n.is_empty()));
                    report.insert("universal".into(), json!(is_universal(n)));
                    let pref = n.prefix_closure();
                    report.insert("prefix-closure-universal".into(), json!(pref.num_states() > 0 && is_universal(&pref)));
                }
                Body::Pda(p) => {
                    report.insert("states".into(), json!(p.num_states()));
                    report.insert("transitions".into(), json!(p.transitions().len()));
                    report.insert("deterministic".into(), json!(p.is_deterministic()));
                    report.insert("empty".into(), json!(pdedit::automata::pda_emptiness(p).is_empty));
                }
                Body::Cfg(g) => {
                    let cnf = cfg_to_cnf(g);
                    report.insert("productions".into(), json!(g.productions.len()));
                    report.insert("cnf-nonterminals".into(), json!(cnf.num_nonterminals()));
                    report.insert("empty".into(), json!(pdedit::automata::pda_emptiness(&cfg_to_pda(&cnf)).is_empty));
                }
            }
        }
    }
    Ok(Output::Report(report))
}
