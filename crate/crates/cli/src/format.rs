// SPDX-License-Identifier: Apache-2.0

//! Line-oriented document format for automata and grammars.
//!
//! ```text
//! # a*b over {a, b}
//! kind: nfa
//! alphabet: a b
//! states: 2
//! initial: 0
//! final: 1
//! trans:
//! 0 a 0
//! 0 b 1
//! ```
//!
//! A line whose first non-blank character is `#` is a comment. Header lines
//! are `key: values`; `symbols:`, `trans:` and `prod:` open a block that
//! runs until the next header. PDA transitions read `q a top q' push`, with
//! `⊥` (or `_`) for the empty-stack test and `eps` (or `ε`) for an empty
//! push. Grammar productions read `V -> X Y …`, with `|` separating
//! alternatives and `eps` for the empty body. Letters are single characters;
//! the `symbols:` block maps longer tokens (`NAME c`) to letters.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};

use pdedit::grammar::{GeneralCfg, Symbol};
use pdedit::{Nfa, Pda, PdaTransition};
use thiserror::Error;

/// Parse or validation failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Nfa,
    Dfa,
    Pda,
    Cfg,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Nfa => "nfa",
            Kind::Dfa => "dfa",
            Kind::Pda => "pda",
            Kind::Cfg => "cfg",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    /// Also used for `kind: dfa`, checked deterministic at parse time.
    Nfa(Nfa),
    Pda(Pda),
    Cfg(GeneralCfg),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub kind: Kind,
    pub name: Option<String>,
    /// Multi-character letter names, `name → letter`.
    pub symbols: BTreeMap<String, char>,
    pub body: Body,
}

impl Document {
    pub fn new(kind: Kind, body: Body) -> Self {
        Document { kind, name: None, symbols: BTreeMap::new(), body }
    }

    pub fn from_nfa(nfa: Nfa) -> Self {
        Document::new(Kind::Nfa, Body::Nfa(nfa))
    }

    pub fn from_pda(pda: Pda) -> Self {
        Document::new(Kind::Pda, Body::Pda(pda))
    }

    pub fn from_cfg(cfg: GeneralCfg) -> Self {
        Document::new(Kind::Cfg, Body::Cfg(cfg))
    }

    /// Same symbol table and name as `self`, new body.
    pub fn with_body(&self, kind: Kind, body: Body) -> Self {
        Document { kind, name: self.name.clone(), symbols: self.symbols.clone(), body }
    }
}

const BLOCKS: [&str; 3] = ["symbols", "trans", "prod"];
const KEYS: [&str; 11] =
    ["kind", "name", "alphabet", "stack", "states", "initial", "final", "start", "symbols", "trans", "prod"];

#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }
}

fn tokens(text: &str, line: usize, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, (byte, c)) in text.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((i, byte)),
            (true, Some((col, b))) => {
                out.push(Token { text: &text[b..byte], line, column: offset + col + 1 });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((col, b)) = start {
        out.push(Token { text: &text[b..], line, column: offset + col + 1 });
    }
    out
}

struct Section<'a> {
    key: Token<'a>,
    values: Vec<Token<'a>>,
    rest: &'a str,
    lines: Vec<Vec<Token<'a>>>,
}

fn sections(input: &str) -> Result<Vec<Section<'_>>, ParseError> {
    let mut out: Vec<Section> = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = raw[..raw.len() - trimmed.len()].chars().count();
        if let Some((key, rest)) = trimmed.split_once(':') {
            if KEYS.contains(&key) {
                let offset = indent + key.chars().count() + 1;
                out.push(Section {
                    key: Token { text: key, line, column: indent + 1 },
                    values: tokens(rest, line, offset),
                    rest: rest.trim(),
                    lines: Vec::new(),
                });
                continue;
            }
        }
        match out.last_mut() {
            Some(s) if BLOCKS.contains(&s.key.text) => s.lines.push(tokens(raw, line, 0)),
            _ => {
                return Err(ParseError { line, column: indent + 1, message: "expected a `key:` header".into() })
            }
        }
    }
    Ok(out)
}

struct Letters {
    symbols: BTreeMap<String, char>,
    alphabet: Vec<char>,
}

impl Letters {
    fn letter(&self, t: &Token) -> Result<char, ParseError> {
        let c = match self.symbols.get(t.text) {
            Some(&c) => c,
            None => single_char(t)?,
        };
        if self.alphabet.contains(&c) {
            Ok(c)
        } else {
            Err(t.error(format!("letter {:?} is not in the alphabet", t.text)))
        }
    }
}

fn single_char(t: &Token) -> Result<char, ParseError> {
    let mut chars = t.text.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(t.error(format!("{:?} is not a single character (declare it under `symbols:`)", t.text))),
    }
}

fn number(t: &Token) -> Result<usize, ParseError> {
    t.text.parse().map_err(|_| t.error(format!("expected a state number, found {:?}", t.text)))
}

fn state(t: &Token, count: usize) -> Result<usize, ParseError> {
    let s = number(t)?;
    if s < count {
        Ok(s)
    } else {
        Err(t.error(format!("state {s} is out of range (automaton has {count} states)")))
    }
}

const EMPTY: [&str; 2] = ["eps", "ε"];
const BOTTOMS: [&str; 2] = ["⊥", "_"];

/// Parses a document.
pub fn parse(input: &str) -> Result<Document, ParseError> {
    let sections = sections(input)?;
    let mut by_key: HashMap<&str, &Section> = HashMap::new();
    for s in &sections {
        if by_key.insert(s.key.text, s).is_some() {
            return Err(s.key.error(format!("duplicate `{}:` section", s.key.text)));
        }
        if !BLOCKS.contains(&s.key.text) && !s.lines.is_empty() {
            return Err(s.lines[0][0].error("unexpected line"));
        }
        if BLOCKS.contains(&s.key.text) && !s.values.is_empty() {
            return Err(s.values[0].error(format!("`{}:` takes its entries on the following lines", s.key.text)));
        }
    }
    let start_of_file = ParseError { line: 1, column: 1, message: "missing `kind:`".into() };
    let kind_section = by_key.get("kind").ok_or(start_of_file)?;
    let kind = match kind_section.values.as_slice() {
        [t] => match t.text {
            "nfa" => Kind::Nfa,
            "dfa" => Kind::Dfa,
            "pda" => Kind::Pda,
            "cfg" => Kind::Cfg,
            other => return Err(t.error(format!("unknown kind {other:?}"))),
        },
        _ => return Err(kind_section.key.error("`kind:` takes one of nfa, dfa, pda, cfg")),
    };
    let allowed: &[&str] = match kind {
        Kind::Nfa | Kind::Dfa => &["kind", "name", "symbols", "alphabet", "states", "initial", "final", "trans"],
        Kind::Pda => &["kind", "name", "symbols", "alphabet", "stack", "states", "initial", "final", "trans"],
        Kind::Cfg => &["kind", "name", "symbols", "alphabet", "start", "prod"],
    };
    for s in &sections {
        if !allowed.contains(&s.key.text) {
            return Err(s.key.error(format!("`{}:` is not allowed in a {} document", s.key.text, kind.as_str())));
        }
    }
    let name = by_key.get("name").map(|s| s.rest.to_string()).filter(|n| !n.is_empty());

    let mut symbols = BTreeMap::new();
    if let Some(s) = by_key.get("symbols") {
        for line in &s.lines {
            let [name, letter] = line.as_slice() else {
                return Err(line[0].error("expected `NAME c`"));
            };
            let c = single_char(letter)?;
            if symbols.values().any(|&d| d == c) {
                return Err(letter.error(format!("letter {c:?} already has a name")));
            }
            if symbols.insert(name.text.to_string(), c).is_some() {
                return Err(name.error(format!("symbol {:?} declared twice", name.text)));
            }
        }
    }
    let required = |key: &str| -> Result<&Section, ParseError> {
        by_key.get(key).copied().ok_or_else(|| kind_section.key.error(format!("missing `{key}:`")))
    };
    let mut alphabet = Vec::new();
    for t in &required("alphabet")?.values {
        let c = symbols.get(t.text).copied().map_or_else(|| single_char(t), Ok)?;
        if alphabet.contains(&c) {
            return Err(t.error(format!("letter {:?} listed twice", t.text)));
        }
        if EMPTY.contains(&t.text) || BOTTOMS.contains(&t.text) {
            return Err(t.error(format!("{:?} is reserved", t.text)));
        }
        alphabet.push(c);
    }
    let letters = Letters { symbols: symbols.clone(), alphabet: alphabet.clone() };

    let body = match kind {
        Kind::Nfa | Kind::Dfa | Kind::Pda => {
            let states_section = required("states")?;
            let count = match states_section.values.as_slice() {
                [t] => number(t)?,
                _ => return Err(states_section.key.error("`states:` takes the number of states")),
            };
            let list = |key: &str| -> Result<Vec<usize>, ParseError> {
                required(key)?.values.iter().map(|t| state(t, count)).collect()
            };
            let initials = list("initial")?;
            let finals = list("final")?;
            let trans = by_key.get("trans").map(|s| s.lines.as_slice()).unwrap_or_default();
            if kind == Kind::Pda {
                let mut stack = Vec::new();
                for t in by_key.get("stack").map(|s| s.values.as_slice()).unwrap_or_default() {
                    let g = single_char(t)?;
                    if BOTTOMS.contains(&t.text) || stack.contains(&g) {
                        return Err(t.error(format!("invalid or repeated stack symbol {:?}", t.text)));
                    }
                    stack.push(g);
                }
                let stack_symbol = |t: &Token, c: char| {
                    if stack.contains(&c) {
                        Ok(c)
                    } else {
                        Err(t.error(format!("stack symbol {c:?} is not in the stack alphabet")))
                    }
                };
                let mut transitions = Vec::new();
                for line in trans {
                    let [p, a, top, q, push] = line.as_slice() else {
                        return Err(line[0].error("expected `q a top q' push`"));
                    };
                    let top_symbol = if BOTTOMS.contains(&top.text) {
                        None
                    } else {
                        Some(stack_symbol(top, single_char(top)?)?)
                    };
                    let push_symbols = if EMPTY.contains(&push.text) {
                        Vec::new()
                    } else {
                        push.text.chars().map(|c| stack_symbol(push, c)).collect::<Result<_, _>>()?
                    };
                    transitions.push(PdaTransition {
                        from: state(p, count)?,
                        letter: letters.letter(a)?,
                        top: top_symbol,
                        to: state(q, count)?,
                        push: push_symbols,
                    });
                }
                let pda = Pda::new(alphabet, stack, count, initials, finals, transitions)
                    .map_err(|e| kind_section.key.error(e.to_string()))?;
                Body::Pda(pda)
            } else {
                let mut transitions = Vec::new();
                for line in trans {
                    let [p, a, q] = line.as_slice() else {
                        return Err(line[0].error("expected `q a q'`"));
                    };
                    transitions.push((state(p, count)?, letters.letter(a)?, state(q, count)?));
                }
                let nfa = Nfa::new(alphabet, count, initials, finals, transitions)
                    .map_err(|e| kind_section.key.error(e.to_string()))?;
                if kind == Kind::Dfa && !nfa.is_deterministic() {
                    return Err(kind_section.values[0].error("automaton is not deterministic"));
                }
                Body::Nfa(nfa)
            }
        }
        Kind::Cfg => Body::Cfg(parse_cfg(&by_key, &letters, kind_section)?),
    };
    Ok(Document { kind, name, symbols, body })
}

fn parse_cfg(by_key: &HashMap<&str, &Section>, letters: &Letters, kind: &Section) -> Result<GeneralCfg, ParseError> {
    let lines = by_key.get("prod").map(|s| s.lines.as_slice()).unwrap_or_default();
    let mut names: Vec<String> = Vec::new();
    for line in lines {
        match line.as_slice() {
            [head, arrow, ..] if arrow.text == "->" => {
                if !names.iter().any(|n| n == head.text) {
                    names.push(head.text.to_string());
                }
            }
            _ => return Err(line[0].error("expected `V -> body`")),
        }
    }
    let start = match by_key.get("start") {
        Some(s) => match s.values.as_slice() {
            [t] => match names.iter().position(|n| n == t.text) {
                Some(v) => v,
                None => {
                    names.push(t.text.to_string());
                    names.len() - 1
                }
            },
            _ => return Err(s.key.error("`start:` takes one nonterminal")),
        },
        None if names.is_empty() => return Err(kind.key.error("a grammar needs `start:` or a production")),
        None => 0,
    };
    for (v, name) in names.iter().enumerate() {
        let clash = letters.symbols.contains_key(name)
            || (name.chars().count() == 1 && letters.alphabet.contains(&name.chars().next().unwrap_or(' ')));
        if clash || EMPTY.contains(&name.as_str()) || name == "|" || name == "->" {
            let line = lines.iter().find(|l| l[0].text == name).map_or(kind.key, |l| l[0]);
            return Err(line.error(format!("nonterminal {name:?} clashes with a letter or keyword (#{v})")));
        }
    }
    let mut productions = Vec::new();
    for line in lines {
        let head = names.iter().position(|n| n == line[0].text).expect("collected above");
        for alternative in line[2..].split(|t| t.text == "|") {
            let body = match alternative {
                [t] if EMPTY.contains(&t.text) => Vec::new(),
                [] => return Err(line[1].error("empty alternative (write `eps`)")),
                tokens => tokens
                    .iter()
                    .map(|t| match names.iter().position(|n| n == t.text) {
                        Some(v) => Ok(Symbol::Nonterminal(v)),
                        None => letters.letter(t).map(Symbol::Terminal),
                    })
                    .collect::<Result<_, _>>()?,
            };
            productions.push((head, body));
        }
    }
    GeneralCfg::new(letters.alphabet.iter().copied(), names, start, productions)
        .map_err(|e| kind.key.error(e.to_string()))
}

/// Canonical rendering; [`parse`] reads it back to an equal document.
pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    let names: HashMap<char, &str> = doc.symbols.iter().map(|(n, &c)| (c, n.as_str())).collect();
    let letter = |c: char| names.get(&c).map_or_else(|| c.to_string(), |n| n.to_string());
    let join = |items: &mut dyn Iterator<Item = String>| items.map(|s| format!(" {s}")).collect::<String>();
    let _ = writeln!(out, "kind: {}", doc.kind.as_str());
    if let Some(name) = &doc.name {
        let _ = writeln!(out, "name: {name}");
    }
    if !doc.symbols.is_empty() {
        out.push_str("symbols:\n");
        for (name, c) in &doc.symbols {
            let _ = writeln!(out, "{name} {c}");
        }
    }
    match &doc.body {
        Body::Nfa(n) => {
            let _ = writeln!(out, "alphabet:{}", join(&mut n.alphabet().iter().map(|&c| letter(c))));
            let _ = writeln!(out, "states: {}", n.num_states());
            let _ = writeln!(out, "initial:{}", join(&mut n.initials().iter().map(usize::to_string)));
            let _ = writeln!(out, "final:{}", join(&mut n.finals().map(|s| s.to_string())));
            out.push_str("trans:\n");
            for &(p, a, q) in n.transitions() {
                let _ = writeln!(out, "{p} {} {q}", letter(a));
            }
        }
        Body::Pda(p) => {
            let _ = writeln!(out, "alphabet:{}", join(&mut p.alphabet().iter().map(|&c| letter(c))));
            let _ = writeln!(out, "stack:{}", join(&mut p.stack_alphabet().iter().map(char::to_string)));
            let _ = writeln!(out, "states: {}", p.num_states());
            let _ = writeln!(out, "initial:{}", join(&mut p.initials().iter().map(usize::to_string)));
            let _ = writeln!(out, "final:{}", join(&mut p.finals().map(|s| s.to_string())));
            out.push_str("trans:\n");
            for t in p.transitions() {
                let top = t.top.map_or_else(|| "⊥".to_string(), |g| g.to_string());
                let push = if t.push.is_empty() { "eps".to_string() } else { t.push.iter().collect() };
                let _ = writeln!(out, "{} {} {top} {} {push}", t.from, letter(t.letter), t.to);
            }
        }
        Body::Cfg(g) => {
            let _ = writeln!(out, "alphabet:{}", join(&mut g.alphabet.iter().map(|&c| letter(c))));
            let _ = writeln!(out, "start: {}", g.nonterminals[g.start]);
            out.push_str("prod:\n");
            for (head, body) in &g.productions {
                let rhs: Vec<String> = body
                    .iter()
                    .map(|s| match *s {
                        Symbol::Terminal(a) => letter(a),
                        Symbol::Nonterminal(v) => g.nonterminals[v].clone(),
                    })
                    .collect();
                let rhs = if rhs.is_empty() { "eps".to_string() } else { rhs.join(" ") };
                let _ = writeln!(out, "{} -> {rhs}", g.nonterminals[*head]);
            }
        }
    }
    out
}

/// Renames nonterminals that cannot be written in a document: names with
/// whitespace, keywords, or names that read as letters.
pub fn writable_cfg(g: &GeneralCfg, symbols: &BTreeMap<String, char>) -> GeneralCfg {
    let bad = |name: &str| {
        name.is_empty()
            || name.chars().any(char::is_whitespace)
            || name.starts_with('#')
            || EMPTY.contains(&name)
            || name == "|"
            || name == "->"
            || symbols.contains_key(name)
            || (name.chars().count() == 1 && g.alphabet.contains(&name.chars().next().unwrap_or(' ')))
            || KEYS.iter().any(|k| name.starts_with(&format!("{k}:")))
    };
    let mut names: Vec<String> = Vec::new();
    for (i, n) in g.nonterminals.iter().enumerate() {
        let mut candidate = if bad(n) { format!("N{i}") } else { n.clone() };
        while names.contains(&candidate) || bad(&candidate) {
            candidate.push('\'');
        }
        names.push(candidate);
    }
    GeneralCfg { nonterminals: names, ..g.clone() }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize(self))
    }
}
