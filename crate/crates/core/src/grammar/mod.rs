// SPDX-License-Identifier: Apache-2.0

//! Context-free grammars in Chomsky normal form, membership, conversions to
//! and from pushdown automata, and compact decompositions of derivations.

mod cnf;
mod convert;
mod cyk;
mod decompose;

use std::collections::BTreeSet;
use std::fmt;

pub use cnf::cfg_to_cnf;
pub use convert::{cfg_to_pda, pda_to_cfg};
pub use cyk::{cyk_membership, DerivationTree, TreeNode};
pub use decompose::{compact_decomposition, pump, CompactDecomposition};

use crate::error::{Error, Result};

/// Right-hand-side symbol of an unrestricted production.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Terminal(char),
    Nonterminal(usize),
}

/// A context-free grammar with arbitrary finite right-hand sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralCfg {
    pub alphabet: Vec<char>,
    pub nonterminals: Vec<String>,
    pub start: usize,
    pub productions: Vec<(usize, Vec<Symbol>)>,
}

impl GeneralCfg {
    pub fn new(
        alphabet: impl IntoIterator<Item = char>,
        nonterminals: Vec<String>,
        start: usize,
        productions: Vec<(usize, Vec<Symbol>)>,
    ) -> Result<Self> {
        let alphabet: Vec<char> = alphabet.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let n = nonterminals.len();
        if start >= n {
            return Err(Error::InvalidGrammar(format!("start symbol {start} out of range")));
        }
        for (head, rhs) in &productions {
            if *head >= n {
                return Err(Error::InvalidGrammar(format!("nonterminal {head} out of range")));
            }
            for sym in rhs {
                match *sym {
                    Symbol::Terminal(a) if alphabet.binary_search(&a).is_err() => {
                        return Err(Error::UnknownLetter(a))
                    }
                    Symbol::Nonterminal(v) if v >= n => {
                        return Err(Error::InvalidGrammar(format!("nonterminal {v} out of range")))
                    }
                    _ => {}
                }
            }
        }
        Ok(GeneralCfg { alphabet, nonterminals, start, productions })
    }
}

/// A production in Chomsky normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Production {
    /// `head → left right`
    Binary { head: usize, left: usize, right: usize },
    /// `head → letter`
    Terminal { head: usize, letter: char },
    /// `start → ε`
    Empty,
}

impl Production {
    pub fn head(&self, start: usize) -> usize {
        match *self {
            Production::Binary { head, .. } | Production::Terminal { head, .. } => head,
            Production::Empty => start,
        }
    }
}

/// A context-free grammar in Chomsky normal form.
///
/// `start → ε` is the only ε-production allowed, and when it is present the
/// start symbol does not occur on any right-hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cfg {
    alphabet: Vec<char>,
    nonterminals: Vec<String>,
    start: usize,
    productions: Vec<Production>,
}

impl Cfg {
    pub fn new(
        alphabet: impl IntoIterator<Item = char>,
        nonterminals: Vec<String>,
        start: usize,
        productions: Vec<Production>,
    ) -> Result<Self> {
        let alphabet: Vec<char> = alphabet.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let n = nonterminals.len();
        let check = |v: usize| {
            if v < n {
                Ok(())
            } else {
                Err(Error::InvalidGrammar(format!("nonterminal {v} out of range")))
            }
        };
        check(start)?;
        let mut has_empty = false;
        let mut start_on_rhs = false;
        for p in &productions {
            match *p {
                Production::Binary { head, left, right } => {
                    check(head)?;
                    check(left)?;
                    check(right)?;
                    start_on_rhs |= left == start || right == start;
                }
                Production::Terminal { head, letter } => {
                    check(head)?;
                    if alphabet.binary_search(&letter).is_err() {
                        return Err(Error::UnknownLetter(letter));
                    }
                }
                Production::Empty => has_empty = true,
            }
        }
        if has_empty && start_on_rhs {
            return Err(Error::InvalidGrammar(
                "the start symbol has an ε-production and occurs on a right-hand side".into(),
            ));
        }
        let mut productions = productions;
        let mut seen = std::collections::HashSet::new();
        productions.retain(|p| seen.insert(*p));
        Ok(Cfg { alphabet, nonterminals, start, productions })
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn nonterminals(&self) -> &[String] {
        &self.nonterminals
    }

    /// Number of nonterminals, `T`.
    pub fn num_nonterminals(&self) -> usize {
        self.nonterminals.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    pub fn generates_empty(&self) -> bool {
        self.productions.contains(&Production::Empty)
    }

    pub fn to_general(&self) -> GeneralCfg {
        let productions = self
            .productions
            .iter()
            .map(|p| match *p {
                Production::Binary { head, left, right } => {
                    (head, vec![Symbol::Nonterminal(left), Symbol::Nonterminal(right)])
                }
                Production::Terminal { head, letter } => (head, vec![Symbol::Terminal(letter)]),
                Production::Empty => (self.start, Vec::new()),
            })
            .collect();
        GeneralCfg {
            alphabet: self.alphabet.clone(),
            nonterminals: self.nonterminals.clone(),
            start: self.start,
            productions,
        }
    }

    /// Words of the language up to `max_len`, in length-lexicographic order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Vec<char>> {
        crate::oracle::all_words(&self.alphabet, max_len)
            .filter(|w| cyk_membership(self, w).is_some())
            .collect()
    }
}

impl fmt::Display for Cfg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |v: usize| &self.nonterminals[v];
        for p in &self.productions {
            match *p {
                Production::Binary { head, left, right } => {
                    writeln!(f, "{} -> {} {}", name(head), name(left), name(right))?
                }
                Production::Terminal { head, letter } => writeln!(f, "{} -> {}", name(head), letter)?,
                Production::Empty => writeln!(f, "{} -> eps", name(self.start))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cnf_rejects_start_on_rhs_with_epsilon() {
        let r = Cfg::new(
            ['a'],
            vec!["S".into(), "A".into()],
            0,
            vec![
                Production::Empty,
                Production::Binary { head: 0, left: 1, right: 0 },
                Production::Terminal { head: 1, letter: 'a' },
            ],
        );
        assert!(matches!(r, Err(Error::InvalidGrammar(_))));
    }

    #[test]
    fn cnf_rejects_unknown_letter() {
        let r = Cfg::new(['a'], vec!["S".into()], 0, vec![Production::Terminal { head: 0, letter: 'b' }]);
        assert_eq!(r, Err(Error::UnknownLetter('b')));
    }
}
