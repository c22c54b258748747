// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeSet, HashMap, HashSet};

use super::Nfa;
use crate::error::{Error, Result};

/// Symbol used in documents and diagnostics for the empty-stack test.
pub const BOTTOM: char = '⊥';

/// A transition `(from, letter, top, to, push)`.
///
/// `top == None` means the transition fires only on the empty stack. Firing
/// removes `top` (if any) and appends `push`, so the last symbol of `push`
/// becomes the new top of the stack.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PdaTransition {
    pub from: usize,
    pub letter: char,
    pub top: Option<char>,
    pub to: usize,
    pub push: Vec<char>,
}

/// A configuration: control state and stack contents, top last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PdaConfiguration {
    pub state: usize,
    pub stack: Vec<char>,
}

/// Real-time pushdown automaton.
///
/// Every transition reads exactly one input letter. Runs start with an empty
/// stack; a word is accepted when a run ends in a final state with an empty
/// stack.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pda {
    alphabet: Vec<char>,
    stack_alphabet: Vec<char>,
    num_states: usize,
    initials: Vec<usize>,
    finals: Vec<bool>,
    transitions: Vec<PdaTransition>,
    by_source: HashMap<(usize, Option<char>), Vec<usize>>,
}

impl Pda {
    pub fn new(
        alphabet: impl IntoIterator<Item = char>,
        stack_alphabet: impl IntoIterator<Item = char>,
        num_states: usize,
        initials: impl IntoIterator<Item = usize>,
        finals: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = PdaTransition>,
    ) -> Result<Self> {
        let alphabet: Vec<char> = alphabet.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let stack_alphabet: Vec<char> =
            stack_alphabet.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if stack_alphabet.contains(&BOTTOM) {
            return Err(Error::ReservedSymbol(BOTTOM));
        }
        let check_state = |state: usize| {
            if state < num_states {
                Ok(state)
            } else {
                Err(Error::StateOutOfRange { state, count: num_states })
            }
        };
        let check_stack = |g: char| {
            if stack_alphabet.binary_search(&g).is_ok() {
                Ok(())
            } else {
                Err(Error::UnknownStackSymbol(g))
            }
        };
        let initials = initials
            .into_iter()
            .map(check_state)
            .collect::<Result<BTreeSet<_>>>()?
            .into_iter()
            .collect();
        let mut final_flags = vec![false; num_states];
        for f in finals {
            final_flags[check_state(f)?] = true;
        }
        let mut trans = BTreeSet::new();
        for t in transitions {
            check_state(t.from)?;
            check_state(t.to)?;
            if alphabet.binary_search(&t.letter).is_err() {
                return Err(Error::UnknownLetter(t.letter));
            }
            if let Some(g) = t.top {
                check_stack(g)?;
            }
            for &g in &t.push {
                check_stack(g)?;
            }
            trans.insert(t);
        }
        let transitions: Vec<PdaTransition> = trans.into_iter().collect();
        let mut by_source: HashMap<(usize, Option<char>), Vec<usize>> = HashMap::new();
        for (i, t) in transitions.iter().enumerate() {
            by_source.entry((t.from, t.top)).or_default().push(i);
        }
        Ok(Pda {
            alphabet,
            stack_alphabet,
            num_states,
            initials,
            finals: final_flags,
            transitions,
            by_source,
        })
    }

    /// The automaton read as a PDA that never touches its stack.
    pub fn from_nfa(nfa: &Nfa) -> Pda {
        let trans = nfa.transitions().iter().map(|&(p, a, q)| PdaTransition {
            from: p,
            letter: a,
            top: None,
            to: q,
            push: Vec::new(),
        });
        Pda::new(
            nfa.alphabet().iter().copied(),
            [],
            nfa.num_states(),
            nfa.initials().iter().copied(),
            nfa.finals(),
            trans,
        )
        .expect("an NFA is a valid stackless PDA")
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn has_letter(&self, a: char) -> bool {
        self.alphabet.binary_search(&a).is_ok()
    }

    pub fn stack_alphabet(&self) -> &[char] {
        &self.stack_alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn initials(&self) -> &[usize] {
        &self.initials
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_states).filter(|&s| self.finals[s])
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn transitions(&self) -> &[PdaTransition] {
        &self.transitions
    }

    /// Transitions leaving `state` with stack top `top` (`None` = empty stack).
    pub fn transitions_from(&self, state: usize, top: Option<char>) -> impl Iterator<Item = &PdaTransition> {
        self.by_source
            .get(&(state, top))
            .into_iter()
            .flatten()
            .map(|&i| &self.transitions[i])
    }

    /// Size as states plus transitions.
    pub fn size(&self) -> usize {
        self.num_states + self.transitions.len()
    }

    pub fn max_push_len(&self) -> usize {
        self.transitions.iter().map(|t| t.push.len()).max().unwrap_or(0)
    }

    /// Single initial state and no two transitions with the same
    /// `(state, letter, top)` key.
    pub fn is_deterministic(&self) -> bool {
        let mut keys = HashSet::new();
        self.initials.len() == 1
            && self.transitions.iter().all(|t| keys.insert((t.from, t.letter, t.top)))
    }

    pub fn initial_configurations(&self) -> Vec<PdaConfiguration> {
        self.initials
            .iter()
            .map(|&state| PdaConfiguration { state, stack: Vec::new() })
            .collect()
    }

    /// Configurations reachable from `config` by reading `a`.
    pub fn successors(&self, config: &PdaConfiguration, a: char) -> Vec<PdaConfiguration> {
        let top = config.stack.last().copied();
        self.transitions_from(config.state, top)
            .filter(|t| t.letter == a)
            .map(|t| {
                let mut stack = config.stack.clone();
                if top.is_some() {
                    stack.pop();
                }
                stack.extend_from_slice(&t.push);
                PdaConfiguration { state: t.to, stack }
            })
            .collect()
    }

    pub fn is_accepting(&self, config: &PdaConfiguration) -> bool {
        self.finals[config.state] && config.stack.is_empty()
    }

    /// Membership by configuration search.
    ///
    /// Each step pops at most one symbol, so configurations whose stack is
    /// higher than the number of letters left can never accept and are
    /// dropped. This keeps the search finite.
    pub fn accepts(&self, word: &[char]) -> Result<bool> {
        if let Some(&a) = word.iter().find(|a| !self.has_letter(**a)) {
            return Err(Error::UnknownLetter(a));
        }
        let mut current: HashSet<PdaConfiguration> = self.initial_configurations().into_iter().collect();
        for (i, &a) in word.iter().enumerate() {
            let remaining = word.len() - i - 1;
            current = current
                .iter()
                .flat_map(|c| self.successors(c, a))
                .filter(|c| c.stack.len() <= remaining)
                .collect();
            if current.is_empty() {
                return Ok(false);
            }
        }
        Ok(current.iter().any(|c| self.is_accepting(c)))
    }

    /// Same automaton over a larger input alphabet.
    pub fn with_alphabet(&self, alphabet: impl IntoIterator<Item = char>) -> Result<Pda> {
        let alphabet: BTreeSet<char> = alphabet.into_iter().chain(self.alphabet.iter().copied()).collect();
        Pda::new(
            alphabet,
            self.stack_alphabet.iter().copied(),
            self.num_states,
            self.initials.iter().copied(),
            self.finals(),
            self.transitions.iter().cloned(),
        )
    }
}

/// `count` distinct stack symbols, uppercase ASCII first.
pub fn fresh_stack_symbols(count: usize) -> Vec<char> {
    ('A'..='Z')
        .chain(('\u{00C0}'..='\u{FFFF}').filter(|c| c.is_alphabetic() && c.is_uppercase()))
        .chain(('\u{0100}'..='\u{FFFF}').filter(|c| c.is_alphabetic() && !c.is_uppercase()))
        .filter(|&c| c != BOTTOM)
        .take(count)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::word;

    #[test]
    fn anbn_membership() {
        let pda = fixtures::anbn_pda();
        assert!(pda.accepts(&word("aabb")).unwrap());
        assert!(!pda.accepts(&word("aab")).unwrap());
        assert!(pda.accepts(&word("")).unwrap());
        assert!(!pda.accepts(&word("abab")).unwrap());
        assert!(!pda.accepts(&word("ba")).unwrap());
        assert_eq!(pda.accepts(&word("ac")), Err(Error::UnknownLetter('c')));
    }

    #[test]
    fn anbn_is_deterministic() {
        assert!(fixtures::anbn_pda().is_deterministic());
    }

    #[test]
    fn nondeterministic_pda() {
        let t = |to| PdaTransition { from: 0, letter: 'a', top: None, to, push: vec![] };
        let pda = Pda::new(['a'], [], 2, [0], [1], [t(0), t(1)]).unwrap();
        assert!(!pda.is_deterministic());
        assert!(pda.accepts(&word("a")).unwrap());
    }

    #[test]
    fn bottom_is_reserved() {
        assert_eq!(Pda::new(['a'], [BOTTOM], 1, [0], [0], []), Err(Error::ReservedSymbol(BOTTOM)));
    }

    #[test]
    fn push_must_use_stack_alphabet() {
        let t = PdaTransition { from: 0, letter: 'a', top: None, to: 0, push: vec!['Z'] };
        assert_eq!(Pda::new(['a'], ['A'], 1, [0], [0], [t]), Err(Error::UnknownStackSymbol('Z')));
    }

    #[test]
    fn fresh_symbols_are_distinct() {
        let syms = fresh_stack_symbols(200);
        assert_eq!(syms.len(), 200);
        assert_eq!(syms.iter().collect::<HashSet<_>>().len(), 200);
        assert_eq!(syms[0], 'A');
    }
}
