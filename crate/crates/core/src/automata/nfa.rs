// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Nondeterministic finite automaton without ε-transitions.
///
/// States are the integers `0..num_states`. Transitions are kept sorted and
/// deduplicated, so two automata built from the same relation compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Vec<char>,
    num_states: usize,
    initials: Vec<usize>,
    finals: Vec<bool>,
    transitions: Vec<(usize, char, usize)>,
    successors: Vec<Vec<(char, usize)>>,
}

impl Nfa {
    pub fn new(
        alphabet: impl IntoIterator<Item = char>,
        num_states: usize,
        initials: impl IntoIterator<Item = usize>,
        finals: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, char, usize)>,
    ) -> Result<Self> {
        let alphabet: Vec<char> = alphabet.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let check_state = |state: usize| {
            if state < num_states {
                Ok(state)
            } else {
                Err(Error::StateOutOfRange { state, count: num_states })
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
        for (p, a, q) in transitions {
            check_state(p)?;
            check_state(q)?;
            if alphabet.binary_search(&a).is_err() {
                return Err(Error::UnknownLetter(a));
            }
            trans.insert((p, a, q));
        }
        let transitions: Vec<_> = trans.into_iter().collect();
        let mut successors = vec![Vec::new(); num_states];
        for &(p, a, q) in &transitions {
            successors[p].push((a, q));
        }
        Ok(Nfa {
            alphabet,
            num_states,
            initials,
            finals: final_flags,
            transitions,
            successors,
        })
    }

    /// One-state automaton accepting every word over `alphabet`.
    pub fn universal(alphabet: impl IntoIterator<Item = char>) -> Self {
        let alphabet: Vec<char> = alphabet.into_iter().collect();
        let trans: Vec<_> = alphabet.iter().map(|&a| (0, a, 0)).collect();
        Nfa::new(alphabet, 1, [0], [0], trans).expect("universal automaton is well formed")
    }

    /// Automaton accepting only the empty word.
    pub fn empty_word(alphabet: impl IntoIterator<Item = char>) -> Self {
        Nfa::new(alphabet, 1, [0], [0], []).expect("well formed")
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn has_letter(&self, a: char) -> bool {
        self.alphabet.binary_search(&a).is_ok()
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn initials(&self) -> &[usize] {
        &self.initials
    }

    pub fn is_initial(&self, state: usize) -> bool {
        self.initials.binary_search(&state).is_ok()
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_states).filter(|&s| self.finals[s])
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn transitions(&self) -> &[(usize, char, usize)] {
        &self.transitions
    }

    pub fn successors(&self, state: usize) -> &[(char, usize)] {
        &self.successors[state]
    }

    /// Size as states plus transitions.
    pub fn size(&self) -> usize {
        self.num_states + self.transitions.len()
    }

    pub(crate) fn check_word(&self, word: &[char]) -> Result<()> {
        match word.iter().find(|a| !self.has_letter(**a)) {
            Some(&a) => Err(Error::UnknownLetter(a)),
            None => Ok(()),
        }
    }

    /// States reachable from `from` by reading exactly `a`.
    pub fn step(&self, from: &BTreeSet<usize>, a: char) -> BTreeSet<usize> {
        from.iter()
            .flat_map(|&s| self.successors[s].iter())
            .filter(|(b, _)| *b == a)
            .map(|&(_, q)| q)
            .collect()
    }

    /// States reachable from `from` on `word`.
    pub fn run_from(&self, from: &BTreeSet<usize>, word: &[char]) -> BTreeSet<usize> {
        word.iter().fold(from.clone(), |set, &a| self.step(&set, a))
    }

    /// Set of states reachable from an initial state on `word`.
    pub fn reachable_states(&self, word: &[char]) -> Result<BTreeSet<usize>> {
        self.check_word(word)?;
        Ok(self.run_from(&self.initials.iter().copied().collect(), word))
    }

    pub fn accepts(&self, word: &[char]) -> Result<bool> {
        Ok(self.reachable_states(word)?.into_iter().any(|s| self.finals[s]))
    }

    /// All states reachable from `from` by any word (including `from` itself).
    pub fn forward_closure(&self, from: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut seen = from.clone();
        let mut queue: VecDeque<usize> = from.iter().copied().collect();
        while let Some(s) = queue.pop_front() {
            for &(_, q) in &self.successors[s] {
                if seen.insert(q) {
                    queue.push_back(q);
                }
            }
        }
        seen
    }

    /// States from which some final state is reachable.
    pub fn productive_states(&self) -> BTreeSet<usize> {
        let mut predecessors = vec![Vec::new(); self.num_states];
        for &(p, _, q) in &self.transitions {
            predecessors[q].push(p);
        }
        let mut seen: BTreeSet<usize> = self.finals().collect();
        let mut queue: VecDeque<usize> = seen.iter().copied().collect();
        while let Some(s) = queue.pop_front() {
            for &p in &predecessors[s] {
                if seen.insert(p) {
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    /// Length of a shortest accepted word, `None` when the language is empty.
    pub fn shortest_accepted_len(&self) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.num_states];
        let mut queue = VecDeque::new();
        for &s in &self.initials {
            dist[s] = 0;
            queue.push_back(s);
        }
        while let Some(s) = queue.pop_front() {
            if self.finals[s] {
                return Some(dist[s]);
            }
            for &(_, q) in &self.successors[s] {
                if dist[q] == usize::MAX {
                    dist[q] = dist[s] + 1;
                    queue.push_back(q);
                }
            }
        }
        None
    }

    pub fn is_empty(&self) -> bool {
        self.shortest_accepted_len().is_none()
    }

    /// True when every state is accepting.
    pub fn is_safety(&self) -> bool {
        self.finals.iter().all(|&f| f)
    }

    /// Single initial state and at most one successor per (state, letter).
    pub fn is_deterministic(&self) -> bool {
        self.initials.len() == 1
            && self
                .transitions
                .windows(2)
                .all(|w| (w[0].0, w[0].1) != (w[1].0, w[1].1))
    }

    /// Safety automaton for the prefix closure of the language.
    ///
    /// States from which no final state is reachable are removed and every
    /// remaining state becomes final. When the language is empty the result
    /// has no states at all.
    pub fn prefix_closure(&self) -> Nfa {
        let keep = self.productive_states();
        let renumber: Vec<Option<usize>> = {
            let mut next = 0;
            (0..self.num_states)
                .map(|s| {
                    keep.contains(&s).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        };
        let n = keep.len();
        let initials = self.initials.iter().filter_map(|&s| renumber[s]);
        let trans = self
            .transitions
            .iter()
            .filter_map(|&(p, a, q)| Some((renumber[p]?, a, renumber[q]?)));
        Nfa::new(self.alphabet.iter().copied(), n, initials, 0..n, trans)
            .expect("restriction of a valid automaton is valid")
    }

    /// Same automaton over a larger alphabet.
    pub fn with_alphabet(&self, alphabet: impl IntoIterator<Item = char>) -> Result<Nfa> {
        let alphabet: BTreeSet<char> = alphabet.into_iter().chain(self.alphabet.iter().copied()).collect();
        Nfa::new(
            alphabet,
            self.num_states,
            self.initials.iter().copied(),
            self.finals(),
            self.transitions.iter().copied(),
        )
    }
}
