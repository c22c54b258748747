// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::Nfa;
use crate::error::{Error, Result};

/// A deterministic finite automaton: an [`Nfa`] with one initial state and a
/// partial transition function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa(Nfa);

impl Dfa {
    pub fn as_nfa(&self) -> &Nfa {
        &self.0
    }

    pub fn into_nfa(self) -> Nfa {
        self.0
    }

    /// Successor of `state` on `a`, if defined.
    pub fn next(&self, state: usize, a: char) -> Option<usize> {
        self.0
            .successors(state)
            .iter()
            .find(|(b, _)| *b == a)
            .map(|&(_, q)| q)
    }
}

impl TryFrom<Nfa> for Dfa {
    type Error = Error;

    fn try_from(nfa: Nfa) -> Result<Self> {
        if nfa.is_deterministic() {
            Ok(Dfa(nfa))
        } else {
            Err(Error::Precondition("automaton is not deterministic".into()))
        }
    }
}

/// Subset construction restricted to nonempty reachable subsets.
pub fn determinize(nfa: &Nfa) -> Dfa {
    let start: BTreeSet<usize> = nfa.initials().iter().copied().collect();
    let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
    let mut subsets = vec![start.clone()];
    index.insert(start, 0);
    let mut trans = Vec::new();
    let mut i = 0;
    while i < subsets.len() {
        let current = subsets[i].clone();
        for &a in nfa.alphabet() {
            let next = nfa.step(&current, a);
            if next.is_empty() {
                continue;
            }
            let id = *index.entry(next.clone()).or_insert_with(|| {
                subsets.push(next);
                subsets.len() - 1
            });
            trans.push((i, a, id));
        }
        i += 1;
    }
    let finals = subsets
        .iter()
        .enumerate()
        .filter(|(_, set)| set.iter().any(|&s| nfa.is_final(s)))
        .map(|(i, _)| i);
    let dfa = Nfa::new(nfa.alphabet().iter().copied(), subsets.len(), [0], finals, trans)
        .expect("subset construction is well formed");
    Dfa(dfa)
}

/// Shortest word (length-lexicographic) in `L(sub) \ L(sup)`, or `None` when
/// `L(sub) ⊆ L(sup)`.
///
/// Explores the product of `sub` with the subset automaton of `sup` on the fly.
pub fn inclusion_counterexample(sub: &Nfa, sup: &Nfa) -> Option<Vec<char>> {
    type Node = (usize, BTreeSet<usize>);
    let start_set: BTreeSet<usize> = sup.initials().iter().copied().collect();
    let mut parent: HashMap<Node, Option<(Node, char)>> = HashMap::new();
    let mut queue = VecDeque::new();
    for &q in sub.initials() {
        let node = (q, start_set.clone());
        if parent.insert(node.clone(), None).is_none() {
            queue.push_back(node);
        }
    }
    let mut alphabet: Vec<char> = sub.alphabet().to_vec();
    alphabet.sort_unstable();
    while let Some(node) = queue.pop_front() {
        let (q, ref set) = node;
        if sub.is_final(q) && !set.iter().any(|&s| sup.is_final(s)) {
            let mut word = Vec::new();
            let mut cur = node.clone();
            while let Some(Some((prev, a))) = parent.get(&cur).cloned() {
                word.push(a);
                cur = prev;
            }
            word.reverse();
            return Some(word);
        }
        for &a in &alphabet {
            let next_set = if sup.has_letter(a) { sup.step(set, a) } else { BTreeSet::new() };
            for &(b, q2) in sub.successors(q) {
                if b != a {
                    continue;
                }
                let next = (q2, next_set.clone());
                if !parent.contains_key(&next) {
                    parent.insert(next.clone(), Some((node.clone(), a)));
                    queue.push_back(next);
                }
            }
        }
    }
    None
}

/// True when the automaton accepts every word over its alphabet.
pub fn is_universal(nfa: &Nfa) -> bool {
    inclusion_counterexample(&Nfa::universal(nfa.alphabet().iter().copied()), nfa).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word;

    #[test]
    fn determinize_preserves_language() {
        // (a|b)*a
        let nfa = Nfa::new(['a', 'b'], 2, [0], [1], [(0, 'a', 0), (0, 'b', 0), (0, 'a', 1)]).unwrap();
        let dfa = determinize(&nfa);
        assert!(dfa.as_nfa().is_deterministic());
        for w in ["", "a", "b", "ab", "ba", "aba", "bbba"] {
            assert_eq!(dfa.as_nfa().accepts(&word(w)), nfa.accepts(&word(w)), "{w}");
        }
    }

    #[test]
    fn inclusion() {
        let a_star = Nfa::new(['a', 'b'], 1, [0], [0], [(0, 'a', 0)]).unwrap();
        let sigma_star = Nfa::universal(['a', 'b']);
        assert_eq!(inclusion_counterexample(&a_star, &sigma_star), None);
        assert_eq!(inclusion_counterexample(&sigma_star, &a_star), Some(word("b")));
        assert!(is_universal(&sigma_star));
        assert!(!is_universal(&a_star));
    }

    #[test]
    fn try_from_rejects_nondeterminism() {
        let nfa = Nfa::new(['a'], 2, [0], [1], [(0, 'a', 0), (0, 'a', 1)]).unwrap();
        assert!(Dfa::try_from(nfa).is_err());
    }
}
