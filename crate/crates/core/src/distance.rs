// SPDX-License-Identifier: Apache-2.0

//! Edit distance between words, and from a word to the language of an NFA.
//!
//! For a fixed NFA, `m(s, s', α)` is the least number of edits that turn the
//! single letter (or empty word) `α` into a word labelling a run from `s'` to
//! `s`. The distance `d_w^s` from a word `w` to "some word reaching `s`"
//! satisfies
//!
//! ```text
//! d_{wa}^s = min_{s'} (d_w^{s'} + m(s, s', a))
//! ```
//!
//! which is folded left to right over the word.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Add;

use crate::automata::Nfa;

/// A natural number or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub const ZERO: Distance = Distance::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Distance::Finite(n) => Some(n),
            Distance::Infinite => None,
        }
    }
}

impl From<u64> for Distance {
    fn from(n: u64) -> Self {
        Distance::Finite(n)
    }
}

impl Add for Distance {
    type Output = Distance;

    fn add(self, rhs: Distance) -> Distance {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => {
                a.checked_add(b).map_or(Distance::Infinite, Distance::Finite)
            }
            _ => Distance::Infinite,
        }
    }
}

impl Add<u64> for Distance {
    type Output = Distance;

    fn add(self, rhs: u64) -> Distance {
        self + Distance::Finite(rhs)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(n) => write!(f, "{n}"),
            Distance::Infinite => f.write_str("∞"),
        }
    }
}

/// Levenshtein distance (unit-cost insertions, deletions, substitutions).
pub fn edit_distance_words(u: &[char], v: &[char]) -> u64 {
    let mut row: Vec<u64> = (0..=v.len() as u64).collect();
    for (i, &a) in u.iter().enumerate() {
        let mut diag = row[0];
        row[0] = i as u64 + 1;
        for (j, &b) in v.iter().enumerate() {
            let next = (diag + u64::from(a != b)).min(row[j] + 1).min(row[j + 1] + 1);
            diag = row[j + 1];
            row[j + 1] = next;
        }
    }
    row[v.len()]
}

/// The table `m(s, s', α)` for one NFA.
///
/// Letters outside the automaton's alphabet share a single column, since no
/// run can read them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditCostTable {
    num_states: usize,
    letters: Vec<char>,
    // costs[(col * n + target) * n + source]; col 0 = ε, last col = foreign letter
    costs: Vec<Distance>,
}

impl EditCostTable {
    /// Builds the table with a shortest-path search per source state: plain
    /// BFS for `ε`, and a two-layer BFS per letter where the layer flips once
    /// an edge labelled with that letter has been traversed.
    pub fn build(nfa: &Nfa) -> Self {
        let n = nfa.num_states();
        let letters = nfa.alphabet().to_vec();
        let cols = letters.len() + 2;
        let mut costs = vec![Distance::Infinite; cols * n * n];
        for source in 0..n {
            for (col, letter) in std::iter::once(None)
                .chain(letters.iter().map(|&a| Some(Some(a))))
                .chain(std::iter::once(Some(None)))
                .enumerate()
            {
                let row = match letter {
                    None => epsilon_costs(nfa, source),
                    Some(a) => letter_costs(nfa, source, a),
                };
                for (target, cost) in row.into_iter().enumerate() {
                    costs[(col * n + target) * n + source] = cost;
                }
            }
        }
        EditCostTable { num_states: n, letters, costs }
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    fn column(&self, alpha: Option<char>) -> usize {
        match alpha {
            None => 0,
            Some(a) => match self.letters.binary_search(&a) {
                Ok(i) => i + 1,
                Err(_) => self.letters.len() + 1,
            },
        }
    }

    /// `m(target, source, alpha)`; `alpha = None` stands for the empty word.
    pub fn get(&self, target: usize, source: usize, alpha: Option<char>) -> Distance {
        let n = self.num_states;
        self.costs[(self.column(alpha) * n + target) * n + source]
    }

    /// Costs `m(target, ·, alpha)` for all sources.
    pub(crate) fn column_for(&self, target: usize, alpha: Option<char>) -> &[Distance] {
        let n = self.num_states;
        let start = (self.column(alpha) * n + target) * n;
        &self.costs[start..start + n]
    }
}

fn epsilon_costs(nfa: &Nfa, source: usize) -> Vec<Distance> {
    let mut dist = vec![Distance::Infinite; nfa.num_states()];
    dist[source] = Distance::ZERO;
    let mut queue = VecDeque::from([source]);
    while let Some(s) = queue.pop_front() {
        for &(_, q) in nfa.successors(s) {
            if dist[q] == Distance::Infinite {
                dist[q] = dist[s] + 1;
                queue.push_back(q);
            }
        }
    }
    dist
}

// `letter = None` is a letter outside the alphabet.
fn letter_costs(nfa: &Nfa, source: usize, letter: Option<char>) -> Vec<Distance> {
    let n = nfa.num_states();
    // layer 0: no edge labelled `letter` used yet; layer 1: at least one
    let mut dist = vec![[u64::MAX; 2]; n];
    dist[source][0] = 0;
    let mut queue = VecDeque::from([(source, 0usize)]);
    while let Some((s, layer)) = queue.pop_front() {
        let d = dist[s][layer];
        for &(b, q) in nfa.successors(s) {
            let next_layer = if Some(b) == letter { 1 } else { layer };
            if dist[q][next_layer] == u64::MAX {
                dist[q][next_layer] = d + 1;
                queue.push_back((q, next_layer));
            }
        }
    }
    dist.iter()
        .map(|&[plain, matched]| {
            // the run word w'': the letter is substituted into it (or deleted
            // when w'' is empty), and |w''| - 1 insertions complete it
            let without = (plain != u64::MAX).then(|| plain.max(1));
            let with = (matched != u64::MAX).then(|| matched - 1);
            match (without, with) {
                (None, None) => Distance::Infinite,
                (a, b) => Distance::Finite(a.into_iter().chain(b).min().expect("one is set")),
            }
        })
        .collect()
}

/// The vector `(d_w^s)_s` for the prefix `w` read so far.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceVector(pub Vec<Distance>);

impl DistanceVector {
    /// `d_ε^s = min over initial s' of m(s, s', ε)`.
    pub fn initial(nfa: &Nfa, table: &EditCostTable) -> Self {
        DistanceVector(
            (0..nfa.num_states())
                .map(|s| {
                    nfa.initials()
                        .iter()
                        .map(|&i| table.get(s, i, None))
                        .min()
                        .unwrap_or(Distance::Infinite)
                })
                .collect(),
        )
    }

    pub fn get(&self, state: usize) -> Distance {
        self.0[state]
    }

    pub fn min_entry(&self) -> Distance {
        self.0.iter().copied().min().unwrap_or(Distance::Infinite)
    }
}

/// One step of the recurrence on letter `a`.
pub fn distance_step(v: &DistanceVector, a: char, table: &EditCostTable) -> DistanceVector {
    DistanceVector(
        (0..v.0.len())
            .map(|s| {
                table
                    .column_for(s, Some(a))
                    .iter()
                    .zip(&v.0)
                    .map(|(&m, &d)| d + m)
                    .min()
                    .unwrap_or(Distance::Infinite)
            })
            .collect(),
    )
}

/// Final distance vector after reading `w`.
pub fn distance_vector(w: &[char], nfa: &Nfa, table: &EditCostTable) -> DistanceVector {
    w.iter()
        .fold(DistanceVector::initial(nfa, table), |v, &a| distance_step(&v, a, table))
}

/// `inf_{w' ∈ L(nfa)} ed(w, w')`, infinite iff the language is empty.
pub fn word_to_nfa_distance(w: &[char], nfa: &Nfa) -> Distance {
    word_to_nfa_distance_with(w, nfa, &EditCostTable::build(nfa))
}

pub fn word_to_nfa_distance_with(w: &[char], nfa: &Nfa, table: &EditCostTable) -> Distance {
    let v = distance_vector(w, nfa, table);
    nfa.finals().map(|f| v.get(f)).min().unwrap_or(Distance::Infinite)
}

/// `R(u, Q')`: states reachable by any word from the states reachable from
/// `from` on exactly `u`. The result is closed under reachability.
pub fn reach_set(u: &[char], from: &BTreeSet<usize>, nfa: &Nfa) -> BTreeSet<usize> {
    nfa.forward_closure(&nfa.run_from(from, u))
}

/// True iff `R(u_k, R(u_{k-1}, … R(u_1, Q)…))` is empty, `Q` being all states.
pub fn nested_reach_empty<P: AsRef<[char]>>(parts: &[P], nfa: &Nfa) -> bool {
    let all: BTreeSet<usize> = (0..nfa.num_states()).collect();
    parts
        .iter()
        .fold(all, |set, u| reach_set(u.as_ref(), &set, nfa))
        .is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, word};

    #[test]
    fn levenshtein_examples() {
        assert_eq!(edit_distance_words(&word("abc"), &word("abc")), 0);
        assert_eq!(edit_distance_words(&word("abc"), &word("abd")), 1);
        assert_eq!(edit_distance_words(&word(""), &word("aaa")), 3);
        assert_eq!(edit_distance_words(&word("kitten"), &word("sitting")), 3);
    }

    #[test]
    fn cost_table_examples() {
        let nfa = fixtures::a_star_b_nfa();
        let table = EditCostTable::build(&nfa);
        assert_eq!(table.get(1, 0, Some('b')), Distance::Finite(0));
        assert_eq!(table.get(1, 0, None), Distance::Finite(1));
        assert_eq!(table.get(0, 0, Some('b')), Distance::Finite(1));
        assert_eq!(table.get(0, 0, None), Distance::Finite(0));
        assert_eq!(table.get(0, 1, None), Distance::Infinite);
        assert_eq!(table.get(0, 1, Some('a')), Distance::Infinite);
        // a letter the automaton has never seen costs a substitution or deletion
        assert_eq!(table.get(0, 0, Some('z')), Distance::Finite(1));
        assert_eq!(table.get(1, 0, Some('z')), Distance::Finite(1));
    }

    #[test]
    fn step_examples() {
        let nfa = fixtures::a_star_b_nfa();
        let table = EditCostTable::build(&nfa);
        let v0 = DistanceVector::initial(&nfa, &table);
        assert_eq!(v0.0, vec![Distance::Finite(0), Distance::Finite(1)]);
        let vb = distance_step(&v0, 'b', &table);
        assert_eq!(vb.0, vec![Distance::Finite(1), Distance::Finite(0)]);
        let vaa = distance_step(&distance_step(&v0, 'a', &table), 'a', &table);
        assert_eq!(vaa.get(0), Distance::Finite(0));
        let inf = DistanceVector(vec![Distance::Infinite; 2]);
        assert_eq!(distance_step(&inf, 'a', &table), inf);
    }

    #[test]
    fn word_to_nfa_examples() {
        let nfa = fixtures::a_star_b_nfa();
        assert_eq!(word_to_nfa_distance(&word("bb"), &nfa), Distance::Finite(1));
        assert_eq!(word_to_nfa_distance(&word("ab"), &nfa), Distance::Finite(0));
        let a_star = fixtures::a_star_nfa();
        assert_eq!(word_to_nfa_distance(&word("bbb"), &a_star), Distance::Finite(3));
        let empty = Nfa::new(['a'], 1, [0], [], []).unwrap();
        assert_eq!(word_to_nfa_distance(&word("a"), &empty), Distance::Infinite);
    }

    #[test]
    fn reach_set_examples() {
        let nfa = fixtures::a_star_or_b_star_nfa();
        let all: BTreeSet<usize> = (0..nfa.num_states()).collect();
        assert_eq!(reach_set(&[], &all, &nfa), all);
        let after_a = reach_set(&word("a"), &all, &nfa);
        assert_eq!(after_a, BTreeSet::from([1]));
        assert!(reach_set(&word("b"), &after_a, &nfa).is_empty());
    }

    #[test]
    fn nested_reach_examples() {
        let nfa = fixtures::a_star_or_b_star_nfa();
        assert!(nested_reach_empty(&[word("aa"), word("bb")], &nfa));
        assert!(!nested_reach_empty::<Vec<char>>(&[], &nfa));
        assert!(!nested_reach_empty(&[word("a")], &fixtures::a_star_nfa()));
    }

    #[test]
    fn distance_arithmetic() {
        assert_eq!(Distance::Finite(2) + 3, Distance::Finite(5));
        assert_eq!(Distance::Infinite + 3, Distance::Infinite);
        assert_eq!(Distance::Finite(u64::MAX) + 1, Distance::Infinite);
        assert!(Distance::Finite(u64::MAX) < Distance::Infinite);
        assert_eq!(Distance::Infinite.to_string(), "∞");
    }
}
