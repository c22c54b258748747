// SPDX-License-Identifier: Apache-2.0

//! Small automata and grammars used by the tests, the acceptance run and the
//! command-line examples, plus seeded random generators for test corpora.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::automata::{Nfa, Pda, PdaTransition};
use crate::grammar::{cfg_to_cnf, Cfg, GeneralCfg, Production, Symbol};

fn nfa(alphabet: &[char], n: usize, initials: &[usize], finals: &[usize], trans: &[(usize, char, usize)]) -> Nfa {
    Nfa::new(alphabet.iter().copied(), n, initials.iter().copied(), finals.iter().copied(), trans.iter().copied())
        .expect("fixture is well formed")
}

fn t(from: usize, letter: char, top: Option<char>, to: usize, push: &str) -> PdaTransition {
    PdaTransition { from, letter, top, to, push: push.chars().collect() }
}

/// `a*b` over `{a, b}`.
pub fn a_star_b_nfa() -> Nfa {
    nfa(&['a', 'b'], 2, &[0], &[1], &[(0, 'a', 0), (0, 'b', 1)])
}

/// `a*` over `{a, b}`.
pub fn a_star_nfa() -> Nfa {
    nfa(&['a', 'b'], 1, &[0], &[0], &[(0, 'a', 0)])
}

/// `a*b*` over `{a, b}`.
pub fn a_star_b_star_nfa() -> Nfa {
    nfa(&['a', 'b'], 2, &[0], &[0, 1], &[(0, 'a', 0), (0, 'b', 1), (1, 'b', 1)])
}

/// `a* | b*` over `{a, b, #}`: an initial state branching into an
/// `a`-loop (state 1) and a `b`-loop (state 2).
pub fn a_star_or_b_star_nfa() -> Nfa {
    nfa(
        &['a', 'b', '#'],
        3,
        &[0],
        &[0, 1, 2],
        &[(0, 'a', 1), (1, 'a', 1), (0, 'b', 2), (2, 'b', 2)],
    )
}

/// `{a, b}*`.
pub fn sigma_star_nfa(alphabet: &[char]) -> Nfa {
    Nfa::universal(alphabet.iter().copied())
}

/// `{ε}`, deterministic.
pub fn epsilon_dfa(alphabet: &[char]) -> Nfa {
    Nfa::empty_word(alphabet.iter().copied())
}

/// Finite language given by its words, as a trie.
pub fn finite_nfa(alphabet: &[char], words: &[&str]) -> Nfa {
    let mut trans: Vec<(usize, char, usize)> = Vec::new();
    let mut finals = Vec::new();
    let mut n = 1;
    for w in words {
        let mut s = 0;
        for a in w.chars() {
            s = match trans.iter().find(|&&(p, b, _)| p == s && b == a) {
                Some(&(_, _, q)) => q,
                None => {
                    trans.push((s, a, n));
                    n += 1;
                    n - 1
                }
            };
        }
        finals.push(s);
    }
    nfa(alphabet, n, &[0], &finals, &trans)
}

/// `{aⁿbⁿ | n ≥ 0}`: push `A` per `a`, pop one per `b`.
pub fn anbn_pda() -> Pda {
    Pda::new(
        ['a', 'b'],
        ['A'],
        2,
        [0],
        [0, 1],
        [
            t(0, 'a', None, 0, "A"),
            t(0, 'a', Some('A'), 0, "AA"),
            t(0, 'b', Some('A'), 1, ""),
            t(1, 'b', Some('A'), 1, ""),
        ],
    )
    .expect("fixture is well formed")
}

/// `{aⁿ#bⁿ | n ≥ 0}`.
pub fn a_hash_b_pda() -> Pda {
    Pda::new(
        ['a', 'b', '#'],
        ['A'],
        2,
        [0],
        [1],
        [
            t(0, 'a', None, 0, "A"),
            t(0, 'a', Some('A'), 0, "AA"),
            t(0, '#', None, 1, ""),
            t(0, '#', Some('A'), 1, "A"),
            t(1, 'b', Some('A'), 1, ""),
        ],
    )
    .expect("fixture is well formed")
}

/// `Σ*` as a one-state PDA that never uses its stack.
pub fn sigma_star_pda(alphabet: &[char]) -> Pda {
    Pda::from_nfa(&sigma_star_nfa(alphabet))
}

fn general(alphabet: &[char], names: &[&str], rules: &[(usize, &str)]) -> GeneralCfg {
    // upper-case letters in a rule body name nonterminals by position
    let productions = rules
        .iter()
        .map(|&(head, body)| {
            let rhs = body
                .chars()
                .map(|c| match names.iter().position(|n| n.len() == 1 && n.starts_with(c)) {
                    Some(v) if c.is_uppercase() => Symbol::Nonterminal(v),
                    _ => Symbol::Terminal(c),
                })
                .collect();
            (head, rhs)
        })
        .collect();
    GeneralCfg::new(alphabet.iter().copied(), names.iter().map(|s| s.to_string()).collect(), 0, productions)
        .expect("fixture is well formed")
}

/// `S → aSb | ε`, in Chomsky normal form.
pub fn anbn_grammar() -> Cfg {
    cfg_to_cnf(&general(&['a', 'b'], &["S"], &[(0, "aSb"), (0, "")]))
}

/// `S → aSb | #`, in Chomsky normal form.
pub fn a_hash_b_grammar() -> Cfg {
    cfg_to_cnf(&general(&['a', 'b', '#'], &["S"], &[(0, "aSb"), (0, "#")]))
}

/// The grammar generating the single word `a^(2^k)` by repeated doubling:
/// `A_k → A_{k-1} A_{k-1}`, …, `A_0 → a`, with `k + 1` nonterminals.
pub fn doubling_grammar(k: usize) -> Cfg {
    let names: Vec<String> = (0..=k).rev().map(|i| format!("A{i}")).collect();
    // index j names A_{k-j}
    let mut productions: Vec<Production> =
        (0..k).map(|j| Production::Binary { head: j, left: j + 1, right: j + 1 }).collect();
    productions.push(Production::Terminal { head: k, letter: 'a' });
    Cfg::new(['a'], names, 0, productions).expect("fixture is well formed")
}

/// Grammar for the single word `w`.
pub fn single_word_grammar(w: &[char]) -> Cfg {
    let rhs = w.iter().map(|&a| Symbol::Terminal(a)).collect();
    let g = GeneralCfg::new(w.iter().copied(), vec!["S".into()], 0, vec![(0, rhs)]).expect("well formed");
    cfg_to_cnf(&g)
}

/// Deterministic generator for test corpora.
pub fn corpus_rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random NFA with between 1 and `max_states` states.
pub fn random_nfa(rng: &mut impl Rng, max_states: usize, alphabet: &[char]) -> Nfa {
    let n = rng.gen_range(1..=max_states);
    let mut trans = Vec::new();
    for p in 0..n {
        for &a in alphabet {
            for q in 0..n {
                if rng.gen_bool(0.3) {
                    trans.push((p, a, q));
                }
            }
        }
    }
    let mut initials = vec![0];
    initials.extend((1..n).filter(|_| rng.gen_bool(0.2)));
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    nfa(alphabet, n, &initials, &finals, &trans)
}

const RANDOM_STACK: [char; 2] = ['A', 'B'];

fn random_transition(rng: &mut impl Rng, from: usize, to: usize, letter: char) -> PdaTransition {
    let top = if rng.gen_bool(0.3) { None } else { RANDOM_STACK.choose(rng).copied() };
    let len = match rng.gen_range(0..20) {
        0..=9 => 0,
        10..=16 => 1,
        _ => 2,
    };
    let push = (0..len).map(|_| *RANDOM_STACK.choose(rng).expect("nonempty")).collect();
    PdaTransition { from, letter, top, to, push }
}

/// Random PDA with between 1 and `max_states` states over the stack
/// alphabet `{A, B}`.
pub fn random_pda(rng: &mut impl Rng, max_states: usize, alphabet: &[char]) -> Pda {
    let n = rng.gen_range(1..=max_states);
    let mut trans = Vec::new();
    for p in 0..n {
        for &a in alphabet {
            for _ in 0..rng.gen_range(1..=3) {
                let q = rng.gen_range(0..n);
                trans.push(random_transition(rng, p, q, a));
            }
        }
    }
    let mut finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    if finals.is_empty() {
        finals.push(rng.gen_range(0..n));
    }
    Pda::new(alphabet.iter().copied(), RANDOM_STACK, n, [0], finals, trans).expect("well formed")
}

/// Random PDA whose transitions only move to higher-numbered states, so
/// every accepted word is shorter than the number of states.
pub fn random_acyclic_pda(rng: &mut impl Rng, max_states: usize, alphabet: &[char]) -> Pda {
    let n = rng.gen_range(1..=max_states);
    let mut trans = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            for &a in alphabet {
                if rng.gen_bool(0.4) {
                    trans.push(random_transition(rng, p, q, a));
                }
            }
        }
    }
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    Pda::new(alphabet.iter().copied(), RANDOM_STACK, n, [0], finals, trans).expect("well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::cyk_membership;
    use crate::oracle::all_words;
    use crate::word;

    #[test]
    fn doubling_grammar_generates_one_word() {
        for k in 0..4 {
            let g = doubling_grammar(k);
            assert_eq!(g.num_nonterminals(), k + 1);
            let words: Vec<_> = all_words(&['a'], 9).filter(|w| cyk_membership(&g, w).is_some()).collect();
            assert_eq!(words, vec![vec!['a'; 1 << k]]);
        }
    }

    #[test]
    fn a_hash_b_fixtures_agree() {
        let pda = a_hash_b_pda();
        let g = a_hash_b_grammar();
        for w in all_words(&['a', 'b', '#'], 6) {
            assert_eq!(pda.accepts(&w).unwrap(), cyk_membership(&g, &w).is_some(), "{w:?}");
        }
        assert!(pda.accepts(&word("aa#bb")).unwrap());
    }

    #[test]
    fn finite_nfa_accepts_listed_words() {
        let n = finite_nfa(&['b'], &["b", "bb", "bbb"]);
        let accepted: Vec<_> = all_words(&['b'], 5).filter(|w| n.accepts(w).unwrap()).collect();
        assert_eq!(accepted, vec![word("b"), word("bb"), word("bbb")]);
    }

    #[test]
    fn random_generators_are_reproducible() {
        let a = random_pda(&mut corpus_rng(7), 4, &['a', 'b']);
        let b = random_pda(&mut corpus_rng(7), 4, &['a', 'b']);
        assert_eq!(a, b);
        let acyclic = random_acyclic_pda(&mut corpus_rng(3), 4, &['a', 'b']);
        assert!(all_words(&['a', 'b'], 6).filter(|w| w.len() >= 4).all(|w| !acyclic.accepts(&w).unwrap()));
    }
}
