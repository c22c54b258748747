// SPDX-License-Identifier: Apache-2.0

//! Worked examples through the public API.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use pdedit::distance::{nested_reach_empty, reach_set, word_to_nfa_distance};
use pdedit::fed::{
    edit_distance_cfg, edit_distance_compute, fed_bound, fed_decide, hat_closure, infinite_witness, FedOptions,
};
use pdedit::fixtures;
use pdedit::grammar::{compact_decomposition, cyk_membership, pda_to_cfg};
use pdedit::oracle::{oracle_sup_distance, OracleBudget};
use pdedit::ted::{inclusion, ted_decide};
use pdedit::{word, Distance, Error, Nfa, Pda};

#[test]
fn finite_source_language() {
    let source = Pda::from_nfa(&fixtures::finite_nfa(&['a', 'b'], &["b", "bb", "bbb"]));
    assert_eq!(edit_distance_compute(&source, &fixtures::a_star_nfa()), Distance::Finite(3));
}

#[test]
fn same_language_is_at_distance_zero() {
    let n = fixtures::a_star_b_nfa();
    assert_eq!(edit_distance_compute(&Pda::from_nfa(&n), &n), Distance::ZERO);
    assert!(inclusion(&fixtures::anbn_pda(), &fixtures::a_star_b_star_nfa()).holds);
}

#[test]
fn doubling_grammar_to_empty_word() {
    let g = fixtures::doubling_grammar(3);
    let d = edit_distance_cfg(&g, &fixtures::epsilon_dfa(&['a']), &FedOptions::default()).unwrap();
    assert_eq!(d.distance(), Distance::Finite(8));
}

#[test]
fn sigma_star_against_a_star() {
    let sigma = fixtures::sigma_star_pda(&['a', 'b']);
    let a_star = fixtures::a_star_nfa();
    for t in 0..4u32 {
        let out = ted_decide(&sigma, &a_star, &BigUint::from(t));
        assert!(!out.holds);
        assert_eq!(out.counterexample, Some(vec!['b'; t as usize + 1]));
    }
    assert!(!fed_decide(&sigma, &a_star).finite);
    let w = infinite_witness(&sigma, &a_star, 6).unwrap().unwrap();
    assert!(w.pumps.iter().any(|u| u.contains(&'b')));
}

#[test]
fn a_hash_b_against_a_star_or_b_star() {
    let p = fixtures::a_hash_b_pda();
    let n = fixtures::a_star_or_b_star_nfa();
    assert!(!fed_decide(&p, &n).finite);
    let w = infinite_witness(&p, &n, 6).unwrap().unwrap();
    assert!(nested_reach_empty(&w.pumps, &n.prefix_closure()));
    let mut previous = Distance::ZERO;
    for budget in [4, 6] {
        let d = oracle_sup_distance(&p, &n, &OracleBudget::with_source_len(budget)).unwrap();
        assert!(d >= previous && d >= Distance::Finite(1));
        previous = d;
    }
    let all: BTreeSet<usize> = (0..n.num_states()).collect();
    assert!(reach_set(&word("b"), &reach_set(&word("a"), &all, &n), &n).is_empty());
}

#[test]
fn witness_requires_an_infinite_distance() {
    let r = infinite_witness(&fixtures::anbn_pda(), &fixtures::a_star_b_star_nfa(), 6);
    assert!(matches!(r, Err(Error::Precondition(_))));
}

#[test]
fn decomposition_of_a_hash_b() {
    let g = fixtures::a_hash_b_grammar();
    let d = compact_decomposition(&g, &word("aaa#bbb")).unwrap();
    assert!(d.statics.iter().any(|s| s.contains(&'#')));
    assert!(d.pumps.iter().all(|u| !u.contains(&'#')));
    for ell in 0..4 {
        assert!(cyk_membership(&g, &d.pumped(ell)).is_some());
    }
}

#[test]
fn bound_grows_with_grammar_size() {
    let safety = fixtures::a_star_b_star_nfa().prefix_closure();
    let small = fed_bound(&fixtures::doubling_grammar(0), &safety).unwrap();
    let large = fed_bound(&pda_to_cfg(&fixtures::a_hash_b_pda()), &safety).unwrap();
    assert!(small.b < large.b);
    assert!(fed_bound(&fixtures::anbn_grammar(), &fixtures::a_star_b_nfa()).is_err());
}

#[test]
fn hat_of_single_letter() {
    let l = fixtures::finite_nfa(&['a'], &["a"]);
    let hat = hat_closure(&l, '#').unwrap();
    assert!(hat.accepts(&word("#a#a#")).unwrap());
    assert!(!hat.accepts(&word("#aa#")).unwrap());
    assert!(hat.accepts(&word("#")).unwrap());
    assert!(matches!(hat_closure(&l, 'a'), Err(Error::ReservedSymbol(_))));
}

#[test]
fn empty_target_is_infinitely_far() {
    let empty = Nfa::new(['a', 'b'], 1, [0], [], []).unwrap();
    assert_eq!(edit_distance_compute(&fixtures::anbn_pda(), &empty), Distance::Infinite);
    assert_eq!(word_to_nfa_distance(&word("ab"), &empty), Distance::Infinite);
}

#[test]
fn readme_sketch() {
    let pda = fixtures::anbn_pda();
    let nfa = fixtures::a_star_b_star_nfa();
    assert!(inclusion(&pda, &nfa).holds);
    assert!(ted_decide(&pda, &fixtures::a_star_nfa(), &BigUint::from(3u32)).counterexample.is_some());
    let d = edit_distance_compute(&fixtures::sigma_star_pda(&['a', 'b']), &fixtures::a_star_nfa());
    assert_eq!(d.to_string(), "∞");
}
