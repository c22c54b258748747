// SPDX-License-Identifier: Apache-2.0

//! Finite edit distance and exact distance computation.
//!
//! Let `N` be the target NFA and `pref N` the safety automaton of its prefix
//! closure, with `n` states. Every prefix of a word of `L(N)` extends to a
//! word of `L(N)` with fewer than `n` extra letters, so
//!
//! ```text
//! ed(P, N) ≥ ed(P, pref N) ≥ ed(P, N) - n
//! ```
//!
//! and the two distances are finite together. For a grammar with `T`
//! nonterminals the distance to a safety automaton with `n` states is
//! infinite iff it exceeds `B = (2^{T+1} - 2)·n + 2^T`, so finiteness is one
//! threshold check at `B`, and a finite distance is at most `B + n`.
//!
//! An infinite distance can also be certified by a word whose compact
//! decomposition has pumpable parts `u_1 … u_k` with
//! `R(u_k, … R(u_1, Q) …) = ∅`: pumping it `ℓ` times gives a word at least
//! `ℓ` edits away from the safety language.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::automata::{pda_emptiness, Nfa, Pda, PdaTransition};
use crate::distance::{nested_reach_empty, Distance};
use crate::error::{Error, Result};
use crate::grammar::{cfg_to_pda, compact_decomposition, pda_to_cfg, Cfg, CompactDecomposition};
use crate::oracle::pda_words;
use crate::ted::{ted_decide_with, TedOptions};
use crate::Word;

/// The bound `B` and the quantities it is computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// Nonterminals of the grammar, `T`.
    pub t: usize,
    /// States of the safety automaton, `n`.
    pub n: usize,
    /// `(2^{T+1} - 2)·n + 2^T`.
    pub b: BigUint,
    /// Slack between the distance to the automaton and to its prefix
    /// closure.
    pub adjustment: usize,
}

impl BoundReport {
    /// `B + adjustment`, the largest possible finite distance.
    pub fn search_limit(&self) -> BigUint {
        &self.b + self.adjustment
    }
}

/// `(2^{T+1} - 2)·n + 2^T`, for `T ≥ 1`.
pub fn bound_value(t: usize, n: usize) -> Result<BigUint> {
    if t == 0 {
        return Err(Error::Precondition("a grammar has at least one nonterminal".into()));
    }
    let two = BigUint::from(2u32);
    let t = t as u32;
    Ok((two.pow(t + 1) - 2u32) * n + two.pow(t))
}

/// The bound for a grammar and a safety automaton.
pub fn fed_bound(g: &Cfg, safety: &Nfa) -> Result<BoundReport> {
    if !safety.is_safety() {
        return Err(Error::Precondition("the target automaton has non-final states".into()));
    }
    let t = g.num_nonterminals();
    Ok(BoundReport { t, n: safety.num_states(), b: bound_value(t, safety.num_states())?, adjustment: safety.num_states() })
}

/// How a finiteness verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    /// `L(pda) = ∅`: the distance is 0.
    EmptySource,
    /// `L(nfa) = ∅` and `L(pda) ≠ ∅`: the distance is ∞.
    EmptyTarget,
    /// `L(pda) ⊆ L(nfa)`: the distance is 0.
    Inclusion,
    /// A pumpable word whose nested reachability set is empty.
    Witness,
    /// A threshold check against the target held at a small threshold.
    SmallThreshold,
    /// Threshold check against the prefix closure at `B`.
    Bound,
}

/// Result of the finiteness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FedAnalysis {
    pub finite: bool,
    pub decision: Decision,
    /// Present unless a source or target language was empty.
    pub bound: Option<BoundReport>,
    /// Certificate of infinity, when one was found.
    pub witness: Option<CompactDecomposition>,
    /// For [`Decision::Bound`] with an infinite verdict: a word of `L(pda)`
    /// more than `B` edits away from the prefix closure; for
    /// [`Decision::EmptyTarget`]: an accepted word.
    pub counterexample: Option<Word>,
    /// Impact states built by the threshold checks.
    pub explored_states: usize,
}

/// Finiteness verdict with the exact distance when finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FedVerdict {
    Finite(u64),
    Infinite(Option<CompactDecomposition>),
}

impl FedVerdict {
    pub fn distance(&self) -> Distance {
        match self {
            FedVerdict::Finite(d) => Distance::Finite(*d),
            FedVerdict::Infinite(_) => Distance::Infinite,
        }
    }
}

/// Knobs for the finiteness check and the distance search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FedOptions {
    /// Largest number of impact states per threshold check.
    pub max_states: Option<usize>,
    /// Try an inclusion check, a short witness search and thresholds up to
    /// 255 against the target before the threshold check at `B`.
    pub shortcuts: bool,
    /// Longest source word tried by the witness search.
    pub witness_len: usize,
}

impl Default for FedOptions {
    fn default() -> Self {
        FedOptions { max_states: None, shortcuts: true, witness_len: 12 }
    }
}

/// Decides whether `ed(L(pda), L(nfa))` is finite.
pub fn fed_decide(pda: &Pda, nfa: &Nfa) -> FedAnalysis {
    fed_decide_with(pda, nfa, &FedOptions::default()).expect("no limit")
}

/// [`fed_decide`] with options; `T` is taken from [`pda_to_cfg`].
pub fn fed_decide_with(pda: &Pda, nfa: &Nfa, options: &FedOptions) -> Result<FedAnalysis> {
    decide(pda, &pda_to_cfg(pda), nfa, options)
}

/// Finiteness for a grammar source; `T` is the grammar's own nonterminal
/// count.
pub fn fed_decide_cfg(g: &Cfg, nfa: &Nfa, options: &FedOptions) -> Result<FedAnalysis> {
    decide(&cfg_to_pda(g), g, nfa, options)
}

/// Largest threshold tried before the check at `B`.
const SMALL_THRESHOLD_LIMIT: u64 = 255;

fn ted_options(options: &FedOptions, first_counterexample: bool) -> TedOptions {
    TedOptions { max_states: options.max_states, first_counterexample }
}

fn decide(pda: &Pda, g: &Cfg, nfa: &Nfa, options: &FedOptions) -> Result<FedAnalysis> {
    let emptiness = pda_emptiness(pda);
    let mut analysis = FedAnalysis {
        finite: true,
        decision: Decision::EmptySource,
        bound: None,
        witness: None,
        counterexample: None,
        explored_states: 0,
    };
    let Some(accepted) = emptiness.witness else {
        return Ok(analysis);
    };
    let safety = nfa.prefix_closure();
    if safety.num_states() == 0 {
        analysis.finite = false;
        analysis.decision = Decision::EmptyTarget;
        analysis.witness = compact_decomposition(g, &accepted).ok();
        analysis.counterexample = Some(accepted);
        return Ok(analysis);
    }
    let bound = fed_bound(g, &safety)?;
    if options.shortcuts {
        let inclusion = ted_decide_with(pda, nfa, &BigUint::zero(), ted_options(options, true))?;
        analysis.explored_states += inclusion.stats.impact_states;
        if inclusion.holds {
            analysis.decision = Decision::Inclusion;
            analysis.bound = Some(bound);
            return Ok(analysis);
        }
        if let Some(d) = witness_search(pda, g, &safety, options.witness_len) {
            analysis.finite = false;
            analysis.decision = Decision::Witness;
            analysis.witness = Some(d);
            analysis.bound = Some(bound);
            return Ok(analysis);
        }
        let mut t = 1u64;
        while BigUint::from(t) < bound.b && t <= SMALL_THRESHOLD_LIMIT {
            // over-budget probes are inconclusive
            if let Ok(out) = ted_decide_with(pda, nfa, &BigUint::from(t), ted_options(options, true)) {
                analysis.explored_states += out.stats.impact_states;
                if out.holds {
                    analysis.decision = Decision::SmallThreshold;
                    analysis.bound = Some(bound);
                    return Ok(analysis);
                }
            }
            t = 2 * t + 1;
        }
    }
    let out = ted_decide_with(pda, &safety, &bound.b, ted_options(options, true))?;
    analysis.explored_states += out.stats.impact_states;
    analysis.finite = out.holds;
    analysis.decision = Decision::Bound;
    analysis.counterexample = out.counterexample;
    analysis.bound = Some(bound);
    Ok(analysis)
}

/// Searches accepted words, shortest first, for one whose compact
/// decomposition has an empty nested reachability set.
fn witness_search(pda: &Pda, g: &Cfg, safety: &Nfa, max_len: usize) -> Option<CompactDecomposition> {
    let words = pda_words(pda, max_len, 1 << 16).ok()?;
    words
        .iter()
        .filter_map(|w| compact_decomposition(g, w).ok())
        .find(|d| nested_reach_empty(&d.pumps, safety))
}

/// A certificate that `ed(L(pda), L(nfa)) = ∞`, searched among accepted
/// words of length at most `max_len`.
///
/// Fails with a precondition error when the distance is finite.
pub fn infinite_witness(pda: &Pda, nfa: &Nfa, max_len: usize) -> Result<Option<CompactDecomposition>> {
    let g = pda_to_cfg(pda);
    let analysis = decide(pda, &g, nfa, &FedOptions { witness_len: max_len, ..FedOptions::default() })?;
    if analysis.finite {
        return Err(Error::Precondition("the edit distance is finite".into()));
    }
    if analysis.witness.is_some() {
        return Ok(analysis.witness);
    }
    Ok(witness_search(pda, &g, &nfa.prefix_closure(), max_len))
}

/// Exact distance with the finiteness analysis and the thresholds probed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub verdict: FedVerdict,
    pub analysis: FedAnalysis,
    /// Thresholds checked against the target automaton, with the answers.
    pub probes: Vec<(BigUint, bool)>,
}

impl DistanceReport {
    pub fn distance(&self) -> Distance {
        self.verdict.distance()
    }
}

/// `ed(L(pda), L(nfa))`.
pub fn edit_distance_compute(pda: &Pda, nfa: &Nfa) -> Distance {
    edit_distance_with(pda, nfa, &FedOptions::default()).expect("no limit").distance()
}

pub fn edit_distance_with(pda: &Pda, nfa: &Nfa, options: &FedOptions) -> Result<DistanceReport> {
    compute(pda, &pda_to_cfg(pda), nfa, options)
}

/// Distance from a grammar's language; `T` is the grammar's own count.
pub fn edit_distance_cfg(g: &Cfg, nfa: &Nfa, options: &FedOptions) -> Result<DistanceReport> {
    compute(&cfg_to_pda(g), g, nfa, options)
}

fn compute(pda: &Pda, g: &Cfg, nfa: &Nfa, options: &FedOptions) -> Result<DistanceReport> {
    let analysis = decide(pda, g, nfa, options)?;
    let mut probes = Vec::new();
    if !analysis.finite {
        let verdict = FedVerdict::Infinite(analysis.witness.clone());
        return Ok(DistanceReport { verdict, analysis, probes });
    }
    let Some(bound) = analysis.bound.clone().filter(|_| analysis.decision != Decision::Inclusion) else {
        return Ok(DistanceReport { verdict: FedVerdict::Finite(0), analysis, probes });
    };
    let limit = bound.search_limit();
    let mut probe = |t: &BigUint| -> Result<bool> {
        let holds = ted_decide_with(pda, nfa, t, ted_options(options, true))?.holds;
        probes.push((t.clone(), holds));
        Ok(holds)
    };
    // galloping: 0, 1, 3, 7, … until the threshold holds
    let mut lo = BigUint::zero(); // every t < lo fails
    let mut step = BigUint::one();
    let hi = loop {
        let t = (&lo + &step - 1u32).min(limit.clone());
        if probe(&t)? {
            break t;
        }
        assert!(t < limit, "finite distance above B + n");
        lo = t + 1u32;
        step *= 2u32;
    };
    let (mut lo, mut hi) = (lo, hi);
    while lo < hi {
        let mid = (&lo + &hi) / 2u32;
        if probe(&mid)? {
            hi = mid;
        } else {
            lo = mid + 1u32;
        }
    }
    let d = hi.to_u64().expect("distances fit in 64 bits");
    Ok(DistanceReport { verdict: FedVerdict::Finite(d), analysis, probes })
}

/// Outcome of [`bounded_distance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedDistance {
    Exact(u64),
    Infinite(Option<CompactDecomposition>),
    /// The distance exceeds the given value or is infinite.
    Above(u64),
}

/// Distance search that skips the threshold check at `B`: looks for an
/// infinity witness, then probes thresholds up to `t_max` against the target.
pub fn bounded_distance(pda: &Pda, nfa: &Nfa, t_max: u64, options: &FedOptions) -> Result<BoundedDistance> {
    let Some(accepted) = pda_emptiness(pda).witness else {
        return Ok(BoundedDistance::Exact(0));
    };
    let g = pda_to_cfg(pda);
    let safety = nfa.prefix_closure();
    if safety.num_states() == 0 {
        return Ok(BoundedDistance::Infinite(compact_decomposition(&g, &accepted).ok()));
    }
    if let Some(d) = witness_search(pda, &g, &safety, options.witness_len) {
        return Ok(BoundedDistance::Infinite(Some(d)));
    }
    let probe = |t: u64| -> Result<bool> {
        Ok(ted_decide_with(pda, nfa, &BigUint::from(t), ted_options(options, true))?.holds)
    };
    let mut lo = 0u64;
    let mut step = 1u64;
    let mut hi = loop {
        let t = lo.saturating_add(step - 1).min(t_max);
        if probe(t)? {
            break t;
        }
        if t == t_max {
            return Ok(BoundedDistance::Above(t_max));
        }
        lo = t + 1;
        step = step.saturating_mul(2);
    };
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if probe(mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(BoundedDistance::Exact(hi))
}

/// The `#`-closure `{#w_1#…#w_k# | k ≥ 0, w_i ∈ L}` of a language.
///
/// The distance between two closures is finite iff the first language is
/// included in the second.
pub trait HatClosure: Sized {
    fn hat_closure(&self, marker: char) -> Result<Self>;
}

/// Shared construction: a fresh initial state `entry` reads the first
/// marker into a fresh final state `hub`, which behaves like the initial
/// states; every final state reads a marker back into `hub`. For a PDA the
/// added moves need an empty stack.
struct HatShape {
    entry: usize,
    hub: usize,
}

fn hat_shape(num_states: usize) -> HatShape {
    HatShape { entry: num_states, hub: num_states + 1 }
}

impl HatClosure for Nfa {
    fn hat_closure(&self, marker: char) -> Result<Nfa> {
        if self.has_letter(marker) {
            return Err(Error::ReservedSymbol(marker));
        }
        let HatShape { entry, hub } = hat_shape(self.num_states());
        let mut trans = self.transitions().to_vec();
        trans.push((entry, marker, hub));
        for &(p, a, q) in self.transitions() {
            if self.is_initial(p) {
                trans.push((hub, a, q));
            }
        }
        for f in self.finals() {
            trans.push((f, marker, hub));
            if self.is_initial(f) {
                trans.push((hub, marker, hub));
            }
        }
        let alphabet = self.alphabet().iter().copied().chain([marker]);
        Nfa::new(alphabet, self.num_states() + 2, [entry], [hub], trans)
    }
}

impl HatClosure for Pda {
    fn hat_closure(&self, marker: char) -> Result<Pda> {
        if self.has_letter(marker) {
            return Err(Error::ReservedSymbol(marker));
        }
        let HatShape { entry, hub } = hat_shape(self.num_states());
        let mark = |from, to| PdaTransition { from, letter: marker, top: None, to, push: Vec::new() };
        let mut trans = self.transitions().to_vec();
        trans.push(mark(entry, hub));
        for t in self.transitions() {
            if self.initials().contains(&t.from) && t.top.is_none() {
                trans.push(PdaTransition { from: hub, ..t.clone() });
            }
        }
        for f in self.finals() {
            trans.push(mark(f, hub));
            if self.initials().contains(&f) {
                trans.push(mark(hub, hub));
            }
        }
        Pda::new(
            self.alphabet().iter().copied().chain([marker]),
            self.stack_alphabet().iter().copied(),
            self.num_states() + 2,
            [entry],
            [hub],
            trans,
        )
    }
}

/// `aut.hat_closure(marker)`.
pub fn hat_closure<A: HatClosure>(aut: &A, marker: char) -> Result<A> {
    aut.hat_closure(marker)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::all_words;
    use crate::{fixtures, word};

    #[test]
    fn bound_arithmetic() {
        assert_eq!(bound_value(1, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(bound_value(2, 3).unwrap(), BigUint::from(22u32));
        assert!(matches!(bound_value(0, 3), Err(Error::Precondition(_))));
        let g = fixtures::anbn_grammar();
        assert!(fed_bound(&g, &fixtures::a_star_b_nfa()).is_err());
        let r = fed_bound(&g, &fixtures::a_star_b_star_nfa()).unwrap();
        assert_eq!(r.b, bound_value(g.num_nonterminals(), 2).unwrap());
        assert_eq!(r.search_limit(), &r.b + 2u32);
    }

    #[test]
    fn fed_examples() {
        let a = fed_decide(&fixtures::a_hash_b_pda(), &fixtures::a_star_or_b_star_nfa());
        assert!(!a.finite);
        let d = a.witness.expect("a short witness exists");
        assert!(nested_reach_empty(&d.pumps, &fixtures::a_star_or_b_star_nfa().prefix_closure()));

        assert!(fed_decide(&fixtures::anbn_pda(), &fixtures::a_star_b_star_nfa()).finite);
        let a_star = fixtures::sigma_star_pda(&['a']);
        assert!(fed_decide(&a_star, &fixtures::sigma_star_nfa(&['a', 'b'])).finite);
    }

    #[test]
    fn bound_route_agrees_with_shortcuts() {
        let plain = FedOptions { shortcuts: false, ..FedOptions::default() };
        let sigma = fixtures::sigma_star_pda(&['a', 'b']);
        let a = fed_decide_with(&sigma, &fixtures::a_star_nfa(), &plain).unwrap();
        assert_eq!((a.finite, a.decision), (false, Decision::Bound));
        let w = a.counterexample.unwrap();
        let b = a.bound.unwrap().b.to_u64().unwrap();
        assert!(crate::distance::word_to_nfa_distance(&w, &fixtures::a_star_nfa()) > Distance::Finite(b));

        let g = fixtures::a_hash_b_grammar();
        let a = fed_decide_cfg(&g, &fixtures::a_star_or_b_star_nfa(), &plain).unwrap();
        assert_eq!((a.finite, a.decision), (false, Decision::Bound));
        let a = fed_decide_cfg(&fixtures::anbn_grammar(), &fixtures::a_star_b_star_nfa(), &plain).unwrap();
        assert_eq!((a.finite, a.decision), (true, Decision::Bound));
    }

    #[test]
    fn empty_language_conventions() {
        let empty_pda = Pda::new(['a'], ['A'], 1, [0], [], []).unwrap();
        let a = fed_decide(&empty_pda, &Nfa::new(['a'], 1, [0], [], []).unwrap());
        assert_eq!((a.finite, a.decision), (true, Decision::EmptySource));
        assert_eq!(edit_distance_compute(&empty_pda, &fixtures::a_star_nfa()), Distance::ZERO);

        let empty_nfa = Nfa::new(['a', 'b'], 2, [0], [], [(0, 'a', 1)]).unwrap();
        let a = fed_decide(&fixtures::anbn_pda(), &empty_nfa);
        assert_eq!((a.finite, a.decision), (false, Decision::EmptyTarget));
        assert_eq!(a.counterexample, Some(word("")));
        assert_eq!(edit_distance_compute(&fixtures::anbn_pda(), &empty_nfa), Distance::Infinite);
    }

    #[test]
    fn distance_examples() {
        let bs = Pda::from_nfa(&fixtures::finite_nfa(&['a', 'b'], &["b", "bb", "bbb"]));
        assert_eq!(edit_distance_compute(&bs, &fixtures::a_star_nfa()), Distance::Finite(3));
        let a_star_b = fixtures::a_star_b_nfa();
        assert_eq!(edit_distance_compute(&Pda::from_nfa(&a_star_b), &a_star_b), Distance::ZERO);
        let g = fixtures::doubling_grammar(3);
        let r = edit_distance_cfg(&g, &fixtures::epsilon_dfa(&['a']), &FedOptions::default()).unwrap();
        assert_eq!(r.verdict, FedVerdict::Finite(8));
        let sigma = fixtures::sigma_star_pda(&['a', 'b']);
        assert_eq!(edit_distance_compute(&sigma, &fixtures::a_star_nfa()), Distance::Infinite);
    }

    #[test]
    fn probes_bracket_the_distance() {
        let bs = Pda::from_nfa(&fixtures::finite_nfa(&['a', 'b'], &["bbbbb"]));
        let r = edit_distance_with(&bs, &fixtures::a_star_nfa(), &FedOptions::default()).unwrap();
        assert_eq!(r.distance(), Distance::Finite(5));
        for (t, holds) in &r.probes {
            assert_eq!(*holds, *t >= BigUint::from(5u32));
        }
    }

    #[test]
    fn witness_examples() {
        let d = infinite_witness(&fixtures::a_hash_b_pda(), &fixtures::a_star_or_b_star_nfa(), 6)
            .unwrap()
            .expect("witness");
        assert!(d.pumps.iter().any(|u| u.contains(&'a')));
        assert!(d.pumps.iter().any(|u| u.contains(&'b')));
        assert!(matches!(
            infinite_witness(&fixtures::anbn_pda(), &fixtures::a_star_b_star_nfa(), 6),
            Err(Error::Precondition(_))
        ));
        let d = infinite_witness(&fixtures::sigma_star_pda(&['a', 'b']), &fixtures::a_star_nfa(), 6)
            .unwrap()
            .expect("witness");
        assert!(d.pumps.iter().any(|u| u.contains(&'b')));
    }

    #[test]
    fn bounded_distance_examples() {
        let opts = FedOptions::default();
        let sigma = fixtures::sigma_star_pda(&['a', 'b']);
        assert!(matches!(
            bounded_distance(&sigma, &fixtures::a_star_nfa(), 10, &opts).unwrap(),
            BoundedDistance::Infinite(Some(_))
        ));
        let g = crate::grammar::cfg_to_pda(&fixtures::doubling_grammar(3));
        let eps = fixtures::epsilon_dfa(&['a']);
        assert_eq!(bounded_distance(&g, &eps, 10, &opts).unwrap(), BoundedDistance::Exact(8));
        assert_eq!(bounded_distance(&g, &eps, 5, &opts).unwrap(), BoundedDistance::Above(5));
    }

    #[test]
    fn hat_closure_of_single_letter() {
        let a = fixtures::finite_nfa(&['a'], &["a"]);
        let hat = a.hat_closure('#').unwrap();
        let accepted: Vec<String> = all_words(&['a', '#'], 6)
            .filter(|w| hat.accepts(w).unwrap())
            .map(|w| w.into_iter().collect())
            .collect();
        assert_eq!(accepted, ["#", "#a#", "#a#a#"]);
        assert!(matches!(a.hat_closure('a'), Err(Error::ReservedSymbol('a'))));

        let empty = Nfa::new(['a'], 1, [0], [], []).unwrap();
        let hat = hat_closure(&empty, '#').unwrap();
        let accepted: Vec<_> = all_words(&['a', '#'], 5).filter(|w| hat.accepts(w).unwrap()).collect();
        assert_eq!(accepted, vec![word("#")]);
    }

    #[test]
    fn pda_hat_closure_matches_definition() {
        let pda = fixtures::anbn_pda();
        let hat = pda.hat_closure('#').unwrap();
        for w in all_words(&['a', 'b', '#'], 7) {
            let expected = !w.is_empty()
                && w[0] == '#'
                && w[w.len() - 1] == '#'
                && w[1..].split(|&c| c == '#').take(w[1..].split(|&c| c == '#').count() - 1).all(|block| {
                    let n = block.len() / 2;
                    block.len() % 2 == 0 && block[..n].iter().all(|&c| c == 'a') && block[n..].iter().all(|&c| c == 'b')
                });
            assert_eq!(hat.accepts(&w).unwrap(), expected, "{w:?}");
        }
    }
}
