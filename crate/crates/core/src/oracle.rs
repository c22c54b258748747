// SPDX-License-Identifier: Apache-2.0

//! Brute-force reference implementations.
//!
//! Everything here works by enumerating words and computing plain
//! Levenshtein distances; nothing depends on the edit-cost table or the
//! impact construction, so these functions can be used to check them.
//!
//! Word-to-language distances are exact. Let `w'` be a word of `L` with
//! `|w'| = s` minimal. Then `ed(w, w') ≤ max(|w|, s)`. Any `v` satisfies
//! `ed(w, v) ≥ |v| - |w|`, so a `v` longer than `|w| + max(|w|, s)` cannot
//! beat `w'`, and enumerating targets up to that length finds the minimum.
//! The shorter bound `|w| + s + 1` is not enough: a longer word can be
//! closer than every short one when `w` is long and `s` small (see
//! `long_targets_can_be_closer` in the tests: `ε ∈ L`, yet `ed("acaa", L) = 2`
//! is attained only by `"bacaac"`).
//!
//! Distances between languages are only lower bounds: the supremum is
//! taken over source words up to a length budget.

use std::collections::{BTreeSet, HashSet};

use crate::automata::{Nfa, Pda, PdaConfiguration};
use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::Word;

/// Enumeration limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Longest source word enumerated.
    pub source_len: usize,
    /// Longest target word enumerated.
    pub target_len: usize,
    /// Largest set of PDA configurations tracked for one prefix.
    pub config_cap: usize,
}

impl OracleBudget {
    pub fn new(source_len: usize, target_len: usize, config_cap: usize) -> Result<Self> {
        if source_len == 0 || target_len == 0 || config_cap == 0 {
            return Err(Error::Precondition("oracle budgets must be positive".into()));
        }
        Ok(OracleBudget { source_len, target_len, config_cap })
    }

    pub fn with_source_len(source_len: usize) -> Self {
        OracleBudget { source_len: source_len.max(1), ..Self::default() }
    }
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { source_len: 8, target_len: 64, config_cap: 1 << 16 }
    }
}

/// All words over `alphabet` of length at most `max_len`, in
/// length-lexicographic order.
pub fn all_words(alphabet: &[char], max_len: usize) -> impl Iterator<Item = Word> + '_ {
    let mut letters = alphabet.to_vec();
    letters.sort_unstable();
    letters.dedup();
    (0..=max_len).flat_map(move |len| {
        let letters = letters.clone();
        let total = if letters.is_empty() && len > 0 { 0 } else { letters.len().pow(len as u32) };
        (0..total).map(move |mut i| {
            let mut w = vec![' '; len];
            for slot in w.iter_mut().rev() {
                *slot = letters[i % letters.len()];
                i /= letters.len();
            }
            w
        })
    })
}

/// Accepted words of `pda` up to `max_len`, in length-lexicographic order.
pub fn pda_words(pda: &Pda, max_len: usize, config_cap: usize) -> Result<Vec<Word>> {
    let mut letters = pda.alphabet().to_vec();
    letters.sort_unstable();
    let mut out = Vec::new();
    let start: HashSet<PdaConfiguration> = pda
        .initial_configurations()
        .into_iter()
        .collect();
    let mut level: Vec<(Word, HashSet<PdaConfiguration>)> = vec![(Vec::new(), start)];
    for depth in 0..=max_len {
        for (w, configs) in &level {
            if configs.iter().any(|c| pda.is_accepting(c)) {
                out.push(w.clone());
            }
        }
        if depth == max_len {
            break;
        }
        let remaining = max_len - depth - 1;
        let mut next = Vec::new();
        for (w, configs) in &level {
            for &a in &letters {
                let succ: HashSet<PdaConfiguration> = configs
                    .iter()
                    .flat_map(|c| pda.successors(c, a))
                    .filter(|c| c.stack.len() <= remaining)
                    .collect();
                if succ.len() > config_cap {
                    return Err(Error::BudgetExceeded(format!(
                        "{} configurations after {} letters",
                        succ.len(),
                        depth + 1
                    )));
                }
                if !succ.is_empty() {
                    let mut w2 = w.clone();
                    w2.push(a);
                    next.push((w2, succ));
                }
            }
        }
        level = next;
    }
    Ok(out)
}

/// Accepted words of `nfa` up to `max_len`, by brute-force enumeration.
pub fn nfa_words(nfa: &Nfa, max_len: usize) -> Vec<Word> {
    all_words(nfa.alphabet(), max_len)
        .filter(|w| nfa.accepts(w).expect("letters from the alphabet"))
        .collect()
}

/// `min_{w' ∈ L(nfa)} ed(w, w')` by enumerating target words.
pub fn oracle_word_to_language(w: &[char], nfa: &Nfa, budget: &OracleBudget) -> Distance {
    let Some(shortest) = nfa.shortest_accepted_len() else {
        return Distance::Infinite;
    };
    let bound = (w.len() + w.len().max(shortest)).min(budget.target_len);
    let mut letters = nfa.alphabet().to_vec();
    letters.sort_unstable();
    let start_row: Vec<u64> = (0..=w.len() as u64).collect();
    let start: BTreeSet<usize> = nfa.initials().iter().copied().collect();
    let mut best = u64::MAX;
    let mut stack = vec![(start, start_row, 0usize)];
    while let Some((states, row, depth)) = stack.pop() {
        // row[j] = ed(current target prefix, w[..j])
        if states.iter().any(|&s| nfa.is_final(s)) {
            best = best.min(row[w.len()]);
        }
        if depth == bound || row.iter().copied().min().unwrap_or(0) >= best {
            continue;
        }
        for &a in letters.iter().rev() {
            let next = nfa.step(&states, a);
            if next.is_empty() {
                continue;
            }
            let mut new_row = vec![row[0] + 1; w.len() + 1];
            for j in 1..=w.len() {
                new_row[j] = (row[j] + 1)
                    .min(new_row[j - 1] + 1)
                    .min(row[j - 1] + u64::from(w[j - 1] != a));
            }
            stack.push((next, new_row, depth + 1));
        }
    }
    if best == u64::MAX {
        Distance::Infinite
    } else {
        Distance::Finite(best)
    }
}

/// `max_{w ∈ L(pda), |w| ≤ budget.source_len} ed(w, L(nfa))`, a lower bound
/// on the distance between the languages.
pub fn oracle_sup_distance(pda: &Pda, nfa: &Nfa, budget: &OracleBudget) -> Result<Distance> {
    let words = pda_words(pda, budget.source_len, budget.config_cap)?;
    Ok(words
        .iter()
        .map(|w| oracle_word_to_language(w, nfa, budget))
        .max()
        .unwrap_or(Distance::ZERO))
}

/// Truncated threshold check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleTed {
    /// A source word farther than the threshold from the target language.
    ViolationFound(Word),
    NoViolationWithinBudget,
}

/// Looks for a source word (length-lexicographically first) whose distance
/// to the target language exceeds `t`.
pub fn oracle_ted(pda: &Pda, nfa: &Nfa, t: u64, budget: &OracleBudget) -> Result<OracleTed> {
    let words = pda_words(pda, budget.source_len, budget.config_cap)?;
    Ok(words
        .into_iter()
        .find(|w| oracle_word_to_language(w, nfa, budget) > Distance::Finite(t))
        .map_or(OracleTed::NoViolationWithinBudget, OracleTed::ViolationFound))
}
