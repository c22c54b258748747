// SPDX-License-Identifier: Apache-2.0

//! Threshold edit distance: is `ed(L(pda), L(nfa)) ≤ t`?
//!
//! The pushdown automaton is run in lockstep with the capped distance
//! vectors `λ(s) = min(d_w^s, #)`, where `#` replaces every value above `t`.
//! A state `(q, λ)` of this impact automaton is final when `q` is final and
//! `λ(s) = #` for every final NFA state `s`, so the impact automaton accepts
//! exactly the words of `L(pda)` that are more than `t` edits away from
//! `L(nfa)`. The threshold holds iff it accepts nothing.
//!
//! Impact states are produced on demand by the emptiness saturation; only
//! the reachable part of `Q_P × {0..t, #}^{Q_N}` is ever built.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::automata::pushdown::{PushdownView, Saturation, SaturationStats};
use crate::automata::{Nfa, Pda};
use crate::distance::{Distance, EditCostTable};
use crate::error::{Error, Result};
use crate::Word;

const SHARP: u64 = u64::MAX;

/// Capped distance vector; `None` entries are `#`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ImpactVector(Vec<u64>);

impl ImpactVector {
    pub fn from_entries(entries: impl IntoIterator<Item = Option<u64>>) -> Self {
        ImpactVector(entries.into_iter().map(|e| e.unwrap_or(SHARP)).collect())
    }

    /// `λ(s)`, `None` for `#`.
    pub fn get(&self, s: usize) -> Option<u64> {
        (self.0[s] != SHARP).then_some(self.0[s])
    }

    pub fn is_sharp(&self, s: usize) -> bool {
        self.0[s] == SHARP
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = Option<u64>> + '_ {
        (0..self.len()).map(|s| self.get(s))
    }
}

impl fmt::Display for ImpactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match e {
                Some(v) => write!(f, "{v}")?,
                None => write!(f, "#")?,
            }
        }
        write!(f, ")")
    }
}

fn cap(d: Distance, t: u64) -> u64 {
    match d {
        Distance::Finite(v) if v <= t => v,
        _ => SHARP,
    }
}

fn as_distance(v: u64) -> Distance {
    if v == SHARP {
        Distance::Infinite
    } else {
        Distance::Finite(v)
    }
}

/// `λ₀(s) = min over initial s' of m(s, s', ε)`, capped at `t`.
pub fn impact_initial(nfa: &Nfa, table: &EditCostTable, t: u64) -> ImpactVector {
    ImpactVector(
        (0..nfa.num_states())
            .map(|s| {
                let d = nfa.initials().iter().map(|&i| table.get(s, i, None)).min();
                cap(d.unwrap_or(Distance::Infinite), t)
            })
            .collect(),
    )
}

/// `λ'(s) = min_{s'} (λ(s') + m(s, s', a))`, with `#` read as ∞ and values
/// above `t` mapped back to `#`.
pub fn impact_step(lambda: &ImpactVector, a: char, table: &EditCostTable, t: u64) -> ImpactVector {
    ImpactVector(
        (0..lambda.len())
            .map(|s| {
                let d = table
                    .column_for(s, Some(a))
                    .iter()
                    .zip(&lambda.0)
                    .map(|(&m, &v)| as_distance(v) + m)
                    .min()
                    .unwrap_or(Distance::Infinite);
                cap(d, t)
            })
            .collect(),
    )
}

/// The impact automaton of a PDA, an NFA and a threshold, explored lazily.
/// States are `(pda state, interned vector id)`.
pub struct ImpactPda<'a> {
    pda: &'a Pda,
    nfa: &'a Nfa,
    table: EditCostTable,
    t: u64,
    vectors: Vec<ImpactVector>,
    vector_ids: HashMap<ImpactVector, u32>,
    steps: HashMap<(u32, char), u32>,
}

impl<'a> ImpactPda<'a> {
    pub fn new(pda: &'a Pda, nfa: &'a Nfa, t: u64) -> Self {
        ImpactPda {
            pda,
            nfa,
            table: EditCostTable::build(nfa),
            t,
            vectors: Vec::new(),
            vector_ids: HashMap::new(),
            steps: HashMap::new(),
        }
    }

    fn intern(&mut self, v: ImpactVector) -> u32 {
        let next = self.vectors.len() as u32;
        let id = *self.vector_ids.entry(v.clone()).or_insert(next);
        if id == next {
            self.vectors.push(v);
        }
        id
    }

    fn step(&mut self, id: u32, a: char) -> u32 {
        if let Some(&next) = self.steps.get(&(id, a)) {
            return next;
        }
        let v = impact_step(&self.vectors[id as usize], a, &self.table, self.t);
        let next = self.intern(v);
        self.steps.insert((id, a), next);
        next
    }

    pub fn vector(&self, id: u32) -> &ImpactVector {
        &self.vectors[id as usize]
    }

    /// Distinct vectors met so far.
    pub fn num_vectors(&self) -> usize {
        self.vectors.len()
    }
}

impl PushdownView for ImpactPda<'_> {
    type State = (usize, u32);

    fn initial_states(&mut self) -> Vec<(usize, u32)> {
        let v = impact_initial(self.nfa, &self.table, self.t);
        let id = self.intern(v);
        self.pda.initials().iter().map(|&q| (q, id)).collect()
    }

    fn is_final(&mut self, &(q, id): &(usize, u32)) -> bool {
        self.pda.is_final(q) && self.nfa.finals().all(|s| self.vectors[id as usize].is_sharp(s))
    }

    fn transitions(&mut self, &(q, id): &(usize, u32), top: Option<char>) -> Vec<(char, (usize, u32), Vec<char>)> {
        let pda = self.pda;
        pda.transitions_from(q, top)
            .map(|tr| (tr.letter, (tr.to, self.step(id, tr.letter)), tr.push.clone()))
            .collect()
    }
}

/// Exploration limits for [`ted_decide_with`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TedOptions {
    /// Largest number of impact states to build before giving up.
    pub max_states: Option<usize>,
    /// Stop at the first violating word found instead of completing the
    /// exploration; the counterexample is then not necessarily shortest.
    pub first_counterexample: bool,
}

/// Counters of one decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TedStats {
    /// Reachable impact states `(q, λ)`.
    pub impact_states: usize,
    pub saturation: SaturationStats,
    /// `|Q_P| · (t + 2)^{|Q_N|}`.
    pub state_bound: BigUint,
}

/// Answer of the threshold check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TedOutcome {
    /// `ed(L(pda), L(nfa)) ≤ t`.
    pub holds: bool,
    /// When the threshold fails: a word of `L(pda)` more than `t` edits away
    /// from `L(nfa)`, shortest among such words unless
    /// [`TedOptions::first_counterexample`] is set.
    pub counterexample: Option<Word>,
    pub stats: TedStats,
}

/// Decides `ed(L(pda), L(nfa)) ≤ t`.
pub fn ted_decide(pda: &Pda, nfa: &Nfa, t: &BigUint) -> TedOutcome {
    ted_decide_with(pda, nfa, t, TedOptions::default()).expect("no limit")
}

/// [`ted_decide`] with exploration limits.
///
/// Thresholds beyond `u64` are clamped: no reachable vector entry can get
/// that large, so the answer is unchanged.
pub fn ted_decide_with(pda: &Pda, nfa: &Nfa, t: &BigUint, options: TedOptions) -> Result<TedOutcome> {
    let t_small = t.to_u64().unwrap_or(u64::MAX - 1).min(u64::MAX - 1);
    let view = ImpactPda::new(pda, nfa, t_small);
    let run = if options.first_counterexample { Saturation::run_until_nonempty } else { Saturation::run };
    let sat = run(view, options.max_states).map_err(|n| {
        Error::BudgetExceeded(format!("more than {} impact states at threshold {t}", n - 1))
    })?;
    let state_bound = BigUint::from(pda.num_states()) * (t + 2u32).pow(nfa.num_states() as u32);
    let impact_states = sat.states().len();
    assert!(
        BigUint::from(impact_states) <= state_bound,
        "{impact_states} impact states exceed the bound {state_bound}"
    );
    let counterexample = sat.shortest_witness();
    if let Some(w) = &counterexample {
        debug_assert!(pda.accepts(w).unwrap_or(false));
        debug_assert!(crate::distance::word_to_nfa_distance(w, nfa) > Distance::Finite(t_small));
    }
    Ok(TedOutcome {
        holds: counterexample.is_none(),
        counterexample,
        stats: TedStats { impact_states, saturation: sat.stats(), state_bound },
    })
}

/// `L(pda) ⊆ L(nfa)`, the threshold-zero case; the counterexample is a word
/// of `L(pda)` outside `L(nfa)`.
pub fn inclusion(pda: &Pda, nfa: &Nfa) -> TedOutcome {
    ted_decide(pda, nfa, &BigUint::from(0u32))
}
