// SPDX-License-Identifier: Apache-2.0

//! Emptiness of real-time pushdown automata.
//!
//! Input letters are erased, which turns the automaton into a pushdown
//! system. The empty stack is represented by an explicit bottom symbol that
//! is never popped except by a final "accept" rule, and push strings are
//! normalized to length at most two by threading fresh intermediate control
//! locations between the pushed symbols.
//!
//! Reachability of `(final, empty stack)` from `(initial, empty stack)` is
//! then decided by saturation over *summaries*: a summary `(loc, γ) ⇝ r`
//! records that the system started in `loc` with `γ` on top can remove that
//! `γ` and reach `r` without touching the rest of the stack. Summaries are
//! only computed for `(loc, γ)` pairs that are reachable from an initial
//! configuration, so implicit automata (see [`PushdownView`]) are explored
//! lazily.
//!
//! When the language is nonempty a shortest accepted word is recovered by a
//! second pass over the discovered summaries (Knuth's generalization of
//! Dijkstra's algorithm, each letter costing one).

use std::cmp::Reverse;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::hash::Hash;

use super::Pda;

/// A pushdown automaton whose transitions are produced on demand.
pub trait PushdownView {
    type State: Clone + Eq + Hash;

    fn initial_states(&mut self) -> Vec<Self::State>;

    fn is_final(&mut self, state: &Self::State) -> bool;

    /// Transitions `(letter, target, push)` leaving `state` when the stack top
    /// is `top` (`None` for the empty stack).
    fn transitions(&mut self, state: &Self::State, top: Option<char>) -> Vec<(char, Self::State, Vec<char>)>;
}

impl PushdownView for &Pda {
    type State = usize;

    fn initial_states(&mut self) -> Vec<usize> {
        self.initials().to_vec()
    }

    fn is_final(&mut self, state: &usize) -> bool {
        Pda::is_final(self, *state)
    }

    fn transitions(&mut self, state: &usize, top: Option<char>) -> Vec<(char, usize, Vec<char>)> {
        self.transitions_from(*state, top)
            .map(|t| (t.letter, t.to, t.push.clone()))
            .collect()
    }
}

/// Control location of the normalized system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Location {
    /// A state of the automaton (interned id).
    State(u32),
    /// Intermediate location `index` of push chain `chain`.
    Mid { chain: u32, index: u32 },
    /// Sink reached by popping the bottom symbol in a final state.
    Accept,
}

/// Stack symbol of the normalized system; `0` is the bottom marker.
pub type Sym = u32;

pub const BOTTOM_SYM: Sym = 0;

/// A normalized rule for a fixed `(location, top)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleKind {
    /// Pop the top and move to the location.
    Pop(Location),
    /// Replace the top by one symbol.
    Replace(Location, Sym),
    /// Replace the top by `below` then push `top` on it.
    Push { to: Location, below: Sym, top: Sym },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rule {
    pub letter: Option<char>,
    pub kind: RuleKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Waiter {
    /// Exits of this entry are exits of the parent entry.
    Forward(u32),
    /// On exit `m`, continue with entry `(m, sym)` forwarding to the parent.
    Then(u32, Sym),
}

#[derive(Debug, Default)]
struct EntryData {
    rules: Vec<Rule>,
    exits: Vec<Location>,
    exit_set: HashSet<Location>,
    waiters: Vec<Waiter>,
    waiter_set: HashSet<Waiter>,
}

/// Counters reported by the saturation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SaturationStats {
    /// Distinct automaton states discovered.
    pub states: usize,
    /// Reachable `(location, top)` entries.
    pub entries: usize,
    /// Summaries `(entry, exit)` derived.
    pub summaries: usize,
}

/// Outcome of the saturation: the normalized reachable system and its
/// summaries.
pub struct Saturation<V: PushdownView> {
    view: V,
    states: Vec<V::State>,
    state_ids: HashMap<V::State, u32>,
    symbols: Vec<char>,
    symbol_ids: HashMap<char, Sym>,
    chains: Vec<(Location, Vec<Sym>)>,
    chain_ids: HashMap<(Location, Vec<Sym>), u32>,
    entries: Vec<(Location, Sym)>,
    entry_ids: HashMap<(Location, Sym), u32>,
    data: Vec<EntryData>,
    goals: Vec<u32>,
}

enum Task {
    Explore(u32),
    AddExit(u32, Location),
    AddWaiter(u32, Waiter),
}

impl<V: PushdownView> Saturation<V> {
    /// Runs the saturation to its fixed point.
    ///
    /// `state_limit` bounds the number of distinct automaton states that may
    /// be discovered; `Err(count)` is returned when it is exceeded.
    pub fn run(view: V, state_limit: Option<usize>) -> Result<Self, usize> {
        Self::run_inner(view, state_limit, false)
    }

    /// Like [`Saturation::run`], but stops as soon as acceptance is known to
    /// be reachable. The summaries found so far still yield an accepted
    /// word, though not necessarily a shortest one.
    pub fn run_until_nonempty(view: V, state_limit: Option<usize>) -> Result<Self, usize> {
        Self::run_inner(view, state_limit, true)
    }

    fn run_inner(view: V, state_limit: Option<usize>, stop_when_nonempty: bool) -> Result<Self, usize> {
        let mut sat = Saturation {
            view,
            states: Vec::new(),
            state_ids: HashMap::new(),
            symbols: vec![super::BOTTOM],
            symbol_ids: HashMap::new(),
            chains: Vec::new(),
            chain_ids: HashMap::new(),
            entries: Vec::new(),
            entry_ids: HashMap::new(),
            data: Vec::new(),
            goals: Vec::new(),
        };
        let mut tasks = Vec::new();
        for s in sat.view.initial_states() {
            let id = sat.intern_state(s);
            let (e, new) = sat.entry(Location::State(id), BOTTOM_SYM);
            if new {
                tasks.push(Task::Explore(e));
            }
            if !sat.goals.contains(&e) {
                sat.goals.push(e);
            }
        }
        while let Some(task) = tasks.pop() {
            match task {
                Task::Explore(e) => {
                    let (loc, sym) = sat.entries[e as usize];
                    let rules = sat.rules_for(loc, sym);
                    if let Some(limit) = state_limit {
                        if sat.states.len() > limit {
                            return Err(sat.states.len());
                        }
                    }
                    for rule in &rules {
                        match rule.kind {
                            RuleKind::Pop(to) => tasks.push(Task::AddExit(e, to)),
                            RuleKind::Replace(to, s) => {
                                let (e2, new) = sat.entry(to, s);
                                if new {
                                    tasks.push(Task::Explore(e2));
                                }
                                tasks.push(Task::AddWaiter(e2, Waiter::Forward(e)));
                            }
                            RuleKind::Push { to, below, top } => {
                                let (e2, new) = sat.entry(to, top);
                                if new {
                                    tasks.push(Task::Explore(e2));
                                }
                                tasks.push(Task::AddWaiter(e2, Waiter::Then(e, below)));
                            }
                        }
                    }
                    sat.data[e as usize].rules = rules;
                }
                Task::AddExit(e, m) => {
                    if stop_when_nonempty && m == Location::Accept && sat.goals.contains(&e) {
                        let d = &mut sat.data[e as usize];
                        if d.exit_set.insert(m) {
                            d.exits.push(m);
                        }
                        break;
                    }
                    let d = &mut sat.data[e as usize];
                    if d.exit_set.insert(m) {
                        d.exits.push(m);
                        let fired: Vec<(Waiter, Location)> = d.waiters.iter().map(|&w| (w, m)).collect();
                        sat.fire(fired, &mut tasks);
                    }
                }
                Task::AddWaiter(e, w) => {
                    let d = &mut sat.data[e as usize];
                    if d.waiter_set.insert(w) {
                        d.waiters.push(w);
                        let fired: Vec<(Waiter, Location)> = d.exits.iter().map(|&m| (w, m)).collect();
                        sat.fire(fired, &mut tasks);
                    }
                }
            }
        }
        Ok(sat)
    }

    fn fire(&mut self, fired: Vec<(Waiter, Location)>, tasks: &mut Vec<Task>) {
        for (w, m) in fired {
            match w {
                Waiter::Forward(p) => tasks.push(Task::AddExit(p, m)),
                Waiter::Then(p, below) => {
                    let (e3, new) = self.entry(m, below);
                    if new {
                        tasks.push(Task::Explore(e3));
                    }
                    tasks.push(Task::AddWaiter(e3, Waiter::Forward(p)));
                }
            }
        }
    }

    fn intern_state(&mut self, s: V::State) -> u32 {
        match self.state_ids.entry(s) {
            Entry::Occupied(o) => *o.get(),
            Entry::Vacant(v) => {
                let id = self.states.len() as u32;
                self.states.push(v.key().clone());
                v.insert(id);
                id
            }
        }
    }

    fn intern_symbol(&mut self, c: char) -> Sym {
        *self.symbol_ids.entry(c).or_insert_with(|| {
            self.symbols.push(c);
            (self.symbols.len() - 1) as Sym
        })
    }

    fn entry(&mut self, loc: Location, sym: Sym) -> (u32, bool) {
        match self.entry_ids.entry((loc, sym)) {
            Entry::Occupied(o) => (*o.get(), false),
            Entry::Vacant(v) => {
                let id = self.entries.len() as u32;
                self.entries.push((loc, sym));
                self.data.push(EntryData::default());
                v.insert(id);
                (id, true)
            }
        }
    }

    /// Normalized rules applicable at `(loc, sym)`.
    fn rules_for(&mut self, loc: Location, sym: Sym) -> Vec<Rule> {
        match loc {
            Location::Accept => Vec::new(),
            Location::Mid { chain, index } => {
                let (target, ref push) = self.chains[chain as usize];
                let i = index as usize;
                if push[i] != sym {
                    return Vec::new();
                }
                let to = if i + 2 == push.len() {
                    target
                } else {
                    Location::Mid { chain, index: index + 1 }
                };
                vec![Rule {
                    letter: None,
                    kind: RuleKind::Push { to, below: push[i], top: push[i + 1] },
                }]
            }
            Location::State(id) => {
                let state = self.states[id as usize].clone();
                let top = (sym != BOTTOM_SYM).then(|| self.symbols[sym as usize]);
                let mut rules = Vec::new();
                if sym == BOTTOM_SYM && self.view.is_final(&state) {
                    rules.push(Rule { letter: None, kind: RuleKind::Pop(Location::Accept) });
                }
                for (letter, target, push) in self.view.transitions(&state, top) {
                    let target = Location::State(self.intern_state(target));
                    let mut full: Vec<Sym> = Vec::with_capacity(push.len() + 1);
                    if sym == BOTTOM_SYM {
                        full.push(BOTTOM_SYM);
                    }
                    for c in push {
                        full.push(self.intern_symbol(c));
                    }
                    let kind = match full.len() {
                        0 => RuleKind::Pop(target),
                        1 => RuleKind::Replace(target, full[0]),
                        2 => RuleKind::Push { to: target, below: full[0], top: full[1] },
                        _ => {
                            let below = full[0];
                            let top = full[1];
                            let key = (target, full);
                            let next = self.chains.len() as u32;
                            let chain = *self.chain_ids.entry(key.clone()).or_insert(next);
                            if chain == next {
                                self.chains.push(key);
                            }
                            RuleKind::Push { to: Location::Mid { chain, index: 1 }, below, top }
                        }
                    };
                    rules.push(Rule { letter: Some(letter), kind });
                }
                rules
            }
        }
    }

    pub fn stats(&self) -> SaturationStats {
        SaturationStats {
            states: self.states.len(),
            entries: self.entries.len(),
            summaries: self.data.iter().map(|d| d.exits.len()).sum(),
        }
    }

    /// True when some initial configuration can reach acceptance.
    pub fn is_nonempty(&self) -> bool {
        self.goals
            .iter()
            .any(|&g| self.data[g as usize].exit_set.contains(&Location::Accept))
    }

    pub fn view(&self) -> &V {
        &self.view
    }

    /// Discovered automaton states, indexed by their interned id.
    pub fn states(&self) -> &[V::State] {
        &self.states
    }

    /// Derivations of every summary, as hyperedges
    /// `(head, letter, tails)`; a summary is identified by `(entry, exit)`.
    pub fn derivations(&self) -> Vec<Derivation> {
        let mut out = Vec::new();
        for (e, d) in self.data.iter().enumerate() {
            let e = e as u32;
            for rule in &d.rules {
                match rule.kind {
                    RuleKind::Pop(to) => out.push(Derivation {
                        head: (e, to),
                        letter: rule.letter,
                        tails: Vec::new(),
                    }),
                    RuleKind::Replace(to, s) => {
                        let e2 = self.entry_ids[&(to, s)];
                        for &r in &self.data[e2 as usize].exits {
                            out.push(Derivation { head: (e, r), letter: rule.letter, tails: vec![(e2, r)] });
                        }
                    }
                    RuleKind::Push { to, below, top } => {
                        let e2 = self.entry_ids[&(to, top)];
                        for &m in &self.data[e2 as usize].exits {
                            let Some(&e3) = self.entry_ids.get(&(m, below)) else { continue };
                            for &r in &self.data[e3 as usize].exits {
                                out.push(Derivation {
                                    head: (e, r),
                                    letter: rule.letter,
                                    tails: vec![(e2, m), (e3, r)],
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn location_name(&self, loc: Location) -> String
    where
        V::State: std::fmt::Display,
    {
        match loc {
            Location::State(id) => self.states[id as usize].to_string(),
            Location::Mid { chain, index } => format!("m{chain}.{index}"),
            Location::Accept => "acc".to_string(),
        }
    }

    /// Readable name `[from,top,to]` of a summary.
    pub fn summary_name(&self, (entry, exit): (u32, Location)) -> String
    where
        V::State: std::fmt::Display,
    {
        let (loc, sym) = self.entries[entry as usize];
        format!(
            "[{},{},{}]",
            self.location_name(loc),
            self.symbols[sym as usize],
            self.location_name(exit)
        )
    }

    /// Goal summaries `(initial entry, Accept)` that were derived, in the
    /// order of the initial states.
    pub fn goal_summaries(&self) -> Vec<(u32, Location)> {
        self.goals
            .iter()
            .filter(|&&g| self.data[g as usize].exit_set.contains(&Location::Accept))
            .map(|&g| (g, Location::Accept))
            .collect()
    }

    /// A shortest accepted word, if the language is nonempty.
    pub fn shortest_witness(&self) -> Option<Vec<char>> {
        let goals: HashSet<(u32, Location)> = self.goal_summaries().into_iter().collect();
        if goals.is_empty() {
            return None;
        }
        let derivations = self.derivations();
        let mut item_ids: HashMap<(u32, Location), usize> = HashMap::new();
        let mut item_id = |item: (u32, Location)| {
            let next = item_ids.len();
            *item_ids.entry(item).or_insert(next)
        };
        let heads: Vec<usize> = derivations.iter().map(|d| item_id(d.head)).collect();
        let tails: Vec<Vec<usize>> = derivations
            .iter()
            .map(|d| d.tails.iter().map(|&t| item_id(t)).collect())
            .collect();
        let n = item_ids.len();
        let goal_ids: HashSet<usize> = goals.iter().map(|g| item_ids[g]).collect();
        let mut users: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut remaining: Vec<usize> = Vec::with_capacity(derivations.len());
        let mut heap = BinaryHeap::new();
        for (i, t) in tails.iter().enumerate() {
            for &x in t {
                users[x].push(i);
            }
            remaining.push(t.len());
            if t.is_empty() {
                let cost = derivations[i].letter.is_some() as u64;
                heap.push(Reverse((cost, heads[i], i)));
            }
        }
        let mut best: Vec<Option<(u64, usize)>> = vec![None; n];
        let mut found = None;
        while let Some(Reverse((cost, item, via))) = heap.pop() {
            if best[item].is_some() {
                continue;
            }
            best[item] = Some((cost, via));
            if goal_ids.contains(&item) {
                found = Some(item);
                break;
            }
            for &d in &users[item] {
                remaining[d] -= 1;
                if remaining[d] == 0 {
                    let c = derivations[d].letter.is_some() as u64
                        + tails[d].iter().map(|&t| best[t].expect("finalized").0).sum::<u64>();
                    heap.push(Reverse((c, heads[d], d)));
                }
            }
        }
        let goal = found?;
        let mut word = Vec::new();
        let mut stack = vec![goal];
        while let Some(item) = stack.pop() {
            let (_, via) = best[item].expect("derivation of a finalized item");
            if let Some(a) = derivations[via].letter {
                word.push(a);
            }
            stack.extend(tails[via].iter().rev());
        }
        Some(word)
    }
}

/// A way of deriving a summary: `head` follows from reading `letter` and
/// then realizing each of `tails` in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub head: (u32, Location),
    pub letter: Option<char>,
    pub tails: Vec<(u32, Location)>,
}

/// Result of [`pda_emptiness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Emptiness {
    pub is_empty: bool,
    /// A shortest accepted word when the language is nonempty.
    pub witness: Option<Vec<char>>,
    pub stats: SaturationStats,
}

/// Decides `L(pda) = ∅` and returns a shortest accepted word otherwise.
pub fn pda_emptiness(pda: &Pda) -> Emptiness {
    let sat = Saturation::run(pda, None).expect("no limit");
    let witness = sat.shortest_witness();
    Emptiness {
        is_empty: witness.is_none(),
        witness,
        stats: sat.stats(),
    }
}
