// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use super::{Cfg, GeneralCfg, Production, Symbol};

type Rules = Vec<(usize, Vec<Symbol>)>;

struct Builder {
    names: Vec<String>,
    used: HashSet<String>,
}

impl Builder {
    fn fresh(&mut self, base: &str) -> usize {
        let mut name = base.to_string();
        let mut i = 1;
        while self.used.contains(&name) {
            name = format!("{base}{i}");
            i += 1;
        }
        self.used.insert(name.clone());
        self.names.push(name);
        self.names.len() - 1
    }
}

fn productive(rules: &Rules, n: usize) -> Vec<bool> {
    let mut prod = vec![false; n];
    let mut changed = true;
    while changed {
        changed = false;
        for (head, rhs) in rules {
            if !prod[*head]
                && rhs.iter().all(|s| match s {
                    Symbol::Terminal(_) => true,
                    Symbol::Nonterminal(v) => prod[*v],
                })
            {
                prod[*head] = true;
                changed = true;
            }
        }
    }
    prod
}

fn reachable(rules: &Rules, n: usize, start: usize) -> Vec<bool> {
    let mut by_head: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, (head, _)) in rules.iter().enumerate() {
        by_head[*head].push(i);
    }
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &i in &by_head[v] {
            for s in &rules[i].1 {
                if let Symbol::Nonterminal(u) = *s {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
    }
    seen
}

fn remove_useless(rules: Rules, n: usize, start: usize) -> Rules {
    let prod = productive(&rules, n);
    let uses_only_productive = |rhs: &Vec<Symbol>| {
        rhs.iter().all(|s| match s {
            Symbol::Terminal(_) => true,
            Symbol::Nonterminal(v) => prod[*v],
        })
    };
    let rules: Rules = rules
        .into_iter()
        .filter(|(h, rhs)| prod[*h] && uses_only_productive(rhs))
        .collect();
    let reach = reachable(&rules, n, start);
    rules.into_iter().filter(|(h, _)| reach[*h]).collect()
}

fn dedup(rules: Rules) -> Rules {
    let mut seen = HashSet::new();
    rules.into_iter().filter(|r| seen.insert(r.clone())).collect()
}

fn nullable(rules: &Rules, n: usize) -> Vec<bool> {
    let mut null = vec![false; n];
    let mut changed = true;
    while changed {
        changed = false;
        for (head, rhs) in rules {
            if !null[*head] && rhs.iter().all(|s| matches!(s, Symbol::Nonterminal(v) if null[*v])) {
                null[*head] = true;
                changed = true;
            }
        }
    }
    null
}

fn remove_epsilon(rules: Rules, null: &[bool]) -> Rules {
    let mut out = Vec::new();
    for (head, rhs) in rules {
        let mut variants: Vec<Vec<Symbol>> = vec![Vec::new()];
        for s in rhs {
            let optional = matches!(s, Symbol::Nonterminal(v) if null[v]);
            let mut next = Vec::with_capacity(variants.len() * 2);
            for v in variants {
                if optional {
                    next.push(v.clone());
                }
                let mut with = v;
                with.push(s);
                next.push(with);
            }
            variants = next;
        }
        out.extend(variants.into_iter().filter(|v| !v.is_empty()).map(|v| (head, v)));
    }
    dedup(out)
}

fn remove_units(rules: Rules, n: usize) -> Rules {
    let is_unit = |rhs: &Vec<Symbol>| matches!(rhs.as_slice(), [Symbol::Nonterminal(_)]);
    let mut closure: Vec<BTreeSet<usize>> = (0..n).map(|v| BTreeSet::from([v])).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for (head, rhs) in &rules {
            if let [Symbol::Nonterminal(b)] = rhs.as_slice() {
                for a in 0..n {
                    if closure[a].contains(head) {
                        let add: Vec<usize> = closure[*b].iter().copied().collect();
                        for c in add {
                            changed |= closure[a].insert(c);
                        }
                    }
                }
            }
        }
    }
    let mut by_head: Vec<Vec<&Vec<Symbol>>> = vec![Vec::new(); n];
    for (head, rhs) in &rules {
        if !is_unit(rhs) {
            by_head[*head].push(rhs);
        }
    }
    let mut out = Vec::new();
    for (a, reached) in closure.iter().enumerate() {
        // own productions first, then those inherited through unit chains
        let order = std::iter::once(a).chain(reached.iter().copied().filter(|&b| b != a));
        for b in order {
            out.extend(by_head[b].iter().map(|rhs| (a, (*rhs).clone())));
        }
    }
    dedup(out)
}

/// Converts an arbitrary context-free grammar into an equivalent grammar in
/// Chomsky normal form.
///
/// The usual pipeline is applied: useless symbols are removed, ε- and unit
/// productions are eliminated, terminals in long right-hand sides are lifted
/// to one nonterminal per letter, and long right-hand sides are binarized
/// with shared suffix nonterminals. If the language contains ε, `start → ε`
/// is added, introducing a fresh start symbol when the old one occurs on a
/// right-hand side. Nonterminals are finally renumbered in order of
/// discovery from the start symbol.
pub fn cfg_to_cnf(g: &GeneralCfg) -> Cfg {
    let mut b = Builder {
        names: g.nonterminals.clone(),
        used: g.nonterminals.iter().cloned().collect(),
    };
    let n = b.names.len();
    let rules = dedup(g.productions.clone());
    let rules = remove_useless(rules, n, g.start);
    let null = nullable(&rules, n);
    let has_empty = null[g.start];
    let rules = remove_epsilon(rules, &null);
    let rules = remove_units(rules, n);
    let rules = remove_useless(rules, n, g.start);

    // lift terminals out of long right-hand sides
    let mut lifted: BTreeMap<char, usize> = BTreeMap::new();
    let mut terminal_rules = Vec::new();
    let mut rules: Rules = rules
        .into_iter()
        .map(|(head, rhs)| {
            if rhs.len() < 2 {
                return (head, rhs);
            }
            let rhs = rhs
                .into_iter()
                .map(|s| match s {
                    Symbol::Terminal(a) => Symbol::Nonterminal(*lifted.entry(a).or_insert_with(|| {
                        let v = b.fresh(&format!("T_{a}"));
                        terminal_rules.push((v, vec![Symbol::Terminal(a)]));
                        v
                    })),
                    other => other,
                })
                .collect();
            (head, rhs)
        })
        .collect();
    rules.extend(terminal_rules);

    // binarize, sharing suffixes
    let mut suffixes: HashMap<Vec<Symbol>, usize> = HashMap::new();
    let mut binary: Rules = Vec::new();
    let mut pending: VecDeque<(usize, Vec<Symbol>)> = rules.into_iter().collect();
    while let Some((head, rhs)) = pending.pop_front() {
        if rhs.len() <= 2 {
            binary.push((head, rhs));
            continue;
        }
        let tail = rhs[1..].to_vec();
        let v = match suffixes.get(&tail) {
            Some(&v) => v,
            None => {
                let v = b.fresh(&format!("{}_", b.names[head]));
                suffixes.insert(tail.clone(), v);
                pending.push_back((v, tail));
                v
            }
        };
        binary.push((head, vec![rhs[0], Symbol::Nonterminal(v)]));
    }

    let mut start = g.start;
    let mut empty = false;
    if has_empty {
        let start_on_rhs = binary
            .iter()
            .any(|(_, rhs)| rhs.contains(&Symbol::Nonterminal(start)));
        if start_on_rhs {
            let s0 = b.fresh(&format!("{}0", b.names[start]));
            let copies: Rules = binary
                .iter()
                .filter(|(h, _)| *h == start)
                .map(|(_, rhs)| (s0, rhs.clone()))
                .collect();
            binary.extend(copies);
            start = s0;
        }
        empty = true;
    }

    // renumber by discovery order from the start symbol
    let n = b.names.len();
    let reach = reachable(&binary, n, start);
    let mut by_head: Vec<Vec<&Vec<Symbol>>> = vec![Vec::new(); n];
    for (h, rhs) in &binary {
        if reach[*h] {
            by_head[*h].push(rhs);
        }
    }
    let mut order = vec![start];
    let mut index: HashMap<usize, usize> = HashMap::from([(start, 0)]);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for rhs in &by_head[v] {
            for s in rhs.iter() {
                if let Symbol::Nonterminal(u) = *s {
                    if let std::collections::hash_map::Entry::Vacant(e) = index.entry(u) {
                        e.insert(order.len());
                        order.push(u);
                    }
                }
            }
        }
        i += 1;
    }
    let mut productions = Vec::new();
    if empty {
        productions.push(Production::Empty);
    }
    for &v in &order {
        for rhs in &by_head[v] {
            let head = index[&v];
            productions.push(match rhs.as_slice() {
                [Symbol::Terminal(a)] => Production::Terminal { head, letter: *a },
                [Symbol::Nonterminal(l), Symbol::Nonterminal(r)] => Production::Binary {
                    head,
                    left: index[l],
                    right: index[r],
                },
                other => unreachable!("not in normal form: {other:?}"),
            });
        }
    }
    let names = order.iter().map(|&v| b.names[v].clone()).collect();
    Cfg::new(g.alphabet.iter().copied(), names, 0, productions).expect("normal form construction is valid")
}
