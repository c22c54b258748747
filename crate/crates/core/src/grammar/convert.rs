// SPDX-License-Identifier: Apache-2.0

use std::collections::{HashMap, HashSet, VecDeque};

use super::{cfg_to_cnf, Cfg, GeneralCfg, Production, Symbol};
use crate::automata::pushdown::Saturation;
use crate::automata::{fresh_stack_symbols, Pda, PdaTransition};

/// Greibach normal form of a grammar in Chomsky normal form, ignoring
/// `start → ε`. Every returned production starts with a terminal followed
/// by nonterminals only. Index `0` is the start symbol.
fn greibach(g: &Cfg) -> Vec<Vec<Vec<Symbol>>> {
    let n = g.num_nonterminals();
    let mut prods: Vec<Vec<Vec<Symbol>>> = vec![Vec::new(); n];
    for p in g.productions() {
        match *p {
            Production::Binary { head, left, right } => {
                prods[head].push(vec![Symbol::Nonterminal(left), Symbol::Nonterminal(right)])
            }
            Production::Terminal { head, letter } => prods[head].push(vec![Symbol::Terminal(letter)]),
            Production::Empty => {}
        }
    }
    let starts_with = |rhs: &[Symbol], v: usize| rhs.first() == Some(&Symbol::Nonterminal(v));

    // order the nonterminals so that every production of A_i starts with a
    // terminal or with some A_k, k > i
    for i in 0..n {
        for j in 0..i {
            if !prods[i].iter().any(|r| starts_with(r, j)) {
                continue;
            }
            let mut next = Vec::new();
            for rhs in std::mem::take(&mut prods[i]) {
                if starts_with(&rhs, j) {
                    for delta in &prods[j] {
                        let mut r = delta.clone();
                        r.extend_from_slice(&rhs[1..]);
                        next.push(r);
                    }
                } else {
                    next.push(rhs);
                }
            }
            prods[i] = dedup(next);
        }
        let (alpha, beta): (Vec<_>, Vec<_>) = std::mem::take(&mut prods[i])
            .into_iter()
            .partition(|r| starts_with(r, i));
        if alpha.is_empty() {
            prods[i] = beta;
            continue;
        }
        let z = prods.len();
        let mut with_z = beta.clone();
        for b in &beta {
            let mut r = b.clone();
            r.push(Symbol::Nonterminal(z));
            with_z.push(r);
        }
        prods[i] = dedup(with_z);
        let mut zs = Vec::new();
        for a in alpha {
            let tail = a[1..].to_vec();
            if tail.is_empty() {
                continue;
            }
            let mut r = tail.clone();
            r.push(Symbol::Nonterminal(z));
            zs.push(tail);
            zs.push(r);
        }
        prods.push(dedup(zs));
    }

    // substitute leading nonterminals until every production is
    // terminal-leading
    let leads_with_terminal = |rs: &Vec<Vec<Symbol>>| rs.iter().all(|r| matches!(r.first(), Some(Symbol::Terminal(_))));
    loop {
        let mut changed = false;
        for x in (0..prods.len()).rev() {
            if leads_with_terminal(&prods[x]) {
                continue;
            }
            let mut next = Vec::new();
            for rhs in std::mem::take(&mut prods[x]) {
                match rhs[0] {
                    Symbol::Nonterminal(y) if y != x && leads_with_terminal(&prods[y]) => {
                        for delta in &prods[y] {
                            let mut r = delta.clone();
                            r.extend_from_slice(&rhs[1..]);
                            next.push(r);
                        }
                        changed = true;
                    }
                    _ => next.push(rhs),
                }
            }
            prods[x] = dedup(next);
        }
        if !changed {
            break;
        }
    }
    debug_assert!(prods.iter().all(|rs| rs
        .iter()
        .all(|r| matches!(r.first(), Some(Symbol::Terminal(_)))
            && r[1..].iter().all(|s| matches!(s, Symbol::Nonterminal(_))))));
    prods
}

fn dedup(rules: Vec<Vec<Symbol>>) -> Vec<Vec<Symbol>> {
    let mut seen = HashSet::new();
    rules.into_iter().filter(|r| seen.insert(r.clone())).collect()
}

/// Real-time PDA for the language of a grammar in Chomsky normal form.
///
/// The grammar is brought into Greibach normal form so that each derivation
/// step reads one letter; the stack holds the pending nonterminals of a
/// leftmost derivation, topmost first. State `0` is initial and reads the
/// first letter on the empty stack; state `1` is final and pops one
/// nonterminal per letter. State `0` is final iff ε is in the language.
pub fn cfg_to_pda(g: &Cfg) -> Pda {
    let prods = greibach(g);
    // nonterminals reachable from the start through Greibach productions
    let mut reach = vec![false; prods.len()];
    reach[g.start()] = true;
    let mut queue = VecDeque::from([g.start()]);
    while let Some(v) = queue.pop_front() {
        for r in &prods[v] {
            for s in &r[1..] {
                if let Symbol::Nonterminal(u) = *s {
                    if !reach[u] {
                        reach[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
    }
    let used: Vec<usize> = (0..prods.len()).filter(|&v| reach[v]).collect();
    let symbols = fresh_stack_symbols(used.len());
    let sym: HashMap<usize, char> = used.iter().copied().zip(symbols.iter().copied()).collect();

    let push_of = |r: &[Symbol]| -> Vec<char> {
        r[1..]
            .iter()
            .rev()
            .map(|s| match s {
                Symbol::Nonterminal(u) => sym[u],
                Symbol::Terminal(_) => unreachable!("Greibach tails are nonterminals"),
            })
            .collect()
    };
    let letter_of = |r: &[Symbol]| match r[0] {
        Symbol::Terminal(a) => a,
        Symbol::Nonterminal(_) => unreachable!("Greibach productions lead with a terminal"),
    };
    let mut trans = Vec::new();
    for r in &prods[g.start()] {
        trans.push(PdaTransition { from: 0, letter: letter_of(r), top: None, to: 1, push: push_of(r) });
    }
    for &v in &used {
        for r in &prods[v] {
            trans.push(PdaTransition {
                from: 1,
                letter: letter_of(r),
                top: Some(sym[&v]),
                to: 1,
                push: push_of(r),
            });
        }
    }
    let finals: Vec<usize> = if g.generates_empty() { vec![0, 1] } else { vec![1] };
    Pda::new(g.alphabet().iter().copied(), symbols, 2, [0], finals, trans)
        .expect("Greibach construction is a valid PDA")
}

/// Grammar for the language of a PDA, in Chomsky normal form.
///
/// Nonterminals are the summaries `[p, γ, q]` computed by the emptiness
/// saturation (pop `γ` from `p` and end in `q`); only summaries reachable
/// from an initial configuration and derivable are kept, which is the
/// useful part of the classical triple construction. The result is passed
/// through [`cfg_to_cnf`].
pub fn pda_to_cfg(p: &Pda) -> Cfg {
    let sat = Saturation::run(p, None).expect("no limit");
    let derivations = sat.derivations();
    let mut names = vec!["S".to_string()];
    let mut ids: HashMap<(u32, crate::automata::pushdown::Location), usize> = HashMap::new();
    let mut id_of = |item, names: &mut Vec<String>| {
        *ids.entry(item).or_insert_with(|| {
            names.push(sat.summary_name(item));
            names.len() - 1
        })
    };
    let mut productions = Vec::new();
    for goal in sat.goal_summaries() {
        let v = id_of(goal, &mut names);
        productions.push((0, vec![Symbol::Nonterminal(v)]));
    }
    for d in &derivations {
        let head = id_of(d.head, &mut names);
        let mut rhs = Vec::new();
        if let Some(a) = d.letter {
            rhs.push(Symbol::Terminal(a));
        }
        for &t in &d.tails {
            rhs.push(Symbol::Nonterminal(id_of(t, &mut names)));
        }
        productions.push((head, rhs));
    }
    let general = GeneralCfg::new(p.alphabet().iter().copied(), names, 0, productions)
        .expect("summary grammar is well formed");
    cfg_to_cnf(&general)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::pda_emptiness;
    use crate::grammar::cyk_membership;
    use crate::oracle::all_words;
    use crate::{fixtures, word};

    #[test]
    fn anbn_grammar_to_pda() {
        let g = fixtures::anbn_grammar();
        let pda = cfg_to_pda(&g);
        for w in all_words(&['a', 'b'], 8) {
            assert_eq!(pda.accepts(&w).unwrap(), cyk_membership(&g, &w).is_some(), "{w:?}");
        }
    }

    #[test]
    fn single_word_grammar_to_pda() {
        let g = fixtures::single_word_grammar(&word("ab"));
        let pda = cfg_to_pda(&g);
        let accepted: Vec<_> = all_words(&['a', 'b'], 8).filter(|w| pda.accepts(w).unwrap()).collect();
        assert_eq!(accepted, vec![word("ab")]);
    }

    #[test]
    fn empty_grammar_to_pda() {
        let g = Cfg::new(['a'], vec!["S".into()], 0, vec![]).unwrap();
        assert!(pda_emptiness(&cfg_to_pda(&g)).is_empty);
    }

    #[test]
    fn left_recursive_grammar_to_pda() {
        // S → S A | a, A → b : a b*
        let g = Cfg::new(
            ['a', 'b'],
            vec!["S".into(), "A".into()],
            0,
            vec![
                Production::Binary { head: 0, left: 0, right: 1 },
                Production::Terminal { head: 0, letter: 'a' },
                Production::Terminal { head: 1, letter: 'b' },
            ],
        )
        .unwrap();
        let pda = cfg_to_pda(&g);
        for w in all_words(&['a', 'b'], 7) {
            let expected = w.first() == Some(&'a') && w[1..].iter().all(|&c| c == 'b');
            assert_eq!(pda.accepts(&w).unwrap(), expected, "{w:?}");
        }
    }

    #[test]
    fn anbn_pda_to_grammar() {
        let pda = fixtures::anbn_pda();
        let g = pda_to_cfg(&pda);
        for w in all_words(&['a', 'b'], 8) {
            assert_eq!(cyk_membership(&g, &w).is_some(), pda.accepts(&w).unwrap(), "{w:?}");
        }
    }

    #[test]
    fn empty_pda_to_grammar() {
        let t = PdaTransition { from: 0, letter: 'a', top: Some('A'), to: 0, push: vec![] };
        let pda = Pda::new(['a'], ['A'], 1, [0], [0], [t]).unwrap();
        let g = pda_to_cfg(&Pda::new(['a'], ['A'], 1, [0], [], pda.transitions().to_vec()).unwrap());
        assert!(g.productions().is_empty());
    }

    #[test]
    fn sigma_star_pda_to_grammar() {
        let pda = fixtures::sigma_star_pda(&['a', 'b']);
        let g = pda_to_cfg(&pda);
        assert_eq!(all_words(&['a', 'b'], 6).filter(|w| cyk_membership(&g, w).is_some()).count(), 127);
    }
}
