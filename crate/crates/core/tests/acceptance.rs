// SPDX-License-Identifier: Apache-2.0

//! Acceptance run: one pass/fail line per criterion.
//!
//! `cargo test -p pdedit-core --test acceptance -- --nocapture` shows the
//! lines; the test fails if any criterion fails.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use pdedit::automata::{inclusion_counterexample, is_universal, pda_emptiness};
use pdedit::distance::{nested_reach_empty, word_to_nfa_distance};
use pdedit::fed::{
    edit_distance_with, fed_decide, fed_decide_with, Decision, FedOptions, HatClosure,
};
use pdedit::fixtures::{self, corpus_rng};
use pdedit::grammar::{cfg_to_pda, compact_decomposition, cyk_membership, pda_to_cfg, pump, Cfg};
use pdedit::oracle::{all_words, oracle_sup_distance, oracle_ted, oracle_word_to_language, OracleBudget, OracleTed};
use pdedit::ted::{ted_decide, ted_decide_with, TedOptions};
use pdedit::{word, Distance, Nfa, Pda};
use rand::Rng;

type Check = Result<String, String>;
type Criterion = fn() -> Check;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:?}, limit {limit:?}"))
    }
}

const AB: [char; 2] = ['a', 'b'];

/// Random PDAs with nonempty languages; empty ones are redrawn.
fn nonempty_pdas(seed: u64, count: usize, max_states: usize) -> Vec<Pda> {
    let mut rng = corpus_rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let p = fixtures::random_pda(&mut rng, max_states, &AB);
        if !pda_emptiness(&p).is_empty {
            out.push(p);
        }
    }
    out
}

fn finite_pdas(seed: u64, count: usize) -> Vec<Pda> {
    let mut rng = corpus_rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let p = fixtures::random_acyclic_pda(&mut rng, 4, &AB);
        if !pda_emptiness(&p).is_empty {
            out.push(p);
        }
    }
    out
}

fn nfas(seed: u64, count: usize, max_states: usize) -> Vec<Nfa> {
    let mut rng = corpus_rng(seed);
    (0..count).map(|_| fixtures::random_nfa(&mut rng, max_states, &AB)).collect()
}

fn criterion_1() -> Check {
    let mut details = Vec::new();
    let limit = Duration::from_secs(1);

    let start = Instant::now();
    let a_star = fixtures::sigma_star_pda(&['a']);
    let d = edit_distance_with(&a_star, &fixtures::sigma_star_nfa(&AB), &FedOptions::default())
        .map_err(|e| e.to_string())?
        .distance();
    within(start.elapsed(), limit, "distance(a*, {a,b}*)")?;
    ensure!(d == Distance::Finite(0), "distance(a*, {{a,b}}*) = {d}, expected 0");
    details.push(format!("ed(a*,(a|b)*)={d}"));

    let start = Instant::now();
    let sigma = fixtures::sigma_star_pda(&AB);
    let d = edit_distance_with(&sigma, &fixtures::a_star_nfa(), &FedOptions::default())
        .map_err(|e| e.to_string())?
        .distance();
    within(start.elapsed(), limit, "distance({a,b}*, a*)")?;
    ensure!(d == Distance::Infinite, "distance({{a,b}}*, a*) = {d}, expected ∞");
    details.push(format!("ed((a|b)*,a*)={d}"));

    for n in 1..=5 {
        let start = Instant::now();
        let d = word_to_nfa_distance(&vec!['b'; n], &fixtures::a_star_nfa());
        within(start.elapsed(), limit, "ed-word-nfa")?;
        ensure!(d == Distance::Finite(n as u64), "ed(b^{n}, a*) = {d}");
    }
    details.push("ed(b^n,a*)=n for n=1..5".into());
    Ok(details.join(", "))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut rng = corpus_rng(20);
    let letters = ['a', 'b', 'c'];
    let budget = OracleBudget::default();
    let mut words_checked = 0;
    for i in 0..60 {
        let k = rng.gen_range(1..=3);
        let nfa = fixtures::random_nfa(&mut rng, 4, &letters[..k]);
        for w in all_words(nfa.alphabet(), 5) {
            let dp = word_to_nfa_distance(&w, &nfa);
            let oracle = oracle_word_to_language(&w, &nfa, &budget);
            ensure!(dp == oracle, "NFA #{i}, word {w:?}: DP {dp}, oracle {oracle}");
            words_checked += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(60), "criterion 2")?;
    Ok(format!("60 NFAs, {words_checked} (NFA, word) pairs, all equal"))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let budget = OracleBudget { source_len: 8, ..OracleBudget::default() };
    let mut violations = 0;
    let mut pairs = 0;
    for (p, n) in nonempty_pdas(30, 40, 4).iter().zip(nfas(31, 40, 3)) {
        pairs += 1;
        for t in 0..=3u64 {
            let o = oracle_ted(p, &n, t, &budget).map_err(|e| e.to_string())?;
            let ted = ted_decide(p, &n, &BigUint::from(t));
            if let OracleTed::ViolationFound(w) = o {
                violations += 1;
                ensure!(!ted.holds, "oracle violation {w:?} at t={t} but ted_decide holds");
            }
        }
    }
    let mut exact = 0;
    for (p, n) in finite_pdas(32, 40).iter().zip(nfas(33, 40, 3)) {
        for t in 0..=3u64 {
            let o = oracle_ted(p, &n, t, &budget).map_err(|e| e.to_string())?;
            let ted = ted_decide(p, &n, &BigUint::from(t));
            ensure!(
                ted.holds == (o == OracleTed::NoViolationWithinBudget),
                "finite language pair, t={t}: ted {} vs oracle {o:?}",
                ted.holds
            );
            exact += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(300), "criterion 3")?;
    Ok(format!(
        "{pairs} general pairs x t=0..3 ({violations} oracle violations, all refuted by ted); {exact} finite-language checks exact"
    ))
}

fn criterion_4() -> Check {
    let options = FedOptions { max_states: Some(500_000), ..FedOptions::default() };
    let mut sources = nonempty_pdas(40, 40, 4);
    sources.extend(finite_pdas(41, 20));
    sources.push(fixtures::anbn_pda());
    sources.push(fixtures::sigma_star_pda(&AB));
    let targets: Vec<Nfa> = nfas(42, sources.len(), 3);
    let (mut both_finite, mut remark, mut skipped) = (0, 0, 0);
    for (i, (p, n)) in sources.iter().zip(&targets).enumerate() {
        let pref = n.prefix_closure();
        let (Ok(d), Ok(dp)) = (edit_distance_with(p, n, &options), edit_distance_with(p, &pref, &options)) else {
            skipped += 1;
            continue;
        };
        let (d, dp) = (d.distance(), dp.distance());
        ensure!(d.is_finite() == dp.is_finite(), "pair #{i}: ed={d} but ed to prefix closure={dp}");
        let slack = n.num_states() as u64;
        if let (Distance::Finite(d), Distance::Finite(dp)) = (d, dp) {
            both_finite += 1;
            ensure!(d >= dp && dp + slack >= d, "pair #{i}: ed={d}, ed(pref)={dp}, |N|={slack}");
        }
        if pref.num_states() > 0 && is_universal(&pref) {
            remark += 1;
            ensure!(d <= Distance::Finite(slack), "pair #{i}: pref universal but ed={d} > |N|={slack}");
        }
    }
    ensure!(both_finite >= 10 && remark >= 3, "too few informative pairs ({both_finite} finite, {remark} universal prefix)");
    ensure!(skipped == 0, "{skipped} pairs exceeded the exploration budget");
    Ok(format!(
        "{} pairs: {both_finite} with both distances finite satisfy ed(P,N) >= ed(P,pref N) >= ed(P,N)-|N|; {remark} with pref(L)=Σ* have ed <= |N|",
        sources.len()
    ))
}

fn check_decomposition(g: &Cfg, w: &[char]) -> Result<usize, String> {
    let d = compact_decomposition(g, w).map_err(|e| e.to_string())?;
    ensure!(d.is_consistent(), "decomposition of {w:?} does not concatenate to the word");
    ensure!(d.satisfies_bounds(), "bounds fail for {w:?}: |w(0)|={}, k={}, T={}", d.static_len(), d.k(), g.num_nonterminals());
    for ell in 0..=3 {
        let p = pump(&d, ell);
        ensure!(cyk_membership(g, &p).is_some(), "w({ell}) = {p:?} of {w:?} is rejected by CYK");
    }
    let mut seen = HashSet::new();
    for &(a, b) in &d.pump_pairs {
        ensure!(seen.insert(a) && seen.insert(b), "node in two pump pairs for {w:?}");
    }
    Ok(d.static_len())
}

fn criterion_5() -> Check {
    let mut grammars: Vec<Cfg> = vec![
        fixtures::anbn_grammar(),
        fixtures::a_hash_b_grammar(),
        fixtures::single_word_grammar(&word("abba")),
    ];
    grammars.extend((1..=3).map(fixtures::doubling_grammar));
    grammars.extend(nonempty_pdas(50, 15, 3).iter().map(pda_to_cfg));
    let (mut words, mut max_ratio) = (0, 0.0f64);
    let mut above_half = 0;
    for g in &grammars {
        for w in all_words(g.alphabet(), 8) {
            if cyk_membership(g, &w).is_none() {
                continue;
            }
            let s = check_decomposition(g, &w)?;
            words += 1;
            let cap = 2f64.powi(g.num_nonterminals() as i32);
            max_ratio = max_ratio.max(s as f64 / cap);
            if 2 * s > cap as usize {
                above_half += 1;
            }
        }
    }
    ensure!(words > 100, "only {words} corpus words");
    Ok(format!(
        "{} grammars, {words} words: bounds hold, w(0..3) accepted; max |w(0)|/2^T = {max_ratio:.3}, {above_half} words above 2^(T-1)",
        grammars.len()
    ))
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let pda = fixtures::a_hash_b_pda();
    let nfa = fixtures::a_star_or_b_star_nfa();
    let a = fed_decide(&pda, &nfa);
    ensure!(!a.finite, "fed_decide says finite for a^n#b^n vs a*|b*");
    let d = a.witness.ok_or("no infinity witness")?;
    ensure!(nested_reach_empty(&d.pumps, &nfa.prefix_closure()), "nested reach set of {:?} is not empty", d.pumps);
    let plain = fed_decide_with(&pda, &nfa, &FedOptions { shortcuts: false, ..FedOptions::default() })
        .map_err(|e| e.to_string())?;
    ensure!(!plain.finite && plain.decision == Decision::Bound, "threshold check at B disagrees");

    let mut last = Distance::ZERO;
    let mut trail = Vec::new();
    for budget in [2, 4, 6, 8, 10] {
        let s = oracle_sup_distance(&pda, &nfa, &OracleBudget::with_source_len(budget)).map_err(|e| e.to_string())?;
        ensure!(s >= last, "oracle lower bound decreased at budget {budget}");
        last = s;
        trail.push(s.to_string());
    }
    ensure!(last > Distance::Finite(3), "oracle bound at budget 10 is {last}");

    let anbn = fixtures::anbn_pda();
    let ab = fixtures::a_star_b_star_nfa();
    ensure!(fed_decide(&anbn, &ab).finite, "a^nb^n vs a*b* should be finite");
    let dist = edit_distance_with(&anbn, &ab, &FedOptions::default()).map_err(|e| e.to_string())?.distance();
    ensure!(dist == Distance::ZERO, "ed(a^nb^n, a*b*) = {dist}");
    within(start.elapsed(), Duration::from_secs(60), "criterion 6")?;
    Ok(format!(
        "a^n#b^n vs a*|b* infinite (pumps {:?}, also at B={}), oracle bounds {}; a^nb^n vs a*b* finite, distance 0",
        d.pumps.iter().map(|u| u.iter().collect::<String>()).collect::<Vec<_>>(),
        plain.bound.map(|b| b.b.to_string()).unwrap_or_default(),
        trail.join(" <= ")
    ))
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let eps = fixtures::epsilon_dfa(&['a']);
    let mut out = Vec::new();
    for k in 1..=4u32 {
        let pda = cfg_to_pda(&fixtures::doubling_grammar(k as usize));
        let r = edit_distance_with(&pda, &eps, &FedOptions::default()).map_err(|e| e.to_string())?;
        let expected = 1u64 << k;
        ensure!(r.distance() == Distance::Finite(expected), "k={k}: distance {}", r.distance());
        let oracle = oracle_sup_distance(&pda, &eps, &OracleBudget::with_source_len(16)).map_err(|e| e.to_string())?;
        ensure!(oracle == Distance::Finite(expected), "k={k}: oracle {oracle}");
        out.push(format!("k={k}: {expected}"));
    }
    within(start.elapsed(), Duration::from_secs(120), "criterion 7")?;
    Ok(out.join(", "))
}

fn criterion_8() -> Check {
    let mut rng = corpus_rng(80);
    let plain = FedOptions { shortcuts: false, max_states: Some(2_000_000), ..FedOptions::default() };
    let (mut included, mut not_included) = (0, 0);
    for i in 0..30 {
        let a1 = fixtures::random_nfa(&mut rng, 3, &AB);
        let a2 = fixtures::random_nfa(&mut rng, 3, &AB);
        let h1 = Pda::from_nfa(&a1.hat_closure('#').map_err(|e| e.to_string())?);
        let h2 = a2.hat_closure('#').map_err(|e| e.to_string())?;
        let inclusion = inclusion_counterexample(&a1, &a2).is_none();
        let fast = fed_decide(&h1, &h2).finite;
        let bound = fed_decide_with(&h1, &h2, &plain).map_err(|e| e.to_string())?.finite;
        ensure!(fast == inclusion && bound == inclusion, "pair #{i}: inclusion {inclusion}, fed {fast}, fed at B {bound}");
        if inclusion {
            included += 1;
        } else {
            not_included += 1;
        }
    }
    ensure!(included >= 5 && not_included >= 5, "unbalanced corpus: {included} included, {not_included} not");
    Ok(format!("30 pairs ({included} included, {not_included} not): hat distances finite iff inclusion"))
}

fn criterion_9() -> Check {
    let mut sources = nonempty_pdas(30, 40, 4);
    sources.extend(finite_pdas(32, 40));
    let mut targets = nfas(31, 40, 3);
    targets.extend(nfas(33, 40, 3));
    let (mut checks, mut counterexamples, mut max_ratio) = (0, 0, 0.0f64);
    for (i, (p, n)) in sources.iter().zip(&targets).enumerate() {
        let mut previous = false;
        for t in 0..=5u64 {
            let out = ted_decide_with(p, n, &BigUint::from(t), TedOptions::default()).map_err(|e| e.to_string())?;
            ensure!(!previous || out.holds, "pair #{i}: holds at t={} but not at t={t}", t - 1);
            previous = out.holds;
            let bound = out.stats.state_bound.to_string().parse::<f64>().unwrap_or(f64::INFINITY);
            ensure!(
                BigUint::from(out.stats.impact_states) <= out.stats.state_bound,
                "pair #{i}: {} impact states above the bound",
                out.stats.impact_states
            );
            max_ratio = max_ratio.max(out.stats.impact_states as f64 / bound);
            if let Some(w) = out.counterexample {
                counterexamples += 1;
                ensure!(p.accepts(&w).unwrap_or(false), "pair #{i}: counterexample {w:?} not accepted");
                let d = word_to_nfa_distance(&w, n);
                ensure!(d > Distance::Finite(t), "pair #{i}: counterexample {w:?} at distance {d} <= {t}");
            }
            checks += 1;
        }
    }
    Ok(format!(
        "{checks} decisions monotone in t, {counterexamples} counterexamples valid, max impact states / bound = {max_ratio:.4}"
    ))
}

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 9] = [
        ("worked example values", criterion_1),
        ("distance DP equals oracle", criterion_2),
        ("threshold decision vs oracle", criterion_3),
        ("prefix-closure inequalities", criterion_4),
        ("compact decompositions", criterion_5),
        ("finiteness equivalences", criterion_6),
        ("exponential-distance family", criterion_7),
        ("hat-closure property", criterion_8),
        ("threshold invariants", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {}: PASS {name} [{elapsed:.2?}] {detail}", i + 1),
            Err(detail) => {
                println!("criterion {}: FAIL {name} [{elapsed:.2?}] {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
