#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use conseq_core::{DeductionSet, Language, LogicSystem, SymbolId};
use proptest::prelude::*;

/// Least rule-closed superset of `x`, computed as the intersection of every
/// closed superset of `x` inside the language. Exponential; small languages
/// only. Shares no code with the fixpoint engine.
pub fn oracle_close(system: &LogicSystem, x: &DeductionSet) -> DeductionSet {
    let language = system.language();
    let ids: Vec<SymbolId> = language.ids().collect();
    assert!(
        ids.len() <= 16,
        "oracle is exponential in the language size"
    );
    let base: u32 = ids
        .iter()
        .enumerate()
        .filter(|(_, id)| x.contains(**id))
        .map(|(i, _)| 1 << i)
        .sum();
    let rules: Vec<(u32, u32)> = system
        .rules()
        .map(|r| {
            let premises = r
                .premises()
                .iter()
                .map(|p| 1u32 << p.index())
                .fold(0, |a, b| a | b);
            (premises, 1 << r.conclusion().index())
        })
        .collect();
    let full = (1u32 << ids.len()) - 1;
    let mut meet = full;
    for y in 0..=full {
        if y & base != base {
            continue;
        }
        let closed = rules.iter().all(|&(p, c)| p & y != p || y & c != 0);
        if closed {
            meet &= y;
        }
    }
    DeductionSet::from_ids(
        language.clone(),
        ids.iter()
            .enumerate()
            .filter(|(i, _)| meet & (1 << i) != 0)
            .map(|(_, &id)| id),
    )
}

pub fn system(std: &[&str], ns: &[&str], rules: &[(&[&str], &str)]) -> LogicSystem {
    let lang = Language::new(std, ns).unwrap();
    LogicSystem::new(lang, rules.iter().map(|(p, c)| (p.iter(), c))).unwrap()
}

pub fn set(s: &LogicSystem, names: &[&str]) -> DeductionSet {
    DeductionSet::from_names(s.language().clone(), names).unwrap()
}

pub fn all_subsets(language: &Arc<Language>) -> impl Iterator<Item = DeductionSet> + '_ {
    let ids: Vec<SymbolId> = language.ids().collect();
    (0u32..1 << ids.len()).map(move |m| {
        DeductionSet::from_ids(
            language.clone(),
            ids.iter()
                .enumerate()
                .filter(|(i, _)| m & (1 << i) != 0)
                .map(|(_, &id)| id),
        )
    })
}

pub fn subsets_of(x: &DeductionSet) -> Vec<DeductionSet> {
    let ids: Vec<SymbolId> = x.iter().collect();
    (0u32..1 << ids.len())
        .map(|m| {
            DeductionSet::from_ids(
                x.language().clone(),
                ids.iter()
                    .enumerate()
                    .filter(|(i, _)| m & (1 << i) != 0)
                    .map(|(_, &id)| id),
            )
        })
        .collect()
}

/// Arbitrary systems: up to `max_symbols` symbols of random sort (the first
/// is always standard), 1 to `max_rules` rules of arity 2 to 4.
pub fn arb_system(max_symbols: usize, max_rules: usize) -> impl Strategy<Value = LogicSystem> {
    arb_system_with(max_symbols, max_rules, 3)
}

pub fn arb_system_with(
    max_symbols: usize,
    max_rules: usize,
    max_premises: usize,
) -> impl Strategy<Value = LogicSystem> {
    (2..=max_symbols)
        .prop_flat_map(move |n| {
            (
                Just(n),
                prop::collection::vec(any::<bool>(), n),
                prop::collection::vec(
                    (prop::collection::vec(0..n, 1..=max_premises), 0..n),
                    1..=max_rules,
                ),
            )
        })
        .prop_map(|(n, sorts, rules)| {
            let mut standard = Vec::new();
            let mut nonstandard = Vec::new();
            let names: Vec<String> = (0..n)
                .map(|i| {
                    if i == 0 || sorts[i] {
                        standard.push(format!("s{i}"));
                        format!("s{i}")
                    } else {
                        nonstandard.push(format!("l{i}"));
                        format!("l{i}")
                    }
                })
                .collect();
            let lang = Language::new(&standard, &nonstandard).unwrap();
            LogicSystem::new(
                lang,
                rules.into_iter().map(|(ps, c)| {
                    (
                        ps.into_iter().map(|p| names[p].clone()).collect::<Vec<_>>(),
                        names[c].clone(),
                    )
                }),
            )
            .unwrap()
        })
}

/// Mixed ternary systems `(a_i, l_i) => b_i` with premise and conclusion
/// pools kept apart.
pub fn arb_mixed_ternary(max_rules: usize) -> impl Strategy<Value = LogicSystem> {
    prop::collection::vec((0..4usize, 0..4usize, 0..4usize), 1..=max_rules).prop_map(|rules| {
        let a: Vec<String> = (0..4).map(|i| format!("a{i}")).collect();
        let b: Vec<String> = (0..4).map(|i| format!("b{i}")).collect();
        let l: Vec<String> = (0..4).map(|i| format!("l{i}")).collect();
        let lang = Language::new(a.iter().chain(&b), &l).unwrap();
        LogicSystem::new(
            lang,
            rules
                .into_iter()
                .map(|(i, j, k)| ([a[i].clone(), l[j].clone()], b[k].clone())),
        )
        .unwrap()
    })
}

pub fn arb_mixed_binary(max_rules: usize) -> impl Strategy<Value = LogicSystem> {
    prop::collection::vec((0..5usize, 0..5usize), 1..=max_rules).prop_map(|rules| {
        let b: Vec<String> = (0..5).map(|i| format!("b{i}")).collect();
        let l: Vec<String> = (0..5).map(|i| format!("l{i}")).collect();
        let lang = Language::new(&b, &l).unwrap();
        LogicSystem::new(
            lang,
            rules
                .into_iter()
                .map(|(j, k)| ([l[j].clone()], b[k].clone())),
        )
        .unwrap()
    })
}

/// A system together with one subset of its language.
pub fn with_subset(
    systems: impl Strategy<Value = LogicSystem>,
) -> impl Strategy<Value = (LogicSystem, DeductionSet)> {
    systems
        .prop_flat_map(|s| {
            let n = s.language().len();
            (Just(s), prop::collection::vec(any::<bool>(), n))
        })
        .prop_map(|(s, bits)| {
            let ids: BTreeSet<SymbolId> = s
                .language()
                .ids()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(id, _)| id)
                .collect();
            let x = DeductionSet::from_ids(s.language().clone(), ids);
            (s, x)
        })
}
