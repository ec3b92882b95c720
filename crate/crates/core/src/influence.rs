//! Repetition counts as a strength order on conclusions.
//!
//! A conclusion backed by more rules (same anchor premise, distinct
//! nonstandard coordinates) is said to receive a stronger influence. Only the
//! strict comparison `m' > m` carries meaning; equal counts are reported as
//! such rather than broken by a tie rule.
//!
//! Ternary weights are anchored on the pair (first premise, conclusion);
//! binary weights on the conclusion alone. The conclusion is always the last
//! coordinate of a rule.

use std::cmp::Ordering;
use std::fmt;

use crate::closure::DeductionSet;
use crate::error::{Error, Result};
use crate::model::{LogicSystem, ShapeViolation, Symbol, SymbolId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfluenceWeight {
    pub conclusion: Symbol,
    /// First premise of the matched ternary rules; `None` for binary systems.
    pub anchor_premise: Option<Symbol>,
    pub multiplicity: usize,
    /// Indices (first-occurrence order) of the rules that were counted.
    pub matched: Vec<usize>,
}

impl InfluenceWeight {
    /// The rules that were counted, as a system of their own.
    pub fn matched_subsystem(&self, system: &LogicSystem) -> Result<LogicSystem> {
        LogicSystem::from_rules(
            system.language().clone(),
            self.matched.iter().filter_map(|&i| system.rule(i).cloned()),
        )
    }

    /// Union of the premise sets of the counted rules.
    pub fn matched_premises(&self, system: &LogicSystem) -> DeductionSet {
        DeductionSet::from_ids(
            system.language().clone(),
            self.matched
                .iter()
                .filter_map(|&i| system.rule(i))
                .flat_map(|r| r.premises().iter().copied()),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Influence {
    Stronger,
    Weaker,
    IncomparableEqual,
}

impl fmt::Display for Influence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Influence::Stronger => "stronger",
            Influence::Weaker => "weaker",
            Influence::IncomparableEqual => "incomparable-equal",
        })
    }
}

fn require_arity(system: &LogicSystem, arity: usize) -> Result<()> {
    match system.rules().position(|r| r.arity() != arity) {
        Some(i) => Err(Error::PreconditionViolated(ShapeViolation::WrongArity {
            rule: i + 1,
            expected: arity,
            found: system.rule(i).map_or(0, |r| r.arity()),
        })),
        None => Ok(()),
    }
}

fn weight(system: &LogicSystem, anchor: Option<SymbolId>, conclusion: SymbolId) -> InfluenceWeight {
    let language = system.language();
    let matched: Vec<usize> = system
        .rules()
        .enumerate()
        .filter(|(_, r)| {
            r.conclusion() == conclusion && anchor.is_none_or(|a| r.premises()[0] == a)
        })
        .map(|(i, _)| i)
        .collect();
    InfluenceWeight {
        conclusion: language.symbol(conclusion).clone(),
        anchor_premise: anchor.map(|a| language.symbol(a).clone()),
        multiplicity: matched.len(),
        matched,
    }
}

/// Counts the ternary rules `(premise, _, conclusion)`.
pub fn weight_ternary(
    system: &LogicSystem,
    premise: &str,
    conclusion: &str,
) -> Result<InfluenceWeight> {
    let language = system.language();
    let premise = language.resolve(premise)?;
    let conclusion = language.resolve(conclusion)?;
    require_arity(system, 3)?;
    Ok(weight(system, Some(premise), conclusion))
}

/// Counts the binary rules `(_, conclusion)`.
pub fn weight_binary(system: &LogicSystem, conclusion: &str) -> Result<InfluenceWeight> {
    let conclusion = system.language().resolve(conclusion)?;
    require_arity(system, 2)?;
    Ok(weight(system, None, conclusion))
}

/// How the influence behind `w1` compares with the one behind `w2`. The two
/// weights may come from different systems; only their counts are compared.
pub fn compare_influence(w1: &InfluenceWeight, w2: &InfluenceWeight) -> Influence {
    match w1.multiplicity.cmp(&w2.multiplicity) {
        Ordering::Greater => Influence::Stronger,
        Ordering::Less => Influence::Weaker,
        Ordering::Equal => Influence::IncomparableEqual,
    }
}
