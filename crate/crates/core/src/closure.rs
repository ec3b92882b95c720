//! Deduction: the consequence operator generated by a logic-system.
//!
//! A set `X` is closed by two rules: insertion (every member of `X` is
//! deduced) and the coordinate rule (when every premise of a rule has been
//! deduced, so has its conclusion). [`close`] computes the least closed
//! superset of `X` with a semi-naive loop; [`close_naive`] iterates [`step`]
//! to the same fixpoint and is kept as a reference strategy.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::model::{same_language, Language, LogicSystem, Sort, Symbol, SymbolId};

/// A finite set of symbols of one language. Members may mix sorts.
#[derive(Debug, Clone)]
pub struct DeductionSet {
    language: Arc<Language>,
    members: BTreeSet<SymbolId>,
}

impl DeductionSet {
    pub fn empty(language: Arc<Language>) -> Self {
        DeductionSet {
            language,
            members: BTreeSet::new(),
        }
    }

    pub fn from_names<I>(language: Arc<Language>, names: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let members = names
            .into_iter()
            .map(|n| language.resolve(n.as_ref()))
            .collect::<Result<_>>()?;
        Ok(DeductionSet { language, members })
    }

    /// Panics if an id does not belong to `language`.
    pub fn from_ids(language: Arc<Language>, ids: impl IntoIterator<Item = SymbolId>) -> Self {
        let members: BTreeSet<SymbolId> = ids.into_iter().collect();
        assert!(
            members.iter().all(|id| id.index() < language.len()),
            "symbol id outside of language"
        );
        DeductionSet { language, members }
    }

    pub fn language(&self) -> &Arc<Language> {
        &self.language
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: SymbolId) -> bool {
        self.members.contains(&id)
    }

    pub fn contains_name(&self, name: &str) -> bool {
        self.language
            .lookup(name)
            .is_some_and(|id| self.members.contains(&id))
    }

    pub fn insert(&mut self, id: SymbolId) -> bool {
        assert!(
            id.index() < self.language.len(),
            "symbol id outside of language"
        );
        self.members.insert(id)
    }

    /// Members in name order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = SymbolId> + '_ {
        self.members.iter().copied()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> + '_ {
        self.members.iter().map(|&id| self.language.name(id))
    }

    pub fn members(&self) -> &BTreeSet<SymbolId> {
        &self.members
    }

    pub fn is_subset(&self, other: &DeductionSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &DeductionSet) -> Result<DeductionSet> {
        self.check_language(&other.language)?;
        Ok(DeductionSet {
            language: self.language.clone(),
            members: self.members.union(&other.members).copied().collect(),
        })
    }

    pub fn difference(&self, other: &DeductionSet) -> Result<DeductionSet> {
        self.check_language(&other.language)?;
        Ok(DeductionSet {
            language: self.language.clone(),
            members: self.members.difference(&other.members).copied().collect(),
        })
    }

    pub(crate) fn check_language(&self, language: &Arc<Language>) -> Result<()> {
        if same_language(&self.language, language) {
            Ok(())
        } else {
            Err(Error::LanguageMismatch)
        }
    }
}

impl PartialEq for DeductionSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && same_language(&self.language, &other.language)
    }
}

impl Eq for DeductionSet {}

/// Comma-separated names in lexicographic order; nonstandard names carry a
/// `*` prefix.
impl fmt::Display for DeductionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &id) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if self.language.sort(id) == Sort::Nonstandard {
                f.write_str("*")?;
            }
            f.write_str(self.language.name(id))?;
        }
        Ok(())
    }
}

/// One simultaneous pass of the coordinate rule after insertion:
/// `X ∪ {conclusion(r) : premise_set(r) ⊆ X}`.
pub fn step(system: &LogicSystem, x: &DeductionSet) -> Result<DeductionSet> {
    x.check_language(system.language())?;
    let mut out = x.clone();
    for rule in system.rules() {
        if rule.premises().iter().all(|p| x.members.contains(p)) {
            out.members.insert(rule.conclusion());
        }
    }
    Ok(out)
}

/// The value of the generated consequence operator at `x`.
pub fn close(system: &LogicSystem, x: &DeductionSet) -> Result<DeductionSet> {
    ClosureEngine::new(system).close(x)
}

/// Iterates [`step`] until nothing changes.
pub fn close_naive(system: &LogicSystem, x: &DeductionSet) -> Result<DeductionSet> {
    close_naive_with_rounds(system, x).map(|(set, _)| set)
}

/// Like [`close_naive`], also reporting how many rounds added symbols.
pub fn close_naive_with_rounds(
    system: &LogicSystem,
    x: &DeductionSet,
) -> Result<(DeductionSet, usize)> {
    let mut current = x.clone();
    let mut rounds = 0;
    loop {
        let next = step(system, &current)?;
        if next.len() == current.len() {
            return Ok((current, rounds));
        }
        rounds += 1;
        current = next;
    }
}

/// A logic-system compiled for repeated semi-naive closure.
///
/// Each rule keeps a counter of premises not yet deduced. A round only visits
/// the rules watching a symbol added in the previous round; a rule whose
/// counter reaches zero fires, and its conclusion joins the next round's
/// delta.
#[derive(Debug, Clone)]
pub struct ClosureEngine {
    language: Arc<Language>,
    conclusions: Vec<SymbolId>,
    pending: Vec<u32>,
    watchers: Vec<Vec<u32>>,
    distinct_conclusions: usize,
}

impl ClosureEngine {
    pub fn new(system: &LogicSystem) -> Self {
        let language = system.language().clone();
        let mut watchers = vec![Vec::new(); language.len()];
        let mut conclusions = Vec::with_capacity(system.len());
        let mut pending = Vec::with_capacity(system.len());
        for (r, rule) in system.rules().enumerate() {
            let premises = rule.premise_set();
            for p in &premises {
                watchers[p.index()].push(r as u32);
            }
            pending.push(premises.len() as u32);
            conclusions.push(rule.conclusion());
        }
        ClosureEngine {
            language,
            conclusions,
            pending,
            watchers,
            distinct_conclusions: system.conclusions().len(),
        }
    }

    pub fn language(&self) -> &Arc<Language> {
        &self.language
    }

    pub fn close(&self, x: &DeductionSet) -> Result<DeductionSet> {
        self.close_with_rounds(x).map(|(set, _)| set)
    }

    /// Closure plus the number of rounds that added at least one symbol.
    pub fn close_with_rounds(&self, x: &DeductionSet) -> Result<(DeductionSet, usize)> {
        x.check_language(&self.language)?;
        let mut member = vec![false; self.language.len()];
        let mut delta: Vec<SymbolId> = x.iter().collect();
        for id in &delta {
            member[id.index()] = true;
        }
        let mut added = Vec::new();
        let rounds = self.saturate(&mut member, &mut delta, &mut added);
        let mut out = x.clone();
        out.members.extend(added);
        Ok((out, rounds))
    }

    fn saturate(
        &self,
        member: &mut [bool],
        delta: &mut Vec<SymbolId>,
        added: &mut Vec<SymbolId>,
    ) -> usize {
        let mut pending = self.pending.clone();
        let mut next = Vec::new();
        let mut rounds = 0;
        loop {
            for s in delta.drain(..) {
                for &r in &self.watchers[s.index()] {
                    let left = &mut pending[r as usize];
                    *left -= 1;
                    if *left == 0 {
                        let c = self.conclusions[r as usize];
                        if !member[c.index()] {
                            member[c.index()] = true;
                            next.push(c);
                        }
                    }
                }
            }
            if next.is_empty() {
                return rounds;
            }
            rounds += 1;
            // Every productive round deduces at least one new conclusion.
            assert!(
                rounds <= self.distinct_conclusions,
                "closure exceeded its round bound"
            );
            added.extend_from_slice(&next);
            std::mem::swap(delta, &mut next);
        }
    }
}

/// The one-pass closed form for mixed ternary systems.
///
/// Returns [`Error::PreconditionViolated`] when the system is not mixed
/// ternary; callers then fall back to [`close`].
pub fn closed_form_ternary(system: &LogicSystem, x: &DeductionSet) -> Result<DeductionSet> {
    system
        .is_mixed_ternary()
        .map_err(Error::PreconditionViolated)?;
    step(system, x)
}

/// The closed form for mixed binary systems: `X ∪ {b : (λ, b) ∈ S, λ ∈ X}`.
pub fn closed_form_binary(system: &LogicSystem, x: &DeductionSet) -> Result<DeductionSet> {
    system
        .is_mixed_binary()
        .map_err(Error::PreconditionViolated)?;
    step(system, x)
}

/// The chain system `{(e_i, e_{i+1}) : 0 <= i < λ}` over the smallest
/// language containing the elements `e_0, ..., e_λ`.
pub fn chain_system(elements: &[Symbol]) -> Result<LogicSystem> {
    if elements.len() < 2 {
        return Err(Error::TooShort(elements.len()));
    }
    let mut seen = BTreeSet::new();
    for e in elements {
        if !seen.insert(e.name()) {
            return Err(Error::DuplicateElement(e.name().to_owned()));
        }
    }
    let language = Language::from_symbols(elements)?;
    LogicSystem::new(
        language,
        elements.windows(2).map(|w| ([w[0].name()], w[1].name())),
    )
}

/// Standard symbols `{prefix}0 ..= {prefix}{lambda}`.
pub fn chain_elements(prefix: &str, lambda: usize) -> Result<Vec<Symbol>> {
    (0..=lambda)
        .map(|i| Symbol::standard(format!("{prefix}{i}")))
        .collect()
}
