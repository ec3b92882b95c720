//! Extensional operator tables over small universes and exhaustive checks of
//! the finitary consequence-operator axioms.
//!
//! A table stores one image per subset of its universe. Subsets are bitmasks
//! over the universe (bit `i` is the `i`-th universe symbol in name order) and
//! every search walks masks in ascending order, so the first counterexample
//! reported is the same on every run.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::closure::{closed_form_ternary, ClosureEngine, DeductionSet};
use crate::error::{Error, Result};
use crate::model::{same_language, Language, LogicSystem, SymbolId};

/// Largest universe a table may range over (2^16 subsets).
pub const UNIVERSE_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorTable {
    language: Arc<Language>,
    universe: Vec<SymbolId>,
    entries: Vec<u32>,
}

impl OperatorTable {
    /// Tabulates an arbitrary map on the subsets of `universe`. Every image
    /// must stay inside the universe.
    pub fn from_fn<F>(universe: &DeductionSet, f: F) -> Result<Self>
    where
        F: Fn(&DeductionSet) -> Result<DeductionSet> + Sync,
    {
        let mut table = OperatorTable::empty(universe)?;
        let entries = (0..table.size() as u32)
            .into_par_iter()
            .map(|mask| {
                let image = f(&table.subset(mask))?;
                image.check_language(&table.language)?;
                table.mask_of(&image)
            })
            .collect::<Result<Vec<u32>>>()?;
        table.entries = entries;
        Ok(table)
    }

    fn empty(universe: &DeductionSet) -> Result<Self> {
        if universe.len() > UNIVERSE_CAP {
            return Err(Error::UniverseTooLarge {
                size: universe.len(),
                cap: UNIVERSE_CAP,
            });
        }
        Ok(OperatorTable {
            language: universe.language().clone(),
            universe: universe.iter().collect(),
            entries: Vec::new(),
        })
    }

    pub fn language(&self) -> &Arc<Language> {
        &self.language
    }

    pub fn universe(&self) -> DeductionSet {
        DeductionSet::from_ids(self.language.clone(), self.universe.iter().copied())
    }

    pub fn universe_len(&self) -> usize {
        self.universe.len()
    }

    /// Number of subsets, `2^|universe|`.
    pub fn size(&self) -> usize {
        1 << self.universe.len()
    }

    pub fn image_mask(&self, mask: u32) -> u32 {
        self.entries[mask as usize]
    }

    pub fn image(&self, x: &DeductionSet) -> Result<DeductionSet> {
        x.check_language(&self.language)?;
        let mask = self.mask_of(x)?;
        Ok(self.subset(self.entries[mask as usize]))
    }

    pub fn subset(&self, mask: u32) -> DeductionSet {
        DeductionSet::from_ids(
            self.language.clone(),
            self.universe
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &id)| id),
        )
    }

    /// Fails with [`Error::UniverseIncomplete`] naming the first member of
    /// `x` outside the universe.
    pub fn mask_of(&self, x: &DeductionSet) -> Result<u32> {
        let mut mask = 0;
        for id in x.iter() {
            match self.universe.binary_search(&id) {
                Ok(i) => mask |= 1 << i,
                Err(_) => return Err(Error::UniverseIncomplete(self.language.name(id).to_owned())),
            }
        }
        Ok(mask)
    }

    /// Re-checks a single axiom at a reported witness. Returns `true` when
    /// the axiom holds there.
    pub fn holds(&self, law: Law, witness: &Witness) -> Result<bool> {
        let t = |m: u32| self.entries[m as usize];
        Ok(match (law, witness) {
            (Law::Insertion, Witness::Subset(x)) => {
                let m = self.mask_of(x)?;
                t(m) & m == m
            }
            (Law::Idempotence, Witness::Subset(x)) => {
                let m = self.mask_of(x)?;
                t(t(m)) == t(m)
            }
            (Law::Finitary, Witness::Subset(x)) => {
                let m = self.mask_of(x)?;
                finitary_union(&self.entries, m) == t(m)
            }
            (Law::Monotonicity, Witness::Pair { smaller, larger }) => {
                let (x, y) = (self.mask_of(smaller)?, self.mask_of(larger)?);
                x & !y != 0 || t(x) & !t(y) == 0
            }
            _ => true,
        })
    }
}

/// The generated operator restricted to the subsets of `universe`.
pub fn tabulate(system: &LogicSystem, universe: &DeductionSet) -> Result<OperatorTable> {
    universe.check_language(system.language())?;
    if universe.len() > UNIVERSE_CAP {
        return Err(Error::UniverseTooLarge {
            size: universe.len(),
            cap: UNIVERSE_CAP,
        });
    }
    if let Some(missing) = system
        .symbols()
        .into_iter()
        .find(|&id| !universe.contains(id))
    {
        return Err(Error::UniverseIncomplete(
            system.language().name(missing).to_owned(),
        ));
    }
    let engine = ClosureEngine::new(system);
    OperatorTable::from_fn(universe, |x| {
        let closed = engine.close(x)?;
        assert!(
            closed.is_subset(universe),
            "closure escaped a universe covering the system"
        );
        Ok(closed)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    /// `X ⊆ T(X)`
    Insertion,
    /// `T(T(X)) = T(X)`
    Idempotence,
    /// `X ⊆ Y ⇒ T(X) ⊆ T(Y)`
    Monotonicity,
    /// `T(X) = ⋃ {T(Z) : Z ⊆ X finite}`
    Finitary,
    /// No premise set inside `X` ⇒ the closure is `X` itself.
    ClauseA,
    /// Matched rules add exactly their conclusions, both to `X` and to each
    /// matched premise set on its own (together with any other rule sharing
    /// that premise set).
    ClauseB,
    /// The table built from the one-pass closed form equals the generated
    /// operator's table.
    TableEquality,
    /// The closed-form table satisfies the four axioms.
    ClosedFormAxioms,
}

impl Law {
    pub const AXIOMS: [Law; 4] = [
        Law::Insertion,
        Law::Idempotence,
        Law::Monotonicity,
        Law::Finitary,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Law::Insertion => "insertion",
            Law::Idempotence => "idempotence",
            Law::Monotonicity => "monotonicity",
            Law::Finitary => "finitary",
            Law::ClauseA => "clause_a",
            Law::ClauseB => "clause_b",
            Law::TableEquality => "table_equality",
            Law::ClosedFormAxioms => "closed_form_axioms",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Subset(DeductionSet),
    Pair {
        smaller: DeductionSet,
        larger: DeductionSet,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Subset(x) => write!(f, "{{{x}}}"),
            Witness::Pair { smaller, larger } => write!(f, "{{{smaller}}} <= {{{larger}}}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub law: Law,
    pub counterexample: Option<Witness>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub verdicts: Vec<Verdict>,
    pub subsets_checked: u64,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(Verdict::passed)
    }

    pub fn verdict(&self, law: Law) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.law == law)
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| !v.passed())
    }
}

/// Ascending submasks of `y`, starting at 0 and ending at `y`.
fn submasks(y: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let x = next?;
        next = if x == y {
            None
        } else {
            Some(((x | !y).wrapping_add(1)) & y)
        };
        Some(x)
    })
}

fn finitary_union(entries: &[u32], x: u32) -> u32 {
    submasks(x).fold(0, |acc, z| acc | entries[z as usize])
}

/// Checks insertion, idempotence, monotonicity (over all pairs `X ⊆ Y`) and
/// the finitary law (over all `Z ⊆ X`) on every subset of the universe.
pub fn check_axioms(table: &OperatorTable) -> LawReport {
    let t = &table.entries;
    let size = table.size() as u32;
    let subset = |m: u32| Witness::Subset(table.subset(m));

    let insertion = (0..size)
        .into_par_iter()
        .find_first(|&m| t[m as usize] & m != m)
        .map(subset);
    let idempotence = (0..size)
        .into_par_iter()
        .find_first(|&m| {
            let image = t[m as usize];
            t[image as usize] != image
        })
        .map(subset);
    let monotonicity = (0..size)
        .into_par_iter()
        .find_map_first(|y| {
            let ty = t[y as usize];
            submasks(y)
                .find(|&x| t[x as usize] & !ty != 0)
                .map(|x| (x, y))
        })
        .map(|(x, y)| Witness::Pair {
            smaller: table.subset(x),
            larger: table.subset(y),
        });
    let finitary = (0..size)
        .into_par_iter()
        .find_first(|&m| finitary_union(t, m) != t[m as usize])
        .map(subset);

    LawReport {
        verdicts: vec![
            Verdict {
                law: Law::Insertion,
                counterexample: insertion,
            },
            Verdict {
                law: Law::Idempotence,
                counterexample: idempotence,
            },
            Verdict {
                law: Law::Monotonicity,
                counterexample: monotonicity,
            },
            Verdict {
                law: Law::Finitary,
                counterexample: finitary,
            },
        ],
        subsets_checked: size as u64,
    }
}

/// Outcome of comparing two tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    /// The first subset (ascending mask order) where the images differ.
    Differ(DeductionSet),
}

impl Equivalence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equivalence::Equal)
    }
}

pub fn equivalent(a: &OperatorTable, b: &OperatorTable) -> Result<Equivalence> {
    if !same_language(&a.language, &b.language) || a.universe != b.universe {
        return Err(Error::UniverseMismatch);
    }
    Ok(
        match (0..a.size()).find(|&m| a.entries[m] != b.entries[m]) {
            Some(m) => Equivalence::Differ(a.subset(m as u32)),
            None => Equivalence::Equal,
        },
    )
}

/// Indices (first-occurrence order) of the rules whose premise set lies
/// inside `x`.
pub fn matched_rules(system: &LogicSystem, x: &DeductionSet) -> Result<Vec<usize>> {
    x.check_language(system.language())?;
    Ok(system
        .rules()
        .enumerate()
        .filter(|(_, r)| r.premises().iter().all(|&p| x.contains(p)))
        .map(|(i, _)| i)
        .collect())
}

/// Exhaustively checks both directions of the closed-form characterization
/// of mixed ternary systems over the symbols the system mentions.
///
/// Forward: every value of the generated operator satisfies clause (a) and
/// clause (b). Reverse: the operator defined by the closed form alone has
/// the same table and is itself a finitary consequence operator.
pub fn verify_theorem_2_3(system: &LogicSystem) -> Result<LawReport> {
    system
        .is_mixed_ternary()
        .map_err(Error::PreconditionViolated)?;
    let language = system.language().clone();
    let universe = DeductionSet::from_ids(language, system.symbols());
    let generated = tabulate(system, &universe)?;

    let rules: Vec<(u32, u32)> = system
        .rules()
        .map(|r| {
            let premises = DeductionSet::from_ids(universe.language().clone(), r.premise_set());
            let conclusion = DeductionSet::from_ids(universe.language().clone(), [r.conclusion()]);
            Ok((
                generated.mask_of(&premises)?,
                generated.mask_of(&conclusion)?,
            ))
        })
        .collect::<Result<_>>()?;
    let t = &generated.entries;
    let size = generated.size() as u32;

    let clause_a = (0..size)
        .find(|&x| rules.iter().all(|&(d, _)| d & x != d) && t[x as usize] != x)
        .map(|x| Witness::Subset(generated.subset(x)));
    let clause_b = (0..size)
        .find(|&x| {
            let matched: Vec<&(u32, u32)> = rules.iter().filter(|&&(d, _)| d & x == d).collect();
            if matched.is_empty() {
                return false;
            }
            debug_assert!(matched.len() <= rules.len());
            let expected = matched.iter().fold(x, |acc, &&(_, b)| acc | b);
            // Rules sharing a premise set all fire from it.
            let alone = |d: u32| {
                rules
                    .iter()
                    .filter(|&&(e, _)| e == d)
                    .fold(d, |acc, &(_, b)| acc | b)
            };
            t[x as usize] != expected || matched.iter().any(|&&(d, _)| t[d as usize] != alone(d))
        })
        .map(|x| Witness::Subset(generated.subset(x)));

    let closed_form = OperatorTable::from_fn(&universe, |x| closed_form_ternary(system, x))?;
    let table_equality = match equivalent(&generated, &closed_form)? {
        Equivalence::Equal => None,
        Equivalence::Differ(x) => Some(Witness::Subset(x)),
    };
    let closed_form_axioms = check_axioms(&closed_form)
        .first_failure()
        .and_then(|v| v.counterexample.clone());

    Ok(LawReport {
        verdicts: vec![
            Verdict {
                law: Law::ClauseA,
                counterexample: clause_a,
            },
            Verdict {
                law: Law::ClauseB,
                counterexample: clause_b,
            },
            Verdict {
                law: Law::TableEquality,
                counterexample: table_equality,
            },
            Verdict {
                law: Law::ClosedFormAxioms,
                counterexample: closed_form_axioms,
            },
        ],
        subsets_checked: size as u64,
    })
}
