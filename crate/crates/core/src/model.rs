//! Symbols, two-sorted languages, rules and logic-systems.
//!
//! A [`Language`] has a standard part and a disjoint nonstandard part. The
//! nonstandard sort stands in for the extension elements `*L - L` of a
//! standard language `L`; at this scale both parts are ordinary finite sets
//! and the sort is just a tag on each symbol.
//!
//! Symbols are interned per language. [`SymbolId`]s are assigned in
//! lexicographic order of the symbol names, so two equal languages agree on
//! every id and iterating ids in order iterates names in order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use indexmap::IndexSet;

use crate::error::{Error, Result};

/// Characters that may never appear in a symbol name.
pub const RESERVED_CHARS: [char; 5] = [',', '=', '>', '#', ':'];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    Standard,
    Nonstandard,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sort::Standard => f.write_str("standard"),
            Sort::Nonstandard => f.write_str("nonstandard"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    name: String,
    sort: Sort,
}

impl Symbol {
    pub fn new(name: impl Into<String>, sort: Sort) -> Result<Self> {
        let name = name.into();
        validate_name(&name)?;
        Ok(Symbol { name, sort })
    }

    pub fn standard(name: impl Into<String>) -> Result<Self> {
        Self::new(name, Sort::Standard)
    }

    pub fn nonstandard(name: impl Into<String>) -> Result<Self> {
        Self::new(name, Sort::Nonstandard)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn sort(&self) -> Sort {
        self.sort
    }

    pub fn is_standard(&self) -> bool {
        self.sort == Sort::Standard
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || RESERVED_CHARS.contains(&c))
}

fn validate_name(name: &str) -> Result<()> {
    if is_valid_name(name) {
        Ok(())
    } else {
        Err(Error::BadIdentifier(name.to_owned()))
    }
}

/// Index of a symbol inside its [`Language`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolId(pub(crate) u32);

impl SymbolId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite two-sorted language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Language {
    symbols: Vec<Symbol>,
    index: HashMap<String, SymbolId>,
}

impl Language {
    /// Builds a language from the names of its standard and nonstandard
    /// parts. Repeated names within one part are merged.
    pub fn new<I, J>(standard: I, nonstandard: J) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
        J: IntoIterator,
        J::Item: AsRef<str>,
    {
        let standard = collect_names(standard)?;
        let nonstandard = collect_names(nonstandard)?;
        if standard.is_empty() {
            return Err(Error::EmptyStandardPart);
        }
        if let Some(name) = standard.intersection(&nonstandard).next() {
            return Err(Error::NameCollision(name.clone()));
        }
        let mut symbols: Vec<Symbol> = standard
            .into_iter()
            .map(|name| Symbol {
                name,
                sort: Sort::Standard,
            })
            .chain(nonstandard.into_iter().map(|name| Symbol {
                name,
                sort: Sort::Nonstandard,
            }))
            .collect();
        symbols.sort_by(|a, b| a.name.cmp(&b.name));
        let index = symbols
            .iter()
            .enumerate()
            .map(|(i, s)| (s.name.clone(), SymbolId(i as u32)))
            .collect();
        Ok(Language { symbols, index })
    }

    /// The smallest language containing exactly the given symbols.
    pub fn from_symbols<'a>(symbols: impl IntoIterator<Item = &'a Symbol>) -> Result<Self> {
        let (standard, nonstandard): (Vec<&Symbol>, Vec<&Symbol>) =
            symbols.into_iter().partition(|s| s.is_standard());
        Language::new(
            standard.iter().map(|s| s.name()),
            nonstandard.iter().map(|s| s.name()),
        )
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, id: SymbolId) -> &Symbol {
        &self.symbols[id.index()]
    }

    pub fn name(&self, id: SymbolId) -> &str {
        self.symbols[id.index()].name()
    }

    pub fn sort(&self, id: SymbolId) -> Sort {
        self.symbols[id.index()].sort
    }

    pub fn lookup(&self, name: &str) -> Option<SymbolId> {
        self.index.get(name).copied()
    }

    pub fn resolve(&self, name: &str) -> Result<SymbolId> {
        self.lookup(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_owned()))
    }

    pub fn ids(&self) -> impl Iterator<Item = SymbolId> + '_ {
        (0..self.symbols.len() as u32).map(SymbolId)
    }

    pub fn symbols(&self) -> impl Iterator<Item = (SymbolId, &Symbol)> + '_ {
        self.symbols
            .iter()
            .enumerate()
            .map(|(i, s)| (SymbolId(i as u32), s))
    }

    pub fn standard_part(&self) -> impl Iterator<Item = &Symbol> + '_ {
        self.symbols.iter().filter(|s| s.sort == Sort::Standard)
    }

    pub fn nonstandard_part(&self) -> impl Iterator<Item = &Symbol> + '_ {
        self.symbols.iter().filter(|s| s.sort == Sort::Nonstandard)
    }
}

fn collect_names<I>(names: I) -> Result<BTreeSet<String>>
where
    I: IntoIterator,
    I::Item: AsRef<str>,
{
    names
        .into_iter()
        .map(|n| {
            let n = n.as_ref();
            validate_name(n).map(|_| n.to_owned())
        })
        .collect()
}

/// Two operands share a language when they point at the same allocation or
/// at structurally equal languages.
pub(crate) fn same_language(a: &Arc<Language>, b: &Arc<Language>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A rule of inference: `n - 1` premises and one conclusion.
///
/// Premise order is kept for faithful rendering, but deduction only looks at
/// [`Rule::premise_set`]. Rules order by arity, then premises, then
/// conclusion; with name-ordered ids that is the canonical listing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    premises: Vec<SymbolId>,
    conclusion: SymbolId,
}

impl Rule {
    pub fn premises(&self) -> &[SymbolId] {
        &self.premises
    }

    pub fn conclusion(&self) -> SymbolId {
        self.conclusion
    }

    /// Tuple length: premises plus the conclusion.
    pub fn arity(&self) -> usize {
        self.premises.len() + 1
    }

    /// The premises as a sorted set without repeats.
    pub fn premise_set(&self) -> Vec<SymbolId> {
        let mut set = self.premises.clone();
        set.sort_unstable();
        set.dedup();
        set
    }

    pub fn symbols(&self) -> impl Iterator<Item = SymbolId> + '_ {
        self.premises.iter().copied().chain(Some(self.conclusion))
    }
}

impl PartialOrd for Rule {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rule {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.premises
            .len()
            .cmp(&other.premises.len())
            .then_with(|| self.premises.cmp(&other.premises))
            .then_with(|| self.conclusion.cmp(&other.conclusion))
    }
}

/// A nonempty finite set of rules over one language.
///
/// Rules are kept in first-occurrence order (duplicates collapse); equality
/// ignores that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicSystem {
    language: Arc<Language>,
    rules: IndexSet<Rule>,
}

impl LogicSystem {
    /// Builds a system from `(premises, conclusion)` name tuples.
    pub fn new<L, I, P, S>(language: L, tuples: I) -> Result<Self>
    where
        L: Into<Arc<Language>>,
        I: IntoIterator<Item = (P, S)>,
        P: IntoIterator,
        P::Item: AsRef<str>,
        S: AsRef<str>,
    {
        let language = language.into();
        let mut rules = IndexSet::new();
        for (premises, conclusion) in tuples {
            let premises = premises
                .into_iter()
                .map(|p| language.resolve(p.as_ref()))
                .collect::<Result<Vec<_>>>()?;
            let conclusion = language.resolve(conclusion.as_ref())?;
            if premises.is_empty() {
                return Err(Error::NullaryRule);
            }
            rules.insert(Rule {
                premises,
                conclusion,
            });
        }
        if rules.is_empty() {
            return Err(Error::EmptySystem);
        }
        Ok(LogicSystem { language, rules })
    }

    /// Builds a system from already-resolved rules.
    pub fn from_rules(
        language: impl Into<Arc<Language>>,
        rules: impl IntoIterator<Item = Rule>,
    ) -> Result<Self> {
        let language = language.into();
        let rules: IndexSet<Rule> = rules.into_iter().collect();
        if rules.is_empty() {
            return Err(Error::EmptySystem);
        }
        for rule in &rules {
            if rule.premises.is_empty() {
                return Err(Error::NullaryRule);
            }
            if let Some(bad) = rule.symbols().find(|id| id.index() >= language.len()) {
                return Err(Error::UnknownSymbol(format!("#{}", bad.0)));
            }
        }
        Ok(LogicSystem { language, rules })
    }

    pub fn language(&self) -> &Arc<Language> {
        &self.language
    }

    /// Rules in first-occurrence order.
    pub fn rules(&self) -> impl ExactSizeIterator<Item = &Rule> + '_ {
        self.rules.iter()
    }

    pub fn rule(&self, index: usize) -> Option<&Rule> {
        self.rules.get_index(index)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Rules in canonical order.
    pub fn sorted_rules(&self) -> Vec<&Rule> {
        let mut rules: Vec<&Rule> = self.rules.iter().collect();
        rules.sort();
        rules
    }

    /// The rule listing as name tuples, suitable for [`LogicSystem::new`].
    pub fn tuples(&self) -> Vec<(Vec<&str>, &str)> {
        self.rules
            .iter()
            .map(|r| {
                (
                    r.premises.iter().map(|&p| self.language.name(p)).collect(),
                    self.language.name(r.conclusion),
                )
            })
            .collect()
    }

    /// Every symbol mentioned by some rule.
    pub fn symbols(&self) -> BTreeSet<SymbolId> {
        self.rules.iter().flat_map(Rule::symbols).collect()
    }

    pub fn premise_symbols(&self) -> BTreeSet<SymbolId> {
        self.rules
            .iter()
            .flat_map(|r| r.premises.iter().copied())
            .collect()
    }

    pub fn conclusions(&self) -> BTreeSet<SymbolId> {
        self.rules.iter().map(Rule::conclusion).collect()
    }

    pub fn max_premise_count(&self) -> usize {
        self.rules
            .iter()
            .map(|r| r.premise_set().len())
            .max()
            .unwrap_or(0)
    }

    /// Checks the shape required by the closed form for ternary mixed
    /// systems: every rule is `(standard, nonstandard) => standard` and no
    /// premise of any rule is the conclusion of any rule.
    pub fn is_mixed_ternary(&self) -> Result<(), ShapeViolation> {
        let lang = &self.language;
        for (i, rule) in self.rules.iter().enumerate() {
            let number = i + 1;
            if rule.arity() != 3 {
                return Err(ShapeViolation::WrongArity {
                    rule: number,
                    expected: 3,
                    found: rule.arity(),
                });
            }
            let checks = [
                (Position::Premise(1), rule.premises[0], Sort::Standard),
                (Position::Premise(2), rule.premises[1], Sort::Nonstandard),
                (Position::Conclusion, rule.conclusion, Sort::Standard),
            ];
            for (position, id, expected) in checks {
                if lang.sort(id) != expected {
                    return Err(ShapeViolation::WrongSort {
                        rule: number,
                        position,
                        symbol: lang.name(id).to_owned(),
                        expected,
                    });
                }
            }
        }
        self.check_premises_disjoint_from_conclusions()
    }

    /// Checks the shape required by the closed form for binary mixed
    /// systems: every rule is `nonstandard => standard`.
    pub fn is_mixed_binary(&self) -> Result<(), ShapeViolation> {
        let lang = &self.language;
        for (i, rule) in self.rules.iter().enumerate() {
            let number = i + 1;
            if rule.arity() != 2 {
                return Err(ShapeViolation::WrongArity {
                    rule: number,
                    expected: 2,
                    found: rule.arity(),
                });
            }
            let checks = [
                (Position::Premise(1), rule.premises[0], Sort::Nonstandard),
                (Position::Conclusion, rule.conclusion, Sort::Standard),
            ];
            for (position, id, expected) in checks {
                if lang.sort(id) != expected {
                    return Err(ShapeViolation::WrongSort {
                        rule: number,
                        position,
                        symbol: lang.name(id).to_owned(),
                        expected,
                    });
                }
            }
        }
        // Sorts already separate premises from conclusions.
        debug_assert!(self.check_premises_disjoint_from_conclusions().is_ok());
        Ok(())
    }

    fn check_premises_disjoint_from_conclusions(&self) -> Result<(), ShapeViolation> {
        let mut concluded_by: HashMap<SymbolId, usize> = HashMap::new();
        for (i, rule) in self.rules.iter().enumerate() {
            concluded_by.entry(rule.conclusion).or_insert(i + 1);
        }
        for (i, rule) in self.rules.iter().enumerate() {
            for &p in &rule.premises {
                if let Some(&k) = concluded_by.get(&p) {
                    return Err(ShapeViolation::PremiseIsConclusion {
                        premise: self.language.name(p).to_owned(),
                        premise_rule: i + 1,
                        conclusion_rule: k,
                    });
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    /// 1-based premise position.
    Premise(usize),
    Conclusion,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Premise(i) => write!(f, "premise {i}"),
            Position::Conclusion => f.write_str("conclusion"),
        }
    }
}

/// Why a system fails a mixed-shape recognizer. Rule numbers are 1-based in
/// first-occurrence order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeViolation {
    WrongArity {
        rule: usize,
        expected: usize,
        found: usize,
    },
    WrongSort {
        rule: usize,
        position: Position,
        symbol: String,
        expected: Sort,
    },
    PremiseIsConclusion {
        premise: String,
        premise_rule: usize,
        conclusion_rule: usize,
    },
}

impl fmt::Display for ShapeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeViolation::WrongArity { rule, expected, found } => {
                let shape = if *expected == 3 { "ternary" } else { "binary" };
                write!(f, "rule {rule} not {shape} (arity {found})")
            }
            ShapeViolation::WrongSort {
                rule,
                position,
                symbol,
                expected,
            } => write!(f, "{position} {symbol} of rule {rule} is not {expected}"),
            ShapeViolation::PremiseIsConclusion {
                premise,
                premise_rule,
                conclusion_rule,
            } => write!(
                f,
                "premise {premise} of rule {premise_rule} equals conclusion of rule {conclusion_rule}"
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lang(std: &[&str], ns: &[&str]) -> Arc<Language> {
        Arc::new(Language::new(std, ns).unwrap())
    }

    #[test]
    fn language_construction() {
        let l = Language::new(["a1", "b1"], ["l1"]).unwrap();
        assert_eq!(l.standard_part().count(), 2);
        assert_eq!(l.nonstandard_part().count(), 1);
        assert_eq!(l.sort(l.lookup("l1").unwrap()), Sort::Nonstandard);
    }

    #[test]
    fn language_errors() {
        assert_eq!(
            Language::new(["a1"], ["a1"]),
            Err(Error::NameCollision("a1".into()))
        );
        assert_eq!(
            Language::new(Vec::<&str>::new(), ["l1"]),
            Err(Error::EmptyStandardPart)
        );
        for bad in ["", "a b", "a,b", "x=", "y>", "#c", "d:"] {
            assert_eq!(
                Language::new([bad], Vec::<&str>::new()),
                Err(Error::BadIdentifier(bad.into()))
            );
        }
    }

    #[test]
    fn ids_follow_name_order() {
        let l = Language::new(["b", "a"], ["c", "B"]).unwrap();
        let names: Vec<&str> = l.ids().map(|i| l.name(i)).collect();
        assert_eq!(names, ["B", "a", "b", "c"]);
    }

    #[test]
    fn system_construction() {
        let l = lang(&["a1", "b1"], &["l1"]);
        let s = LogicSystem::new(l.clone(), [(["a1", "l1"], "b1")]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.rule(0).unwrap().arity(), 3);

        let s = LogicSystem::new(l.clone(), [(["a1", "l1"], "b1"), (["a1", "l1"], "b1")]).unwrap();
        assert_eq!(s.len(), 1);

        assert_eq!(
            LogicSystem::new(l.clone(), [(["a1", "zz"], "b1")]),
            Err(Error::UnknownSymbol("zz".into()))
        );
        assert_eq!(
            LogicSystem::new(l.clone(), Vec::<(Vec<&str>, &str)>::new()),
            Err(Error::EmptySystem)
        );
        assert_eq!(
            LogicSystem::new(l, [(Vec::<&str>::new(), "b1")]),
            Err(Error::NullaryRule)
        );
    }

    #[test]
    fn system_equality_ignores_order() {
        let l = lang(&["a", "b", "c"], &[]);
        let s1 = LogicSystem::new(l.clone(), [(vec!["a"], "b"), (vec!["b"], "c")]).unwrap();
        let s2 = LogicSystem::new(l, [(vec!["b"], "c"), (vec!["a"], "b")]).unwrap();
        assert_eq!(s1, s2);
    }

    #[test]
    fn premise_set_ignores_order_and_repeats() {
        let l = lang(&["a", "b", "c"], &[]);
        let s = LogicSystem::new(l, [(vec!["b", "a", "b"], "c")]).unwrap();
        let rule = s.rule(0).unwrap();
        assert_eq!(rule.premises().len(), 3);
        assert_eq!(rule.premise_set().len(), 2);
    }

    fn ternary_lang() -> Arc<Language> {
        lang(&["a1", "a2", "b1", "b2"], &["l1", "l2"])
    }

    #[test]
    fn mixed_ternary_recognizer() {
        let l = ternary_lang();
        let ok = LogicSystem::new(l.clone(), [(["a1", "l1"], "b1"), (["a2", "l2"], "b2")]).unwrap();
        assert_eq!(ok.is_mixed_ternary(), Ok(()));

        let chained =
            LogicSystem::new(l.clone(), [(["a1", "l1"], "b1"), (["b1", "l2"], "b2")]).unwrap();
        let err = chained.is_mixed_ternary().unwrap_err();
        assert_eq!(
            err,
            ShapeViolation::PremiseIsConclusion {
                premise: "b1".into(),
                premise_rule: 2,
                conclusion_rule: 1,
            }
        );
        assert_eq!(
            err.to_string(),
            "premise b1 of rule 2 equals conclusion of rule 1"
        );

        let mixed_arity =
            LogicSystem::new(l.clone(), [(vec!["a1", "l1"], "b1"), (vec!["a2"], "b1")]).unwrap();
        let err = mixed_arity.is_mixed_ternary().unwrap_err();
        assert_eq!(err.to_string(), "rule 2 not ternary (arity 2)");

        let swapped = LogicSystem::new(l, [(["l1", "a1"], "b1")]).unwrap();
        assert!(matches!(
            swapped.is_mixed_ternary(),
            Err(ShapeViolation::WrongSort {
                rule: 1,
                position: Position::Premise(1),
                ..
            })
        ));
    }

    #[test]
    fn mixed_binary_recognizer() {
        let l = ternary_lang();
        let ok = LogicSystem::new(l.clone(), [(["l1"], "b1"), (["l2"], "b2")]).unwrap();
        assert_eq!(ok.is_mixed_binary(), Ok(()));

        let standard_premise = LogicSystem::new(l.clone(), [(["a1"], "b1")]).unwrap();
        assert!(matches!(
            standard_premise.is_mixed_binary(),
            Err(ShapeViolation::WrongSort { .. })
        ));

        let arity = LogicSystem::new(l, [(vec!["l1"], "b1"), (vec!["a1", "l1"], "b2")]).unwrap();
        assert!(matches!(
            arity.is_mixed_binary(),
            Err(ShapeViolation::WrongArity { rule: 2, .. })
        ));
    }
}
