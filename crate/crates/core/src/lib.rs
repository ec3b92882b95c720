//! Logic-systems over two-sorted languages and the finitary consequence
//! operators they generate.
//!
//! A [`LogicSystem`] is a finite set of rules, each a tuple of premise
//! symbols followed by a conclusion. Closing a set of symbols under the rules
//! ([`close`]) is the value of the consequence operator the system
//! generates. For the two "mixed" shapes, where standard and nonstandard
//! symbols are combined in a fixed pattern, the operator has a one-pass
//! closed form ([`closed_form_ternary`], [`closed_form_binary`]); the
//! [`laws`] module checks these claims and the consequence-operator axioms by
//! exhaustive enumeration over small universes.

pub mod closure;
pub mod error;
pub mod format;
pub mod influence;
pub mod laws;
pub mod model;

pub use closure::{
    chain_elements, chain_system, close, close_naive, closed_form_binary, closed_form_ternary,
    step, ClosureEngine, DeductionSet,
};
pub use error::{Error, Result};
pub use format::{
    parse_bytes, parse_set, parse_system, render_set, render_system, ParseError, ParseErrorKind,
    SystemDocument,
};
pub use influence::{compare_influence, weight_binary, weight_ternary, Influence, InfluenceWeight};
pub use laws::{
    check_axioms, equivalent, tabulate, verify_theorem_2_3, Equivalence, Law, LawReport,
    OperatorTable, Verdict, Witness, UNIVERSE_CAP,
};
pub use model::{Language, LogicSystem, Position, Rule, ShapeViolation, Sort, Symbol, SymbolId};
