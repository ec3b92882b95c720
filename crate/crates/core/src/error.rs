use thiserror::Error;

use crate::model::ShapeViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building or evaluating a logic-system.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the standard part of a language must contain at least one symbol")]
    EmptyStandardPart,
    #[error("symbol `{0}` is declared as both standard and nonstandard")]
    NameCollision(String),
    #[error("`{0}` is not a valid symbol name")]
    BadIdentifier(String),
    #[error("a logic-system needs at least one rule")]
    EmptySystem,
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("a rule needs at least one premise")]
    NullaryRule,
    #[error("operands are defined over different languages")]
    LanguageMismatch,
    #[error("precondition violated: {0}")]
    PreconditionViolated(ShapeViolation),
    #[error("chain element `{0}` occurs more than once")]
    DuplicateElement(String),
    #[error("a chain needs at least 2 elements, got {0}")]
    TooShort(usize),
    #[error("universe of {size} symbols exceeds the cap of {cap}")]
    UniverseTooLarge { size: usize, cap: usize },
    #[error("universe does not contain symbol `{0}` used by the system")]
    UniverseIncomplete(String),
    #[error("operator tables are defined over different universes")]
    UniverseMismatch,
}
