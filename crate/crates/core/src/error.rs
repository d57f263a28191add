use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} is outside 1..{rank} for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("word is not reduced")]
    NotReduced,
    #[error("word contains the factor {letter}{letter} at position {position}")]
    QuadraticRule { letter: u8, position: usize },
    #[error("no {kind} move at position {position}")]
    InvalidSite { position: usize, kind: &'static str },
    #[error("enumeration exceeded the cap of {cap} states")]
    ExplosionGuard { cap: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("heap poset does not match the shape: {0}")]
    ShapeMismatch(String),
    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("{k} is not a braid hook of the tableau")]
    NotABraidHook { k: usize },
    #[error("shape condition violated: {0}")]
    ShapeConditionViolated(String),
    #[error("skew shape is disconnected")]
    DisconnectedShape,
    #[error("shape has no cells")]
    EmptyShape,
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("orbit is empty")]
    EmptyOrbit,
    #[error("position {k} is not a braid of the word")]
    NotABraid { k: usize },
    #[error("word has no preimage under the window bijection")]
    NoPreimage,
    #[error("cover relations contain a cycle")]
    PosetCycle,
    #[error("unknown poset element `{0}`")]
    UnknownElement(String),
    #[error("poset needs a unique minimum and maximum")]
    PosetLacksBounds,
    #[error("element is not a descent of the extension")]
    NotADescent,
    #[error("ideal must be neither empty nor the whole poset")]
    TrivialIdeal,
    #[error("subset is not an order ideal")]
    NotAnIdeal,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
