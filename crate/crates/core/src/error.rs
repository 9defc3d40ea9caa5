use thiserror::Error;

use crate::order::Element;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("carrier must contain at least one element")]
    EmptyCarrier,

    #[error("carrier of {0} elements exceeds the supported maximum of {max}", max = crate::set::MAX_ELEMENTS)]
    TooLarge(usize),

    #[error("element index {index} out of range for a carrier of {n} elements")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("order relation has a cycle: {a} <= {b} and {b} <= {a}")]
    CycleDetected { a: Element, b: Element },

    #[error("poset is not bounded: {0}")]
    NotBounded(String),

    #[error("expected {expected} names, got {got}")]
    NameCount { expected: usize, got: usize },

    #[error("involution is not a permutation of the carrier: {0}")]
    NotAPermutation(String),

    #[error("map is not an involution: {x}'' = {image} != {x}")]
    NotInvolutive { x: Element, image: Element },

    #[error("map is not antitone: {x} <= {y} but {y}' is not below {x}'")]
    NotAntitone { x: Element, y: Element },

    #[error("join of {a} and {b} does not exist{}", site(.pair))]
    MissingJoin {
        a: Element,
        b: Element,
        pair: Option<(Element, Element)>,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

fn site(pair: &Option<(Element, Element)>) -> String {
    match pair {
        Some((x, y)) => format!(" (evaluating the arrow at ({x}, {y}))"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, OrderError>;
