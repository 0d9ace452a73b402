//! Error type shared by the whole crate.

use crate::set_system::{set_notation, Element, Mask};

/// Everything that can go wrong when building or transforming set systems.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A set system must have at least one feasible set.
    #[error("improper set system: the feasible family is empty")]
    ImproperSetSystem,

    #[error("subset {} does not fit a ground set of size {n}", set_notation(*.mask))]
    MaskOutOfRange { mask: Mask, n: usize },

    #[error("element {element} is outside the ground set 1..={n}")]
    ElementOutOfRange { element: Element, n: usize },

    #[error("feasible set {} listed twice", set_notation(*.mask))]
    DuplicateFeasible { mask: Mask },

    #[error("ground set size {n} exceeds the {task} bound of {bound}")]
    Capacity {
        task: &'static str,
        n: usize,
        bound: usize,
    },

    /// The symmetric exchange axiom failed: no y ∈ X Δ Y makes {x, y} Δ X feasible.
    #[error(
        "not a delta-matroid: X={}, Y={}, x={element} admits no exchange partner",
        set_notation(*.x_set),
        set_notation(*.y_set)
    )]
    ExchangeAxiom {
        x_set: Mask,
        y_set: Mask,
        element: Element,
    },

    #[error("elements must be distinct, got {element} twice")]
    DistinctRequired { element: Element },

    #[error("{a}-{b} is not an edge")]
    NotAnEdge { a: usize, b: usize },

    #[error("matrix is not symmetric at ({i},{j})")]
    Asymmetric { i: usize, j: usize },

    /// The two moves disagreed on the fourth quadruple member; this would
    /// indicate a bug, not bad input, but it is reported rather than assumed away.
    #[error("slide and exchange failed to commute at a={a}, b={b}")]
    CommutationFailure { a: Element, b: Element },

    #[error("quadruple member `{member}` is not a delta-matroid: {source}")]
    InvalidQuadrupleMember {
        member: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
