use thiserror::Error;

use crate::{ArrowId, ObjectId};

/// Everything that can go wrong in this crate.
///
/// Law violations always carry the ids of the offending arrows (or
/// elements) so a caller can point at the exact place a table breaks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed tables: {0}")]
    Malformed(String),

    #[error("id {id} out of range (expected < {bound}) in {context}")]
    OutOfRange {
        context: &'static str,
        id: usize,
        bound: usize,
    },

    #[error("arrows {g2} and {g1} are not composable (src({g2}) != tgt({g1}))")]
    NotComposable { g2: ArrowId, g1: ArrowId },

    #[error("composition table: {0}")]
    CompositionTable(String),

    #[error("{}", display_laws(.0))]
    Laws(Vec<LawViolation>),

    #[error("group table: {0}")]
    GroupLaw(String),

    #[error("action law fails: {0}")]
    ActionLaw(String),

    #[error("map law fails at arrow {arrow}: {reason}")]
    MapLaw { arrow: ArrowId, reason: String },

    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),

    #[error("natural isomorphism law fails: {0}")]
    NatIsoLaw(String),

    #[error("{0} is not a weak equivalence")]
    NotWeakEquivalence(&'static str),

    #[error("cover does not cover the base: element {0} is missing")]
    NotACover(usize),

    #[error("action is not free: arrow {arrow} fixes element {element}")]
    NotFree { arrow: ArrowId, element: usize },

    #[error("not principal: {0}")]
    NotPrincipal(String),

    #[error("not an action map: {0}")]
    NotActionMap(String),

    #[error("bibundle law fails: {0}")]
    BibundleLaw(String),

    #[error("representation law fails at arrows {arrows:?}: {reason}")]
    RepLaw { arrows: Vec<ArrowId>, reason: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("scale bound exceeded: {what} has size {size}, bound is {bound}")]
    Scale {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

/// A single failed groupoid law, naming the arrows involved.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawViolation {
    #[error("unit arrow {unit} of object {object} is not a loop at {object}")]
    UnitNotLoop { object: ObjectId, unit: ArrowId },

    #[error("source/target of composite {g2}∘{g1} is wrong")]
    CompositeEndpoints { g2: ArrowId, g1: ArrowId },

    #[error("unit law fails at arrow {arrow}")]
    UnitLaw { arrow: ArrowId },

    #[error("inverse law fails at arrow {arrow}")]
    InverseLaw { arrow: ArrowId },

    #[error("associativity fails at triple ({g3}, {g2}, {g1})")]
    Associativity {
        g3: ArrowId,
        g2: ArrowId,
        g1: ArrowId,
    },
}

fn display_laws(v: &[LawViolation]) -> String {
    let parts: Vec<String> = v.iter().map(|l| l.to_string()).collect();
    format!("groupoid laws violated: {}", parts.join("; "))
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
