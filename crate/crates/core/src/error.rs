use std::fmt;

use thiserror::Error;

use crate::order::ElementId;

/// Domain errors raised by the order operations.
///
/// Every variant carries the concrete elements that caused it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("invalid element token {0:?}: tokens must be nonempty and contain no whitespace or '<'")]
    InvalidToken(String),

    #[error("duplicate element `{0}`")]
    DuplicateElement(ElementId),

    #[error("unknown element `{0}`")]
    UnknownElement(ElementId),

    #[error("relation is not antisymmetric: cycle {}", Cycle(.cycle))]
    AntisymmetryViolation { cycle: Vec<ElementId> },

    #[error("relation is not transitively closed: `{x}` < `{y}` and `{y}` < `{z}` but not `{x}` < `{z}`")]
    NotClosed { x: ElementId, y: ElementId, z: ElementId },

    #[error("closure creates reflexive pair (`{0}`, `{0}`): the relation has a cycle")]
    ClosureCreatesReflexivePair(ElementId),

    #[error("forced pair must name two distinct elements, got `{0}` twice")]
    DegeneratePair(ElementId),

    #[error("`{a}` and `{b}` are already comparable")]
    NotIncomparable { a: ElementId, b: ElementId },

    #[error("ground set of size {size} exceeds the counting cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("linear extension count does not fit in 128 bits")]
    CountOverflow,

    #[error("sets are not disjoint: `{0}` appears in both")]
    NotDisjoint(ElementId),

    #[error("subset {0} is empty")]
    EmptySubset(&'static str),

    #[error("partition block {0} is empty")]
    EmptyBlock(usize),

    #[error("mapping is not a bijection: {0}")]
    NotBijective(String),
}

pub type Result<T, E = OrderError> = std::result::Result<T, E>;

struct Cycle<'a>(&'a [ElementId]);

impl fmt::Display for Cycle<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" -> ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
