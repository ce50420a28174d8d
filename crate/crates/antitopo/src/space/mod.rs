//! Universes, subset masks, set families, and the anti-topology axioms.

mod family;
pub mod generators;
mod mask;
mod universe;
mod verify;

pub use family::{SetFamily, ASSOCIATED_TOPOLOGY_MAX_POINTS};
pub use mask::{SubsetMask, MAX_POINTS};
pub use universe::Universe;
pub use verify::{
    check_anti_topology, classify_structure, is_anti_topology, is_anti_topology_oracle,
    is_degenerate_anti_topology, AntiTopologyViolation, StructureClass,
};

use thiserror::Error;

/// Errors from constructing or combining the basic space types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("universe needs at least one label")]
    EmptyUniverse,
    #[error("duplicate label {0:?} in universe")]
    DuplicateLabel(String),
    #[error("universe has {count} points, at most {max} are supported")]
    TooManyPoints { count: usize, max: usize },
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("subset is over a {found}-point universe, expected {expected} points")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("universe has {points} points, this operation supports at most {max}")]
    CapacityExceeded { points: usize, max: usize },
    #[error("{0}")]
    InvalidParameter(String),
}
