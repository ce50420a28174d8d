//! Whole-space and per-subset predicates: door spaces, anti-density, and
//! anti-nowhere density.

use thiserror::Error;

use crate::operators::{closure, interior};
use crate::space::{check_anti_topology, AntiTopologyViolation, SetFamily, SpaceError, SubsetMask};

/// Point-count cap for the door scan, which walks the whole power set.
pub const DOOR_SCAN_MAX_POINTS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropsError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("family is not an anti-topology: {0}")]
    NotAntiTopology(AntiTopologyViolation),
}

/// Door verdict for an anti-topology.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoorReport {
    pub is_door: bool,
    /// Least subset in ascending bit order that is neither anti-open nor
    /// anti-closed, when the space is not door.
    pub counterexample: Option<SubsetMask>,
}

/// A space is door when every subset other than the empty set and the whole
/// universe is anti-open or anti-closed. Rejects families that fail the
/// anti-topology axioms.
pub fn door_space(family: &SetFamily) -> Result<DoorReport, PropsError> {
    check_anti_topology(family).map_err(PropsError::NotAntiTopology)?;
    let n = family.universe().size();
    if n > DOOR_SCAN_MAX_POINTS {
        return Err(SpaceError::CapacityExceeded {
            points: n,
            max: DOOR_SCAN_MAX_POINTS,
        }
        .into());
    }
    let closed = family.closed_family();
    for bits in 1..SubsetMask::full(n).bits() {
        let subset = SubsetMask::from_bits(bits, n);
        if !family.contains(subset) && !closed.contains(subset) {
            return Ok(DoorReport {
                is_door: false,
                counterexample: Some(subset),
            });
        }
    }
    Ok(DoorReport {
        is_door: true,
        counterexample: None,
    })
}

/// Density verdict with the three characterizations computed independently.
/// For anti-topologies they provably agree; `is_dense` is `by_closure`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityReport {
    pub is_dense: bool,
    /// The closure of the set is the whole universe.
    pub by_closure: bool,
    /// The set meets every member.
    pub by_meets_all: bool,
    /// The interior of the complement is empty.
    pub by_empty_exterior: bool,
    /// An anti-open set disjoint from the tested set: the complement of the
    /// first anti-closed superset, when one exists.
    pub blocking_witness: Option<SubsetMask>,
}

pub fn density(family: &SetFamily, a: SubsetMask) -> Result<DensityReport, SpaceError> {
    family.check_subset(a)?;
    let full = family.universe().full_set();
    let by_closure = closure(family, a)? == full;
    let by_meets_all = family.members().iter().all(|u| !u.is_disjoint(a));
    let by_empty_exterior = interior(family, a.complement())?.is_empty();
    let closed = family.closed_family();
    let blocking_witness = closed
        .members()
        .iter()
        .find(|superset| a.is_subset_of(**superset))
        .map(|superset| superset.complement());
    Ok(DensityReport {
        is_dense: by_closure,
        by_closure,
        by_meets_all,
        by_empty_exterior,
        blocking_witness,
    })
}

/// The interior of the closure of `a` is empty.
pub fn is_nowhere_dense(family: &SetFamily, a: SubsetMask) -> Result<bool, SpaceError> {
    Ok(interior(family, closure(family, a)?)?.is_empty())
}
