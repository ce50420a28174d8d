//! The anti-topology axioms, a brute-force oracle for them, and structure
//! classification.

use std::fmt;

use crate::space::{SetFamily, SpaceError, SubsetMask, Universe};

/// Why a family fails the anti-topology axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntiTopologyViolation {
    /// Anti-topologies need at least two points: on a one-point universe the
    /// only subsets are the empty set and the universe, both forbidden.
    UniverseTooSmall { size: usize },
    /// The empty set is a member.
    ContainsEmptySet,
    /// The whole universe is a member.
    ContainsUniverse,
    /// Two distinct members whose intersection is again a member.
    IntersectionInFamily {
        a: SubsetMask,
        b: SubsetMask,
        meet: SubsetMask,
    },
}

impl AntiTopologyViolation {
    /// Human-readable description with point labels.
    pub fn describe(&self, universe: &Universe) -> String {
        match self {
            AntiTopologyViolation::UniverseTooSmall { size } => {
                format!("universe has {size} point(s), anti-topologies need at least 2")
            }
            AntiTopologyViolation::ContainsEmptySet => "the empty set is a member".to_string(),
            AntiTopologyViolation::ContainsUniverse => "the whole universe is a member".to_string(),
            AntiTopologyViolation::IntersectionInFamily { a, b, meet } => format!(
                "members {} and {} intersect to {}, which is also a member",
                universe.format_subset(*a),
                universe.format_subset(*b),
                universe.format_subset(*meet)
            ),
        }
    }
}

impl fmt::Display for AntiTopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AntiTopologyViolation::UniverseTooSmall { size } => {
                write!(f, "universe has {size} point(s), need at least 2")
            }
            AntiTopologyViolation::ContainsEmptySet => write!(f, "the empty set is a member"),
            AntiTopologyViolation::ContainsUniverse => {
                write!(f, "the whole universe is a member")
            }
            AntiTopologyViolation::IntersectionInFamily { a, b, meet } => {
                write!(f, "members {a:?} and {b:?} intersect to member {meet:?}")
            }
        }
    }
}

/// Checks the anti-topology axioms: at least two points, neither the empty
/// set nor the whole universe is a member, and the intersection of any two
/// distinct members falls outside the family.
///
/// The pairwise intersection test is equivalent to demanding that every
/// non-trivial finite intersection and arbitrary union of members stays
/// outside the family: if an intersection `M` of several members lands in
/// the family, then `(A, M)` is a violating pair for any member `A != M`
/// of the subfamily, and if a union `U` lands in the family, `(A, U)` is
/// one because `A ∩ U = A`. [`is_anti_topology_oracle`] re-proves this
/// mechanically.
pub fn check_anti_topology(family: &SetFamily) -> Result<(), AntiTopologyViolation> {
    let universe = family.universe();
    if universe.size() < 2 {
        return Err(AntiTopologyViolation::UniverseTooSmall {
            size: universe.size(),
        });
    }
    if family.contains(universe.empty_set()) {
        return Err(AntiTopologyViolation::ContainsEmptySet);
    }
    if family.contains(universe.full_set()) {
        return Err(AntiTopologyViolation::ContainsUniverse);
    }
    let members = family.members();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            let meet = a.intersection(b);
            if family.contains(meet) {
                return Err(AntiTopologyViolation::IntersectionInFamily { a, b, meet });
            }
        }
    }
    Ok(())
}

pub fn is_anti_topology(family: &SetFamily) -> bool {
    check_anti_topology(family).is_ok()
}

/// True for the empty family over a universe of at least two points. The
/// axioms hold vacuously; enumeration and counting report this case
/// separately.
pub fn is_degenerate_anti_topology(family: &SetFamily) -> bool {
    family.is_empty() && is_anti_topology(family)
}

/// Brute-force axiom check: walks every subfamily of `2..=max_subfamily`
/// distinct members and tests that neither its intersection nor its union
/// is a member. Independent cross-check for [`check_anti_topology`].
///
/// Errors when `max_subfamily < 2`; subfamilies of fewer than two distinct
/// members are trivial and never constrained.
pub fn is_anti_topology_oracle(
    family: &SetFamily,
    max_subfamily: usize,
) -> Result<bool, SpaceError> {
    if max_subfamily < 2 {
        return Err(SpaceError::InvalidParameter(format!(
            "max_subfamily must be at least 2, got {max_subfamily}"
        )));
    }
    let universe = family.universe();
    if universe.size() < 2
        || family.contains(universe.empty_set())
        || family.contains(universe.full_set())
    {
        return Ok(false);
    }
    let cap = max_subfamily.min(family.len());
    let mut chosen = Vec::new();
    for size in 2..=cap {
        if !subfamilies_ok(family, size, 0, &mut chosen) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn subfamilies_ok(
    family: &SetFamily,
    size: usize,
    start: usize,
    chosen: &mut Vec<SubsetMask>,
) -> bool {
    if chosen.len() == size {
        let mut meet = chosen[0];
        let mut join = chosen[0];
        for &m in &chosen[1..] {
            meet = meet.intersection(m);
            join = join.union(m);
        }
        return !family.contains(meet) && !family.contains(join);
    }
    for i in start..family.len() {
        chosen.push(family.members()[i]);
        let ok = subfamilies_ok(family, size, i + 1, chosen);
        chosen.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Which classical structure axioms a family satisfies.
///
/// There is no flag for generalized weak structures because every family of
/// subsets is one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureClass {
    pub is_anti_topology: bool,
    /// Contains the empty set and the universe, closed under pairwise
    /// intersections and unions.
    pub is_topology: bool,
    /// Contains the empty set and the universe, closed under unions.
    pub is_supra: bool,
    /// Contains the empty set and the universe, closed under intersections.
    pub is_infra: bool,
    /// Contains the empty set and the universe.
    pub is_minimal_structure: bool,
    /// Contains the empty set.
    pub is_weak_structure: bool,
}

/// Computes every flag of [`StructureClass`] from its own definition. On a
/// finite universe, closure under pairwise unions already covers arbitrary
/// unions of subfamilies.
pub fn classify_structure(family: &SetFamily) -> StructureClass {
    let empty = family.universe().empty_set();
    let full = family.universe().full_set();
    let has_bounds = family.contains(empty) && family.contains(full);
    let meets_closed = all_pairs_closed(family, |a, b| a.intersection(b));
    let joins_closed = all_pairs_closed(family, |a, b| a.union(b));
    StructureClass {
        is_anti_topology: is_anti_topology(family),
        is_topology: has_bounds && meets_closed && joins_closed,
        is_supra: has_bounds && joins_closed,
        is_infra: has_bounds && meets_closed,
        is_minimal_structure: has_bounds,
        is_weak_structure: family.contains(empty),
    }
}

fn all_pairs_closed(family: &SetFamily, op: impl Fn(SubsetMask, SubsetMask) -> SubsetMask) -> bool {
    let members = family.members();
    members
        .iter()
        .enumerate()
        .all(|(i, &a)| members[i + 1..].iter().all(|&b| family.contains(op(a, b))))
}
