//! Canonical families of subsets over one universe.

use std::collections::BTreeSet;
use std::fmt;

use crate::space::{SpaceError, SubsetMask, Universe};

/// Point-count cap for [`SetFamily::associated_topology`], whose fixpoint
/// closure can touch a large part of the power set.
pub const ASSOCIATED_TOPOLOGY_MAX_POINTS: usize = 24;

/// A deduplicated collection of subsets of one universe.
///
/// Members are kept sorted by ascending bit value (label index 0 is the
/// least significant bit). This canonical form makes equality structural
/// and all derived output deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetFamily {
    universe: Universe,
    members: Vec<SubsetMask>,
}

impl SetFamily {
    /// Builds a family, sorting and deduplicating the members.
    pub fn new(
        universe: Universe,
        members: impl IntoIterator<Item = SubsetMask>,
    ) -> Result<Self, SpaceError> {
        let mut members: Vec<SubsetMask> = members.into_iter().collect();
        for member in &members {
            if member.width() != universe.size() {
                return Err(SpaceError::UniverseMismatch {
                    expected: universe.size(),
                    found: member.width(),
                });
            }
        }
        members.sort();
        members.dedup();
        Ok(SetFamily { universe, members })
    }

    /// The family with no members.
    pub fn empty(universe: Universe) -> Self {
        SetFamily {
            universe,
            members: Vec::new(),
        }
    }

    /// Builds a family from lists of point labels.
    pub fn from_sets<I, J, S>(universe: &Universe, sets: I) -> Result<Self, SpaceError>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let members = sets
            .into_iter()
            .map(|set| universe.subset(set))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(universe.clone(), members)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mask: SubsetMask) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    /// Errors unless `mask` is a subset over this family's universe.
    pub fn check_subset(&self, mask: SubsetMask) -> Result<(), SpaceError> {
        if mask.width() != self.universe.size() {
            return Err(SpaceError::UniverseMismatch {
                expected: self.universe.size(),
                found: mask.width(),
            });
        }
        Ok(())
    }

    /// The family of complements of the members. An involution.
    pub fn closed_family(&self) -> SetFamily {
        let members: Vec<_> = self.members.iter().map(|m| m.complement()).collect();
        SetFamily::new(self.universe.clone(), members)
            .expect("complements stay inside the universe")
    }

    /// Smallest topology containing this family: adds the empty set and the
    /// whole universe, then closes under pairwise intersections and unions
    /// until a fixpoint. On a finite universe this covers arbitrary unions.
    pub fn associated_topology(&self) -> Result<SetFamily, SpaceError> {
        let n = self.universe.size();
        if n > ASSOCIATED_TOPOLOGY_MAX_POINTS {
            return Err(SpaceError::CapacityExceeded {
                points: n,
                max: ASSOCIATED_TOPOLOGY_MAX_POINTS,
            });
        }
        let mut sets: BTreeSet<u32> = self.members.iter().map(|m| m.bits()).collect();
        sets.insert(0);
        sets.insert(SubsetMask::full(n).bits());
        loop {
            let snapshot: Vec<u32> = sets.iter().copied().collect();
            let before = sets.len();
            for (i, &a) in snapshot.iter().enumerate() {
                for &b in &snapshot[i + 1..] {
                    sets.insert(a & b);
                    sets.insert(a | b);
                }
            }
            if sets.len() == before {
                break;
            }
        }
        let members = sets.into_iter().map(|bits| SubsetMask::from_bits(bits, n));
        SetFamily::new(self.universe.clone(), members)
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, &m) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.universe.format_subset(m))?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain4() -> SetFamily {
        let u = Universe::numeric(4).unwrap();
        SetFamily::from_sets(&u, [["1", "2"], ["2", "3"], ["3", "4"]]).unwrap()
    }

    #[test]
    fn canonical_form_sorts_and_dedups() {
        let u = Universe::numeric(3).unwrap();
        let f = SetFamily::from_sets(&u, [vec!["3"], vec!["1", "2"], vec!["3"]]).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.members()[0], u.subset(["1", "2"]).unwrap());
        assert_eq!(f.members()[1], u.subset(["3"]).unwrap());
    }

    #[test]
    fn rejects_foreign_masks() {
        let u = Universe::numeric(3).unwrap();
        let err = SetFamily::new(u, [SubsetMask::empty(4)]);
        assert_eq!(
            err,
            Err(SpaceError::UniverseMismatch {
                expected: 3,
                found: 4
            })
        );
    }

    #[test]
    fn closed_family_of_the_pair_chain() {
        let f = chain4();
        let u = f.universe().clone();
        let expected = SetFamily::from_sets(&u, [["1", "2"], ["1", "4"], ["3", "4"]]).unwrap();
        assert_eq!(f.closed_family(), expected);
        assert_eq!(f.closed_family().closed_family(), f);
    }

    #[test]
    fn closed_family_of_disjoint_blocks() {
        let u = Universe::letters(5).unwrap();
        let f = SetFamily::from_sets(&u, [vec!["a", "b"], vec!["c", "d"], vec!["e"]]).unwrap();
        let expected = SetFamily::from_sets(
            &u,
            [
                vec!["c", "d", "e"],
                vec!["a", "b", "e"],
                vec!["a", "b", "c", "d"],
            ],
        )
        .unwrap();
        assert_eq!(f.closed_family(), expected);
    }

    #[test]
    fn associated_topology_of_the_pair_chain() {
        let f = chain4();
        let u = f.universe().clone();
        let tau = f.associated_topology().unwrap();
        let expected = SetFamily::from_sets(
            &u,
            vec![
                vec![],
                vec!["1", "2", "3", "4"],
                vec!["1", "2"],
                vec!["2", "3"],
                vec!["3", "4"],
                vec!["2"],
                vec!["3"],
                vec!["1", "2", "3"],
                vec!["2", "3", "4"],
            ],
        )
        .unwrap();
        assert_eq!(tau, expected);
        assert!(f.members().iter().all(|&m| tau.contains(m)));
    }

    #[test]
    fn associated_topology_of_disjoint_blocks() {
        let u = Universe::letters(5).unwrap();
        let f = SetFamily::from_sets(&u, [vec!["a", "b"], vec!["c", "d"], vec!["e"]]).unwrap();
        let expected = SetFamily::from_sets(
            &u,
            vec![
                vec![],
                vec!["a", "b", "c", "d", "e"],
                vec!["a", "b"],
                vec!["c", "d"],
                vec!["e"],
                vec!["a", "b", "c", "d"],
                vec!["a", "b", "e"],
                vec!["c", "d", "e"],
            ],
        )
        .unwrap();
        assert_eq!(f.associated_topology().unwrap(), expected);
    }

    #[test]
    fn associated_topology_fixes_topologies() {
        let u = Universe::numeric(3).unwrap();
        let t = SetFamily::from_sets(&u, vec![vec![], vec!["1"], vec!["1", "2", "3"]]).unwrap();
        assert_eq!(t.associated_topology().unwrap(), t);
    }

    #[test]
    fn associated_topology_capacity_guard() {
        let u = Universe::numeric(25).unwrap();
        let f = SetFamily::empty(u);
        assert_eq!(
            f.associated_topology(),
            Err(SpaceError::CapacityExceeded {
                points: 25,
                max: ASSOCIATED_TOPOLOGY_MAX_POINTS
            })
        );
    }
}
