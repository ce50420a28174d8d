//! Anti-interior, anti-closure, and the derived subset classifications.
//!
//! Both operators are defined for an arbitrary family of subsets, not only
//! verified anti-topologies: the interior of `a` is the union of members
//! contained in `a`, and the closure is the intersection of member
//! complements containing `a`, where an empty union is the empty set and an
//! empty intersection is the whole universe.

use crate::space::{SetFamily, SpaceError, SubsetMask};

/// Union of all members contained in `a`.
pub fn interior(family: &SetFamily, a: SubsetMask) -> Result<SubsetMask, SpaceError> {
    family.check_subset(a)?;
    Ok(family
        .members()
        .iter()
        .filter(|u| u.is_subset_of(a))
        .fold(family.universe().empty_set(), |acc, &u| acc.union(u)))
}

/// Intersection of all anti-closed supersets of `a`, the whole universe
/// when there are none. A member's complement contains `a` exactly when the
/// member is disjoint from `a`.
pub fn closure(family: &SetFamily, a: SubsetMask) -> Result<SubsetMask, SpaceError> {
    family.check_subset(a)?;
    Ok(family
        .members()
        .iter()
        .filter(|u| u.is_disjoint(a))
        .fold(family.universe().full_set(), |acc, &u| {
            acc.intersection(u.complement())
        }))
}

/// How one subset sits relative to a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetClassification {
    /// The set is a member.
    pub anti_open: bool,
    /// The complement is a member.
    pub anti_closed: bool,
    /// The interior is the set itself.
    pub pseudo_anti_open: bool,
    /// The interior is a member.
    pub anti_genuine: bool,
    /// The set is contained in the closure of its interior.
    pub semi_open: bool,
    pub interior: SubsetMask,
    pub closure: SubsetMask,
}

/// Classifies `a` against the family. Every subset is classifiable,
/// including the empty set and the whole universe.
pub fn classify_subset(
    family: &SetFamily,
    a: SubsetMask,
) -> Result<SubsetClassification, SpaceError> {
    let int = interior(family, a)?;
    let cl = closure(family, a)?;
    Ok(SubsetClassification {
        anti_open: family.contains(a),
        anti_closed: family.contains(a.complement()),
        pseudo_anti_open: int == a,
        anti_genuine: family.contains(int),
        semi_open: a.is_subset_of(closure(family, int)?),
        interior: int,
        closure: cl,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::generators::fixtures::{disjoint_blocks_five, pair_chain_four};
    use crate::space::{SetFamily, Universe};

    fn pair_chain4() -> SetFamily {
        pair_chain_four()
    }

    fn blocks5() -> SetFamily {
        disjoint_blocks_five()
    }

    #[test]
    fn interior_can_leave_the_family() {
        let f = pair_chain4();
        let a = f.universe().subset(["1", "2", "3"]).unwrap();
        assert_eq!(interior(&f, a).unwrap(), a);
        assert!(!f.contains(a));
        // No anti-closed set contains {1,2,3}, so the closure is everything.
        assert_eq!(closure(&f, a).unwrap(), f.universe().full_set());
    }

    #[test]
    fn interior_and_closure_on_disjoint_blocks() {
        let f = blocks5();
        let u = f.universe();
        let a = u.subset(["a", "b", "c"]).unwrap();
        assert_eq!(interior(&f, a).unwrap(), u.subset(["a", "b"]).unwrap());
        assert_eq!(
            closure(&f, a).unwrap(),
            u.subset(["a", "b", "c", "d"]).unwrap()
        );
    }

    #[test]
    fn closure_of_the_empty_set_need_not_be_empty() {
        let u = Universe::letters(3).unwrap();
        let f = SetFamily::from_sets(&u, [["a"]]).unwrap();
        assert_eq!(
            closure(&f, u.empty_set()).unwrap(),
            u.subset(["b", "c"]).unwrap()
        );
    }

    #[test]
    fn interior_of_the_empty_set_is_empty() {
        let f = blocks5();
        let e = f.universe().empty_set();
        assert_eq!(interior(&f, e).unwrap(), e);
    }

    #[test]
    fn pseudo_anti_open_without_anti_genuine() {
        let f = pair_chain4();
        let a = f.universe().subset(["1", "2", "3"]).unwrap();
        let c = classify_subset(&f, a).unwrap();
        assert!(c.pseudo_anti_open);
        assert!(!c.anti_genuine);
        assert!(!c.anti_open);
    }

    #[test]
    fn anti_genuine_without_pseudo_anti_open() {
        let f = blocks5();
        let a = f.universe().subset(["a", "b", "c"]).unwrap();
        let c = classify_subset(&f, a).unwrap();
        assert!(c.anti_genuine);
        assert!(!c.pseudo_anti_open);
    }

    #[test]
    fn semi_open_with_empty_interior() {
        let u = Universe::letters(3).unwrap();
        let f = SetFamily::from_sets(&u, [["a"]]).unwrap();
        let a = u.subset(["b", "c"]).unwrap();
        let c = classify_subset(&f, a).unwrap();
        assert!(c.semi_open);
        assert!(c.interior.is_empty());
        assert_eq!(c.closure, a);
    }

    #[test]
    fn universe_mismatch_is_reported() {
        let f = pair_chain4();
        let foreign = crate::space::SubsetMask::empty(3);
        assert_eq!(
            interior(&f, foreign),
            Err(SpaceError::UniverseMismatch {
                expected: 4,
                found: 3
            })
        );
    }
}
