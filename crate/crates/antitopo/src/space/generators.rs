//! Ready-made families of the shapes that recur throughout the crate.

use crate::space::{SetFamily, SpaceError, SubsetMask, Universe};

/// All `k`-point subsets of the numeric `n`-point universe. Requires
/// `0 < k < n`, which is exactly when the result is an anti-topology:
/// distinct `k`-sets meet in fewer than `k` points and join in more.
pub fn k_uniform(n: usize, k: usize) -> Result<SetFamily, SpaceError> {
    if k == 0 || k >= n {
        return Err(SpaceError::InvalidParameter(format!(
            "k_uniform needs 0 < k < n, got n={n}, k={k}"
        )));
    }
    let universe = Universe::numeric(n)?;
    let mut members = Vec::new();
    // Gosper's hack: next integer with the same popcount.
    let mut bits: u32 = (1 << k) - 1;
    let limit = universe.full_set().bits();
    while bits <= limit {
        members.push(SubsetMask::from_bits(bits, n));
        let low = bits & bits.wrapping_neg();
        let ripple = bits + low;
        bits = ripple | (((bits ^ ripple) >> 2) / low);
    }
    SetFamily::new(universe, members)
}

/// All singletons of an `n`-letter universe. Requires `n >= 2`.
pub fn singletons(n: usize) -> Result<SetFamily, SpaceError> {
    if n < 2 {
        return Err(SpaceError::InvalidParameter(format!(
            "singletons needs n >= 2, got {n}"
        )));
    }
    let universe = Universe::letters(n)?;
    let members: Vec<_> = (0..n).map(|i| SubsetMask::singleton(i, n)).collect();
    SetFamily::new(universe, members)
}

/// The family `{{1,2}, {2,3}, ..., {n-1,n}}` over the numeric universe.
/// Requires `n >= 3` so that no member is the whole universe.
pub fn pair_chain(n: usize) -> Result<SetFamily, SpaceError> {
    if n < 3 {
        return Err(SpaceError::InvalidParameter(format!(
            "pair_chain needs n >= 3, got {n}"
        )));
    }
    let universe = Universe::numeric(n)?;
    let members: Vec<_> = (0..n - 1)
        .map(|i| SubsetMask::singleton(i, n).with_point(i + 1))
        .collect();
    SetFamily::new(universe, members)
}

/// The two-member family `{a, complement(a)}`, an anti-topology whenever
/// `a` is neither empty nor the whole universe.
pub fn split(universe: &Universe, a: SubsetMask) -> Result<SetFamily, SpaceError> {
    if a.width() != universe.size() {
        return Err(SpaceError::UniverseMismatch {
            expected: universe.size(),
            found: a.width(),
        });
    }
    if a.is_empty() || a.is_full() {
        return Err(SpaceError::InvalidParameter(
            "split needs a proper nonempty subset".to_string(),
        ));
    }
    SetFamily::new(universe.clone(), [a, a.complement()])
}

/// Literal example spaces that recur across the test suites and docs.
pub mod fixtures {
    use super::*;

    /// `{{1,2},{2,3},{3,4}}` on four numeric points.
    pub fn pair_chain_four() -> SetFamily {
        pair_chain(4).expect("valid parameters")
    }

    /// `{{1},{2}}` on two numeric points.
    pub fn two_point_split() -> SetFamily {
        let u = Universe::numeric(2).expect("valid size");
        let one = SubsetMask::singleton(0, 2);
        split(&u, one).expect("proper nonempty subset")
    }

    /// `{{a,b},{c,d},{e}}` on five letters.
    pub fn disjoint_blocks_five() -> SetFamily {
        let u = Universe::letters(5).expect("valid size");
        SetFamily::from_sets(&u, [vec!["a", "b"], vec!["c", "d"], vec!["e"]])
            .expect("labels are in the universe")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::is_anti_topology;

    #[test]
    fn singletons_of_three_letters() {
        let f = singletons(3).unwrap();
        let u = f.universe().clone();
        let expected = SetFamily::from_sets(&u, [["a"], ["b"], ["c"]]).unwrap();
        assert_eq!(f, expected);
        assert!(is_anti_topology(&f));
        assert!(singletons(1).is_err());
    }

    #[test]
    fn split_on_three_points() {
        let u = Universe::numeric(3).unwrap();
        let f = split(&u, u.subset(["1", "2"]).unwrap()).unwrap();
        let expected = SetFamily::from_sets(&u, [vec!["1", "2"], vec!["3"]]).unwrap();
        assert_eq!(f, expected);
        assert!(is_anti_topology(&f));
        assert!(split(&u, u.empty_set()).is_err());
        assert!(split(&u, u.full_set()).is_err());
    }

    #[test]
    fn k_uniform_covers_all_pairs() {
        let f = k_uniform(4, 2).unwrap();
        assert_eq!(f.len(), 6);
        assert!(is_anti_topology(&f));
        assert!(f.members().iter().all(|m| m.len() == 2));
        assert!(k_uniform(3, 0).is_err());
        assert!(k_uniform(3, 3).is_err());
    }

    #[test]
    fn pair_chain_matches_the_four_point_family() {
        let f = pair_chain(4).unwrap();
        let u = f.universe().clone();
        let expected = SetFamily::from_sets(&u, [["1", "2"], ["2", "3"], ["3", "4"]]).unwrap();
        assert_eq!(f, expected);
        assert!(is_anti_topology(&f));
        assert!(is_anti_topology(&pair_chain(3).unwrap()));
        assert!(pair_chain(2).is_err());
    }

    #[test]
    fn fixtures_are_anti_topologies() {
        for f in [
            fixtures::pair_chain_four(),
            fixtures::two_point_split(),
            fixtures::disjoint_blocks_five(),
        ] {
            assert!(is_anti_topology(&f));
        }
        assert_eq!(fixtures::pair_chain_four(), pair_chain(4).unwrap());
        assert_eq!(fixtures::disjoint_blocks_five().len(), 3);
    }
}
