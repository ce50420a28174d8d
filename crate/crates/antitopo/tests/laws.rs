//! Property suites beyond the acceptance gate: the interior/closure
//! interaction laws, the pseudo-anti-open and anti-genuine closure rules,
//! search cross-validation against unpruned oracle enumeration, and the
//! boolean layer against plain truth tables.

mod common;

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use antitopo::modal::{truth_set, Model};
use antitopo::operators::{classify_subset, interior};
use antitopo::props::density;
use antitopo::search::{
    enumerate_anti_topologies, find_space_with_subsets, SearchOutcome, SpaceBounds,
};
use antitopo::space::{classify_structure, is_anti_topology, SetFamily, SubsetMask, Universe};

use common::*;

#[test]
fn associated_topologies_contain_their_families_and_are_topologies() {
    for n in 2..=4 {
        for space in enumerate_anti_topologies(n, true).unwrap() {
            let tau = space.associated_topology().unwrap();
            assert!(space.members().iter().all(|&m| tau.contains(m)));
            assert!(classify_structure(&tau).is_topology);
            // Complementation is an involution on any family.
            assert_eq!(space.closed_family().closed_family(), space);
        }
    }
}

#[test]
fn interior_distributes_laxly_over_meets_and_joins() {
    for n in 2..=4 {
        for space in enumerate_anti_topologies(n, false).unwrap() {
            let subsets: Vec<SubsetMask> = all_subsets(n).collect();
            let int = |a| interior(&space, a).unwrap();
            for &a in &subsets {
                for &b in &subsets {
                    assert!(int(a.intersection(b)).is_subset_of(int(a).intersection(int(b))));
                    assert!(int(a).union(int(b)).is_subset_of(int(a.union(b))));
                }
            }
            // The same inclusion for meets of up to three subsets.
            for combo in combinations_up_to(subsets.len(), 3) {
                if combo.is_empty() {
                    continue;
                }
                let tuple: Vec<SubsetMask> = combo.iter().map(|&i| subsets[i]).collect();
                let meet = tuple
                    .iter()
                    .copied()
                    .fold(space.universe().full_set(), SubsetMask::intersection);
                let meet_of_interiors = tuple
                    .iter()
                    .map(|&a| int(a))
                    .fold(space.universe().full_set(), SubsetMask::intersection);
                assert!(int(meet).is_subset_of(meet_of_interiors));
            }
        }
    }
}

#[test]
fn unions_of_pseudo_anti_open_sets_are_pseudo_anti_open() {
    for n in 2..=4 {
        for space in enumerate_anti_topologies(n, false).unwrap() {
            let pseudo: Vec<SubsetMask> = all_subsets(n)
                .filter(|&a| classify_subset(&space, a).unwrap().pseudo_anti_open)
                .collect();
            for combo in combinations_up_to(pseudo.len(), 3) {
                if combo.len() < 2 {
                    continue;
                }
                let union = combo
                    .iter()
                    .map(|&i| pseudo[i])
                    .fold(SubsetMask::empty(n), SubsetMask::union);
                assert!(
                    classify_subset(&space, union).unwrap().pseudo_anti_open,
                    "union of pseudo-anti-open sets is not pseudo-anti-open in {space}"
                );
            }
        }
    }
}

#[test]
fn anti_genuine_intersections_obey_the_side_condition() {
    for n in 2..=4 {
        for space in enumerate_anti_topologies(n, false).unwrap() {
            let subsets: Vec<SubsetMask> = all_subsets(n).collect();
            let int = |a| interior(&space, a).unwrap();
            let genuine = |a| classify_subset(&space, a).unwrap().anti_genuine;
            for &a in &subsets {
                for &b in &subsets {
                    if genuine(a) && genuine(b) {
                        let meet_int = int(a.intersection(b));
                        if meet_int != int(a) && meet_int != int(b) {
                            assert!(
                                !genuine(a.intersection(b)),
                                "side condition violated in {space}"
                            );
                        }
                    }
                }
            }
        }
    }
}

/// The block family on five letters shows both sides of the side condition,
/// and that unions of anti-genuine sets may or may not be anti-genuine.
#[test]
fn anti_genuine_block_family_instances() {
    let u = Universe::letters(5).unwrap();
    let space = family(&u, &[&["a", "b"], &["c", "d"], &["e"]]);
    let a = u.subset(["a", "b", "c"]).unwrap();
    let b = u.subset(["c", "d"]).unwrap();
    let c = u.subset(["a", "b"]).unwrap();
    let int = |m| interior(&space, m).unwrap();
    let genuine = |m| classify_subset(&space, m).unwrap().anti_genuine;
    assert!(genuine(a) && genuine(b) && genuine(c));

    // Interior of a ∩ b is empty, different from both interiors, and a ∩ b
    // is not anti-genuine.
    assert_eq!(int(a.intersection(b)), u.empty_set());
    assert!(!genuine(a.intersection(b)));

    // Interior of a ∩ c equals the interior of c and stays anti-open.
    assert_eq!(int(a.intersection(c)), c);
    assert!(space.contains(int(a.intersection(c))));
    assert!(genuine(a.intersection(c)));

    // One union of anti-genuine sets escapes, another stays.
    assert_eq!(int(a.union(b)), u.subset(["a", "b", "c", "d"]).unwrap());
    assert!(!genuine(a.union(b)));
    assert_eq!(int(a.union(c)), u.subset(["a", "b"]).unwrap());
    assert!(genuine(a.union(c)));
}

#[test]
fn pruned_enumeration_matches_unpruned_oracle_filtering() {
    for n in 2..=3 {
        for include_degenerate in [false, true] {
            let pruned: Vec<SetFamily> = enumerate_anti_topologies(n, include_degenerate)
                .unwrap()
                .collect();
            let unpruned = enumerate_by_oracle(n, include_degenerate);
            assert_eq!(pruned, unpruned, "pruning changed the result at n={n}");
        }
    }
}

#[test]
fn four_point_enumeration_matches_unpruned_pairwise_filtering() {
    let n = 4;
    let universe = Universe::numeric(n).unwrap();
    let full = SubsetMask::full(n).bits();
    let mut unpruned = 0u64;
    for code in 0u32..(1 << (full - 1)) {
        let members: Vec<SubsetMask> = (1..full)
            .filter(|&b| code & (1 << (b - 1)) != 0)
            .map(|b| SubsetMask::from_bits(b, n))
            .collect();
        if members.is_empty() {
            continue;
        }
        let candidate = SetFamily::new(universe.clone(), members).unwrap();
        if is_anti_topology(&candidate) {
            unpruned += 1;
        }
    }
    let pruned = enumerate_anti_topologies(n, false).unwrap().len() as u64;
    assert_eq!(pruned, unpruned);
    assert_eq!(pruned, 165);
}

#[test]
fn first_dense_pair_with_non_dense_intersection_is_pinned() {
    let outcome = find_space_with_subsets(SpaceBounds::up_to(4), 2, |f, sets| {
        let dense = |m| density(f, m).unwrap().is_dense;
        dense(sets[0]) && dense(sets[1]) && !dense(sets[0].intersection(sets[1]))
    })
    .unwrap();
    let (space, sets) = match outcome {
        SearchOutcome::Witness(w) => w,
        SearchOutcome::Exhausted(_) => panic!("a dense pair with non-dense meet exists"),
    };
    let u = Universe::numeric(3).unwrap();
    assert_eq!(space, family(&u, &[&["1", "2"]]));
    assert_eq!(sets[0], u.subset(["1"]).unwrap());
    assert_eq!(sets[1], u.subset(["2"]).unwrap());
}

#[test]
fn boolean_layer_agrees_with_truth_tables() {
    // Constant valuations make every world carry the same boolean
    // assignment, so the truth set must be everything or nothing according
    // to the truth table.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let u = Universe::numeric(2).unwrap();
    let frame = family(&u, &[&["1"]]);
    let names = ["p", "q", "r"];
    for _ in 0..300 {
        let formula = random_formula(&mut rng, &names, 4, false);
        for code in 0u8..8 {
            let assignment: BTreeMap<String, bool> = names
                .iter()
                .enumerate()
                .map(|(i, name)| (name.to_string(), code & (1 << i) != 0))
                .collect();
            let valuation: BTreeMap<String, SubsetMask> = assignment
                .iter()
                .map(|(name, &truth)| {
                    let mask = if truth { u.full_set() } else { u.empty_set() };
                    (name.clone(), mask)
                })
                .collect();
            let model = Model::new(frame.clone(), valuation).unwrap();
            let expected = if truth_table_eval(&formula, &assignment) {
                u.full_set()
            } else {
                u.empty_set()
            };
            assert_eq!(truth_set(&model, &formula).unwrap(), expected);
        }
    }
}
