//! Exhaustive enumeration of anti-topologies on small universes, counting,
//! and generic witness searches used by the property suites.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::maps::FiniteMap;
use crate::space::{SetFamily, SubsetMask, Universe};

/// Smallest universe an anti-topology can live on.
pub const MIN_ENUMERATION_POINTS: usize = 2;
/// Largest universe for full enumeration: the candidate pool has `2^n - 2`
/// proper nonempty subsets and the search walks its power set.
pub const MAX_ENUMERATION_POINTS: usize = 4;
/// Largest universe the seeded sampling mode accepts.
pub const MAX_SAMPLING_POINTS: usize = 5;
/// Largest subset tuple a witness search will sweep.
pub const MAX_WITNESS_ARITY: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("supported universe sizes are {min}..={max}, got {n}")]
    UnsupportedSize { n: usize, min: usize, max: usize },
    #[error("witness search supports at most {max} subsets per tuple, got {arity}")]
    ArityTooLarge { arity: usize, max: usize },
}

/// Every anti-topology on the numeric `n`-point universe, exactly once, in
/// canonical order: by member count, then lexicographically by the member
/// list. The degenerate empty family, when included, comes first.
pub struct EnumerationStream {
    n: usize,
    include_degenerate: bool,
    families: std::vec::IntoIter<SetFamily>,
}

impl EnumerationStream {
    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn includes_degenerate(&self) -> bool {
        self.include_degenerate
    }
}

impl Iterator for EnumerationStream {
    type Item = SetFamily;

    fn next(&mut self) -> Option<SetFamily> {
        self.families.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.families.size_hint()
    }
}

impl ExactSizeIterator for EnumerationStream {}

pub fn enumerate_anti_topologies(
    n: usize,
    include_degenerate: bool,
) -> Result<EnumerationStream, SearchError> {
    if !(MIN_ENUMERATION_POINTS..=MAX_ENUMERATION_POINTS).contains(&n) {
        return Err(SearchError::UnsupportedSize {
            n,
            min: MIN_ENUMERATION_POINTS,
            max: MAX_ENUMERATION_POINTS,
        });
    }
    let universe = Universe::numeric(n).expect("small numeric universes are valid");
    let full = SubsetMask::full(n).bits();
    let candidates: Vec<u32> = (1..full).collect();
    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut current = Vec::new();
    extend_family(&candidates, 0, &mut current, &mut found);
    if !include_degenerate {
        found.retain(|family| !family.is_empty());
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let families: Vec<SetFamily> = found
        .into_iter()
        .map(|bits| {
            SetFamily::new(
                universe.clone(),
                bits.into_iter().map(|b| SubsetMask::from_bits(b, n)),
            )
            .expect("enumerated members are over the numeric universe")
        })
        .collect();
    Ok(EnumerationStream {
        n,
        include_degenerate,
        families: families.into_iter(),
    })
}

/// Depth-first extension over ascending candidates. Every prefix of a valid
/// family is itself valid (the pairwise condition is hereditary), so each
/// recorded node is a family and pruning loses nothing.
fn extend_family(
    candidates: &[u32],
    start: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    out.push(current.clone());
    for i in start..candidates.len() {
        let candidate = candidates[i];
        if admissible(current, candidate) {
            current.push(candidate);
            extend_family(candidates, i + 1, current, out);
            current.pop();
        }
    }
}

/// A candidate joins a valid partial family only if no pair of the extended
/// family intersects to a member of the extended family.
fn admissible(current: &[u32], candidate: u32) -> bool {
    for (k, &a) in current.iter().enumerate() {
        let meet = a & candidate;
        if meet == candidate || current.contains(&meet) {
            return false;
        }
        for &b in &current[..k] {
            if a & b == candidate {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counts {
    pub non_degenerate: u64,
    /// `non_degenerate` plus the degenerate empty family.
    pub total: u64,
}

pub fn count_anti_topologies(n: usize) -> Result<Counts, SearchError> {
    let non_degenerate = enumerate_anti_topologies(n, false)?.len() as u64;
    Ok(Counts {
        non_degenerate,
        total: non_degenerate + 1,
    })
}

/// Seeded random probe for universes just beyond the full-enumeration range
/// (`n = 5`). Draws `attempts` random families of up to four members and
/// returns the distinct anti-topologies found, in canonical order. A smoke
/// check, not an enumeration: it feeds no frozen counts.
pub fn sample_anti_topologies(
    n: usize,
    attempts: u64,
    seed: u64,
) -> Result<Vec<SetFamily>, SearchError> {
    if !(MIN_ENUMERATION_POINTS..=MAX_SAMPLING_POINTS).contains(&n) {
        return Err(SearchError::UnsupportedSize {
            n,
            min: MIN_ENUMERATION_POINTS,
            max: MAX_SAMPLING_POINTS,
        });
    }
    let universe = Universe::numeric(n).expect("small numeric universes are valid");
    let full = SubsetMask::full(n).bits();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
    for _ in 0..attempts {
        let size = rng.gen_range(1..=4usize);
        let mut bits: Vec<u32> = (0..size).map(|_| rng.gen_range(1..full)).collect();
        bits.sort_unstable();
        bits.dedup();
        let family = SetFamily::new(
            universe.clone(),
            bits.iter().map(|&b| SubsetMask::from_bits(b, n)),
        )
        .expect("sampled members are over the numeric universe");
        if crate::space::is_anti_topology(&family) {
            found.insert(bits);
        }
    }
    let mut families: Vec<Vec<u32>> = found.into_iter().collect();
    families.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(families
        .into_iter()
        .map(|bits| {
            SetFamily::new(
                universe.clone(),
                bits.into_iter().map(|b| SubsetMask::from_bits(b, n)),
            )
            .expect("sampled members are over the numeric universe")
        })
        .collect())
}

/// Universe-size range and degeneracy policy for a witness search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceBounds {
    pub min_points: usize,
    pub max_points: usize,
    pub include_degenerate: bool,
}

impl SpaceBounds {
    /// `2..=n` points, non-degenerate families only.
    pub fn up_to(n: usize) -> Self {
        SpaceBounds {
            min_points: MIN_ENUMERATION_POINTS,
            max_points: n,
            include_degenerate: false,
        }
    }

    /// Exactly `n` points, non-degenerate families only.
    pub fn exactly(n: usize) -> Self {
        SpaceBounds {
            min_points: n,
            max_points: n,
            include_degenerate: false,
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        for n in [self.min_points, self.max_points] {
            if !(MIN_ENUMERATION_POINTS..=MAX_ENUMERATION_POINTS).contains(&n) {
                return Err(SearchError::UnsupportedSize {
                    n,
                    min: MIN_ENUMERATION_POINTS,
                    max: MAX_ENUMERATION_POINTS,
                });
            }
        }
        Ok(())
    }

    fn describe(&self) -> String {
        format!(
            "anti-topologies on {}..={} points{}",
            self.min_points,
            self.max_points,
            if self.include_degenerate {
                ", degenerate included"
            } else {
                ""
            }
        )
    }
}

/// Either the first witness in canonical order or a record that the bounded
/// search space was exhausted.
#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome<W> {
    Witness(W),
    Exhausted(Exhaustion),
}

impl<W> SearchOutcome<W> {
    pub fn witness(self) -> Option<W> {
        match self {
            SearchOutcome::Witness(w) => Some(w),
            SearchOutcome::Exhausted(_) => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, SearchOutcome::Exhausted(_))
    }
}

/// Proof-by-exhaustion token: what was searched and how many candidates the
/// predicate saw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exhaustion {
    pub searched: String,
    pub candidates_checked: u64,
}

/// First space in canonical enumeration order satisfying the predicate.
pub fn find_space(
    bounds: SpaceBounds,
    mut predicate: impl FnMut(&SetFamily) -> bool,
) -> Result<SearchOutcome<SetFamily>, SearchError> {
    bounds.validate()?;
    let mut checked = 0u64;
    for n in bounds.min_points..=bounds.max_points {
        for family in enumerate_anti_topologies(n, bounds.include_degenerate)? {
            checked += 1;
            if predicate(&family) {
                return Ok(SearchOutcome::Witness(family));
            }
        }
    }
    Ok(SearchOutcome::Exhausted(Exhaustion {
        searched: bounds.describe(),
        candidates_checked: checked,
    }))
}

/// First `(space, subset tuple)` in canonical order satisfying the
/// predicate. Tuples are swept lexicographically with the last position
/// cycling fastest; repeats are allowed.
pub fn find_space_with_subsets(
    bounds: SpaceBounds,
    arity: usize,
    mut predicate: impl FnMut(&SetFamily, &[SubsetMask]) -> bool,
) -> Result<SearchOutcome<(SetFamily, Vec<SubsetMask>)>, SearchError> {
    bounds.validate()?;
    if arity == 0 || arity > MAX_WITNESS_ARITY {
        return Err(SearchError::ArityTooLarge {
            arity,
            max: MAX_WITNESS_ARITY,
        });
    }
    let mut checked = 0u64;
    for n in bounds.min_points..=bounds.max_points {
        let subsets = 1u64 << n;
        let total = subsets.pow(arity as u32);
        for family in enumerate_anti_topologies(n, bounds.include_degenerate)? {
            for t in 0..total {
                let mut tuple = vec![SubsetMask::empty(n); arity];
                let mut rest = t;
                for slot in (0..arity).rev() {
                    tuple[slot] = SubsetMask::from_bits((rest % subsets) as u32, n);
                    rest /= subsets;
                }
                checked += 1;
                if predicate(&family, &tuple) {
                    return Ok(SearchOutcome::Witness((family, tuple)));
                }
            }
        }
    }
    Ok(SearchOutcome::Exhausted(Exhaustion {
        searched: format!("{} with {arity}-tuples of subsets", bounds.describe()),
        candidates_checked: checked,
    }))
}

/// All total maps from `domain` to `codomain`, in lexicographic order of
/// their image vectors.
pub fn maps_between(domain: &Universe, codomain: &Universe) -> impl Iterator<Item = FiniteMap> {
    let dn = domain.size();
    let cn = codomain.size() as u64;
    let total = cn.checked_pow(dn as u32).expect("map space too large");
    let domain = domain.clone();
    let codomain = codomain.clone();
    (0..total).map(move |t| {
        let mut images = vec![0usize; dn];
        let mut rest = t;
        for slot in (0..dn).rev() {
            images[slot] = (rest % cn) as usize;
            rest /= cn;
        }
        FiniteMap::new(domain.clone(), codomain.clone(), images)
            .expect("odometer images index the codomain")
    })
}

/// A map between two enumerated spaces satisfying a searched predicate.
#[derive(Debug, Clone, PartialEq)]
pub struct MapWitness {
    pub domain_family: SetFamily,
    pub codomain_family: SetFamily,
    pub map: FiniteMap,
}

/// First `(domain space, codomain space, map)` satisfying the predicate.
/// Order: domain size, codomain size, domain family, codomain family, map.
pub fn find_map(
    domain: SpaceBounds,
    codomain: SpaceBounds,
    mut predicate: impl FnMut(&FiniteMap, &SetFamily, &SetFamily) -> bool,
) -> Result<SearchOutcome<MapWitness>, SearchError> {
    domain.validate()?;
    codomain.validate()?;
    let mut checked = 0u64;
    for dn in domain.min_points..=domain.max_points {
        let domain_families: Vec<SetFamily> =
            enumerate_anti_topologies(dn, domain.include_degenerate)?.collect();
        for cn in codomain.min_points..=codomain.max_points {
            let codomain_families: Vec<SetFamily> =
                enumerate_anti_topologies(cn, codomain.include_degenerate)?.collect();
            let domain_universe = Universe::numeric(dn).expect("valid size");
            let codomain_universe = Universe::numeric(cn).expect("valid size");
            let maps: Vec<FiniteMap> = maps_between(&domain_universe, &codomain_universe).collect();
            for t in &domain_families {
                for s in &codomain_families {
                    for map in &maps {
                        checked += 1;
                        if predicate(map, t, s) {
                            return Ok(SearchOutcome::Witness(MapWitness {
                                domain_family: t.clone(),
                                codomain_family: s.clone(),
                                map: map.clone(),
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(SearchOutcome::Exhausted(Exhaustion {
        searched: format!("maps from {} to {}", domain.describe(), codomain.describe()),
        candidates_checked: checked,
    }))
}
