//! Total maps between finite universes and the two continuity notions.

use thiserror::Error;

use crate::space::{
    check_anti_topology, AntiTopologyViolation, SetFamily, SpaceError, SubsetMask, Universe,
};

/// A total function between two universes, stored as one codomain index per
/// domain point. Maps need not be injective or surjective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMap {
    domain: Universe,
    codomain: Universe,
    images: Vec<usize>,
}

impl FiniteMap {
    /// `images[i]` is the codomain index of the image of domain point `i`.
    pub fn new(
        domain: Universe,
        codomain: Universe,
        images: Vec<usize>,
    ) -> Result<Self, SpaceError> {
        if images.len() != domain.size() {
            return Err(SpaceError::InvalidParameter(format!(
                "map needs {} images, got {}",
                domain.size(),
                images.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&i| i >= codomain.size()) {
            return Err(SpaceError::InvalidParameter(format!(
                "image index {bad} is outside the {}-point codomain",
                codomain.size()
            )));
        }
        Ok(FiniteMap {
            domain,
            codomain,
            images,
        })
    }

    pub fn domain(&self) -> &Universe {
        &self.domain
    }

    pub fn codomain(&self) -> &Universe {
        &self.codomain
    }

    /// Codomain index of the image of domain point `point`.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Image of a domain subset.
    pub fn image(&self, a: SubsetMask) -> Result<SubsetMask, SpaceError> {
        if a.width() != self.domain.size() {
            return Err(SpaceError::UniverseMismatch {
                expected: self.domain.size(),
                found: a.width(),
            });
        }
        Ok(a.points().fold(self.codomain.empty_set(), |acc, p| {
            acc.with_point(self.images[p])
        }))
    }

    /// Preimage of a codomain subset. Commutes exactly with complement,
    /// union, and intersection.
    pub fn preimage(&self, b: SubsetMask) -> Result<SubsetMask, SpaceError> {
        if b.width() != self.codomain.size() {
            return Err(SpaceError::UniverseMismatch {
                expected: self.codomain.size(),
                found: b.width(),
            });
        }
        Ok((0..self.domain.size())
            .filter(|&p| b.contains(self.images[p]))
            .fold(self.domain.empty_set(), |acc, p| acc.with_point(p)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapsError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("domain family is over a different universe than the map's domain")]
    DomainMismatch,
    #[error("codomain family is over a different universe than the map's codomain")]
    CodomainMismatch,
    #[error("domain family is not an anti-topology: {0}")]
    DomainNotAntiTopology(AntiTopologyViolation),
    #[error("codomain family is not an anti-topology: {0}")]
    CodomainNotAntiTopology(AntiTopologyViolation),
}

/// Anti-continuity verdict. On failure, the first codomain member in
/// canonical order whose preimage is not anti-open.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContinuityReport {
    pub is_continuous: bool,
    pub failing_member: Option<SubsetMask>,
}

/// A map is anti-continuous when the preimage of every anti-open set is
/// anti-open.
pub fn anti_continuous(
    map: &FiniteMap,
    domain_family: &SetFamily,
    codomain_family: &SetFamily,
) -> Result<ContinuityReport, MapsError> {
    validate(map, domain_family, codomain_family)?;
    for &member in codomain_family.members() {
        let pre = map.preimage(member).expect("universes validated");
        if !domain_family.contains(pre) {
            return Ok(ContinuityReport {
                is_continuous: false,
                failing_member: Some(member),
            });
        }
    }
    Ok(ContinuityReport {
        is_continuous: true,
        failing_member: None,
    })
}

/// A domain point and a codomain member around its image witnessing a
/// point-continuity failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointFailure {
    pub point: usize,
    pub neighborhood: SubsetMask,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointContinuityReport {
    pub is_continuous: bool,
    pub failure: Option<PointFailure>,
}

/// A map is point-anti-continuous when for every domain point `x` and every
/// anti-open `V` around its image there is an anti-open `U` with `x ∈ U`
/// and `f(U) ⊆ V`.
pub fn point_anti_continuous(
    map: &FiniteMap,
    domain_family: &SetFamily,
    codomain_family: &SetFamily,
) -> Result<PointContinuityReport, MapsError> {
    validate(map, domain_family, codomain_family)?;
    for point in 0..map.domain().size() {
        for &neighborhood in codomain_family.members() {
            if !neighborhood.contains(map.apply(point)) {
                continue;
            }
            let witnessed = domain_family.members().iter().any(|&u| {
                u.contains(point)
                    && map
                        .image(u)
                        .expect("universes validated")
                        .is_subset_of(neighborhood)
            });
            if !witnessed {
                return Ok(PointContinuityReport {
                    is_continuous: false,
                    failure: Some(PointFailure {
                        point,
                        neighborhood,
                    }),
                });
            }
        }
    }
    Ok(PointContinuityReport {
        is_continuous: true,
        failure: None,
    })
}

fn validate(
    map: &FiniteMap,
    domain_family: &SetFamily,
    codomain_family: &SetFamily,
) -> Result<(), MapsError> {
    if domain_family.universe() != map.domain() {
        return Err(MapsError::DomainMismatch);
    }
    if codomain_family.universe() != map.codomain() {
        return Err(MapsError::CodomainMismatch);
    }
    check_anti_topology(domain_family).map_err(MapsError::DomainNotAntiTopology)?;
    check_anti_topology(codomain_family).map_err(MapsError::CodomainNotAntiTopology)?;
    Ok(())
}
