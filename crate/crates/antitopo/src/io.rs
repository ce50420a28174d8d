//! JSON document formats for spaces and maps.
//!
//! A space document names a universe and a family of subsets, all by label:
//!
//! ```json
//! {"universe": ["1", "2", "3", "4"], "family": [["1", "2"], ["2", "3"], ["3", "4"]]}
//! ```
//!
//! A map document names both universes and one image per domain label:
//!
//! ```json
//! {"domain": ["1", "2"], "codomain": ["a", "b"], "map": {"1": "a", "2": "b"}}
//! ```
//!
//! Unknown labels are errors. Duplicate family members are collapsed with a
//! warning. Serialization is canonical: members in ascending bit order,
//! labels in universe order, so equal values produce identical bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::maps::FiniteMap;
use crate::space::{SetFamily, SpaceError, Universe};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("no image given for domain point {0:?}")]
    MissingImage(String),
    #[error("map key {0:?} is not a domain label")]
    UnknownMapKey(String),
}

#[derive(Serialize, Deserialize)]
struct SpaceDoc {
    universe: Vec<String>,
    family: Vec<Vec<String>>,
}

/// A parsed space document plus any warnings raised while reading it.
#[derive(Debug, Clone)]
pub struct ParsedSpace {
    pub family: SetFamily,
    pub warnings: Vec<String>,
}

pub fn space_from_json(text: &str) -> Result<ParsedSpace, FormatError> {
    let doc: SpaceDoc = serde_json::from_str(text)?;
    let universe = Universe::new(doc.universe)?;
    let mut members = Vec::new();
    let mut warnings = Vec::new();
    for set in &doc.family {
        let mask = universe.subset(set)?;
        if members.contains(&mask) {
            warnings.push(format!(
                "duplicate set {} collapsed",
                universe.format_subset(mask)
            ));
        } else {
            members.push(mask);
        }
    }
    let family = SetFamily::new(universe, members)?;
    Ok(ParsedSpace { family, warnings })
}

pub fn space_to_json(family: &SetFamily) -> String {
    let universe = family.universe();
    let doc = SpaceDoc {
        universe: universe.labels().to_vec(),
        family: family
            .members()
            .iter()
            .map(|&m| {
                universe
                    .set_labels(m)
                    .into_iter()
                    .map(str::to_string)
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("space documents always serialize")
}

#[derive(Serialize, Deserialize)]
struct MapDoc {
    domain: Vec<String>,
    codomain: Vec<String>,
    map: BTreeMap<String, String>,
}

pub fn map_from_json(text: &str) -> Result<FiniteMap, FormatError> {
    let doc: MapDoc = serde_json::from_str(text)?;
    let domain = Universe::new(doc.domain)?;
    let codomain = Universe::new(doc.codomain)?;
    for key in doc.map.keys() {
        if domain.index_of(key).is_none() {
            return Err(FormatError::UnknownMapKey(key.clone()));
        }
    }
    let mut images = Vec::with_capacity(domain.size());
    for i in 0..domain.size() {
        let label = domain.label(i);
        let target = doc
            .map
            .get(label)
            .ok_or_else(|| FormatError::MissingImage(label.to_string()))?;
        let image = codomain
            .index_of(target)
            .ok_or_else(|| SpaceError::UnknownLabel(target.clone()))?;
        images.push(image);
    }
    Ok(FiniteMap::new(domain, codomain, images)?)
}

pub fn map_to_json(map: &FiniteMap) -> String {
    let entries: BTreeMap<String, String> = (0..map.domain().size())
        .map(|i| {
            (
                map.domain().label(i).to_string(),
                map.codomain().label(map.apply(i)).to_string(),
            )
        })
        .collect();
    let doc = MapDoc {
        domain: map.domain().labels().to_vec(),
        codomain: map.codomain().labels().to_vec(),
        map: entries,
    };
    serde_json::to_string(&doc).expect("map documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::SubsetMask;
    use proptest::prelude::*;

    #[test]
    fn parses_the_documented_space() {
        let text = r#"{"universe": ["1","2","3","4"], "family": [["1","2"],["2","3"],["3","4"]]}"#;
        let parsed = space_from_json(text).unwrap();
        assert!(parsed.warnings.is_empty());
        assert_eq!(parsed.family.len(), 3);
        assert_eq!(parsed.family.universe().labels(), ["1", "2", "3", "4"]);
    }

    #[test]
    fn duplicate_sets_warn_and_collapse() {
        let text = r#"{"universe": ["1","2"], "family": [["1"],["1"],["2","1"],["1","2"]]}"#;
        let parsed = space_from_json(text).unwrap();
        assert_eq!(parsed.family.len(), 2);
        assert_eq!(parsed.warnings.len(), 2);
        assert!(parsed.warnings[0].contains("duplicate set {1}"));
    }

    #[test]
    fn unknown_labels_are_errors() {
        let text = r#"{"universe": ["1","2"], "family": [["3"]]}"#;
        assert!(matches!(
            space_from_json(text),
            Err(FormatError::Space(SpaceError::UnknownLabel(l))) if l == "3"
        ));
        let dup = r#"{"universe": ["1","1"], "family": []}"#;
        assert!(matches!(
            space_from_json(dup),
            Err(FormatError::Space(SpaceError::DuplicateLabel(_)))
        ));
    }

    #[test]
    fn map_documents_round_trip() {
        let text =
            r#"{"domain": ["1","2"], "codomain": ["a","b","c"], "map": {"1": "a", "2": "b"}}"#;
        let map = map_from_json(text).unwrap();
        assert_eq!(map.apply(0), 0);
        assert_eq!(map.apply(1), 1);
        assert_eq!(map_from_json(&map_to_json(&map)).unwrap(), map);
    }

    #[test]
    fn map_documents_must_be_total() {
        let missing = r#"{"domain": ["1","2"], "codomain": ["a"], "map": {"1": "a"}}"#;
        assert!(matches!(
            map_from_json(missing),
            Err(FormatError::MissingImage(l)) if l == "2"
        ));
        let extra = r#"{"domain": ["1"], "codomain": ["a"], "map": {"1": "a", "2": "a"}}"#;
        assert!(matches!(
            map_from_json(extra),
            Err(FormatError::UnknownMapKey(l)) if l == "2"
        ));
        let unknown = r#"{"domain": ["1"], "codomain": ["a"], "map": {"1": "z"}}"#;
        assert!(matches!(
            map_from_json(unknown),
            Err(FormatError::Space(SpaceError::UnknownLabel(l))) if l == "z"
        ));
    }

    proptest! {
        /// Canonical form survives a round trip through the file format.
        #[test]
        fn space_round_trip_is_identity(
            n in 1usize..=6,
            raw in proptest::collection::vec(0u32..64, 0..8),
        ) {
            let universe = Universe::numeric(n).unwrap();
            let limit = universe.full_set().bits();
            let members = raw.into_iter().map(|b| SubsetMask::from_bits(b & limit, n));
            let family = SetFamily::new(universe, members).unwrap();
            let text = space_to_json(&family);
            let reparsed = space_from_json(&text).unwrap();
            prop_assert!(reparsed.warnings.is_empty());
            prop_assert_eq!(reparsed.family, family.clone());
            prop_assert_eq!(space_to_json(&family), text);
        }
    }
}
