//! Labeled finite universes of points.

use std::sync::Arc;

use crate::space::mask::{SubsetMask, MAX_POINTS};
use crate::space::SpaceError;

/// An ordered list of distinct point labels.
///
/// The position of a label is its point index, and masks refer to points by
/// index. Cloning is cheap; two universes are equal exactly when their label
/// lists are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Universe {
    labels: Arc<[String]>,
}

impl Universe {
    /// Builds a universe from labels, which must be distinct and nonempty.
    pub fn new<I, S>(labels: I) -> Result<Self, SpaceError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(SpaceError::EmptyUniverse);
        }
        if labels.len() > MAX_POINTS {
            return Err(SpaceError::TooManyPoints {
                count: labels.len(),
                max: MAX_POINTS,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(SpaceError::DuplicateLabel(label.clone()));
            }
        }
        Ok(Universe {
            labels: labels.into(),
        })
    }

    /// The universe `{"1", ..., "n"}`.
    pub fn numeric(n: usize) -> Result<Self, SpaceError> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    /// The universe `{"a", "b", ...}` with `n` letter labels (`n <= 26`).
    pub fn letters(n: usize) -> Result<Self, SpaceError> {
        if n > 26 {
            return Err(SpaceError::InvalidParameter(format!(
                "letter universes support at most 26 points, got {n}"
            )));
        }
        Self::new((0..n).map(|i| char::from(b'a' + i as u8).to_string()))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of the point at `index`. Panics when out of range.
    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn empty_set(&self) -> SubsetMask {
        SubsetMask::empty(self.size())
    }

    pub fn full_set(&self) -> SubsetMask {
        SubsetMask::full(self.size())
    }

    /// The subset holding exactly the named points.
    pub fn subset<I, S>(&self, labels: I) -> Result<SubsetMask, SpaceError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut mask = self.empty_set();
        for label in labels {
            let label = label.as_ref();
            match self.index_of(label) {
                Some(i) => mask = mask.with_point(i),
                None => return Err(SpaceError::UnknownLabel(label.to_string())),
            }
        }
        Ok(mask)
    }

    /// Labels of the points in `mask`, in index order.
    ///
    /// Panics if the mask belongs to a universe of a different size.
    pub fn set_labels(&self, mask: SubsetMask) -> Vec<&str> {
        assert_eq!(
            mask.width(),
            self.size(),
            "mask width {} does not match universe size {}",
            mask.width(),
            self.size()
        );
        mask.points().map(|i| self.label(i)).collect()
    }

    /// Renders `mask` like `{a, b}`.
    pub fn format_subset(&self, mask: SubsetMask) -> String {
        let mut out = String::from("{");
        for (k, label) in self.set_labels(mask).iter().enumerate() {
            if k > 0 {
                out.push_str(", ");
            }
            out.push_str(label);
        }
        out.push('}');
        out
    }
}
