//! Bit-vector subsets of a finite universe.

use std::fmt;

/// Largest universe representable by a [`SubsetMask`].
pub const MAX_POINTS: usize = 32;

/// A subset of a finite universe, encoded as a bit vector.
///
/// Bit `i` stands for the point with index `i` in the owning universe. No
/// bit at position `width` or above is ever set, so [`complement`] is an
/// involution. The derived ordering compares raw bit values, which is the
/// canonical member order used throughout the crate.
///
/// Masks of different widths never mix; the binary operations panic on a
/// width mismatch, the same way slice indexing panics out of bounds.
///
/// [`complement`]: SubsetMask::complement
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask {
    bits: u32,
    width: u8,
}

impl SubsetMask {
    /// The empty subset of a `width`-point universe.
    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_POINTS, "width {width} exceeds {MAX_POINTS}");
        SubsetMask {
            bits: 0,
            width: width as u8,
        }
    }

    /// The whole `width`-point universe.
    pub fn full(width: usize) -> Self {
        Self::empty(width).complement()
    }

    /// The one-point subset `{index}`.
    pub fn singleton(index: usize, width: usize) -> Self {
        Self::empty(width).with_point(index)
    }

    /// Builds a mask from raw bits, bit `i` marking point `i`.
    ///
    /// Panics if `bits` has a bit set at position `width` or above.
    pub fn from_bits(bits: u32, width: usize) -> Self {
        let empty = Self::empty(width);
        assert_eq!(
            bits & !full_bits(width),
            0,
            "bits {bits:#b} do not fit in width {width}"
        );
        SubsetMask { bits, ..empty }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn width(self) -> usize {
        self.width as usize
    }

    /// Number of points in the subset.
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == full_bits(self.width())
    }

    pub fn contains(self, index: usize) -> bool {
        index < self.width() && self.bits & (1 << index) != 0
    }

    /// This subset with `index` added.
    pub fn with_point(self, index: usize) -> Self {
        assert!(
            index < self.width(),
            "point {index} outside width {}",
            self.width()
        );
        SubsetMask {
            bits: self.bits | 1 << index,
            ..self
        }
    }

    pub fn union(self, other: Self) -> Self {
        self.check_same_width(other);
        SubsetMask {
            bits: self.bits | other.bits,
            ..self
        }
    }

    pub fn intersection(self, other: Self) -> Self {
        self.check_same_width(other);
        SubsetMask {
            bits: self.bits & other.bits,
            ..self
        }
    }

    pub fn complement(self) -> Self {
        SubsetMask {
            bits: !self.bits & full_bits(self.width()),
            ..self
        }
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.check_same_width(other);
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.check_same_width(other);
        self.bits & other.bits == 0
    }

    /// Ascending indices of the points in the subset.
    pub fn points(self) -> impl Iterator<Item = usize> {
        (0..self.width()).filter(move |i| self.bits & (1 << i) != 0)
    }

    fn check_same_width(self, other: Self) {
        assert_eq!(
            self.width, other.width,
            "subset width mismatch: {} vs {}",
            self.width, other.width
        );
    }
}

fn full_bits(width: usize) -> u32 {
    if width >= 32 {
        u32::MAX
    } else {
        (1u32 << width) - 1
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.points().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}/{}", self.width)
    }
}
