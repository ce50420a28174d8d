//! Finite anti-topological spaces.
//!
//! An anti-topology on a finite universe `X` is a family of subsets that
//! contains neither the empty set nor `X` itself, and in which the
//! intersection and the union of any two distinct members fall outside the
//! family. This crate provides:
//!
//! - the axiom checker with violation reports, plus a brute-force subfamily
//!   oracle that cross-checks it ([`space`]);
//! - anti-interior and anti-closure operators over arbitrary set families,
//!   and the derived subset classifications ([`operators`]);
//! - whole-space predicates: door spaces, anti-density with its three
//!   equivalent characterizations, anti-nowhere density ([`props`]);
//! - total maps between spaces and the two continuity notions ([`maps`]);
//! - exhaustive enumeration of all anti-topologies on small universes and
//!   generic witness searches over them ([`search`]);
//! - a modal formula parser and a brute-force model checker for the box
//!   modality interpreted by family membership ([`modal`]);
//! - JSON document formats for spaces and maps ([`io`]).
//!
//! ```
//! use antitopo::operators::interior;
//! use antitopo::space::{is_anti_topology, SetFamily, Universe};
//!
//! let x = Universe::numeric(4)?;
//! let family = SetFamily::from_sets(&x, [["1", "2"], ["2", "3"], ["3", "4"]])?;
//! assert!(is_anti_topology(&family));
//!
//! let a = x.subset(["1", "2", "3"])?;
//! // The interior of {1,2,3} is {1,2} ∪ {2,3}, the whole of a, yet a is
//! // not itself anti-open.
//! assert_eq!(interior(&family, a)?, a);
//! assert!(!family.contains(a));
//! # Ok::<(), antitopo::space::SpaceError>(())
//! ```

pub mod io;
pub mod maps;
pub mod modal;
pub mod operators;
pub mod props;
pub mod search;
pub mod space;

pub use crate::space::{SetFamily, SpaceError, SubsetMask, Universe};
