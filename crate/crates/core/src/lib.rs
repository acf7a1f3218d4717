//! Combinatorial core for (R,q)-polycycles.
//!
//! A polycycle is a 2-connected plane graph whose faces are split into proper
//! faces (i-gons with i in R) and pairwise vertex-disjoint holes, such that
//! every vertex off the holes has degree exactly q. This crate holds the map
//! representation, the polycycle axioms and surgery (face addition/removal,
//! agglomeration along open edges, decomposition along bridges), the named
//! families, automorphism groups, and the catalog enumerator.
//!
//! Everything here is `no_std` + `alloc`; file formats and the command line
//! live in the `polycycle` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod edit;
pub mod enumerate;
mod error;
pub mod families;
pub mod map;
pub mod polycycle;
pub mod series;
pub mod symmetry;

pub use error::Error;
pub use map::{CanonicalCode, Dart, PlanarMap};
pub use polycycle::{Attachment, EdgeKind, Ellipticity, Params, Polycycle, Segment};
