//! Lower bounds on chromatic numbers from the mod-2 homology of Hom
//! complexes.
//!
//! For a test graph `T` carrying an edge-flipping involution, the cells of
//! `Hom(T, G)` are the multihomomorphisms `T → G`. When the reduced mod-2
//! homology of this complex vanishes through dimension `d`, the chromatic
//! number of `G` is at least `d + 1 + χ(T)`.
//!
//! * [`graph`]: graphs, parsers, fold reduction, coloring, test graphs.
//! * [`homcomplex`]: enumeration of `Hom(T, G)`, boundaries, involutions.
//! * [`z2algebra`]: bit-packed matrices and chain complexes over the
//!   two-element field.
//! * [`bound`]: the homology test and suite reports.

pub mod bits;
pub mod bound;
pub mod error;
pub mod graph;
pub mod homcomplex;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod selftest;
pub mod z2algebra;

pub use error::{Error, Result};
