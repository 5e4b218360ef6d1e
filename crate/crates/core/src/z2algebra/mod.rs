//! Linear algebra over the two-element field: bit-packed matrices, chain
//! complexes and their Betti numbers.

mod chain;
mod fixtures;
mod matrix;
mod sparse;

pub use chain::{betti, boundary_rank, euler_characteristic, BettiVector, ChainComplexZ2, ChainDefect};
pub use fixtures::{fixture_complexes, sphere_with_two_ears, two_points_and_circle, Fixture};
pub use matrix::{gf2_rank, BitMatrix};
pub use sparse::sparse_rank;
