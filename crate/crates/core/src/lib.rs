//! Periodic perfect colorings of the square grid `G(Z²)`.
//!
//! A coloring is perfect when every node of color `i` has exactly `S[i][j]`
//! neighbors of color `j`. This crate reads such colorings from PCG text,
//! computes their quotient matrices, twin colors, diagonals, symmetry groups
//! and orbits, and enumerates all perfect colorings of small tori.
//!
//! ```
//! use pcg_core::{fixtures, perfect::check};
//!
//! let f = fixtures::get("II-base").unwrap();
//! let s = check(&f).unwrap();
//! assert_eq!(s.rows()[3], vec![2, 1, 1, 0]);
//! ```

pub mod coloring;
pub mod diagonal;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod grid;
pub mod lattice;
pub mod orbit;
pub mod pcg;
pub mod perfect;
pub mod twins;
pub mod window;

/// Exact rational numbers used for densities and stationary vectors.
pub type Rational = num_rational::Ratio<i128>;

pub use coloring::{ColorId, ColorPermutation, PeriodicColoring};
pub use enumerate::{ClassificationReport, SearchSpec};
pub use error::Error;
pub use grid::{GridAutomorphism, Orientation, PointOp, Vec2};
pub use lattice::Lattice;
pub use perfect::{QuotientMatrix, Violation};
pub use window::WindowColoring;
