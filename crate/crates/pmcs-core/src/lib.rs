//! Exact-arithmetic toolkit for principal minors and cycle-sums of square
//! matrices: brute-force extraction, coordinate conversion through the
//! set-partition lattice, canonical matrix families with closed-form
//! coordinates, the relation ideals cutting out each realizability class,
//! and the symmetrized assignment decision/witness machinery.
//!
//! The crate is `no_std` (alloc required); IO, JSON, and the command-line
//! front end live in the companion `pmcs-cli` crate.
//!
//! ```
//! use pmcs_core::coordinates::d_from_c_subset;
//! use pmcs_core::matrix::{CoordKind, SquareMatrix, SymVector};
//! use pmcs_core::relations::MatrixClass;
//! use pmcs_core::scalar::Scalar;
//! use pmcs_core::spmap::{witness, WitnessMode};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let a = SquareMatrix::new(vec![
//!     vec![Scalar::from_integer(0), Scalar::from_integer(1)],
//!     vec![Scalar::from_integer(-1), Scalar::from_integer(0)],
//! ])?;
//! let minors = a.principal_minors()?;
//! let cycles = a.cycle_sums()?;
//! assert_eq!(d_from_c_subset(&cycles).values(), minors.values());
//!
//! // Some 4x4 skew-symmetric matrix has symmetrized cycle-sums
//! // (c_1, ..., c_4) = (0, -1, 0, 2); the witness carries the matrix,
//! // the recipe that built it, and per-coordinate residuals.
//! let c = SymVector::from_tail(CoordKind::CycleSums, vec![
//!     Scalar::zero(),
//!     Scalar::from_integer(-1),
//!     Scalar::zero(),
//!     Scalar::from_integer(2),
//! ]);
//! let w = witness(MatrixClass::Skew, &c, WitnessMode::ExactPreferred)?;
//! assert!(w.exact && w.max_normalized_residual == 0.0);
//! # Ok(()) }
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod combinatorics;
pub mod coordinates;
pub mod families;
pub mod matrix;
pub mod poly;
pub mod relations;
pub mod scalar;
pub mod spmap;

pub use num_bigint;
pub use num_complex;
pub use num_rational;
pub use num_traits;

pub use matrix::{CoordKind, SquareMatrix, SubsetVector, SymVector};
pub use scalar::{approx_eq, Scalar};
