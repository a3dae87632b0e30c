//! Matroidal colorful Carathéodory machinery for tropical and Euclidean
//! convexity.
//!
//! * [`matroid`]: oracle-backed matroids, bases, cocircuits, duals,
//!   truncation and clutter blockers.
//! * [`tropical`]: max-plus scalars, covector graphs, tropical hull
//!   membership with certificates, support complexes.
//! * [`colorful`]: greedy colorful-basis algorithms and their condition
//!   verifiers.
//! * [`euclidean`]: exact-rational convex hull membership and brute-force
//!   Kalai–Meshulam verifiers.
//! * [`lp`]: tropical colorful linear programming, the 3-dimensional
//!   matching encoding, and the `{-inf, 0}` dual-Horn solver.
//! * [`formats`]: the JSON interchange formats.
//! * [`generate`]: seeded random instances and the figure fixtures.
//!
//! ```
//! use tropmat_core::colorful::{colorful_basis, ColorfulOutcome};
//! use tropmat_core::matroid::Matroid;
//! use tropmat_core::tropical::TropicalConfiguration;
//!
//! let matroid = Matroid::partition(4, vec![vec![0, 1], vec![2, 3]])?;
//! let config = TropicalConfiguration::from_ints(1, &[&[Some(1)], &[Some(-1)], &[Some(2)], &[Some(-2)]])?;
//! let ColorfulOutcome::Found(found) = colorful_basis(&matroid, &config, None)? else {
//!     panic!("the two colors cover both sectors");
//! };
//! assert_eq!(found.basis.to_vec(), vec![1, 2]);
//! assert_eq!(found.trace.len(), 1);
//! # Ok::<(), tropmat_core::Error>(())
//! ```

pub mod bitset;
pub mod colorful;
pub mod error;
pub mod euclidean;
pub mod formats;
pub mod generate;
pub mod lp;
pub mod matroid;
pub mod report;
pub mod tropical;

pub use bitset::{ElementSet, SectorSet};
pub use error::{Error, Result};
pub use num_rational::BigRational;

/// Exact rational numbers used throughout.
pub type Rational = BigRational;

/// Integer-valued rational, a small convenience for tests and fixtures.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}
