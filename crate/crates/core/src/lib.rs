//! Exact computation of the contribution of degree-one covers of a
//! holomorphic disk to open Gromov-Witten invariants.
//!
//! The crate is organised bottom-up:
//!
//! - [`series`] and [`rational`]: truncated formal power series over any
//!   [`Scalar`], plus the exact rational scalar used everywhere by default.
//! - [`moduli`] and [`maslov`]: dimension formulas for moduli of bordered
//!   domains, Riemann-Roch index arithmetic and the Maslov index of sampled
//!   frame loops.
//! - [`partitions`]: ghost partitions of a topological type and the
//!   rank bookkeeping of each cell.
//! - [`lattice`]: bubble-tree configurations, degeneration moves and the
//!   gluing-dimension audit.
//! - [`contributions`]: the coefficients `alpha_g`, the contributions
//!   `C(g,h)` and the generating-function check.
//!
//! Numerical code is generic over [`Scalar`]; the aliases at the crate root
//! fix the scalar to [`Rational`], which is what every public result is
//! stated in.

pub mod contributions;
pub mod error;
pub mod lattice;
pub mod maslov;
pub mod moduli;
pub mod partitions;
pub mod rational;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Exact arbitrary-precision fraction, always stored in lowest terms.
pub type Rational = num_rational::BigRational;

/// Truncated power series with exact rational coefficients.
pub type PowerSeries = series::Series<Rational>;

/// Contribution table over the rationals.
pub type ContributionTable = contributions::Table<Rational>;

/// Double-precision series, handy for quick numerical sanity checks.
pub type FloatSeries = series::Series<f64>;
