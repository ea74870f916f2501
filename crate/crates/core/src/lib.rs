//! Exact-arithmetic toolkit for bivariate hypergeometric structures.
//!
//! The crate decides which codimension-two lattice configurations admit
//! stable rational hypergeometric functions, expands and certifies Horn
//! series, analyzes univariate factorial-ratio series through the Landau
//! step function, and computes toric residues for one binomial and one
//! trinomial exactly.
//!
//! Everything is exact: integers are arbitrary precision, rationals are
//! reduced fractions, lattice geometry is integer linear algebra, and
//! power series are truncated with explicit cone-shaped regions.  No
//! floating point is used anywhere.
//!
//! Module map:
//! - [`matrix`]: integer matrices, Hermite/Smith normal forms, kernel bases;
//! - [`poly`] / [`ratfun`]: sparse Laurent polynomials and rational functions;
//! - [`configuration`]: lattice configurations, Gale duals, the
//!   pyramid/Lawrence/Cayley-essential classification;
//! - [`ratio1d`]: factorial-ratio series, Landau profiles, integrality and
//!   algebraicity classification;
//! - [`series2d`]: oriented line arrangements, minimal cells, Horn series,
//!   vertex expansions, diagonals, dilations, theta operators, rational
//!   reconstruction and the Horn rationality decision;
//! - [`residue`]: Sylvester resultants, global residue sums via traces,
//!   toric residues for the binomial/trinomial family;
//! - [`json`]: the decimal-string JSON encodings shared with the CLI.

pub mod arith;
pub mod configuration;
pub mod error;
pub mod geom;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod ratfun;
pub mod ratio1d;
pub mod residue;
pub mod series2d;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
