//! Exact combinatorics behind cohomological integrality for quotient stacks.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootdata`]: root data, Weyl groups and Levi subgroups as integer matrices.
//! * [`repsym`]: symmetry and orthogonality of representations given by weights.
//! * [`facelat`]: the hyperplane arrangement of `V/G`, its special faces, chambers,
//!   cotangent distance and sign characters.
//! * [`cohi`]: the Weyl-sum formula for cohomological Hall induction.
//! * [`series`]: truncated Laurent series in `q^{1/2}` graded by a free monoid,
//!   with the signed plethystic exponential and logarithm.
//! * [`quiverbps`]: BPS series of symmetric quivers.
//! * [`bunih`]: Harder–Narasimhan recursion and intersection Poincaré polynomials
//!   of moduli of semistable bundles on a curve.
//!
//! All arithmetic is exact: scalars are [`Rat`] (arbitrary precision rationals) and
//! lattice data are `i64`.

pub mod bunih;
pub mod cohi;
pub mod error;
pub mod facelat;
pub mod linalg;
pub mod poly;
pub mod quiverbps;
pub mod repsym;
pub mod rootdata;
pub mod series;

pub use error::{Error, Result};

/// Exact rational scalar used throughout.
pub type Rat = num_rational::BigRational;

/// Integer as an exact rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}
