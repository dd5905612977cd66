//! Exact-arithmetic machinery for counting abelian varieties over prime
//! fields at desk scale: Weil p-polynomial enumeration, the orders
//! Z[pi, p/pi] and their discriminants and class numbers, an isogeny-class
//! census for g = 1 cross-checked against brute-force curve enumeration,
//! and numeric verification of the effective inequalities the counting
//! bounds rest on.
//!
//! Everything outside [`bounds`] is exact: arbitrary-precision integers and
//! rationals only. The [`bounds`] module is the one place floating point is
//! allowed, and it works at double-double precision (see [`Wide`]).

pub mod arith;
pub mod bounds;
pub mod census;
mod error;
pub mod orders;
pub mod sweep;
#[cfg(test)]
pub mod test_support;
pub mod weil;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Dense integer polynomial, the workhorse carrier for Weil polynomials,
/// their real companions, and discriminant arithmetic.
pub type IntPolynomial = arith::Polynomial<BigInt>;
/// Polynomial over exact rationals (Sturm chains, basis computations).
pub type RatPolynomial = arith::Polynomial<BigRational>;
/// Integer matrix (Sylvester matrices, Smith normal form inputs).
pub type IntMatrix = arith::Matrix<BigInt>;
/// Exact rational matrix (order bases, trace forms).
pub type RatMatrix = arith::Matrix<BigRational>;
/// Extended-precision float (~106-bit significand) used by the numeric
/// verification kernels in [`bounds`].
pub type Wide = twofloat::TwoFloat;
