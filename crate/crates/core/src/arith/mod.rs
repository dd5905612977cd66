//! Exact integer/rational/polynomial arithmetic: resultants, discriminants,
//! real-root counting, irreducibility, Smith normal form, partitions.
//!
//! Everything here is exact; no floating point.

mod factor;
mod matrix;
pub mod partitions;
mod poly;
pub mod primes;
mod resultant;
mod sturm;

pub use factor::{irreducible_over_q, MAX_DEGREE};
pub use matrix::Matrix;
pub use poly::{
    gcd_int, gcd_rational, interpolate, is_squarefree, squarefree_part, Polynomial,
};
pub use resultant::{discriminant, resultant, sylvester_matrix};
pub use sturm::{
    cauchy_root_bound, real_roots_in_interval, real_roots_in_two_sqrt_interval,
    sign_at_two_sqrt, SturmChain,
};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Lossy conversion for numeric cross-checks; exact code never uses this.
pub fn bigint_to_f64(v: &BigInt) -> f64 {
    v.to_f64().unwrap_or(f64::INFINITY)
}

/// Elementary divisors of a square integer matrix (see [`Matrix::smith_elementary_divisors`]).
pub fn smith_elementary_divisors(m: &Matrix<BigInt>) -> crate::Result<Vec<BigInt>> {
    m.smith_elementary_divisors()
}

/// Power sums of the roots of a monic integer polynomial
/// (see [`Polynomial::power_sums`]).
pub fn trace_power_sums(f: &Polynomial<BigInt>, kmax: usize) -> crate::Result<Vec<BigInt>> {
    f.power_sums(kmax)
}
