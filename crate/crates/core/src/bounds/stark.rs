//! Effective unit-group and Euler-factor ingredients for the g = 1 fields
//! E = Q(sqrt(a^2 - 4p)): the root-of-unity count obeys 2|mu_E| <= 32 g^2,
//! and the product over primes dividing disc(Z[pi]) of (1 - 1/ell) per
//! prime above ell lower-bounds the local unit-index product.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::primes;
use crate::orders;
use crate::weil::{classify_g1, TraceKind};
use crate::Result;

#[derive(Clone, Debug)]
pub struct UnitEulerRecord {
    pub trace: i64,
    pub d_pi: i64,
    pub fundamental_disc: i64,
    /// |mu_E|: 6 for d_K = -3, 4 for d_K = -4, else 2.
    pub roots_of_unity: u32,
    /// 2 |mu_E| <= 32 g^2 with g = 1.
    pub unit_bound_holds: bool,
    /// prod over primes ell | d_pi of (1 - 1/ell)^(primes above ell).
    pub euler_product: BigRational,
    /// (ell, kronecker(d_K | ell)) per prime divisor of d_pi.
    pub factors: Vec<(u64, i32)>,
}

/// One record per ordinary trace of F_p.
pub fn unit_euler_checks(p: u64) -> Result<Vec<UnitEulerRecord>> {
    let classes = classify_g1(p)?;
    let mut out = Vec::new();
    for cls in classes {
        if cls.kind != TraceKind::Ordinary {
            continue;
        }
        let d_pi = cls.trace * cls.trace - 4 * p as i64;
        let (d_k, _) = orders::quadratic_decompose(d_pi)?;
        let roots_of_unity = match d_k {
            -3 => 6,
            -4 => 4,
            _ => 2,
        };
        let mut euler = BigRational::one();
        let mut factors = Vec::new();
        let mut rest = (-d_pi) as u64;
        let mut ell = 2u64;
        while ell * ell <= rest {
            if rest % ell == 0 {
                while rest % ell == 0 {
                    rest /= ell;
                }
                let k = primes::kronecker_prime(d_k, ell);
                factors.push((ell, k));
                euler *= euler_factor(ell, k);
            }
            ell += 1;
        }
        if rest > 1 {
            let k = primes::kronecker_prime(d_k, rest);
            factors.push((rest, k));
            euler *= euler_factor(rest, k);
        }
        out.push(UnitEulerRecord {
            trace: cls.trace,
            d_pi,
            fundamental_disc: d_k,
            roots_of_unity,
            unit_bound_holds: 2 * roots_of_unity <= 32,
            euler_product: euler,
            factors,
        });
    }
    Ok(out)
}

/// (1 - 1/ell)^(number of primes above ell): split has two, inert and
/// ramified have one.
fn euler_factor(ell: u64, kronecker: i32) -> BigRational {
    let base = BigRational::new(BigInt::from(ell as i64 - 1), BigInt::from(ell as i64));
    if kronecker == 1 {
        &base * &base
    } else {
        base
    }
}
