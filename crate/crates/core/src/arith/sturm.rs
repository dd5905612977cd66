//! Exact real-root counting by Sturm sequences.
//!
//! Chains are kept as primitive integer polynomials with sign-preserving
//! (positive) rescaling after each rational pseudo-division, so every sign
//! query is an exact integer computation. Endpoints may be exact rationals
//! or the quadratic irrationals +-2*sqrt(p) needed by the Weil validity
//! test; the latter are handled by exact sign evaluation of A + B*sqrt(p).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{is_squarefree, Polynomial};
use crate::{Error, Result};

/// Sturm chain of a squarefree integer polynomial.
pub struct SturmChain {
    elems: Vec<Polynomial<BigInt>>,
}

impl SturmChain {
    /// Requires `f` squarefree of degree >= 1.
    pub fn new(f: &Polynomial<BigInt>) -> Result<Self> {
        if f.degree().is_none() {
            return Err(Error::ZeroPolynomial);
        }
        if !is_squarefree(f) {
            return Err(Error::NotSquarefree);
        }
        let mut elems = vec![f.clone(), f.derivative()];
        loop {
            let k = elems.len();
            if elems[k - 1].degree().map_or(true, |d| d == 0) {
                break;
            }
            let (_, r) = elems[k - 2]
                .to_rational()
                .div_rem(&elems[k - 1].to_rational());
            if r.is_zero() {
                // cannot happen for squarefree f; guard anyway
                break;
            }
            elems.push(-&rational_to_primitive_int(&r));
        }
        Ok(SturmChain { elems })
    }

    /// Sign variations of the chain at a rational point (zeros skipped).
    pub fn variations_at(&self, x: &BigRational) -> usize {
        let signs = self
            .elems
            .iter()
            .map(|f| sign_to_i8(&f.to_rational().eval(x)));
        count_variations(signs)
    }

    /// Sign variations at `s * 2*sqrt(p)` for `s` = +-1.
    pub fn variations_at_two_sqrt(&self, p: u64, negative: bool) -> usize {
        let signs = self
            .elems
            .iter()
            .map(|f| sign_at_two_sqrt(f, p, negative));
        count_variations(signs)
    }

    /// Roots in the open interval (lo, hi); endpoints must not be roots.
    pub fn count_open(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_to_i8<T: Signed>(x: &T) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Scale a rational polynomial by a positive rational to a primitive
/// integer polynomial (signs of all values preserved).
fn rational_to_primitive_int(f: &Polynomial<BigRational>) -> Polynomial<BigInt> {
    if f.is_zero() {
        return Polynomial::zero();
    }
    let denom_lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = Polynomial::new(
        f.coeffs()
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect::<Vec<BigInt>>(),
    );
    ints.primitive_part()
}

/// Exact sign of `f(s * 2*sqrt(p))` where `s` is -1 or +1.
///
/// Splitting f into even and odd parts gives f(2 sqrt(p)) = A + B sqrt(p)
/// with A = E(4p) and B = 2*O(4p); the sign comes from comparing A^2 with
/// B^2 p when A and B disagree.
pub fn sign_at_two_sqrt(f: &Polynomial<BigInt>, p: u64, negative: bool) -> i8 {
    let four_p = BigInt::from(4 * p);
    let mut even = BigInt::zero(); // E(4p)
    let mut odd = BigInt::zero(); // O(4p)
    let mut pw = BigInt::one();
    let mut i = 0;
    while i <= f.degree().unwrap_or(0) {
        even += f.coeff(i) * &pw;
        odd += f.coeff(i + 1) * &pw;
        pw *= &four_p;
        i += 2;
    }
    let a = even;
    let mut b = BigInt::from(2) * odd;
    if negative {
        b = -b;
    }
    let sa = sign_to_i8(&a);
    let sb = sign_to_i8(&b);
    if sa == sb || sb == 0 {
        return sa;
    }
    if sa == 0 {
        return sb;
    }
    // opposite signs: compare |A| with |B| sqrt(p)
    let a2 = &a * &a;
    let b2p = &b * &b * BigInt::from(p);
    match a2.cmp(&b2p) {
        std::cmp::Ordering::Greater => sa,
        std::cmp::Ordering::Less => sb,
        std::cmp::Ordering::Equal => 0,
    }
}

/// Exact count of distinct real roots of squarefree `f` in `(lo, hi]`.
pub fn real_roots_in_interval(
    f: &Polynomial<BigInt>,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<usize> {
    if f.degree().is_none() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    let mut g = f.clone();
    let mut endpoint_hit = 0usize;
    // peel off roots sitting exactly on an endpoint; hi is included, lo not
    for (point, counted) in [(hi, true), (lo, false)] {
        if g.to_rational().eval(point).is_zero() {
            let lin = Polynomial::new(vec![-point.numer().clone(), point.denom().clone()]);
            g = g.exact_div(&lin).expect("rational root gives integer factor");
            if counted {
                endpoint_hit = 1;
            }
        }
    }
    if g.degree().map_or(true, |d| d == 0) {
        return Ok(endpoint_hit);
    }
    let chain = SturmChain::new(&g)?;
    Ok(chain.count_open(lo, hi) + endpoint_hit)
}

/// Number of real roots of squarefree `f` in the open interval
/// (-2 sqrt(p), 2 sqrt(p)). `f` must not vanish at the endpoints, which for
/// integer polynomials means y^2 - 4p must not divide f.
pub fn real_roots_in_two_sqrt_interval(f: &Polynomial<BigInt>, p: u64) -> Result<usize> {
    let chain = SturmChain::new(f)?;
    Ok(chain.variations_at_two_sqrt(p, true) - chain.variations_at_two_sqrt(p, false))
}

/// A rational bound B with all real roots of f inside (-B, B): Cauchy bound.
pub fn cauchy_root_bound(f: &Polynomial<BigInt>) -> BigRational {
    let n = f.degree().expect("nonzero");
    let lc = BigRational::from_integer(f.lc().unwrap().abs());
    let max_ratio = (0..n)
        .map(|i| BigRational::from_integer(f.coeff(i).abs()) / &lc)
        .max()
        .unwrap_or_else(BigRational::zero);
    max_ratio + BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> Polynomial<BigInt> {
        Polynomial::from_ints(cs)
    }

    fn br(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn spec_interval_counts() {
        assert_eq!(
            real_roots_in_interval(&ip(&[-2, 0, 1]), &br(0), &br(2)).unwrap(),
            1
        );
        assert_eq!(
            real_roots_in_interval(&ip(&[1, 0, 1]), &br(-10), &br(10)).unwrap(),
            0
        );
        assert_eq!(
            real_roots_in_interval(&ip(&[0, -1, 0, 1]), &br(-2), &br(2)).unwrap(),
            3
        );
    }

    #[test]
    fn endpoint_semantics_half_open() {
        let f = ip(&[-1, 0, 1]); // roots +-1
        assert_eq!(real_roots_in_interval(&f, &br(-1), &br(1)).unwrap(), 1);
        assert_eq!(real_roots_in_interval(&f, &br(-2), &br(-1)).unwrap(), 1);
        assert_eq!(real_roots_in_interval(&f, &br(-2), &br(2)).unwrap(), 2);
        assert_eq!(real_roots_in_interval(&f, &br(0), &br(1)).unwrap(), 1);
    }

    #[test]
    fn rejects_non_squarefree_and_empty_interval() {
        let sq = &ip(&[-1, 1]) * &ip(&[-1, 1]);
        assert!(matches!(
            real_roots_in_interval(&sq, &br(0), &br(2)),
            Err(Error::NotSquarefree)
        ));
        assert!(matches!(
            real_roots_in_interval(&ip(&[-2, 0, 1]), &br(2), &br(0)),
            Err(Error::EmptyInterval)
        ));
    }

    #[test]
    fn sign_at_quadratic_point() {
        // f = y^2 - 5 at 2 sqrt(3) = about 3.46: 12 - 5 > 0
        assert_eq!(sign_at_two_sqrt(&ip(&[-5, 0, 1]), 3, false), 1);
        // f = y - 4 at 2 sqrt(3): negative
        assert_eq!(sign_at_two_sqrt(&ip(&[-4, 1]), 3, false), -1);
        // f = y - 3 at 2 sqrt(3): positive (3.46 > 3)
        assert_eq!(sign_at_two_sqrt(&ip(&[-3, 1]), 3, false), 1);
        // f = y at -2 sqrt(3): negative
        assert_eq!(sign_at_two_sqrt(&ip(&[0, 1]), 3, true), -1);
        // exact zero: y^2 - 12 at 2 sqrt(3)
        assert_eq!(sign_at_two_sqrt(&ip(&[-12, 0, 1]), 3, false), 0);
    }

    #[test]
    fn roots_in_sqrt_interval() {
        // y^2 - 5: both roots inside (-2 sqrt 3, 2 sqrt 3)
        assert_eq!(
            real_roots_in_two_sqrt_interval(&ip(&[-5, 0, 1]), 3).unwrap(),
            2
        );
        // y^2 - 13: both outside
        assert_eq!(
            real_roots_in_two_sqrt_interval(&ip(&[-13, 0, 1]), 3).unwrap(),
            0
        );
        // y + 3 at p=5: root -3 inside (-4.47, 4.47)
        assert_eq!(real_roots_in_two_sqrt_interval(&ip(&[3, 1]), 5).unwrap(), 1);
        // y^2 + 1: no real roots
        assert_eq!(
            real_roots_in_two_sqrt_interval(&ip(&[1, 0, 1]), 7).unwrap(),
            0
        );
    }

    #[test]
    fn total_count_matches_numeric_roots() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let mut done = 0;
        while done < 30 {
            let d = rng.gen_range(2..=6);
            let mut cs: Vec<i64> = (0..d).map(|_| rng.gen_range(-9..=9)).collect();
            cs.push(1);
            let f = ip(&cs);
            if !is_squarefree(&f) {
                continue;
            }
            let bound = cauchy_root_bound(&f);
            let exact =
                real_roots_in_interval(&f, &(-bound.clone()), &bound).unwrap();
            let numeric = crate::test_support::complex_roots(&f)
                .iter()
                .filter(|z| z.im.abs() < 1e-7)
                .count();
            assert_eq!(exact, numeric, "f = {cs:?}");
            done += 1;
        }
    }
}
