//! Orders attached to an irreducible Weil polynomial: R = Z[pi, p/pi] with
//! its discriminant and index over Z[pi], the real subring Z[pi + pibar],
//! and class numbers of imaginary quadratic orders computed two independent
//! ways (reduced-form counting and the conductor formula).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, primes, Matrix};
use crate::weil;
use crate::{Error, IntPolynomial, RatMatrix, RatPolynomial, Result};

/// The order R = Z[pi, p/pi] inside E = Q[x]/(f), with the Z-basis
/// 1, pi, ..., pi^(g-1), pibar, ..., pibar^g expressed in the power basis.
#[derive(Clone, Debug)]
pub struct OrderDescription {
    pub defining_poly: IntPolynomial,
    pub p: u64,
    /// Rows are basis elements in the power basis 1, pi, ..., pi^(2g-1).
    pub basis: RatMatrix,
    pub disc: BigInt,
    pub index_over_zpi: BigInt,
}

/// The real subring R+ = Z[pi + pibar], described by the minimal polynomial
/// h of pi + pibar; disc(R+) = disc(h).
#[derive(Clone, Debug)]
pub struct RealSubringDescription {
    pub h: IntPolynomial,
    pub disc: BigInt,
}

/// An imaginary quadratic order of discriminant D = c^2 d_K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticOrder {
    pub disc: i64,
    pub fundamental_disc: i64,
    pub conductor: i64,
    pub class_number: u64,
}

// ---------------------------------------------------------------------------
// R = Z[pi, p/pi]

/// Multiplication in Q[x]/(f).
fn mul_mod_f(a: &RatPolynomial, b: &RatPolynomial, f: &RatPolynomial) -> RatPolynomial {
    (a * b).div_rem(f).1
}

fn to_coords(a: &RatPolynomial, dim: usize) -> Vec<BigRational> {
    (0..dim).map(|i| a.coeff(i)).collect()
}

/// Build R = Z[pi, p/pi] for a monic irreducible Weil polynomial of degree
/// 2g. The conjugate pibar = p/pi is expanded in the power basis from
/// f(pi) = 0; the discriminant comes from the trace Gram matrix and the
/// index over Z[pi] from the Smith normal form of the scaled basis matrix,
/// cross-checked against the determinant route.
pub fn build_r(f: &IntPolynomial, p: u64) -> Result<OrderDescription> {
    if !weil::is_weil(f, p)? {
        return Err(Error::NotWeil(p));
    }
    if !arith::irreducible_over_q(f)? {
        return Err(Error::Reducible);
    }
    let n = f.degree().unwrap(); // 2g
    let g = n / 2;
    let frat = f.to_rational();

    // pi^(-1) = -(1/f_0) (f_1 + f_2 pi + ... + f_n pi^(n-1)), f_0 = p^g
    let f0 = BigRational::from_integer(f.coeff(0));
    let inv_pi = RatPolynomial::new(
        (1..=n)
            .map(|i| -BigRational::from_integer(f.coeff(i)) / &f0)
            .collect(),
    );
    let pibar = inv_pi.scale(&BigRational::from_integer(BigInt::from(p)));

    // basis rows: 1, pi, ..., pi^(g-1), pibar, pibar^2, ..., pibar^g
    let mut elements: Vec<RatPolynomial> = (0..g)
        .map(|k| RatPolynomial::monomial(BigRational::one(), k))
        .collect();
    let mut pw = RatPolynomial::one();
    for _ in 1..=g {
        pw = mul_mod_f(&pw, &pibar, &frat);
        elements.push(pw.clone());
    }
    let basis = Matrix::from_rows(elements.iter().map(|e| to_coords(e, n)).collect());

    // determinant route: [R : Z[pi]] = 1 / |det basis|
    let det = basis.det_bareiss()?;
    if det.is_zero() {
        return Err(Error::Internal("singular order basis".into()));
    }
    let inv_abs = det.abs().recip();
    if !inv_abs.is_integer() {
        return Err(Error::Internal(
            "basis determinant is not a reciprocal integer".into(),
        ));
    }
    let index_det = inv_abs.to_integer();

    // Smith route on the denominator-cleared basis
    let scale = basis
        .rows_iter()
        .flatten()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled = Matrix::from_rows(
        (0..n)
            .map(|r| {
                basis
                    .row(r)
                    .iter()
                    .map(|v| v.numer() * (&scale / v.denom()))
                    .collect()
            })
            .collect(),
    );
    let divisors = scaled.smith_elementary_divisors()?;
    let div_prod: BigInt = divisors.iter().product();
    let scale_pow = scale.pow(n as u32);
    let (index_snf, rem) = scale_pow.div_rem(&div_prod);
    if !rem.is_zero() || index_snf != index_det {
        return Err(Error::Internal(format!(
            "index routes disagree: det {index_det}, smith {scale_pow}/{div_prod}"
        )));
    }

    // disc via the trace Gram matrix
    let sums = f.power_sums(n - 1)?;
    let trace = |e: &RatPolynomial| -> BigRational {
        (0..n)
            .map(|k| e.coeff(k) * BigRational::from_integer(sums[k].clone()))
            .fold(BigRational::zero(), |acc, v| acc + v)
    };
    let mut gram = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let prod = mul_mod_f(&elements[i], &elements[j], &frat);
            let t = trace(&prod);
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    let disc_rat = gram.det_bareiss()?;
    if !disc_rat.is_integer() {
        return Err(Error::Internal("trace Gram determinant not integral".into()));
    }
    let disc = disc_rat.to_integer();

    // disc(Z[pi]) = index^2 disc(R), exactly
    let disc_f = arith::discriminant(f)?;
    if disc_f != &index_det * &index_det * &disc {
        return Err(Error::Internal(
            "discriminant/index consistency failed".into(),
        ));
    }

    // ring closure: every basis product must lie in the Z-span of the basis
    let basis_t = basis.transpose();
    for i in 0..n {
        for j in i..n {
            let prod = mul_mod_f(&elements[i], &elements[j], &frat);
            let coords = to_coords(&prod, n);
            let x = basis_t
                .solve(&coords)
                .ok_or_else(|| Error::Internal("basis not full rank".into()))?;
            if !x.iter().all(BigRational::is_integer) {
                return Err(Error::Internal(format!(
                    "basis product {i}*{j} leaves the lattice"
                )));
            }
        }
    }

    Ok(OrderDescription {
        defining_poly: f.clone(),
        p,
        basis,
        disc,
        index_over_zpi: index_det,
    })
}

/// Exact check of the index bound [R : Z[pi]] <= p^(g(g-1)/2), compared in
/// squared form to stay integral.
pub fn index_bound_holds(order: &OrderDescription) -> bool {
    let g = order.defining_poly.degree().unwrap() / 2;
    let bound = BigInt::from(order.p).pow((g * (g - 1)) as u32);
    &order.index_over_zpi * &order.index_over_zpi <= bound
}

/// Build R+ = Z[pi + pibar]: h is the real companion polynomial and
/// disc(R+) = disc(h). Degree-1 h has discriminant 1 (empty product).
pub fn build_r_plus(f: &IntPolynomial, p: u64) -> Result<RealSubringDescription> {
    let h = weil::real_weil_poly(f, p)?;
    let disc = arith::discriminant(&h)?;
    Ok(RealSubringDescription { h, disc })
}

/// Effective surrogate of the real-subring discriminant bound: the roots of
/// h lie in [-2 sqrt(p), 2 sqrt(p)], so |disc(h)| <= (4 sqrt(p))^(g(g-1)),
/// checked squared: disc(h)^2 <= (16 p)^(g(g-1)).
pub fn real_disc_bound_holds(rplus: &RealSubringDescription, p: u64) -> bool {
    let g = rplus.h.degree().unwrap();
    let bound = BigInt::from(16 * p).pow((g * (g - 1)) as u32);
    &rplus.disc * &rplus.disc <= bound
}

// ---------------------------------------------------------------------------
// Imaginary quadratic orders

fn valid_quadratic_disc(d: i64) -> Result<()> {
    if d >= 0 || !matches!(d.rem_euclid(4), 0 | 1) {
        return Err(Error::BadDiscriminant(d));
    }
    Ok(())
}

/// Split D < 0 into (d_K, c) with D = c^2 d_K and d_K fundamental.
pub fn quadratic_decompose(d: i64) -> Result<(i64, i64)> {
    valid_quadratic_disc(d)?;
    let m = (-d) as u64;
    // m = s * t^2 with s squarefree
    let mut s: u64 = 1;
    let mut t: u64 = 1;
    let mut rest = m;
    let mut q = 2u64;
    while q * q <= rest {
        let mut e = 0;
        while rest % q == 0 {
            rest /= q;
            e += 1;
        }
        if e > 0 {
            t *= q.pow(e / 2);
            if e % 2 == 1 {
                s *= q;
            }
        }
        q += 1;
    }
    s *= rest;
    if s % 4 == 3 {
        Ok((-(s as i64), t as i64))
    } else {
        // -s = 2, 3 mod 4: fundamental discriminant is -4s, and t is even
        debug_assert_eq!(t % 2, 0, "D = 0,1 mod 4 forces even t here");
        Ok((-(4 * s as i64), (t / 2) as i64))
    }
}

/// h(D) as the number of reduced primitive positive-definite binary
/// quadratic forms (a, b, c) of discriminant D: b^2 - 4ac = D,
/// gcd(a,b,c) = 1, |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
pub fn class_number_form_count(d: i64) -> Result<u64> {
    valid_quadratic_disc(d)?;
    let mut count = 0u64;
    let mut a = 1i64;
    while 3 * a * a <= -d {
        for b in -a..=a {
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            if b < 0 && (-b == a || a == c) {
                continue; // the b > 0 representative is the reduced one
            }
            if primes::gcd_i64(primes::gcd_i64(a, b), c) != 1 {
                continue;
            }
            count += 1;
        }
        a += 1;
    }
    Ok(count)
}

/// h(c^2 d_K) by the conductor formula for imaginary quadratic orders:
/// h(d_K) * c * prod_(ell | c) (1 - (d_K|ell)/ell) / [O_K^x : O^x],
/// with unit index 3 for d_K = -3, 2 for d_K = -4 (c > 1), else 1.
pub fn class_number_conductor_formula(d_k: i64, c: i64) -> Result<u64> {
    valid_quadratic_disc(d_k)?;
    if quadratic_decompose(d_k)? != (d_k, 1) {
        return Err(Error::BadDiscriminant(d_k));
    }
    if c < 1 {
        return Err(Error::BadDiscriminant(c));
    }
    let h_k = class_number_form_count(d_k)?;
    if c == 1 {
        return Ok(h_k);
    }
    let mut numer: i64 = h_k as i64 * c;
    let mut denom: i64 = match d_k {
        -3 => 3,
        -4 => 2,
        _ => 1,
    };
    let mut rest = c;
    let mut ell = 2i64;
    while ell * ell <= rest {
        if rest % ell == 0 {
            while rest % ell == 0 {
                rest /= ell;
            }
            numer *= ell - primes::kronecker_prime(d_k, ell as u64) as i64;
            denom *= ell;
        }
        ell += 1;
    }
    if rest > 1 {
        numer *= rest - primes::kronecker_prime(d_k, rest as u64) as i64;
        denom *= rest;
    }
    if numer % denom != 0 {
        return Err(Error::Internal(format!(
            "conductor formula not integral for d_K={d_k}, c={c}"
        )));
    }
    Ok((numer / denom) as u64)
}

/// The orders between Z[pi] and O_E for a g = 1 ordinary discriminant
/// D_pi = a^2 - 4p: one per divisor c' of the conductor, with the class
/// number computed by both routes and cross-asserted.
pub fn orders_between(d_pi: i64) -> Result<Vec<QuadraticOrder>> {
    let (d_k, c) = quadratic_decompose(d_pi)?;
    let mut divisors: Vec<i64> = (1..=c).filter(|v| c % v == 0).collect();
    divisors.sort_unstable();
    divisors
        .into_iter()
        .map(|c1| {
            let disc = c1 * c1 * d_k;
            let by_forms = class_number_form_count(disc)?;
            let by_formula = class_number_conductor_formula(d_k, c1)?;
            if by_forms != by_formula {
                return Err(Error::Internal(format!(
                    "class number mismatch at D={disc}: forms {by_forms}, formula {by_formula}"
                )));
            }
            Ok(QuadraticOrder {
                disc,
                fundamental_disc: d_k,
                conductor: c1,
                class_number: by_forms,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_ints(cs)
    }

    #[test]
    fn build_r_g1_is_z_pi() {
        let r = build_r(&ip(&[5, 3, 1]), 5).unwrap();
        assert_eq!(r.index_over_zpi, BigInt::one());
        assert_eq!(r.disc, BigInt::from(-11));
        assert!(index_bound_holds(&r));
    }

    #[test]
    fn build_r_equality_case() {
        // pibar = -(pi^3 + pi)/3, change-of-basis determinant -1/3
        let r = build_r(&ip(&[9, 0, 1, 0, 1]), 3).unwrap();
        assert_eq!(r.index_over_zpi, BigInt::from(3));
        assert_eq!(r.disc, BigInt::from(19_600));
        assert!(index_bound_holds(&r)); // 3^2 <= 3^2, equality
    }

    #[test]
    fn build_r_non_ordinary_instance() {
        let r = build_r(&ip(&[9, 0, 0, 0, 1]), 3).unwrap();
        assert_eq!(r.index_over_zpi, BigInt::from(3));
        assert_eq!(r.disc, BigInt::from(20_736));
        assert!(index_bound_holds(&r));
        // disc(Z[pi]) = index^2 disc(R)
        assert_eq!(
            arith::discriminant(&ip(&[9, 0, 0, 0, 1])).unwrap(),
            BigInt::from(9) * BigInt::from(20_736)
        );
    }

    #[test]
    fn build_r_rejects_bad_inputs() {
        assert!(matches!(
            build_r(&ip(&[49, 0, -2, 0, 1]), 7),
            Err(Error::Reducible)
        ));
        assert!(matches!(
            build_r(&ip(&[5, 5, 1]), 5),
            Err(Error::NotWeil(5))
        ));
    }

    #[test]
    fn r_plus_examples() {
        let r = build_r_plus(&ip(&[5, 3, 1]), 5).unwrap();
        assert_eq!(r.h, ip(&[3, 1]));
        assert_eq!(r.disc, BigInt::one());
        assert!(real_disc_bound_holds(&r, 5)); // 1 <= 1, exponent 0

        let r = build_r_plus(&ip(&[9, 0, 1, 0, 1]), 3).unwrap();
        assert_eq!(r.h, ip(&[-5, 0, 1]));
        assert_eq!(r.disc, BigInt::from(20));
        assert!(real_disc_bound_holds(&r, 3)); // 400 <= 2304

        let r = build_r_plus(&ip(&[9, 0, 0, 0, 1]), 3).unwrap();
        assert_eq!(r.disc, BigInt::from(24));
    }

    #[test]
    fn quadratic_decompose_examples() {
        assert_eq!(quadratic_decompose(-27).unwrap(), (-3, 3));
        assert_eq!(quadratic_decompose(-16).unwrap(), (-4, 2));
        assert_eq!(quadratic_decompose(-11).unwrap(), (-11, 1));
        assert_eq!(quadratic_decompose(-4).unwrap(), (-4, 1));
        assert_eq!(quadratic_decompose(-48).unwrap(), (-3, 4));
        assert!(matches!(
            quadratic_decompose(-5),
            Err(Error::BadDiscriminant(-5))
        ));
        assert!(matches!(
            quadratic_decompose(4),
            Err(Error::BadDiscriminant(4))
        ));
    }

    #[test]
    fn form_count_examples() {
        assert_eq!(class_number_form_count(-4).unwrap(), 1);
        assert_eq!(class_number_form_count(-23).unwrap(), 3);
        assert_eq!(class_number_form_count(-27).unwrap(), 1);
        assert_eq!(class_number_form_count(-24).unwrap(), 2);
        // first discriminants with h = 1: -3, -4, -7, -8, -11
        for d in [-3i64, -7, -8, -11, -19, -43, -67, -163] {
            assert_eq!(class_number_form_count(d).unwrap(), 1, "d={d}");
        }
        assert_eq!(class_number_form_count(-15).unwrap(), 2);
        assert_eq!(class_number_form_count(-47).unwrap(), 5);
    }

    #[test]
    fn conductor_formula_examples() {
        assert_eq!(class_number_conductor_formula(-3, 3).unwrap(), 1);
        assert_eq!(class_number_conductor_formula(-4, 2).unwrap(), 1);
        assert_eq!(class_number_conductor_formula(-11, 1).unwrap(), 1);
        assert_eq!(class_number_conductor_formula(-3, 4).unwrap(), 2); // h(-48)
        assert!(class_number_conductor_formula(-12, 2).is_err()); // -12 not fundamental
    }

    #[test]
    fn two_class_number_routes_agree_small() {
        for m in 3..=2000i64 {
            let d = -m;
            if !matches!(d.rem_euclid(4), 0 | 1) {
                continue;
            }
            let (d_k, c) = quadratic_decompose(d).unwrap();
            assert_eq!(
                class_number_form_count(d).unwrap(),
                class_number_conductor_formula(d_k, c).unwrap(),
                "D={d}"
            );
        }
    }

    #[test]
    fn orders_between_examples() {
        let o = orders_between(-27).unwrap();
        assert_eq!(
            o.iter().map(|q| (q.conductor, q.class_number)).collect::<Vec<_>>(),
            vec![(1, 1), (3, 1)]
        );
        let o = orders_between(-16).unwrap();
        assert_eq!(
            o.iter().map(|q| (q.conductor, q.class_number)).collect::<Vec<_>>(),
            vec![(1, 1), (2, 1)]
        );
        let o = orders_between(-19).unwrap();
        assert_eq!(
            o.iter().map(|q| (q.conductor, q.class_number)).collect::<Vec<_>>(),
            vec![(1, 1)]
        );
        assert!(orders_between(3).is_err());
    }
}
