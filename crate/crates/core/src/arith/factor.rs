//! Irreducibility over Q for primitive integer polynomials of degree <= 16.
//!
//! Strategy: squarefree check, then factorization degree patterns modulo
//! several good odd primes. If the intersected patterns rule out every
//! proper factor degree, the polynomial is irreducible. Otherwise a full
//! modular factorization at the best prime is Hensel-lifted and factor
//! subsets are recombined against a coefficient bound; finding no rational
//! factor proves irreducibility, finding one disproves it.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{is_squarefree, Polynomial};
use super::primes;
use crate::{Error, Result};

pub const MAX_DEGREE: usize = 16;

type IP = Polynomial<BigInt>;

/// True iff the primitive polynomial `f` (content 1, degree >= 1) is
/// irreducible over the rationals. Supported up to degree 16.
pub fn irreducible_over_q(f: &IP) -> Result<bool> {
    let n = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if n > MAX_DEGREE {
        return Err(Error::DegreeLimit(n, MAX_DEGREE));
    }
    if !f.content().is_one() {
        return Err(Error::NotPrimitive);
    }
    if n == 1 {
        return Ok(true);
    }
    if !is_squarefree(f) {
        return Ok(false);
    }

    // Degree patterns modulo several good primes.
    let lc = f.lc().unwrap().clone();
    let mut good: Vec<(u64, Vec<usize>)> = Vec::new();
    let mut p: u64 = 3;
    let mut scanned = 0usize;
    while good.len() < 5 {
        scanned += 1;
        if scanned > 100_000 {
            return Err(Error::Internal("prime scan exhausted".into()));
        }
        p = next_odd_prime(p);
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = ModPoly::from_int_poly(f, p).monic();
        if !fp.is_squarefree() {
            continue;
        }
        good.push((p, fp.distinct_degree_multiset()));
    }

    // A rational factor of degree d forces a degree-d subset sum of the
    // modular factor degrees at every good prime.
    let mut allowed = vec![true; n + 1];
    for (_, degrees) in &good {
        let sums = subset_sums(degrees, n);
        for d in 0..=n {
            allowed[d] = allowed[d] && sums[d];
        }
    }
    if !(1..n).any(|d| allowed[d]) {
        return Ok(true);
    }

    // Recombination at the prime with the fewest modular factors.
    let (best_p, _) = good
        .iter()
        .min_by_key(|(p, degs)| (degs.len(), *p))
        .unwrap()
        .clone();
    let fp = ModPoly::from_int_poly(f, best_p).monic();
    let modular_factors = fp.factor();
    let k = lift_exponent(f, best_p);
    let pk = BigInt::from(best_p).pow(k);
    let lifted = hensel_lift_factors(f, &modular_factors, best_p, &pk);
    Ok(!has_rational_factor(f, &lifted, &pk, &allowed))
}

fn next_odd_prime(after: u64) -> u64 {
    let mut q = after + 2;
    while !primes::is_prime(q) {
        q += 2;
    }
    q
}

/// Which subset sums of `degrees` are attainable, as a 0..=n table.
fn subset_sums(degrees: &[usize], n: usize) -> Vec<bool> {
    let mut table = vec![false; n + 1];
    table[0] = true;
    for &d in degrees {
        for s in (0..=n.saturating_sub(d)).rev() {
            if table[s] {
                table[s + d] = true;
            }
        }
    }
    table
}

/// Smallest k with p^k > 2 * 2^n * (||f||_2 + 1) * |lc(f)|, a safe bound for
/// the coefficients of lc(f) times any monic factor image.
fn lift_exponent(f: &IP, p: u64) -> u32 {
    let n = f.degree().unwrap() as u32;
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    let bound: BigInt = (BigInt::one() << (n + 1)) * norm * f.lc().unwrap().abs();
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pw = pb.clone();
    while pw <= bound {
        pw *= &pb;
        k += 1;
    }
    k
}

// ---------------------------------------------------------------------------
// Arithmetic in GF(p)[x], p an odd machine prime.

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ModPoly {
    p: u64,
    c: Vec<u64>, // c[i] = coefficient of x^i, all < p, no trailing zeros
}

impl ModPoly {
    fn new(p: u64, mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { p, c }
    }

    fn from_int_poly(f: &IP, p: u64) -> Self {
        let pb = BigInt::from(p);
        Self::new(
            p,
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&pb).to_u64().unwrap())
                .collect(),
        )
    }

    fn zero(p: u64) -> Self {
        ModPoly { p, c: Vec::new() }
    }

    fn x(p: u64) -> Self {
        ModPoly { p, c: vec![0, 1] }
    }

    fn constant(p: u64, v: u64) -> Self {
        Self::new(p, vec![v % p])
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn lc(&self) -> u64 {
        *self.c.last().unwrap()
    }

    fn monic(&self) -> Self {
        if self.is_zero() || self.lc() == 1 {
            return self.clone();
        }
        let inv = primes::pow_mod(self.lc(), self.p - 2, self.p);
        Self::new(
            self.p,
            self.c
                .iter()
                .map(|&a| primes::mul_mod(a, inv, self.p))
                .collect(),
        )
    }

    #[cfg_attr(not(test), allow(dead_code))]
    fn add(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| {
                    (self.c.get(i).copied().unwrap_or(0) + rhs.c.get(i).copied().unwrap_or(0))
                        % self.p
                })
                .collect(),
        )
    }

    fn sub(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| {
                    (self.p + self.c.get(i).copied().unwrap_or(0)
                        - rhs.c.get(i).copied().unwrap_or(0))
                        % self.p
                })
                .collect(),
        )
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.c.len() + rhs.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate() {
                out[i + j] = (out[i + j] + primes::mul_mod(a, b, self.p)) % self.p;
            }
        }
        Self::new(self.p, out)
    }

    fn rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero poly");
        let inv = primes::pow_mod(d.lc(), self.p - 2, self.p);
        let mut r = self.c.clone();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let q = primes::mul_mod(*r.last().unwrap(), inv, self.p);
            if q != 0 {
                for i in 0..=dd {
                    let t = primes::mul_mod(q, d.c[i], self.p);
                    r[k + i] = (self.p + r[k + i] - t) % self.p;
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        Self::new(self.p, r)
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero poly");
        let inv = primes::pow_mod(d.lc(), self.p - 2, self.p);
        let mut r = self.c.clone();
        let mut q = vec![0u64; self.c.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let qq = primes::mul_mod(*r.last().unwrap(), inv, self.p);
            q[k] = qq;
            if qq != 0 {
                for i in 0..=dd {
                    let t = primes::mul_mod(qq, d.c[i], self.p);
                    r[k + i] = (self.p + r[k + i] - t) % self.p;
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        (Self::new(self.p, q), Self::new(self.p, r))
    }

    fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// (g, s, t) with s*self + t*rhs = g, g the monic gcd.
    fn ext_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Self::constant(p, 1), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::constant(p, 1));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead = r0.lc();
        let inv = primes::pow_mod(lead, p - 2, p);
        let scale = Self::constant(p, inv);
        (r0.monic(), s0.mul(&scale), t0.mul(&scale))
    }

    fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| primes::mul_mod(a, (i as u64) % self.p, self.p))
                .collect(),
        )
    }

    fn is_squarefree(&self) -> bool {
        let d = self.derivative();
        if d.is_zero() {
            return false;
        }
        self.gcd(&d).degree() == Some(0)
    }

    fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Self {
        let mut acc = Self::constant(self.p, 1);
        let mut base = self.rem(modulus);
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
        }
        acc
    }

    /// Degrees of the irreducible factors (with multiplicity of occurrence,
    /// so the multiset sums to deg). Requires monic squarefree input.
    fn distinct_degree_multiset(&self) -> Vec<usize> {
        self.distinct_degree_split()
            .into_iter()
            .flat_map(|(d, prod)| {
                let k = prod.degree().unwrap() / d;
                std::iter::repeat(d).take(k)
            })
            .collect()
    }

    /// Pairs (d, product of all monic irreducible factors of degree d).
    fn distinct_degree_split(&self) -> Vec<(usize, Self)> {
        let mut out = Vec::new();
        let mut h = Self::x(self.p);
        let mut fstar = self.clone();
        let mut d = 0usize;
        let p_exp = BigUint::from(self.p);
        while fstar.degree().unwrap_or(0) >= 2 * (d + 1) {
            d += 1;
            h = h.pow_mod(&p_exp, self); // x^(p^d) mod f
            let g = h.sub(&Self::x(self.p)).gcd(&fstar);
            if g.degree().unwrap_or(0) > 0 {
                out.push((d, g.clone()));
                fstar = fstar.div_rem(&g).0;
            }
        }
        if fstar.degree().unwrap_or(0) > 0 {
            let deg = fstar.degree().unwrap();
            out.push((deg, fstar.monic()));
        }
        out
    }

    /// Full factorization into monic irreducibles (input monic squarefree).
    fn factor(&self) -> Vec<Self> {
        let mut out = Vec::new();
        for (d, prod) in self.distinct_degree_split() {
            equal_degree_factor(prod, d, &mut out);
        }
        out.sort_by(|a, b| (a.c.len(), &a.c).cmp(&(b.c.len(), &b.c)));
        out
    }
}

/// Cantor-Zassenhaus equal-degree splitting with a deterministic sweep of
/// trial polynomials (all coefficient vectors in base-p counter order).
fn equal_degree_factor(u: ModPoly, d: usize, out: &mut Vec<ModPoly>) {
    let n = u.degree().unwrap();
    if n == d {
        out.push(u.monic());
        return;
    }
    let p = u.p;
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    let mut counter: u64 = p; // first candidate is x (digits [0,1])
    loop {
        let t = indexed_poly(p, n, counter);
        counter += 1;
        if t.degree().unwrap_or(0) < 1 {
            continue;
        }
        let w = t.pow_mod(&e, &u).sub(&ModPoly::constant(p, 1));
        let g = w.gcd(&u);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let (q, _) = u.div_rem(&g);
            equal_degree_factor(g, d, out);
            equal_degree_factor(q, d, out);
            return;
        }
    }
}

/// The `counter`-th polynomial of degree < `maxdeg`+1 over GF(p), by base-p
/// digit expansion.
fn indexed_poly(p: u64, maxdeg: usize, mut counter: u64) -> ModPoly {
    let mut c = Vec::new();
    while counter > 0 && c.len() <= maxdeg {
        c.push(counter % p);
        counter /= p;
    }
    ModPoly::new(p, c)
}

// ---------------------------------------------------------------------------
// Hensel lifting of the modular factorization to p^k.

fn md(f: &IP, m: &BigInt) -> IP {
    f.map(|c| c.mod_floor(m))
}

/// Symmetric representative in (-m/2, m/2].
fn symmetric(f: &IP, m: &BigInt) -> IP {
    let half = m / 2;
    f.map(|c| {
        let r = c.mod_floor(m);
        if r > half {
            r - m
        } else {
            r
        }
    })
}

/// Division with remainder mod m by a divisor whose lc is exactly 1.
fn mod_divrem_monic(f: &IP, h: &IP, m: &BigInt) -> (IP, IP) {
    let dd = h.degree().expect("monic divisor");
    debug_assert!(h.lc().unwrap().is_one());
    let mut r: Vec<BigInt> = f.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); r.len().saturating_sub(dd)];
    while r.len() > dd {
        let k = r.len() - 1 - dd;
        let qq = r.last().unwrap().mod_floor(m);
        if !qq.is_zero() {
            for i in 0..=dd {
                let t = (&r[k + i] - &qq * h.coeff(i)).mod_floor(m);
                r[k + i] = t;
            }
        } else {
            r[k + dd] = BigInt::zero();
        }
        q[k] = qq;
        r.pop();
        while r.last().map_or(false, Zero::is_zero) {
            r.pop();
        }
    }
    (Polynomial::new(q), Polynomial::new(r))
}

/// One quadratic Hensel step: from f = g*h, s*g + t*h = 1 (mod m) to the
/// same congruences mod m^2, with h kept literally monic.
fn hensel_step(f: &IP, g: &IP, h: &IP, s: &IP, t: &IP, m: &BigInt) -> (IP, IP, IP, IP) {
    let m2 = m * m;
    let e = md(&(f - &(g * h)), &m2);
    let (q, r) = mod_divrem_monic(&md(&(s * &e), &m2), h, &m2);
    let g1 = md(&(&(g + &(t * &e)) + &(&q * g)), &m2);
    let h1 = md(&(h + &r), &m2);
    let b = md(&(&(&(s * &g1) + &(t * &h1)) - &Polynomial::one()), &m2);
    let (c, d) = mod_divrem_monic(&md(&(s * &b), &m2), &h1, &m2);
    let s1 = md(&(s - &d), &m2);
    let t1 = md(&(&(t - &(t * &b)) - &(&c * &g1)), &m2);
    (g1, h1, s1, t1)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let eg = a.extended_gcd(m);
    debug_assert!(eg.gcd.is_one());
    eg.x.mod_floor(m)
}

/// Lift the monic factors of `target` (mod p) to monic factors mod p^k.
/// `target = lc(target) * prod(factors)` mod p; the lc rides along in the
/// leftmost branch of the recursion and is divided out at the leaves.
fn hensel_lift_factors(target: &IP, factors: &[ModPoly], p: u64, pk: &BigInt) -> Vec<IP> {
    fn modpoly_to_int(f: &ModPoly) -> IP {
        Polynomial::new(f.c.iter().map(|&v| BigInt::from(v)).collect())
    }

    fn rec(target: &IP, factors: &[ModPoly], p: u64, pk: &BigInt) -> Vec<IP> {
        if factors.len() == 1 {
            let lc_inv = mod_inverse(target.lc().unwrap(), pk);
            return vec![md(&target.scale(&lc_inv), pk)];
        }
        let (left, right) = factors.split_at(factors.len() / 2);
        let pb = BigInt::from(p);
        let lc_mod_p = ModPoly::from_int_poly(&Polynomial::constant(target.lc().unwrap().clone()), p);
        let mut g0 = lc_mod_p;
        for f in left {
            g0 = g0.mul(f);
        }
        let mut h0 = ModPoly::constant(p, 1);
        for f in right {
            h0 = h0.mul(f);
        }
        let (one, s0, t0) = g0.ext_gcd(&h0);
        debug_assert_eq!(one.degree(), Some(0));

        let mut g = modpoly_to_int(&g0);
        let mut h = modpoly_to_int(&h0);
        let mut s = modpoly_to_int(&s0);
        let mut t = modpoly_to_int(&t0);
        let mut m = pb;
        while &m < pk {
            let (g1, h1, s1, t1) = hensel_step(&md(target, &(&m * &m)), &g, &h, &s, &t, &m);
            g = g1;
            h = h1;
            s = s1;
            t = t1;
            m = &m * &m;
        }
        let g = md(&g, pk);
        let h = md(&h, pk);
        let mut out = rec(&g, left, p, pk);
        out.extend(rec(&h, right, p, pk));
        out
    }

    rec(&md(target, pk), factors, p, pk)
}

/// Try all factor subsets (sizes 1..=r/2, degree-filtered); return true iff
/// some subset recombines to a proper rational factor of `f`.
fn has_rational_factor(f: &IP, lifted: &[IP], pk: &BigInt, allowed: &[bool]) -> bool {
    let r = lifted.len();
    let n = f.degree().unwrap();
    let lc = f.lc().unwrap();
    let mut chosen: Vec<usize> = Vec::new();

    fn combos(
        start: usize,
        size: usize,
        r: usize,
        chosen: &mut Vec<usize>,
        check: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if size == 0 {
            return check(chosen);
        }
        for i in start..=r - size {
            chosen.push(i);
            if combos(i + 1, size - 1, r, chosen, check) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    for size in 1..=r / 2 {
        let mut check = |idxs: &[usize]| -> bool {
            let dsum: usize = idxs
                .iter()
                .map(|&i| lifted[i].degree().unwrap())
                .sum();
            if dsum == 0 || dsum >= n || !allowed[dsum] {
                return false;
            }
            let mut cand = Polynomial::constant(lc.clone());
            for &i in idxs {
                cand = md(&(&cand * &lifted[i]), pk);
            }
            let cand = symmetric(&cand, pk).primitive_part();
            f.exact_div(&cand).is_some()
        };
        if combos(0, size, r, &mut chosen, &mut check) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> IP {
        Polynomial::from_ints(cs)
    }

    #[test]
    fn modpoly_basics() {
        let p = 7;
        let f = ModPoly::from_int_poly(&ip(&[1, 0, 1]), p); // x^2+1
        let g = ModPoly::from_int_poly(&ip(&[3, 1]), p); // x+3
        let prod = f.mul(&g);
        assert_eq!(prod.c, vec![3, 1, 3, 1]);
        let (q, r) = prod.div_rem(&g);
        assert_eq!(q.c, f.c);
        assert!(r.is_zero());
        let (gcd, s, t) = f.ext_gcd(&g);
        // x^2+1 and x+3 share no root mod 7 ((-3)^2 = 2 != -1)
        assert_eq!(gcd.degree(), Some(0));
        let combo = s.mul(&f).add(&t.mul(&g));
        assert_eq!(combo.c, vec![1]);
    }

    #[test]
    fn ddf_degree_patterns() {
        // x^2+1 mod 3 is irreducible, mod 5 splits into linears
        let f3 = ModPoly::from_int_poly(&ip(&[1, 0, 1]), 3);
        assert_eq!(f3.distinct_degree_multiset(), vec![2]);
        let f5 = ModPoly::from_int_poly(&ip(&[1, 0, 1]), 5);
        assert_eq!(f5.distinct_degree_multiset(), vec![1, 1]);
    }

    #[test]
    fn full_modular_factorization() {
        // (x+1)(x+2)(x^2+x+1) mod 5; x^2+x+1 irreducible mod 5
        let f = &(&ip(&[1, 1]) * &ip(&[2, 1])) * &ip(&[1, 1, 1]);
        let fp = ModPoly::from_int_poly(&f, 5).monic();
        let factors = fp.factor();
        let degrees: Vec<usize> = factors.iter().map(|g| g.degree().unwrap()).collect();
        assert_eq!(degrees, vec![1, 1, 2]);
        let mut prod = ModPoly::constant(5, 1);
        for g in &factors {
            prod = prod.mul(g);
        }
        assert_eq!(prod.c, fp.c);
    }

    #[test]
    fn hensel_lift_recovers_true_factors() {
        // f = (x^2 + 3x + 1)(x^2 - 2x + 5), factors found mod 7 then lifted
        let a = ip(&[1, 3, 1]);
        let b = ip(&[5, -2, 1]);
        let f = &a * &b;
        let fp = ModPoly::from_int_poly(&f, 7).monic();
        assert!(fp.is_squarefree());
        let factors = fp.factor();
        let k = lift_exponent(&f, 7);
        let pk = BigInt::from(7u64).pow(k);
        let lifted = hensel_lift_factors(&f, &factors, 7, &pk);
        // product of all lifted monic factors = f mod p^k (f is monic)
        let mut prod = Polynomial::one();
        for g in &lifted {
            prod = md(&(&prod * g), &pk);
        }
        assert_eq!(symmetric(&prod, &pk), f);
    }

    #[test]
    fn irreducibility_spec_examples() {
        assert!(irreducible_over_q(&ip(&[1, 1, 1])).unwrap());
        assert!(!irreducible_over_q(&ip(&[-1, 0, 1])).unwrap());
        assert!(irreducible_over_q(&ip(&[9, 0, 1, 0, 1])).unwrap());
    }

    #[test]
    fn quartic_oracle_agrees() {
        // Exhaustive oracle for quartics: any monic quartic with a rational
        // factor has a monic factorization over Z (Gauss), so scan linear
        // roots and quadratic splittings with bounded coefficients.
        fn reducible_quartic_oracle(f: &IP) -> bool {
            let c0 = f.coeff(0);
            // linear factor: integer root dividing c0
            let mut d = BigInt::one();
            while &d * &d <= c0.abs().max(BigInt::one()) {
                if (&c0 % &d).is_zero() {
                    for cand in [d.clone(), -d.clone(), &c0 / &d, -(&c0 / &d)] {
                        if f.eval(&cand).is_zero() {
                            return true;
                        }
                    }
                }
                d += 1;
            }
            if c0.is_zero() {
                return true;
            }
            // quadratic * quadratic: x^4+ax^3+bx^2+cx+d = (x^2+ux+v)(x^2+sx+t)
            let bound = 600i64;
            let (a, b, c, dd) = (f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
            for u in -bound..=bound {
                let ub = BigInt::from(u);
                let s = &a - &ub;
                for v in -bound..=bound {
                    let vb = BigInt::from(v);
                    if vb.is_zero() && dd.is_zero() {
                        continue;
                    }
                    if !vb.is_zero() && !(&dd % &vb).is_zero() {
                        continue;
                    }
                    if vb.is_zero() {
                        continue;
                    }
                    let t = &dd / &vb;
                    if &vb + &t + &ub * &s == b && &ub * &t + &vb * &s == c {
                        return true;
                    }
                }
            }
            false
        }

        for (cs, expect_irreducible) in [
            (vec![9i64, 0, 1, 0, 1], true),   // x^4 + x^2 + 9
            (vec![9, 0, 0, 0, 1], true),      // x^4 + 9
            (vec![49, 0, -2, 0, 1], false),   // x^4 - 2x^2 + 49 = (x^2-4x+7)(x^2+4x+7)
            (vec![1, 1, 1, 1, 1], true),      // cyclotomic
            (vec![1, 0, -10, 0, 1], true),    // sqrt2+sqrt3 minimal poly
            (vec![4, 0, 5, 0, 1], false),     // (x^2+1)(x^2+4)
            (vec![-1, 0, 0, 0, 1], false),    // (x-1)(x+1)(x^2+1)
        ] {
            let f = ip(&cs);
            assert_eq!(
                irreducible_over_q(&f).unwrap(),
                expect_irreducible,
                "{cs:?}"
            );
            assert_eq!(reducible_quartic_oracle(&f), !expect_irreducible, "oracle {cs:?}");
        }
    }

    #[test]
    fn swinnerton_dyer_needs_recombination() {
        // minimal polynomial of sqrt(2)+sqrt(3)+sqrt(5): irreducible of
        // degree 8 but a product of quadratics modulo every prime, so the
        // degree filter alone cannot settle it.
        let f = ip(&[576, 0, -960, 0, 352, 0, -40, 0, 1]);
        assert!(irreducible_over_q(&f).unwrap());
    }

    #[test]
    fn products_are_reducible() {
        let f = &ip(&[1, 0, 1]) * &ip(&[1, 1, 1]);
        assert!(!irreducible_over_q(&f).unwrap());
        let g = &ip(&[7, 1]) * &ip(&[1, 2, 0, 0, 1]);
        assert!(!irreducible_over_q(&g).unwrap());
        // non-monic primitive
        let h = &ip(&[1, 2]) * &ip(&[-3, 1, 3]);
        assert!(!irreducible_over_q(&h).unwrap());
        assert!(irreducible_over_q(&ip(&[1, 0, 0, 2])).unwrap()); // 2x^3+1
    }

    #[test]
    fn input_validation() {
        assert!(matches!(
            irreducible_over_q(&ip(&[])),
            Err(Error::ZeroPolynomial)
        ));
        assert!(matches!(
            irreducible_over_q(&ip(&[5])),
            Err(Error::ConstantPolynomial)
        ));
        assert!(matches!(
            irreducible_over_q(&ip(&[2, 0, 2])),
            Err(Error::NotPrimitive)
        ));
        let mut big = vec![0i64; 18];
        big[0] = 1;
        big[17] = 1;
        assert!(matches!(
            irreducible_over_q(&ip(&big)),
            Err(Error::DegreeLimit(17, 16))
        ));
    }

    #[test]
    fn non_squarefree_is_reducible() {
        let f = &ip(&[1, 1]) * &ip(&[1, 1]);
        assert!(!irreducible_over_q(&f).unwrap());
    }
}
