//! Dense univariate polynomial arithmetic over a generic coefficient ring.
//!
//! The type is generic over the scalar via num-traits bounds; the crate
//! instantiates it at `BigInt` (exact integer work), `BigRational` (Sturm
//! chains, order bases) and occasionally `f64` in numeric oracles.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};

/// Dense polynomial with `coeffs[i]` the coefficient of `x^i`.
///
/// Trailing zero coefficients are trimmed on construction; the zero
/// polynomial has an empty coefficient vector and no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Zero + Clone> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Leading coefficient, `None` for zero.
    pub fn lc(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn map<U: Zero + Clone>(&self, f: impl FnMut(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T> Polynomial<T>
where
    T: Zero + One + Clone,
{
    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }
}

impl<T> Polynomial<T>
where
    T: Zero + One + Clone + PartialEq,
{
    pub fn is_monic(&self) -> bool {
        self.lc().map_or(false, One::is_one)
    }
}

impl<T> Polynomial<T>
where
    T: Zero + Clone + Mul<Output = T> + Add<Output = T>,
{
    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }
}

impl<T> Polynomial<T>
where
    T: Zero + Clone + Mul<Output = T> + FromPrimitive,
{
    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize(i).expect("small index"))
                .collect(),
        )
    }
}

impl<T> Polynomial<T>
where
    T: Zero + One + Clone + Mul<Output = T>,
{
    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl<T> Polynomial<T>
where
    T: Zero + Clone + Sub<Output = T> + Mul<Output = T> + Div<Output = T>,
{
    /// Long division over a field. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let dlc = d.lc().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap().clone() / dlc.clone();
            for i in 0..=dd {
                let t = rem[k + i].clone() - q.clone() * d.coeffs[i].clone();
                rem[k + i] = t;
            }
            rem.pop();
            while rem.last().map_or(false, Zero::is_zero) {
                rem.pop();
            }
            quot[k] = q;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }
}

impl<'a, 'b, T> Add<&'b Polynomial<T>> for &'a Polynomial<T>
where
    T: Zero + Clone,
{
    type Output = Polynomial<T>;
    fn add(self, rhs: &'b Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, 'b, T> Sub<&'b Polynomial<T>> for &'a Polynomial<T>
where
    T: Zero + Clone + Sub<Output = T>,
{
    type Output = Polynomial<T>;
    fn sub(self, rhs: &'b Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, T> Neg for &'a Polynomial<T>
where
    T: Zero + Clone + Neg<Output = T>,
{
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<'a, 'b, T> Mul<&'b Polynomial<T>> for &'a Polynomial<T>
where
    T: Zero + Clone + Mul<Output = T>,
{
    type Output = Polynomial<T>;
    fn mul(self, rhs: &'b Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = out[i + j].clone() + a.clone() * b.clone();
                out[i + j] = t;
            }
        }
        Polynomial::new(out)
    }
}

impl<T> fmt::Display for Polynomial<T>
where
    T: Zero + Clone + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial<BigInt> {
    /// Convenience constructor from machine integers, `cs[i]` = coefficient of `x^i`.
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> Polynomial<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn to_f64(&self) -> Polynomial<f64> {
        self.map(|c| crate::arith::bigint_to_f64(c))
    }

    /// Gcd of the coefficients (non-negative); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content; the sign of the leading coefficient is kept.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.map(|a| a / &c)
    }

    /// Exact division test over Z: returns the quotient when `d` divides
    /// `self` in `Q[x]` with an integral quotient, `None` otherwise.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree().unwrap();
        if n < dd {
            return None;
        }
        let dlc = d.lc().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - dd + 1];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let top = rem.last().unwrap();
            if !(top % dlc).is_zero() {
                return None;
            }
            let q = top / dlc;
            for i in 0..=dd {
                let t = &rem[k + i] - &q * &d.coeffs[i];
                rem[k + i] = t;
            }
            rem.pop();
            while rem.last().map_or(false, Zero::is_zero) {
                rem.pop();
            }
            quot[k] = q;
        }
        if rem.is_empty() {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// Power sums `s_k = sum_i r_i^k` of the roots of a monic polynomial,
    /// for `k = 0..=kmax`, via Newton's identities. Exact.
    pub fn power_sums(&self, kmax: usize) -> crate::Result<Vec<BigInt>> {
        if !self.is_monic() {
            return Err(crate::Error::NotMonic);
        }
        let n = self.degree().unwrap();
        let c = |i: usize| self.coeff(i);
        let mut s = Vec::with_capacity(kmax + 1);
        s.push(BigInt::from(n));
        for k in 1..=kmax {
            // s_k + sum_{i=1}^{min(k,n)-?} c_{n-i} s_{k-i} + [k<=n] k*c_{n-k} = 0
            let mut acc = BigInt::zero();
            for i in 1..k.min(n + 1) {
                if i <= n {
                    acc += c(n - i) * &s[k - i];
                }
            }
            if k <= n {
                acc += BigInt::from(k) * c(n - k);
            }
            s.push(-acc);
        }
        Ok(s)
    }
}

/// Monic gcd over the rationals (Euclid); returns zero iff both inputs are zero.
pub fn gcd_rational(
    a: &Polynomial<BigRational>,
    b: &Polynomial<BigRational>,
) -> Polynomial<BigRational> {
    let mut f = a.clone();
    let mut g = b.clone();
    while !g.is_zero() {
        let (_, r) = f.div_rem(&g);
        f = g;
        g = r;
    }
    match f.lc() {
        Some(l) if !l.is_one() => {
            let inv = l.clone();
            f.map(|c| c / &inv)
        }
        _ => f,
    }
}

/// Primitive gcd of two integer polynomials (leading coefficient positive).
pub fn gcd_int(a: &Polynomial<BigInt>, b: &Polynomial<BigInt>) -> Polynomial<BigInt> {
    let g = gcd_rational(&a.to_rational(), &b.to_rational());
    if g.is_zero() {
        return Polynomial::zero();
    }
    // Clear denominators, then reduce to the primitive part.
    let denom_lcm = g
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let z = Polynomial::new(
        g.coeffs()
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect(),
    );
    let prim = z.primitive_part();
    if prim.lc().map_or(false, Signed::is_negative) {
        -&prim
    } else {
        prim
    }
}

/// `f / gcd(f, f')`, primitive with positive leading coefficient: the
/// squarefree part, carrying each root exactly once.
pub fn squarefree_part(f: &Polynomial<BigInt>) -> Polynomial<BigInt> {
    if f.degree().unwrap_or(0) == 0 {
        return f.clone();
    }
    let g = gcd_int(f, &f.derivative());
    if g.degree() == Some(0) {
        let p = f.primitive_part();
        return if p.lc().map_or(false, Signed::is_negative) {
            -&p
        } else {
            p
        };
    }
    let q = f
        .exact_div(&g)
        .or_else(|| f.primitive_part().exact_div(&g))
        .expect("gcd divides");
    let p = q.primitive_part();
    if p.lc().map_or(false, Signed::is_negative) {
        -&p
    } else {
        p
    }
}

pub fn is_squarefree(f: &Polynomial<BigInt>) -> bool {
    match f.degree() {
        None => false,
        Some(0) => true,
        Some(_) => gcd_int(f, &f.derivative()).degree() == Some(0),
    }
}

/// Lagrange interpolation through distinct nodes. Panics on repeated nodes.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Polynomial<BigRational> {
    let mut acc: Polynomial<BigRational> = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut num = Polynomial::constant(yi.clone());
        let mut den = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            num = &num * &Polynomial::new(vec![-xj.clone(), BigRational::one()]);
            den *= xi - xj;
        }
        assert!(!den.is_zero(), "interpolation nodes must be distinct");
        acc = &acc + &num.map(|c| c / &den);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> Polynomial<BigInt> {
        Polynomial::from_ints(cs)
    }

    #[test]
    fn construction_trims_trailing_zeros() {
        let f = ip(&[1, 2, 0, 0]);
        assert_eq!(f.degree(), Some(1));
        assert!(ip(&[0, 0]).is_zero());
        assert_eq!(ip(&[]).degree(), None);
    }

    #[test]
    fn ring_ops() {
        let f = ip(&[1, 1]); // 1 + x
        let g = ip(&[-1, 1]); // -1 + x
        assert_eq!(&f * &g, ip(&[-1, 0, 1]));
        assert_eq!(&f + &g, ip(&[0, 2]));
        assert_eq!(&f - &g, ip(&[2]));
        assert_eq!(f.pow(3), ip(&[1, 3, 3, 1]));
        assert_eq!(f.eval(&BigInt::from(4)), BigInt::from(5));
    }

    #[test]
    fn derivative_and_eval() {
        let f = ip(&[5, 3, 0, 2]); // 2x^3 + 3x + 5
        assert_eq!(f.derivative(), ip(&[3, 0, 6]));
        assert_eq!(f.eval(&BigInt::from(2)), BigInt::from(27));
    }

    #[test]
    fn division_over_rationals() {
        let f = ip(&[-1, 0, 0, 1]).to_rational(); // x^3 - 1
        let d = ip(&[-1, 1]).to_rational(); // x - 1
        let (q, r) = f.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, ip(&[1, 1, 1]).to_rational());
    }

    #[test]
    fn exact_division_over_integers() {
        let f = ip(&[2, 0, -2]); // -2x^2 + 2
        let d = ip(&[1, 1]);
        assert_eq!(f.exact_div(&d), Some(ip(&[2, -2])));
        assert_eq!(ip(&[1, 0, 1]).exact_div(&d), None);
        // 3x+3 divides over Q but not with an integral quotient for x+... it does: (3x+3)/(x+1)=3
        assert_eq!(ip(&[3, 3]).exact_div(&ip(&[1, 1])), Some(ip(&[3])));
        // x+1 into 2x+1: quotient would be non-integral
        assert_eq!(ip(&[1, 2]).exact_div(&ip(&[1, 1])), None);
    }

    #[test]
    fn content_and_primitive() {
        let f = ip(&[6, -9, 3]);
        assert_eq!(f.content(), BigInt::from(3));
        assert_eq!(f.primitive_part(), ip(&[2, -3, 1]));
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = &ip(&[-1, 1]) * &ip(&[-1, 1]); // (x-1)^2
        let g = &ip(&[-1, 1]) * &ip(&[1, 1]); // (x-1)(x+1)
        assert_eq!(gcd_int(&f, &g), ip(&[-1, 1]));
        let h = &f * &ip(&[1, 1]);
        assert_eq!(squarefree_part(&h), ip(&[-1, 0, 1]));
        assert!(!is_squarefree(&f));
        assert!(is_squarefree(&g));
    }

    #[test]
    fn power_sums_match_known_roots() {
        // roots 1, 2
        let s = ip(&[2, -3, 1]).power_sums(3).unwrap();
        assert_eq!(s, vec![2.into(), 3.into(), 5.into(), 9.into()]);
        // roots +-i
        let s = ip(&[1, 0, 1]).power_sums(2).unwrap();
        assert_eq!(s, vec![2.into(), 0.into(), (-2).into()]);
        // frozen from Newton recurrence cross-checked numerically below
        let s = ip(&[9, 0, 1, 0, 1]).power_sums(4).unwrap();
        assert_eq!(
            s,
            vec![4.into(), 0.into(), (-2).into(), 0.into(), (-34).into()]
        );
        assert!(ip(&[1, 2]).power_sums(1).is_err());
    }

    #[test]
    fn power_sums_match_numeric_roots() {
        // independent numeric check via Durand-Kerner root finding
        let f = ip(&[9, 0, 1, 0, 1]);
        let roots = crate::test_support::complex_roots(&f);
        for k in 0..=4 {
            let num: f64 = roots.iter().map(|r| r.powu(k as u32).re).sum();
            let exact = f.power_sums(4).unwrap()[k]
                .to_string()
                .parse::<f64>()
                .unwrap();
            assert!((num - exact).abs() < 1e-9, "k={k}: {num} vs {exact}");
        }
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = ip(&[3, -2, 0, 5]).to_rational();
        let pts: Vec<_> = (0..5)
            .map(|i| {
                let x = BigRational::from_integer(BigInt::from(i));
                (x.clone(), f.eval(&x))
            })
            .collect();
        assert_eq!(interpolate(&pts), f);
    }
}
