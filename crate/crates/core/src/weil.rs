//! Weil p-polynomials over a prime field: the symmetric family
//! F(a_1, ..., a_g), validity via the real companion polynomial, the Y_g
//! coefficient box, and the complete g = 1 trace classification.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Zero};

use crate::arith::{self, primes, squarefree_part, Polynomial};
use crate::{Error, IntPolynomial, Result};

pub const MAX_G: usize = 8;

/// Enumeration ceiling for materialized Y_g sweeps.
pub const ENUMERATION_BUDGET: u64 = 10_000_000;

/// A prime p and dimension g, validated on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeilParams {
    p: u64,
    g: usize,
}

impl WeilParams {
    pub fn new(p: u64, g: usize) -> Result<Self> {
        if !primes::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !(1..=MAX_G).contains(&g) {
            return Err(Error::BadDimension { got: g, max: MAX_G });
        }
        Ok(WeilParams { p, g })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn g(&self) -> usize {
        self.g
    }
}

/// Coefficient vector (a_1, ..., a_g) of a family member.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoefficientVector {
    a: Vec<BigInt>,
}

impl CoefficientVector {
    pub fn new(a: Vec<BigInt>) -> Self {
        CoefficientVector { a }
    }

    pub fn from_ints(a: &[i64]) -> Self {
        CoefficientVector {
            a: a.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.a
    }

    /// Exact Y_g membership: g^2 a_i^2 <= p^i for i < g, g^2 a_g^2 <= 4 p^g,
    /// gcd(a_g, p) = 1.
    pub fn is_in_yg(&self, params: &WeilParams) -> bool {
        let g = params.g;
        if self.a.len() != g {
            return false;
        }
        let gsq = BigInt::from((g * g) as u64);
        let p = BigInt::from(params.p);
        for (i, ai) in self.a.iter().enumerate().take(g - 1) {
            if &gsq * ai * ai > p.pow((i + 1) as u32) {
                return false;
            }
        }
        let ag = &self.a[g - 1];
        if &gsq * ag * ag > BigInt::from(4) * p.pow(g as u32) {
            return false;
        }
        ag.gcd(&p).is_one()
    }
}

/// A family member with its polynomial and validity flags.
#[derive(Clone, Debug)]
pub struct WeilCandidate {
    pub params: WeilParams,
    pub a: CoefficientVector,
    pub poly: IntPolynomial,
    pub is_weil: bool,
    pub is_simple_ordinary: bool,
}

impl WeilCandidate {
    pub fn build(params: WeilParams, a: CoefficientVector) -> Result<Self> {
        let poly = build_f(&params, &a)?;
        let weil = is_weil(&poly, params.p)?;
        let ordinary = a.as_slice()[params.g - 1]
            .gcd(&BigInt::from(params.p))
            .is_one();
        let simple = if weil && ordinary {
            arith::irreducible_over_q(&poly)?
        } else {
            false
        };
        Ok(WeilCandidate {
            params,
            a,
            poly,
            is_weil: weil,
            is_simple_ordinary: simple,
        })
    }
}

/// F(a_1,...,a_g) = (x^2g + p^g) + a_1 (x^(2g-1) + p^(g-1) x) + ...
///                + a_(g-1) (x^(g+1) + p x^(g-1)) + a_g x^g.
pub fn build_f(params: &WeilParams, a: &CoefficientVector) -> Result<IntPolynomial> {
    let g = params.g;
    if a.len() != g {
        return Err(Error::LengthMismatch {
            got: a.len(),
            want: g,
        });
    }
    let p = BigInt::from(params.p);
    let mut c = vec![BigInt::zero(); 2 * g + 1];
    c[2 * g] = BigInt::one();
    c[0] = p.pow(g as u32);
    for i in 1..g {
        let ai = &a.as_slice()[i - 1];
        c[2 * g - i] += ai;
        c[i] += ai * p.pow((g - i) as u32);
    }
    c[g] += &a.as_slice()[g - 1];
    Ok(Polynomial::new(c))
}

/// Does f satisfy coeff(x^(g-j)) = p^j coeff(x^(g+j)) for all j?
pub fn has_functional_symmetry(f: &IntPolynomial, p: u64) -> bool {
    let n = match f.degree() {
        Some(n) if n >= 2 && n % 2 == 0 => n,
        _ => return false,
    };
    let g = n / 2;
    let pb = BigInt::from(p);
    (1..=g).all(|j| f.coeff(g - j) == pb.pow(j as u32) * f.coeff(g + j))
}

/// The unique monic degree-g polynomial h with f(x) = x^g h(x + p/x),
/// computed by exact expansion of the basis w_j(y) = x^j + (p/x)^j through
/// the recurrence w_(j+1) = y w_j - p w_(j-1).
pub fn real_weil_poly(f: &IntPolynomial, p: u64) -> Result<IntPolynomial> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree().unwrap();
    if n % 2 != 0 || n == 0 || !has_functional_symmetry(f, p) {
        return Err(Error::SymmetryViolated(p));
    }
    let g = n / 2;
    let pb = BigInt::from(p);
    let mut h = Polynomial::constant(f.coeff(g));
    let mut w_prev: IntPolynomial = Polynomial::constant(BigInt::from(2));
    let mut w = Polynomial::x();
    for j in 1..=g {
        h = &h + &w.scale(&f.coeff(g + j));
        if j < g {
            let w_next = &(&Polynomial::x() * &w) - &w_prev.scale(&pb);
            w_prev = w;
            w = w_next;
        }
    }
    Ok(h)
}

/// True iff monic even-degree f has the functional-equation symmetry and all
/// roots of its real companion h are real in [-2 sqrt(p), 2 sqrt(p)].
///
/// Possible endpoint roots are exactly a y^2 - 4p factor of h (4p is never a
/// square for prime p); that factor is divided out and the remaining roots
/// are counted strictly inside the interval by a Sturm chain evaluated
/// exactly at +-2 sqrt(p).
pub fn is_weil(f: &IntPolynomial, p: u64) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree().unwrap();
    if n == 0 || n % 2 != 0 {
        return Err(Error::SymmetryViolated(p));
    }
    if !has_functional_symmetry(f, p) {
        return Ok(false);
    }
    let h = real_weil_poly(f, p)?;
    let mut hs = squarefree_part(&h);
    let endpoint = IntPolynomial::from_ints(&[-(4 * p as i64), 0, 1]);
    if let Some(q) = hs.exact_div(&endpoint) {
        hs = q;
    }
    let m = match hs.degree() {
        None | Some(0) => return Ok(true),
        Some(m) => m,
    };
    Ok(arith::real_roots_in_two_sqrt_interval(&hs, p)? == m)
}

// ---------------------------------------------------------------------------
// Y_g enumeration

/// The coefficient box Y_g for given (p, g): a_i in [-b_i, b_i] with
/// g^2 b_i^2 <= p^i for i < g, and a_g in [-b_g, b_g] with
/// g^2 b_g^2 <= 4 p^g and p not dividing a_g. Lexicographically ordered and
/// index-addressable, so sweeps can be partitioned into contiguous ranges.
#[derive(Clone, Debug)]
pub struct YgFamily {
    params: WeilParams,
    prefix_bounds_big: Vec<BigInt>,
    ag_bound_big: BigInt,
    count_big: BigInt,
    small: Option<SmallYg>,
}

#[derive(Clone, Debug)]
struct SmallYg {
    prefix_bounds: Vec<i64>,
    ag_bound: i64,
    ag_count: u64,
    total: u64,
}

/// Largest t >= 0 with t^2 * div^2 <= n.
fn bounded_sqrt(n: &BigInt, div: u64) -> BigInt {
    let d = BigInt::from(div);
    let mut t: BigInt = n.sqrt() / &d;
    while (&t + 1u32).pow(2) * d.pow(2) <= *n {
        t += 1;
    }
    while !t.is_zero() && t.pow(2) * d.pow(2) > *n {
        t -= 1;
    }
    t
}

impl YgFamily {
    pub fn new(params: WeilParams) -> Self {
        let g = params.g as u32;
        let p = BigInt::from(params.p);
        let gd = params.g as u64;
        let prefix_bounds_big: Vec<BigInt> =
            (1..g).map(|i| bounded_sqrt(&p.pow(i), gd)).collect();
        let ag_bound_big = bounded_sqrt(&(BigInt::from(4) * p.pow(g)), gd);
        // admissible a_g values: 2 * (b_g - floor(b_g / p))
        let ag_count_big: BigInt = BigInt::from(2) * (&ag_bound_big - &ag_bound_big / &p);
        let count_big = prefix_bounds_big
            .iter()
            .fold(ag_count_big.clone(), |acc, b| acc * (BigInt::from(2) * b + 1));
        let small = if count_big <= BigInt::from(ENUMERATION_BUDGET) {
            Some(SmallYg {
                prefix_bounds: prefix_bounds_big
                    .iter()
                    .map(|b| i64::try_from(b.clone()).expect("bounded by budget"))
                    .collect(),
                ag_bound: i64::try_from(ag_bound_big.clone()).expect("bounded by budget"),
                ag_count: u64::try_from(ag_count_big).expect("nonnegative"),
                total: u64::try_from(count_big.clone()).expect("bounded by budget"),
            })
        } else {
            None
        };
        YgFamily {
            params,
            prefix_bounds_big,
            ag_bound_big,
            count_big,
            small,
        }
    }

    pub fn params(&self) -> &WeilParams {
        &self.params
    }

    /// Exact cardinality |Y_g| (always available).
    pub fn count(&self) -> &BigInt {
        &self.count_big
    }

    /// Cardinality as u64 when within the enumeration budget.
    pub fn len(&self) -> Result<u64> {
        self.small
            .as_ref()
            .map(|s| s.total)
            .ok_or_else(|| Error::BudgetExceeded {
                size: self.count_big.to_string(),
                budget: ENUMERATION_BUDGET,
            })
    }

    pub fn is_empty(&self) -> bool {
        self.count_big.is_zero()
    }

    /// The idx-th vector in lexicographic order on (a_1, ..., a_g).
    pub fn get(&self, idx: u64) -> Result<CoefficientVector> {
        let small = self.small.as_ref().ok_or_else(|| Error::BudgetExceeded {
            size: self.count_big.to_string(),
            budget: ENUMERATION_BUDGET,
        })?;
        assert!(idx < small.total, "index out of range");
        let mut radix: Vec<u64> = small
            .prefix_bounds
            .iter()
            .map(|b| (2 * b + 1) as u64)
            .collect();
        radix.push(small.ag_count);
        let mut digits = vec![0u64; radix.len()];
        let mut rest = idx;
        for (d, r) in digits.iter_mut().zip(&radix).rev() {
            *d = rest % r;
            rest /= r;
        }
        let mut a: Vec<BigInt> = digits
            .iter()
            .zip(&small.prefix_bounds)
            .map(|(&d, &b)| BigInt::from(d as i64 - b))
            .collect();
        a.push(BigInt::from(self.ag_from_rank(digits[self.params.g - 1])));
        Ok(CoefficientVector::new(a))
    }

    /// The rank-th admissible a_g in increasing order (0-based), by binary
    /// search on the counting function.
    fn ag_from_rank(&self, rank: u64) -> i64 {
        let small = self.small.as_ref().expect("enumerable");
        let b = small.ag_bound;
        let p = self.params.p as i64;
        // admissible values in [-b, x]
        let cum = |x: i64| -> u64 {
            let all = (x + b + 1) as u64;
            let multiples = (x.div_euclid(p) + b.div_euclid(p) + 1).max(0) as u64;
            all - multiples
        };
        let (mut lo, mut hi) = (-b, b);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if cum(mid) >= rank + 1 {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        lo
    }

    /// Iterator over an index range, for partitioned sweeps.
    pub fn iter_range(
        &self,
        range: std::ops::Range<u64>,
    ) -> impl Iterator<Item = CoefficientVector> + '_ {
        range.map(move |i| self.get(i).expect("range within budgeted family"))
    }

    pub fn iter(&self) -> impl Iterator<Item = CoefficientVector> + '_ {
        let n = self.len().expect("family within enumeration budget");
        self.iter_range(0..n)
    }

    /// Per-coordinate bounds (b_1, ..., b_(g-1)).
    pub fn prefix_bounds(&self) -> &[BigInt] {
        &self.prefix_bounds_big
    }

    pub fn ag_bound(&self) -> &BigInt {
        &self.ag_bound_big
    }
}

// ---------------------------------------------------------------------------
// g = 1 classification

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceKind {
    Ordinary,
    Supersingular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct G1Class {
    pub trace: i64,
    pub kind: TraceKind,
}

/// All isogeny classes of elliptic curves over F_p: traces a with
/// a^2 <= 4p, ordinary iff gcd(a, p) = 1. For a prime field every such
/// trace is admissible (a^2 = 4p is impossible), and the traces divisible
/// by p (a = 0 always; a = +-2 for p = 2, a = +-3 for p = 3) are exactly
/// the supersingular ones.
pub fn classify_g1(p: u64) -> Result<Vec<G1Class>> {
    if !primes::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let bound = (4 * p).sqrt() as i64;
    Ok((-bound..=bound)
        .map(|a| G1Class {
            trace: a,
            kind: if primes::gcd_i64(a, p as i64) == 1 {
                TraceKind::Ordinary
            } else {
                TraceKind::Supersingular
            },
        })
        .collect())
}

/// Is F(a) attached to a simple variety? For ordinary Weil polynomials
/// simplicity is equivalent to irreducibility over Q; non-Weil or
/// non-ordinary inputs are rejected rather than guessed at.
pub fn is_simple_ordinary(params: &WeilParams, a: &CoefficientVector) -> Result<bool> {
    let f = build_f(params, a)?;
    if !is_weil(&f, params.p)? {
        return Err(Error::NotWeil(params.p));
    }
    if !a.as_slice()[params.g - 1]
        .gcd(&BigInt::from(params.p))
        .is_one()
    {
        return Err(Error::NotOrdinary);
    }
    arith::irreducible_over_q(&f)
}
