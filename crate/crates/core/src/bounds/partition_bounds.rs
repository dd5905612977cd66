//! The orbit-count bound functions built from partition statistics, their
//! grid verification, and growth-rate scans of the partition function.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Real;
use crate::arith::partitions::{partition_counts_up_to, partition_parts_table};
use crate::arith::primes;
use crate::{Error, Result, Wide};

/// Inner partition weight W_a(t) = sum_(lambda in P(a)) t^(a - len(lambda))
/// evaluated at t = ell^d, exactly.
fn partition_weight(parts: &[Vec<BigInt>], a: usize, t: &BigInt) -> BigInt {
    if a == 0 {
        return BigInt::one();
    }
    // sum_k p(a, k) t^(a-k)
    let mut acc = BigInt::zero();
    let mut tp = BigInt::one();
    for k in (1..=a).rev() {
        acc += &parts[a][k] * &tp;
        tp *= t;
    }
    acc
}

/// g(ell, n, b) = sum over compositions a_1 + ... + a_n = b of
/// prod_i W_(a_i)(ell): the z^b coefficient of (sum_a W_a(ell) z^a)^n.
pub fn bound_g(ell: u64, n: usize, b: usize) -> BigInt {
    bound_g_at(ell, 1, n, b)
}

fn bound_g_at(ell: u64, d: usize, n: usize, b: usize) -> BigInt {
    let parts = partition_parts_table(b);
    let t = BigInt::from(ell).pow(d as u32);
    let w: Vec<BigInt> = (0..=b).map(|a| partition_weight(&parts, a, &t)).collect();
    // truncated power: coefficient of z^b in w(z)^n
    let mut acc = vec![BigInt::zero(); b + 1];
    acc[0] = BigInt::one();
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); b + 1];
        for (i, ai) in acc.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, wj) in w.iter().enumerate().take(b + 1 - i) {
                next[i + j] += ai * wj;
            }
        }
        acc = next;
    }
    acc[b].clone()
}

/// f(ell, n, delta, d) = ell^(n(n-1)delta/2) *
///   sum_(0 <= b <= delta n / d) sum over compositions of b of
///   prod_i W_(a_i)(ell^d).
pub fn bound_f(ell: u64, n: usize, delta: usize, d: usize) -> BigInt {
    let prefix = BigInt::from(ell).pow((n * (n - 1) * delta / 2) as u32);
    let bmax = delta * n / d;
    let mut sum = BigInt::zero();
    for b in 0..=bmax {
        sum += bound_g_at(ell, d, n, b);
    }
    prefix * sum
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitGridViolation {
    pub ell: u64,
    pub n: usize,
    pub delta: usize,
    pub f_value: BigInt,
    pub bound: BigInt,
}

#[derive(Clone, Debug)]
pub struct OrbitGridOutcome {
    pub checked: usize,
    pub out_of_hypothesis: usize,
    pub checked_n1: usize,
    pub violations: Vec<OrbitGridViolation>,
}

/// Exact grid verification of the two orbit-count inequalities:
/// f(ell, n, delta, 1) <= ell^(n^2 delta) whenever n >= 2 and
/// ell^(n-1) >= 64, and f(ell, 1, delta, 1) <= delta P(delta) ell^delta.
/// Grid points failing the n >= 2 hypothesis are recorded, not checked.
pub fn orbit_bound_grid_check(lmax: u64, nmax: usize, dmax: usize) -> OrbitGridOutcome {
    let mut out = OrbitGridOutcome {
        checked: 0,
        out_of_hypothesis: 0,
        checked_n1: 0,
        violations: Vec::new(),
    };
    let pcounts = partition_counts_up_to(dmax);
    for ell in primes::primes_up_to(lmax) {
        for delta in 1..=dmax {
            // n = 1 inequality from the proof chain
            let f1 = bound_f(ell, 1, delta, 1);
            let bound1 = BigInt::from(delta as u64) * &pcounts[delta] * BigInt::from(ell).pow(delta as u32);
            out.checked_n1 += 1;
            if f1 > bound1 {
                out.violations.push(OrbitGridViolation {
                    ell,
                    n: 1,
                    delta,
                    f_value: f1,
                    bound: bound1,
                });
            }
            for n in 2..=nmax {
                if BigInt::from(ell).pow((n - 1) as u32) < BigInt::from(64) {
                    out.out_of_hypothesis += 1;
                    continue;
                }
                let f = bound_f(ell, n, delta, 1);
                let bound = BigInt::from(ell).pow((n * n * delta) as u32);
                out.checked += 1;
                if f > bound {
                    out.violations.push(OrbitGridViolation {
                        ell,
                        n,
                        delta,
                        f_value: f,
                        bound,
                    });
                }
            }
        }
    }
    out
}

/// Scan for the smallest constants in P(m) <= M 2^(m/4) and
/// m P(m) <= N 2^((C-1)m/2) up to mmax, with tail-monotonicity flags.
#[derive(Clone, Debug)]
pub struct GrowthScan {
    pub mmax: usize,
    pub c: (u64, u64),
    /// max over 0 <= m <= mmax of P(m) / 2^(m/4)
    pub m_constant: f64,
    pub m_argmax: usize,
    /// max over 1 <= m <= mmax of m P(m) / 2^((C-1)m/2)
    pub n_constant: f64,
    pub n_argmax: usize,
    pub m_tail_monotone: bool,
    pub n_tail_monotone: bool,
}

pub fn hardy_ramanujan_scan(mmax: usize, c: (u64, u64)) -> Result<GrowthScan> {
    if mmax > 1000 {
        return Err(Error::OutOfRange {
            name: "mmax",
            got: mmax,
            lo: 0,
            hi: 1000,
        });
    }
    if c.1 == 0 || c.0 <= c.1 {
        return Err(Error::BadEpsilon); // C must be a rational > 1
    }
    let pc = partition_counts_up_to(mmax);
    let to_wide = |v: &BigInt| Wide::of(crate::arith::bigint_to_f64(v));
    let quarter = Wide::of(0.25);
    // (C-1)/2 as an exact wide value
    let half_cm1 = (Wide::of(c.0 as f64) / Wide::of(c.1 as f64) - Wide::one()) / Wide::of(2.0);

    let m_ratio = |m: usize| -> Wide {
        to_wide(&pc[m]) * (-(Wide::ln2() * quarter * Wide::of(m as f64))).exp()
    };
    let n_ratio = |m: usize| -> Wide {
        Wide::of(m as f64) * to_wide(&pc[m])
            * (-(Wide::ln2() * half_cm1 * Wide::of(m as f64))).exp()
    };

    let mut m_best = (0usize, m_ratio(0));
    for m in 1..=mmax {
        let r = m_ratio(m);
        if r > m_best.1 {
            m_best = (m, r);
        }
    }
    // the m P(m) scan starts at m = 1; empty when mmax = 0
    let mut n_best = (0usize, Wide::zero());
    for m in 1..=mmax {
        let r = n_ratio(m);
        if r > n_best.1 {
            n_best = (m, r);
        }
    }
    let m_tail = (m_best.0..mmax).all(|m| m_ratio(m + 1) <= m_ratio(m));
    let n_tail = (n_best.0.max(1)..mmax).all(|m| n_ratio(m + 1) <= n_ratio(m));
    Ok(GrowthScan {
        mmax,
        c,
        m_constant: m_best.1.approx(),
        m_argmax: m_best.0,
        n_constant: n_best.1.approx(),
        n_argmax: n_best.0,
        m_tail_monotone: m_tail,
        n_tail_monotone: n_tail,
    })
}
