//! Integer partition counting: p(m) by the pentagonal-number recurrence,
//! p(m, k) by the two-variable recurrence, and the length-statistics
//! polynomial that drives the orbit-count bound functions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// p(0..=m) by Euler's pentagonal number recurrence.
pub fn partition_counts_up_to(m: usize) -> Vec<BigInt> {
    let mut table: Vec<BigInt> = Vec::with_capacity(m + 1);
    table.push(BigInt::one());
    for i in 1..=m {
        let mut sum = BigInt::zero();
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign_plus = k % 2 == 1;
            if sign_plus {
                sum += &table[i - g1];
            } else {
                sum -= &table[i - g1];
            }
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                if sign_plus {
                    sum += &table[i - g2];
                } else {
                    sum -= &table[i - g2];
                }
            }
            k += 1;
        }
        table.push(sum);
    }
    table
}

/// p(m), the number of partitions of m.
pub fn partition_count(m: usize) -> BigInt {
    partition_counts_up_to(m).pop().unwrap()
}

/// p(m, k), the number of partitions of m into exactly k parts, via
/// p(m,k) = p(m-1,k-1) + p(m-k,k).
pub fn partition_count_parts(m: usize, k: usize) -> BigInt {
    partition_parts_table(m)[m][k].clone()
}

/// Full table t[m][k] = p(m, k) for 0 <= k <= m <= mmax.
pub fn partition_parts_table(mmax: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); mmax + 1]; mmax + 1];
    t[0][0] = BigInt::one();
    for m in 1..=mmax {
        for k in 1..=m {
            let a = t[m - 1][k - 1].clone();
            let b = if m >= k { t[m - k][k].clone() } else { BigInt::zero() };
            t[m][k] = a + b;
        }
    }
    t
}

/// Coefficients of `sum_{lambda in P(a)} t^(a - len(lambda))` as a vector
/// indexed by the exponent of t. Since a partition of `a` with k parts
/// contributes t^(a-k), this is `[p(a,a), p(a,a-1), ..., p(a,1)]`.
pub fn partition_length_poly(a: usize) -> Vec<BigInt> {
    if a == 0 {
        return vec![BigInt::one()];
    }
    let t = partition_parts_table(a);
    (0..a).map(|j| t[a][a - j].clone()).collect()
}

/// Explicit list of the partitions of m (each weakly decreasing).
/// Exponential; used as the brute-force oracle for the recurrences.
pub fn enumerate_partitions(m: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    if m == 0 {
        // rec pushed the empty partition already
        debug_assert_eq!(out.len(), 1);
    }
    out
}
