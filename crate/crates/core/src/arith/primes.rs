//! Primality, prime enumeration and quadratic-character utilities.

/// Deterministic Miller-Rabin for u64 (the 12-base set is exact far beyond
/// the 64-bit range).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// All primes up to and including `n`, by sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut is_comp = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if !is_comp[p] {
            out.push(p as u64);
            let mut q = p * p;
            while q <= n {
                is_comp[q] = true;
                q += p;
            }
        }
    }
    out
}

/// Kronecker symbol (d | ell) for a prime ell.
///
/// For odd ell this is the Legendre symbol computed by Euler's criterion;
/// for ell = 2 it is 0 for even d and +-1 by d mod 8.
pub fn kronecker_prime(d: i64, ell: u64) -> i32 {
    debug_assert!(is_prime(ell));
    if ell == 2 {
        return match d.rem_euclid(8) {
            0 | 2 | 4 | 6 => 0,
            1 | 7 => 1,
            _ => -1,
        };
    }
    let dm = d.rem_euclid(ell as i64) as u64;
    if dm == 0 {
        return 0;
    }
    let e = pow_mod(dm, (ell - 1) / 2, ell);
    if e == 1 {
        1
    } else {
        -1
    }
}

/// gcd for machine integers.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Largest t >= 0 with t*t <= n.
pub fn isqrt_u64(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64 + 1;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_carmichael() {
        let known: Vec<u64> = primes_up_to(200);
        for n in 0..=200u64 {
            assert_eq!(is_prime(n), known.contains(&n), "n={n}");
        }
        // Carmichael numbers are composite
        for n in [561u64, 1105, 1729, 2465, 2821, 6601] {
            assert!(!is_prime(n));
        }
        assert!(is_prime(2u64.pow(31) - 1));
        assert!(!is_prime(2u64.pow(32) + 1));
    }

    #[test]
    fn kronecker_matches_square_counting() {
        for &ell in &[3u64, 5, 7, 11, 13] {
            let squares: std::collections::HashSet<u64> =
                (1..ell).map(|x| x * x % ell).collect();
            for d in -30i64..30 {
                let expect = if d.rem_euclid(ell as i64) == 0 {
                    0
                } else if squares.contains(&(d.rem_euclid(ell as i64) as u64)) {
                    1
                } else {
                    -1
                };
                assert_eq!(kronecker_prime(d, ell), expect, "d={d} ell={ell}");
            }
        }
        // (d | 2): 0 even, +1 for 1,7 mod 8, -1 for 3,5 mod 8
        assert_eq!(kronecker_prime(-4, 2), 0);
        assert_eq!(kronecker_prime(17, 2), 1);
        assert_eq!(kronecker_prime(-3, 2), -1); // -3 = 5 mod 8
        assert_eq!(kronecker_prime(-9, 2), 1); // -9 = 7 mod 8
    }

    #[test]
    fn isqrt_exact() {
        for n in 0..10_000u64 {
            let r = isqrt_u64(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
    }
}
