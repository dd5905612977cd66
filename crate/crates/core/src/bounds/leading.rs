//! The leading coefficient of disc(F(a_1, ..., a_(g-1), X)) as a polynomial
//! in X: exact interpolation must reproduce g^2g * p^(g(g-1)).

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::{discriminant, interpolate};
use crate::weil::{build_f, CoefficientVector, WeilParams};
use crate::{Error, Result};

/// Interpolates disc(F(prefix, X)) through 2g + 2 integer nodes (one more
/// than the expected degree 2g, so a degree overrun is detectable), checks
/// the degree bound, and returns the coefficient of X^2g.
pub fn disc_leading_coeff(p: u64, g: usize, prefix: &[BigInt]) -> Result<BigInt> {
    let params = WeilParams::new(p, g)?;
    if prefix.len() + 1 != g {
        return Err(Error::LengthMismatch {
            got: prefix.len(),
            want: g - 1,
        });
    }
    let nodes = 2 * g + 2;
    let mut points = Vec::with_capacity(nodes);
    for k in 0..nodes {
        let x = BigInt::from(k as i64);
        let mut a = prefix.to_vec();
        a.push(x.clone());
        let f = build_f(&params, &CoefficientVector::new(a))?;
        let d = discriminant(&f)?;
        points.push((
            BigRational::from_integer(x),
            BigRational::from_integer(d),
        ));
    }
    let poly = interpolate(&points);
    if poly.degree().map_or(false, |d| d > 2 * g) {
        return Err(Error::InterpolationDegree);
    }
    let lead = poly.coeff(2 * g);
    if !lead.is_integer() {
        return Err(Error::Internal("leading coefficient not integral".into()));
    }
    Ok(lead.to_integer())
}

/// The expected value g^2g * p^(g(g-1)).
pub fn expected_leading_coeff(p: u64, g: usize) -> BigInt {
    BigInt::from(g as u64).pow(2 * g as u32) * BigInt::from(p).pow((g * (g - 1)) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn leading_coeff_examples() {
        // g=1: disc = X^2 - 4p, leading coefficient 1
        assert_eq!(disc_leading_coeff(5, 1, &[]).unwrap(), BigInt::from(1));
        assert_eq!(disc_leading_coeff(2, 1, &[]).unwrap(), BigInt::from(1));
        // g=2, p=3, prefix (0): 2^4 * 3^2 = 144
        assert_eq!(
            disc_leading_coeff(3, 2, &[BigInt::zero()]).unwrap(),
            BigInt::from(144)
        );
        // g=3, p=2, prefix (0,0): 3^6 * 2^6 = 46656
        assert_eq!(
            disc_leading_coeff(2, 3, &[BigInt::zero(), BigInt::zero()]).unwrap(),
            BigInt::from(46_656)
        );
    }

    #[test]
    fn matches_expected_for_various_prefixes() {
        for (p, g, prefix) in [
            (3u64, 2usize, vec![1i64]),
            (3, 2, vec![-1]),
            (101, 2, vec![5]),
            (5, 3, vec![0, 1]),
            (2, 3, vec![1, -1]),
        ] {
            let pb: Vec<BigInt> = prefix.iter().map(|&v| BigInt::from(v)).collect();
            assert_eq!(
                disc_leading_coeff(p, g, &pb).unwrap(),
                expected_leading_coeff(p, g),
                "p={p} g={g} prefix={prefix:?}"
            );
        }
    }

    #[test]
    fn prefix_length_checked() {
        assert!(matches!(
            disc_leading_coeff(3, 2, &[]),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
