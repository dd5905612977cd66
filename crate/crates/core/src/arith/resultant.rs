//! Resultants and discriminants via Sylvester determinants.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Matrix, Polynomial};
use crate::{Error, Result};

/// Sylvester matrix of f and g: the first deg(g) rows carry shifted copies
/// of f's coefficients (descending), the next deg(f) rows carry g's.
pub fn sylvester_matrix(f: &Polynomial<BigInt>, g: &Polynomial<BigInt>) -> Result<Matrix<BigInt>> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let m = g.degree().ok_or(Error::ZeroPolynomial)?;
    let size = n + m;
    let mut mat = Matrix::zeros(size, size);
    for r in 0..m {
        for i in 0..=n {
            mat.set(r, r + i, f.coeff(n - i));
        }
    }
    for r in 0..n {
        for i in 0..=m {
            mat.set(m + r, r + i, g.coeff(m - i));
        }
    }
    Ok(mat)
}

/// Res(f, g) as the Sylvester determinant, evaluated by fraction-free
/// (Bareiss) elimination. With this convention
/// `Res(f, g) = lc(f)^deg(g) * prod g(alpha_i)` over the roots of f.
pub fn resultant(f: &Polynomial<BigInt>, g: &Polynomial<BigInt>) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let m = g.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Ok(f.lc().unwrap().pow(m as u32));
    }
    if m == 0 {
        return Ok(g.lc().unwrap().pow(n as u32));
    }
    sylvester_matrix(f, g)?.det_bareiss()
}

/// disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f). The division is always
/// exact. For monic f this is `prod_{i<j} (r_i - r_j)^2`.
///
/// Degree-1 polynomials have discriminant 1 (empty product).
pub fn discriminant(f: &Polynomial<BigInt>) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if n == 1 {
        return Ok(BigInt::from(1));
    }
    let res = resultant(f, &f.derivative())?;
    let lc = f.lc().unwrap();
    let (q, r) = num_integer::Integer::div_rem(&res, lc);
    if !r.is_zero() {
        return Err(Error::Internal(
            "lc(f) does not divide Res(f, f')".into(),
        ));
    }
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}
