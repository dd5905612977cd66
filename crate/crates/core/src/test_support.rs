//! Shared oracles for unit tests: numeric root finding and naive
//! determinants, kept independent of the production code paths they check.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::arith::{Matrix, Polynomial};

/// All complex roots of an integer polynomial by Durand-Kerner iteration.
pub fn complex_roots(f: &Polynomial<BigInt>) -> Vec<Complex64> {
    let n = f.degree().expect("nonzero polynomial");
    if n == 0 {
        return Vec::new();
    }
    let cs: Vec<Complex64> = f
        .coeffs()
        .iter()
        .map(|c| Complex64::new(c.to_f64().expect("coefficient fits f64"), 0.0))
        .collect();
    let lead = cs[n];
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in cs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    // start on a non-real spiral
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| Complex64::new(0.4, 0.9).powu(k as u32 + 1))
        .collect();
    for _ in 0..500 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let mut denom = lead;
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-13 {
            break;
        }
    }
    roots
}

/// Determinant by cofactor expansion; exponential, for small matrices only.
pub fn naive_det(m: &Matrix<BigInt>) -> BigInt {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut det = BigInt::from(0);
    for j in 0..n {
        if m.get(0, j) == &BigInt::from(0) {
            continue;
        }
        let minor_data: Vec<BigInt> = (1..n)
            .flat_map(|r| (0..n).filter(|&c| c != j).map(move |c| (r, c)))
            .map(|(r, c)| m.get(r, c).clone())
            .collect();
        let minor = Matrix::from_vec(n - 1, n - 1, minor_data);
        let term = m.get(0, j) * naive_det(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}
