//! Maximal pairwise-distance products on [0, 1]: coordinate-wise Newton
//! ascent from Chebyshev-Lobatto nodes. The normalized maxima
//! d_n = (max prod)^(2/(n(n-1))) decrease toward the capacity 1/4.

use super::Real;
use crate::{Error, Result, Wide};

#[derive(Clone, Debug)]
pub struct FeketeConfiguration {
    pub n: usize,
    /// Optimal points, sorted ascending in [0, 1].
    pub points: Vec<f64>,
    /// ln prod_(i<j) (x_j - x_i) at the optimum.
    pub log_product: f64,
    /// d_n = exp(2 log_product / (n(n-1))).
    pub diameter: f64,
    pub sweeps: usize,
}

pub fn fekete_diameter(n: usize) -> Result<FeketeConfiguration> {
    if !(2..=60).contains(&n) {
        return Err(Error::OutOfRange {
            name: "n",
            got: n,
            lo: 2,
            hi: 60,
        });
    }
    let (points, log_product, sweeps) = optimize::<Wide>(n);
    let nn = (n * (n - 1)) as f64;
    Ok(FeketeConfiguration {
        n,
        points: points.iter().map(|x| x.approx()).collect(),
        log_product: log_product.approx(),
        diameter: (2.0 * log_product.approx() / nn).exp(),
        sweeps,
    })
}

fn optimize<F: Real>(n: usize) -> (Vec<F>, F, usize) {
    // Chebyshev-Lobatto nodes mapped to [0, 1]; endpoints included
    let mut x: Vec<F> = (0..n)
        .map(|k| {
            let theta = F::pi() * F::of(k as f64) / F::of((n - 1) as f64);
            (F::one() - theta.cos()) / F::of(2.0)
        })
        .collect();

    let zero = F::zero();
    let one = F::one();
    let half = F::of(0.5);
    let tol = F::of(1e-13);
    let mut sweeps = 0;
    for _ in 0..20_000 {
        sweeps += 1;
        let mut movement = F::zero();
        for k in 0..n {
            // 1D Newton on L(x_k) = sum_(j!=k) ln |x_k - x_j|
            let mut d1 = F::zero();
            let mut d2 = F::zero();
            for j in 0..n {
                if j != k {
                    let diff = x[k] - x[j];
                    let inv = one / diff;
                    d1 = d1 + inv;
                    d2 = d2 + inv * inv;
                }
            }
            let mut step = d1 / d2; // concave: x += L'/(-L'') = d1/d2
            // stay strictly inside the neighbor cell
            let lo = if k > 0 { x[k - 1] } else { zero };
            let hi = if k + 1 < n { x[k + 1] } else { one };
            let mut trial = x[k] + step;
            let mut guard = 0;
            while (trial <= lo && k > 0) || (trial >= hi && k + 1 < n) {
                step = step * half;
                trial = x[k] + step;
                guard += 1;
                if guard > 200 {
                    trial = x[k];
                    break;
                }
            }
            let clamped = trial.max(zero).min(one);
            movement = movement.max((clamped - x[k]).abs());
            x[k] = clamped;
        }
        if movement < tol {
            break;
        }
    }
    let mut logp = F::zero();
    for i in 0..n {
        for j in i + 1..n {
            logp = logp + (x[j] - x[i]).abs().ln();
        }
    }
    (x, logp, sweeps)
}
