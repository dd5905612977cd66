//! Pairwise distance products of points on the unit circle: the product is
//! at most m^(m/2), with equality exactly at equidistributed configurations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Real;
use crate::{Error, Result};

/// m points on the unit circle, stored as angles in [0, 2 pi) so the
/// moduli are exactly 1 by construction.
#[derive(Clone, Debug)]
pub struct UnitCirclePoints<F> {
    angles: Vec<F>,
}

impl<F: Real> UnitCirclePoints<F> {
    pub fn new(angles: Vec<F>) -> Result<Self> {
        if angles.len() < 2 {
            return Err(Error::TooFewPoints);
        }
        Ok(UnitCirclePoints { angles })
    }

    pub fn m(&self) -> usize {
        self.angles.len()
    }

    pub fn angles(&self) -> &[F] {
        &self.angles
    }

    /// The m-th roots of unity.
    pub fn roots_of_unity(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::TooFewPoints);
        }
        let tau = F::pi() + F::pi();
        Ok(UnitCirclePoints {
            angles: (0..m)
                .map(|k| tau * F::of(k as f64) / F::of(m as f64))
                .collect(),
        })
    }

    /// Seeded uniform configuration (angles drawn as f64, then widened).
    pub fn random(m: usize, seed: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::TooFewPoints);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tau = F::pi() + F::pi();
        Ok(UnitCirclePoints {
            angles: (0..m)
                .map(|_| tau * F::of(rng.gen::<f64>()))
                .collect(),
        })
    }

    /// prod_(i<j) |e^(i a_i) - e^(i a_j)| = prod 2 |sin((a_i - a_j)/2)|.
    pub fn pair_product(&self) -> F {
        self.log_pair_product().exp()
    }

    pub fn log_pair_product(&self) -> F {
        let two = F::one() + F::one();
        let mut acc = F::zero();
        for i in 0..self.angles.len() {
            for j in i + 1..self.angles.len() {
                let half = (self.angles[i] - self.angles[j]) / two;
                acc = acc + (two * half.sin().abs()).ln();
            }
        }
        acc
    }
}

/// Best configuration found by multi-start gradient ascent on the
/// log-product. A converged run lands on an equidistributed configuration,
/// whose product is m^(m/2).
#[derive(Clone, Debug)]
pub struct CircleSearchResult<F> {
    pub points: UnitCirclePoints<F>,
    pub log_product: F,
    pub product: F,
    pub starts: usize,
}

pub fn circle_product_search<F: Real>(
    m: usize,
    starts: usize,
    seed: u64,
) -> Result<CircleSearchResult<F>> {
    if m < 2 {
        return Err(Error::TooFewPoints);
    }
    let mut best: Option<(F, Vec<F>)> = None;
    for s in 0..starts.max(1) {
        let start = UnitCirclePoints::<F>::random(m, seed ^ (s as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))?;
        let angles = ascend(start.angles);
        let val = UnitCirclePoints { angles: angles.clone() }.log_pair_product();
        if best.as_ref().map_or(true, |(b, _)| val > *b) {
            best = Some((val, angles));
        }
    }
    let (log_product, angles) = best.unwrap();
    Ok(CircleSearchResult {
        points: UnitCirclePoints { angles },
        log_product,
        product: log_product.exp(),
        starts: starts.max(1),
    })
}

/// Gradient ascent with backtracking on S(a) = sum log 2|sin((a_i-a_j)/2)|;
/// dS/da_k = (1/2) sum_(j != k) cot((a_k - a_j)/2).
fn ascend<F: Real>(mut angles: Vec<F>) -> Vec<F> {
    let m = angles.len();
    let two = F::one() + F::one();
    let objective = |a: &Vec<F>| -> F {
        let mut acc = F::zero();
        for i in 0..m {
            for j in i + 1..m {
                let half = (a[i] - a[j]) / two;
                acc = acc + (two * half.sin().abs()).ln();
            }
        }
        acc
    };
    let mut step = F::of(0.1);
    let mut value = objective(&angles);
    let min_step = F::of(1e-18);
    for _ in 0..2000 {
        let mut grad = vec![F::zero(); m];
        let mut gnorm = F::zero();
        for k in 0..m {
            let mut s = F::zero();
            for j in 0..m {
                if j != k {
                    let half = (angles[k] - angles[j]) / two;
                    s = s + half.cos() / half.sin() / two;
                }
            }
            grad[k] = s;
            gnorm = gnorm.max(s.abs());
        }
        if gnorm < F::of(1e-13) {
            break;
        }
        // backtracking line search
        let mut accepted = false;
        while step > min_step {
            let trial: Vec<F> = angles
                .iter()
                .zip(&grad)
                .map(|(&a, &g)| a + step * g)
                .collect();
            let tval = objective(&trial);
            if tval > value {
                angles = trial;
                value = tval;
                step = step * F::of(1.5);
                accepted = true;
                break;
            }
            step = step * F::of(0.5);
        }
        if !accepted {
            break;
        }
    }
    angles
}
