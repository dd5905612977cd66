//! Lebesgue measure of polynomial sublevel sets { x : |f(x)| <= T } by
//! adaptive sampling with sign-change refinement, plus a slope-based outer
//! enclosure.

use num_traits::Signed;

use super::Real;
use crate::census::Epsilon;
use crate::{Error, IntPolynomial, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasureEstimate {
    /// Bisection-refined measure estimate.
    pub estimate: f64,
    /// Outer bound: total length of cells that might meet the sublevel set,
    /// by a per-cell derivative bound.
    pub upper_enclosure: f64,
    pub grid_cell: f64,
}

/// Measure of { x in [lo, hi] : |f(x)| <= threshold } on a grid of at least
/// 10^4 cells.
pub fn sublevel_measure(
    f: &IntPolynomial,
    threshold: f64,
    lo: f64,
    hi: f64,
    grid: usize,
) -> Result<MeasureEstimate> {
    if grid < 10_000 {
        return Err(Error::OutOfRange {
            name: "grid",
            got: grid,
            lo: 10_000,
            hi: usize::MAX,
        });
    }
    if !(lo < hi) || !threshold.is_finite() {
        return Err(Error::EmptyInterval);
    }
    Ok(measure_kernel::<crate::Wide>(f, threshold, lo, hi, grid))
}

fn measure_kernel<F: Real>(
    f: &IntPolynomial,
    threshold: f64,
    lo: f64,
    hi: f64,
    grid: usize,
) -> MeasureEstimate {
    let coeffs: Vec<F> = f
        .coeffs()
        .iter()
        .map(|c| F::of(crate::arith::bigint_to_f64(c)))
        .collect();
    let eval_abs = |x: F| -> F {
        let mut acc = F::zero();
        for c in coeffs.iter().rev() {
            acc = acc * x + *c;
        }
        acc.abs()
    };
    let t = F::of(threshold);
    let lo = F::of(lo);
    let hi = F::of(hi);
    let h = (hi - lo) / F::of(grid as f64);

    // derivative magnitude bound on [lo, hi]
    let cmax = lo.abs().max(hi.abs());
    let mut slope = F::zero();
    for (i, c) in coeffs.iter().enumerate().skip(1) {
        slope = slope + F::of(i as f64) * c.abs() * cmax.powi(i as i32 - 1);
    }

    // measure of the below-threshold part of [a, b], endpoints already
    // classified; refine a single crossing by bisection
    let crossing = |mut a: F, mut b: F| -> F {
        // sign(a) != sign(b) as below/above threshold
        for _ in 0..80 {
            let mid = (a + b) / F::of(2.0);
            if eval_abs(mid) <= t {
                a = mid;
            } else {
                b = mid;
            }
        }
        (a + b) / F::of(2.0)
    };

    let mut measure = F::zero();
    let mut enclosure = F::zero();
    let mut x0 = lo;
    let mut below0 = eval_abs(x0) <= t;
    for k in 1..=grid {
        let x1 = if k == grid {
            hi
        } else {
            lo + h * F::of(k as f64)
        };
        let below1 = eval_abs(x1) <= t;
        let mid = (x0 + x1) / F::of(2.0);
        let below_mid = eval_abs(mid) <= t;

        // refined estimate over this cell
        let contribution = match (below0, below_mid, below1) {
            (true, true, true) => x1 - x0,
            (false, false, false) => F::zero(),
            (true, true, false) => crossing(mid, x1) - x0,
            (true, false, false) => crossing(x0, mid) - x0,
            (false, true, true) => x1 - crossing(mid, x0),
            (false, false, true) => x1 - crossing(x1, mid),
            (true, false, true) => (crossing(x0, mid) - x0) + (x1 - crossing(x1, mid)),
            (false, true, false) => crossing(mid, x1) - crossing(mid, x0),
        };
        measure = measure + contribution.max(F::zero());

        // outer enclosure: cell may meet the set iff min |f| could be <= t
        let min_possible = eval_abs(mid) - slope * (x1 - x0) / F::of(2.0);
        if below0 || below1 || below_mid || min_possible <= t {
            enclosure = enclosure + (x1 - x0);
        }

        x0 = x1;
        below0 = below1;
    }

    MeasureEstimate {
        estimate: measure.approx(),
        upper_enclosure: enclosure.approx(),
        grid_cell: h.approx(),
    }
}

/// Window, threshold and both measured domains for the sublevel statement
/// at parameters (p, g, eps): the window [-2 p^(g/2)/g, 2 p^(g/2)/g] with
/// bound p^(g/2)/g, and a wide domain that provably contains the whole
/// sublevel set so the unconstrained measure is also reported.
#[derive(Clone, Debug)]
pub struct SublevelReport {
    pub p: u64,
    pub g: usize,
    pub eps: Epsilon,
    pub grid: usize,
    pub threshold: f64,
    pub window: (f64, f64),
    pub window_measure: MeasureEstimate,
    pub window_bound: f64,
    pub window_within_bound: bool,
    pub full_domain: (f64, f64),
    pub full_measure: MeasureEstimate,
}

pub fn sublevel_report(
    f: &IntPolynomial,
    p: u64,
    g: usize,
    eps: Epsilon,
    grid: usize,
) -> Result<SublevelReport> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::ConstantPolynomial);
    }
    let pf = p as f64;
    let gf = g as f64;
    let half_window = 2.0 * pf.powf(gf / 2.0) / gf;
    let threshold = pf.powf(gf * gf * (1.0 - eps.num as f64 / eps.den as f64));
    if !threshold.is_finite() || !half_window.is_finite() {
        return Err(Error::EmptyInterval);
    }
    let window_measure = sublevel_measure(f, threshold, -half_window, half_window, grid)?;
    // |x| >= S + 1 + T^(1/(n-1)) forces |f(x)| > T for monic f
    let coeff_sum: f64 = f
        .coeffs()
        .iter()
        .take(n)
        .map(|c| crate::arith::bigint_to_f64(&c.abs()))
        .sum();
    let radius = (coeff_sum + 1.0 + threshold.powf(1.0 / (n as f64 - 1.0))).max(half_window);
    let full_measure = sublevel_measure(f, threshold, -radius, radius, grid)?;
    let window_bound = pf.powf(gf / 2.0) / gf;
    Ok(SublevelReport {
        p,
        g,
        eps,
        grid,
        threshold,
        window: (-half_window, half_window),
        window_measure,
        window_bound,
        window_within_bound: window_measure.estimate <= window_bound,
        full_domain: (-radius, radius),
        full_measure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    fn x_pow(n: usize) -> IntPolynomial {
        IntPolynomial::monomial(BigInt::one(), n)
    }

    #[test]
    fn pure_power_matches_closed_form() {
        // |x^20| <= T on a wide domain: measure = 2 T^(1/20)
        let f = x_pow(20);
        let t = 2f64.powi(75);
        let radius = t.powf(1.0 / 20.0);
        let m = sublevel_measure(&f, t, -2.0 * radius, 2.0 * radius, 20_000).unwrap();
        let exact = 2.0 * radius;
        assert!(
            (m.estimate - exact).abs() <= 2.0 * m.grid_cell,
            "{} vs {exact} (cell {})",
            m.estimate,
            m.grid_cell
        );
        assert!(m.upper_enclosure + 1e-9 >= m.estimate);
    }

    #[test]
    fn clipped_window_measures_whole_window() {
        // threshold so large the whole window is below it
        let f = x_pow(4);
        let m = sublevel_measure(&f, 1e6, -2.0, 2.0, 10_000).unwrap();
        assert!((m.estimate - 4.0).abs() < 1e-9);
    }

    #[test]
    fn empty_sublevel_set() {
        // |x^2 + 5| >= 5 > 1 everywhere
        let f = IntPolynomial::from_ints(&[5, 0, 1]);
        let m = sublevel_measure(&f, 1.0, -3.0, 3.0, 10_000).unwrap();
        assert_eq!(m.estimate, 0.0);
    }

    #[test]
    fn grid_minimum_enforced() {
        let f = x_pow(2);
        assert!(matches!(
            sublevel_measure(&f, 1.0, -1.0, 1.0, 100),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn interior_dip_is_found() {
        // f = x^2 - 4: sublevel |f| <= 3 is { 1 <= x^2 <= 7 }:
        // [-sqrt7, -1] and [1, sqrt7], measure 2(sqrt7 - 1)
        let f = IntPolynomial::from_ints(&[-4, 0, 1]);
        let m = sublevel_measure(&f, 3.0, -5.0, 5.0, 10_000).unwrap();
        let exact = 2.0 * (7f64.sqrt() - 1.0);
        assert!((m.estimate - exact).abs() <= 2.0 * m.grid_cell);
    }

    #[test]
    fn report_for_analytic_case() {
        let f = x_pow(20);
        let eps = Epsilon::new(1, 4).unwrap();
        let r = sublevel_report(&f, 2, 10, eps, 10_000).unwrap();
        // threshold 2^75, sublevel radius 2^3.75 > window end 6.4:
        // window measure = full window length 12.8
        assert!((r.window_measure.estimate - 12.8).abs() < 1e-6);
        // full measure = 2 * 2^3.75
        let exact = 2.0 * 2f64.powf(3.75);
        assert!((r.full_measure.estimate - exact).abs() <= 2.0 * r.full_measure.grid_cell);
        assert_eq!(r.threshold, 2f64.powi(75));
    }

    #[test]
    fn wide_and_f64_kernels_agree() {
        let f = IntPolynomial::from_ints(&[-4, 0, 1]);
        let a = measure_kernel::<f64>(&f, 3.0, -5.0, 5.0, 10_000);
        let b = measure_kernel::<crate::Wide>(&f, 3.0, -5.0, 5.0, 10_000);
        assert!((a.estimate - b.estimate).abs() < 1e-9);
    }
}
