//! The g = 1 isogeny-class census: class-number sums over the orders
//! between Z[pi] and the maximal order versus brute-force enumeration of
//! curves over F_p, plus exact density statistics of the discriminant
//! sublevel sets for g >= 2.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::arith::{self, primes};
use crate::orders;
use crate::sweep;
use crate::weil::{self, CoefficientVector, TraceKind, WeilParams, YgFamily};
use crate::{Error, Result};

/// Provider of imaginary quadratic class numbers h(D). The CLI backs this
/// with a persistent verified cache; the default recomputes on demand.
pub trait ClassNumberSource: Sync {
    fn class_number(&self, d: i64) -> Result<u64>;
}

/// Direct computation, both routes cross-checked on every call.
pub struct DirectClassNumbers;

impl ClassNumberSource for DirectClassNumbers {
    fn class_number(&self, d: i64) -> Result<u64> {
        verified_class_number(d)
    }
}

/// Form count and conductor formula, asserted equal.
pub fn verified_class_number(d: i64) -> Result<u64> {
    let (d_k, c) = orders::quadratic_decompose(d)?;
    let by_forms = orders::class_number_form_count(d)?;
    let by_formula = orders::class_number_conductor_formula(d_k, c)?;
    if by_forms != by_formula {
        return Err(Error::Internal(format!(
            "class number mismatch at D={d}: forms {by_forms}, formula {by_formula}"
        )));
    }
    Ok(by_forms)
}

/// |Isog(pi)| for an ordinary g = 1 trace: the sum of h(B) over the orders
/// Z[pi] <= B <= O_E, i.e. over conductor divisors. Equality with the
/// isomorphism-class count holds because quadratic orders are Bass.
pub fn isogeny_class_size_g1(p: u64, a: i64, src: &dyn ClassNumberSource) -> Result<u64> {
    if !primes::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let d_pi = a * a - 4 * p as i64;
    if d_pi >= 0 || primes::gcd_i64(a, p as i64) != 1 {
        return Err(Error::BadTrace { p, a });
    }
    let (d_k, c) = orders::quadratic_decompose(d_pi)?;
    let mut total = 0u64;
    for c1 in 1..=c {
        if c % c1 == 0 {
            total += src.class_number(c1 * c1 * d_k)?;
        }
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// Brute-force curve census

/// Isomorphism classes of elliptic curves over F_p (p >= 5), grouped by
/// trace of Frobenius.
///
/// Curves are short Weierstrass pairs (A, B) with 4A^3 + 27B^2 != 0; the
/// F_p-isomorphism relation is (A, B) ~ (u^4 A, u^6 B). Classes are counted
/// at their lexicographically smallest representative, so the sweep over A
/// can be partitioned freely without changing the result. Point counts come
/// from the quadratic character, never from a formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveCensus {
    pub p: u64,
    /// trace -> number of isomorphism classes
    pub per_trace: BTreeMap<i64, u64>,
    pub total_classes: u64,
    /// sum of orbit sizes; must equal p^2 - p
    pub curve_equations: u64,
}

pub fn brute_force_curve_census(p: u64, workers: usize) -> Result<CurveCensus> {
    if !primes::is_prime(p) || p < 5 {
        return Err(Error::UnsupportedPrime(p));
    }
    let pi = p as usize;

    // quadratic character table: chi[0] = 0, chi[v] = +-1
    let mut chi = vec![-1i8; pi];
    chi[0] = 0;
    for x in 1..p {
        chi[((x * x) % p) as usize] = 1;
    }
    let chi = &chi;

    let fourth: Vec<u64> = (1..p).map(|u| primes::pow_mod(u, 4, p)).collect();
    let sixth: Vec<u64> = (1..p).map(|u| primes::pow_mod(u, 6, p)).collect();
    let fourth = &fourth;
    let sixth = &sixth;

    // one record per canonical representative: (trace, orbit size)
    let records: Vec<(i64, u64)> = sweep::partitioned(pi, workers, |range| {
        let mut out = Vec::new();
        for a in range.map(|v| v as u64) {
            for b in 0..p {
                // nonsingular?
                let disc_term =
                    (4 * primes::pow_mod(a, 3, p) + 27 * primes::mul_mod(b, b, p)) % p;
                if disc_term == 0 {
                    continue;
                }
                // canonical = lexicographically smallest in the orbit
                let mut canonical = true;
                let mut stab = 0u64;
                for i in 0..(pi - 1) {
                    let a2 = primes::mul_mod(fourth[i], a, p);
                    let b2 = primes::mul_mod(sixth[i], b, p);
                    if (a2, b2) < (a, b) {
                        canonical = false;
                        break;
                    }
                    if (a2, b2) == (a, b) {
                        stab += 1;
                    }
                }
                if !canonical {
                    continue;
                }
                // trace = -sum_x chi(x^3 + A x + B)
                let mut sum: i64 = 0;
                for x in 0..p {
                    let v = (primes::pow_mod(x, 3, p) + primes::mul_mod(a, x, p) + b) % p;
                    sum += chi[v as usize] as i64;
                }
                let trace = -sum;
                assert!(
                    trace * trace <= 4 * p as i64,
                    "Hasse bound violated at ({a},{b})"
                );
                out.push((trace, (p - 1) / stab));
            }
        }
        out
    });

    let mut per_trace = BTreeMap::new();
    let mut equations = 0u64;
    for (trace, orbit) in &records {
        *per_trace.entry(*trace).or_insert(0u64) += 1;
        equations += orbit;
    }
    if equations != p * p - p {
        return Err(Error::Internal(format!(
            "mass check failed at p={p}: {equations} != {}",
            p * p - p
        )));
    }
    Ok(CurveCensus {
        p,
        per_trace,
        total_classes: records.len() as u64,
        curve_equations: equations,
    })
}

// ---------------------------------------------------------------------------
// Census comparison

#[derive(Clone, Debug)]
pub struct IsogenyClassG1 {
    pub trace: i64,
    pub d_pi: i64,
    pub kind: TraceKind,
    /// Class-number side (ordinary classes only).
    pub size_classnumber: Option<u64>,
    pub size_bruteforce: u64,
    /// Some(equal?) for ordinary classes, None for supersingular.
    pub matches: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub p: u64,
    pub classes: Vec<IsogenyClassG1>,
    /// B(p, 1): all isomorphism classes of elliptic curves over F_p.
    pub total_isomorphism_classes: u64,
    /// m_p(1): number of isogeny classes.
    pub isogeny_class_count: u64,
    pub all_ordinary_match: bool,
    pub trace_sets_agree: bool,
}

/// Compare the class-number census against the brute-force census at every
/// trace of F_p (p >= 5).
pub fn census_compare(
    p: u64,
    workers: usize,
    src: &dyn ClassNumberSource,
) -> Result<CensusReport> {
    let curves = brute_force_curve_census(p, workers)?;
    let predicted = weil::classify_g1(p)?;

    let predicted_traces: Vec<i64> = predicted.iter().map(|c| c.trace).collect();
    let observed_traces: Vec<i64> = curves.per_trace.keys().copied().collect();
    let trace_sets_agree = predicted_traces == observed_traces;

    let mut classes = Vec::with_capacity(predicted.len());
    let mut all_match = true;
    for cls in &predicted {
        let brute = curves.per_trace.get(&cls.trace).copied().unwrap_or(0);
        let (size_cn, matches) = match cls.kind {
            TraceKind::Ordinary => {
                let s = isogeny_class_size_g1(p, cls.trace, src)?;
                let ok = s == brute;
                all_match &= ok;
                (Some(s), Some(ok))
            }
            TraceKind::Supersingular => (None, None),
        };
        classes.push(IsogenyClassG1 {
            trace: cls.trace,
            d_pi: cls.trace * cls.trace - 4 * p as i64,
            kind: cls.kind,
            size_classnumber: size_cn,
            size_bruteforce: brute,
            matches,
        });
    }
    Ok(CensusReport {
        p,
        classes,
        total_isomorphism_classes: curves.total_classes,
        isogeny_class_count: curves.per_trace.len() as u64,
        all_ordinary_match: all_match,
        trace_sets_agree,
    })
}

// ---------------------------------------------------------------------------
// Density statistics (g >= 2)

/// Rational epsilon u/v with v | 4, so all threshold comparisons stay in
/// integer exponents after raising to the v-th power.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Epsilon {
    pub num: u64,
    pub den: u64,
}

impl Epsilon {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || !matches!(den, 1 | 2 | 4) {
            return Err(Error::BadEpsilon);
        }
        Ok(Epsilon { num, den })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num = n.trim().parse().map_err(|_| Error::BadEpsilon)?;
        let den = d.trim().parse().map_err(|_| Error::BadEpsilon)?;
        Self::new(num, den)
    }
}

impl std::fmt::Display for Epsilon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// |x|^v >= g^(2gv) * p^e with e possibly negative: compared by moving the
/// negative power across, keeping everything integral.
fn clears_threshold(x: &BigInt, v: u64, g: usize, p: u64, e: i64) -> bool {
    let lhs = x.abs().pow(v as u32);
    let gpow = BigInt::from(g as u64).pow((2 * g as u64 * v) as u32);
    if e >= 0 {
        lhs >= gpow * BigInt::from(p).pow(e as u32)
    } else {
        lhs * BigInt::from(p).pow((-e) as u32) >= gpow
    }
}

/// Does |disc(F(a))| >= g^2g * p^(2g^2 - g - g^2 eps)?
pub fn in_large_poly_disc_set(
    disc: &BigInt,
    p: u64,
    g: usize,
    eps: Epsilon,
) -> bool {
    let gg = g as i64;
    let e = (2 * gg * gg - gg) * eps.den as i64 - gg * gg * eps.num as i64;
    clears_threshold(disc, eps.den, g, p, e)
}

/// Does |disc(R_a)| >= g^2g * p^(g^2 (1 - eps))?
pub fn in_large_order_disc_set(disc: &BigInt, p: u64, g: usize, eps: Epsilon) -> bool {
    let gg = g as i64;
    let e = gg * gg * (eps.den as i64 - eps.num as i64);
    clears_threshold(disc, eps.den, g, p, e)
}

/// Exact counts over Y_g: members, simple members, and how many clear the
/// polynomial-discriminant and order-discriminant thresholds at eps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub p: u64,
    pub g: usize,
    pub eps: Epsilon,
    pub y_count: u64,
    pub y_sim_count: u64,
    /// |{a in Y_g : |disc F(a)| clears the threshold}|
    pub poly_disc_count: u64,
    /// same, intersected with the simple members
    pub poly_disc_sim_count: u64,
    /// |{a in Y_g^sim : |disc R_a| clears the threshold}|
    pub order_disc_sim_count: u64,
    /// min/median/max of |disc R_a| over simple members, as decimal strings
    pub order_disc_min: Option<BigInt>,
    pub order_disc_median: Option<BigInt>,
    pub order_disc_max: Option<BigInt>,
}

impl DensityReport {
    pub fn poly_disc_density(&self) -> (u64, u64) {
        (self.poly_disc_count, self.y_count)
    }

    pub fn order_disc_density(&self) -> (u64, u64) {
        (self.order_disc_sim_count, self.y_sim_count.max(1))
    }
}

struct MemberStats {
    simple: bool,
    in_poly_set: bool,
    order_disc: Option<BigInt>,
}

fn member_stats(
    params: &WeilParams,
    a: &CoefficientVector,
    eps: Epsilon,
) -> Result<MemberStats> {
    let f = weil::build_f(params, a)?;
    let disc_f = arith::discriminant(&f)?;
    let in_poly_set = in_large_poly_disc_set(&disc_f, params.p(), params.g(), eps);
    let simple = arith::irreducible_over_q(&f)?;
    let order_disc = if simple {
        Some(orders::build_r(&f, params.p())?.disc)
    } else {
        None
    };
    Ok(MemberStats {
        simple,
        in_poly_set,
        order_disc,
    })
}

pub fn density_report(
    p: u64,
    g: usize,
    eps: Epsilon,
    workers: usize,
) -> Result<DensityReport> {
    let params = WeilParams::new(p, g)?;
    let family = YgFamily::new(params);
    let total = family.len()?; // budget-checked
    let family = &family;

    let stats: Vec<MemberStats> = sweep::partitioned(total as usize, workers, |range| {
        range
            .map(|i| {
                let a = family.get(i as u64).expect("in range");
                member_stats(&params, &a, eps).expect("member stats")
            })
            .collect()
    });

    let mut y_sim = 0u64;
    let mut s_count = 0u64;
    let mut s_sim = 0u64;
    let mut t_sim = 0u64;
    let mut discs: Vec<BigInt> = Vec::new();
    for st in &stats {
        if st.in_poly_set {
            s_count += 1;
        }
        if st.simple {
            y_sim += 1;
            if st.in_poly_set {
                s_sim += 1;
            }
            let d = st.order_disc.as_ref().expect("simple has an order");
            if in_large_order_disc_set(d, p, g, eps) {
                t_sim += 1;
            }
            discs.push(d.abs());
        }
    }
    discs.sort();
    let (min, med, max) = if discs.is_empty() {
        (None, None, None)
    } else {
        (
            Some(discs[0].clone()),
            Some(discs[discs.len() / 2].clone()),
            Some(discs[discs.len() - 1].clone()),
        )
    };
    Ok(DensityReport {
        p,
        g,
        eps,
        y_count: total,
        y_sim_count: y_sim,
        poly_disc_count: s_count,
        poly_disc_sim_count: s_sim,
        order_disc_sim_count: t_sim,
        order_disc_min: min,
        order_disc_median: med,
        order_disc_max: max,
    })
}

// ---------------------------------------------------------------------------
// Lower-bound report

/// The concrete desk-scale instance of the class-number lower-bound sum.
#[derive(Clone, Debug)]
pub enum LowerBoundReport {
    /// g = 1: per-trace h(a^2 - 4p) over the ordinary traces of Y_1 and the sum.
    G1 {
        p: u64,
        terms: Vec<(i64, u64)>,
        sum: u64,
    },
    /// g in {2, 3}: discriminant statistics over Y_g^sim (no class numbers).
    DiscStats { report: DensityReport },
}

pub fn lower_bound_report(
    p: u64,
    g: usize,
    eps: Epsilon,
    workers: usize,
    src: &dyn ClassNumberSource,
) -> Result<LowerBoundReport> {
    match g {
        1 => {
            let params = WeilParams::new(p, 1)?;
            let family = YgFamily::new(params);
            let mut terms = Vec::new();
            let mut sum = 0u64;
            for a in family.iter() {
                let t = i64::try_from(a.as_slice()[0].clone())
                    .map_err(|_| Error::Internal("trace out of i64".into()))?;
                let h = src.class_number(t * t - 4 * p as i64)?;
                terms.push((t, h));
                sum += h;
            }
            Ok(LowerBoundReport::G1 { p, terms, sum })
        }
        2 | 3 => Ok(LowerBoundReport::DiscStats {
            report: density_report(p, g, eps, workers)?,
        }),
        _ => Err(Error::OutOfRange {
            name: "g",
            got: g,
            lo: 1,
            hi: 3,
        }),
    }
}
