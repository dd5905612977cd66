//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines; any failure fails the corresponding test.

use std::collections::BTreeSet;
use std::process::Command;

use num_bigint::BigInt;
use num_traits::One;

use weilcensus_core::arith::partitions::{enumerate_partitions, partition_count};
use weilcensus_core::arith::{irreducible_over_q, primes};
use weilcensus_core::bounds::{
    circle_product_search, disc_leading_coeff, expected_leading_coeff, fekete_diameter,
    hardy_ramanujan_scan, orbit_bound_grid_check, sublevel_report, Real, UnitCirclePoints,
};
use weilcensus_core::census::{
    brute_force_curve_census, density_report, isogeny_class_size_g1, Epsilon,
    DirectClassNumbers,
};
use weilcensus_core::orders::{
    build_r, build_r_plus, class_number_conductor_formula, class_number_form_count,
    index_bound_holds, quadratic_decompose, real_disc_bound_holds,
};
use weilcensus_core::weil::{build_f, classify_g1, TraceKind, WeilParams, YgFamily};
use weilcensus_core::{IntPolynomial, Wide};

fn verdict(n: u32, label: &str, pass: bool) {
    println!(
        "criterion {n:>2} ({label}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} ({label}) failed");
}

fn census_primes() -> Vec<u64> {
    primes::primes_up_to(47).into_iter().filter(|&p| p >= 5).collect()
}

#[test]
fn acceptance_01_census_equality() {
    let started = std::time::Instant::now();
    let src = DirectClassNumbers;
    let mut pass = true;
    for p in census_primes() {
        let curves = brute_force_curve_census(p, 2).unwrap();
        for cls in classify_g1(p).unwrap() {
            if cls.kind != TraceKind::Ordinary {
                continue;
            }
            let predicted = isogeny_class_size_g1(p, cls.trace, &src).unwrap();
            let observed = curves.per_trace.get(&cls.trace).copied().unwrap_or(0);
            if predicted != observed {
                eprintln!("p={p} a={}: class-number {predicted} != brute-force {observed}", cls.trace);
                pass = false;
            }
        }
    }
    let elapsed = started.elapsed();
    println!("  full sweep in {:.2}s", elapsed.as_secs_f64());
    pass &= elapsed.as_secs() < 300;
    verdict(1, "class-number census equals brute force, 5 <= p <= 47, under 5 min", pass);
}

#[test]
fn acceptance_02_trace_set_consistency() {
    let mut pass = true;
    for p in census_primes() {
        let predicted: BTreeSet<i64> = classify_g1(p).unwrap().iter().map(|c| c.trace).collect();
        let observed: BTreeSet<i64> = brute_force_curve_census(p, 2)
            .unwrap()
            .per_trace
            .keys()
            .copied()
            .collect();
        if predicted != observed {
            eprintln!("p={p}: predicted traces {predicted:?} != observed {observed:?}");
            pass = false;
        }
    }
    verdict(2, "predicted trace sets match the brute-force census", pass);
}

#[test]
fn acceptance_03_disc_leading_coefficient() {
    use rand::{Rng, SeedableRng};
    let mut pass = true;
    for g in 1usize..=3 {
        for p in [2u64, 3, 5, 101] {
            let family = YgFamily::new(WeilParams::new(p, g).unwrap());
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC43 ^ (g as u64) << 8 ^ p);
            let expected = expected_leading_coeff(p, g);
            for _ in 0..10 {
                let prefix: Vec<BigInt> = family
                    .prefix_bounds()
                    .iter()
                    .map(|b| {
                        let bi = i64::try_from(b.clone()).unwrap();
                        BigInt::from(rng.gen_range(-bi..=bi))
                    })
                    .collect();
                let got = disc_leading_coeff(p, g, &prefix).unwrap();
                if got != expected {
                    eprintln!("p={p} g={g} prefix={prefix:?}: {got} != {expected}");
                    pass = false;
                }
            }
        }
    }
    verdict(3, "interpolated disc leading coefficient = g^2g p^(g(g-1))", pass);
}

#[test]
fn acceptance_04_index_bound() {
    let mut pass = true;
    // every simple member of Y_2(101) and Y_3(5)
    for (p, g) in [(101u64, 2usize), (5, 3)] {
        let family = YgFamily::new(WeilParams::new(p, g).unwrap());
        for a in family.iter() {
            let f = build_f(family.params(), &a).unwrap();
            if !irreducible_over_q(&f).unwrap() {
                continue; // R is defined over the field Q(pi) only
            }
            let order = build_r(&f, p).unwrap();
            if !index_bound_holds(&order) {
                eprintln!("index bound fails at p={p}, g={g}, a={a:?}");
                pass = false;
            }
        }
    }
    // the equality instance: index exactly p^(g(g-1)/2) = 3
    let order = build_r(&IntPolynomial::from_ints(&[9, 0, 1, 0, 1]), 3).unwrap();
    if order.index_over_zpi != BigInt::from(3) {
        eprintln!("equality instance index = {}, expected 3", order.index_over_zpi);
        pass = false;
    }
    verdict(4, "index bound over Y_2^sim(101) and Y_3(5), equality at x^4+x^2+9", pass);
}

#[test]
fn acceptance_05_real_subring_disc_bound() {
    let mut pass = true;
    for (p, g) in [(101u64, 2usize), (5, 3)] {
        let family = YgFamily::new(WeilParams::new(p, g).unwrap());
        for a in family.iter() {
            let f = build_f(family.params(), &a).unwrap();
            let rplus = build_r_plus(&f, p).unwrap();
            if !real_disc_bound_holds(&rplus, p) {
                eprintln!("real disc bound fails at p={p}, g={g}, a={a:?}");
                pass = false;
            }
        }
    }
    verdict(5, "disc(R+)^2 <= (16p)^(g(g-1)) over Y_2(101) and Y_3(5)", pass);
}

#[test]
fn acceptance_06_class_number_equivalence() {
    let started = std::time::Instant::now();
    let mut pass = true;
    let mut checked = 0u64;
    for m in 3..=100_000i64 {
        let d = -m;
        if !matches!(d.rem_euclid(4), 0 | 1) {
            continue;
        }
        let (d_k, c) = quadratic_decompose(d).unwrap();
        let forms = class_number_form_count(d).unwrap();
        let formula = class_number_conductor_formula(d_k, c).unwrap();
        if forms != formula {
            eprintln!("D={d}: form count {forms} != conductor formula {formula}");
            pass = false;
        }
        checked += 1;
    }
    let elapsed = started.elapsed();
    println!("  {checked} discriminants in {:.1}s", elapsed.as_secs_f64());
    pass &= elapsed.as_secs() < 120;
    verdict(6, "h(D) by forms = h(D) by conductor formula, |D| <= 1e5, under 2 min", pass);
}

#[test]
fn acceptance_07_circle_pair_products() {
    let mut pass = true;
    for m in 2usize..=12 {
        let bound = (m as f64).powf(m as f64 / 2.0);
        // 10^4 seeded random configurations never exceed the bound
        for trial in 0..10_000u64 {
            let seed = 0x31C ^ (m as u64) << 40 ^ trial;
            let pts = UnitCirclePoints::<Wide>::random(m, seed).unwrap();
            let v = pts.pair_product().approx();
            if v > bound * (1.0 + 1e-12) {
                eprintln!("m={m} trial={trial}: product {v} exceeds bound {bound}");
                pass = false;
            }
        }
        // equidistributed points achieve the bound to 1e-9 relative
        let roots = UnitCirclePoints::<Wide>::roots_of_unity(m)
            .unwrap()
            .pair_product()
            .approx();
        if (roots - bound).abs() / bound >= 1e-9 {
            eprintln!("m={m}: roots-of-unity product {roots} vs bound {bound}");
            pass = false;
        }
        // the ascent search also lands there
        let search = circle_product_search::<Wide>(m, 3, 0).unwrap().product.approx();
        if (search - bound).abs() / bound >= 1e-6 {
            eprintln!("m={m}: search product {search} vs bound {bound}");
            pass = false;
        }
    }
    verdict(7, "pairwise circle products bounded by m^(m/2), equality at roots of unity", pass);
}

#[test]
fn acceptance_08_orbit_bound_grid() {
    let out = orbit_bound_grid_check(31, 6, 6);
    println!(
        "  grid: {} hypothesis checks, {} out-of-hypothesis, {} n=1 checks",
        out.checked, out.out_of_hypothesis, out.checked_n1
    );
    for v in &out.violations {
        eprintln!("violation at ell={} n={} delta={}", v.ell, v.n, v.delta);
    }
    verdict(8, "orbit bound grid (ell<=31, n<=6, delta<=6) has no violations", out.violations.is_empty());
}

#[test]
fn acceptance_09_partition_machinery() {
    let mut pass = true;
    for m in 0..=40usize {
        if partition_count(m) != BigInt::from(enumerate_partitions(m).len()) {
            eprintln!("p({m}) mismatch");
            pass = false;
        }
    }
    let scan = hardy_ramanujan_scan(300, (3, 1)).unwrap();
    pass &= scan.m_constant.is_finite() && scan.m_constant > 0.0;
    pass &= scan.n_constant.is_finite() && scan.n_constant > 0.0;
    pass &= scan.m_tail_monotone && scan.n_tail_monotone;
    println!(
        "  M = {:.6} at m={}, N = {:.6} at m={}",
        scan.m_constant, scan.m_argmax, scan.n_constant, scan.n_argmax
    );
    verdict(9, "partition counts match enumeration to 40; growth scans finite with decreasing tails", pass);
}

#[test]
fn acceptance_10_fekete_diameters() {
    let mut pass = true;
    let mut prev = f64::INFINITY;
    let mut d40 = 0.0;
    for n in 2..=40usize {
        let c = fekete_diameter(n).unwrap();
        if n == 2 {
            pass &= (c.diameter - 1.0).abs() < 1e-9;
        }
        if n == 3 {
            pass &= (c.diameter - 0.25f64.powf(1.0 / 3.0)).abs() < 1e-9;
        }
        if c.diameter > prev + 1e-12 {
            eprintln!("d_{n} = {} increased over {prev}", c.diameter);
            pass = false;
        }
        prev = c.diameter;
        d40 = c.diameter;
    }
    println!("  d_40 = {d40:.9}");
    pass &= d40 > 0.25 && d40 < 0.33;
    verdict(10, "d_2 = 1, d_3 = (1/4)^(1/3), d_n nonincreasing, d_40 in (0.25, 0.33)", pass);
}

#[test]
fn acceptance_11_sublevel_analytic_case() {
    let (g, p) = (10usize, 2u64);
    let eps = Epsilon::new(1, 4).unwrap();
    let f = IntPolynomial::monomial(BigInt::one(), 2 * g);
    let r = sublevel_report(&f, p, g, eps, 10_000).unwrap();
    let closed_form = 2.0 * (p as f64).powf(g as f64 * (1.0 - 0.25) / 2.0);
    let pass = (r.full_measure.estimate - closed_form).abs() <= 2.0 * r.full_measure.grid_cell;
    println!(
        "  measured {:.6} vs closed form {closed_form:.6} (cell {:.3e})",
        r.full_measure.estimate, r.full_measure.grid_cell
    );
    println!(
        "  window-restricted measure {:.6} vs window bound {:.6} (report only: {})",
        r.window_measure.estimate,
        r.window_bound,
        if r.window_within_bound { "within" } else { "exceeds" }
    );
    verdict(11, "analytic sublevel case matches 2 p^(g(1-eps)/2) within 2 grid cells", pass);
}

#[test]
fn acceptance_12_density_at_101_2() {
    let e = Epsilon::new(1, 2).unwrap();
    let r = density_report(101, 2, e, 2).unwrap();
    let mut pass = r.y_count == 2200;
    // hard asserts: inclusions only
    pass &= r.poly_disc_sim_count <= r.poly_disc_count;
    pass &= r.poly_disc_count <= r.y_count;
    pass &= r.poly_disc_sim_count <= r.y_sim_count;
    pass &= r.order_disc_sim_count <= r.y_sim_count;
    // eps-monotonicity across the archived runs
    let lo = density_report(101, 2, Epsilon::new(1, 4).unwrap(), 2).unwrap();
    let hi = density_report(101, 2, Epsilon::new(1, 1).unwrap(), 2).unwrap();
    pass &= lo.poly_disc_count <= r.poly_disc_count && r.poly_disc_count <= hi.poly_disc_count;
    println!(
        "  |Y_2| = {}, |Y_2^sim| = {}, |S| = {}, |S^sim| = {}, |T^sim| = {} (archived)",
        r.y_count, r.y_sim_count, r.poly_disc_count, r.poly_disc_sim_count, r.order_disc_sim_count
    );
    println!(
        "  S density {}/{} vs the 1/5 proof threshold (report only)",
        r.poly_disc_count, r.y_count
    );
    verdict(12, "density machinery at (101, 2, 1/2): |Y_2| = 2200 exact, inclusions, monotone in eps", pass);
}

/// Report-only: the simple fraction |Y_2^sim| / |Y_2| across increasing p,
/// in the direction of the all-members-simple limit. No hard threshold.
#[test]
fn directional_sim_density_report() {
    println!("directional report: |Y_2^sim| / |Y_2| for growing p");
    for p in [11u64, 31, 101] {
        let family = YgFamily::new(WeilParams::new(p, 2).unwrap());
        let total = family.len().unwrap();
        let simple = family
            .iter()
            .filter(|a| {
                let f = build_f(family.params(), a).unwrap();
                irreducible_over_q(&f).unwrap()
            })
            .count() as u64;
        println!(
            "  p={p:>3}: {simple}/{total} = {:.6}",
            simple as f64 / total as f64
        );
    }
}

#[test]
fn acceptance_13_report_determinism() {
    let bin = env!("CARGO_BIN_EXE_weilcensus");
    let dir = std::env::temp_dir().join(format!("weilcensus-acc13-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let runs: Vec<(&str, Vec<String>)> = vec![
        ("census", vec!["census".into(), "--p".into(), "13".into()]),
        (
            "weil-enum",
            vec!["weil-enum".into(), "--p".into(), "101".into(), "--g".into(), "2".into()],
        ),
        (
            "density",
            vec![
                "density".into(), "--p".into(), "5".into(), "--g".into(), "2".into(),
                "--eps".into(), "1/2".into(),
            ],
        ),
        (
            "pair-product",
            vec![
                "bounds-check".into(), "--check".into(), "pair-product".into(),
                "--mmax".into(), "6".into(), "--trials".into(), "500".into(),
                "--seed".into(), "7".into(),
            ],
        ),
    ];
    let mut pass = true;
    for (name, args) in &runs {
        let mut outputs = Vec::new();
        for workers in [1u32, 2, 8] {
            let path = dir.join(format!("{name}-w{workers}.json"));
            let status = Command::new(bin)
                .args(args)
                .arg("--workers")
                .arg(workers.to_string())
                .arg("--output")
                .arg(&path)
                .output()
                .expect("binary runs");
            assert!(status.status.success(), "{name} failed: {:?}", status);
            outputs.push(std::fs::read(&path).unwrap());
        }
        if !(outputs[0] == outputs[1] && outputs[1] == outputs[2]) {
            eprintln!("{name}: reports differ across worker counts");
            pass = false;
        }
    }
    std::fs::remove_dir_all(&dir).ok();
    verdict(13, "reports byte-identical across worker counts 1, 2, 8", pass);
}
