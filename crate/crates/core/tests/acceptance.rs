//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N: PASS/FAIL` line with its measurements.
//!
//! Every tolerance below is pinned in code. All value checks are exact
//! rational or integer comparisons; floats appear only in reported trend
//! constants, never in a correctness decision.
//!
//! Known red: criterion 2 requires the amplifier to be within eps of 1 at
//! t = 1 on top of the damped-range bounds and the degree budget. The pinned
//! factor shapes cannot meet the t = 1 clause (the gap factor's normalizer
//! forces P(1) = P(0) / normalizer^decay, and the damped range needs the
//! normalizer large); the test states the criterion faithfully and reports
//! the honest failure. Nothing downstream evaluates the amplifier at t = 1.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use ptf_core::adversary::{run_adversary, weight_certificate, BlockPlan, CertStatus, ChainRecord};
use ptf_core::amplifier::{self, chebyshev_value};
use ptf_core::construct::{
    assemble_ball_ptf, assemble_cube_ptf, inner_eps, sublist_approx, verify_zero_iff_no_fire,
    DominanceChecker,
};
use ptf_core::dlist::{odd_max_bit, random_list, random_modified_list, Domain, DEFAULT_ENUM_CAP};
use ptf_core::poly::chebyshev;
use ptf_core::verify::{verify_eps, verify_sign};
use ptf_core::winnow::{fitted_constant, run_online_with, LearnerState};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact check of `T_d(1 + delta) <= (1 + sqrt(delta))^(2d)`.
///
/// The right side expands to `A + B sqrt(delta)` with rational `A, B >= 0`
/// by splitting the binomial expansion of `((1+delta) + 2 sqrt(delta))^d`
/// into even and odd powers; the comparison is then settled by squaring the
/// residual, keeping the whole check in exact arithmetic even when
/// `sqrt(delta)` is irrational.
fn cheb_upper_squared(d: u32, delta: &BigRational) -> bool {
    let one_plus = BigRational::one() + delta;
    let mut a = BigRational::zero();
    let mut b = BigRational::zero();
    for j in 0..=d {
        let coeff = BigRational::from_integer(
            binomial(BigInt::from(d), BigInt::from(j)) * BigInt::from(2).pow(j),
        );
        let mut term = coeff;
        for _ in 0..(d - j) {
            term *= &one_plus;
        }
        for _ in 0..(j / 2) {
            term *= delta;
        }
        if j % 2 == 0 {
            a += term;
        } else {
            b += term;
        }
    }
    let t = chebyshev_value(d, &one_plus);
    if t <= a {
        return true;
    }
    // t - a > 0: compare squares of (t - a) and b sqrt(delta)
    let resid = &t - &a;
    &resid * &resid <= &b * &b * delta
}

#[test]
fn criterion_1_chebyshev_suite() {
    let start = Instant::now();
    let mut checks = 0u64;
    for d in 0..=32u32 {
        for i in 1..=50i64 {
            let delta = rat(2 * i, 50); // 50 points spanning (0, 2]
            let x = BigRational::one() + &delta;
            let v = chebyshev_value(d, &x);
            let lower = BigRational::one() + int((d * d) as i64) * &delta;
            assert!(v >= lower, "growth bound fails at d={d} delta={delta}");
            assert!(
                cheb_upper_squared(d, &delta),
                "upper bound fails at d={d} delta={delta}"
            );
            checks += 2;
        }
        let w = chebyshev(d).into_poly().weight();
        let bound = BigRational::from_integer(BigInt::from(2).pow(2 * d));
        assert!(w <= bound, "weight bound fails at d={d}");
        checks += 1;
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 1: PASS - {} exact Chebyshev checks in {:.2?}",
        checks, elapsed
    );
    assert!(elapsed < Duration::from_secs(5), "runtime budget exceeded");
}

#[test]
fn criterion_2_amplifier_integer_grid_and_degree() {
    let start = Instant::now();
    let eps = rat(1, 100);
    let mut all_pass = true;
    let mut notes = Vec::new();
    for range in [9u32, 16, 25, 36] {
        let amp = amplifier::tuned(range, 2, &eps).expect("tuned amplifier builds");
        let grid = amplifier::integer_grid(range);
        let report = amplifier::validate(&amp, &grid);
        // degree <= 10 sqrt(range), checked as degree^2 <= 100 range
        let degree_ok = amp.degree() * amp.degree() <= 100 * range;
        let values_ok = report.passed;
        all_pass &= degree_ok && values_ok;
        let detail = match report.first_failure() {
            None => "all grid points pass".to_string(),
            Some(p) => format!(
                "first failing point t={} (|value-target| over bound by {})",
                p.t,
                (-p.margin.clone()).to_f64().unwrap_or(f64::NAN)
            ),
        };
        notes.push(format!(
            "  range={range}: degree {} (budget {}) values {} - {}",
            amp.degree(),
            (10.0 * (range as f64).sqrt()).floor() as u32,
            if values_ok { "pass" } else { "FAIL" },
            detail
        ));
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 2: {} - integer-grid value bounds and degree budget in {:.2?}",
        if all_pass { "PASS" } else { "FAIL" },
        elapsed
    );
    for n in &notes {
        println!("{n}");
    }
    assert!(elapsed < Duration::from_secs(30), "runtime budget exceeded");
    assert!(
        all_pass,
        "amplifier bounds do not all hold on the {{0,1}} + {{3..n}} grid"
    );
}

#[test]
fn criterion_3_inner_construction_random_lists() {
    let start = Instant::now();
    let eps = inner_eps();
    let mut max_dev = BigRational::zero();
    for seed in 0..100u64 {
        let n = 6 + 2 * (seed % 5) as u32; // 6, 8, 10, 12, 14
        let h = 1 + (seed % 10) as usize; // 1..=10
        let list = random_modified_list(n, h, seed);
        let dom = Domain::FullCube(n);
        let approx = sublist_approx(&list, &eps, &dom).expect("construction succeeds");

        let out = verify_eps(&approx.poly, &list, &dom, &eps, DEFAULT_ENUM_CAP).unwrap();
        assert!(out.passed, "seed {seed} (n={n} h={h}): {}", out.to_text());
        if let Some(d) = out.max_deviation {
            if d > max_dev {
                max_dev = d;
            }
        }

        let zf = verify_zero_iff_no_fire(&approx.poly, &list, &dom, DEFAULT_ENUM_CAP).unwrap();
        assert!(zf.passed, "seed {seed} (n={n} h={h}): {}", zf.to_text());
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 3: PASS - 100 instances within 1/100 pointwise, zero-iff-no-fire exact, max deviation {:.3e}, {:.2?}",
        max_dev.to_f64().unwrap_or(f64::NAN),
        elapsed
    );
    assert!(
        elapsed < Duration::from_secs(300),
        "runtime budget exceeded"
    );
}

#[test]
fn criterion_4_cube_assembly_and_weight_trend() {
    let start = Instant::now();
    let mut rows = Vec::new();
    for n in [8u32, 12] {
        for h in [2u32, 4] {
            let mut lists = vec![odd_max_bit(n)];
            lists.extend((0..25).map(|s| random_list(n, n as usize, 1000 + s)));
            for (li, list) in lists.iter().enumerate() {
                let ptf = assemble_cube_ptf(list, h).expect("assembly succeeds");
                let dom = Domain::FullCube(n);
                let out = verify_sign(ptf.poly.as_poly(), list, &dom, DEFAULT_ENUM_CAP).unwrap();
                assert!(out.passed, "n={n} h={h} list {li}: {}", out.to_text());

                let checker = DominanceChecker::new(&ptf);
                for mask in 0..1u64 << n {
                    assert!(
                        checker.check_mask(mask),
                        "dominance fails at n={n} h={h} list {li} mask {mask:b}"
                    );
                }
                rows.push((n, h, ptf.report.log2_weight));
            }
        }
    }
    // single fitted constant dominating log2-weight across all rows
    let basis = |n: u32, h: u32| n as f64 / h as f64 + (h as f64).sqrt() * (h as f64).log2();
    let c = rows
        .iter()
        .map(|&(n, h, w)| w / basis(n, h))
        .fold(0.0f64, f64::max);
    assert!(c.is_finite() && c > 0.0);
    for &(n, h, w) in &rows {
        assert!(w <= c * basis(n, h) + 1e-9);
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 4: PASS - {} assemblies sign-exact with dominance, fitted weight constant c={:.1}, {:.2?}",
        rows.len(),
        c,
        elapsed
    );
    for (n, h) in [(8, 2), (8, 4), (12, 2), (12, 4)] {
        let ws: Vec<f64> = rows
            .iter()
            .filter(|&&(rn, rh, _)| rn == n && rh == h)
            .map(|&(_, _, w)| w)
            .collect();
        let avg = ws.iter().sum::<f64>() / ws.len() as f64;
        println!(
            "  n={n} h={h}: avg log2-weight {:.1} over {} lists (basis {:.2})",
            avg,
            ws.len(),
            basis(n, h)
        );
    }
}

#[test]
fn criterion_5_ball_assembly_weight_and_degree() {
    let start = Instant::now();
    let n = 20u32;
    let mut lists = vec![odd_max_bit(n)];
    lists.extend((0..10).map(|s| random_list(n, n as usize, 2000 + s)));

    // matched comparison: the same lists assembled for the cube in a single
    // block use the range-3n gate; its degree is fixed by the amplifier
    let cube_gate = amplifier::tuned(3 * n, 2, &rat(1, 200)).unwrap();
    let cube_formal_degree = cube_gate.degree() + 1;

    let mut rows = Vec::new();
    for k in [3u32, 4] {
        let dom = Domain::HammingBall { n, k };
        let expected_points: u128 = dom.size();
        for (li, list) in lists.iter().enumerate() {
            let ptf = assemble_ball_ptf(list, k).expect("ball assembly succeeds");
            let out = verify_sign(ptf.poly.as_poly(), list, &dom, DEFAULT_ENUM_CAP).unwrap();
            assert!(out.passed, "k={k} list {li}: {}", out.to_text());
            assert_eq!(out.points_checked as u128, expected_points);
            assert!(
                ptf.report.formal_degree < cube_formal_degree,
                "k={k} list {li}: ball degree {} not below cube degree {}",
                ptf.report.formal_degree,
                cube_formal_degree
            );
            rows.push((k, ptf.report.log2_weight, ptf.report.formal_degree));
        }
    }
    let basis = |k: u32| (k as f64).sqrt() * (n as f64).log2();
    let c = rows
        .iter()
        .map(|&(k, w, _)| w / basis(k))
        .fold(0.0f64, f64::max);
    assert!(c.is_finite() && c > 0.0);
    let elapsed = start.elapsed();
    println!(
        "criterion 5: PASS - {} ball assemblies sign-exact on all points, degrees below cube's {}, fitted c'={:.1}, {:.2?}",
        rows.len(),
        cube_formal_degree,
        c,
        elapsed
    );
    for k in [3u32, 4] {
        let degs: Vec<u32> = rows
            .iter()
            .filter(|&&(rk, _, _)| rk == k)
            .map(|&(_, _, d)| d)
            .collect();
        println!(
            "  k={k}: formal degrees {:?} (cube comparator {})",
            degs, cube_formal_degree
        );
    }
}

#[test]
fn criterion_6_adversary_chain_on_ball_ptf() {
    let start = Instant::now();
    let list = odd_max_bit(20);
    let k = 8u32;
    let ptf = assemble_ball_ptf(&list, k).expect("ball assembly succeeds");
    let plan = BlockPlan::new(20, 2, k, 8).unwrap();
    let run = run_adversary(&ptf.poly, &plan, &list, DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(run.status, CertStatus::Verified);
    assert!(
        run.chain.length() >= 2,
        "chain length {} below 2",
        run.chain.length()
    );
    // exact doubling thresholds and alternation are re-verified here
    let bound = weight_certificate(&run.chain, &ptf.poly).unwrap();
    assert_eq!(bound, BigInt::one() << run.chain.length());
    assert!(bound <= ptf.poly.weight(), "certificate exceeds weight");
    let elapsed = start.elapsed();
    println!(
        "criterion 6: PASS - chain length {} with |p(y_i)| >= 2^i exact and alternating signs, bound 2^{} <= weight (2^{:.0}), {:.2?}",
        run.chain.length(),
        run.chain.length(),
        ptf.report.log2_weight,
        elapsed
    );
    assert!(elapsed < Duration::from_secs(60), "runtime budget exceeded");
}

#[test]
fn criterion_7_online_learner_with_mistake_bound() {
    let list = odd_max_bit(8);
    let ptf = assemble_cube_ptf(&list, 4).expect("assembly succeeds");
    let d = ptf.report.stored_degree.min(8);
    let w_log2 = ptf.report.log2_weight;

    let dom = Domain::FullCube(8);
    // the classic promotion factor 2 overshoots this target's margin and
    // cycles; the exposed flag selects a gentle factor that converges
    let state = LearnerState::new(8, d)
        .unwrap()
        .with_promotion(rat(6, 5))
        .unwrap();
    let (state, log) = run_online_with(&list, &dom, state, 4096, DEFAULT_ENUM_CAP).unwrap();
    assert!(
        log.converged_pass.is_some(),
        "no mistake-free pass within {} passes ({} mistakes)",
        log.passes_run,
        log.mistakes
    );
    // after convergence the hypothesis is consistent everywhere
    for mask in 0..1u64 << 8 {
        assert_eq!(state.predict(mask), list.eval_mask(mask));
    }
    let c = fitted_constant(log.mistakes, w_log2, d, 8);
    assert!(
        c <= 20.0,
        "fitted constant {c} exceeds 20 (mistakes {}, log2 W {w_log2}, d {d})",
        log.mistakes
    );
    // golden count frozen after the first run; the run is fully
    // deterministic (exact weights, fixed stream order)
    assert_eq!(
        log.mistakes, 461,
        "mistake count drifted from the golden run"
    );
    println!(
        "criterion 7: PASS - converged on pass {} with {} mistakes at degree {}, fitted c={:.3e} <= 20",
        log.converged_pass.unwrap(),
        log.mistakes,
        d,
        c
    );
}

#[test]
fn criterion_8_serialized_certificates_recheck() {
    // chains from two independent constructions
    let cases = [
        (
            odd_max_bit(12),
            4u32,
            4u32,
            assemble_cube_ptf(&odd_max_bit(12), 4).unwrap(),
        ),
        (
            odd_max_bit(16),
            8,
            8,
            assemble_cube_ptf(&odd_max_bit(16), 4).unwrap(),
        ),
    ];
    for (list, k, t, ptf) in &cases {
        let plan = BlockPlan::new(list.n, 2, *k, *t).unwrap();
        let run = run_adversary(&ptf.poly, &plan, list, DEFAULT_ENUM_CAP).unwrap();
        assert!(run.chain.length() >= 1);

        let record = ChainRecord::from(&run.chain);
        let json = serde_json::to_string_pretty(&record).unwrap();

        // independent recheck from the serialized form alone
        let bound = ptf_core::adversary::recheck_chain(&json, &ptf.poly).unwrap();
        assert_eq!(bound, BigInt::one() << run.chain.length());

        // byte-exact round trip
        let reparsed: ChainRecord = serde_json::from_str(&json).unwrap();
        let json2 = serde_json::to_string_pretty(&reparsed).unwrap();
        assert_eq!(json, json2, "serialization is not byte-stable");
    }
    println!("criterion 8: PASS - witness chains recheck from their files byte-exactly");
}
