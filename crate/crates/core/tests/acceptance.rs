//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line to stderr
//! (uncaptured) before asserting, so a plain `cargo test` shows all twelve.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quatseq::autocorr::{acf_direct, acf_via_differences, verify_lemma3, verify_theorem1};
use quatseq::cyclotomy::{
    crt_assemble, cyclotomic_numbers, difference_function, is_prime, lemma1_difference,
    lemma2_counts, lemma2_zero_membership, quadratic_partition, CyclotomicSystem, ResidueSet,
};
use quatseq::lincomp::{
    annihilator_gcd, lc_f4_bm, lc_f4_gcd, lc_z4, root_diagnostics, verify_certificate,
    DiagnosticsOptions,
};
use quatseq::ring_arith::Poly;
use quatseq::seqgen::{build_sequence_in, gray_map, Preset, SequenceSpec, Variant};
use quatseq::survey::{
    all_assignments, check_optimality, check_symmetries, run_survey, SurveyOptions,
};

fn report(id: u32, name: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    let line = format!("[acceptance] {status} {id:>2} {name}: {detail}\n");
    let _ = std::io::stderr().lock().write_all(line.as_bytes());
    assert!(pass, "criterion {id} ({name}) failed: {detail}");
}

fn primes_1_mod_4(limit: u64) -> Vec<u64> {
    (5..=limit).filter(|&p| p % 4 == 1 && is_prime(p)).collect()
}

fn sys(p: u64) -> CyclotomicSystem {
    CyclotomicSystem::with_smallest_root(p).unwrap()
}

fn within(elapsed: Duration, budget: Duration) -> String {
    format!(
        "{:.3} s of {:.3} s",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    )
}

#[test]
fn c01_example_classes_for_13() {
    let s = CyclotomicSystem::new(13, 2).unwrap();
    let spec = SequenceSpec::preset(13, 2, Preset::Eq6);
    let start = Instant::now();
    let q = build_sequence_in(&s, &spec).unwrap();
    let elapsed = start.elapsed();
    let expected: [&[usize]; 4] = [
        &[0, 5, 14, 15, 16, 19, 22],
        &[2, 6, 17, 18, 23, 25],
        &[4, 7, 10, 11, 12, 13, 21],
        &[1, 3, 8, 9, 20, 24],
    ];
    let exact = (0..4).all(|k| q.support(k as u8) == expected[k]);
    let fast = elapsed < Duration::from_millis(1);
    report(
        1,
        "p = 13 eq6 symbol classes",
        exact && fast,
        &format!(
            "exact = {exact}, {}",
            within(elapsed, Duration::from_millis(1))
        ),
    );
}

fn eq6_value_sets(id: u32, name: &str, residue: u64, expected: &[u64]) {
    let start = Instant::now();
    let primes: Vec<u64> = primes_1_mod_4(200)
        .into_iter()
        .filter(|p| p % 8 == residue)
        .collect();
    let bad: Vec<u64> = primes
        .iter()
        .filter(|&&p| !verify_theorem1(&sys(p)).unwrap().value_set_holds())
        .copied()
        .collect();
    let elapsed = start.elapsed();
    let covered = expected.iter().all(|p| primes.contains(p));
    let pass = covered && bad.is_empty() && elapsed < Duration::from_secs(1);
    report(
        id,
        name,
        pass,
        &format!(
            "primes {primes:?}, violations at {bad:?}, {}",
            within(elapsed, Duration::from_secs(1))
        ),
    );
}

#[test]
fn c02_eq6_values_p_5_mod_8() {
    eq6_value_sets(
        2,
        "eq6 values within {-2±2i, ±2i, -2}, p ≡ 5 mod 8, p ≤ 200",
        5,
        &[13, 29, 37, 53, 61, 101, 109, 149, 157, 173, 181, 197],
    );
}

#[test]
fn c03_eq6_values_p_1_mod_8() {
    eq6_value_sets(
        3,
        "eq6 values within {-4, 2, -2, 0}, p ≡ 1 mod 8, p ≤ 200",
        1,
        &[17, 41, 73, 89, 97, 113, 137, 193],
    );
}

#[test]
fn c04_zeroed_endpoints_flat_magnitude() {
    let mut notes = Vec::new();
    let mut pass = true;
    for p in [13, 17, 29, 37] {
        let r = verify_theorem1(&sys(p)).unwrap();
        pass &= r.zeroed_holds();
        notes.push(format!("p = {p}: |R|² ∈ {:?}", r.zeroed_norms_sq));
    }
    report(
        4,
        "zeroed endpoints give |R(w)|² = 4 for all w ≠ 0",
        pass,
        &notes.join("; "),
    );
}

#[test]
fn c05_eq7_peak_matches_closed_form() {
    let mut notes = Vec::new();
    let mut pass = true;
    for p in [13, 17, 29, 37, 41] {
        let s = sys(p);
        let qp = quadratic_partition(&s).unwrap();
        let r = verify_lemma3(&s, &qp).unwrap();
        pass &= r.holds();
        notes.push(format!(
            "{p}: {}/{}",
            r.attained_max_norm_sq, r.predicted_max_norm_sq
        ));
    }
    report(
        5,
        "eq7 peak |R|² equals the closed-form maximum",
        pass,
        &notes.join(", "),
    );
}

#[test]
fn c06_f4_complexity_eq6() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let primes = primes_1_mod_4(100);
    for &p in &primes {
        let s = sys(p);
        let q = build_sequence_in(&s, &SequenceSpec::preset(p, s.g(), Preset::Eq6)).unwrap();
        let u = gray_map(&q);
        let (a, b) = (lc_f4_gcd(&u), lc_f4_bm(&u));
        let n = 2 * p as usize;
        let ok = if p % 8 == 1 {
            a.linear_complexity == n && a.poly == Poly::x_pow_minus_one(n)
        } else {
            a.linear_complexity == (3 * p as usize + 1) / 2
                && annihilator_gcd(&u).degree() == Some((p as usize - 1) / 2)
        };
        if !(ok && a.linear_complexity == b.linear_complexity && a.poly == b.poly) {
            bad.push(p);
        }
    }
    let elapsed = start.elapsed();
    report(
        6,
        "GF(4) complexity of the eq6 Gray image, p ≤ 100",
        bad.is_empty() && elapsed < Duration::from_secs(5),
        &format!(
            "{} primes, failures {bad:?}, {}",
            primes.len(),
            within(elapsed, Duration::from_secs(5))
        ),
    );
}

#[test]
fn c07_f4_complexity_eq7() {
    let primes = primes_1_mod_4(100);
    let bad: Vec<u64> = primes
        .iter()
        .copied()
        .filter(|&p| {
            let s = sys(p);
            let q = build_sequence_in(&s, &SequenceSpec::preset(p, s.g(), Preset::Eq7)).unwrap();
            let r = lc_f4_gcd(&gray_map(&q));
            r.linear_complexity != 2 * p as usize || r.poly != Poly::x_pow_minus_one(2 * p as usize)
        })
        .collect();
    report(
        7,
        "GF(4) complexity of the eq7 Gray image is 2p, p ≤ 100",
        bad.is_empty(),
        &format!("{} primes, failures {bad:?}", primes.len()),
    );
}

#[test]
fn c08_z4_complexity_both_presets() {
    let start = Instant::now();
    let primes = primes_1_mod_4(61);
    let mut bad = Vec::new();
    for &p in &primes {
        let s = sys(p);
        for preset in [Preset::Eq6, Preset::Eq7] {
            let q = build_sequence_in(&s, &SequenceSpec::preset(p, s.g(), preset)).unwrap();
            let r = lc_z4(&q);
            let n = 2 * p as usize;
            let cert = r
                .certificate
                .as_ref()
                .is_some_and(|y| verify_certificate(&q, n - 1, y));
            if r.result.linear_complexity != n || !cert {
                bad.push((p, preset));
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        8,
        "Z4 complexity is 2p for eq6 and eq7, p ≤ 61, certificates verified",
        bad.is_empty() && elapsed < Duration::from_secs(60),
        &format!(
            "{} primes, failures {bad:?}, {}",
            primes.len(),
            within(elapsed, Duration::from_secs(60))
        ),
    );
}

#[test]
fn c09_acf_two_methods_agree() {
    let mut mismatches = 0;
    for p in [13, 17] {
        let s = sys(p);
        for (jvec, lvec) in all_assignments() {
            let spec = SequenceSpec {
                p,
                g: s.g(),
                jvec,
                lvec,
                variant: Variant::Standard,
            };
            let direct = acf_direct(&build_sequence_in(&s, &spec).unwrap());
            if direct != acf_via_differences(&s, &spec).unwrap() {
                mismatches += 1;
            }
        }
    }
    report(
        9,
        "direct and difference-function ACF agree on 2 × 576 layouts",
        mismatches == 0,
        &format!("{mismatches} mismatches"),
    );
}

fn random_subset(p: usize, rng: &mut ChaCha8Rng) -> ResidueSet {
    ResidueSet::from_iter(p, (0..p).filter(|_| rng.gen_bool(0.5)))
}

#[test]
fn c10_difference_and_cyclotomic_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e44a1);
    let mut split_bad = 0;
    for p in [13usize, 29] {
        for _ in 0..100 {
            let [f0, f1, e0, e1] = std::array::from_fn(|_| random_subset(p, &mut rng));
            let (f, e) = (crt_assemble(&f0, &f1), crt_assemble(&e0, &e1));
            if (0..2 * p)
                .any(|w| lemma1_difference(&f0, &f1, &e0, &e1, w) != difference_function(&f, &e, w))
            {
                split_bad += 1;
            }
        }
    }
    let primes = primes_1_mod_4(200);
    let mut count_bad = 0;
    let mut identity_bad = Vec::new();
    for &p in &primes {
        let s = sys(p);
        let nums = cyclotomic_numbers(&s);
        if nums.column_difference() != -1 {
            identity_bad.push(p);
        }
        for u in 1..p {
            for j in 0..4 {
                for l in 0..4 {
                    if !lemma2_counts(&s, &nums, j, l, u).unwrap().holds() {
                        count_bad += 1;
                    }
                }
            }
        }
    }
    let mut zero_bad = 0;
    for p in [13u64, 17] {
        let s = sys(p);
        let zero = ResidueSet::from_iter(p as usize, [0]);
        for u in 1..p {
            for j in 0..4 {
                let direct = zero.intersection_len(&s.class(j).translate(u as usize)) == 1;
                if lemma2_zero_membership(&s, j, u).unwrap() != direct {
                    zero_bad += 1;
                }
            }
        }
    }
    let pass = split_bad == 0 && count_bad == 0 && zero_bad == 0 && identity_bad.is_empty();
    report(
        10,
        "CRT split of difference functions, class-translate counts, zero rule, column identity",
        pass,
        &format!(
            "split failures {split_bad}/200, count failures {count_bad} over {} primes, zero-rule failures {zero_bad}, identity failures {identity_bad:?}",
            primes.len()
        ),
    );
}

#[test]
fn c11_survey_minimum_in_eq6_class() {
    let start = Instant::now();
    let mut pass = true;
    let mut notes = Vec::new();
    for (p, expected_min) in [(13u64, 8i64), (17, 16)] {
        let records = run_survey(&sys(p), &SurveyOptions::default()).unwrap();
        let opt = check_optimality(&records);
        let sym = check_symmetries(&records);
        let ok = opt.holds && opt.min_max_norm_sq == expected_min && sym.holds;
        pass &= ok;
        notes.push(format!(
            "p = {p}: minimum {} (expected {expected_min}), eq6 class {:?}, symmetry {}, e.g. {:?}",
            opt.min_max_norm_sq,
            opt.eq6_class_max_norm_sq,
            if sym.holds { "ok" } else { "broken" },
            opt.counterexamples.first(),
        ));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(30);
    notes.push(within(elapsed, Duration::from_secs(30)));
    report(
        11,
        "survey minimum peak |R|² attained by the eq6 class",
        pass,
        &notes.join("; "),
    );
}

#[test]
fn c12_root_diagnostics_13() {
    let s = CyclotomicSystem::new(13, 2).unwrap();
    let d = root_diagnostics(
        &s,
        &SequenceSpec::preset(13, 2, Preset::Eq6),
        &DiagnosticsOptions::default(),
    )
    .unwrap();
    let names = [
        "class-sums",
        "u4-pair-sum",
        "u-from-u2",
        "root-set",
        "simple-roots",
        "root-count",
        "mod2-image",
    ];
    let missing_or_failing: Vec<&str> = names
        .iter()
        .copied()
        .filter(|n| d.check(n) != Some(true))
        .collect();
    let pass = d.extension_degree == 6
        && d.binary_degree == 12
        && d.all_hold()
        && missing_or_failing.is_empty();
    report(
        12,
        "root-value diagnostics in GF(4^6) and GF(2^12), p = 13",
        pass,
        &format!("{} checks, failing {missing_or_failing:?}", d.checks.len()),
    );
}
