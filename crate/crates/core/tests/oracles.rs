//! Values worked out by hand or by independent integer arithmetic, checked
//! against the library.

use num_traits::{One, Signed};

use radixstat::constructors::{
    beatty_construct_section3, build_oscillating_schedule, construct_mean_without_frequency,
    floor_weighted_average, no_mean_example, quota_construct, NoMeanExample,
};
use radixstat::stats::classify_limit;
use radixstat::{
    exact_frequencies_rational, expand_fraction, mean_from_frequencies, ratio, running_stats,
    DigitStream, FrequencyProfile, Radix, Rational,
};

/// Integer-only replica of the breakpoint search for levels `p1/q`, `p2/q`
/// and targets `(p1+e)/q`, `(p2−e)/q`.
fn breakpoints_by_integers(p1: i128, p2: i128, e: i128, q: i128, horizon: i128) -> Vec<i128> {
    let mut out = Vec::new();
    let mut low = true;
    let mut twice_sum = 0i128;
    for n in 1..=horizon {
        let p = if low { p1 } else { p2 };
        twice_sum += 2 * (n * p / q);
        let nn = n * (n + 1);
        let reached = if low {
            twice_sum * q < (p1 + e) * nn
        } else {
            twice_sum * q > (p2 - e) * nn
        };
        if reached {
            out.push(n);
            low = !low;
        }
    }
    out
}

#[test]
fn one_seventh_in_base_ten() {
    let e = expand_fraction(1, 7, Radix::DECIMAL).unwrap();
    assert_eq!(e.to_string(), "0.(142857)_10");
    let f = exact_frequencies_rational(&e);
    for d in [1u8, 4, 2, 8, 5, 7] {
        assert_eq!(f.tau()[d as usize], ratio(1, 6));
    }
    assert_eq!(f.tau()[0], ratio(0, 1));
    // (1+4+2+8+5+7)/6
    assert_eq!(mean_from_frequencies(&f), ratio(9, 2));
}

#[test]
fn terminating_expansions_in_two_forms() {
    assert_eq!(
        expand_fraction(1, 2, Radix::DECIMAL).unwrap().to_string(),
        "0.5(0)_10"
    );
    assert_eq!(
        expand_fraction(0, 5, Radix::TERNARY).unwrap().to_string(),
        "0.(0)_3"
    );
    assert_eq!(
        expand_fraction(1, 3, Radix::TERNARY).unwrap().to_string(),
        "0.1(0)_3"
    );
    assert_eq!(
        expand_fraction(1, 4, Radix::TERNARY).unwrap().to_string(),
        "0.(02)_3"
    );
}

#[test]
fn no_mean_closed_forms_match_brute_force() {
    let digits = no_mean_example((1 << 22) - 2);
    let mut ones = vec![0u64; digits.len() + 1];
    for (i, &d) in digits.iter().enumerate() {
        ones[i + 1] = ones[i] + u64::from(d);
    }
    for m in 0..=20u32 {
        let z = NoMeanExample::zero_run_end(m);
        let o = NoMeanExample::one_run_end(m);
        assert_eq!(digits[z as usize - 1], 0);
        assert_eq!(digits[o as usize - 1], 1);
        if (z as usize) < digits.len() {
            assert_eq!(digits[z as usize], 1, "zero-run ends at {z}");
        }
        // 1 + 2 + … + 2^{m−1} ones before the zero-run of length 2^m finishes
        assert_eq!(ones[z as usize], (1 << m) - 1);
        assert_eq!(ones[o as usize], (1 << (m + 1)) - 1);
        assert_eq!(ratio(ones[o as usize] as i64, o as i64), ratio(1, 2));
    }
    // means at zero-run ends fall towards 1/3 from below
    let at = |m: u32| {
        ratio(
            ones[NoMeanExample::zero_run_end(m) as usize] as i64,
            NoMeanExample::zero_run_end(m) as i64,
        )
    };
    assert!((at(20) - ratio(1, 3)).abs() < ratio(1, 1_000_000));
    assert!(at(20) < ratio(1, 3));
}

#[test]
fn floor_average_for_one_third_by_direct_summation() {
    let x = ratio(1, 3);
    let mut samples = Vec::new();
    let mut sum = 0i64;
    for n in 1..=10_000i64 {
        sum += n / 3;
        if n >= 10 && (n % 250 == 0 || n == 10) {
            let direct = ratio(2 * sum, n * (n + 1));
            assert_eq!(floor_weighted_average(&x, 1, n as u64).unwrap(), direct);
            samples.push((n as u64, direct));
        }
    }
    let verdict = classify_limit(&samples, &ratio(1, 1000), &ratio(1, 2)).unwrap();
    match verdict {
        radixstat::ConvergenceVerdict::Converged { value, .. } => {
            assert!((value - ratio(1, 3)).abs() < ratio(1, 1000))
        }
        other => panic!("expected convergence, got {other:?}"),
    }
}

#[test]
fn quota_profile_replayed() {
    let f = FrequencyProfile::new(vec![ratio(1, 2), ratio(1, 4), ratio(1, 4)]).unwrap();
    let n = 100_000usize;
    let digits = quota_construct(&f, n);
    let mut counts = [0i64; 3];
    for (m, &d) in digits.iter().enumerate() {
        counts[d as usize] += 1;
        let m = m as i64 + 1;
        // 4·N_i vs m·(2,1,1)
        for (i, w) in [2i64, 1, 1].into_iter().enumerate() {
            assert!((4 * counts[i] - m * w).abs() <= 8, "digit {i} at depth {m}");
        }
    }
    assert_eq!(counts, [50_000, 25_000, 25_000]);
    let row = &running_stats(
        &radixstat::FiniteDigits::new(Radix::TERNARY, digits).unwrap(),
        &[n as u64],
    )
    .unwrap()
    .rows[0];
    assert_eq!(row.mean(), ratio(3, 4));
    assert_eq!(mean_from_frequencies(&f), ratio(3, 4));
}

#[test]
fn beatty_zero_count_is_floor_of_n_a() {
    for (p, q) in [(1i64, 3i64), (2, 7), (29, 100), (1, 2)] {
        let a = ratio(p, q);
        let b = (Rational::one() - &a) / ratio(2, 1);
        let digits = beatty_construct_section3(&a, &b, 5000).unwrap();
        let mut zeros = 0i64;
        for (i, &d) in digits.iter().enumerate() {
            zeros += i64::from(d == 0);
            let n = i as i64 + 1;
            // zeros among d_1..d_n = [(n+1)a] − [a]
            assert_eq!(zeros, (n + 1) * p / q - p / q, "a = {p}/{q}, n = {n}");
        }
    }
}

#[test]
fn reference_schedule_breakpoints() {
    let sched =
        build_oscillating_schedule(&ratio(1, 5), &ratio(2, 5), &ratio(1, 20), 2000).unwrap();
    let got = sched.breakpoints();
    assert_eq!(got, vec![1, 16, 26, 50, 84, 150, 258, 452, 781, 1357]);
    let independent: Vec<u64> = breakpoints_by_integers(4, 8, 1, 20, 2000)
        .into_iter()
        .map(|n| n as u64)
        .collect();
    assert_eq!(got, independent);
    for pair in got.windows(2).skip(1) {
        assert!(2 * pair[1] >= 3 * pair[0], "{pair:?}");
    }
}

#[test]
fn block_digits_replayed_with_integer_floors() {
    let (theta, x1, x2, eps) = (ratio(1, 2), ratio(11, 20), ratio(7, 10), ratio(1, 40));
    let blocks = 300u64;
    let (spec, stream) = construct_mean_without_frequency(&theta, &x1, &x2, &eps, blocks).unwrap();
    // everything in fortieths: α ∈ {22, 28}, θ = 20, ε = 1
    let sched_bps = breakpoints_by_integers(22, 28, 1, 40, blocks as i128);
    assert_eq!(
        spec.schedule().breakpoints(),
        sched_bps.iter().map(|&n| n as u64).collect::<Vec<_>>()
    );
    let mut expected = Vec::new();
    let mut low = true;
    let mut next = sched_bps.iter().copied().peekable();
    for k in 1..=blocks as i128 {
        let a = if low { 22 } else { 28 }; // α in fortieths
        let zeros = k * a / 40;
        let ones = k * (80 - 2 * a - 20) / 40;
        let twos = k * (a - 40 + 20) / 40;
        expected.extend(std::iter::repeat_n(0u8, zeros as usize));
        expected.extend(std::iter::repeat_n(1u8, ones as usize));
        expected.extend(std::iter::repeat_n(2u8, twos as usize));
        if next.peek() == Some(&k) {
            next.next();
            low = !low;
        }
    }
    let got: Vec<u8> = stream.digits().collect();
    assert_eq!(got, expected);
}

fn mean_converges_zero_share_does_not(theta: Rational, x1: Rational, x2: Rational) {
    let eps = (&x2 - &x1) / ratio(4, 1);
    let (spec, stream) = construct_mean_without_frequency(&theta, &x1, &x2, &eps, 2000).unwrap();
    let ends: Vec<u64> = spec
        .block_ends()
        .into_iter()
        .filter(|&e| e > 0)
        .collect::<Vec<_>>();
    let mut depths = ends.clone();
    depths.dedup();
    let depths: Vec<u64> = depths
        .into_iter()
        .skip_while(|&d| d < 20_000)
        .step_by(5)
        .collect();
    let rows = running_stats(&stream, &depths).unwrap().rows;
    let r: Vec<(u64, Rational)> = rows.iter().map(|row| (row.n(), row.mean())).collect();
    for (n, m) in r.iter().rev().take(50) {
        assert!((m - &theta).abs() < ratio(1, 100), "r at {n} is {m}");
    }
    let verdict = classify_limit(&r, &ratio(1, 50), &ratio(1, 2)).unwrap();
    assert!(verdict.is_converged(), "{verdict:?}");

    // ν_0 at block ends straddling breakpoints
    let bps = spec.schedule().breakpoints();
    let at: Vec<u64> = bps
        .iter()
        .filter(|&&k| k >= 100)
        .map(|&k| ends[k as usize - 1])
        .collect();
    let zero_share = running_stats(&stream, &at).unwrap().rows;
    let v0: Vec<(u64, Rational)> = zero_share
        .iter()
        .map(|row| (row.n(), row.freq(0)))
        .collect();
    let spread = v0.iter().map(|v| &v.1).max().unwrap() - v0.iter().map(|v| &v.1).min().unwrap();
    assert!(spread > (&x2 - &x1) / ratio(4, 1), "v0 spread {spread}");
}

#[test]
fn mean_settles_below_one() {
    mean_converges_zero_share_does_not(ratio(1, 2), ratio(11, 20), ratio(7, 10));
}

#[test]
fn mean_settles_above_one() {
    mean_converges_zero_share_does_not(ratio(3, 2), ratio(1, 20), ratio(1, 5));
}

#[test]
fn zero_share_is_positive_in_every_late_block() {
    let (spec, _) = construct_mean_without_frequency(
        &ratio(3, 2),
        &ratio(1, 20),
        &ratio(1, 5),
        &ratio(1, 40),
        500,
    )
    .unwrap();
    assert!(spec
        .rows()
        .iter()
        .filter(|r| r.k >= 20)
        .all(|r| r.zeros > 0 && r.ones > 0 && r.twos > 0));
    assert!(spec.rows().iter().all(|r| r.alpha.is_positive()));
}
